//! Rational polyhedral cones given by generators, and their duals.
//!
//! The dual of cone(G) is {y : g.y >= 0 for all g in G}. Its generators are
//! the extreme rays of the pointed part plus a signed basis of the lineality
//! space ker(G). A ray is found as the one-dimensional kernel of a choice of
//! active generators together with the lineality basis, then kept if it is
//! feasible. This is only done up to dimension four.

use num::{BigInt, Zero};

use super::matrix::{cone_coordinates, kernel_basis, rank_of_vectors, RatMatrix};
use super::{dot_int, primitive_i64, to_rat_vec, ExactError, RatVector, Rational};

pub const MAX_DUAL_DIMENSION: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearFunctional {
    pub coefficients: RatVector,
}

impl LinearFunctional {
    pub fn new(coefficients: RatVector) -> Self {
        LinearFunctional { coefficients }
    }

    pub fn from_i64(c: &[i64]) -> Self {
        LinearFunctional { coefficients: to_rat_vec(c) }
    }

    pub fn dim(&self) -> usize {
        self.coefficients.len()
    }

    pub fn eval(&self, x: &[i64]) -> Rational {
        assert_eq!(x.len(), self.dim(), "functional applied in the wrong dimension");
        dot_int(&self.coefficients, x)
    }
}

fn check_dims(gens: &[Vec<i64>], dim: usize) -> Result<(), ExactError> {
    if dim > MAX_DUAL_DIMENSION {
        return Err(ExactError::UnsupportedDimension(dim));
    }
    for g in gens {
        if g.len() != dim {
            return Err(ExactError::DimensionMismatch { expected: dim, found: g.len() });
        }
    }
    Ok(())
}

fn int_dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Primitive integer generators of the dual cone of cone(gens) in Q^dim.
/// Extreme rays come first (sorted), then the lineality basis with both signs.
pub fn dual_generators(gens: &[Vec<i64>], dim: usize) -> Result<Vec<Vec<i64>>, ExactError> {
    check_dims(gens, dim)?;
    let rows: Vec<RatVector> = gens.iter().filter(|g| g.iter().any(|&x| x != 0)).map(|g| to_rat_vec(g)).collect();
    let lineality: Vec<RatVector> = if rows.is_empty() {
        (0..dim)
            .map(|i| {
                let mut e = vec![Rational::zero(); dim];
                e[i] = Rational::from_integer(BigInt::from(1));
                e
            })
            .collect()
    } else {
        kernel_basis(&RatMatrix::from_rows(rows.clone(), dim)?)
    };
    let mut rays: Vec<Vec<i64>> = Vec::new();
    if lineality.len() < dim {
        let active = dim - 1 - lineality.len();
        for subset in subsets(rows.len(), active) {
            let mut m: Vec<RatVector> = subset.iter().map(|&i| rows[i].clone()).collect();
            m.extend(lineality.iter().cloned());
            if rank_of_vectors(&m) != dim - 1 {
                continue;
            }
            let k = kernel_basis(&RatMatrix::from_rows(m, dim)?);
            debug_assert_eq!(k.len(), 1);
            let y = primitive_i64(&k[0]);
            for cand in [y.clone(), y.iter().map(|x| -x).collect()] {
                if gens.iter().all(|g| int_dot(g, &cand) >= 0) && !rays.contains(&cand) {
                    rays.push(cand);
                }
            }
        }
    }
    rays.sort();
    let mut out = rays;
    for l in &lineality {
        let y = primitive_i64(l);
        out.push(y.clone());
        out.push(y.iter().map(|x| -x).collect());
    }
    Ok(out)
}

/// All k-element subsets of 0..n in lexicographic order.
pub(crate) fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// The cone generated by finitely many integer vectors, with its dual cached.
#[derive(Debug, Clone)]
pub struct RationalCone {
    dim: usize,
    generators: Vec<Vec<i64>>,
    dual: Vec<Vec<i64>>,
}

impl RationalCone {
    pub fn new(generators: &[Vec<i64>], dim: usize) -> Result<Self, ExactError> {
        let dual = dual_generators(generators, dim)?;
        Ok(RationalCone { dim, generators: generators.to_vec(), dual })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Vec<i64>] {
        &self.generators
    }

    pub fn dual(&self) -> &[Vec<i64>] {
        &self.dual
    }

    /// Membership by duality: x is in the cone iff every dual generator is
    /// nonnegative on it.
    pub fn contains(&self, x: &[i64]) -> bool {
        self.dual.iter().all(|h| int_dot(h, x) >= 0)
    }

    /// No line through the origin lies in the cone, equivalently the dual is
    /// full-dimensional.
    pub fn is_pointed(&self) -> bool {
        let rows: Vec<RatVector> = self.dual.iter().map(|h| to_rat_vec(h)).collect();
        rank_of_vectors(&rows) == self.dim
    }

    /// Sum of all dual generators: zero exactly on the lineality space of the
    /// cone and positive on every other point of the cone.
    pub fn interior_dual_sum(&self) -> Vec<i64> {
        let mut s = vec![0i64; self.dim];
        for h in &self.dual {
            for (a, b) in s.iter_mut().zip(h) {
                *a += b;
            }
        }
        s
    }

    /// True when x lies in the lineality space of the cone.
    pub fn in_lineality(&self, x: &[i64]) -> bool {
        self.dual.iter().all(|h| int_dot(h, x) == 0)
    }
}

/// A primitive direction u with u and -u both in the cone, if the cone is not pointed.
pub fn lineality_direction(cone: &RationalCone) -> Option<Vec<i64>> {
    if cone.is_pointed() {
        return None;
    }
    let rows: Vec<RatVector> = cone.dual().iter().map(|h| to_rat_vec(h)).collect();
    let k = if rows.is_empty() {
        vec![to_rat_vec(&{
            let mut e = vec![0; cone.dim()];
            e[0] = 1;
            e
        })]
    } else {
        kernel_basis(&RatMatrix::from_rows(rows, cone.dim()).ok()?)
    };
    k.first().map(|v| primitive_i64(v))
}

/// A functional nonnegative on cone(cone_gens) and negative on x. In strict
/// mode it is moreover positive on every nonzero generator, which needs a
/// pointed cone.
pub fn separating_functional(cone_gens: &[Vec<i64>], x: &[i64], strict: bool) -> Result<LinearFunctional, ExactError> {
    let dim = x.len();
    let cone = RationalCone::new(cone_gens, dim)?;
    let Some(base) = cone.dual().iter().find(|h| int_dot(h, x) < 0).cloned() else {
        return Err(ExactError::NoSeparator);
    };
    if !strict {
        return Ok(LinearFunctional::from_i64(&base));
    }
    if let Some(u) = lineality_direction(&cone) {
        return Err(ExactError::LineInCone { witness: u });
    }
    // base + eps * interior stays negative on x for small enough eps
    let interior = cone.interior_dual_sum();
    let bx = int_dot(&base, x);
    let ix = int_dot(&interior, x);
    let eps = if ix <= 0 {
        Rational::from_integer(BigInt::from(1))
    } else {
        Rational::new(BigInt::from(-bx), BigInt::from(2 * ix))
    };
    let coeffs: RatVector = base
        .iter()
        .zip(&interior)
        .map(|(&b, &i)| Rational::from_integer(BigInt::from(b)) + &eps * BigInt::from(i))
        .collect();
    Ok(LinearFunctional::from_i64(&primitive_i64(&coeffs)))
}

/// Nonnegative rational coefficients expressing v over gens, if v lies in
/// cone(gens). Searches linearly independent subsets by increasing size
/// (Caratheodory), so the returned combination uses at most dim generators.
pub fn conic_combination(gens: &[Vec<i64>], v: &[i64]) -> Option<RatVector> {
    let dim = v.len();
    let target = to_rat_vec(v);
    for size in 0..=dim.min(gens.len()) {
        for subset in subsets(gens.len(), size) {
            let family: Vec<RatVector> = subset.iter().map(|&i| to_rat_vec(&gens[i])).collect();
            if rank_of_vectors(&family) < size {
                continue;
            }
            if let Ok(Some(c)) = cone_coordinates(&family, &target) {
                let mut full = vec![Rational::zero(); gens.len()];
                for (k, &i) in subset.iter().enumerate() {
                    full[i] = c[k].clone();
                }
                return Some(full);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    fn values(l: &LinearFunctional, pts: &[&[i64]]) -> Vec<Rational> {
        pts.iter().map(|p| l.eval(p)).collect()
    }

    #[test]
    fn separating_examples() {
        let l = separating_functional(&[vec![1, 0], vec![1, 1]], &[0, 1], false).unwrap();
        assert_eq!(l, LinearFunctional::from_i64(&[1, -1]));
        assert_eq!(values(&l, &[&[1, 0], &[1, 1], &[0, 1]]), vec![int(1), int(0), int(-1)]);

        let l = separating_functional(&[vec![1, 0], vec![3, 2]], &[2, 2], false).unwrap();
        assert_eq!(l, LinearFunctional::from_i64(&[2, -3]));
        assert_eq!(values(&l, &[&[1, 0], &[3, 2], &[2, 2]]), vec![int(2), int(0), int(-2)]);

        assert_eq!(
            separating_functional(&[vec![1, 0], vec![1, 1]], &[2, 1], false),
            Err(ExactError::NoSeparator)
        );
    }

    #[test]
    fn strict_mode() {
        let gens = [vec![1, 0], vec![3, 2]];
        let l = separating_functional(&gens, &[2, 2], true).unwrap();
        assert!(l.eval(&[2, 2]) < int(0));
        for g in &gens {
            assert!(l.eval(g) > int(0));
        }
        let err = separating_functional(&[vec![1, 0], vec![-1, 0]], &[0, -1], true).unwrap_err();
        assert!(matches!(err, ExactError::LineInCone { .. }));
    }

    #[test]
    fn dual_of_lower_dimensional_cone() {
        let d = dual_generators(&[vec![1, 0]], 2).unwrap();
        assert_eq!(d, vec![vec![1, 0], vec![0, 1], vec![0, -1]]);
        let c = RationalCone::new(&[vec![1, 0]], 2).unwrap();
        assert!(c.contains(&[5, 0]));
        assert!(!c.contains(&[5, 1]));
        assert!(c.is_pointed());
    }

    #[test]
    fn dual_of_empty_and_line() {
        let c = RationalCone::new(&[], 2).unwrap();
        assert!(c.contains(&[0, 0]));
        assert!(!c.contains(&[1, 0]));
        let c = RationalCone::new(&[vec![1, 0], vec![-1, 0], vec![0, 1]], 2).unwrap();
        assert!(!c.is_pointed());
        assert_eq!(lineality_direction(&c).map(|u| u.iter().map(|x| x.abs()).collect::<Vec<_>>()), Some(vec![1, 0]));
        assert!(c.contains(&[-7, 3]));
        assert!(!c.contains(&[0, -1]));
    }

    #[test]
    fn dimension_cap() {
        assert_eq!(dual_generators(&[], 5), Err(ExactError::UnsupportedDimension(5)));
    }

    #[test]
    fn three_dimensional_dual() {
        let gens = vec![vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 2]];
        let c = RationalCone::new(&gens, 3).unwrap();
        assert!(c.contains(&[1, 1, 1]));
        assert!(!c.contains(&[0, 0, 1]));
        for h in c.dual() {
            assert!(gens.iter().all(|g| int_dot(g, h) >= 0));
        }
    }

    #[test]
    fn caratheodory_combination() {
        let gens = vec![vec![1, 0], vec![-1, 0], vec![0, 1]];
        let c = conic_combination(&gens, &[-3, 2]).unwrap();
        assert_eq!(c, vec![int(0), int(3), int(2)]);
        assert!(conic_combination(&gens, &[0, -1]).is_none());
    }
}
