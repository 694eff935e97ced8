//! Finitely generated subsemigroups of Z^n.
//!
//! Membership is exact. Writing F for the generators lying in the lineality
//! space of the cone, the subsemigroup generated by F is a group, and every
//! representation of a point uses the remaining generators a bounded number
//! of times (bounded by a functional positive off the lineality space). So
//! membership is a finite search plus a lattice membership test.
//!
//! Normality and fullness are universally quantified and are checked on a
//! box of radius `search_bound`; their verdicts carry `bounded = true`.

use std::collections::{HashMap, HashSet};

use num::{BigInt, Integer, One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::{
    conic_combination, determinant, smith_normal_form, unimodular_inverse, ExactError, IntMatrix, Lattice,
    RationalCone,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemigroupError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("generator {generator:?} of the subsemigroup is not in the ambient semigroup")]
    NotSubsemigroup { generator: Vec<i64> },
    #[error("semigroup is not normal, witness {witness:?}")]
    NotNormal { witness: Vec<i64> },
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// Outcome of a decision procedure. A false verdict on a universally
/// quantified property carries a witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub value: bool,
    pub witness: Option<Vec<i64>>,
    pub bounded: bool,
}

impl Verdict {
    pub fn exact(value: bool) -> Self {
        Verdict { value, witness: None, bounded: false }
    }

    pub fn holds_on_box() -> Self {
        Verdict { value: true, witness: None, bounded: true }
    }

    pub fn refuted(witness: Vec<i64>, bounded: bool) -> Self {
        Verdict { value: false, witness: Some(witness), bounded }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SemigroupDocument", into = "SemigroupDocument")]
pub struct AffineSemigroup {
    ambient_dim: usize,
    generators: Vec<Vec<i64>>,
    search_bound: i64,
}

/// Serialized form; validated through [`AffineSemigroup::new`] on the way in.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SemigroupDocument {
    pub ambient_dim: usize,
    pub generators: Vec<Vec<i64>>,
    pub search_bound: Option<i64>,
}

impl TryFrom<SemigroupDocument> for AffineSemigroup {
    type Error = SemigroupError;

    fn try_from(doc: SemigroupDocument) -> Result<Self, Self::Error> {
        let s = AffineSemigroup::new(doc.ambient_dim, doc.generators)?;
        Ok(match doc.search_bound {
            Some(b) => s.with_search_bound(b),
            None => s,
        })
    }
}

impl From<AffineSemigroup> for SemigroupDocument {
    fn from(s: AffineSemigroup) -> Self {
        SemigroupDocument { ambient_dim: s.ambient_dim, generators: s.generators, search_bound: Some(s.search_bound) }
    }
}

fn max_abs(gens: &[Vec<i64>]) -> i64 {
    gens.iter().flatten().map(|x| x.abs()).max().unwrap_or(0)
}

impl AffineSemigroup {
    /// Zero generators are dropped and duplicates removed (first occurrence
    /// wins). The default search bound is three times the largest generator
    /// coordinate.
    pub fn new(ambient_dim: usize, generators: Vec<Vec<i64>>) -> Result<Self, SemigroupError> {
        let mut gens: Vec<Vec<i64>> = Vec::new();
        for g in generators {
            if g.len() != ambient_dim {
                return Err(SemigroupError::DimensionMismatch { expected: ambient_dim, found: g.len() });
            }
            if g.iter().any(|&x| x != 0) && !gens.contains(&g) {
                gens.push(g);
            }
        }
        let search_bound = (3 * max_abs(&gens)).max(1);
        Ok(AffineSemigroup { ambient_dim, generators: gens, search_bound })
    }

    /// Overrides the box radius, never going below the largest generator coordinate.
    pub fn with_search_bound(mut self, bound: i64) -> Self {
        self.search_bound = bound.max(max_abs(&self.generators)).max(1);
        self
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn generators(&self) -> &[Vec<i64>] {
        &self.generators
    }

    pub fn search_bound(&self) -> i64 {
        self.search_bound
    }

    pub fn cone(&self) -> Result<RationalCone, SemigroupError> {
        Ok(RationalCone::new(&self.generators, self.ambient_dim)?)
    }

    pub fn oracle(&self) -> Result<MembershipOracle, SemigroupError> {
        MembershipOracle::new(self)
    }

    fn check_dim(&self, v: &[i64]) -> Result<(), SemigroupError> {
        if v.len() != self.ambient_dim {
            return Err(SemigroupError::DimensionMismatch { expected: self.ambient_dim, found: v.len() });
        }
        Ok(())
    }
}

/// Precomputed data for repeated exact membership queries.
#[derive(Debug, Clone)]
pub struct MembershipOracle {
    cone: RationalCone,
    units: Lattice,
    has_units: bool,
    weight: Vec<i64>,
    positive: Vec<(Vec<i64>, i64)>,
}

fn idot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

impl MembershipOracle {
    fn new(s: &AffineSemigroup) -> Result<Self, SemigroupError> {
        let cone = s.cone()?;
        let weight = cone.interior_dual_sum();
        let (face, rest): (Vec<Vec<i64>>, Vec<Vec<i64>>) =
            s.generators.iter().cloned().partition(|g| cone.in_lineality(g));
        let mut positive: Vec<(Vec<i64>, i64)> = rest.into_iter().map(|g| {
            let w = idot(&weight, &g);
            (g, w)
        }).collect();
        // heavy generators first keeps the search tree shallow
        positive.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
        Ok(MembershipOracle {
            units: Lattice::new(&face, s.ambient_dim),
            has_units: !face.is_empty(),
            cone,
            weight,
            positive,
        })
    }

    pub fn cone(&self) -> &RationalCone {
        &self.cone
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        if !self.cone.contains(v) {
            return false;
        }
        let budget = idot(&self.weight, v);
        let mut failed: HashSet<(usize, Vec<i64>)> = HashSet::new();
        self.search(0, v.to_vec(), budget, &mut failed)
    }

    fn search(&self, i: usize, rest: Vec<i64>, budget: i64, failed: &mut HashSet<(usize, Vec<i64>)>) -> bool {
        if i == self.positive.len() {
            return if self.has_units { self.units.contains(&rest) } else { rest.iter().all(|&x| x == 0) };
        }
        if !self.cone.contains(&rest) || failed.contains(&(i, rest.clone())) {
            return false;
        }
        let (g, w) = &self.positive[i];
        let mut r = rest.clone();
        let mut b = budget;
        loop {
            if self.search(i + 1, r.clone(), b, failed) {
                return true;
            }
            b -= w;
            if b < 0 {
                break;
            }
            r = sub(&r, g);
        }
        failed.insert((i, rest));
        false
    }
}

pub fn membership(s: &AffineSemigroup, v: &[i64]) -> Result<Verdict, SemigroupError> {
    s.check_dim(v)?;
    Ok(Verdict::exact(s.oracle()?.contains(v)))
}

/// Every point of the box of the given radius, ordered by l1-norm and then
/// lexicographically, so the first hit in a scan is a smallest one.
pub fn box_points(dim: usize, radius: i64) -> Vec<Vec<i64>> {
    let mut pts: Vec<Vec<i64>> = vec![vec![]];
    for _ in 0..dim {
        let mut next = Vec::with_capacity(pts.len() * (2 * radius as usize + 1));
        for p in &pts {
            for x in -radius..=radius {
                let mut q = p.clone();
                q.push(x);
                next.push(q);
            }
        }
        pts = next;
    }
    pts.sort_by_key(|p| (p.iter().map(|x| x.abs()).sum::<i64>(), p.clone()));
    pts
}

pub fn is_positive(s: &AffineSemigroup) -> Result<Verdict, SemigroupError> {
    let cone = s.cone()?;
    if cone.is_pointed() {
        return Ok(Verdict::exact(true));
    }
    // some generator g lies in the lineality space; -g is a rational
    // nonnegative combination of those generators, so m*g and -m*g are both
    // in the semigroup once m clears denominators
    let face: Vec<Vec<i64>> = s.generators.iter().filter(|g| cone.in_lineality(g)).cloned().collect();
    let g = face.first().expect("a non-pointed cone has a generator in its lineality space");
    let neg: Vec<i64> = g.iter().map(|x| -x).collect();
    let coeffs = conic_combination(&face, &neg).expect("the lineality face is a linear space");
    let m = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom())).to_i64().expect("small multiplier");
    Ok(Verdict::refuted(g.iter().map(|x| m * x).collect(), false))
}

pub fn is_normal(s: &AffineSemigroup) -> Result<Verdict, SemigroupError> {
    let oracle = s.oracle()?;
    let lattice = Lattice::new(&s.generators, s.ambient_dim);
    for p in box_points(s.ambient_dim, s.search_bound) {
        if oracle.cone().contains(&p) && lattice.contains(&p) && !oracle.contains(&p) {
            return Ok(Verdict::refuted(p, true));
        }
    }
    Ok(Verdict::holds_on_box())
}

pub fn is_full(sub_sg: &AffineSemigroup, sup: &AffineSemigroup) -> Result<Verdict, SemigroupError> {
    if sub_sg.ambient_dim != sup.ambient_dim {
        return Err(SemigroupError::DimensionMismatch { expected: sup.ambient_dim, found: sub_sg.ambient_dim });
    }
    let sup_oracle = sup.oracle()?;
    for g in &sub_sg.generators {
        if !sup_oracle.contains(g) {
            return Err(SemigroupError::NotSubsemigroup { generator: g.clone() });
        }
    }
    let sub_oracle = sub_sg.oracle()?;
    let members: Vec<Vec<i64>> = box_points(sub_sg.ambient_dim, sub_sg.search_bound)
        .into_iter()
        .filter(|p| sub_oracle.contains(p))
        .collect();
    let mut diffs: HashSet<Vec<i64>> = HashSet::new();
    for h in &members {
        for h2 in &members {
            diffs.insert(sub(h, h2));
        }
    }
    let mut diffs: Vec<Vec<i64>> = diffs.into_iter().collect();
    diffs.sort_by_key(|p| (p.iter().map(|x| x.abs()).sum::<i64>(), p.clone()));
    for d in diffs {
        if sup_oracle.contains(&d) && !sub_oracle.contains(&d) {
            return Ok(Verdict::refuted(d, true));
        }
    }
    Ok(Verdict::holds_on_box())
}

pub fn group_rank(s: &AffineSemigroup) -> usize {
    Lattice::new(&s.generators, s.ambient_dim).rank()
}

/// A normal semigroup written as Z^k plus a positive normal semigroup.
///
/// `embedding` and `denominator` give coordinates on the group of the
/// semigroup: `embedding * v / denominator`. The first `unit_rank`
/// coordinates belong to the unit group, the rest to `positive_part`.
/// `unit_basis` and `positive_basis` invert the coordinate map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositiveSplit {
    pub unit_rank: usize,
    pub embedding: IntMatrix,
    pub denominator: BigInt,
    pub unit_basis: Vec<Vec<i64>>,
    pub positive_basis: Vec<Vec<i64>>,
    pub positive_part: AffineSemigroup,
}

impl PositiveSplit {
    /// Unit and positive coordinates of v, or `None` if v is outside the
    /// group generated by the semigroup.
    pub fn coordinates(&self, v: &[i64]) -> Option<(Vec<i64>, Vec<i64>)> {
        let w = self.embedding.mul_i64(v);
        let mut out = Vec::with_capacity(w.len());
        for x in w {
            if !x.is_multiple_of(&self.denominator) {
                return None;
            }
            out.push((x / &self.denominator).to_i64()?);
        }
        let back = self.compose(&out[..self.unit_rank], &out[self.unit_rank..]);
        if back != v {
            return None;
        }
        let pos = out.split_off(self.unit_rank);
        Some((out, pos))
    }

    pub fn compose(&self, unit: &[i64], positive: &[i64]) -> Vec<i64> {
        let n = self.embedding.cols();
        let mut v = vec![0i64; n];
        for (c, b) in unit.iter().zip(&self.unit_basis).chain(positive.iter().zip(&self.positive_basis)) {
            for (vi, bi) in v.iter_mut().zip(b) {
                *vi += c * bi;
            }
        }
        v
    }

    /// Splits v into its unit part and positive part, both in Z^n.
    pub fn factor(&self, v: &[i64]) -> Option<(Vec<i64>, Vec<i64>)> {
        let (u, p) = self.coordinates(v)?;
        let zero_u = vec![0; u.len()];
        let zero_p = vec![0; p.len()];
        Some((self.compose(&u, &zero_p), self.compose(&zero_u, &p)))
    }
}

fn big_to_i64(x: &BigInt) -> i64 {
    x.to_i64().expect("coordinate exceeds i64")
}

pub fn split_positive(s: &AffineSemigroup) -> Result<PositiveSplit, SemigroupError> {
    let normal = is_normal(s)?;
    if !normal.value {
        return Err(SemigroupError::NotNormal { witness: normal.witness.unwrap_or_default() });
    }
    let n = s.ambient_dim;
    let cone = s.cone()?;
    let oracle = s.oracle()?;
    let face: Vec<Vec<i64>> = s.generators.iter().filter(|g| cone.in_lineality(g)).cloned().collect();
    for g in &face {
        let neg: Vec<i64> = g.iter().map(|x| -x).collect();
        debug_assert!(oracle.contains(&neg), "generator in the lineality space without an inverse");
    }

    // coordinates on the group L generated by s: c_i = (U1 v)_i / d_i
    let snf1 = smith_normal_form(&IntMatrix::from_i64_columns(&s.generators, n));
    let d1 = snf1.invariant_factors();
    let r = d1.len();
    let lcm1 = d1.iter().fold(BigInt::one(), |acc, d| acc.lcm(d));

    let lattice_coords = |v: &[i64]| -> Vec<BigInt> {
        let w = snf1.u.mul_i64(v);
        (0..r).map(|i| &w[i] / &d1[i]).collect()
    };

    // the unit group inside L, split off by a second Smith form
    let face_coords: Vec<Vec<i64>> =
        face.iter().map(|g| lattice_coords(g).iter().map(big_to_i64).collect()).collect();
    let snf2 = smith_normal_form(&IntMatrix::from_i64_columns(&face_coords, r));
    let d2 = snf2.invariant_factors();
    let k = d2.len();
    let u2_inv = unimodular_inverse(&snf2.u).expect("Smith transforms are unimodular");
    let u1_inv = unimodular_inverse(&snf1.u).expect("Smith transforms are unimodular");

    // basis of L: b_i = d_i * column i of U1^-1; coordinates w = U2 c
    let lattice_basis: Vec<Vec<BigInt>> =
        (0..r).map(|i| (0..n).map(|row| u1_inv.get(row, i) * &d1[i]).collect()).collect();
    let column = |j: usize| -> Vec<i64> {
        (0..n)
            .map(|row| big_to_i64(&(0..r).fold(BigInt::zero(), |acc, i| acc + &lattice_basis[i][row] * u2_inv.get(i, j))))
            .collect()
    };
    if let Some(i) = d2.iter().position(|d| !d.is_one()) {
        // the unit group is not saturated: column i is a non-unit with a unit multiple
        return Err(SemigroupError::NotNormal { witness: column(i) });
    }
    let unit_basis: Vec<Vec<i64>> = (0..k).map(column).collect();
    let positive_basis: Vec<Vec<i64>> = (k..r).map(column).collect();

    // embedding = U2 * diag(lcm/d_i) * (first r rows of U1), over denominator lcm
    let mut scaled = IntMatrix::zeros(r, n);
    for i in 0..r {
        let f = &lcm1 / &d1[i];
        for j in 0..n {
            scaled.set(i, j, snf1.u.get(i, j) * &f);
        }
    }
    let embedding = snf2.u.mul(&scaled);

    let mut split = PositiveSplit {
        unit_rank: k,
        embedding,
        denominator: lcm1,
        unit_basis,
        positive_basis,
        positive_part: AffineSemigroup::new(r - k, vec![])?,
    };
    let mut pos_gens = Vec::new();
    for g in &s.generators {
        let (_, p) = split.coordinates(g).expect("generators lie in their own group");
        pos_gens.push(p);
    }
    split.positive_part = AffineSemigroup::new(r - k, pos_gens)?;
    debug_assert!(determinant(&snf2.u).abs().is_one());
    Ok(split)
}

/// Hilbert-basis style generators of cone(gens) intersected with group(gens).
///
/// Every point of that saturation is a nonnegative integer combination of the
/// generators plus a point of a half-open parallelepiped spanned by
/// independent generators, so a box of radius sum of generator norms holds a
/// generating set. For pointed cones the reducible candidates are discarded.
pub fn saturation(gens: &[Vec<i64>], dim: usize) -> Result<AffineSemigroup, SemigroupError> {
    let base = AffineSemigroup::new(dim, gens.to_vec())?;
    let cone = base.cone()?;
    let lattice = Lattice::new(base.generators(), dim);
    let radius: i64 = base.generators().iter().map(|g| g.iter().map(|x| x.abs()).max().unwrap_or(0)).sum();
    let candidates: Vec<Vec<i64>> = box_points(dim, radius)
        .into_iter()
        .filter(|p| p.iter().any(|&x| x != 0) && cone.contains(p) && lattice.contains(p))
        .collect();
    let chosen: Vec<Vec<i64>> = if cone.is_pointed() {
        candidates
            .iter()
            .filter(|p| {
                !candidates.iter().any(|q| {
                    q != *p && {
                        let d = sub(p, q);
                        d.iter().any(|&x| x != 0) && cone.contains(&d) && lattice.contains(&d)
                    }
                })
            })
            .cloned()
            .collect()
    } else {
        let mut all = base.generators().to_vec();
        all.extend(candidates);
        all
    };
    Ok(AffineSemigroup::new(dim, chosen)?.with_search_bound(base.search_bound()))
}

/// C_1 ⊆ C_2 ⊆ ... where C_i saturates the semigroup generated by the first
/// i points of the stream (the whole stream once it runs out).
pub fn filtration(points: &[Vec<i64>], depth: usize) -> Result<Vec<AffineSemigroup>, SemigroupError> {
    let Some(first) = points.first() else {
        return Ok(Vec::new());
    };
    let dim = first.len();
    let mut chain: Vec<AffineSemigroup> = Vec::with_capacity(depth);
    let mut memo: HashMap<usize, AffineSemigroup> = HashMap::new();
    for i in 1..=depth {
        let upto = i.min(points.len());
        let c = match memo.get(&upto) {
            Some(c) => c.clone(),
            None => {
                let c = saturation(&points[..upto], dim)?;
                memo.insert(upto, c.clone());
                c
            }
        };
        chain.push(c);
    }
    Ok(chain)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(dim: usize, gens: &[&[i64]]) -> AffineSemigroup {
        AffineSemigroup::new(dim, gens.iter().map(|g| g.to_vec()).collect()).unwrap()
    }

    #[test]
    fn membership_examples() {
        let s = sg(2, &[&[1, 0], &[1, 1]]);
        assert!(membership(&s, &[2, 1]).unwrap().value);
        assert!(!membership(&s, &[0, 1]).unwrap().value);
        assert!(membership(&s, &[0, 0]).unwrap().value);
        assert!(matches!(membership(&s, &[1]), Err(SemigroupError::DimensionMismatch { .. })));
    }

    #[test]
    fn membership_with_units() {
        let s = sg(2, &[&[2, 0], &[-2, 0], &[1, 1]]);
        assert!(membership(&s, &[-3, 1]).unwrap().value);
        assert!(!membership(&s, &[-2, 1]).unwrap().value);
        assert!(!membership(&s, &[0, -1]).unwrap().value);
    }

    #[test]
    fn membership_numerical_semigroup() {
        let s = sg(1, &[&[2], &[3]]);
        assert!(!membership(&s, &[1]).unwrap().value);
        for v in [0, 2, 3, 4, 5, 6, 7] {
            assert!(membership(&s, &[v]).unwrap().value, "{v}");
        }
    }

    #[test]
    fn positivity() {
        assert!(is_positive(&sg(2, &[&[1, 0], &[1, 1]])).unwrap().value);
        let v = is_positive(&sg(2, &[&[1, 0], &[-1, 0]])).unwrap();
        assert_eq!(v, Verdict::refuted(vec![1, 0], false));
        assert!(is_positive(&sg(2, &[])).unwrap().value);
    }

    #[test]
    fn normality() {
        let s = sg(2, &[&[2, 0], &[0, 2], &[1, 1]]);
        assert_eq!(s.search_bound(), 6);
        assert!(is_normal(&s).unwrap().value);
        assert_eq!(is_normal(&sg(2, &[&[2, 0], &[3, 0]])).unwrap(), Verdict::refuted(vec![1, 0], true));
        assert!(is_normal(&sg(2, &[&[1, 0]])).unwrap().value);
    }

    #[test]
    fn fullness() {
        let n2 = sg(2, &[&[1, 0], &[0, 1]]);
        assert!(is_full(&sg(2, &[&[1, 0]]), &n2).unwrap().value);
        assert!(is_full(&sg(1, &[&[2]]), &sg(1, &[&[1]])).unwrap().value);
        assert_eq!(is_full(&sg(2, &[&[1, 1], &[1, 2]]), &n2).unwrap(), Verdict::refuted(vec![0, 1], true));
        assert!(matches!(
            is_full(&sg(2, &[&[-1, 0]]), &n2),
            Err(SemigroupError::NotSubsemigroup { .. })
        ));
    }

    #[test]
    fn splitting() {
        let s = split_positive(&sg(2, &[&[1, 0], &[-1, 0], &[0, 1]])).unwrap();
        assert_eq!(s.unit_rank, 1);
        assert_eq!(s.positive_part.generators(), &[vec![1]]);
        assert_eq!(s.factor(&[-3, 2]), Some((vec![-3, 0], vec![0, 2])));

        let n2 = sg(2, &[&[1, 0], &[0, 1]]);
        let s = split_positive(&n2).unwrap();
        assert_eq!(s.unit_rank, 0);
        assert_eq!(s.positive_part.generators(), n2.generators());

        let s = split_positive(&sg(2, &[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]])).unwrap();
        assert_eq!(s.unit_rank, 2);
        assert!(s.positive_part.generators().is_empty());

        assert!(matches!(split_positive(&sg(1, &[&[2], &[3]])), Err(SemigroupError::NotNormal { .. })));
    }

    #[test]
    fn ranks() {
        assert_eq!(group_rank(&sg(2, &[&[1, 0], &[1, 1]])), 2);
        assert_eq!(group_rank(&sg(2, &[&[2, 4]])), 1);
        assert_eq!(group_rank(&sg(2, &[])), 0);
    }

    #[test]
    fn filtration_examples() {
        let chain = filtration(&[vec![1, 0], vec![1, 1], vec![2, 1]], 3).unwrap();
        assert_eq!(chain.len(), 3);
        for w in chain.windows(2) {
            let next = w[1].oracle().unwrap();
            assert!(w[0].generators().iter().all(|g| next.contains(g)));
        }
        for c in &chain {
            assert!(is_normal(c).unwrap().value);
        }
        let single = filtration(&[vec![1, 0]], 1).unwrap();
        assert_eq!(single[0].generators(), &[vec![1, 0]]);
    }

    #[test]
    fn saturation_fills_holes() {
        let c = saturation(&[vec![1, 0], vec![1, 3], vec![1, 1]], 2).unwrap();
        let mut g = c.generators().to_vec();
        g.sort();
        assert_eq!(g, vec![vec![1, 0], vec![1, 1], vec![1, 2], vec![1, 3]]);
        // (1,1) is outside the group of (1,0) and (1,2)
        let c = saturation(&[vec![1, 0], vec![1, 2]], 2).unwrap();
        assert_eq!(c.generators().len(), 2);
        let c = saturation(&[vec![2], vec![3]], 1).unwrap();
        assert_eq!(c.generators(), &[vec![1]]);
    }

    #[test]
    fn document_round_trip() {
        let s = sg(2, &[&[1, 0], &[1, 1]]);
        let text = serde_json::to_string(&s).unwrap();
        let back: AffineSemigroup = serde_json::from_str(&text).unwrap();
        assert_eq!(back, s);
    }
}
