use num::{BigInt, Integer, One, Signed, Zero};

use super::{common_denominator, ExactError, RatVector, Rational};

/// Dense rectangular matrix of rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, entries: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Builds a matrix from rows. `cols` is needed to describe a matrix with no rows.
    pub fn from_rows(rows: Vec<RatVector>, cols: usize) -> Result<Self, ExactError> {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        let nrows = rows.len();
        for row in rows {
            if row.len() != cols {
                return Err(ExactError::DimensionMismatch { expected: cols, found: row.len() });
            }
            entries.extend(row);
        }
        Ok(RatMatrix { rows: nrows, cols, entries })
    }

    pub fn from_int_rows(rows: &[Vec<i64>], cols: usize) -> Result<Self, ExactError> {
        Self::from_rows(rows.iter().map(|r| super::to_rat_vec(r)).collect(), cols)
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(columns: &[RatVector], rows: usize) -> Result<Self, ExactError> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(ExactError::DimensionMismatch { expected: rows, found: c.len() });
            }
            for (i, x) in c.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Rational) {
        self.entries[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<RatVector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &RatMatrix) -> Result<RatMatrix, ExactError> {
        if self.cols != other.rows {
            return Err(ExactError::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<RatVector, ExactError> {
        if v.len() != self.cols {
            return Err(ExactError::DimensionMismatch { expected: self.cols, found: v.len() });
        }
        Ok((0..self.rows).map(|i| super::dot(self.row(i), v)).collect())
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (RatMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).recip();
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in c..m.cols {
                    let v = m.get(i, j) - &f * m.get(r, j);
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

/// Rank over Q. Rows are cleared of denominators and eliminated over the
/// integers, dividing each new row by its content to keep entries small.
pub fn rank(m: &RatMatrix) -> usize {
    let rows: Vec<Vec<BigInt>> = (0..m.rows())
        .map(|i| {
            let row = m.row(i);
            let den = common_denominator(row);
            row.iter().map(|x| (x * &den).to_integer()).collect()
        })
        .collect();
    integer_rank(rows, m.cols())
}

pub fn rank_of_vectors(vs: &[RatVector]) -> usize {
    let Some(first) = vs.first() else { return 0 };
    let cols = first.len();
    match RatMatrix::from_rows(vs.to_vec(), cols) {
        Ok(m) => rank(&m),
        Err(_) => panic!("rank_of_vectors: ragged input"),
    }
}

fn integer_rank(mut rows: Vec<Vec<BigInt>>, cols: usize) -> usize {
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let (head, tail) = rows.split_at_mut(r + 1);
        let pivot_row = &head[r];
        for row in tail.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let a = pivot_row[c].clone();
            let b = row[c].clone();
            let mut content = BigInt::zero();
            for j in c..cols {
                row[j] = &a * &row[j] - &b * &pivot_row[j];
                content = content.gcd(&row[j]);
            }
            if !content.is_zero() && !content.is_one() {
                for x in row[c..].iter_mut() {
                    *x = &*x / &content;
                }
            }
        }
        r += 1;
    }
    r
}

/// Rank over Q of a small integer matrix, the hot path of the Betti number
/// computations. Falls back to big integers if an intermediate overflows.
pub fn small_int_rank(rows: &[Vec<i64>], cols: usize) -> usize {
    let mut m: Vec<Vec<i64>> = rows.to_vec();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..m.len() {
            if m[i][c] == 0 {
                continue;
            }
            let a = m[r][c];
            let b = m[i][c];
            let mut g = 0i64;
            for j in c..cols {
                let v = a.checked_mul(m[i][j]).and_then(|x| b.checked_mul(m[r][j]).and_then(|y| x.checked_sub(y)));
                let Some(v) = v else {
                    let big = rows.iter().map(|row| row.iter().map(|&x| BigInt::from(x)).collect()).collect();
                    return integer_rank(big, cols);
                };
                m[i][j] = v;
                g = g.gcd(&v);
            }
            if g > 1 {
                for x in m[i][c..].iter_mut() {
                    *x /= g;
                }
            }
        }
        r += 1;
    }
    r
}

/// Basis of the right null space {x : m x = 0}.
pub fn kernel_basis(m: &RatMatrix) -> Vec<RatVector> {
    let (r, pivots) = m.rref();
    let free: Vec<usize> = (0..m.cols()).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); m.cols()];
            v[f] = Rational::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(i, f).clone();
            }
            v
        })
        .collect()
}

/// Some solution of m x = b (free variables set to zero), or `None` when the
/// system is inconsistent.
pub fn solve(m: &RatMatrix, b: &[Rational]) -> Option<RatVector> {
    assert_eq!(b.len(), m.rows(), "solve: right-hand side has the wrong length");
    let mut aug = RatMatrix::zeros(m.rows(), m.cols() + 1);
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            aug.set(i, j, m.get(i, j).clone());
        }
        aug.set(i, m.cols(), b[i].clone());
    }
    let (r, pivots) = aug.rref();
    if pivots.last() == Some(&m.cols()) {
        return None;
    }
    let mut x = vec![Rational::zero(); m.cols()];
    for (i, &p) in pivots.iter().enumerate() {
        x[p] = r.get(i, m.cols()).clone();
    }
    Some(x)
}

/// Coordinates of `v` in the span of the linearly independent family `gamma`,
/// or `None` if `v` is outside the span.
pub fn linear_coordinates(gamma: &[RatVector], v: &[Rational]) -> Result<Option<RatVector>, ExactError> {
    for g in gamma {
        if g.len() != v.len() {
            return Err(ExactError::DimensionMismatch { expected: v.len(), found: g.len() });
        }
    }
    if gamma.is_empty() {
        return Ok(v.iter().all(|x| x.is_zero()).then(Vec::new));
    }
    if rank_of_vectors(gamma) < gamma.len() {
        return Err(ExactError::DependentGenerators);
    }
    let a = RatMatrix::from_columns(gamma, v.len())?;
    Ok(solve(&a, v))
}

/// The unique coefficients c with sum c_i gamma_i = v, provided they are all
/// nonnegative.
pub fn cone_coordinates(gamma: &[RatVector], v: &[Rational]) -> Result<Option<RatVector>, ExactError> {
    Ok(linear_coordinates(gamma, v)?.filter(|c| c.iter().all(|x| !x.is_negative())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat, to_rat_vec};

    fn m(rows: &[&[i64]]) -> RatMatrix {
        let cols = rows.first().map_or(0, |r| r.len());
        RatMatrix::from_int_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>(), cols).unwrap()
    }

    // Independent oracle: some 3x3 minor is nonzero.
    fn det3(a: [[i64; 3]; 3]) -> i64 {
        a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
            + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
    }

    #[test]
    fn rank_small_cases() {
        assert_eq!(rank(&m(&[&[1, 0], &[0, 1]])), 2);
        assert_eq!(rank(&m(&[&[1, 2], &[2, 4]])), 1);
        let rows = [[2, 2, 2, 2, 2], [3, 1, 3, 1, 3], [4, 2, 1, 1, 4]];
        let minor = det3([[2, 2, 2], [3, 1, 3], [4, 2, 1]]);
        assert_ne!(minor, 0);
        assert_eq!(rank(&m(&[&rows[0], &rows[1], &rows[2]])), 3);
    }

    #[test]
    fn rank_with_fractions() {
        let a = RatMatrix::from_rows(vec![vec![rat(1, 2), rat(1, 3)], vec![rat(3, 2), int(1)]], 2).unwrap();
        assert_eq!(rank(&a), 1);
    }

    #[test]
    fn small_int_rank_matches_big_rank() {
        let rows = vec![vec![1, -1, 0, 1], vec![0, 1, -1, 0], vec![1, 0, -1, 1]];
        assert_eq!(small_int_rank(&rows, 4), 2);
        assert_eq!(small_int_rank(&rows, 4), rank(&RatMatrix::from_int_rows(&rows, 4).unwrap()));
    }

    #[test]
    fn cone_coordinates_examples() {
        let gamma = vec![to_rat_vec(&[1, 0]), to_rat_vec(&[1, 1])];
        assert_eq!(cone_coordinates(&gamma, &to_rat_vec(&[3, 2])).unwrap(), Some(to_rat_vec(&[1, 2])));
        assert_eq!(cone_coordinates(&gamma, &to_rat_vec(&[0, 0])).unwrap(), Some(to_rat_vec(&[0, 0])));
        assert_eq!(cone_coordinates(&gamma, &to_rat_vec(&[0, 1])).unwrap(), None);
        assert_eq!(linear_coordinates(&gamma, &to_rat_vec(&[0, 1])).unwrap(), Some(to_rat_vec(&[-1, 1])));
    }

    #[test]
    fn cone_coordinates_rejects_dependent_family() {
        let gamma = vec![to_rat_vec(&[1, 2]), to_rat_vec(&[2, 4])];
        assert_eq!(cone_coordinates(&gamma, &to_rat_vec(&[1, 2])), Err(ExactError::DependentGenerators));
    }

    #[test]
    fn kernel_of_rank_one_matrix() {
        let k = kernel_basis(&m(&[&[1, 2, 3]]));
        assert_eq!(k.len(), 2);
        for v in k {
            assert!(crate::exact::dot(&v, &to_rat_vec(&[1, 2, 3])).is_zero());
        }
    }

    #[test]
    fn solve_detects_inconsistency() {
        let a = m(&[&[1, 1], &[2, 2]]);
        assert!(solve(&a, &to_rat_vec(&[1, 3])).is_none());
        assert_eq!(solve(&a, &to_rat_vec(&[1, 2])), Some(to_rat_vec(&[1, 0])));
    }
}
