use num::{BigInt, Integer, One, Signed, ToPrimitive, Zero};

use super::{RatMatrix, Rational};

/// Dense integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, entries: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Panics on ragged input; callers build these from validated data.
    pub fn from_i64_rows(rows: &[Vec<i64>], cols: usize) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "IntMatrix: ragged rows");
            for (j, &x) in r.iter().enumerate() {
                m.set(i, j, BigInt::from(x));
            }
        }
        m
    }

    /// Matrix whose columns are the given integer vectors.
    pub fn from_i64_columns(columns: &[Vec<i64>], rows: usize) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "IntMatrix: column of wrong length");
            for (i, &x) in c.iter().enumerate() {
                m.set(i, j, BigInt::from(x));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: BigInt) {
        self.entries[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_i64_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|x| x.to_i64().expect("entry exceeds i64")).collect())
            .collect()
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "IntMatrix::mul: shape mismatch");
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
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols, "IntMatrix::mul_vec: length mismatch");
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).fold(BigInt::zero(), |acc, (a, b)| acc + a * b))
            .collect()
    }

    pub fn mul_i64(&self, v: &[i64]) -> Vec<BigInt> {
        let big: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
        self.mul_vec(&big)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.entries.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.entries.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[target] += f * row[source]
    fn add_row(&mut self, target: usize, source: usize, f: &BigInt) {
        for j in 0..self.cols {
            let v = self.get(target, j) + f * self.get(source, j);
            self.set(target, j, v);
        }
    }

    /// col[target] += f * col[source]
    fn add_col(&mut self, target: usize, source: usize, f: &BigInt) {
        for i in 0..self.rows {
            let v = self.get(i, target) + f * self.get(i, source);
            self.set(i, target, v);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self.get(i, j);
            self.set(i, j, v);
        }
    }
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn determinant(m: &IntMatrix) -> BigInt {
    assert_eq!(m.rows(), m.cols(), "determinant of a non-square matrix");
    let n = m.rows();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a.get(k, k).is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a.get(i, k).is_zero()) else {
                return BigInt::zero();
            };
            a.swap_rows(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j)) / &prev;
                a.set(i, j, v);
            }
        }
        prev = a.get(k, k).clone();
    }
    sign * a.get(n - 1, n - 1)
}

/// Smith normal form: `u * m * v == d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Snf {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl Snf {
    /// The nonzero invariant factors d_1 | d_2 | ...
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d.get(i, i).clone())
            .take_while(|x| !x.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> Snf {
    let (r, c) = (m.rows(), m.cols());
    let mut d = m.clone();
    let mut u = IntMatrix::identity(r);
    let mut v = IntMatrix::identity(c);

    for t in 0..r.min(c) {
        loop {
            // smallest nonzero entry of the trailing block goes to (t, t)
            let mut best: Option<(usize, usize)> = None;
            for i in t..r {
                for j in t..c {
                    let x = d.get(i, j);
                    if x.is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| x.abs() < d.get(bi, bj).abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else {
                return finish(u, d, v);
            };
            d.swap_rows(t, bi);
            u.swap_rows(t, bi);
            d.swap_cols(t, bj);
            v.swap_cols(t, bj);

            let pivot = d.get(t, t).clone();
            let mut clean = true;
            for i in t + 1..r {
                let q = d.get(i, t).div_floor(&pivot);
                if !q.is_zero() {
                    d.add_row(i, t, &-&q);
                    u.add_row(i, t, &-&q);
                }
                clean &= d.get(i, t).is_zero();
            }
            for j in t + 1..c {
                let q = d.get(t, j).div_floor(&pivot);
                if !q.is_zero() {
                    d.add_col(j, t, &-&q);
                    v.add_col(j, t, &-&q);
                }
                clean &= d.get(t, j).is_zero();
            }
            if !clean {
                continue;
            }
            // the pivot must divide the whole trailing block
            let offender = (t + 1..r).find(|&i| (t + 1..c).any(|j| !d.get(i, j).is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    d.add_row(t, i, &BigInt::one());
                    u.add_row(t, i, &BigInt::one());
                }
                None => break,
            }
        }
        if d.get(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    finish(u, d, v)
}

fn finish(u: IntMatrix, d: IntMatrix, v: IntMatrix) -> Snf {
    Snf { u, d, v }
}

/// Inverse of a square integer matrix, if it is unimodular.
pub fn unimodular_inverse(m: &IntMatrix) -> Option<IntMatrix> {
    let n = m.rows();
    assert_eq!(n, m.cols(), "inverse of a non-square matrix");
    let mut aug = RatMatrix::zeros(n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            aug.set(i, j, Rational::from_integer(m.get(i, j).clone()));
        }
        aug.set(i, n + i, Rational::one());
    }
    let (r, pivots) = aug.rref();
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    let mut inv = IntMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let x = r.get(i, n + j);
            if !x.is_integer() {
                return None;
            }
            inv.set(i, j, x.to_integer());
        }
    }
    Some(inv)
}

/// The subgroup of Z^n generated by finitely many vectors, with a Smith form
/// cached for repeated membership queries.
#[derive(Debug, Clone)]
pub struct Lattice {
    dim: usize,
    generators: Vec<Vec<i64>>,
    snf: Snf,
}

impl Lattice {
    pub fn new(generators: &[Vec<i64>], dim: usize) -> Self {
        let m = IntMatrix::from_i64_columns(generators, dim);
        Lattice { dim, generators: generators.to_vec(), snf: smith_normal_form(&m) }
    }

    pub fn rank(&self) -> usize {
        self.snf.rank()
    }

    pub fn snf(&self) -> &Snf {
        &self.snf
    }

    /// Integer coefficients x with sum x_j g_j = p, if p lies in the lattice.
    pub fn coordinates(&self, p: &[i64]) -> Option<Vec<BigInt>> {
        assert_eq!(p.len(), self.dim, "Lattice::coordinates: dimension mismatch");
        let w = self.snf.u.mul_i64(p);
        let factors = self.snf.invariant_factors();
        let mut y = vec![BigInt::zero(); self.generators.len()];
        for (i, wi) in w.iter().enumerate() {
            match factors.get(i) {
                Some(d) => {
                    if !wi.is_multiple_of(d) {
                        return None;
                    }
                    y[i] = wi / d;
                }
                None => {
                    if !wi.is_zero() {
                        return None;
                    }
                }
            }
        }
        Some(self.snf.v.mul_vec(&y))
    }

    pub fn contains(&self, p: &[i64]) -> bool {
        self.coordinates(p).is_some()
    }
}
