//! Exact rational and integer linear algebra.
//!
//! Everything downstream (rank tests on sequence families, cone duality,
//! lattice membership, Smith forms) bottoms out here. There is no floating
//! point anywhere in the crate.

mod cone;
mod matrix;
mod snf;

pub use cone::{
    conic_combination, dual_generators, lineality_direction, separating_functional, LinearFunctional,
    RationalCone, MAX_DUAL_DIMENSION,
};
pub use matrix::{
    cone_coordinates, kernel_basis, linear_coordinates, rank, rank_of_vectors, small_int_rank, solve,
    RatMatrix,
};
pub use snf::{determinant, smith_normal_form, unimodular_inverse, IntMatrix, Lattice, Snf};

use num::{BigInt, BigRational, Integer, One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = BigRational;

/// A vector of rationals.
pub type RatVector = Vec<Rational>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("generators are linearly dependent")]
    DependentGenerators,
    #[error("point lies in the cone, no separating functional exists")]
    NoSeparator,
    #[error("cone contains the line spanned by {witness:?}")]
    LineInCone { witness: Vec<i64> },
    #[error("dual cones are only computed up to dimension {MAX_DUAL_DIMENSION}, got {0}")]
    UnsupportedDimension(usize),
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn to_rat_vec(v: &[i64]) -> RatVector {
    v.iter().map(|&x| int(x)).collect()
}

/// Dot product of an exact functional with an integer point.
pub fn dot_int(a: &[Rational], x: &[i64]) -> Rational {
    a.iter()
        .zip(x)
        .fold(Rational::zero(), |acc, (c, &xi)| acc + c * BigInt::from(xi))
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

/// Least common multiple of the denominators.
pub fn common_denominator(v: &[Rational]) -> BigInt {
    v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

/// Scales a rational vector to coprime integers pointing the same way.
/// The zero vector maps to zeros.
pub fn primitive_integer(v: &[Rational]) -> Vec<BigInt> {
    let den = common_denominator(v);
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &den).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

/// Same as [`primitive_integer`] but narrowed to machine integers. Desk-scale
/// cones never come close to the `i64` range; overflow is a bug, so it panics.
pub fn primitive_i64(v: &[Rational]) -> Vec<i64> {
    primitive_integer(v)
        .iter()
        .map(|x| x.to_i64().expect("primitive vector exceeds i64"))
        .collect()
}

pub fn is_nonnegative(v: &[Rational]) -> bool {
    v.iter().all(|x| !x.is_negative())
}
