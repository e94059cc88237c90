//! Exact arithmetic kernel: fields, polynomials in `T`, 2×2 matrices, dense linear algebra.

mod field;
mod linalg;
mod mat2;
mod poly;

pub use field::{is_prime, parse_scalar, Field, FieldElem, DEFAULT_PRIME_BOUND};
pub use linalg::DenseMatrix;
pub use mat2::{leading_coeff_at, mat_inv, Mat2, Mat2K, Mat2Poly};
pub use poly::UniPoly;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {modulus} exceeds the supported bound {bound}")]
    ModulusTooLarge { modulus: u64, bound: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("determinant {0} is not a constant polynomial")]
    NonConstantDeterminant(String),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("malformed literal `{0}`")]
    BadLiteral(String),
}

/// Minimal ring interface shared by every value Laurent polynomials are evaluated on.
///
/// `zero_like`/`one_like` take a template so that field and shape travel with the value.
pub trait Ring: Clone + PartialEq {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negate(&self) -> Self;
    fn scaled(&self, c: &FieldElem) -> Self;
    fn is_zero(&self) -> bool;

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.times(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.times(&base);
            }
        }
        acc
    }
}

impl Ring for FieldElem {
    fn zero_like(&self) -> Self {
        self.field().zero()
    }
    fn one_like(&self) -> Self {
        self.field().one()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negate(&self) -> Self {
        -self
    }
    fn scaled(&self, c: &FieldElem) -> Self {
        self * c
    }
    fn is_zero(&self) -> bool {
        FieldElem::is_zero(self)
    }
}

/// Evaluates a univariate polynomial at a ring element (Horner).
pub fn eval_poly_at<R: Ring>(g: &UniPoly, x: &R) -> R {
    let one = x.one_like();
    g.coeffs()
        .iter()
        .rev()
        .fold(x.zero_like(), |acc, c| acc.times(x).plus(&one.scaled(c)))
}
