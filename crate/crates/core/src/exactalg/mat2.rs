//! 2×2 matrices over a ring, chiefly `M₂(K)` and `M₂(K[T])`.

use std::fmt;

use super::field::{Field, FieldElem};
use super::poly::UniPoly;
use super::{ArithError, Ring};

/// Row-major 2×2 matrix: `e = [m11, m12, m21, m22]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat2<R> {
    pub e: [R; 4],
}

/// A 2×2 matrix of polynomials in `T`.
pub type Mat2Poly = Mat2<UniPoly>;
/// A 2×2 matrix over the coefficient field.
pub type Mat2K = Mat2<FieldElem>;

impl<R: Ring> Mat2<R> {
    pub fn new(m11: R, m12: R, m21: R, m22: R) -> Self {
        Mat2 {
            e: [m11, m12, m21, m22],
        }
    }

    /// Entry at zero-based `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> &R {
        &self.e[2 * row + col]
    }

    pub fn det(&self) -> R {
        let [a, b, c, d] = &self.e;
        a.times(d).minus(&b.times(c))
    }

    pub fn adjugate(&self) -> Self {
        let [a, b, c, d] = &self.e;
        Mat2::new(d.clone(), b.negate(), c.negate(), a.clone())
    }

    pub fn transpose(&self) -> Self {
        let [a, b, c, d] = &self.e;
        Mat2::new(a.clone(), c.clone(), b.clone(), d.clone())
    }

    pub fn map<S>(&self, f: impl Fn(&R) -> S) -> Mat2<S> {
        let [a, b, c, d] = &self.e;
        Mat2 {
            e: [f(a), f(b), f(c), f(d)],
        }
    }
}

impl<R: Ring> Ring for Mat2<R> {
    fn zero_like(&self) -> Self {
        let z = self.e[0].zero_like();
        Mat2::new(z.clone(), z.clone(), z.clone(), z)
    }
    fn one_like(&self) -> Self {
        let z = self.e[0].zero_like();
        let o = self.e[0].one_like();
        Mat2::new(o.clone(), z.clone(), z, o)
    }
    fn plus(&self, o: &Self) -> Self {
        Mat2 {
            e: std::array::from_fn(|i| self.e[i].plus(&o.e[i])),
        }
    }
    fn minus(&self, o: &Self) -> Self {
        Mat2 {
            e: std::array::from_fn(|i| self.e[i].minus(&o.e[i])),
        }
    }
    fn times(&self, o: &Self) -> Self {
        let [a, b, c, d] = &self.e;
        let [p, q, r, s] = &o.e;
        Mat2::new(
            a.times(p).plus(&b.times(r)),
            a.times(q).plus(&b.times(s)),
            c.times(p).plus(&d.times(r)),
            c.times(q).plus(&d.times(s)),
        )
    }
    fn negate(&self) -> Self {
        self.map(Ring::negate)
    }
    fn scaled(&self, c: &FieldElem) -> Self {
        self.map(|x| x.scaled(c))
    }
    fn is_zero(&self) -> bool {
        self.e.iter().all(Ring::is_zero)
    }
}

impl Mat2K {
    pub fn zero(field: Field) -> Self {
        Mat2::new(field.zero(), field.zero(), field.zero(), field.zero())
    }

    pub fn identity(field: Field) -> Self {
        Mat2::new(field.one(), field.zero(), field.zero(), field.one())
    }

    /// Matrix from small integers, row-major.
    pub fn from_i64s(field: Field, v: [i64; 4]) -> Self {
        Mat2 {
            e: v.map(|x| field.from_i64(x)),
        }
    }

    /// The matrix unit `e_{ij}` with one-based indices.
    pub fn unit(field: Field, i: usize, j: usize) -> Self {
        let mut m = Self::zero(field);
        m.e[2 * (i - 1) + (j - 1)] = field.one();
        m
    }

    pub fn field(&self) -> Field {
        self.e[0].field()
    }

    pub fn to_strings(&self) -> [[String; 2]; 2] {
        [
            [self.e[0].to_string(), self.e[1].to_string()],
            [self.e[2].to_string(), self.e[3].to_string()],
        ]
    }
}

impl Mat2Poly {
    pub fn zero(field: Field) -> Self {
        let z = UniPoly::zero(field);
        Mat2::new(z.clone(), z.clone(), z.clone(), z)
    }

    pub fn identity(field: Field) -> Self {
        Mat2::new(
            UniPoly::one(field),
            UniPoly::zero(field),
            UniPoly::zero(field),
            UniPoly::one(field),
        )
    }

    /// Builds from integer coefficient lists, row-major.
    pub fn from_i64s(field: Field, entries: [&[i64]; 4]) -> Self {
        Mat2 {
            e: entries.map(|c| UniPoly::from_i64s(field, c)),
        }
    }

    /// `c * T^k` placed as a constant matrix times a power of `T`.
    pub fn from_coeff_matrix(m: &Mat2K, k: usize) -> Self {
        m.map(|c| UniPoly::monomial(c.clone(), k))
    }

    pub fn field(&self) -> Field {
        self.e[0].field()
    }

    /// Max entry degree; `None` for the zero matrix.
    pub fn degree(&self) -> Option<usize> {
        self.e.iter().map(UniPoly::degree).max().flatten()
    }

    /// Coefficient matrix of `T^d`.
    pub fn leading_coeff_at(&self, d: usize) -> Mat2K {
        self.map(|p| p.coeff(d))
    }

    pub fn eval_at(&self, t: &FieldElem) -> Mat2K {
        self.map(|p| p.eval(t))
    }

    /// Inverse via the adjugate; requires a nonzero constant determinant.
    pub fn inverse(&self) -> Result<Mat2Poly, ArithError> {
        let det = self.det();
        match det.degree() {
            None => Err(ArithError::SingularMatrix),
            Some(0) => {
                let inv = det.coeff(0).inv().expect("nonzero constant");
                Ok(self.adjugate().scaled(&inv))
            }
            Some(_) => Err(ArithError::NonConstantDeterminant(det.to_string())),
        }
    }
}

/// Inverse of a polynomial matrix whose determinant is a nonzero constant.
pub fn mat_inv(m: &Mat2Poly) -> Result<Mat2Poly, ArithError> {
    m.inverse()
}

/// Coefficient of `T^d` in every entry.
pub fn leading_coeff_at(m: &Mat2Poly, d: usize) -> Mat2K {
    m.leading_coeff_at(d)
}

impl<R: fmt::Display> fmt::Display for Mat2<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = &self.e;
        write!(f, "[[{a}, {b}], [{c}, {d}]]")
    }
}
