//! Univariate polynomials in `T` over an exact field.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::{parse_scalar, Field, FieldElem};
use super::{ArithError, Ring};

/// Coefficients indexed by degree; never carries trailing zeros.
///
/// Degrees are reported as `Option<usize>` with `None` for the zero
/// polynomial, so `None < Some(_)` keeps comparisons total.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniPoly {
    field: Field,
    coeffs: Vec<FieldElem>,
}

impl UniPoly {
    pub fn zero(field: Field) -> Self {
        UniPoly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: Field) -> Self {
        Self::constant(field.one())
    }

    pub fn constant(c: FieldElem) -> Self {
        Self::from_coeffs(c.field(), vec![c])
    }

    /// The indeterminate `T`.
    pub fn t(field: Field) -> Self {
        Self::monomial(field.one(), 1)
    }

    /// `c * T^k`.
    pub fn monomial(c: FieldElem, k: usize) -> Self {
        let field = c.field();
        let mut coeffs = vec![field.zero(); k];
        coeffs.push(c);
        Self::from_coeffs(field, coeffs)
    }

    pub fn from_coeffs(field: Field, coeffs: Vec<FieldElem>) -> Self {
        let mut p = UniPoly { field, coeffs };
        p.normalize();
        p
    }

    pub fn from_i64s(field: Field, coeffs: &[i64]) -> Self {
        Self::from_coeffs(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(FieldElem::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `T^d` (zero beyond the degree).
    pub fn coeff(&self, d: usize) -> FieldElem {
        self.coeffs
            .get(d)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn leading_coeff(&self) -> Option<&FieldElem> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &FieldElem) -> FieldElem {
        self.coeffs
            .iter()
            .rev()
            .fold(self.field.zero(), |acc, c| &(&acc * x) + c)
    }

    pub fn scale(&self, c: &FieldElem) -> Self {
        Self::from_coeffs(self.field, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplies by `T^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![self.field.zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly {
            field: self.field,
            coeffs,
        }
    }

    /// Exact division by `T^k`; `None` if a low coefficient is nonzero.
    pub fn unshift(&self, k: usize) -> Option<Self> {
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) {
            return None;
        }
        Some(UniPoly {
            field: self.field,
            coeffs: self.coeffs.iter().skip(k).cloned().collect(),
        })
    }

    pub fn div_rem(&self, divisor: &UniPoly) -> Result<(UniPoly, UniPoly), ArithError> {
        let dd = divisor.degree().ok_or(ArithError::DivisionByZero)?;
        let lead_inv = divisor.coeffs[dd]
            .inv()
            .expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        let n = self.coeffs.len();
        if n <= dd {
            return Ok((UniPoly::zero(self.field), self.clone()));
        }
        let mut quot = vec![self.field.zero(); n - dd];
        for i in (0..n - dd).rev() {
            let c = &rem[i + dd] * &lead_inv;
            if !c.is_zero() {
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    rem[i + j] = &rem[i + j] - &(&c * dc);
                }
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((
            UniPoly::from_coeffs(self.field, quot),
            UniPoly::from_coeffs(self.field, rem),
        ))
    }

    /// Exact quotient; `None` if `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &UniPoly) -> Option<UniPoly> {
        let (q, r) = self.div_rem(divisor).ok()?;
        r.is_zero().then_some(q)
    }

    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            Some(l) => self.scale(&l.inv().expect("nonzero")),
            None => self.clone(),
        }
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("b nonzero");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Parses a polynomial in `T`, e.g. `T^2 - T + 1/2`.
    pub fn parse(text: &str, field: Field) -> Result<UniPoly, ArithError> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(ArithError::BadLiteral(text.to_string()));
        }
        let mut acc = UniPoly::zero(field);
        let mut i = 0;
        let bytes = s.as_bytes();
        while i < bytes.len() {
            let mut sign = 1i64;
            if bytes[i] == b'+' || bytes[i] == b'-' {
                if bytes[i] == b'-' {
                    sign = -1;
                }
                i += 1;
            } else if i != 0 {
                return Err(ArithError::BadLiteral(text.to_string()));
            }
            let start = i;
            while i < bytes.len() && bytes[i] != b'+' && bytes[i] != b'-' {
                // a minus directly after '^' belongs to the exponent, which we reject below
                i += 1;
            }
            let term = &s[start..i];
            acc = &acc + &parse_term(term, field, text)?.scale(&field.from_i64(sign));
        }
        Ok(acc)
    }
}

fn parse_term(term: &str, field: Field, whole: &str) -> Result<UniPoly, ArithError> {
    let bad = || ArithError::BadLiteral(whole.to_string());
    if term.is_empty() {
        return Err(bad());
    }
    let (coeff, power) = match term.find('T') {
        None => (parse_scalar(term, field)?, 0usize),
        Some(pos) => {
            let c = term[..pos].trim_end_matches('*');
            let coeff = if c.is_empty() {
                field.one()
            } else {
                parse_scalar(c, field)?
            };
            let rest = &term[pos + 1..];
            let power = if rest.is_empty() {
                1
            } else {
                rest.strip_prefix('^')
                    .and_then(|e| e.parse::<usize>().ok())
                    .ok_or_else(bad)?
            };
            (coeff, power)
        }
    };
    Ok(UniPoly::monomial(coeff, power))
}

impl<'a> Add<&'a UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &'a UniPoly) -> UniPoly {
        assert_eq!(self.field, rhs.field, "polynomials over different fields");
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect();
        UniPoly::from_coeffs(self.field, coeffs)
    }
}

impl<'a> Sub<&'a UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &'a UniPoly) -> UniPoly {
        self + &(-rhs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            field: self.field,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl<'a> Mul<&'a UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &'a UniPoly) -> UniPoly {
        assert_eq!(self.field, rhs.field, "polynomials over different fields");
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero(self.field);
        }
        let mut coeffs = vec![self.field.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        UniPoly::from_coeffs(self.field, coeffs)
    }
}

impl Ring for UniPoly {
    fn zero_like(&self) -> Self {
        UniPoly::zero(self.field)
    }
    fn one_like(&self) -> Self {
        UniPoly::one(self.field)
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
        self.scale(c)
    }
    fn is_zero(&self) -> bool {
        UniPoly::is_zero(self)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative_literal();
            let abs = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let mono = match d {
                0 => String::new(),
                1 => "T".to_string(),
                _ => format!("T^{d}"),
            };
            if d == 0 {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}
