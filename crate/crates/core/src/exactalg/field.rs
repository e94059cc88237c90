//! Exact coefficient fields: the rationals and prime fields `F_p`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::ArithError;

/// Largest prime modulus accepted by default.
pub const DEFAULT_PRIME_BOUND: u64 = 1 << 31;

/// Field descriptor. `Prime(p)` always holds a verified prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    /// `q = 0` selects the rationals, otherwise `q` must be a prime below `bound`.
    pub fn from_q_with_bound(q: u64, bound: u64) -> Result<Field, ArithError> {
        if q == 0 {
            return Ok(Field::Rational);
        }
        if q > bound {
            return Err(ArithError::ModulusTooLarge { modulus: q, bound });
        }
        if !is_prime(q) {
            return Err(ArithError::NotPrime(q));
        }
        Ok(Field::Prime(q))
    }

    pub fn from_q(q: u64) -> Result<Field, ArithError> {
        Self::from_q_with_bound(q, DEFAULT_PRIME_BOUND)
    }

    /// The `q` that selects this field on the command line.
    pub fn q(self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }

    pub fn characteristic(self) -> u64 {
        self.q()
    }

    /// Number of elements, `None` for the rationals.
    pub fn order(self) -> Option<u64> {
        match self {
            Field::Rational => None,
            Field::Prime(p) => Some(p),
        }
    }

    pub fn zero(self) -> FieldElem {
        self.from_i64(0)
    }

    pub fn one(self) -> FieldElem {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> FieldElem {
        match self {
            Field::Rational => FieldElem::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => FieldElem::Mod {
                value: n.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    pub fn from_bigint(self, n: &BigInt) -> FieldElem {
        match self {
            Field::Rational => FieldElem::Rational(BigRational::from_integer(n.clone())),
            Field::Prime(p) => {
                let r = ((n % BigInt::from(p)) + BigInt::from(p)) % BigInt::from(p);
                FieldElem::Mod {
                    value: r.to_u64().expect("residue fits"),
                    modulus: p,
                }
            }
        }
    }

    /// `num/den` mapped into the field. Fails if `den` vanishes in it.
    pub fn from_ratio(self, num: &BigInt, den: &BigInt) -> Result<FieldElem, ArithError> {
        let d = self.from_bigint(den);
        let inv = d.inv().ok_or(ArithError::DivisionByZero)?;
        Ok(&self.from_bigint(num) * &inv)
    }

    /// Element with canonical index `i` (finite fields only): the residue `i`.
    pub fn element(self, i: u64) -> FieldElem {
        match self {
            Field::Rational => self.from_i64(i as i64),
            Field::Prime(p) => FieldElem::Mod {
                value: i % p,
                modulus: p,
            },
        }
    }

    /// All elements of a finite field in residue order.
    pub fn elements(self) -> Option<Vec<FieldElem>> {
        self.order()
            .map(|q| (0..q).map(|i| self.element(i)).collect())
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F{p}"),
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// An exact field element. Rationals are always reduced; residues live in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldElem {
    Rational(BigRational),
    Mod { value: u64, modulus: u64 },
}

impl FieldElem {
    pub fn field(&self) -> Field {
        match self {
            FieldElem::Rational(_) => Field::Rational,
            FieldElem::Mod { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElem::Rational(r) => r.is_zero(),
            FieldElem::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElem::Rational(r) => r.is_one(),
            FieldElem::Mod { value, .. } => *value == 1,
        }
    }

    pub fn inv(&self) -> Option<FieldElem> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            FieldElem::Rational(r) => FieldElem::Rational(r.recip()),
            FieldElem::Mod { value, modulus } => FieldElem::Mod {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    pub fn pow(&self, mut e: u64) -> FieldElem {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Residue index for finite-field elements.
    pub fn residue(&self) -> Option<u64> {
        match self {
            FieldElem::Mod { value, .. } => Some(*value),
            FieldElem::Rational(_) => None,
        }
    }

    /// Signed integer view when the element is an integer small enough to fit.
    /// Residues above `p/2` read as negative.
    pub fn as_small_int(&self) -> Option<i64> {
        match self {
            FieldElem::Rational(r) if r.is_integer() => r.to_integer().to_i64(),
            FieldElem::Rational(_) => None,
            FieldElem::Mod { value, modulus } => {
                if *value <= modulus / 2 {
                    Some(*value as i64)
                } else {
                    Some(*value as i64 - *modulus as i64)
                }
            }
        }
    }

    fn check_same(&self, other: &FieldElem) {
        assert_eq!(
            self.field(),
            other.field(),
            "field elements from different fields never mix"
        );
    }
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

#[inline]
fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

impl<'a> Add<&'a FieldElem> for &FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: &'a FieldElem) -> FieldElem {
        self.check_same(rhs);
        match (self, rhs) {
            (FieldElem::Rational(a), FieldElem::Rational(b)) => FieldElem::Rational(a + b),
            (FieldElem::Mod { value: a, modulus }, FieldElem::Mod { value: b, .. }) => {
                let s = a + b;
                FieldElem::Mod {
                    value: if s >= *modulus { s - modulus } else { s },
                    modulus: *modulus,
                }
            }
            _ => unreachable!(),
        }
    }
}

impl<'a> Sub<&'a FieldElem> for &FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: &'a FieldElem) -> FieldElem {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a FieldElem> for &FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: &'a FieldElem) -> FieldElem {
        self.check_same(rhs);
        match (self, rhs) {
            (FieldElem::Rational(a), FieldElem::Rational(b)) => FieldElem::Rational(a * b),
            (FieldElem::Mod { value: a, modulus }, FieldElem::Mod { value: b, .. }) => {
                FieldElem::Mod {
                    value: mul_mod(*a, *b, *modulus),
                    modulus: *modulus,
                }
            }
            _ => unreachable!(),
        }
    }
}

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        match self {
            FieldElem::Rational(a) => FieldElem::Rational(-a),
            FieldElem::Mod { value, modulus } => FieldElem::Mod {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $m(self, rhs: FieldElem) -> FieldElem {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        -&self
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElem::Rational(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            FieldElem::Mod { value, .. } => write!(f, "{value}"),
        }
    }
}

impl FieldElem {
    /// True if the displayed form starts with a minus sign.
    pub fn is_negative_literal(&self) -> bool {
        matches!(self, FieldElem::Rational(r) if r.is_negative())
    }
}

/// Parses `n` or `n/d` (optionally signed) into `field`.
pub fn parse_scalar(text: &str, field: Field) -> Result<FieldElem, ArithError> {
    let text = text.trim();
    let bad = || ArithError::BadLiteral(text.to_string());
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (
            BigInt::from_str(n.trim()).map_err(|_| bad())?,
            BigInt::from_str(d.trim()).map_err(|_| bad())?,
        ),
        None => (BigInt::from_str(text).map_err(|_| bad())?, BigInt::one()),
    };
    if den.is_zero() {
        return Err(ArithError::DivisionByZero);
    }
    field.from_ratio(&num, &den)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_validation() {
        assert!(Field::from_q(4).is_err());
        assert!(Field::from_q(1).is_err());
        assert_eq!(Field::from_q(0).unwrap(), Field::Rational);
        assert_eq!(Field::from_q(7).unwrap(), Field::Prime(7));
        assert!(matches!(
            Field::from_q_with_bound(11, 10),
            Err(ArithError::ModulusTooLarge { .. })
        ));
        assert_eq!(Field::from_q(2147483647).unwrap(), Field::Prime(2147483647));
    }

    #[test]
    fn residues_are_canonical() {
        let f = Field::Prime(5);
        assert_eq!(f.from_i64(-1), f.from_i64(4));
        assert_eq!((-&f.from_i64(0)).residue(), Some(0));
        let three = f.from_i64(3);
        assert_eq!(&three * &three.inv().unwrap(), f.one());
    }

    #[test]
    fn rationals_stay_reduced() {
        let q = Field::Rational;
        let a = parse_scalar("2/4", q).unwrap();
        assert_eq!(a.to_string(), "1/2");
        assert_eq!((&a + &a).to_string(), "1");
        assert!(parse_scalar("1/0", q).is_err());
    }

    #[test]
    fn ratio_into_prime_field() {
        let f = Field::Prime(3);
        assert_eq!(parse_scalar("1/2", f).unwrap(), f.from_i64(2));
        assert!(matches!(
            parse_scalar("1/3", f),
            Err(ArithError::DivisionByZero)
        ));
    }

    #[test]
    #[should_panic(expected = "never mix")]
    fn mixing_fields_panics() {
        let _ = &Field::Prime(2).one() + &Field::Prime(3).one();
    }
}
