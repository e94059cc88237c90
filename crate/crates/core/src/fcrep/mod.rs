//! The representation of `F_C = K[α, β : α² = β² = 0]` in `M₂(K[T])`.
//!
//! `α ↦ e12` and `β ↦ T·e21`. Units of `F_C` then give matrices with constant
//! determinant, and substituting them into a Laurent polynomial yields a matrix
//! polynomial whose nonvanishing certifies that `f` is not an identity of the
//! unit group.

mod extract;
mod thekey;

pub use extract::{extract_g, p1_fails_on_fc, Extraction, SigmaTau};
pub use thekey::{
    satisfies, thekey_solve, thekey_solve_with, ConditionRow, RatFunc, Relation, ThekeyReport,
    DEFAULT_CONJUGATORS,
};

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactalg::{ArithError, DenseMatrix, Field, FieldElem, Mat2K, Mat2Poly, Ring, UniPoly};
use crate::expand::{ExpandError, NCPoly};
use crate::laurent::{eval_word_in, LaurentError, LaurentPoly, Transform};
use crate::words::{Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FcError {
    #[error("matrix is not in the image of F_C: {0}")]
    DecompositionFailure(String),
    #[error("the identity letter has no table entry")]
    InvalidLetter,
    #[error("every conjugate up to length {0} stays in L (inconclusive)")]
    StillInL(usize),
    #[error("no (sigma, tau) gives a nonzero product")]
    NoSigmaTau,
    #[error("operation needs a nonzero polynomial")]
    ZeroPolynomial,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("word uses {0} variables; reduce to two variables first")]
    TooManyVariables(u32),
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    #[error(transparent)]
    Expr(#[from] ExpandError),
}

/// `[[x + T·A, B], [T·C, x + T·D]]`, the general shape of `φ(F_C)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FCMat {
    pub x: FieldElem,
    pub a: UniPoly,
    pub b: UniPoly,
    pub c: UniPoly,
    pub d: UniPoly,
}

impl FCMat {
    pub fn zero(field: Field) -> Self {
        let z = UniPoly::zero(field);
        FCMat {
            x: field.zero(),
            a: z.clone(),
            b: z.clone(),
            c: z.clone(),
            d: z,
        }
    }

    pub fn to_mat(&self) -> Mat2Poly {
        let x = UniPoly::constant(self.x.clone());
        Mat2Poly::new(
            &x + &self.a.shift(1),
            self.b.clone(),
            self.c.shift(1),
            &x + &self.d.shift(1),
        )
    }

    pub fn from_mat(m: &Mat2Poly) -> Result<FCMat, FcError> {
        let x = m.get(0, 0).coeff(0);
        if m.get(1, 1).coeff(0) != x {
            return Err(FcError::DecompositionFailure(
                "diagonal constant terms differ".into(),
            ));
        }
        let xc = UniPoly::constant(x.clone());
        let div_t = |p: &UniPoly, what: &str| {
            p.unshift(1)
                .ok_or_else(|| FcError::DecompositionFailure(format!("{what} not divisible by T")))
        };
        Ok(FCMat {
            a: div_t(&(m.get(0, 0) - &xc), "(1,1) entry minus x")?,
            b: m.get(0, 1).clone(),
            c: div_t(m.get(1, 0), "(2,1) entry")?,
            d: div_t(&(m.get(1, 1) - &xc), "(2,2) entry minus x")?,
            x,
        })
    }

    pub fn field(&self) -> Field {
        self.x.field()
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero()
            && self.a.is_zero()
            && self.b.is_zero()
            && self.c.is_zero()
            && self.d.is_zero()
    }
}

impl fmt::Display for FCMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "x={}, A={}, B={}, C={}, D={}",
            self.x, self.a, self.b, self.c, self.d
        )
    }
}

/// `φ(α) = e12`.
pub fn phi_alpha(field: Field) -> Mat2Poly {
    Mat2Poly::from_i64s(field, [&[], &[1], &[], &[]])
}

/// `φ(β) = T·e21`.
pub fn phi_beta(field: Field) -> Mat2Poly {
    Mat2Poly::from_i64s(field, [&[], &[], &[0, 1], &[]])
}

/// `φ` on a noncommutative polynomial in `α` (variable 0) and `β` (variable 1).
pub fn phi_mat(expr: &NCPoly) -> Result<Mat2Poly, FcError> {
    let field = expr.field();
    Ok(expr.eval(
        &Mat2Poly::identity(field),
        &[phi_alpha(field), phi_beta(field)],
    )?)
}

pub fn phi_eval(expr: &NCPoly) -> Result<FCMat, FcError> {
    FCMat::from_mat(&phi_mat(expr)?)
}

/// Parses an `α`/`β` expression and applies `φ`.
pub fn phi_parse(text: &str, field: Field) -> Result<Mat2Poly, FcError> {
    phi_mat(&NCPoly::parse_ab(text, field)?)
}

/// `s ∈ φ(L)` iff `x = 0` and `T·A + B + C + D = 0`.
pub fn in_l(m: &FCMat) -> bool {
    m.x.is_zero() && (&(&(&m.a.shift(1) + &m.b) + &m.c) + &m.d).is_zero()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum UnitKind {
    Primary,
    Alternate,
    Swapped,
}

impl UnitKind {
    pub const ALL: [UnitKind; 3] = [UnitKind::Primary, UnitKind::Alternate, UnitKind::Swapped];

    /// Factorizations of `u` and `v` as products of unipotent units.
    pub fn factorizations(self) -> (&'static str, &'static str) {
        const P_U: &str = "(1+a*b*a)*(1+b)";
        const P_V: &str = "(1+a*b*a)*(1+(1-a)*b*(1+a))";
        match self {
            UnitKind::Primary => (P_U, P_V),
            UnitKind::Alternate => ("(1+b)*(1+a*b*a)", "(1+(1-a)*b*(1+a))*(1+(1+a)*b*(1-a))"),
            UnitKind::Swapped => (P_V, P_U),
        }
    }
}

impl fmt::Display for UnitKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            UnitKind::Primary => "primary",
            UnitKind::Alternate => "alternate",
            UnitKind::Swapped => "swapped",
        })
    }
}

impl std::str::FromStr for UnitKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "primary" => Ok(UnitKind::Primary),
            "alternate" => Ok(UnitKind::Alternate),
            "swapped" => Ok(UnitKind::Swapped),
            other => Err(format!(
                "unknown unit pair `{other}` (primary|alternate|swapped)"
            )),
        }
    }
}

/// Images of the units substituted for `X` and `Y`, with exact inverses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitPair {
    pub kind: UnitKind,
    pub u: Mat2Poly,
    pub v: Mat2Poly,
    pub u_inv: Mat2Poly,
    pub v_inv: Mat2Poly,
}

impl UnitPair {
    pub fn field(&self) -> Field {
        self.u.field()
    }

    pub fn values(&self) -> [(Mat2Poly, Mat2Poly); 2] {
        [
            (self.u.clone(), self.u_inv.clone()),
            (self.v.clone(), self.v_inv.clone()),
        ]
    }
}

pub fn unit_pair(kind: UnitKind, field: Field) -> UnitPair {
    let (fu, fv) = kind.factorizations();
    let u = phi_parse(fu, field).expect("shipped factorization parses");
    let v = phi_parse(fv, field).expect("shipped factorization parses");
    if kind == UnitKind::Primary {
        debug_assert_eq!(
            u,
            Mat2Poly::from_i64s(field, [&[1, 0, 1], &[0, 1], &[0, 1], &[1]])
        );
        debug_assert_eq!(
            v,
            Mat2Poly::from_i64s(field, [&[1, -1, 1], &[0, 0, 1], &[0, 1], &[1, 1]])
        );
    }
    let u_inv = u.inverse().expect("unit of F_C");
    let v_inv = v.inverse().expect("unit of F_C");
    UnitPair {
        kind,
        u,
        v,
        u_inv,
        v_inv,
    }
}

/// `Φ(w)`: the word evaluated at the unit pair.
pub fn eval_word(w: &Word, up: &UnitPair) -> Result<Mat2Poly, FcError> {
    if w.rank() > 2 {
        return Err(FcError::TooManyVariables(w.rank()));
    }
    Ok(eval_word_in(
        w,
        &Mat2Poly::identity(up.field()),
        &up.values(),
    ))
}

/// `Φ(f) = Σ f_w Φ(w)`; a nonzero value certifies that `f` is not an identity.
pub fn eval_laurent(f: &LaurentPoly, up: &UnitPair) -> Result<Mat2Poly, FcError> {
    let mut acc = Mat2Poly::zero(up.field());
    for (w, c) in f.terms() {
        acc = acc.plus(&eval_word(w, up)?.scaled(c));
    }
    Ok(acc)
}

/// Sign-free leading coefficient of `Φ(w)` keyed by the first and last letters.
pub fn table_leading_term(b: Letter, e: Letter, field: Field) -> Result<Mat2K, FcError> {
    let row = match b {
        Letter::X | Letter::Y => 0,
        Letter::XInv => 1,
        Letter::YInv => 2,
        Letter::One => return Err(FcError::InvalidLetter),
    };
    let col = match e {
        Letter::X => 0,
        Letter::XInv | Letter::YInv => 1,
        Letter::Y => 2,
        Letter::One => return Err(FcError::InvalidLetter),
    };
    let cells: [[[i64; 4]; 3]; 3] = [
        [[1, 0, 0, 0], [0, 1, 0, 0], [1, 1, 0, 0]],
        [[0, 0, 1, 0], [0, 0, 0, 1], [0, 0, 1, 1]],
        [[-1, 0, 1, 0], [0, -1, 0, 1], [-1, -1, 1, 1]],
    ];
    Ok(Mat2K::from_i64s(field, cells[row][col]))
}

/// How a polynomial was shown not to be an identity of `U(F_C)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// Nonzero obstruction matrix of `f` or of a transform of `f`.
    Obstruction {
        transform: Option<Transform>,
        matrix: Mat2K,
    },
    /// Nonzero evaluation at a unit pair.
    Evaluation { units: UnitKind, value: Mat2Poly },
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::Obstruction {
                transform: None,
                matrix,
            } => write!(f, "obstruction matrix {matrix}"),
            Certificate::Obstruction {
                transform: Some(t),
                matrix,
            } => write!(f, "obstruction matrix of {t}: {matrix}"),
            Certificate::Evaluation { units, value } => {
                write!(f, "evaluation at the {units} unit pair: {value}")
            }
        }
    }
}

/// The transforms tried after the plain obstruction fails.
pub fn falsifier_transforms(f: &LaurentPoly) -> Vec<Transform> {
    let mut out = vec![Transform::SwapXY, Transform::InvertX, Transform::InvertY];
    for w in f.support().filter(|w| !w.is_identity()) {
        out.push(Transform::LeftMul(w.inv()));
        out.push(Transform::RightMul(w.inv()));
    }
    out
}

fn nonzero_obstruction(f: &LaurentPoly) -> Option<Mat2K> {
    f.obstruction_matrix().ok().filter(|m| !m.is_zero())
}

/// Runs the falsifier chain; `None` means no obstruction was found.
pub fn falsify(f: &LaurentPoly) -> Result<Option<Certificate>, FcError> {
    if f.is_zero() {
        return Ok(None);
    }
    if f.nvars() > 2 {
        return Err(FcError::TooManyVariables(f.nvars()));
    }
    if let Some(matrix) = nonzero_obstruction(f) {
        return Ok(Some(Certificate::Obstruction {
            transform: None,
            matrix,
        }));
    }
    for t in falsifier_transforms(f) {
        if let Some(matrix) = nonzero_obstruction(&f.transform(&t)) {
            return Ok(Some(Certificate::Obstruction {
                transform: Some(t),
                matrix,
            }));
        }
    }
    for kind in UnitKind::ALL {
        let value = eval_laurent(f, &unit_pair(kind, f.field()))?;
        if !value.is_zero() {
            return Ok(Some(Certificate::Evaluation { units: kind, value }));
        }
    }
    Ok(None)
}

/// `1, α, β, αβ, βα, αβα, βαβ, …` up to the given length.
pub fn alternating_basis(field: Field, max_len: usize) -> Vec<NCPoly> {
    let mut out = vec![NCPoly::one(field)];
    for len in 1..=max_len {
        for start in 0..2u32 {
            let mono = (0..len as u32).map(|i| (start + i) % 2).collect();
            out.push(NCPoly::monomial(mono, field.one()));
        }
    }
    out
}

/// Rank of the `φ`-images of the alternating basis, flattened to coefficient vectors.
pub fn alternating_basis_rank(field: Field, max_len: usize) -> (usize, usize) {
    let basis = alternating_basis(field, max_len);
    let images: Vec<Mat2Poly> = basis
        .iter()
        .map(|p| phi_mat(p).expect("two variables"))
        .collect();
    let width = images
        .iter()
        .filter_map(Mat2Poly::degree)
        .max()
        .unwrap_or(0)
        + 1;
    let rows = images
        .iter()
        .map(|m| {
            (0..4)
                .flat_map(|k| (0..width).map(move |d| (k, d)))
                .map(|(k, d)| m.get(k / 2, k % 2).coeff(d))
                .collect()
        })
        .collect();
    (DenseMatrix::from_rows(field, rows).rank(), basis.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::word_invariants;
    use proptest::prelude::*;

    const Q: Field = Field::Rational;

    fn p(field: Field, c: &[i64]) -> UniPoly {
        UniPoly::from_i64s(field, c)
    }

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn phi_examples() {
        let a = phi_eval(&NCPoly::parse_ab("a", Q).unwrap()).unwrap();
        assert_eq!(a.b, p(Q, &[1]));
        assert!(a.x.is_zero() && a.a.is_zero() && a.c.is_zero() && a.d.is_zero());
        let ab = phi_eval(&NCPoly::parse_ab("a*b", Q).unwrap()).unwrap();
        assert_eq!(ab.a, p(Q, &[1]));
        assert!(ab.b.is_zero() && ab.c.is_zero() && ab.d.is_zero());
        assert!(phi_eval(&NCPoly::parse_ab("a^2", Q).unwrap())
            .unwrap()
            .is_zero());
        assert!(phi_eval(&NCPoly::parse_ab("b*b", Q).unwrap())
            .unwrap()
            .is_zero());
    }

    #[test]
    fn decomposition_failure() {
        let bad = Mat2Poly::from_i64s(Q, [&[1], &[], &[], &[2]]);
        assert!(matches!(
            FCMat::from_mat(&bad),
            Err(FcError::DecompositionFailure(_))
        ));
        let bad = Mat2Poly::from_i64s(Q, [&[], &[], &[1], &[]]);
        assert!(FCMat::from_mat(&bad).is_err());
    }

    #[test]
    fn primary_pair_matches_display() {
        for field in [Q, Field::Prime(2), Field::Prime(5)] {
            let up = unit_pair(UnitKind::Primary, field);
            assert_eq!(
                up.u,
                Mat2Poly::from_i64s(field, [&[1, 0, 1], &[0, 1], &[0, 1], &[1]])
            );
            assert_eq!(
                up.v,
                Mat2Poly::from_i64s(field, [&[1, -1, 1], &[0, 0, 1], &[0, 1], &[1, 1]])
            );
            // 1 + (e12+e21)T + e11T² and 1 + (e21+e22-e11)T + (e11+e12)T²
            let t = UniPoly::t(field);
            let t2 = t.pow(2);
            let e = |i, j| Mat2Poly::from_coeff_matrix(&Mat2K::unit(field, i, j), 0);
            let id = Mat2Poly::identity(field);
            let tm = |m: Mat2Poly, s: &UniPoly| m.map(|x| x * s);
            let u_disp = id
                .plus(&tm(e(1, 2).plus(&e(2, 1)), &t))
                .plus(&tm(e(1, 1), &t2));
            let v_disp = id
                .plus(&tm(e(2, 1).plus(&e(2, 2)).minus(&e(1, 1)), &t))
                .plus(&tm(e(1, 1).plus(&e(1, 2)), &t2));
            assert_eq!(up.u, u_disp);
            assert_eq!(up.v, v_disp);
        }
    }

    #[test]
    fn pairs_are_units_with_unit_determinant() {
        for field in [Q, Field::Prime(2), Field::Prime(3)] {
            for kind in UnitKind::ALL {
                let up = unit_pair(kind, field);
                let id = Mat2Poly::identity(field);
                assert_eq!(up.u.times(&up.u_inv), id);
                assert_eq!(up.v.times(&up.v_inv), id);
                assert_eq!(up.u.det(), UniPoly::one(field));
                assert_eq!(up.v.det(), UniPoly::one(field));
            }
        }
        let sw = unit_pair(UnitKind::Swapped, Q);
        let pr = unit_pair(UnitKind::Primary, Q);
        assert_eq!((sw.u, sw.v), (pr.v, pr.u));
    }

    #[test]
    fn inverses_agree_with_factorwise_series() {
        // (1+n)^-1 = 1 - n for the square-zero factors used
        for kind in [UnitKind::Primary, UnitKind::Alternate] {
            let (fu, fv) = kind.factorizations();
            let inv_text = |s: &str| {
                let factors: Vec<String> = s
                    .strip_prefix('(')
                    .and_then(|s| s.strip_suffix(')'))
                    .unwrap()
                    .split(")*(")
                    .map(|f| format!("(1-({}))", &f[2..]))
                    .collect();
                factors.into_iter().rev().collect::<Vec<_>>().join("*")
            };
            let up = unit_pair(kind, Q);
            assert_eq!(phi_parse(&inv_text(fu), Q).unwrap(), up.u_inv);
            assert_eq!(phi_parse(&inv_text(fv), Q).unwrap(), up.v_inv);
        }
    }

    #[test]
    fn eval_word_examples() {
        let up = unit_pair(UnitKind::Primary, Q);
        assert_eq!(
            eval_word(&Word::identity(), &up).unwrap(),
            Mat2Poly::identity(Q)
        );
        assert_eq!(eval_word(&w("X"), &up).unwrap(), up.u);
        let yx = eval_word(&w("Y^-1*X"), &up).unwrap();
        assert_eq!(
            yx,
            Mat2Poly::from_i64s(Q, [&[1, 1, 1], &[0, 1], &[0, 0, -1], &[1, -1]])
        );
        assert_eq!(yx.leading_coeff_at(2), Mat2K::from_i64s(Q, [1, 0, -1, 0]));
        assert!(eval_word(&w("X3"), &up).is_err());
    }

    #[test]
    fn table_examples() {
        assert_eq!(
            table_leading_term(Letter::X, Letter::X, Q).unwrap(),
            Mat2K::unit(Q, 1, 1)
        );
        assert_eq!(
            table_leading_term(Letter::XInv, Letter::Y, Q).unwrap(),
            Mat2K::from_i64s(Q, [0, 0, 1, 1])
        );
        assert_eq!(
            table_leading_term(Letter::YInv, Letter::XInv, Q).unwrap(),
            Mat2K::from_i64s(Q, [0, -1, 0, 1])
        );
        assert_eq!(
            table_leading_term(Letter::One, Letter::X, Q),
            Err(FcError::InvalidLetter)
        );
    }

    #[test]
    fn eval_laurent_examples() {
        let up = unit_pair(UnitKind::Primary, Q);
        let comm = LaurentPoly::parse("X*Y - Y*X", Q).unwrap();
        let v = eval_laurent(&comm, &up).unwrap();
        assert_eq!(v.degree(), Some(4));
        assert_eq!(v.leading_coeff_at(4), Mat2K::unit(Q, 1, 2));
        assert!(eval_laurent(&LaurentPoly::zero(Q), &up).unwrap().is_zero());
        let xm1 = eval_laurent(&LaurentPoly::parse("X - 1", Q).unwrap(), &up).unwrap();
        assert_eq!(
            xm1,
            Mat2Poly::from_i64s(Q, [&[0, 0, 1], &[0, 1], &[0, 1], &[]])
        );
    }

    #[test]
    fn in_l_examples() {
        assert!(in_l(&FCMat::zero(Q)));
        let up = unit_pair(UnitKind::Primary, Q);
        let r = FCMat::from_mat(&up.u.minus(&Mat2Poly::identity(Q))).unwrap();
        assert_eq!(
            (r.a.clone(), r.b.clone(), r.c.clone()),
            (p(Q, &[0, 1]), p(Q, &[0, 1]), p(Q, &[1]))
        );
        assert!(r.d.is_zero());
        assert!(!in_l(&r));
        let m = FCMat {
            b: p(Q, &[1]),
            c: p(Q, &[-1]),
            ..FCMat::zero(Q)
        };
        assert!(in_l(&m));
    }

    #[test]
    fn degree_bound_primary_pair() {
        for field in [Q, Field::Prime(3)] {
            let up = unit_pair(UnitKind::Primary, field);
            for word in crate::words::words_by_c_prime(4) {
                let inv = word_invariants(&word).unwrap();
                if inv.c > 4 {
                    continue;
                }
                let m = eval_word(&word, &up).unwrap();
                assert_eq!(m.degree(), Some(2 * inv.c as usize), "{word}");
                let mut expect = table_leading_term(inv.b, inv.e, field).unwrap();
                if inv.sgn < 0 {
                    expect = expect.negate();
                }
                assert_eq!(m.leading_coeff_at(2 * inv.c as usize), expect, "{word}");
            }
        }
    }

    #[test]
    fn degree_bound_alternate_pair() {
        let up = unit_pair(UnitKind::Alternate, Q);
        for word in crate::words::words_by_c_prime(4) {
            let m = eval_word(&word, &up).unwrap();
            assert!(
                m.degree().unwrap_or(0) <= 2 * word.c_prime() as usize,
                "{word}"
            );
        }
    }

    #[test]
    fn inverse_word_evaluates_to_inverse_matrix() {
        let up = unit_pair(UnitKind::Primary, Q);
        for word in crate::words::words_by_c_prime(3) {
            let m = eval_word(&word, &up).unwrap();
            assert_eq!(eval_word(&word.inv(), &up).unwrap(), m.inverse().unwrap());
        }
    }

    #[test]
    fn falsifier_examples() {
        for field in [Q, Field::Prime(2)] {
            for text in ["1 + X + Y", "1 + X + X^-1", "X*Y - Y*X", "X - 1", "3"] {
                let f = LaurentPoly::parse(text, field).unwrap();
                assert!(falsify(&f).unwrap().is_some(), "{text} over {field}");
            }
        }
        assert_eq!(falsify(&LaurentPoly::zero(Q)).unwrap(), None);
    }

    #[test]
    fn faithfulness_on_alternating_basis() {
        for field in [Q, Field::Prime(2)] {
            let (rank, n) = alternating_basis_rank(field, 8);
            assert_eq!(n, 17);
            assert_eq!(rank, 17);
        }
    }

    fn arb_fcmat() -> impl Strategy<Value = FCMat> {
        let coeffs = || proptest::collection::vec(-3i64..=3, 0..4);
        (-3i64..=3, coeffs(), coeffs(), coeffs(), coeffs()).prop_map(|(x, a, b, c, d)| FCMat {
            x: Q.from_i64(x),
            a: p(Q, &a),
            b: p(Q, &b),
            c: p(Q, &c),
            d: p(Q, &d),
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn image_is_closed(m in arb_fcmat(), n in arb_fcmat()) {
            let (a, b) = (m.to_mat(), n.to_mat());
            prop_assert_eq!(FCMat::from_mat(&a).unwrap(), m);
            prop_assert!(FCMat::from_mat(&a.times(&b)).is_ok());
            prop_assert!(FCMat::from_mat(&a.plus(&b)).is_ok());
        }
    }
}
