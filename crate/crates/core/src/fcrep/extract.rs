//! Reading a witness polynomial `g` off a nonvanishing evaluation.
//!
//! With `r = f(u, v) ∉ L` there are `σ ∈ {α, αβ}` and `τ ∈ {β, αβ}` with
//! `σ r τ ≠ 0`; this product is `g(αβ)` and `φ(αβ) = T·e11`, so `g` is the
//! `(1,1)` entry.

use std::fmt;

use super::{eval_laurent, in_l, phi_parse, FCMat, FcError, UnitPair};
use crate::exactalg::{eval_poly_at, Mat2Poly, Ring, UniPoly};
use crate::laurent::LaurentPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SigmaTau {
    AlphaBeta,
    AlphaAlphaBeta,
    AlphaBetaBeta,
    AlphaBetaAlphaBeta,
}

impl SigmaTau {
    /// Fixed search order.
    pub const ORDER: [SigmaTau; 4] = [
        SigmaTau::AlphaBeta,
        SigmaTau::AlphaAlphaBeta,
        SigmaTau::AlphaBetaBeta,
        SigmaTau::AlphaBetaAlphaBeta,
    ];

    pub fn exprs(self) -> (&'static str, &'static str) {
        match self {
            SigmaTau::AlphaBeta => ("a", "b"),
            SigmaTau::AlphaAlphaBeta => ("a", "a*b"),
            SigmaTau::AlphaBetaBeta => ("a*b", "b"),
            SigmaTau::AlphaBetaAlphaBeta => ("a*b", "a*b"),
        }
    }
}

impl fmt::Display for SigmaTau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (s, t) = self.exprs();
        write!(f, "sigma={s}, tau={t}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extraction {
    pub g: UniPoly,
    pub sigma_tau: SigmaTau,
    /// Conjugating unit word in `1±a`, `1±b`; empty when `r ∉ L` already.
    pub conjugator: Vec<&'static str>,
    pub r: FCMat,
}

const CONJ_UNITS: [(&str, usize); 4] = [("1+a", 1), ("1-a", 0), ("1+b", 3), ("1-b", 2)];

/// Conjugation words of length `<= bound`, shortest first, without `γ γ⁻¹` pairs.
fn conj_words(bound: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    for _ in 0..bound {
        let mut next = Vec::new();
        for w in &frontier {
            for g in 0..CONJ_UNITS.len() {
                if w.last().is_some_and(|&l: &usize| CONJ_UNITS[l].1 == g) {
                    continue;
                }
                let mut v = w.clone();
                v.push(g);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

pub fn extract_g(f: &LaurentPoly, up: &UnitPair, conj_bound: usize) -> Result<Extraction, FcError> {
    if f.is_zero() {
        return Err(FcError::PreconditionViolated(
            "f is the zero polynomial".into(),
        ));
    }
    let field = up.field();
    let r = eval_laurent(f, up)?;
    if r.is_zero() {
        return Err(FcError::PreconditionViolated(format!(
            "f vanishes at the {} unit pair",
            up.kind
        )));
    }
    let units: Vec<(Mat2Poly, Mat2Poly)> = CONJ_UNITS
        .iter()
        .map(|(s, _)| {
            let m = phi_parse(s, field).expect("unit parses");
            let inv = m.inverse().expect("unit");
            (m, inv)
        })
        .collect();
    let st: Vec<(SigmaTau, Mat2Poly, Mat2Poly)> = SigmaTau::ORDER
        .iter()
        .map(|&k| {
            let (s, t) = k.exprs();
            (
                k,
                phi_parse(s, field).unwrap(),
                phi_parse(t, field).unwrap(),
            )
        })
        .collect();
    for word in conj_words(conj_bound) {
        let (mut g, mut g_inv) = (Mat2Poly::identity(field), Mat2Poly::identity(field));
        for &i in &word {
            g = g.times(&units[i].0);
            g_inv = units[i].1.times(&g_inv);
        }
        let conj = g.times(&r).times(&g_inv);
        let fc = FCMat::from_mat(&conj)?;
        if in_l(&fc) {
            continue;
        }
        for (kind, sigma, tau) in &st {
            let prod = sigma.times(&conj).times(tau);
            if prod.is_zero() {
                continue;
            }
            let g = prod.get(0, 0).clone();
            debug_assert!(
                prod.get(0, 1).is_zero() && prod.get(1, 0).is_zero() && prod.get(1, 1).is_zero()
            );
            return Ok(Extraction {
                g,
                sigma_tau: *kind,
                conjugator: word.iter().map(|&i| CONJ_UNITS[i].0).collect(),
                r: fc,
            });
        }
        return Err(FcError::NoSigmaTau);
    }
    Err(FcError::StillInL(conj_bound))
}

/// `φ(g(αβ))`, nonzero for every nonzero `g`.
pub fn p1_fails_on_fc(g: &UniPoly) -> Result<Mat2Poly, FcError> {
    if g.is_zero() {
        return Err(FcError::ZeroPolynomial);
    }
    let ab = phi_parse("a*b", g.field())?;
    let m = eval_poly_at(g, &ab);
    debug_assert!(!m.is_zero());
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Field;
    use crate::fcrep::{unit_pair, UnitKind};

    const Q: Field = Field::Rational;

    fn lp(s: &str) -> LaurentPoly {
        LaurentPoly::parse(s, Q).unwrap()
    }

    #[test]
    fn x_minus_one_gives_t_squared() {
        let up = unit_pair(UnitKind::Primary, Q);
        let ex = extract_g(&lp("X - 1"), &up, 2).unwrap();
        assert_eq!(ex.g, UniPoly::from_i64s(Q, &[0, 0, 1]));
        assert_eq!(ex.sigma_tau, SigmaTau::AlphaAlphaBeta);
        assert!(ex.conjugator.is_empty());
    }

    #[test]
    fn commutator_gives_nonzero_g() {
        let up = unit_pair(UnitKind::Primary, Q);
        let ex = extract_g(&lp("X*Y - Y*X"), &up, 2).unwrap();
        assert!(!ex.g.is_zero());
        assert!(ex.g.coeff(0).is_zero());
    }

    #[test]
    fn zero_is_rejected() {
        let up = unit_pair(UnitKind::Primary, Q);
        assert!(matches!(
            extract_g(&LaurentPoly::zero(Q), &up, 2),
            Err(FcError::PreconditionViolated(_))
        ));
    }

    #[test]
    fn conjugation_words_skip_cancelling_pairs() {
        let w = conj_words(2);
        assert_eq!(w.len(), 1 + 4 + 12);
        assert!(!w.contains(&vec![0, 1]));
    }

    #[test]
    fn p1_on_fc() {
        let t = UniPoly::t(Q);
        assert_eq!(
            p1_fails_on_fc(&t).unwrap(),
            Mat2Poly::from_i64s(Q, [&[0, 1], &[], &[], &[]])
        );
        assert_eq!(
            p1_fails_on_fc(&UniPoly::one(Q)).unwrap(),
            Mat2Poly::identity(Q)
        );
        assert!(!p1_fails_on_fc(&UniPoly::from_i64s(Q, &[0, -1, 1]))
            .unwrap()
            .is_zero());
        assert_eq!(
            p1_fails_on_fc(&UniPoly::zero(Q)),
            Err(FcError::ZeroPolynomial)
        );
    }
}
