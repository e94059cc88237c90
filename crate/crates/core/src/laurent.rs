//! Laurent polynomials in noncommuting group variables and the obstruction matrix.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::exactalg::{parse_scalar, ArithError, Field, FieldElem, Mat2K, Ring};
use crate::words::{parse_word_at, Letter, Word, WordError, X, Y};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaurentError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("coefficient denominator vanishes in the field: {0}")]
    ZeroModulus(String),
    #[error("operation needs a nonzero polynomial")]
    ZeroPolynomial,
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("polynomial uses {needed} variables but only {given} values were supplied")]
    TooFewValues { needed: u32, given: usize },
}

/// `Σ f_w w` with only nonzero coefficients stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    field: Field,
    terms: BTreeMap<Word, FieldElem>,
}

/// Substitutions and translations that preserve being an identity of a unit group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Transform {
    /// `f(Y, X)`
    SwapXY,
    /// `f(X^-1, Y)`
    InvertX,
    /// `f(X, Y^-1)`
    InvertY,
    /// `w f`
    LeftMul(Word),
    /// `f w`
    RightMul(Word),
}

impl fmt::Display for Transform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Transform::SwapXY => write!(f, "f(Y,X)"),
            Transform::InvertX => write!(f, "f(X^-1,Y)"),
            Transform::InvertY => write!(f, "f(X,Y^-1)"),
            Transform::LeftMul(w) => write!(f, "({w})*f"),
            Transform::RightMul(w) => write!(f, "f*({w})"),
        }
    }
}

impl LaurentPoly {
    pub fn zero(field: Field) -> Self {
        LaurentPoly {
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: FieldElem) -> Self {
        Self::monomial(Word::identity(), c)
    }

    pub fn monomial(w: Word, c: FieldElem) -> Self {
        let mut p = Self::zero(c.field());
        p.add_term(w, c);
        p
    }

    pub fn from_terms(field: Field, terms: impl IntoIterator<Item = (Word, FieldElem)>) -> Self {
        let mut p = Self::zero(field);
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn add_term(&mut self, w: Word, c: FieldElem) {
        assert_eq!(c.field(), self.field, "coefficient from another field");
        let entry = self.terms.entry(w).or_insert_with(|| self.field.zero());
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Word, FieldElem> {
        &self.terms
    }

    pub fn coeff(&self, w: &Word) -> FieldElem {
        self.terms
            .get(w)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn support(&self) -> impl Iterator<Item = &Word> {
        self.terms.keys()
    }

    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    /// Number of variables actually used (highest generator index plus one).
    pub fn nvars(&self) -> u32 {
        self.terms.keys().map(Word::rank).max().unwrap_or(0)
    }

    pub fn is_two_variable(&self) -> bool {
        self.nvars() <= 2
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        self.add(&other.scale(&self.field.from_i64(-1)))
    }

    pub fn scale(&self, c: &FieldElem) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.field,
            self.terms.iter().map(|(w, a)| (w.clone(), a * c)),
        )
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero(self.field);
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                out.add_term(w1.mul(w2), c1 * c2);
            }
        }
        out
    }

    /// Sum of coefficients, i.e. the value at `X_i = 1`.
    pub fn augmentation(&self) -> FieldElem {
        self.terms
            .values()
            .fold(self.field.zero(), |acc, c| &acc + c)
    }

    /// Applies a word map to every support element.
    pub fn map_words(&self, f: impl Fn(&Word) -> Word) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.field,
            self.terms.iter().map(|(w, c)| (f(w), c.clone())),
        )
    }

    pub fn transform(&self, kind: &Transform) -> LaurentPoly {
        match kind {
            Transform::SwapXY => self.map_words(|w| {
                w.substitute(|g| match g {
                    X => Word::gen(Y, 1),
                    Y => Word::gen(X, 1),
                    other => Word::gen(other, 1),
                })
            }),
            Transform::InvertX => {
                self.map_words(|w| w.substitute(|g| Word::gen(g, if g == X { -1 } else { 1 })))
            }
            Transform::InvertY => {
                self.map_words(|w| w.substitute(|g| Word::gen(g, if g == Y { -1 } else { 1 })))
            }
            Transform::LeftMul(u) => self.map_words(|w| u.mul(w)),
            Transform::RightMul(u) => self.map_words(|w| w.mul(u)),
        }
    }

    /// Embeds into two variables with `X_i ↦ X^i Y X^-i`.
    pub fn reduce_to_two_vars(&self) -> LaurentPoly {
        self.map_words(|w| {
            w.substitute(|g| {
                let k = g as i64 + 1;
                Word::gen(X, k).mul(&Word::gen(Y, 1)).mul(&Word::gen(X, -k))
            })
        })
    }

    pub fn max_cumulus(&self) -> Result<u64, LaurentError> {
        let mut best = None;
        for w in self.terms.keys() {
            let c = w.invariants()?.c;
            best = best.max(Some(c));
        }
        best.ok_or(LaurentError::ZeroPolynomial)
    }

    /// Max of `C'` over the support (0 for the zero polynomial).
    pub fn max_c_prime(&self) -> u64 {
        self.terms.keys().map(Word::c_prime).max().unwrap_or(0)
    }

    /// The sixteen signed partial sums `f_{b,e}` over words of maximal cumulus.
    pub fn partial_sums(&self) -> Result<BTreeMap<(Letter, Letter), FieldElem>, LaurentError> {
        let c = self.max_cumulus()?;
        let mut sums: BTreeMap<(Letter, Letter), FieldElem> = Letter::ALL
            .iter()
            .flat_map(|&b| Letter::ALL.iter().map(move |&e| (b, e)))
            .map(|k| (k, self.field.zero()))
            .collect();
        for (w, coeff) in &self.terms {
            let inv = w.invariants()?;
            if inv.c != c || w.is_identity() {
                continue;
            }
            let signed = if inv.sgn < 0 { -coeff } else { coeff.clone() };
            let slot = sums
                .get_mut(&(inv.b, inv.e))
                .expect("all letter pairs present");
            *slot = &*slot + &signed;
        }
        Ok(sums)
    }

    /// `[[f1, f2], [f3, f4]]`; nonzero certifies `f` is not an identity of `U(F_C)`.
    pub fn obstruction_matrix(&self) -> Result<Mat2K, LaurentError> {
        use Letter::{XInv, YInv, X as LX, Y as LY};
        let s = self.partial_sums()?;
        let sum = |plus: &[(Letter, Letter)], minus: &[(Letter, Letter)]| {
            let p = plus.iter().fold(self.field.zero(), |acc, k| &acc + &s[k]);
            minus.iter().fold(p, |acc, k| &acc - &s[k])
        };
        let f1 = sum(
            &[(LX, LX), (LX, LY), (LY, LX), (LY, LY)],
            &[(YInv, LX), (YInv, LY)],
        );
        let f2 = sum(
            &[
                (LX, XInv),
                (LX, LY),
                (LX, YInv),
                (LY, XInv),
                (LY, LY),
                (LY, YInv),
            ],
            &[(YInv, XInv), (YInv, LY), (YInv, YInv)],
        );
        let f3 = sum(&[(XInv, LX), (XInv, LY), (YInv, LX), (YInv, LY)], &[]);
        let f4 = sum(
            &[
                (XInv, XInv),
                (XInv, LY),
                (XInv, YInv),
                (YInv, XInv),
                (YInv, LY),
                (YInv, YInv),
            ],
            &[],
        );
        Ok(Mat2K::new(f1, f2, f3, f4))
    }

    /// Substitutes ring values: variable `i` gets `values[i] = (unit, inverse)`.
    pub fn evaluate<R: Ring>(&self, one: &R, values: &[(R, R)]) -> Result<R, LaurentError> {
        let needed = self.nvars();
        if (needed as usize) > values.len() {
            return Err(LaurentError::TooFewValues {
                needed,
                given: values.len(),
            });
        }
        let mut acc = one.zero_like();
        for (w, c) in &self.terms {
            acc = acc.plus(&eval_word_in(w, one, values).scaled(c));
        }
        Ok(acc)
    }

    /// Parses signed terms `coeff*word`, e.g. `X*Y - Y*X` or `1 + 2*X^-1*Y`.
    pub fn parse(text: &str, field: Field) -> Result<LaurentPoly, LaurentError> {
        Parser { text, pos: 0 }.parse(field)
    }
}

/// Product of unit powers along the blocks of `w`.
pub fn eval_word_in<R: Ring>(w: &Word, one: &R, values: &[(R, R)]) -> R {
    let mut acc = one.clone();
    for b in w.blocks() {
        let (u, u_inv) = &values[b.gen as usize];
        let base = if b.exp > 0 { u } else { u_inv };
        acc = acc.times(&base.pow(b.exp.unsigned_abs()));
    }
    acc
}

pub fn parse_laurent(text: &str, field: Field) -> Result<LaurentPoly, LaurentError> {
    LaurentPoly::parse(text, field)
}

pub fn max_cumulus(f: &LaurentPoly) -> Result<u64, LaurentError> {
    f.max_cumulus()
}

pub fn obstruction_matrix(f: &LaurentPoly) -> Result<Mat2K, LaurentError> {
    f.obstruction_matrix()
}

pub fn transform(f: &LaurentPoly, kind: &Transform) -> LaurentPoly {
    f.transform(kind)
}

pub fn reduce_to_two_vars(f: &LaurentPoly) -> LaurentPoly {
    f.reduce_to_two_vars()
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<u8> {
        self.text.as_bytes().get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn err(&self, message: &str) -> LaurentError {
        LaurentError::Syntax {
            offset: self.pos,
            message: message.to_string(),
        }
    }

    fn number(&mut self) -> &str {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.peek() == Some(b'/') {
            self.pos += 1;
            while self.peek().is_some_and(|b| b.is_ascii_digit()) {
                self.pos += 1;
            }
        }
        &self.text[start..self.pos]
    }

    fn parse(mut self, field: Field) -> Result<LaurentPoly, LaurentError> {
        let mut out = LaurentPoly::zero(field);
        let mut first = true;
        loop {
            self.skip_ws();
            if self.peek().is_none() {
                if first {
                    return Err(self.err("empty expression"));
                }
                break;
            }
            let mut negative = false;
            match self.peek() {
                Some(b'+') => self.pos += 1,
                Some(b'-') => {
                    negative = true;
                    self.pos += 1
                }
                _ if first => {}
                _ => return Err(self.err("expected `+` or `-` between terms")),
            }
            first = false;
            self.skip_ws();
            let mut coeff = None;
            // a leading `1` directly followed by nothing word-like is a coefficient
            if self.peek().is_some_and(|b| b.is_ascii_digit()) {
                let at = self.pos;
                let lit = self.number().to_string();
                if lit.ends_with('/') {
                    return Err(LaurentError::Syntax {
                        offset: self.pos,
                        message: "expected a denominator".into(),
                    });
                }
                coeff = Some(parse_scalar(&lit, field).map_err(|e| match e {
                    ArithError::DivisionByZero => LaurentError::ZeroModulus(lit.clone()),
                    _ => LaurentError::Syntax {
                        offset: at,
                        message: format!("bad coefficient `{lit}`"),
                    },
                })?);
                self.skip_ws();
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                    self.skip_ws();
                    if !matches!(self.peek(), Some(b'X' | b'Y' | b'1')) {
                        return Err(self.err("expected a word after `*`"));
                    }
                }
            }
            let word = if matches!(self.peek(), Some(b'X' | b'Y' | b'1')) {
                let (w, end) = parse_word_at(self.text, self.pos)?;
                self.pos = end;
                w
            } else if coeff.is_some() {
                Word::identity()
            } else {
                return Err(self.err("expected a coefficient or a word"));
            };
            self.skip_ws();
            if !matches!(self.peek(), None | Some(b'+' | b'-')) {
                return Err(self.err("unexpected character"));
            }
            let mut c = coeff.unwrap_or_else(|| field.one());
            if negative {
                c = -c;
            }
            out.add_term(word, c);
        }
        Ok(out)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative_literal();
            let abs = if neg { -c } else { c.clone() };
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if w.is_identity() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{w}")?;
            } else {
                write!(f, "{abs}*{w}")?;
            }
        }
        Ok(())
    }
}
