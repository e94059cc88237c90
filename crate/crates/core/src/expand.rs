//! Noncommutative polynomials and the expansion `X_i ↦ 1 + X_i T_i`.
//!
//! A Laurent polynomial is expanded into a truncated series whose coefficient of
//! `T_1^{i_1}⋯T_n^{i_n}` is a homogeneous noncommutative polynomial of degree
//! `i_j` in `X_j`. Inverses expand as geometric series. Because the `T_i`
//! commute with everything, the multidegree of a component is read off the
//! variable counts of its monomials.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::exactalg::{parse_scalar, Field, FieldElem, Ring};
use crate::laurent::LaurentPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExpandError {
    #[error("every component vanishes up to total degree {0}; raise the truncation")]
    AllZero(usize),
    #[error("polynomial uses {needed} variables but {given} values were supplied")]
    DimensionMismatch { needed: usize, given: usize },
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
}

/// Noncommutative polynomial: monomials are variable-index sequences.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NCPoly {
    field: Field,
    terms: BTreeMap<Vec<u32>, FieldElem>,
}

impl NCPoly {
    pub fn zero(field: Field) -> Self {
        NCPoly {
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(field: Field) -> Self {
        Self::monomial(Vec::new(), field.one())
    }

    pub fn var(field: Field, i: u32) -> Self {
        Self::monomial(vec![i], field.one())
    }

    pub fn monomial(mono: Vec<u32>, c: FieldElem) -> Self {
        let mut p = Self::zero(c.field());
        p.add_term(mono, c);
        p
    }

    pub fn add_term(&mut self, mono: Vec<u32>, c: FieldElem) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&mono) {
            Some(v) => {
                *v = &*v + &c;
                if v.is_zero() {
                    self.terms.remove(&mono);
                }
            }
            None => {
                self.terms.insert(mono, c);
            }
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, FieldElem> {
        &self.terms
    }

    pub fn coeff(&self, mono: &[u32]) -> FieldElem {
        self.terms
            .get(mono)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    /// Highest variable index used, plus one.
    pub fn nvars(&self) -> usize {
        self.terms
            .keys()
            .flat_map(|m| m.iter())
            .map(|&v| v as usize + 1)
            .max()
            .unwrap_or(0)
    }

    pub fn total_degree(&self) -> Option<usize> {
        self.terms.keys().map(Vec::len).max()
    }

    /// Product dropping monomials of total degree above `bound`.
    pub fn times_truncated(&self, other: &NCPoly, bound: usize) -> NCPoly {
        let mut out = NCPoly::zero(self.field);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                if m1.len() + m2.len() > bound {
                    continue;
                }
                let mut m = m1.clone();
                m.extend_from_slice(m2);
                out.add_term(m, c1 * c2);
            }
        }
        out
    }

    /// Keeps only monomials of total degree `<= bound`.
    pub fn truncate(&self, bound: usize) -> NCPoly {
        NCPoly {
            field: self.field,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.len() <= bound)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Variable counts of a monomial, padded to `nvars`.
    pub fn multidegree_of(mono: &[u32], nvars: usize) -> Vec<usize> {
        let mut d = vec![0; nvars.max(mono.iter().map(|&v| v as usize + 1).max().unwrap_or(0))];
        for &v in mono {
            d[v as usize] += 1;
        }
        d
    }

    /// Substitutes ring values for the variables.
    pub fn eval<R: Ring>(&self, one: &R, values: &[R]) -> Result<R, ExpandError> {
        let needed = self.nvars();
        if needed > values.len() {
            return Err(ExpandError::DimensionMismatch {
                needed,
                given: values.len(),
            });
        }
        let mut acc = one.zero_like();
        for (m, c) in &self.terms {
            let prod = m
                .iter()
                .fold(one.clone(), |p, &v| p.times(&values[v as usize]));
            acc = acc.plus(&prod.scaled(c));
        }
        Ok(acc)
    }

    /// Renders with custom variable names, graded-lexicographic term order.
    pub fn render(&self, name: &dyn Fn(u32) -> String) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut keys: Vec<&Vec<u32>> = self.terms.keys().collect();
        keys.sort_by(|a, b| (a.len(), *a).cmp(&(b.len(), *b)));
        let mut out = String::new();
        for (i, m) in keys.into_iter().enumerate() {
            let c = &self.terms[m];
            let neg = c.is_negative_literal();
            let abs = if neg { -c } else { c.clone() };
            out.push_str(match (i, neg) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            });
            let mono = m.iter().map(|&v| name(v)).collect::<Vec<_>>().join("*");
            if m.is_empty() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{abs}*{mono}"));
            }
        }
        out
    }

    /// Parses `+ - * ^ ( )` expressions over identifiers resolved by `ident`.
    pub fn parse_with(
        text: &str,
        field: Field,
        ident: &dyn Fn(&str) -> Option<u32>,
    ) -> Result<NCPoly, ExpandError> {
        let mut p = ExprParser {
            text,
            pos: 0,
            field,
            ident,
        };
        let out = p.expr()?;
        p.skip_ws();
        if p.pos != text.len() {
            return Err(p.err("unexpected trailing input"));
        }
        Ok(out)
    }

    /// Expressions in `a`/`b` (or `α`/`β`), the generators of `F_C`.
    pub fn parse_ab(text: &str, field: Field) -> Result<NCPoly, ExpandError> {
        Self::parse_with(text, field, &|s| match s {
            "a" | "α" => Some(0),
            "b" | "β" => Some(1),
            _ => None,
        })
    }

    pub fn render_ab(&self) -> String {
        self.render(&|v| if v == 0 { "a".into() } else { "b".into() })
    }
}

fn default_name(nvars: usize) -> impl Fn(u32) -> String {
    move |v| {
        if nvars <= 2 {
            if v == 0 { "X" } else { "Y" }.to_string()
        } else {
            format!("X{}", v + 1)
        }
    }
}

impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&default_name(self.nvars())))
    }
}

impl Ring for NCPoly {
    fn zero_like(&self) -> Self {
        NCPoly::zero(self.field)
    }
    fn one_like(&self) -> Self {
        NCPoly::one(self.field)
    }
    fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negate())
    }
    fn times(&self, other: &Self) -> Self {
        self.times_truncated(other, usize::MAX)
    }
    fn negate(&self) -> Self {
        self.scaled(&self.field.from_i64(-1))
    }
    fn scaled(&self, c: &FieldElem) -> Self {
        let mut out = NCPoly::zero(self.field);
        for (m, a) in &self.terms {
            out.add_term(m.clone(), a * c);
        }
        out
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

struct ExprParser<'a> {
    text: &'a str,
    pos: usize,
    field: Field,
    ident: &'a dyn Fn(&str) -> Option<u32>,
}

impl ExprParser<'_> {
    fn rest(&self) -> &str {
        &self.text[self.pos..]
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += self.peek().unwrap().len_utf8();
        }
    }

    fn err(&self, message: &str) -> ExpandError {
        ExpandError::Syntax {
            offset: self.pos,
            message: message.to_string(),
        }
    }

    fn expr(&mut self) -> Result<NCPoly, ExpandError> {
        self.skip_ws();
        let mut negative = false;
        if let Some(c @ ('+' | '-')) = self.peek() {
            negative = c == '-';
            self.pos += 1;
        }
        let mut acc = self.term()?;
        if negative {
            acc = acc.negate();
        }
        loop {
            self.skip_ws();
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    acc = acc.plus(&self.term()?);
                }
                Some('-') => {
                    self.pos += 1;
                    acc = acc.minus(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn starts_factor(&self) -> bool {
        self.peek()
            .is_some_and(|c| c == '(' || c.is_ascii_digit() || c.is_alphabetic())
    }

    fn term(&mut self) -> Result<NCPoly, ExpandError> {
        self.skip_ws();
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            if self.peek() == Some('*') {
                self.pos += 1;
                self.skip_ws();
                acc = acc.times(&self.factor()?);
            } else if self.starts_factor() {
                acc = acc.times(&self.factor()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<NCPoly, ExpandError> {
        let base = self.atom()?;
        self.skip_ws();
        if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                self.pos += 1;
            }
            let e: u64 = self.text[start..self.pos]
                .parse()
                .map_err(|_| ExpandError::Syntax {
                    offset: start,
                    message: "expected a nonnegative integer exponent".into(),
                })?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<NCPoly, ExpandError> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.skip_ws();
                if self.peek() != Some(')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                while self.peek().is_some_and(|c| c.is_ascii_digit() || c == '/') {
                    self.pos += 1;
                }
                let lit = &self.text[start..self.pos];
                let c = parse_scalar(lit, self.field).map_err(|e| ExpandError::Syntax {
                    offset: start,
                    message: e.to_string(),
                })?;
                Ok(NCPoly::monomial(Vec::new(), c))
            }
            Some(c) if c.is_alphabetic() => {
                self.pos += c.len_utf8();
                while self.peek().is_some_and(|c| c.is_ascii_digit() || c == '_') {
                    self.pos += 1;
                }
                let name = &self.text[start..self.pos];
                match (self.ident)(name) {
                    Some(v) => Ok(NCPoly::var(self.field, v)),
                    None => Err(ExpandError::Syntax {
                        offset: start,
                        message: format!("unknown variable `{name}`"),
                    }),
                }
            }
            _ => Err(self.err("expected a number, variable or `(`")),
        }
    }
}

/// Components of the expansion keyed by multidegree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries {
    pub field: Field,
    pub nvars: usize,
    pub bound: usize,
    pub components: BTreeMap<Vec<usize>, NCPoly>,
}

impl TruncSeries {
    /// The component at a multidegree, zero when absent.
    pub fn component(&self, multideg: &[usize]) -> NCPoly {
        self.components
            .get(multideg)
            .cloned()
            .unwrap_or_else(|| NCPoly::zero(self.field))
    }

    /// The scalar component at multidegree zero.
    pub fn constant_term(&self) -> FieldElem {
        self.component(&vec![0; self.nvars]).coeff(&[])
    }

    /// Checks that every stored component is homogeneous of its multidegree.
    pub fn is_well_graded(&self) -> bool {
        self.components.iter().all(|(deg, p)| {
            !p.is_zero()
                && p.terms()
                    .keys()
                    .all(|m| &NCPoly::multidegree_of(m, self.nvars) == deg)
        })
    }

    /// All components of total degree exactly `d`, summed.
    pub fn degree_part(&self, d: usize) -> NCPoly {
        self.components
            .iter()
            .filter(|(deg, _)| deg.iter().sum::<usize>() == d)
            .fold(NCPoly::zero(self.field), |acc, (_, p)| acc.plus(p))
    }
}

/// Default truncation `2 C'(f) + 2`.
pub fn default_truncation(f: &LaurentPoly) -> usize {
    2 * f.max_c_prime() as usize + 2
}

/// Expands `f` with `X_i ↦ 1 + X_i T_i`, keeping total `T`-degree `<= bound`.
pub fn expand(f: &LaurentPoly, bound: usize) -> TruncSeries {
    let field = f.field();
    let nvars = (f.nvars() as usize).max(1);
    let one = NCPoly::one(field);
    let mut total = NCPoly::zero(field);
    for (w, c) in f.terms() {
        let mut series = one.clone();
        for b in w.blocks() {
            let factor = if b.exp > 0 {
                one.plus(&NCPoly::var(field, b.gen))
            } else {
                // (1 + X)^{-1} = Σ (-1)^k X^k
                let mut geo = NCPoly::zero(field);
                for k in 0..=bound {
                    let sign = if k % 2 == 0 { 1 } else { -1 };
                    geo.add_term(vec![b.gen; k], field.from_i64(sign));
                }
                geo
            };
            for _ in 0..b.exp.unsigned_abs() {
                series = series.times_truncated(&factor, bound);
            }
        }
        total = total.plus(&series.scaled(c));
    }
    let mut components: BTreeMap<Vec<usize>, NCPoly> = BTreeMap::new();
    for (m, c) in total.terms() {
        components
            .entry(NCPoly::multidegree_of(m, nvars))
            .or_insert_with(|| NCPoly::zero(field))
            .add_term(m.clone(), c.clone());
    }
    components.retain(|_, p| !p.is_zero());
    let ts = TruncSeries {
        field,
        nvars,
        bound,
        components,
    };
    debug_assert!(ts.is_well_graded());
    ts
}

/// Smallest total degree carrying a nonzero component, with its multidegrees.
pub fn minimal_degree(ts: &TruncSeries) -> Result<(usize, Vec<Vec<usize>>), ExpandError> {
    let m = ts
        .components
        .keys()
        .map(|d| d.iter().sum::<usize>())
        .min()
        .ok_or(ExpandError::AllZero(ts.bound))?;
    let degs = ts
        .components
        .keys()
        .filter(|d| d.iter().sum::<usize>() == m)
        .cloned()
        .collect();
    Ok((m, degs))
}

/// Sum of all components of minimal total degree.
pub fn minimal_component_sum(ts: &TruncSeries) -> Result<NCPoly, ExpandError> {
    let (m, _) = minimal_degree(ts)?;
    Ok(ts.degree_part(m))
}

pub fn eval_ncpoly<R: Ring>(p: &NCPoly, one: &R, values: &[R]) -> Result<R, ExpandError> {
    p.eval(one, values)
}
