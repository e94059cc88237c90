//! The linear system showing that no nonzero `s` lies in `γ(L)` for every inner `γ`.
//!
//! Elements of `φ(L)` have `x = 0`, so `s = [[T·A, B], [T·C, T·D]]` and the
//! unknowns are `(A, B, C, D) ∈ K[T]⁴`. Conjugation by a unit keeps `x = 0`,
//! so each conjugator `γ` contributes one linear condition
//! `ℓ(γ s γ⁻¹) = 0` with `ℓ = T·A' + B' + C' + D'`. The solver accumulates these
//! rows and reports the solution space over `K(T)`.

use std::fmt;

use super::{phi_parse, FcError};
use crate::exactalg::{Field, FieldElem, Mat2Poly, Ring, UniPoly};

/// Conjugators tried in order. The first three reproduce the hand elimination;
/// the rest are used when those leave a nonzero space (characteristic 2).
pub const DEFAULT_CONJUGATORS: [&str; 10] = [
    "1+a",
    "1-a",
    "1+b",
    "1-b",
    "1+a*b*a",
    "1-a*b*a",
    "1+b*a*b",
    "1-b*a*b",
    "(1+a)*(1+b)",
    "(1+b)*(1+a)",
];

/// Element of `K(T)` kept as a reduced fraction with monic denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFunc {
    pub num: UniPoly,
    pub den: UniPoly,
}

impl RatFunc {
    pub fn new(num: UniPoly, den: UniPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RatFunc::from_poly(num);
        }
        let g = num.gcd(&den);
        let num = num.exact_div(&g).expect("gcd divides");
        let den = den.exact_div(&g).expect("gcd divides");
        let lc = den.leading_coeff().expect("nonzero").inv().expect("field");
        RatFunc {
            num: num.scale(&lc),
            den: den.scale(&lc),
        }
    }

    pub fn from_poly(p: UniPoly) -> Self {
        let field = p.field();
        RatFunc {
            num: p,
            den: UniPoly::one(field),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn as_poly(&self) -> Option<&UniPoly> {
        (self.den.degree() == Some(0)).then_some(&self.num)
    }

    pub fn add(&self, o: &RatFunc) -> RatFunc {
        RatFunc::new(
            &(&self.num * &o.den) + &(&o.num * &self.den),
            &self.den * &o.den,
        )
    }

    pub fn sub(&self, o: &RatFunc) -> RatFunc {
        self.add(&RatFunc::from_poly(-&o.num).with_den(&o.den))
    }

    fn with_den(mut self, den: &UniPoly) -> RatFunc {
        self.den = den.clone();
        self
    }

    pub fn mul(&self, o: &RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &o.num, &self.den * &o.den)
    }

    pub fn inv(&self) -> Option<RatFunc> {
        (!self.is_zero()).then(|| RatFunc::new(self.den.clone(), self.num.clone()))
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_poly() {
            Some(p) => write!(f, "{p}"),
            None => write!(f, "({})/({})", self.num, self.den),
        }
    }
}

/// `var = coeff · A`, the form the relations take once the space is a line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub var: char,
    pub coeff: RatFunc,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = &self.coeff;
        if c.is_zero() {
            write!(f, "{} = 0", self.var)
        } else if c.as_poly().is_some_and(|p| *p == UniPoly::one(p.field())) {
            write!(f, "{} = A", self.var)
        } else {
            write!(f, "{} = ({c})*A", self.var)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionRow {
    /// `s` itself or the conjugating unit.
    pub source: String,
    /// Coefficients of `(A, B, C, D)`.
    pub coeffs: [UniPoly; 4],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThekeyReport {
    pub field: Field,
    pub rows: Vec<ConditionRow>,
    /// Relations after the first three rows, when those leave a line.
    pub relations: Vec<Relation>,
    /// The next row restricted to that line, as a polynomial multiple of `A`.
    pub final_equation: Option<UniPoly>,
    pub rank: usize,
    /// Basis of the remaining solution space (empty means only `s = 0`).
    pub residual: Vec<[RatFunc; 4]>,
}

impl ThekeyReport {
    pub fn solution_is_zero(&self) -> bool {
        self.residual.is_empty()
    }
}

impl fmt::Display for ThekeyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "field: {}", self.field)?;
        writeln!(f, "s in L forces x = 0; unknowns (A, B, C, D)")?;
        for r in &self.rows {
            let [a, b, c, d] = &r.coeffs;
            writeln!(
                f,
                "  [{}] ({a})*A + ({b})*B + ({c})*C + ({d})*D = 0",
                r.source
            )?;
        }
        if !self.relations.is_empty() {
            let rel: Vec<String> = self.relations.iter().map(ToString::to_string).collect();
            writeln!(f, "relations: {}", rel.join(", "))?;
        }
        if let Some(eq) = &self.final_equation {
            writeln!(f, "final equation: ({eq})*A = 0")?;
        }
        writeln!(f, "rank: {}", self.rank)?;
        if self.solution_is_zero() {
            write!(f, "solution space: {{0}}")
        } else {
            write!(
                f,
                "solution space: dimension {} (not resolved)",
                self.residual.len()
            )
        }
    }
}

/// `ℓ(M) = M11 + M12 + (M21 + M22)/T` for `M` with `x = 0`.
fn ell(m: &Mat2Poly) -> UniPoly {
    let low = (m.get(1, 0) + m.get(1, 1))
        .unshift(1)
        .expect("x = 0 is preserved by conjugation");
    &(m.get(0, 0) + m.get(0, 1)) + &low
}

fn basis(field: Field) -> [Mat2Poly; 4] {
    [
        Mat2Poly::from_i64s(field, [&[0, 1], &[], &[], &[]]),
        Mat2Poly::from_i64s(field, [&[], &[1], &[], &[]]),
        Mat2Poly::from_i64s(field, [&[], &[], &[0, 1], &[]]),
        Mat2Poly::from_i64s(field, [&[], &[], &[], &[0, 1]]),
    ]
}

fn condition(field: Field, gamma: &Mat2Poly, gamma_inv: &Mat2Poly) -> [UniPoly; 4] {
    basis(field).map(|e| ell(&gamma.times(&e).times(gamma_inv)))
}

/// Reduced row echelon form over `K(T)`; returns pivot columns.
fn rref(rows: &mut [Vec<RatFunc>]) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].inv().expect("nonzero pivot");
        rows[r] = rows[r].iter().map(|v| v.mul(&inv)).collect();
        for i in 0..rows.len() {
            if i != r && !rows[i][col].is_zero() {
                let factor = rows[i][col].clone();
                rows[i] = (0..ncols)
                    .map(|c| rows[i][c].sub(&factor.mul(&rows[r][c])))
                    .collect();
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

fn kernel(rows: &[[UniPoly; 4]]) -> Vec<[RatFunc; 4]> {
    let field = rows[0][0].field();
    let mut m: Vec<Vec<RatFunc>> = rows
        .iter()
        .map(|r| r.iter().cloned().map(RatFunc::from_poly).collect())
        .collect();
    let pivots = rref(&mut m);
    let zero = RatFunc::from_poly(UniPoly::zero(field));
    let one = RatFunc::from_poly(UniPoly::one(field));
    (0..4)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v: [RatFunc; 4] = std::array::from_fn(|_| zero.clone());
            v[free] = one.clone();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = zero.sub(&m[i][free]);
            }
            v
        })
        .collect()
}

fn dot(row: &[UniPoly; 4], v: &[RatFunc; 4]) -> RatFunc {
    let field = row[0].field();
    row.iter()
        .zip(v)
        .fold(RatFunc::from_poly(UniPoly::zero(field)), |acc, (r, x)| {
            acc.add(&RatFunc::from_poly(r.clone()).mul(x))
        })
}

pub fn thekey_solve(field: Field) -> Result<ThekeyReport, FcError> {
    thekey_solve_with(field, &DEFAULT_CONJUGATORS)
}

/// Adds conditions from `s` and each conjugator until only `s = 0` remains.
pub fn thekey_solve_with(field: Field, conjugators: &[&str]) -> Result<ThekeyReport, FcError> {
    let id = Mat2Poly::identity(field);
    let mut rows = vec![ConditionRow {
        source: "s".into(),
        coeffs: condition(field, &id, &id),
    }];
    let mut relations = Vec::new();
    let mut final_equation = None;
    let mut residual = kernel(&[rows[0].coeffs.clone()]);
    for (i, text) in conjugators.iter().enumerate() {
        if residual.is_empty() {
            break;
        }
        let gamma = phi_parse(text, field)?;
        let gamma_inv = gamma.inverse()?;
        let coeffs = condition(field, &gamma, &gamma_inv);
        if i == 2 && residual.len() == 1 {
            if let Some(eq) = line_restriction(&residual[0], &coeffs) {
                relations = line_relations(&residual[0]);
                final_equation = Some(eq);
            }
        }
        rows.push(ConditionRow {
            source: (*text).to_string(),
            coeffs,
        });
        let all: Vec<[UniPoly; 4]> = rows.iter().map(|r| r.coeffs.clone()).collect();
        residual = kernel(&all);
    }
    Ok(ThekeyReport {
        field,
        rank: 4 - residual.len(),
        rows,
        relations,
        final_equation,
        residual,
    })
}

fn normalized(v: &[RatFunc; 4]) -> Option<[RatFunc; 4]> {
    let inv = v[0].inv()?;
    Some(std::array::from_fn(|k| v[k].mul(&inv)))
}

fn line_relations(v: &[RatFunc; 4]) -> Vec<Relation> {
    let Some(n) = normalized(v) else {
        return Vec::new();
    };
    // reported in the order C, D, B as in the hand elimination
    [(2, 'C'), (3, 'D'), (1, 'B')]
        .into_iter()
        .map(|(k, var)| Relation {
            var,
            coeff: n[k].clone(),
        })
        .collect()
}

fn line_restriction(v: &[RatFunc; 4], row: &[UniPoly; 4]) -> Option<UniPoly> {
    let n = normalized(v)?;
    dot(row, &n).as_poly().cloned()
}

/// `(A, B, C, D)` satisfies every condition row.
pub fn satisfies(report: &ThekeyReport, v: &[FieldElem; 4]) -> bool {
    report.rows.iter().all(|r| {
        r.coeffs
            .iter()
            .zip(v)
            .fold(UniPoly::zero(report.field), |acc, (p, c)| {
                &acc + &p.scale(c)
            })
            .is_zero()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(field: Field, c: &[i64]) -> UniPoly {
        UniPoly::from_i64s(field, c)
    }

    fn rf(field: Field, c: &[i64]) -> RatFunc {
        RatFunc::from_poly(p(field, c))
    }

    fn check_hand_elimination(field: Field) {
        let rep = thekey_solve(field).unwrap();
        assert!(rep.solution_is_zero(), "{rep}");
        assert_eq!(rep.rank, 4);
        assert_eq!(rep.rows.len(), 4);
        assert_eq!(
            rep.rows[0].coeffs,
            [
                p(field, &[0, 1]),
                p(field, &[1]),
                p(field, &[1]),
                p(field, &[1])
            ]
        );
        let rel: Vec<(char, RatFunc)> = rep
            .relations
            .iter()
            .map(|r| (r.var, r.coeff.clone()))
            .collect();
        assert_eq!(
            rel,
            vec![
                ('C', rf(field, &[])),
                ('D', rf(field, &[1])),
                ('B', rf(field, &[-1, -1])),
            ]
        );
        let eq = rep.final_equation.clone().unwrap();
        let target = p(field, &[-1, 1, 2]);
        assert_eq!(eq.monic(), target.monic());
        if field == Field::Rational {
            assert_eq!(
                rep.relations
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>(),
                ["C = 0", "D = A", "B = (-T - 1)*A"]
            );
        }
    }

    #[test]
    fn rational_elimination() {
        check_hand_elimination(Field::Rational);
    }

    #[test]
    fn f3_elimination() {
        check_hand_elimination(Field::Prime(3));
    }

    #[test]
    fn rows_span_the_displayed_equations() {
        // TA+B+C+D, B+(T+1)D, 2TA+B+2(1-T)C+(1-T)D
        let q = Field::Rational;
        let rep = thekey_solve(q).unwrap();
        let displayed = [
            [p(q, &[0, 1]), p(q, &[1]), p(q, &[1]), p(q, &[1])],
            [p(q, &[]), p(q, &[1]), p(q, &[]), p(q, &[1, 1])],
            [p(q, &[0, 2]), p(q, &[1]), p(q, &[2, -2]), p(q, &[1, -1])],
        ];
        let ours: Vec<[UniPoly; 4]> = rep.rows[..3].iter().map(|r| r.coeffs.clone()).collect();
        assert_eq!(kernel(&ours), kernel(&displayed));
        let mut both = ours.clone();
        both.extend(displayed);
        assert_eq!(kernel(&both).len(), 1);
    }

    #[test]
    fn characteristic_two_needs_more_conjugators() {
        let f2 = Field::Prime(2);
        let rep = thekey_solve(f2).unwrap();
        assert_eq!(rep.rows[1].coeffs, rep.rows[2].coeffs);
        assert!(rep.rows.len() > 4);
        assert!(rep.solution_is_zero(), "{rep}");
        let first_three = thekey_solve_with(f2, &DEFAULT_CONJUGATORS[..3]).unwrap();
        assert!(!first_three.solution_is_zero());
    }

    #[test]
    fn zero_is_always_a_solution() {
        for field in [Field::Rational, Field::Prime(2), Field::Prime(5)] {
            let rep = thekey_solve(field).unwrap();
            assert!(satisfies(
                &rep,
                &[field.zero(), field.zero(), field.zero(), field.zero()]
            ));
        }
    }

    #[test]
    fn ratfunc_normalizes() {
        let q = Field::Rational;
        let r = RatFunc::new(p(q, &[0, 2]), p(q, &[0, 0, 4]));
        assert_eq!(r.num, UniPoly::constant(parse_half()));
        assert_eq!(r.den, p(q, &[0, 1]));
        assert!(r
            .add(&r.inv().unwrap().inv().unwrap().mul(&rf(q, &[-1])))
            .is_zero());
    }

    fn parse_half() -> FieldElem {
        crate::exactalg::parse_scalar("1/2", Field::Rational).unwrap()
    }
}
