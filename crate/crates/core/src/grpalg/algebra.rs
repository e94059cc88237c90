//! Finite-dimensional algebras given by structure constants.

use std::fmt;
use std::sync::Arc;

use rand::Rng;

use super::{FiniteGroup, GrpError};
use crate::exactalg::{parse_scalar, DenseMatrix, Field, FieldElem, Ring};

/// Basis products `b_i b_j = Σ c_k b_k`, stored sparsely.
#[derive(Clone, Debug)]
pub struct FinAlgebra {
    field: Field,
    labels: Vec<String>,
    table: Vec<Vec<Vec<(usize, FieldElem)>>>,
    unity: Vec<FieldElem>,
    group: Option<FiniteGroup>,
}

impl FinAlgebra {
    /// Builds and validates associativity and unity on all basis triples.
    pub fn new(
        field: Field,
        labels: Vec<String>,
        table: Vec<Vec<Vec<(usize, FieldElem)>>>,
        unity: Vec<FieldElem>,
    ) -> Result<Arc<Self>, GrpError> {
        let alg = FinAlgebra {
            field,
            labels,
            table,
            unity,
            group: None,
        };
        alg.validate()?;
        Ok(Arc::new(alg))
    }

    fn validate(&self) -> Result<(), GrpError> {
        let d = self.dim();
        let bad = |m: String| Err(GrpError::InvalidAlgebra(m));
        if self.unity.len() != d || self.table.len() != d || self.table.iter().any(|r| r.len() != d)
        {
            return bad("dimension mismatch in structure constants".into());
        }
        for row in &self.table {
            for cell in row {
                if cell.iter().any(|(k, c)| *k >= d || c.field() != self.field) {
                    return bad("structure constant out of range or over the wrong field".into());
                }
            }
        }
        let basis = |i: usize| self.basis_vec(i);
        for i in 0..d {
            let e = basis(i);
            if self.mul_vec(&self.unity, &e) != e || self.mul_vec(&e, &self.unity) != e {
                return bad(format!(
                    "unity law fails on basis element {}",
                    self.labels[i]
                ));
            }
        }
        for i in 0..d {
            for j in 0..d {
                let ij = self.mul_vec(&basis(i), &basis(j));
                for k in 0..d {
                    let left = self.mul_vec(&ij, &basis(k));
                    let right = self.mul_vec(&basis(i), &self.mul_vec(&basis(j), &basis(k)));
                    if left != right {
                        return bad(format!(
                            "associativity fails on ({}, {}, {})",
                            self.labels[i], self.labels[j], self.labels[k]
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn group_algebra(g: &FiniteGroup, field: Field) -> Arc<Self> {
        let n = g.order();
        let table = (0..n)
            .map(|a| (0..n).map(|b| vec![(g.mul(a, b), field.one())]).collect())
            .collect();
        let mut unity = vec![field.zero(); n];
        unity[g.identity()] = field.one();
        let labels = (0..n)
            .map(|i| {
                if i == g.identity() {
                    "1".to_string()
                } else {
                    format!("g{i}")
                }
            })
            .collect();
        let alg = FinAlgebra {
            field,
            labels,
            table,
            unity,
            group: Some(g.clone()),
        };
        alg.validate().expect("group algebra is associative");
        Arc::new(alg)
    }

    /// `M_n(K)` with basis `e_ij` at index `i·n + j`.
    pub fn matrix_algebra(n: usize, field: Field) -> Result<Arc<Self>, GrpError> {
        if n == 0 {
            return Err(GrpError::InvalidParameter(
                "matrix size must be positive".into(),
            ));
        }
        let d = n * n;
        let table = (0..d)
            .map(|a| {
                (0..d)
                    .map(|b| {
                        if a % n == b / n {
                            vec![((a / n) * n + b % n, field.one())]
                        } else {
                            Vec::new()
                        }
                    })
                    .collect()
            })
            .collect();
        let unity = (0..d)
            .map(|i| {
                if i / n == i % n {
                    field.one()
                } else {
                    field.zero()
                }
            })
            .collect();
        let labels = (0..d)
            .map(|i| format!("e{}{}", i / n + 1, i % n + 1))
            .collect();
        Self::new(field, labels, table, unity)
    }

    /// Commutative `K[x, y]/(x², y²)` with basis `1, x, y, xy`.
    pub fn square_zero_pair(field: Field) -> Arc<Self> {
        let one = field.one();
        // monomials as bitmasks: 1=x, 2=y
        let table = (0..4usize)
            .map(|a| {
                (0..4usize)
                    .map(|b| {
                        if a & b == 0 {
                            vec![(a | b, one.clone())]
                        } else {
                            Vec::new()
                        }
                    })
                    .collect()
            })
            .collect();
        let mut unity = vec![field.zero(); 4];
        unity[0] = one;
        let labels = ["1", "x", "y", "xy"].map(String::from).to_vec();
        Self::new(field, labels, table, unity).expect("valid algebra")
    }

    /// `K[x]/(x²)`.
    pub fn dual_numbers(field: Field) -> Arc<Self> {
        let one = field.one();
        let table = vec![
            vec![vec![(0, one.clone())], vec![(1, one.clone())]],
            vec![vec![(1, one)], Vec::new()],
        ];
        let unity = vec![field.one(), field.zero()];
        Self::new(field, vec!["1".into(), "x".into()], table, unity).expect("valid algebra")
    }

    /// Parses `group:<spec>`, `matrix:N`, `sqzero2`, `dual`.
    pub fn from_spec(spec: &str, field: Field) -> Result<Arc<Self>, GrpError> {
        let (kind, arg) = spec.split_once(':').unwrap_or((spec, ""));
        match kind {
            "group" => Ok(Self::group_algebra(&FiniteGroup::from_spec(arg)?, field)),
            "matrix" => Self::matrix_algebra(
                arg.parse()
                    .map_err(|_| GrpError::InvalidParameter(format!("bad matrix size `{arg}`")))?,
                field,
            ),
            "sqzero2" => Ok(Self::square_zero_pair(field)),
            "dual" => Ok(Self::dual_numbers(field)),
            _ => Err(GrpError::InvalidParameter(format!(
                "unknown algebra `{spec}` (group:..., matrix:N, sqzero2, dual)"
            ))),
        }
    }

    /// Text format: `field q`, `dim d`, `basis l1 …`, `unity c1 …`, `mul i j k c`
    /// (0-based); or `field q`, `perm-degree n`, `gen p0 p1 …` for a group algebra.
    pub fn parse(text: &str) -> Result<Arc<Self>, GrpError> {
        let mut field = None;
        let mut dim = None;
        let mut labels = None;
        let mut unity_text: Option<(usize, Vec<String>)> = None;
        let mut muls: Vec<(usize, usize, usize, usize, String)> = Vec::new();
        let mut degree = None;
        let mut gens: Vec<(usize, Vec<usize>)> = Vec::new();
        for (ln, raw) in text.lines().enumerate() {
            let line = ln + 1;
            let err = |m: &str| GrpError::Import {
                line,
                message: m.to_string(),
            };
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let mut parts = content.split_whitespace();
            let key = parts.next().unwrap();
            let rest: Vec<&str> = parts.collect();
            let num = |s: &str| {
                s.parse::<usize>()
                    .map_err(|_| err(&format!("expected an index, got `{s}`")))
            };
            match key {
                "field" => {
                    let q = rest.first().ok_or_else(|| err("missing field order"))?;
                    let q: u64 = q
                        .parse()
                        .map_err(|_| err("field order must be 0 or a prime"))?;
                    field = Some(Field::from_q(q).map_err(|e| err(&e.to_string()))?);
                }
                "dim" => {
                    dim = Some(num(rest
                        .first()
                        .ok_or_else(|| err("missing dimension"))?)?)
                }
                "basis" => labels = Some(rest.iter().map(|s| s.to_string()).collect::<Vec<_>>()),
                "unity" => unity_text = Some((line, rest.iter().map(|s| s.to_string()).collect())),
                "mul" => {
                    if rest.len() != 4 {
                        return Err(err("mul needs `i j k coefficient`"));
                    }
                    muls.push((
                        line,
                        num(rest[0])?,
                        num(rest[1])?,
                        num(rest[2])?,
                        rest[3].to_string(),
                    ));
                }
                "perm-degree" => {
                    degree = Some(num(rest.first().ok_or_else(|| err("missing degree"))?)?)
                }
                "gen" => gens.push((line, rest.iter().map(|s| num(s)).collect::<Result<_, _>>()?)),
                other => return Err(err(&format!("unknown directive `{other}`"))),
            }
        }
        let field = field.ok_or(GrpError::Import {
            line: 0,
            message: "missing `field` line".into(),
        })?;
        if let Some(n) = degree {
            if let Some((line, g)) = gens.iter().find(|(_, g)| g.len() != n) {
                return Err(GrpError::Import {
                    line: *line,
                    message: format!("generator has {} entries, expected {n}", g.len()),
                });
            }
            let perms: Vec<Vec<usize>> = std::iter::once((0..n).collect())
                .chain(gens.into_iter().map(|(_, g)| g))
                .collect();
            let g = FiniteGroup::from_permutations("imported", &perms)?;
            return Ok(Self::group_algebra(&g, field));
        }
        let d = dim.ok_or(GrpError::Import {
            line: 0,
            message: "missing `dim` line".into(),
        })?;
        let labels = labels.unwrap_or_else(|| (0..d).map(|i| format!("b{i}")).collect());
        if labels.len() != d {
            return Err(GrpError::Import {
                line: 0,
                message: format!("{} basis labels for dimension {d}", labels.len()),
            });
        }
        let (uline, utext) = unity_text.ok_or(GrpError::Import {
            line: 0,
            message: "missing `unity` line".into(),
        })?;
        if utext.len() != d {
            return Err(GrpError::Import {
                line: uline,
                message: format!("unity has {} entries, expected {d}", utext.len()),
            });
        }
        let scalar = |line: usize, s: &str| {
            parse_scalar(s, field).map_err(|e| GrpError::Import {
                line,
                message: e.to_string(),
            })
        };
        let unity = utext
            .iter()
            .map(|s| scalar(uline, s))
            .collect::<Result<Vec<_>, _>>()?;
        let mut table = vec![vec![Vec::new(); d]; d];
        for (line, i, j, k, c) in muls {
            if i >= d || j >= d || k >= d {
                return Err(GrpError::Import {
                    line,
                    message: format!("index out of range for dimension {d}"),
                });
            }
            let cell: &mut Vec<(usize, FieldElem)> = &mut table[i][j];
            cell.push((k, scalar(line, &c)?));
        }
        Self::new(field, labels, table, unity)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn group(&self) -> Option<&FiniteGroup> {
        self.group.as_ref()
    }

    /// `q^d`, or `None` over ℚ or on overflow.
    pub fn cardinality(&self) -> Option<u64> {
        let q = self.field.order()?;
        q.checked_pow(u32::try_from(self.dim()).ok()?)
    }

    fn basis_vec(&self, i: usize) -> Vec<FieldElem> {
        let mut v = vec![self.field.zero(); self.dim()];
        v[i] = self.field.one();
        v
    }

    fn mul_vec(&self, a: &[FieldElem], b: &[FieldElem]) -> Vec<FieldElem> {
        let mut out = vec![self.field.zero(); self.dim()];
        for (i, ai) in a.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, bj) in b.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let ab = ai * bj;
                for (k, c) in &self.table[i][j] {
                    out[*k] = &out[*k] + &(&ab * c);
                }
            }
        }
        out
    }
}

/// Element of a [`FinAlgebra`] as a coefficient vector.
#[derive(Clone, Debug)]
pub struct AlgElem {
    alg: Arc<FinAlgebra>,
    coeffs: Vec<FieldElem>,
}

impl PartialEq for AlgElem {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.alg, &other.alg) && self.coeffs == other.coeffs
    }
}

impl Eq for AlgElem {}

impl AlgElem {
    pub fn new(alg: &Arc<FinAlgebra>, coeffs: Vec<FieldElem>) -> Result<Self, GrpError> {
        if coeffs.len() != alg.dim() || coeffs.iter().any(|c| c.field() != alg.field) {
            return Err(GrpError::InvalidParameter(format!(
                "expected {} coefficients over {}",
                alg.dim(),
                alg.field
            )));
        }
        Ok(AlgElem {
            alg: alg.clone(),
            coeffs,
        })
    }

    pub fn zero(alg: &Arc<FinAlgebra>) -> Self {
        AlgElem {
            alg: alg.clone(),
            coeffs: vec![alg.field.zero(); alg.dim()],
        }
    }

    pub fn one(alg: &Arc<FinAlgebra>) -> Self {
        AlgElem {
            alg: alg.clone(),
            coeffs: alg.unity.clone(),
        }
    }

    pub fn basis(alg: &Arc<FinAlgebra>, i: usize) -> Self {
        AlgElem {
            alg: alg.clone(),
            coeffs: alg.basis_vec(i),
        }
    }

    pub fn from_i64s(alg: &Arc<FinAlgebra>, v: &[i64]) -> Self {
        assert_eq!(v.len(), alg.dim());
        AlgElem {
            alg: alg.clone(),
            coeffs: v.iter().map(|&c| alg.field.from_i64(c)).collect(),
        }
    }

    /// Element number `index` in the mixed-radix enumeration of a finite algebra.
    pub fn from_index(alg: &Arc<FinAlgebra>, mut index: u64) -> Self {
        let q = alg.field.order().expect("finite field");
        let coeffs = (0..alg.dim())
            .map(|_| {
                let c = alg.field.element(index % q);
                index /= q;
                c
            })
            .collect();
        AlgElem {
            alg: alg.clone(),
            coeffs,
        }
    }

    /// Uniform over `F_q^d`, or small integers in `[-3, 3]` over ℚ.
    pub fn random(alg: &Arc<FinAlgebra>, rng: &mut impl Rng) -> Self {
        let f = alg.field;
        let coeffs = (0..alg.dim())
            .map(|_| match f.order() {
                Some(q) => f.element(rng.gen_range(0..q)),
                None => f.from_i64(rng.gen_range(-3..=3)),
            })
            .collect();
        AlgElem {
            alg: alg.clone(),
            coeffs,
        }
    }

    pub fn algebra(&self) -> &Arc<FinAlgebra> {
        &self.alg
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    fn same_algebra(&self, other: &Self) {
        assert!(
            Arc::ptr_eq(&self.alg, &other.alg),
            "elements of different algebras never mix"
        );
    }

    /// Matrix of `x ↦ self·x` in the basis.
    pub fn left_regular(&self) -> DenseMatrix {
        let d = self.alg.dim();
        let mut m = DenseMatrix::zeros(self.alg.field, d, d);
        for j in 0..d {
            let col = self.alg.mul_vec(&self.coeffs, &self.alg.basis_vec(j));
            for (i, v) in col.into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn is_unit(&self) -> bool {
        self.left_regular().rank() == self.alg.dim()
    }

    /// Solves `self·x = 1`; a one-sided inverse is two-sided in finite dimension.
    pub fn inverse(&self) -> Result<AlgElem, GrpError> {
        let x = self
            .left_regular()
            .solve(&self.alg.unity)
            .ok_or(GrpError::NotAUnit)?;
        Ok(AlgElem {
            alg: self.alg.clone(),
            coeffs: x,
        })
    }

    /// Commutes with every basis element.
    pub fn is_central(&self) -> bool {
        (0..self.alg.dim()).all(|i| {
            let b = AlgElem::basis(&self.alg, i);
            self.times(&b) == b.times(self)
        })
    }
}

impl Ring for AlgElem {
    fn zero_like(&self) -> Self {
        AlgElem::zero(&self.alg)
    }
    fn one_like(&self) -> Self {
        AlgElem::one(&self.alg)
    }
    fn plus(&self, other: &Self) -> Self {
        self.same_algebra(other);
        AlgElem {
            alg: self.alg.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
    fn minus(&self, other: &Self) -> Self {
        self.same_algebra(other);
        AlgElem {
            alg: self.alg.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
    fn times(&self, other: &Self) -> Self {
        self.same_algebra(other);
        AlgElem {
            alg: self.alg.clone(),
            coeffs: self.alg.mul_vec(&self.coeffs, &other.coeffs),
        }
    }
    fn negate(&self) -> Self {
        AlgElem {
            alg: self.alg.clone(),
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
    fn scaled(&self, c: &FieldElem) -> Self {
        AlgElem {
            alg: self.alg.clone(),
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(FieldElem::is_zero)
    }
}

impl fmt::Display for AlgElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (c, label) in self.coeffs.iter().zip(&self.alg.labels) {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative_literal();
            let abs = if neg { -c } else { c.clone() };
            f.write_str(match (first, neg) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            })?;
            if abs.is_one() {
                f.write_str(label)?;
            } else {
                write!(f, "{abs}*{label}")?;
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const F2: Field = Field::Prime(2);

    #[test]
    fn units_in_dual_numbers() {
        let a = FinAlgebra::dual_numbers(F2);
        let one = AlgElem::one(&a);
        assert_eq!(one.inverse().unwrap(), one);
        let x = AlgElem::basis(&a, 1);
        let u = one.plus(&x);
        assert_eq!(u.inverse().unwrap(), u);
        assert_eq!(x.inverse(), Err(GrpError::NotAUnit));
        assert!(!x.is_unit());
    }

    #[test]
    fn regular_representation_inverses() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let algebras = vec![
            FinAlgebra::group_algebra(&FiniteGroup::sym(3).unwrap(), F2),
            FinAlgebra::group_algebra(&FiniteGroup::quaternion8(), Field::Prime(3)),
            FinAlgebra::group_algebra(&FiniteGroup::cyclic(4).unwrap(), Field::Rational),
            FinAlgebra::matrix_algebra(2, Field::Prime(5)).unwrap(),
            FinAlgebra::square_zero_pair(F2),
            FinAlgebra::dual_numbers(Field::Rational),
        ];
        for alg in &algebras {
            let mut found = 0;
            while found < 100 {
                let a = AlgElem::random(alg, &mut rng);
                if let Ok(inv) = a.inverse() {
                    assert_eq!(a.times(&inv), AlgElem::one(alg));
                    assert_eq!(inv.times(&a), AlgElem::one(alg));
                    found += 1;
                }
            }
        }
    }

    #[test]
    fn matrix_algebra_products() {
        let m = FinAlgebra::matrix_algebra(2, F2).unwrap();
        let e12 = AlgElem::basis(&m, 1);
        let e21 = AlgElem::basis(&m, 2);
        assert_eq!(e12.times(&e21), AlgElem::basis(&m, 0));
        assert!(e12.times(&e12).is_zero());
        assert_eq!(m.cardinality(), Some(16));
    }

    #[test]
    fn import_format() {
        let text = "# dual numbers\nfield 3\ndim 2\nbasis 1 x\nunity 1 0\nmul 0 0 0 1\nmul 0 1 1 1\nmul 1 0 1 1\n";
        let a = FinAlgebra::parse(text).unwrap();
        assert_eq!(a.dim(), 2);
        let x = AlgElem::basis(&a, 1);
        assert!(x.times(&x).is_zero());
        let g = FinAlgebra::parse("field 2\nperm-degree 3\ngen 1 0 2\ngen 1 2 0\n").unwrap();
        assert_eq!(g.dim(), 6);
        assert!(matches!(
            FinAlgebra::parse("field 2\ndim 2\nunity 1 0\nmul 0 0 5 1\n"),
            Err(GrpError::Import { line: 4, .. })
        ));
        // not associative / no unity
        assert!(FinAlgebra::parse("field 2\ndim 1\nunity 1\n").is_err());
        assert!(FinAlgebra::parse("field 4\ndim 1\nunity 1\nmul 0 0 0 1\n").is_err());
    }

    #[test]
    #[should_panic(expected = "never mix")]
    fn mixing_algebras_panics() {
        let a = FinAlgebra::dual_numbers(F2);
        let b = FinAlgebra::dual_numbers(F2);
        let _ = AlgElem::one(&a).plus(&AlgElem::one(&b));
    }

    #[test]
    fn display() {
        let a = FinAlgebra::square_zero_pair(Field::Rational);
        assert_eq!(
            AlgElem::from_i64s(&a, &[1, 0, -2, 1]).to_string(),
            "1 - 2*y + xy"
        );
        assert_eq!(AlgElem::zero(&a).to_string(), "0");
    }
}
