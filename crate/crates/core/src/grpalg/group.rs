//! Finite groups by multiplication table.

use std::collections::HashMap;

use super::GrpError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Validates closure, associativity, identity and inverses.
    pub fn from_table(name: impl Into<String>, table: Vec<Vec<usize>>) -> Result<Self, GrpError> {
        let n = table.len();
        let bad = |m: &str| GrpError::InvalidParameter(m.to_string());
        if n == 0 {
            return Err(bad("empty group"));
        }
        if table
            .iter()
            .any(|row| row.len() != n || row.iter().any(|&x| x >= n))
        {
            return Err(bad("table is not closed"));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or_else(|| bad("no identity"))?;
        let mut inverse = vec![0; n];
        for (g, slot) in inverse.iter_mut().enumerate() {
            *slot = (0..n)
                .find(|&h| table[g][h] == identity && table[h][g] == identity)
                .ok_or_else(|| bad("missing inverse"))?;
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(bad("not associative"));
                    }
                }
            }
        }
        Ok(FiniteGroup {
            name: name.into(),
            table,
            identity,
            inverse,
        })
    }

    /// The group generated by permutations of `0..degree`; the identity is element 0.
    pub fn from_permutations(
        name: impl Into<String>,
        gens: &[Vec<usize>],
    ) -> Result<Self, GrpError> {
        let degree = gens.first().map_or(0, Vec::len);
        for g in gens {
            let mut seen = vec![false; degree];
            if g.len() != degree
                || g.iter()
                    .any(|&x| x >= degree || std::mem::replace(&mut seen[x], true))
            {
                return Err(GrpError::InvalidParameter(format!(
                    "not a permutation of 0..{degree}: {g:?}"
                )));
            }
        }
        let id: Vec<usize> = (0..degree).collect();
        let mut elems = vec![id.clone()];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(id, 0)]);
        let mut i = 0;
        while i < elems.len() {
            for g in gens {
                let p = compose(&elems[i], g);
                if !index.contains_key(&p) {
                    index.insert(p.clone(), elems.len());
                    elems.push(p);
                }
            }
            i += 1;
        }
        let table = elems
            .iter()
            .map(|a| elems.iter().map(|b| index[&compose(a, b)]).collect())
            .collect();
        Self::from_table(name, table)
    }

    pub fn cyclic(n: usize) -> Result<Self, GrpError> {
        if n == 0 {
            return Err(GrpError::InvalidParameter(
                "cyclic group needs n >= 1".into(),
            ));
        }
        let table = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        Self::from_table(format!("C{n}"), table)
    }

    pub fn sym(n: usize) -> Result<Self, GrpError> {
        if !(1..=4).contains(&n) {
            return Err(GrpError::InvalidParameter(
                "symmetric group supported for 1 <= n <= 4".into(),
            ));
        }
        let mut gens = vec![(0..n).collect::<Vec<_>>()];
        if n >= 2 {
            let mut t: Vec<usize> = (0..n).collect();
            t.swap(0, 1);
            gens.push(t);
            gens.push((0..n).map(|i| (i + 1) % n).collect());
        }
        Self::from_permutations(format!("S{n}"), &gens)
    }

    /// Dihedral group of order `2n`: `(i, j)` is `r^i s^j`.
    pub fn dihedral(n: usize) -> Result<Self, GrpError> {
        if n == 0 {
            return Err(GrpError::InvalidParameter(
                "dihedral group needs n >= 1".into(),
            ));
        }
        let idx = |i: usize, j: usize| j * n + i;
        let mut table = vec![vec![0; 2 * n]; 2 * n];
        for (i1, j1, i2, j2) in (0..n).flat_map(|i1| {
            (0..2).flat_map(move |j1| {
                (0..n).flat_map(move |i2| (0..2).map(move |j2| (i1, j1, i2, j2)))
            })
        }) {
            let i = if j1 == 0 {
                (i1 + i2) % n
            } else {
                (i1 + n - i2) % n
            };
            table[idx(i1, j1)][idx(i2, j2)] = idx(i, (j1 + j2) % 2);
        }
        Self::from_table(format!("D{}", 2 * n), table)
    }

    /// `{±1, ±i, ±j, ±k}`; element `2u + s` is `(-1)^s` times unit `u`.
    pub fn quaternion8() -> Self {
        // unit products: (sign, unit) for 1,i,j,k
        const M: [[(usize, usize); 4]; 4] = [
            [(0, 0), (0, 1), (0, 2), (0, 3)],
            [(0, 1), (1, 0), (0, 3), (1, 2)],
            [(0, 2), (1, 3), (1, 0), (0, 1)],
            [(0, 3), (0, 2), (1, 1), (1, 0)],
        ];
        let table = (0..8)
            .map(|a: usize| {
                (0..8)
                    .map(|b: usize| {
                        let (s, u) = M[a / 2][b / 2];
                        2 * u + (s + a % 2 + b % 2) % 2
                    })
                    .collect()
            })
            .collect();
        Self::from_table("Q8", table).expect("quaternion table is a group")
    }

    pub fn product(g: &FiniteGroup, h: &FiniteGroup) -> Self {
        let m = h.order();
        let n = g.order() * m;
        let table = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| g.mul(a / m, b / m) * m + h.mul(a % m, b % m))
                    .collect()
            })
            .collect();
        Self::from_table(format!("{}x{}", g.name, h.name), table).expect("product of groups")
    }

    /// Parses `cyclic:N`, `sym:N`, `dihedral:N`, `quaternion8`, joined by `x` for products.
    pub fn from_spec(spec: &str) -> Result<Self, GrpError> {
        let mut out: Option<FiniteGroup> = None;
        for part in spec.split('x').map(str::trim) {
            let (kind, arg) = part.split_once(':').unwrap_or((part, ""));
            let n = || {
                arg.parse::<usize>()
                    .map_err(|_| GrpError::InvalidParameter(format!("bad group size in `{part}`")))
            };
            let g = match kind {
                "cyclic" | "C" => Self::cyclic(n()?)?,
                "sym" | "S" => Self::sym(n()?)?,
                "dihedral" | "D" => Self::dihedral(n()?)?,
                "quaternion8" | "Q8" => Self::quaternion8(),
                _ => {
                    return Err(GrpError::InvalidParameter(format!(
                        "unknown group `{part}`"
                    )))
                }
            };
            out = Some(match out {
                None => g,
                Some(prev) => Self::product(&prev, &g),
            });
        }
        out.ok_or_else(|| GrpError::InvalidParameter("empty group spec".into()))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|a| (0..self.order()).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Elements of `⟨g⟩` in order `1, g, g², …`.
    pub fn cyclic_subgroup(&self, g: usize) -> Vec<usize> {
        let mut out = vec![self.identity];
        let mut x = g;
        while x != self.identity {
            out.push(x);
            x = self.mul(x, g);
        }
        out
    }

    pub fn element_order(&self, g: usize) -> usize {
        self.cyclic_subgroup(g).len()
    }

    /// `h S h⁻¹ = S` as sets.
    pub fn normalizes(&self, h: usize, subset: &[usize]) -> bool {
        let hi = self.inv(h);
        subset
            .iter()
            .all(|&s| subset.contains(&self.mul(self.mul(h, s), hi)))
    }

    pub fn is_normal(&self, subset: &[usize]) -> bool {
        (0..self.order()).all(|h| self.normalizes(h, subset))
    }
}

fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    // apply b then a
    b.iter().map(|&i| a[i]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_subgroups_normal(g: &FiniteGroup) -> bool {
        // every subgroup of a finite group generated by two elements suffices for Q8
        (0..g.order()).all(|a| {
            (0..g.order()).all(|b| {
                let gens: Vec<usize> = vec![a, b];
                let mut sub = vec![g.identity()];
                let mut i = 0;
                while i < sub.len() {
                    for &x in &gens {
                        let y = g.mul(sub[i], x);
                        if !sub.contains(&y) {
                            sub.push(y);
                        }
                    }
                    i += 1;
                }
                g.is_normal(&sub)
            })
        })
    }

    #[test]
    fn builders() {
        let c3 = FiniteGroup::cyclic(3).unwrap();
        assert_eq!(c3.mul(2, 2), 1);
        assert!(c3.is_abelian());
        let s3 = FiniteGroup::sym(3).unwrap();
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        assert_eq!(FiniteGroup::sym(4).unwrap().order(), 24);
        let q8 = FiniteGroup::quaternion8();
        assert_eq!(q8.order(), 8);
        assert!(!q8.is_abelian());
        assert!(all_subgroups_normal(&q8));
        assert!(!all_subgroups_normal(&FiniteGroup::dihedral(4).unwrap()));
        assert_eq!(FiniteGroup::dihedral(3).unwrap().order(), 6);
        let p = FiniteGroup::from_spec("cyclic:2 x sym:3").unwrap();
        assert_eq!(p.order(), 12);
        assert!(FiniteGroup::sym(5).is_err());
        assert!(FiniteGroup::cyclic(0).is_err());
        assert!(FiniteGroup::from_spec("foo:3").is_err());
    }

    #[test]
    fn invalid_tables_rejected() {
        assert!(FiniteGroup::from_table("bad", vec![vec![0, 1], vec![0, 1]]).is_err());
        assert!(FiniteGroup::from_table("bad", vec![vec![0, 2], vec![1, 0]]).is_err());
    }

    #[test]
    fn element_orders() {
        let s3 = FiniteGroup::sym(3).unwrap();
        let mut orders: Vec<usize> = (0..6).map(|g| s3.element_order(g)).collect();
        orders.sort();
        assert_eq!(orders, vec![1, 2, 2, 2, 3, 3]);
    }
}
