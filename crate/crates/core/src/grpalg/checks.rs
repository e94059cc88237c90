//! Identity checks on finite algebras: LPI falsification, standard polynomials,
//! square-zero products and idempotent structure.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{cyclic_nilpotent, hat, hat_normalized, AlgElem, FinAlgebra, GrpError};
use crate::exactalg::{eval_poly_at, Field, Mat2K, Ring, UniPoly};
use crate::laurent::LaurentPoly;
use crate::par::Execution;

/// Largest algebra (in elements) enumerated exhaustively.
pub const EXHAUSTIVE_LIMIT: u64 = 1 << 20;

/// Idempotents are searched exhaustively up to this many elements.
const IDEMPOTENT_LIMIT: u64 = 1 << 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckMode {
    Exhaustive,
    Sampled { samples: u64, seed: u64 },
}

fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn exhaustive_size(alg: &FinAlgebra, limit: u64) -> Result<u64, GrpError> {
    match alg.cardinality() {
        Some(n) if n <= limit => Ok(n),
        Some(n) => Err(GrpError::TooLargeForExhaustive {
            size: n.to_string(),
            limit,
        }),
        None => Err(GrpError::TooLargeForExhaustive {
            size: if alg.field() == Field::Rational {
                "infinitely many".into()
            } else {
                "too many".into()
            },
            limit,
        }),
    }
}

pub fn all_elements(alg: &Arc<FinAlgebra>) -> Result<Vec<AlgElem>, GrpError> {
    let n = exhaustive_size(alg, EXHAUSTIVE_LIMIT)?;
    Ok((0..n).map(|i| AlgElem::from_index(alg, i)).collect())
}

pub fn square_zero_elements(alg: &Arc<FinAlgebra>) -> Result<Vec<AlgElem>, GrpError> {
    Ok(all_elements(alg)?
        .into_iter()
        .filter(|a| a.times(a).is_zero())
        .collect())
}

/// Draws a unit from a mixture: group elements, `1 + (1−g)hĝ`, `1 + n` for a
/// nilpotent found at random, or a random invertible element by rejection.
pub fn sample_unit(alg: &Arc<FinAlgebra>, rng: &mut impl Rng) -> AlgElem {
    let one = AlgElem::one(alg);
    let field = alg.field();
    let random_scalar = |rng: &mut dyn rand::RngCore| match field.order() {
        Some(q) => field.element(rng.gen_range(1..q)),
        None => field.from_i64([-2, -1, 1, 2][rng.gen_range(0..4)]),
    };
    match (rng.gen_range(0..3), alg.group()) {
        (0, Some(g)) => AlgElem::basis(alg, rng.gen_range(0..g.order())),
        (1, Some(g)) => {
            let n = cyclic_nilpotent(
                alg,
                rng.gen_range(0..g.order()),
                rng.gen_range(0..g.order()),
            )
            .expect("group algebra");
            one.plus(&n.scaled(&random_scalar(rng)))
        }
        (1, None) => {
            for _ in 0..64 {
                let n = AlgElem::random(alg, rng);
                if n.pow(alg.dim() as u64).is_zero() {
                    return one.plus(&n);
                }
            }
            one
        }
        _ => {
            for _ in 0..64 {
                let a = AlgElem::random(alg, rng);
                if a.is_unit() {
                    return a;
                }
            }
            one
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FalsifyOutcome {
    Counterexample {
        trial: u64,
        units: Vec<AlgElem>,
        value: AlgElem,
    },
    NoneFound {
        trials: u64,
    },
}

/// Evaluates `f` at sampled unit tuples; trial `i` uses stream `i` of the seed,
/// and the counterexample with the smallest trial index is reported.
pub fn falsify_lpi(
    f: &LaurentPoly,
    alg: &Arc<FinAlgebra>,
    trials: u64,
    seed: u64,
    exec: Execution,
) -> Result<FalsifyOutcome, GrpError> {
    if f.field() != alg.field() {
        return Err(GrpError::InvalidParameter(format!(
            "polynomial over {} but algebra over {}",
            f.field(),
            alg.field()
        )));
    }
    if f.is_zero() {
        return Ok(FalsifyOutcome::NoneFound { trials });
    }
    let nvars = (f.nvars() as usize).max(1);
    let one = AlgElem::one(alg);
    let hit = exec.find_first(trials, |trial| {
        let mut rng = rng_for(seed, trial);
        let units: Vec<AlgElem> = (0..nvars).map(|_| sample_unit(alg, &mut rng)).collect();
        let values: Vec<(AlgElem, AlgElem)> = units
            .iter()
            .map(|u| {
                (
                    u.clone(),
                    u.inverse().expect("sampled units are invertible"),
                )
            })
            .collect();
        let value = f.evaluate(&one, &values).expect("enough values");
        (!value.is_zero()).then_some(FalsifyOutcome::Counterexample {
            trial,
            units,
            value,
        })
    });
    Ok(hit.unwrap_or(FalsifyOutcome::NoneFound { trials }))
}

/// Permutations of `0..k` with their signs.
fn signed_permutations(k: usize) -> Vec<(Vec<usize>, bool)> {
    if k == 0 {
        return vec![(Vec::new(), true)];
    }
    let mut out = Vec::new();
    for (p, even) in signed_permutations(k - 1) {
        // insert k-1 at position i: moves past k-1-i larger-indexed entries
        for i in 0..k {
            let mut q = p.clone();
            q.insert(i, k - 1);
            out.push((q, even ^ ((k - 1 - i) % 2 == 1)));
        }
    }
    out
}

/// `S_k(x_1, …, x_k) = Σ_σ sign(σ) x_σ(1) ⋯ x_σ(k)`.
pub fn standard_poly<R: Ring>(k: usize, elements: &[R]) -> Result<R, GrpError> {
    if elements.len() != k || k == 0 {
        return Err(GrpError::ArityMismatch {
            expected: k,
            got: elements.len(),
        });
    }
    let one = elements[0].one_like();
    let mut acc = one.zero_like();
    for (perm, even) in signed_permutations(k) {
        let prod = perm.iter().fold(one.clone(), |p, &i| p.times(&elements[i]));
        acc = if even {
            acc.plus(&prod)
        } else {
            acc.minus(&prod)
        };
    }
    Ok(acc)
}

/// Largest number of argument tuples `standard_poly_check` enumerates.
pub const TUPLE_LIMIT: u64 = 1 << 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StandardOutcome {
    Vanishes { tuples_checked: u64 },
    NonZero { args: Vec<AlgElem>, value: AlgElem },
}

/// Checks whether `S_k` vanishes on `alg`, over all `k`-tuples or sampled ones.
pub fn standard_poly_check(
    alg: &Arc<FinAlgebra>,
    k: usize,
    mode: CheckMode,
    exec: Execution,
) -> Result<StandardOutcome, GrpError> {
    if k == 0 {
        return Err(GrpError::InvalidParameter("k must be positive".into()));
    }
    let test = |args: Vec<AlgElem>| {
        let value = standard_poly(k, &args).expect("arity matches");
        (!value.is_zero()).then_some(StandardOutcome::NonZero { args, value })
    };
    match mode {
        CheckMode::Exhaustive => {
            let all = all_elements(alg)?;
            let n = all.len() as u64;
            let total = n
                .checked_pow(k as u32)
                .filter(|&t| t <= TUPLE_LIMIT)
                .ok_or_else(|| GrpError::TooLargeForExhaustive {
                    size: format!("{n}^{k} tuples"),
                    limit: TUPLE_LIMIT,
                })?;
            let hit = exec.find_first(total, |mut i| {
                let args = (0..k)
                    .map(|_| {
                        let a = all[(i % n) as usize].clone();
                        i /= n;
                        a
                    })
                    .collect();
                test(args)
            });
            Ok(hit.unwrap_or(StandardOutcome::Vanishes {
                tuples_checked: total,
            }))
        }
        CheckMode::Sampled { samples, seed } => {
            let hit = exec.find_first(samples, |i| {
                let mut rng = rng_for(seed, i);
                test((0..k).map(|_| AlgElem::random(alg, &mut rng)).collect())
            });
            Ok(hit.unwrap_or(StandardOutcome::Vanishes {
                tuples_checked: samples,
            }))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum P1Outcome {
    Holds {
        pairs_checked: u64,
    },
    Violated {
        a: AlgElem,
        b: AlgElem,
        value: AlgElem,
    },
}

fn sampled_square_zero_pool(alg: &Arc<FinAlgebra>, samples: u64, seed: u64) -> Vec<AlgElem> {
    let mut rng = rng_for(seed, u64::MAX);
    let mut pool = vec![AlgElem::zero(alg)];
    if let Some(g) = alg.group() {
        for a in 0..g.order() {
            for b in 0..g.order() {
                pool.push(cyclic_nilpotent(alg, a, b).expect("group algebra"));
            }
        }
    }
    let basis_sq: Vec<AlgElem> = (0..alg.dim())
        .map(|i| AlgElem::basis(alg, i))
        .filter(|b| b.times(b).is_zero())
        .collect();
    for (i, x) in basis_sq.iter().enumerate() {
        pool.push(x.clone());
        for y in &basis_sq[i + 1..] {
            let s = x.plus(y);
            if s.times(&s).is_zero() {
                pool.push(s);
            }
        }
    }
    for _ in 0..samples.saturating_mul(16).min(1 << 16) {
        let a = AlgElem::random(alg, &mut rng);
        if a.times(&a).is_zero() {
            pool.push(a);
        }
    }
    pool.sort_by(|x, y| format!("{x}").cmp(&format!("{y}")));
    pool.dedup();
    pool
}

/// Checks `g(ab) = 0` for square-zero `a`, `b`.
pub fn p1_check(
    alg: &Arc<FinAlgebra>,
    g: &UniPoly,
    mode: CheckMode,
    exec: Execution,
) -> Result<P1Outcome, GrpError> {
    if g.is_zero() {
        return Err(GrpError::ZeroPolynomial);
    }
    if g.field() != alg.field() {
        return Err(GrpError::InvalidParameter(
            "g and the algebra use different fields".into(),
        ));
    }
    let test = |a: &AlgElem, b: &AlgElem| {
        let value = eval_poly_at(g, &a.times(b));
        (!value.is_zero()).then(|| P1Outcome::Violated {
            a: a.clone(),
            b: b.clone(),
            value,
        })
    };
    match mode {
        CheckMode::Exhaustive => {
            let s = square_zero_elements(alg)?;
            let n = s.len() as u64;
            let hit = exec.find_first(n * n, |i| test(&s[(i / n) as usize], &s[(i % n) as usize]));
            Ok(hit.unwrap_or(P1Outcome::Holds {
                pairs_checked: n * n,
            }))
        }
        CheckMode::Sampled { samples, seed } => {
            let pool = sampled_square_zero_pool(alg, samples, seed);
            let hit = exec.find_first(samples, |i| {
                let mut rng = rng_for(seed, i);
                let a = &pool[rng.gen_range(0..pool.len())];
                let b = &pool[rng.gen_range(0..pool.len())];
                test(a, b)
            });
            Ok(hit.unwrap_or(P1Outcome::Holds {
                pairs_checked: samples,
            }))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteWitness {
    pub r: crate::exactalg::FieldElem,
    pub a: Mat2K,
    pub b: Mat2K,
    pub gab: Mat2K,
}

/// For `deg g < q`, a non-root `r ∈ F_q` and `a = r·e12`, `b = e21` with `g(ab) ≠ 0`.
pub fn finitecondi_witness(q: u64, g: &UniPoly) -> Result<FiniteWitness, GrpError> {
    let field = Field::from_q(q).map_err(|e| GrpError::InvalidParameter(e.to_string()))?;
    let order = field
        .order()
        .ok_or_else(|| GrpError::InvalidParameter("q must be a prime".into()))?;
    if g.field() != field {
        return Err(GrpError::InvalidParameter(format!(
            "g must have coefficients in {field}"
        )));
    }
    let deg = g.degree().ok_or(GrpError::ZeroPolynomial)?;
    if deg as u64 >= order {
        return Err(GrpError::PreconditionViolated(format!(
            "deg g = {deg} is not below q = {q}"
        )));
    }
    // prefer r != 0 so that a is not zero; r = 0 only when every unit is a root
    let mut candidates = field.elements().expect("finite");
    candidates.rotate_left(1);
    let r = candidates
        .into_iter()
        .find(|r| !g.eval(r).is_zero())
        .ok_or(GrpError::NoWitness)?;
    let a = Mat2K::unit(field, 1, 2).scaled(&r);
    let b = Mat2K::unit(field, 2, 1);
    let gab = eval_poly_at(g, &a.times(&b));
    debug_assert!(!gab.is_zero());
    Ok(FiniteWitness { r, a, b, gab })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BacOutcome {
    Holds {
        quadruples_checked: u64,
    },
    Violated {
        a: AlgElem,
        b: AlgElem,
        c: AlgElem,
        r: AlgElem,
        value: AlgElem,
    },
}

/// Checks `h(b·a·c·r) = 0` with `h = T·g(T)` for `a² = 0`, `bc = 0`; requires P₁ for `g`.
pub fn bac_check(
    alg: &Arc<FinAlgebra>,
    g: &UniPoly,
    mode: CheckMode,
    exec: Execution,
) -> Result<BacOutcome, GrpError> {
    if let P1Outcome::Violated { .. } = p1_check(alg, g, mode, exec)? {
        return Err(GrpError::PreconditionViolated(
            "the algebra does not have P1 for g".into(),
        ));
    }
    let h = g.shift(1);
    let test = |a: &AlgElem, b: &AlgElem, c: &AlgElem, r: &AlgElem| {
        let value = eval_poly_at(&h, &b.times(a).times(c).times(r));
        (!value.is_zero()).then(|| BacOutcome::Violated {
            a: a.clone(),
            b: b.clone(),
            c: c.clone(),
            r: r.clone(),
            value,
        })
    };
    match mode {
        CheckMode::Exhaustive => {
            let all = all_elements(alg)?;
            let sq: Vec<&AlgElem> = all.iter().filter(|a| a.times(a).is_zero()).collect();
            let bc: Vec<(&AlgElem, &AlgElem)> = all
                .iter()
                .flat_map(|b| all.iter().map(move |c| (b, c)))
                .filter(|(b, c)| b.times(c).is_zero())
                .collect();
            let (ns, nbc, nr) = (sq.len() as u64, bc.len() as u64, all.len() as u64);
            let total = ns * nbc * nr;
            let hit = exec.find_first(total, |i| {
                let (a, rest) = (i / (nbc * nr), i % (nbc * nr));
                let (b, c) = bc[(rest / nr) as usize];
                test(sq[a as usize], b, c, &all[(rest % nr) as usize])
            });
            Ok(hit.unwrap_or(BacOutcome::Holds {
                quadruples_checked: total,
            }))
        }
        CheckMode::Sampled { samples, seed } => {
            let pool = sampled_square_zero_pool(alg, samples, seed);
            let hit = exec.find_first(samples, |i| {
                let mut rng = rng_for(seed, i);
                let a = &pool[rng.gen_range(0..pool.len())];
                let b = AlgElem::random(alg, &mut rng);
                let c = (0..64)
                    .map(|_| AlgElem::random(alg, &mut rng))
                    .find(|c| b.times(c).is_zero())
                    .unwrap_or_else(|| AlgElem::zero(alg));
                let r = AlgElem::random(alg, &mut rng);
                test(a, &b, &c, &r)
            });
            Ok(hit.unwrap_or(BacOutcome::Holds {
                quadruples_checked: samples,
            }))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructuralReport {
    pub group: String,
    pub field: Field,
    /// `exhaustive` or `group-averages`.
    pub idempotent_mode: &'static str,
    pub idempotents_checked: usize,
    pub noncentral_idempotent: Option<AlgElem>,
    pub normalizer_pairs_checked: usize,
    /// `(g, h)` where `(g−1)hĝ = 0` disagrees with `h⟨g⟩h⁻¹ = ⟨g⟩`.
    pub normalizer_failures: Vec<(usize, usize)>,
}

impl StructuralReport {
    pub fn all_idempotents_central(&self) -> bool {
        self.noncentral_idempotent.is_none()
    }
}

/// Centrality of idempotents and the normalizer criterion on a group algebra.
pub fn structural_predicates(alg: &Arc<FinAlgebra>) -> Result<StructuralReport, GrpError> {
    let group = alg
        .group()
        .ok_or_else(|| GrpError::InvalidParameter("not a group algebra".into()))?
        .clone();
    let n = group.order();
    let (mode, idempotents): (&'static str, Vec<AlgElem>) =
        match exhaustive_size(alg, IDEMPOTENT_LIMIT) {
            Ok(_) => (
                "exhaustive",
                all_elements(alg)?
                    .into_iter()
                    .filter(|e| e.times(e) == *e)
                    .collect(),
            ),
            Err(_) => {
                let mut v: Vec<AlgElem> =
                    (0..n).filter_map(|g| hat_normalized(alg, g).ok()).collect();
                let total = (0..n).fold(AlgElem::zero(alg), |acc, g| {
                    acc.plus(&AlgElem::basis(alg, g))
                });
                if let Some(inv) = alg.field().from_i64(n as i64).inv() {
                    v.push(total.scaled(&inv));
                }
                ("group-averages", v)
            }
        };
    let noncentral_idempotent = idempotents.iter().find(|e| !e.is_central()).cloned();
    let one = AlgElem::one(alg);
    let mut failures = Vec::new();
    for g in 0..n {
        let gh = hat(alg, g)?;
        let sub = group.cyclic_subgroup(g);
        let g_minus_1 = AlgElem::basis(alg, g).minus(&one);
        for h in 0..n {
            let algebraic = g_minus_1
                .times(&AlgElem::basis(alg, h))
                .times(&gh)
                .is_zero();
            if algebraic != group.normalizes(h, &sub) {
                failures.push((g, h));
            }
        }
    }
    Ok(StructuralReport {
        group: group.name().to_string(),
        field: alg.field(),
        idempotent_mode: mode,
        idempotents_checked: idempotents.len(),
        noncentral_idempotent,
        normalizer_pairs_checked: n * n,
        normalizer_failures: failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grpalg::FiniteGroup;

    const F2: Field = Field::Prime(2);
    const SEQ: Execution = Execution::Sequential;

    fn lp(s: &str, f: Field) -> LaurentPoly {
        LaurentPoly::parse(s, f).unwrap()
    }

    #[test]
    fn falsify_examples() {
        let c6 = FinAlgebra::group_algebra(&FiniteGroup::cyclic(6).unwrap(), F2);
        let comm = lp("X*Y - Y*X", F2);
        assert_eq!(
            falsify_lpi(&comm, &c6, 200, 1, SEQ).unwrap(),
            FalsifyOutcome::NoneFound { trials: 200 }
        );
        let s3 = FinAlgebra::group_algebra(&FiniteGroup::sym(3).unwrap(), F2);
        assert!(matches!(
            falsify_lpi(&comm, &s3, 200, 1, SEQ).unwrap(),
            FalsifyOutcome::Counterexample { .. }
        ));
        assert_eq!(
            falsify_lpi(&LaurentPoly::zero(F2), &s3, 10, 1, SEQ).unwrap(),
            FalsifyOutcome::NoneFound { trials: 10 }
        );
    }

    #[test]
    fn falsify_is_deterministic_across_execution_modes() {
        let s3 = FinAlgebra::group_algebra(&FiniteGroup::sym(3).unwrap(), Field::Prime(3));
        let f = lp("X*Y*X^-1*Y^-1 - 1", Field::Prime(3));
        let a = falsify_lpi(&f, &s3, 500, 42, Execution::Sequential).unwrap();
        let b = falsify_lpi(&f, &s3, 500, 42, Execution::Parallel).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn standard_polynomials() {
        let m = |v| Mat2K::from_i64s(F2, v);
        let (e11, e12) = (m([1, 0, 0, 0]), m([0, 1, 0, 0]));
        assert_eq!(standard_poly(2, &[e11.clone(), e12.clone()]).unwrap(), e12);
        let a = m([1, 1, 0, 1]);
        assert!(standard_poly(2, &[a.clone(), a.pow(2)]).unwrap().is_zero());
        assert_eq!(
            standard_poly(3, std::slice::from_ref(&a)),
            Err(GrpError::ArityMismatch {
                expected: 3,
                got: 1
            })
        );
        let signs: i32 = signed_permutations(4)
            .iter()
            .map(|(_, e)| if *e { 1 } else { -1 })
            .sum();
        assert_eq!(signs, 0);
        assert_eq!(signed_permutations(4).len(), 24);
    }

    #[test]
    fn standard_poly_checks_on_algebras() {
        let exec = Execution::Sequential;
        let dual = FinAlgebra::dual_numbers(F2);
        assert_eq!(
            standard_poly_check(&dual, 2, CheckMode::Exhaustive, exec).unwrap(),
            StandardOutcome::Vanishes { tuples_checked: 16 }
        );
        let m2 = FinAlgebra::matrix_algebra(2, F2).unwrap();
        let hit = standard_poly_check(&m2, 2, CheckMode::Exhaustive, exec).unwrap();
        let StandardOutcome::NonZero { args, value } = hit else {
            panic!("S2 vanished on M2(F2)");
        };
        assert_eq!(standard_poly(2, &args).unwrap(), value);
        let sampled = CheckMode::Sampled {
            samples: 2000,
            seed: 4,
        };
        assert_eq!(
            standard_poly_check(&m2, 4, sampled, exec).unwrap(),
            StandardOutcome::Vanishes {
                tuples_checked: 2000
            }
        );
        assert!(matches!(
            standard_poly_check(&m2, 7, CheckMode::Exhaustive, exec),
            Err(GrpError::TooLargeForExhaustive { .. })
        ));
    }

    #[test]
    fn s4_vanishes_sampled_over_f3() {
        let f3 = Field::Prime(3);
        let mut rng = rng_for(3, 0);
        let mut random = || Mat2K::from_i64s(f3, std::array::from_fn(|_| rng.gen_range(0..3)));
        for _ in 0..20_000 {
            let xs = [random(), random(), random(), random()];
            assert!(standard_poly(4, &xs).unwrap().is_zero());
        }
    }

    #[test]
    fn p1_examples() {
        let sq = FinAlgebra::square_zero_pair(F2);
        let t2 = UniPoly::from_i64s(F2, &[0, 0, 1]);
        assert_eq!(
            p1_check(&sq, &t2, CheckMode::Exhaustive, SEQ).unwrap(),
            P1Outcome::Holds { pairs_checked: 64 }
        );
        let m2 = FinAlgebra::matrix_algebra(2, F2).unwrap();
        let t = UniPoly::t(F2);
        match p1_check(&m2, &t, CheckMode::Exhaustive, SEQ).unwrap() {
            P1Outcome::Violated { a, b, value } => {
                assert!(a.times(&a).is_zero() && b.times(&b).is_zero());
                assert_eq!(value, a.times(&b));
                assert!(!value.is_zero());
            }
            other => panic!("expected a violation, got {other:?}"),
        }
        // the pair from the proof is itself a violation
        let (e12, e21) = (AlgElem::basis(&m2, 1), AlgElem::basis(&m2, 2));
        assert_eq!(e12.times(&e21), AlgElem::basis(&m2, 0));
        assert_eq!(
            p1_check(&sq, &UniPoly::zero(F2), CheckMode::Exhaustive, SEQ),
            Err(GrpError::ZeroPolynomial)
        );
        let big = FinAlgebra::matrix_algebra(3, Field::Prime(5)).unwrap();
        assert!(matches!(
            p1_check(
                &big,
                &UniPoly::t(Field::Prime(5)),
                CheckMode::Exhaustive,
                SEQ
            ),
            Err(GrpError::TooLargeForExhaustive { .. })
        ));
        assert!(matches!(
            p1_check(
                &big,
                &UniPoly::t(Field::Prime(5)),
                CheckMode::Sampled {
                    samples: 200,
                    seed: 1
                },
                SEQ
            )
            .unwrap(),
            P1Outcome::Violated { .. }
        ));
    }

    #[test]
    fn finitecondi_examples() {
        let w = finitecondi_witness(2, &UniPoly::t(F2)).unwrap();
        assert_eq!(w.r, F2.one());
        assert_eq!(w.gab, Mat2K::unit(F2, 1, 1));
        let f3 = Field::Prime(3);
        let g = UniPoly::from_i64s(f3, &[0, 1, 1]);
        let w = finitecondi_witness(3, &g).unwrap();
        assert!(!g.eval(&w.r).is_zero());
        assert!(!w.gab.is_zero());
        assert!(matches!(
            finitecondi_witness(2, &UniPoly::from_i64s(F2, &[0, 1, 1])),
            Err(GrpError::PreconditionViolated(_))
        ));
        assert!(finitecondi_witness(4, &UniPoly::t(F2)).is_err());
    }

    #[test]
    fn bac_examples() {
        let sq = FinAlgebra::square_zero_pair(F2);
        let t2 = UniPoly::from_i64s(F2, &[0, 0, 1]);
        assert!(matches!(
            bac_check(
                &sq,
                &t2,
                CheckMode::Sampled {
                    samples: 500,
                    seed: 9
                },
                SEQ
            )
            .unwrap(),
            BacOutcome::Holds { .. }
        ));
        let m2 = FinAlgebra::matrix_algebra(2, F2).unwrap();
        assert!(matches!(
            bac_check(&m2, &UniPoly::t(F2), CheckMode::Exhaustive, SEQ),
            Err(GrpError::PreconditionViolated(_))
        ));
    }

    #[test]
    fn structural_examples() {
        let q = Field::Rational;
        let c4 = FinAlgebra::group_algebra(&FiniteGroup::cyclic(4).unwrap(), F2);
        let rep = structural_predicates(&c4).unwrap();
        assert!(rep.all_idempotents_central());
        assert_eq!(rep.idempotent_mode, "exhaustive");
        let s3 = FinAlgebra::group_algebra(&FiniteGroup::sym(3).unwrap(), q);
        let rep = structural_predicates(&s3).unwrap();
        assert_eq!(rep.normalizer_pairs_checked, 36);
        assert!(rep.normalizer_failures.is_empty());
        assert!(!rep.all_idempotents_central());
        let total = (0..6).fold(AlgElem::zero(&s3), |acc, g| {
            acc.plus(&AlgElem::basis(&s3, g))
        });
        let e = total.scaled(&q.from_i64(6).inv().unwrap());
        assert_eq!(e.times(&e), e);
        assert!(e.is_central());
    }

    #[test]
    fn normalizer_criterion_small_groups() {
        let groups = [
            FiniteGroup::cyclic(12).unwrap(),
            FiniteGroup::sym(3).unwrap(),
            FiniteGroup::dihedral(4).unwrap(),
            FiniteGroup::dihedral(6).unwrap(),
            FiniteGroup::quaternion8(),
            FiniteGroup::from_spec("cyclic:2 x sym:3").unwrap(),
            FiniteGroup::from_spec("cyclic:2 x cyclic:2 x cyclic:3").unwrap(),
        ];
        for g in &groups {
            for field in [F2, Field::Rational] {
                let alg = FinAlgebra::group_algebra(g, field);
                let rep = structural_predicates(&alg).unwrap();
                assert!(rep.normalizer_failures.is_empty(), "{}", g.name());
            }
        }
    }
}
