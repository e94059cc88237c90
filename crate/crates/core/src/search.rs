//! Verification campaigns over enumerated words and sampled polynomials.
//!
//! Every campaign returns a [`CampaignReport`]. Enumeration order is by cumulus
//! then lexicographic, randomness comes from one master seed with a separate
//! stream per sample, and wall-clock timing is opt-in, so equal inputs give
//! byte-identical JSON.

use std::collections::HashSet;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::exactalg::{Field, FieldElem, Mat2K, Ring};
use crate::fcrep::{eval_laurent, eval_word, falsify, table_leading_term, unit_pair, UnitKind};
use crate::laurent::LaurentPoly;
use crate::par::Execution;
use crate::words::{
    cumulus_one_words, factor_cumulus_one, sgn_recursive, words_by_c_prime, MConvention, Word,
};

/// At most this many failures are listed in a report; `failed` still counts all.
pub const MAX_LISTED_FAILURES: usize = 100;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CampaignReport {
    pub campaign: String,
    pub params: Value,
    pub checked: u64,
    pub passed: u64,
    pub failed: u64,
    pub failures: Vec<Value>,
    pub seed: Option<u64>,
    pub duration_ms: u64,
}

impl CampaignReport {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn summary(&self) -> String {
        format!(
            "{}: checked {}, passed {}, failed {}",
            self.campaign, self.checked, self.passed, self.failed
        )
    }
}

/// Campaign driver: execution mode plus whether to record wall-clock time.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Runner {
    pub exec: Execution,
    pub timing: bool,
}

impl Runner {
    pub fn new(exec: Execution) -> Self {
        Runner {
            exec,
            timing: false,
        }
    }

    pub fn with_timing(mut self, timing: bool) -> Self {
        self.timing = timing;
        self
    }

    /// `outcomes` holds one entry per check: `None` on success, the failure record otherwise.
    fn report(
        &self,
        campaign: &str,
        params: Value,
        seed: Option<u64>,
        body: impl FnOnce(Execution) -> Vec<Option<Value>>,
    ) -> CampaignReport {
        let start = Instant::now();
        let outcomes = body(self.exec);
        let checked = outcomes.len() as u64;
        let all_failures: Vec<Value> = outcomes.into_iter().flatten().collect();
        let failed = all_failures.len() as u64;
        CampaignReport {
            campaign: campaign.to_string(),
            params,
            checked,
            passed: checked - failed,
            failed,
            failures: all_failures.into_iter().take(MAX_LISTED_FAILURES).collect(),
            seed,
            duration_ms: if self.timing {
                start.elapsed().as_millis() as u64
            } else {
                0
            },
        }
    }

    /// Cumulus-one words are exactly the six listed ones, over all words with `C' <= c_prime_max`.
    pub fn classification(&self, c_prime_max: u64) -> CampaignReport {
        let six: HashSet<Word> = cumulus_one_words().into_iter().collect();
        let words = words_by_c_prime(c_prime_max);
        self.report(
            "cumulus-one-classification",
            json!({ "c_prime_max": c_prime_max }),
            None,
            |ex| {
                ex.map(&words, |w| {
                    let c = w.cumulus();
                    ((c == 1) != six.contains(w)).then(|| json!({ "word": w.to_string(), "C": c }))
                })
            },
        )
    }

    /// Greedy factorization recomposes, has `C(w)` factors of cumulus one, and
    /// (for `C <= minimality_max`) no shorter product of cumulus-one words equals `w`.
    pub fn factorization(&self, c_max: u64, minimality_max: u64) -> CampaignReport {
        let words = enum_words(c_max);
        let shorter = products_up_to(minimality_max.saturating_sub(1) as usize);
        self.report(
            "factorization",
            json!({ "c_max": c_max, "minimality_max": minimality_max }),
            None,
            |ex| {
                ex.map(&words, |w| {
                    let c = w.cumulus();
                    let factors = match factor_cumulus_one(w) {
                        Ok(f) => f,
                        Err(e) => {
                            return Some(json!({ "word": w.to_string(), "problem": e.to_string() }))
                        }
                    };
                    let product = factors.iter().fold(Word::identity(), |acc, f| acc.mul(f));
                    let problem = if product != *w {
                        Some("factors do not recompose")
                    } else if factors.len() as u64 != c {
                        Some("factor count differs from C(w)")
                    } else if factors.iter().any(|f| f.cumulus() != 1) {
                        Some("a factor has cumulus other than 1")
                    } else if c <= minimality_max
                        && shorter
                            .iter()
                            .take(c as usize)
                            .any(|level| level.contains(w))
                    {
                        Some("a shorter product exists")
                    } else {
                        None
                    };
                    problem.map(|p| json!({ "word": w.to_string(), "C": c, "problem": p }))
                })
            },
        )
    }

    /// `sgn_recursive(w) = (-1)^N(w)`.
    pub fn sign_recursion(&self, c_max: u64) -> CampaignReport {
        let words = enum_words(c_max);
        self.report("sign-recursion", json!({ "c_max": c_max }), None, |ex| {
            ex.map(&words, |w| {
                let direct = w.sgn();
                let rec = sgn_recursive(w).unwrap_or(0);
                (direct != rec)
                    .then(|| json!({ "word": w.to_string(), "direct": direct, "recursive": rec }))
            })
        })
    }

    /// `C(w) = C(w^-1)`.
    pub fn inverse_invariance(&self, c_max: u64) -> CampaignReport {
        let words = enum_words(c_max);
        self.report(
            "inverse-invariance",
            json!({ "c_max": c_max }),
            None,
            |ex| {
                ex.map(&words, |w| {
                    let (c, ci) = (w.cumulus(), w.inv().cumulus());
                    (c != ci).then(|| json!({ "word": w.to_string(), "C": c, "C_inverse": ci }))
                })
            },
        )
    }

    pub fn verify_tables(&self, c_max: u64, field: Field) -> CampaignReport {
        self.verify_tables_with(c_max, field, MConvention::OrderSensitive)
    }

    /// Degree `2C(w)` and leading coefficient `sgn(w)·table(B, E)` of `Φ(w)`
    /// under the primary pair, with invariants computed by `conv`.
    pub fn verify_tables_with(
        &self,
        c_max: u64,
        field: Field,
        conv: MConvention,
    ) -> CampaignReport {
        let words = enum_words(c_max);
        let up = unit_pair(UnitKind::Primary, field);
        let name = match conv {
            MConvention::OrderSensitive => "verify-tables",
            MConvention::Symmetric => "verify-tables-symmetric-m",
        };
        self.report(
            name,
            json!({ "c_max": c_max, "field": field.to_string() }),
            None,
            |ex| {
                ex.map(&words, |w| {
                    let inv = w.invariants_with(conv).expect("rank two");
                    let m = eval_word(w, &up).expect("rank two");
                    let d = 2 * inv.c as usize;
                    let mut expect = table_leading_term(inv.b, inv.e, field).expect("non-identity");
                    if inv.sgn < 0 {
                        expect = expect.negate();
                    }
                    let got = m.leading_coeff_at(d);
                    (m.degree() != Some(d) || got != expect).then(|| {
                        json!({
                            "word": w.to_string(),
                            "C": inv.c,
                            "degree": m.degree(),
                            "expected": expect.to_strings(),
                            "leading": got.to_strings(),
                        })
                    })
                })
            },
        )
    }

    /// Obstruction matrix equals the `T^{2C(f)}` coefficient of `Φ(f)` on random `f`.
    pub fn obstruction_consistency(
        &self,
        samples: u64,
        c_max: u64,
        field: Field,
        seed: u64,
    ) -> CampaignReport {
        let words = enum_words(c_max);
        let up = unit_pair(UnitKind::Primary, field);
        self.report(
            "obstruction-consistency",
            json!({ "samples": samples, "c_max": c_max, "field": field.to_string() }),
            Some(seed),
            |ex| {
                ex.map_range(samples, |i| {
                    let mut rng = stream(seed, i);
                    let f = random_laurent(&mut rng, &words, field, 5, true);
                    let c = f.max_cumulus().expect("nonzero");
                    let phi = eval_laurent(&f, &up).expect("two variables");
                    let lead = phi.leading_coeff_at(2 * c as usize);
                    let obs = f.obstruction_matrix().expect("nonzero");
                    let deg_ok = phi.degree().is_none_or(|d| d <= 2 * c as usize);
                    (lead != obs || !deg_ok).then(|| {
                        json!({
                            "f": f.to_string(),
                            "C": c,
                            "obstruction": obs.to_strings(),
                            "leading": lead.to_strings(),
                        })
                    })
                })
            },
        )
    }

    /// Every `f = 1 + a1·w1 + a2·w2` with `w1 != w2`, `C(w_i) <= c_max` is falsified.
    pub fn support3(
        &self,
        c_max: u64,
        fields: &[Field],
        rational_samples: usize,
        seed: u64,
    ) -> CampaignReport {
        let words = enum_words(c_max);
        let mut cases: Vec<(FieldElem, FieldElem, usize, usize)> = Vec::new();
        for &field in fields {
            let coeffs: Vec<(FieldElem, FieldElem)> = match field.elements() {
                Some(all) => {
                    let nz: Vec<FieldElem> = all.into_iter().filter(|c| !c.is_zero()).collect();
                    nz.iter()
                        .flat_map(|a| nz.iter().map(move |b| (a.clone(), b.clone())))
                        .collect()
                }
                None => {
                    let mut rng = stream(seed, 0);
                    (0..rational_samples)
                        .map(|_| (random_coeff(&mut rng, field), random_coeff(&mut rng, field)))
                        .collect()
                }
            };
            for i in 0..words.len() {
                for j in i + 1..words.len() {
                    for (a, b) in &coeffs {
                        cases.push((a.clone(), b.clone(), i, j));
                    }
                }
            }
        }
        let field_names: Vec<String> = fields.iter().map(ToString::to_string).collect();
        self.report(
            "support3",
            json!({ "c_max": c_max, "fields": field_names, "rational_samples": rational_samples }),
            Some(seed),
            |ex| {
                ex.map(&cases, |(a, b, i, j)| {
                    let field = a.field();
                    let mut f = LaurentPoly::constant(field.one());
                    f.add_term(words[*i].clone(), a.clone());
                    f.add_term(words[*j].clone(), b.clone());
                    match falsify(&f) {
                        Ok(Some(_)) => None,
                        Ok(None) => Some(json!({ "f": f.to_string(), "field": field.to_string(), "survived": true })),
                        Err(e) => Some(json!({ "f": f.to_string(), "field": field.to_string(), "error": e.to_string() })),
                    }
                })
            },
        )
    }

    /// `deg Φ(f) <= 2C'(f)` under the alternate pair, for all words with
    /// `C' <= c_max` and for random combinations of them.
    pub fn cprime_bound(
        &self,
        c_max: u64,
        samples: u64,
        field: Field,
        seed: u64,
    ) -> CampaignReport {
        let words = words_by_c_prime(c_max);
        let up = unit_pair(UnitKind::Alternate, field);
        let check = |f: &LaurentPoly| {
            let bound = 2 * f.max_c_prime() as usize;
            let phi = eval_laurent(f, &up).expect("two variables");
            phi.degree()
                .filter(|&d| d > bound)
                .map(|d| json!({ "f": f.to_string(), "degree": d, "bound": bound }))
        };
        self.report(
            "cprime-bound",
            json!({ "c_max": c_max, "samples": samples, "field": field.to_string() }),
            Some(seed),
            |ex| {
                let mut out = ex.map(&words, |w| {
                    check(&LaurentPoly::monomial(w.clone(), field.one()))
                });
                out.extend(ex.map_range(samples, |i| {
                    let mut rng = stream(seed, i);
                    check(&random_laurent(&mut rng, &words, field, 5, true))
                }));
                out.push(check(&LaurentPoly::zero(field)));
                out
            },
        )
    }
}

fn stream(seed: u64, i: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(i);
    rng
}

/// Nonzero coefficient: uniform in `F_p^*`, or `±n/d` with `n <= 5`, `d <= 3` over ℚ.
pub fn random_coeff(rng: &mut impl Rng, field: Field) -> FieldElem {
    match field.order() {
        Some(q) => field.element(rng.gen_range(1..q)),
        None => {
            let n: i64 = rng.gen_range(1..=5) * if rng.gen_bool(0.5) { 1 } else { -1 };
            let d: i64 = rng.gen_range(1..=3);
            field
                .from_ratio(&n.into(), &d.into())
                .expect("nonzero denominator")
        }
    }
}

/// Up to `max_terms` distinct words from `words` with random nonzero coefficients,
/// optionally plus a constant term. Never zero.
pub fn random_laurent(
    rng: &mut impl Rng,
    words: &[Word],
    field: Field,
    max_terms: usize,
    allow_constant: bool,
) -> LaurentPoly {
    loop {
        let mut f = LaurentPoly::zero(field);
        for _ in 0..rng.gen_range(1..=max_terms) {
            let w = words[rng.gen_range(0..words.len())].clone();
            f.add_term(w, random_coeff(rng, field));
        }
        if allow_constant && rng.gen_bool(0.3) {
            f.add_term(Word::identity(), random_coeff(rng, field));
        }
        if f.support().any(|w| !w.is_identity()) {
            return f;
        }
    }
}

/// Every word with `1 <= C(w) <= c_max`, once, ordered by `C` then lexicographically.
///
/// Built from sequences of cumulus-one words whose product keeps the sequence
/// length as its cumulus.
pub fn enum_words(c_max: u64) -> Vec<Word> {
    let mut out: Vec<Word> = products_up_to(c_max as usize)
        .into_iter()
        .enumerate()
        .skip(1)
        .flat_map(|(k, set)| set.into_iter().filter(move |w| w.cumulus() == k as u64))
        .collect();
    out.sort_by(|a, b| (a.cumulus(), a).cmp(&(b.cumulus(), b)));
    out
}

/// `result[k]` is the set of products of exactly `k` cumulus-one words, for `k <= max_len`.
fn products_up_to(max_len: usize) -> Vec<HashSet<Word>> {
    let ones = cumulus_one_words();
    let mut levels = vec![HashSet::from([Word::identity()])];
    for _ in 0..max_len {
        let next = levels
            .last()
            .unwrap()
            .iter()
            .flat_map(|w| ones.iter().map(move |x| w.mul(x)))
            .collect();
        levels.push(next);
    }
    levels
}

/// Direct obstruction/evaluation agreement on one polynomial, used by examples and tests.
pub fn obstruction_matches_leading(f: &LaurentPoly) -> bool {
    let Ok(c) = f.max_cumulus() else {
        return true;
    };
    let up = unit_pair(UnitKind::Primary, f.field());
    let lead: Mat2K = eval_laurent(f, &up)
        .expect("two variables")
        .leading_coeff_at(2 * c as usize);
    f.obstruction_matrix().is_ok_and(|o| o == lead) || c == 0
}

#[cfg(test)]
mod tests {
    use super::*;

    const SEQ: Runner = Runner {
        exec: Execution::Sequential,
        timing: false,
    };

    #[test]
    fn enum_words_examples() {
        let one = enum_words(1);
        let mut six = cumulus_one_words().to_vec();
        six.sort();
        let mut got = one.clone();
        got.sort();
        assert_eq!(got, six);
        let two = enum_words(2);
        assert!(two.contains(&Word::parse("X*Y^-1").unwrap()));
        assert!(two.contains(&Word::parse("X^2").unwrap()));
        assert!(!two.contains(&Word::identity()));
        for w in enum_words(4) {
            assert_eq!(factor_cumulus_one(&w).unwrap().len() as u64, w.cumulus());
        }
    }

    #[test]
    fn enum_words_agrees_with_independent_oracle() {
        for c in 1..=3 {
            let ours: HashSet<Word> = enum_words(c).into_iter().collect();
            assert_eq!(ours.len(), enum_words(c).len(), "duplicates");
            // C' = C + M and M <= C, so every word of cumulus <= c has C' <= 2c
            let oracle: HashSet<Word> = words_by_c_prime(2 * c)
                .into_iter()
                .filter(|w| w.cumulus() <= c)
                .collect();
            assert_eq!(ours, oracle, "c = {c}");
        }
    }

    #[test]
    fn small_campaigns_pass() {
        assert!(SEQ.classification(3).ok());
        assert!(SEQ.factorization(3, 3).ok());
        assert!(SEQ.sign_recursion(3).ok());
        assert!(SEQ.inverse_invariance(3).ok());
        assert!(SEQ.verify_tables(2, Field::Rational).ok());
        assert!(SEQ.obstruction_consistency(20, 2, Field::Prime(5), 1).ok());
        assert!(SEQ.cprime_bound(2, 20, Field::Rational, 1).ok());
    }

    #[test]
    fn symmetric_m_mutant_fails_at_cumulus_two() {
        let r1 = SEQ.verify_tables_with(1, Field::Rational, MConvention::Symmetric);
        assert!(r1.ok());
        let r2 = SEQ.verify_tables_with(2, Field::Rational, MConvention::Symmetric);
        assert!(!r2.ok());
        assert_eq!(
            r2.failures.len() as u64,
            r2.failed.min(MAX_LISTED_FAILURES as u64)
        );
    }

    #[test]
    fn support3_examples() {
        let r = SEQ.support3(1, &[Field::Prime(2), Field::Prime(3)], 2, 7);
        assert!(r.ok(), "{}", r.to_json());
        assert_eq!(r.checked, 15 * (1 + 4));
    }

    #[test]
    fn reports_are_deterministic() {
        let a =
            Runner::new(Execution::Sequential).obstruction_consistency(30, 2, Field::Rational, 11);
        let b =
            Runner::new(Execution::Parallel).obstruction_consistency(30, 2, Field::Rational, 11);
        assert_eq!(a.to_json(), b.to_json());
        let back: CampaignReport = serde_json::from_str(&a.to_json()).unwrap();
        assert_eq!(back, a);
    }

    #[test]
    fn single_word_obstruction_is_signed_table_entry() {
        let q = Field::Rational;
        for w in enum_words(3) {
            let c = q.from_i64(3);
            let f = LaurentPoly::monomial(w.clone(), c.clone());
            let inv = w.invariants().unwrap();
            let mut expect = table_leading_term(inv.b, inv.e, q).unwrap().scaled(&c);
            if inv.sgn < 0 {
                expect = expect.negate();
            }
            assert_eq!(f.obstruction_matrix().unwrap(), expect);
            assert!(obstruction_matches_leading(&f));
        }
    }
}
