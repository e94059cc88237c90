//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use lpi_core::exactalg::{eval_poly_at, Field, Mat2K, Ring, UniPoly};
use lpi_core::expand::{expand, NCPoly};
use lpi_core::fcrep::{
    alternating_basis_rank, eval_laurent, extract_g, thekey_solve, unit_pair, RatFunc, UnitKind,
};
use lpi_core::grpalg::{
    bac_check, falsify_lpi, finitecondi_witness, p1_check, standard_poly, BacOutcome, CheckMode,
    FinAlgebra, FiniteGroup, P1Outcome,
};
use lpi_core::laurent::LaurentPoly;
use lpi_core::par::Execution;
use lpi_core::search::{enum_words, random_laurent, Runner};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const Q: Field = Field::Rational;
const F2: Field = Field::Prime(2);
const F3: Field = Field::Prime(3);
const F5: Field = Field::Prime(5);

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(limit: Duration, start: Instant) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took < limit, format!("took {took:?}, limit {limit:?}"))
}

fn runner() -> Runner {
    Runner::default()
}

fn ac1() -> Check {
    let t = Instant::now();
    let r = runner().classification(3);
    ensure(r.ok(), r.to_json())?;
    within(Duration::from_secs(1), t)?;
    Ok(format!("{} words with C' <= 3", r.checked))
}

fn ac2() -> Check {
    let t = Instant::now();
    let r = runner().factorization(4, 3);
    ensure(r.ok(), r.to_json())?;
    within(Duration::from_secs(10), t)?;
    Ok(format!("{} words with C <= 4", r.checked))
}

fn ac3() -> Check {
    let t = Instant::now();
    let r = runner().sign_recursion(5);
    ensure(r.ok(), r.to_json())?;
    within(Duration::from_secs(10), t)?;
    Ok(format!("{} words with C <= 5", r.checked))
}

fn ac4() -> Check {
    let r = runner().inverse_invariance(5);
    ensure(r.ok(), r.to_json())?;
    Ok(format!("{} words with C <= 5", r.checked))
}

fn ac5() -> Check {
    let t = Instant::now();
    let mut total = 0;
    for field in [Q, F3, F5] {
        let r = runner().verify_tables(4, field);
        ensure(r.ok(), r.to_json())?;
        total += r.checked;
    }
    ensure(total >= 1000, format!("only {total} words checked"))?;
    within(Duration::from_secs(60), t)?;
    Ok(format!("{total} word evaluations over Q, F3, F5"))
}

fn ac6() -> Check {
    let mut n = 0;
    for (field, seed) in [(Q, 6), (F3, 7)] {
        let r = runner().obstruction_consistency(100, 3, field, seed);
        ensure(r.ok(), r.to_json())?;
        n += r.checked;
    }
    Ok(format!("{n} random polynomials with C <= 3"))
}

fn ac7() -> Check {
    let f = LaurentPoly::parse("X*Y - Y*X", Q).map_err(|e| e.to_string())?;
    let m = f.obstruction_matrix().map_err(|e| e.to_string())?;
    ensure(m == Mat2K::from_i64s(Q, [0, 1, 0, 0]), format!("got {m}"))?;
    Ok(format!("obstruct(XY - YX) = {m}"))
}

fn ac8() -> Check {
    let t = Instant::now();
    let r = runner().support3(2, &[F2, F3, Q], 5, 8);
    ensure(r.ok(), r.to_json())?;
    within(Duration::from_secs(300), t)?;
    Ok(format!("{} candidates, 0 survivors", r.checked))
}

fn ac9() -> Check {
    for field in [Q, F3] {
        let rep = thekey_solve(field).map_err(|e| e.to_string())?;
        ensure(
            rep.solution_is_zero(),
            format!("nonzero space over {field}:\n{rep}"),
        )?;
        let rel: BTreeMap<char, RatFunc> = rep
            .relations
            .iter()
            .map(|r| (r.var, r.coeff.clone()))
            .collect();
        let poly = |c: &[i64]| RatFunc::from_poly(UniPoly::from_i64s(field, c));
        ensure(
            rel.get(&'C') == Some(&poly(&[])),
            format!("C relation over {field}"),
        )?;
        ensure(
            rel.get(&'D') == Some(&poly(&[1])),
            format!("A = D relation over {field}"),
        )?;
        ensure(
            rel.get(&'B') == Some(&poly(&[-1, -1])),
            format!("B relation over {field}"),
        )?;
    }
    Ok("zero space; C = 0, A = D, B = -(1+T)A over Q and F3".into())
}

fn ac10() -> Check {
    let up = unit_pair(UnitKind::Primary, Q);
    let f = LaurentPoly::parse("X - 1", Q).map_err(|e| e.to_string())?;
    let ex = extract_g(&f, &up, 2).map_err(|e| e.to_string())?;
    ensure(
        ex.g == UniPoly::from_i64s(Q, &[0, 0, 1]),
        format!("g = {}", ex.g),
    )?;
    let words = enum_words(2);
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut done = 0;
    while done < 50 {
        let f = random_laurent(&mut rng, &words, Q, 4, true);
        if eval_laurent(&f, &up).map_err(|e| e.to_string())?.is_zero() {
            continue;
        }
        let ex = extract_g(&f, &up, 3).map_err(|e| format!("{f}: {e}"))?;
        ensure(
            !ex.g.is_zero() && ex.g.coeff(0).is_zero(),
            format!("{f}: g = {}", ex.g),
        )?;
        done += 1;
    }
    Ok("g(X - 1) = T^2; 50 random inputs give g != 0, g(0) = 0".into())
}

fn ac11() -> Check {
    let words = enum_words(2);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..100 {
        let f = random_laurent(&mut rng, &words, Q, 5, true);
        let ts = expand(&f, 4);
        ensure(
            ts.constant_term() == f.augmentation(),
            format!("constant term of {f}"),
        )?;
        // truncation coherence: raising D only adds components of total degree > D
        for d in 1..4 {
            let small = expand(&f, d);
            let big = expand(&f, d + 2);
            let cut: BTreeMap<_, _> = big
                .components
                .into_iter()
                .filter(|(k, _)| k.iter().sum::<usize>() <= d)
                .collect();
            ensure(
                small.components == cut,
                format!("truncation mismatch for {f} at D = {d}"),
            )?;
        }
    }
    let comm = LaurentPoly::parse("X*Y*X^-1*Y^-1 - 1", Q).map_err(|e| e.to_string())?;
    let ts = expand(&comm, 4);
    let (m, degs) = lpi_core::expand::minimal_degree(&ts).map_err(|e| e.to_string())?;
    let xy = NCPoly::parse_with("X*Y - Y*X", Q, &|n| match n {
        "X" => Some(0),
        "Y" => Some(1),
        _ => None,
    })
    .map_err(|e| e.to_string())?;
    ensure(
        m == 2 && degs == vec![vec![1, 1]],
        format!("m = {m}, {degs:?}"),
    )?;
    ensure(ts.component(&[1, 1]) == xy, "p_(1,1) differs from XY - YX")?;
    Ok("100 constant terms, truncation coherence, commutator p_(1,1) = XY - YX, m = 2".into())
}

fn ac12() -> Check {
    let all: Vec<Mat2K> = (0..16u32)
        .map(|i| Mat2K::from_i64s(F2, std::array::from_fn(|k| ((i >> k) & 1) as i64)))
        .collect();
    let mut n = 0u64;
    for a in &all {
        for b in &all {
            for c in &all {
                for d in &all {
                    let s = standard_poly(4, &[a.clone(), b.clone(), c.clone(), d.clone()])
                        .map_err(|e| e.to_string())?;
                    ensure(s.is_zero(), format!("S4({a}, {b}, {c}, {d}) = {s}"))?;
                    n += 1;
                }
            }
        }
    }
    let s2 = standard_poly(2, &[Mat2K::unit(F2, 1, 1), Mat2K::unit(F2, 1, 2)])
        .map_err(|e| e.to_string())?;
    ensure(s2 == Mat2K::unit(F2, 1, 2), format!("S2(e11, e12) = {s2}"))?;
    Ok(format!("S4 = 0 on {n} quadruples; S2(e11, e12) = e12"))
}

fn monic_polys(field: Field, q: u64, deg: usize) -> Vec<UniPoly> {
    let count = q.pow(deg as u32);
    (0..count)
        .map(|mut i| {
            let mut c: Vec<_> = (0..deg)
                .map(|_| {
                    let x = field.element(i % q);
                    i /= q;
                    x
                })
                .collect();
            c.push(field.one());
            UniPoly::from_coeffs(field, c)
        })
        .collect()
}

fn ac13() -> Check {
    let (mut n, mut literal) = (0, 0);
    for q in [2u64, 3, 5] {
        let field = Field::from_q(q).map_err(|e| e.to_string())?;
        for deg in 0..q as usize {
            for g in monic_polys(field, q, deg) {
                let w = finitecondi_witness(q, &g).map_err(|e| format!("q={q}, g={g}: {e}"))?;
                ensure(!g.eval(&w.r).is_zero(), format!("g({}) = 0", w.r))?;
                let ab = w.a.times(&w.b);
                ensure(ab == Mat2K::unit(field, 1, 1).scaled(&w.r), "ab != r e11")?;
                let gab = eval_poly_at(&g, &ab);
                // g(r e11) = g(r) e11 + g(0) e22
                let expect = Mat2K::unit(field, 1, 1)
                    .scaled(&g.eval(&w.r))
                    .plus(&Mat2K::unit(field, 2, 2).scaled(&g.coeff(0)));
                ensure(
                    gab == expect && gab == w.gab,
                    format!("q={q}, g={g}: g(ab) = {gab}"),
                )?;
                if g.coeff(0).is_zero() {
                    ensure(
                        gab == Mat2K::unit(field, 1, 1).scaled(&g.eval(&w.r)),
                        "g(ab) != g(r)e11",
                    )?;
                    literal += 1;
                }
                ensure(!gab.is_zero(), "g(ab) = 0")?;
                n += 1;
            }
        }
    }
    Ok(format!(
        "{n} monic g with deg g < q, q in {{2, 3, 5}}: g(ab) = g(r)e11 + g(0)e22 != 0; \
         literally g(r)e11 for the {literal} with g(0) = 0"
    ))
}

fn ac14() -> Check {
    let alg = FinAlgebra::square_zero_pair(F2);
    let g = UniPoly::from_i64s(F2, &[0, 0, 1]);
    let exec = Execution::default();
    match p1_check(&alg, &g, CheckMode::Exhaustive, exec).map_err(|e| e.to_string())? {
        P1Outcome::Holds { .. } => {}
        other => return Err(format!("P1 fails: {other:?}")),
    }
    match bac_check(&alg, &g, CheckMode::Exhaustive, exec).map_err(|e| e.to_string())? {
        BacOutcome::Holds { quadruples_checked } => Ok(format!(
            "P1 for T^2 holds; h = T^3 vanishes on all {quadruples_checked} qualifying quadruples of 16^4"
        )),
        other => Err(format!("bac check fails: {other:?}")),
    }
}

fn ac15() -> Check {
    for field in [Q, F2] {
        let (rank, n) = alternating_basis_rank(field, 8);
        ensure(
            n == 17 && rank == 17,
            format!("rank {rank} of {n} over {field}"),
        )?;
    }
    Ok("17 alternating words up to length 8 independent over Q and F2".into())
}

fn ac16() -> Check {
    let seq = Runner::new(Execution::Sequential);
    let par = Runner::new(Execution::Parallel);
    let runs: Vec<(String, String, String)> = vec![
        (
            "obstruction-consistency".into(),
            seq.obstruction_consistency(50, 3, Q, 16).to_json(),
            par.obstruction_consistency(50, 3, Q, 16).to_json(),
        ),
        (
            "support3".into(),
            seq.support3(1, &[F3, Q], 5, 16).to_json(),
            par.support3(1, &[F3, Q], 5, 16).to_json(),
        ),
        (
            "cprime-bound".into(),
            seq.cprime_bound(3, 50, F5, 16).to_json(),
            par.cprime_bound(3, 50, F5, 16).to_json(),
        ),
    ];
    for (name, a, b) in &runs {
        ensure(a == b, format!("{name} differs between runs"))?;
    }
    let s3 = FinAlgebra::group_algebra(&FiniteGroup::sym(3).unwrap(), F3);
    let f = LaurentPoly::parse("X*Y*X^-1*Y^-1 - 1", F3).unwrap();
    let x = falsify_lpi(&f, &s3, 300, 16, Execution::Sequential).map_err(|e| e.to_string())?;
    let y = falsify_lpi(&f, &s3, 300, 16, Execution::Parallel).map_err(|e| e.to_string())?;
    ensure(x == y, "falsify_lpi differs between runs")?;
    let again = Runner::default()
        .obstruction_consistency(50, 3, Q, 16)
        .to_json();
    ensure(again == runs[0].1, "re-run differs")?;
    Ok("identical JSON across re-runs and execution modes".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 16] = [
        ("cumulus-one classification", ac1),
        ("factorization", ac2),
        ("sign recursion", ac3),
        ("inverse invariance", ac4),
        ("leading-term tables", ac5),
        ("obstruction vs evaluation", ac6),
        ("commutator certificate", ac7),
        ("support-3 campaign", ac8),
        ("linear-system solver", ac9),
        ("witness extraction", ac10),
        ("expansion", ac11),
        ("standard polynomial on M2(F2)", ac12),
        ("finite-field witnesses", ac13),
        ("square-zero chain", ac14),
        ("faithfulness", ac15),
        ("determinism", ac16),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = run();
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("[PASS] AC-{} {name} ({secs:.2}s): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("[FAIL] AC-{} {name} ({secs:.2}s): {why}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
