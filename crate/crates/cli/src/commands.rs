use std::sync::Arc;

use anyhow::{bail, Context, Result};
use lpi_core::exactalg::{eval_poly_at, parse_scalar, Field, Ring, UniPoly};
use lpi_core::expand::NCPoly;
use lpi_core::expand::{default_truncation, expand, minimal_component_sum, minimal_degree};
use lpi_core::fcrep::{
    eval_laurent, extract_g, falsify, in_l, p1_fails_on_fc, phi_eval, thekey_solve,
    thekey_solve_with, unit_pair, Certificate, FcError, UnitKind,
};
use lpi_core::grpalg::{
    bac_check, falsify_lpi, finitecondi_witness, p1_check, standard_poly_check,
    structural_predicates, AlgElem, BacOutcome, CheckMode, FalsifyOutcome, FinAlgebra, P1Outcome,
    StandardOutcome,
};
use lpi_core::laurent::LaurentPoly;
use lpi_core::par::Execution;
use lpi_core::search::{CampaignReport, Runner};
use lpi_core::words::{factor_cumulus_one, Word};
use serde_json::{json, Value};

use crate::output::{bracketed, mat_json, strings, Output, Status, INCONCLUSIVE, NOT_AN_LPI};
use crate::{AlgebraOpt, Command, GrpalgCommand, Mode, ModeOpt};

pub struct Ctx {
    pub exec: Execution,
    pub timing: bool,
}

pub fn run(cmd: &Command, ctx: &Ctx) -> Result<Output> {
    let runner = Runner::new(ctx.exec).with_timing(ctx.timing);
    match cmd {
        Command::Word { word } => word_cmd(word),
        Command::Obstruct { f, field, chain } => obstruct(f, field.field, *chain),
        Command::Eval { f, field, units } => eval(f, field.field, units.units),
        Command::InL { expr, field } => in_l_cmd(expr, field.field),
        Command::ExtractG {
            f,
            field,
            units,
            conj_bound,
        } => extract(f, field.field, units.units, *conj_bound),
        Command::Thekey { field, conjugators } => thekey(field.field, conjugators),
        Command::Expand { f, field, bound } => expand_cmd(f, field.field, *bound),
        Command::VerifyTables { cmax, field } => {
            Ok(campaign(runner.verify_tables(*cmax, field.field)))
        }
        Command::Support3 {
            cmax,
            fields,
            trials,
            seed,
        } => Ok(campaign(runner.support3(*cmax, fields, *trials, seed.seed))),
        Command::CprimeBound {
            cmax,
            trials,
            field,
            seed,
        } => Ok(campaign(runner.cprime_bound(
            *cmax,
            *trials,
            field.field,
            seed.seed,
        ))),
        Command::Grpalg { action } => grpalg(action, ctx),
        Command::P1 { algebra, g, mode } => p1(algebra, g, mode, ctx),
        Command::Bac { algebra, g, mode } => bac(algebra, g, mode, ctx),
        Command::Finitecondi { q, g } => finitecondi(*q, g),
        Command::StandardPoly { k, algebra, mode } => standard(*k, algebra, mode, ctx),
    }
}

fn word_cmd(text: &str) -> Result<Output> {
    let w = Word::parse(text)?;
    let inv = w.invariants()?;
    let factors = factor_cumulus_one(&w)?;
    let mut json = serde_json::to_value(inv)?;
    json["word"] = json!(w.to_string());
    json["factors"] = strings(&factors);
    let mut out = Output::new(Status::Ok, json);
    out.kv("word", &w)
        .kv("B", inv.b)
        .kv("E", inv.e)
        .kv("N", inv.n)
        .kv("M", inv.m)
        .kv("sgn", inv.sgn)
        .kv("C", inv.c)
        .kv("C'", inv.c_prime)
        .kv("factors", bracketed(&factors));
    Ok(out)
}

/// Parses `f`, embedding it into two variables when it uses more.
fn two_var_poly(text: &str, field: Field) -> Result<(LaurentPoly, Option<String>)> {
    let f = LaurentPoly::parse(text, field)?;
    if f.nvars() > 2 {
        let g = f.reduce_to_two_vars();
        let note = format!("f uses {} variables; embedded as {g}", f.nvars());
        return Ok((g, Some(note)));
    }
    Ok((f, None))
}

fn certificate_json(c: &Certificate) -> Value {
    match c {
        Certificate::Obstruction { transform, matrix } => json!({
            "kind": "obstruction",
            "transform": transform.as_ref().map(ToString::to_string),
            "matrix": mat_json(matrix),
        }),
        Certificate::Evaluation { units, value } => json!({
            "kind": "evaluation",
            "units": units,
            "value": mat_json(value),
        }),
    }
}

fn identity_verdict(
    command: &str,
    f: &LaurentPoly,
    note: Option<String>,
    cert: Option<Certificate>,
    mut extra: serde_json::Map<String, Value>,
) -> Output {
    let verdict = if cert.is_some() {
        NOT_AN_LPI
    } else {
        INCONCLUSIVE
    };
    extra.insert("command".into(), json!(command));
    extra.insert("f".into(), json!(f.to_string()));
    extra.insert("field".into(), json!(f.field().to_string()));
    extra.insert("embedded".into(), json!(note));
    extra.insert("algebra".into(), json!("U(F_C)"));
    extra.insert("verdict".into(), json!(verdict));
    extra.insert(
        "certificate".into(),
        cert.as_ref().map_or(Value::Null, certificate_json),
    );
    let status = if cert.is_some() {
        Status::Violated
    } else {
        Status::Ok
    };
    let mut out = Output::new(status, Value::Object(extra));
    out.kv("f", f).kv("field", f.field());
    if let Some(n) = note {
        out.line(n);
    }
    if let Some(c) = &cert {
        out.kv("certificate", c);
        out.line("verdict: NOT an LPI of U(F_C) (certificate attached)");
    } else {
        out.kv("verdict", INCONCLUSIVE);
    }
    out
}

fn obstruct(text: &str, field: Field, chain: bool) -> Result<Output> {
    let (f, note) = two_var_poly(text, field)?;
    let mut extra = serde_json::Map::new();
    if f.is_zero() {
        extra.insert("note".into(), json!("f is zero"));
        return Ok(identity_verdict("obstruct", &f, note, None, extra));
    }
    extra.insert("C".into(), json!(f.max_cumulus()?));
    let cert = if chain {
        falsify(&f)?
    } else {
        let matrix = f.obstruction_matrix()?;
        extra.insert("matrix".into(), mat_json(&matrix));
        (!matrix.is_zero()).then_some(Certificate::Obstruction {
            transform: None,
            matrix,
        })
    };
    Ok(identity_verdict("obstruct", &f, note, cert, extra))
}

fn eval(text: &str, field: Field, kind: UnitKind) -> Result<Output> {
    let (f, note) = two_var_poly(text, field)?;
    let value = eval_laurent(&f, &unit_pair(kind, field))?;
    let (u, v) = kind.factorizations();
    let mut extra = serde_json::Map::new();
    extra.insert("units".into(), json!({ "kind": kind, "u": u, "v": v }));
    extra.insert("value".into(), mat_json(&value));
    extra.insert("degree".into(), json!(value.degree()));
    let cert = (!value.is_zero()).then_some(Certificate::Evaluation {
        units: kind,
        value: value.clone(),
    });
    let mut out = identity_verdict("eval", &f, note, cert, extra);
    out.kv("u", u).kv("v", v).kv("f(u, v)", &value);
    Ok(out)
}

fn in_l_cmd(expr: &str, field: Field) -> Result<Output> {
    let p = NCPoly::parse_ab(expr, field)?;
    let m = phi_eval(&p)?;
    let inside = in_l(&m);
    let json = json!({
        "expr": p.render_ab(),
        "field": field.to_string(),
        "x": m.x.to_string(),
        "A": m.a.to_string(),
        "B": m.b.to_string(),
        "C": m.c.to_string(),
        "D": m.d.to_string(),
        "matrix": mat_json(&m.to_mat()),
        "in_L": inside,
    });
    let mut out = Output::new(Status::Ok, json);
    out.kv("expr", p.render_ab())
        .kv("phi", &m)
        .kv("in L (x = 0 and T*A + B + C + D = 0)", inside);
    Ok(out)
}

fn extract(text: &str, field: Field, kind: UnitKind, conj_bound: usize) -> Result<Output> {
    let (f, note) = two_var_poly(text, field)?;
    let up = unit_pair(kind, field);
    let ex = match extract_g(&f, &up, conj_bound) {
        Ok(ex) => ex,
        Err(FcError::StillInL(k)) => {
            let mut out = Output::new(
                Status::Violated,
                json!({ "f": f.to_string(), "units": kind, "g": null, "conj_bound": k,
                        "reason": "every conjugate tried lies in L" }),
            );
            out.line(format!(
                "no g found: all conjugates by words of length <= {k} lie in L"
            ));
            return Ok(out);
        }
        Err(e) => return Err(e.into()),
    };
    let (sigma, tau) = ex.sigma_tau.exprs();
    let on_fc = p1_fails_on_fc(&ex.g)?;
    let json = json!({
        "f": f.to_string(),
        "embedded": note,
        "units": kind,
        "g": ex.g.to_string(),
        "sigma": sigma,
        "tau": tau,
        "conjugator": ex.conjugator,
        "r": mat_json(&ex.r.to_mat()),
        "g_of_ab": mat_json(&on_fc),
    });
    let mut out = Output::new(Status::Ok, json);
    if let Some(n) = note {
        out.line(n);
    }
    out.kv("r = f(u, v)", &ex.r)
        .kv(
            "conjugator",
            if ex.conjugator.is_empty() {
                "none".to_string()
            } else {
                ex.conjugator.join(" * ")
            },
        )
        .kv("sigma, tau", format!("{sigma}, {tau}"))
        .kv("g", &ex.g)
        .kv("g(phi(ab)) on F_C", &on_fc);
    Ok(out)
}

fn thekey(field: Field, conjugators: &[String]) -> Result<Output> {
    let report = if conjugators.is_empty() {
        thekey_solve(field)?
    } else {
        let refs: Vec<&str> = conjugators.iter().map(String::as_str).collect();
        thekey_solve_with(field, &refs)?
    };
    let json = json!({
        "field": field.to_string(),
        "rows": report.rows.iter().map(|r| json!({
            "source": r.source,
            "coeffs": strings(&r.coeffs),
        })).collect::<Vec<_>>(),
        "relations": strings(&report.relations),
        "final_equation": report.final_equation.as_ref().map(ToString::to_string),
        "rank": report.rank,
        "residual": report.residual.iter().map(|v| strings(v)).collect::<Vec<_>>(),
        "solution_is_zero": report.solution_is_zero(),
    });
    let status = if report.solution_is_zero() {
        Status::Ok
    } else {
        Status::Violated
    };
    let mut out = Output::new(status, json);
    out.text = format!("{report}\n");
    Ok(out)
}

fn expand_cmd(text: &str, field: Field, bound: Option<usize>) -> Result<Output> {
    let f = LaurentPoly::parse(text, field)?;
    let bound = bound.unwrap_or_else(|| default_truncation(&f));
    let ts = expand(&f, bound);
    let key = |d: &[usize]| bracketed(d);
    let components: serde_json::Map<String, Value> = ts
        .components
        .iter()
        .map(|(d, p)| (key(d), json!(p.to_string())))
        .collect();
    let minimal = minimal_degree(&ts).ok();
    let sum = minimal_component_sum(&ts).ok();
    let json = json!({
        "f": f.to_string(),
        "field": field.to_string(),
        "bound": bound,
        "augmentation": ts.constant_term().to_string(),
        "components": components,
        "m": minimal.as_ref().map(|(m, _)| m),
        "minimal_multidegrees": minimal.as_ref().map(|(_, d)| d),
        "minimal_component_sum": sum.as_ref().map(ToString::to_string),
    });
    let mut out = Output::new(Status::Ok, json);
    out.kv("f", &f).kv("truncation", bound);
    for (d, p) in &ts.components {
        out.line(format!("  p{} = {p}", key(d)));
    }
    match (&minimal, &sum) {
        (Some((m, _)), Some(s)) => out.kv("m", m).kv("minimal component sum", s),
        _ => out.line(format!("no nonconstant component up to degree {bound}")),
    };
    Ok(out)
}

fn campaign(report: CampaignReport) -> Output {
    let status = if report.ok() {
        Status::Ok
    } else {
        Status::Violated
    };
    let mut out = Output::new(status, serde_json::to_value(&report).expect("serializable"));
    out.line(report.summary());
    for failure in report.failures.iter().take(5) {
        out.line(format!("  failure: {failure}"));
    }
    out
}

fn load_algebra(opt: &AlgebraOpt) -> Result<(Arc<FinAlgebra>, String)> {
    match (&opt.algebra, &opt.algebra_file) {
        (_, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("cannot read {}", path.display()))?;
            Ok((FinAlgebra::parse(&text)?, path.display().to_string()))
        }
        (Some(spec), None) => Ok((FinAlgebra::from_spec(spec, opt.field.field)?, spec.clone())),
        (None, None) => bail!("give --algebra SPEC or --algebra-file PATH"),
    }
}

fn check_mode(m: &ModeOpt) -> CheckMode {
    match m.mode {
        Mode::Exhaustive => CheckMode::Exhaustive,
        Mode::Sampled => CheckMode::Sampled {
            samples: m.trials,
            seed: m.seed.seed,
        },
    }
}

fn mode_json(m: &ModeOpt) -> Value {
    match m.mode {
        Mode::Exhaustive => json!({ "mode": "exhaustive" }),
        Mode::Sampled => json!({ "mode": "sampled", "samples": m.trials, "seed": m.seed.seed }),
    }
}

/// `true` only when the check covered every case; sampling settles nothing.
fn settled(m: &ModeOpt) -> Value {
    match m.mode {
        Mode::Exhaustive => json!(true),
        Mode::Sampled => Value::Null,
    }
}

fn grpalg(cmd: &GrpalgCommand, ctx: &Ctx) -> Result<Output> {
    match cmd {
        GrpalgCommand::Falsify {
            f,
            algebra,
            trials,
            seed,
        } => {
            let (alg, name) = load_algebra(algebra)?;
            let f = LaurentPoly::parse(f, alg.field())?;
            let outcome = falsify_lpi(&f, &alg, *trials, seed.seed, ctx.exec)?;
            let mut json = json!({
                "command": "grpalg falsify",
                "f": f.to_string(),
                "algebra": name,
                "field": alg.field().to_string(),
                "trials": trials,
                "seed": seed.seed,
            });
            let mut out = match outcome {
                FalsifyOutcome::Counterexample {
                    trial,
                    units,
                    value,
                } => {
                    json["verdict"] = json!(NOT_AN_LPI);
                    json["certificate"] = json!({
                        "trial": trial,
                        "units": strings(&units),
                        "value": value.to_string(),
                    });
                    let mut out = Output::new(Status::Violated, json);
                    out.kv("units", bracketed(&units))
                        .kv("f(units)", &value)
                        .line(format!(
                            "verdict: NOT an LPI of U({name}) (certificate attached)"
                        ));
                    out
                }
                FalsifyOutcome::NoneFound { trials } => {
                    json["verdict"] = json!(INCONCLUSIVE);
                    json["certificate"] = Value::Null;
                    let mut out = Output::new(Status::Ok, json);
                    out.kv("trials", trials).kv("verdict", INCONCLUSIVE);
                    out
                }
            };
            out.text = format!("f: {f}\nalgebra: {name}\n{}", out.text);
            Ok(out)
        }
        GrpalgCommand::Predicates { group, field } => {
            let alg = FinAlgebra::from_spec(&format!("group:{group}"), field.field)?;
            let r = structural_predicates(&alg)?;
            let json = json!({
                "group": r.group,
                "field": r.field.to_string(),
                "idempotent_mode": r.idempotent_mode,
                "idempotents_checked": r.idempotents_checked,
                "all_idempotents_central": r.all_idempotents_central(),
                "noncentral_idempotent": r.noncentral_idempotent.as_ref().map(ToString::to_string),
                "normalizer_pairs_checked": r.normalizer_pairs_checked,
                "normalizer_failures": r.normalizer_failures,
            });
            let status = if r.normalizer_failures.is_empty() {
                Status::Ok
            } else {
                Status::Violated
            };
            let mut out = Output::new(status, json);
            out.kv("group algebra", format!("{}[{}]", r.field, r.group))
                .kv(
                    "idempotents",
                    format!("{} checked ({})", r.idempotents_checked, r.idempotent_mode),
                );
            match &r.noncentral_idempotent {
                Some(e) => out.kv("non-central idempotent", e),
                None => out.line("all idempotents checked are central"),
            };
            out.kv(
                "normalizer criterion",
                format!(
                    "{} pairs, {} disagreements",
                    r.normalizer_pairs_checked,
                    r.normalizer_failures.len()
                ),
            );
            Ok(out)
        }
        GrpalgCommand::Inverse { algebra, coeffs } => {
            let (alg, name) = load_algebra(algebra)?;
            let parsed = coeffs
                .iter()
                .map(|c| parse_scalar(c.trim(), alg.field()))
                .collect::<Result<Vec<_>, _>>()?;
            let a = AlgElem::new(&alg, parsed)?;
            let inverse = a.inverse().ok();
            if let Some(inv) = &inverse {
                debug_assert!(inv.times(&a) == AlgElem::one(&alg));
            }
            let json = json!({
                "algebra": name,
                "basis": alg.labels(),
                "element": a.to_string(),
                "is_unit": inverse.is_some(),
                "inverse": inverse.as_ref().map(ToString::to_string),
            });
            let mut out = Output::new(Status::Ok, json);
            out.kv("element", &a);
            match &inverse {
                Some(inv) => out.kv("inverse", inv),
                None => out.line("not a unit"),
            };
            Ok(out)
        }
    }
}

fn p1(algebra: &AlgebraOpt, g: &str, mode: &ModeOpt, ctx: &Ctx) -> Result<Output> {
    let (alg, name) = load_algebra(algebra)?;
    let g = UniPoly::parse(g, alg.field())?;
    let mut json = json!({ "algebra": name, "g": g.to_string(), "check": mode_json(mode) });
    Ok(match p1_check(&alg, &g, check_mode(mode), ctx.exec)? {
        P1Outcome::Holds { pairs_checked } => {
            json["holds"] = settled(mode);
            json["pairs_checked"] = json!(pairs_checked);
            let mut out = Output::new(Status::Ok, json);
            out.line(match mode.mode {
                Mode::Exhaustive => {
                    format!("P1 holds for g = {g} on {name} ({pairs_checked} square-zero pairs)")
                }
                Mode::Sampled => format!(
                    "no P1 violation for g = {g} in {pairs_checked} sampled pairs (inconclusive)"
                ),
            });
            out
        }
        P1Outcome::Violated { a, b, value } => {
            json["holds"] = json!(false);
            json["witness"] =
                json!({ "a": a.to_string(), "b": b.to_string(), "g_ab": value.to_string() });
            let mut out = Output::new(Status::Violated, json);
            out.line(format!("P1 fails for g = {g} on {name}"))
                .kv("a", &a)
                .kv("b", &b)
                .kv("g(ab)", &value);
            out
        }
    })
}

fn bac(algebra: &AlgebraOpt, g: &str, mode: &ModeOpt, ctx: &Ctx) -> Result<Output> {
    let (alg, name) = load_algebra(algebra)?;
    let g = UniPoly::parse(g, alg.field())?;
    let h = g.shift(1);
    let mut json = json!({
        "algebra": name,
        "g": g.to_string(),
        "h": h.to_string(),
        "check": mode_json(mode),
    });
    Ok(match bac_check(&alg, &g, check_mode(mode), ctx.exec)? {
        BacOutcome::Holds { quadruples_checked } => {
            json["holds"] = settled(mode);
            json["quadruples_checked"] = json!(quadruples_checked);
            let mut out = Output::new(Status::Ok, json);
            out.line(match mode.mode {
                Mode::Exhaustive => format!(
                    "h(bacr) = 0 for h = {h} on {name} ({quadruples_checked} quadruples with a^2 = 0 = bc)"
                ),
                Mode::Sampled => format!(
                    "h(bacr) = 0 on {quadruples_checked} sampled quadruples for h = {h} (inconclusive)"
                ),
            });
            out
        }
        BacOutcome::Violated { a, b, c, r, value } => {
            json["holds"] = json!(false);
            json["witness"] = json!({
                "a": a.to_string(), "b": b.to_string(), "c": c.to_string(),
                "r": r.to_string(), "h_bacr": value.to_string(),
            });
            let mut out = Output::new(Status::Violated, json);
            out.line(format!("h(bacr) != 0 for h = {h} on {name}"))
                .kv("a", &a)
                .kv("b", &b)
                .kv("c", &c)
                .kv("r", &r)
                .kv("h(bacr)", &value);
            out
        }
    })
}

fn finitecondi(q: u64, g: &str) -> Result<Output> {
    let field = Field::from_q(q)?;
    let g = UniPoly::parse(g, field)?;
    let w = finitecondi_witness(q, &g)?;
    let ab = w.a.times(&w.b);
    debug_assert_eq!(eval_poly_at(&g, &ab), w.gab);
    let json = json!({
        "q": q,
        "g": g.to_string(),
        "r": w.r.to_string(),
        "g_r": g.eval(&w.r).to_string(),
        "a": mat_json(&w.a),
        "b": mat_json(&w.b),
        "ab": mat_json(&ab),
        "g_ab": mat_json(&w.gab),
    });
    let mut out = Output::new(Status::Ok, json);
    out.kv("r", &w.r)
        .kv("g(r)", g.eval(&w.r))
        .kv("a = r*e12", &w.a)
        .kv("b = e21", &w.b)
        .kv("g(ab)", &w.gab);
    Ok(out)
}

fn standard(k: usize, algebra: &AlgebraOpt, mode: &ModeOpt, ctx: &Ctx) -> Result<Output> {
    let (alg, name) = load_algebra(algebra)?;
    let mut json = json!({ "k": k, "algebra": name, "check": mode_json(mode) });
    Ok(
        match standard_poly_check(&alg, k, check_mode(mode), ctx.exec)? {
            StandardOutcome::Vanishes { tuples_checked } => {
                json["vanishes"] = settled(mode);
                json["tuples_checked"] = json!(tuples_checked);
                let mut out = Output::new(Status::Ok, json);
                out.line(match mode.mode {
                    Mode::Exhaustive => {
                        format!("S_{k} vanishes on all {tuples_checked} tuples of {name}")
                    }
                    Mode::Sampled => format!(
                        "S_{k} vanishes on {tuples_checked} sampled tuples of {name} (inconclusive)"
                    ),
                });
                out
            }
            StandardOutcome::NonZero { args, value } => {
                json["vanishes"] = json!(false);
                json["witness"] = json!({ "args": strings(&args), "value": value.to_string() });
                let mut out = Output::new(Status::Violated, json);
                out.line(format!("S_{k} does not vanish on {name}"))
                    .kv("arguments", bracketed(&args))
                    .kv("value", &value);
                out
            }
        },
    )
}
