//! `lpi`: command-line front end for the Laurent polynomial identity toolkit.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lpi_core::exactalg::Field;
use lpi_core::fcrep::UnitKind;
use lpi_core::par::Execution;

use output::{Status, INVALID};

#[derive(Parser, Debug)]
#[command(
    name = "lpi",
    version,
    about = "Exact checks for Laurent polynomial identities of unit groups"
)]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Record wall-clock time in campaign reports (makes output non-reproducible).
    #[arg(long, global = true)]
    timing: bool,
    /// Run campaigns and checks on one thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
struct FieldOpt {
    /// Coefficient field: 0 for the rationals, otherwise a prime.
    #[arg(long, default_value = "0", value_parser = parse_field)]
    field: Field,
}

#[derive(Args, Debug, Clone, Copy)]
struct SeedOpt {
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

#[derive(Args, Debug, Clone)]
struct AlgebraOpt {
    /// Built-in algebra: `group:<G>` (e.g. `group:sym:3`, `group:cyclic:2 x cyclic:4`),
    /// `matrix:<n>`, `sqzero2` or `dual`.
    #[arg(
        long,
        required_unless_present = "algebra_file",
        conflicts_with = "algebra_file"
    )]
    algebra: Option<String>,
    /// Structure-constant file; its own `field` line overrides `--field`.
    #[arg(long)]
    algebra_file: Option<PathBuf>,
    #[command(flatten)]
    field: FieldOpt,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Exhaustive,
    Sampled,
}

#[derive(Args, Debug, Clone, Copy)]
struct ModeOpt {
    #[arg(long, value_enum, default_value_t = Mode::Exhaustive)]
    mode: Mode,
    /// Samples in sampled mode.
    #[arg(long, default_value_t = 10_000)]
    trials: u64,
    #[command(flatten)]
    seed: SeedOpt,
}

#[derive(Args, Debug, Clone, Copy)]
struct UnitsOpt {
    /// Unit pair substituted for (X, Y).
    #[arg(long, default_value = "primary", value_parser = parse_units)]
    units: UnitKind,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Normal form, invariants and cumulus-one factorization of a word.
    Word { word: String },
    /// Obstruction matrix of a Laurent polynomial over the rank-two free group.
    Obstruct {
        f: String,
        #[command(flatten)]
        field: FieldOpt,
        /// Also try transforms of f and evaluation at every unit pair.
        #[arg(long)]
        chain: bool,
    },
    /// Evaluate f at a unit pair of the square-zero algebra, as a matrix over K[T].
    Eval {
        f: String,
        #[command(flatten)]
        field: FieldOpt,
        #[command(flatten)]
        units: UnitsOpt,
    },
    /// Image of an expression in a, b and whether it lies in the ideal L.
    InL {
        expr: String,
        #[command(flatten)]
        field: FieldOpt,
    },
    /// Extract g with g(ab) = sigma f(u, v) tau for a polynomial that is not an identity.
    ExtractG {
        f: String,
        #[command(flatten)]
        field: FieldOpt,
        #[command(flatten)]
        units: UnitsOpt,
        /// Longest conjugating word in 1+a, 1-a, 1+b, 1-b.
        #[arg(long, default_value_t = 2)]
        conj_bound: usize,
    },
    /// Solve the linear system for unit conjugates of s staying in L.
    Thekey {
        #[command(flatten)]
        field: FieldOpt,
        /// Comma-separated conjugators replacing the default list.
        #[arg(long, value_delimiter = ',')]
        conjugators: Vec<String>,
    },
    /// Truncated noncommutative expansion X_i -> 1 + X_i T_i.
    Expand {
        f: String,
        #[command(flatten)]
        field: FieldOpt,
        /// Total-degree truncation; defaults to 2 C'(f) + 2.
        #[arg(long)]
        bound: Option<usize>,
    },
    /// Check the leading term of Phi(w) against the table for all words up to a cumulus.
    VerifyTables {
        #[arg(long, default_value_t = 3)]
        cmax: u64,
        #[command(flatten)]
        field: FieldOpt,
    },
    /// Show that no polynomial with support of size at most 3 survives the falsifiers.
    Support3 {
        #[arg(long, default_value_t = 2)]
        cmax: u64,
        /// Fields to scan; repeatable.
        #[arg(long = "field", default_values = ["2", "3", "0"], value_parser = parse_field)]
        fields: Vec<Field>,
        /// Random coefficient pairs per support over the rationals.
        #[arg(long, default_value_t = 5)]
        trials: usize,
        #[command(flatten)]
        seed: SeedOpt,
    },
    /// Check deg Phi(f) <= 2 C'(f) on random polynomials.
    CprimeBound {
        #[arg(long, default_value_t = 3)]
        cmax: u64,
        #[arg(long, default_value_t = 200)]
        trials: u64,
        #[command(flatten)]
        field: FieldOpt,
        #[command(flatten)]
        seed: SeedOpt,
    },
    /// Group algebras and finite algebras.
    Grpalg {
        #[command(subcommand)]
        action: GrpalgCommand,
    },
    /// Check g(ab) = 0 for all square-zero a, b.
    P1 {
        #[command(flatten)]
        algebra: AlgebraOpt,
        /// Polynomial in T.
        #[arg(long)]
        g: String,
        #[command(flatten)]
        mode: ModeOpt,
    },
    /// Check h(bacr) = 0 with h = T g(T) for a^2 = 0 = bc (requires P1 for g).
    Bac {
        #[command(flatten)]
        algebra: AlgebraOpt,
        #[arg(long)]
        g: String,
        #[command(flatten)]
        mode: ModeOpt,
    },
    /// Witness r, a = r e12, b = e21 in M2(F_q) with g(ab) != 0 when deg g < q.
    Finitecondi {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        g: String,
    },
    /// Check whether the standard polynomial S_k vanishes on an algebra.
    StandardPoly {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        algebra: AlgebraOpt,
        #[command(flatten)]
        mode: ModeOpt,
    },
}

#[derive(Subcommand, Debug)]
enum GrpalgCommand {
    /// Search for units at which f does not vanish.
    Falsify {
        f: String,
        #[command(flatten)]
        algebra: AlgebraOpt,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[command(flatten)]
        seed: SeedOpt,
    },
    /// Idempotent centrality and the normalizer criterion for a group algebra.
    Predicates {
        /// Group, e.g. `sym:3`, `Q8`, `cyclic:2 x sym:3`.
        #[arg(long)]
        group: String,
        #[command(flatten)]
        field: FieldOpt,
    },
    /// Decide whether an element is a unit and invert it.
    Inverse {
        #[command(flatten)]
        algebra: AlgebraOpt,
        /// Comma-separated coefficients in the basis order.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        coeffs: Vec<String>,
    },
}

fn parse_field(s: &str) -> Result<Field, String> {
    let q: u64 = s
        .parse()
        .map_err(|_| format!("field must be 0 (rationals) or a prime, got `{s}`"))?;
    if q == 0 {
        return Ok(Field::Rational);
    }
    Field::from_q(q).map_err(|e| e.to_string())
}

fn parse_units(s: &str) -> Result<UnitKind, String> {
    s.parse()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = commands::Ctx {
        exec: if cli.sequential {
            Execution::Sequential
        } else {
            Execution::default()
        },
        timing: cli.timing,
    };
    match commands::run(&cli.command, &ctx) {
        Ok(out) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&out.json).expect("serializable")
                );
            } else {
                print!("{}", out.text);
            }
            match out.status {
                Status::Ok => ExitCode::SUCCESS,
                Status::Violated => ExitCode::from(1),
            }
        }
        Err(e) => {
            if cli.json {
                let rec = serde_json::json!({ "verdict": INVALID, "error": format!("{e:#}") });
                println!(
                    "{}",
                    serde_json::to_string_pretty(&rec).expect("serializable")
                );
            }
            eprintln!("{INVALID}: {e:#}");
            ExitCode::from(2)
        }
    }
}
