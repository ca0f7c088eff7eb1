//! Command-line surface. The `stabq` binary only forwards to [`run`].
//!
//! Exit codes: 0 feasible / verified, 1 infeasible / violated, 2 input error,
//! 3 internal error (including a solver result that fails independent verification).

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::arquiver::knit;
use crate::error::{Error, Result};
use crate::feasibility::{
    minimal_infeasible_subsystem, result_json, solve_strict_in, verify_certificate, verify_witness,
    FeasibilityResult, InfeasibleSubsystem,
};
use crate::quiver::{DynkinType, Quiver};
use crate::stability::{generate_system, render_inequality, verify_total, InequalitySystem, Theta};
use crate::DEFAULT_SEED;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "stabq",
    about = "Total stability conditions mu = theta/dim for Dynkin quivers",
    after_help = "Seed: --seed, else STABQ_SEED, else 0xD15EA5E (233172574).\n\
                  Exit codes: 0 feasible/verified, 1 infeasible/violated, 2 input error, 3 internal error."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List all indecomposable dimension vectors.
    Indec(RunConfig),
    /// Write the strict inequality system for total stability.
    Inequalities(RunConfig),
    /// Decide the system; exit 0 with a witness or 1 with a certificate.
    Solve(RunConfig),
    /// Check a user-supplied theta against the system.
    Verify {
        #[command(flatten)]
        config: RunConfig,
        /// JSON array of rationals, e.g. ["0", "1/2"].
        #[arg(long)]
        theta: PathBuf,
    },
    /// Solve every orientation of a Dynkin type and write a CSV table.
    Sweep(RunConfig),
    /// Export the knitted Auslander-Reiten quiver.
    Ar(RunConfig),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Csv,
    Dot,
}

#[derive(Debug, Clone, Args)]
pub struct RunConfig {
    /// Quiver JSON file.
    #[arg(long, conflicts_with = "dynkin")]
    pub quiver: Option<PathBuf>,
    /// Dynkin type, e.g. E7.
    #[arg(long = "type", id = "dynkin")]
    pub dynkin: Option<String>,
    /// One bit per canonical edge (u,v), u<v: 0 is u->v, 1 is v->u.
    #[arg(long)]
    pub orientation: Option<String>,
    /// Output file; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, env = "STABQ_SEED", default_value_t = DEFAULT_SEED, value_parser = parse_seed)]
    pub seed: u64,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

fn parse_seed(s: &str) -> std::result::Result<u64, String> {
    let s = s.trim();
    let parsed = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => s.parse(),
    };
    parsed.map_err(|e| format!("bad seed {s:?}: {e}"))
}

impl RunConfig {
    pub fn load_quiver(&self) -> Result<Quiver> {
        match (&self.quiver, &self.dynkin) {
            (Some(path), _) => Quiver::parse_json(&std::fs::read_to_string(path)?),
            (None, Some(ty)) => {
                let ty: DynkinType = ty.parse()?;
                let bits = self
                    .orientation
                    .clone()
                    .unwrap_or_else(|| "0".repeat(ty.rank - 1));
                Quiver::from_type(ty, &bits)
            }
            (None, None) => Err(Error::Parse("pass --quiver FILE or --type NAME".into())),
        }
    }
}

/// Generated system together with its verified decision.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub system: InequalitySystem,
    pub result: FeasibilityResult,
    pub mis: Option<InfeasibleSubsystem>,
}

/// Builds the system for `q`, solves it, and checks the answer independently.
pub fn analyze(q: &Quiver, seed: u64) -> std::result::Result<Analysis, Failure> {
    let system = generate_system(q, seed).map_err(Failure::Internal)?;
    let rows = system.matrix();
    let result = solve_strict_in(q.vertex_count(), &rows).map_err(Failure::Internal)?;
    let verified = match &result {
        FeasibilityResult::Witness(x) => verify_witness(&rows, x),
        FeasibilityResult::Certificate(y) => verify_certificate(&rows, y),
    };
    if !verified {
        return Err(Failure::Unverified);
    }
    let mis = if result.is_feasible() {
        None
    } else {
        Some(minimal_infeasible_subsystem(&rows).map_err(Failure::Internal)?)
    };
    Ok(Analysis {
        system,
        result,
        mis,
    })
}

#[derive(Debug)]
pub enum Failure {
    Input(Error),
    Internal(Error),
    Unverified,
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Input(_) => EXIT_INPUT,
            Failure::Internal(_) | Failure::Unverified => EXIT_INTERNAL,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Input(e) => write!(f, "input error: {e}"),
            Failure::Internal(e) => write!(f, "internal error: {e}"),
            Failure::Unverified => write!(f, "internal error: solver result failed verification"),
        }
    }
}

fn emit(
    config: &RunConfig,
    text: &str,
    stdout: &mut dyn Write,
) -> std::result::Result<(), Failure> {
    match &config.out {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure::Input(e.into())),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Internal(e.into())),
    }
}

fn json_text(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON value serializes");
    s.push('\n');
    s
}

fn load(config: &RunConfig) -> std::result::Result<Quiver, Failure> {
    config.load_quiver().map_err(Failure::Input)
}

pub fn cmd_indec(config: &RunConfig, stdout: &mut dyn Write) -> std::result::Result<i32, Failure> {
    let q = load(config)?;
    let roots = q.positive_roots();
    let text = match config.format {
        Some(Format::Json) => json_text(&serde_json::json!({
            "indecomposables": roots,
            "count": roots.len(),
        })),
        _ => {
            let mut s = String::new();
            for d in &roots {
                let _ = writeln!(s, "{d}");
            }
            let _ = writeln!(s, "count {}", roots.len());
            s
        }
    };
    emit(config, &text, stdout)?;
    Ok(EXIT_OK)
}

pub fn cmd_inequalities(
    config: &RunConfig,
    stdout: &mut dyn Write,
) -> std::result::Result<i32, Failure> {
    let q = load(config)?;
    let sys = generate_system(&q, config.seed).map_err(Failure::Internal)?;
    let text = match config.format {
        Some(Format::Json) => {
            let mut v = sys.to_json();
            v["seed"] = serde_json::json!(config.seed);
            v["non_embeddings"] = serde_json::json!("certified-random");
            json_text(&v)
        }
        _ => sys.to_text(),
    };
    emit(config, &text, stdout)?;
    Ok(EXIT_OK)
}

fn solve_text(a: &Analysis, seed: u64) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "rows {}", a.system.len());
    let _ = writeln!(s, "non-embeddings certified-random, seed {seed:#x}");
    match &a.result {
        FeasibilityResult::Witness(x) => {
            let _ = writeln!(s, "status feasible");
            let xs: Vec<String> = x.iter().map(|v| v.to_string()).collect();
            let _ = writeln!(s, "theta [{}]", xs.join(", "));
        }
        FeasibilityResult::Certificate(_) => {
            let _ = writeln!(s, "status infeasible");
            if let Some(mis) = &a.mis {
                let _ = writeln!(
                    s,
                    "minimal infeasible subsystem ({} rows):",
                    mis.indices.len()
                );
                for (&i, y) in mis.indices.iter().zip(&mis.certificate) {
                    let r = &a.system.rows[i];
                    let _ = writeln!(
                        s,
                        "  y={y}  row {i}: {}    # {} < {}",
                        render_inequality(&r.raw),
                        r.e,
                        r.d
                    );
                }
            }
        }
    }
    s
}

pub fn cmd_solve(config: &RunConfig, stdout: &mut dyn Write) -> std::result::Result<i32, Failure> {
    let q = load(config)?;
    let a = analyze(&q, config.seed)?;
    let text = match config.format {
        Some(Format::Json) => {
            let mut v = result_json(&a.result, a.mis.as_ref());
            v["rows"] = serde_json::json!(a.system.len());
            v["seed"] = serde_json::json!(config.seed);
            v["non_embeddings"] = serde_json::json!("certified-random");
            json_text(&v)
        }
        _ => solve_text(&a, config.seed),
    };
    emit(config, &text, stdout)?;
    Ok(if a.result.is_feasible() {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    })
}

pub fn cmd_verify(
    config: &RunConfig,
    theta_path: &PathBuf,
    stdout: &mut dyn Write,
) -> std::result::Result<i32, Failure> {
    let q = load(config)?;
    let theta = std::fs::read_to_string(theta_path)
        .map_err(Error::from)
        .and_then(|t| Theta::parse_json(&t))
        .map_err(Failure::Input)?;
    if theta.len() != q.vertex_count() {
        return Err(Failure::Input(Error::LengthMismatch {
            expected: q.vertex_count(),
            got: theta.len(),
        }));
    }
    let sys = generate_system(&q, config.seed).map_err(Failure::Internal)?;
    let violations = verify_total(&theta, &sys).map_err(Failure::Input)?;
    let text = match config.format {
        Some(Format::Json) => json_text(&serde_json::json!({
            "total": violations.is_empty(),
            "violations": violations.iter().map(|v| serde_json::json!({
                "d": v.d, "e": v.e,
                "slope_d": v.slope_d.to_string(), "slope_e": v.slope_e.to_string(),
            })).collect::<Vec<_>>(),
        })),
        _ => {
            let mut s = String::new();
            for v in &violations {
                let _ = writeln!(
                    s,
                    "violated: {} ⊂ {}  mu(N) = {} >= mu(M) = {}",
                    v.e, v.d, v.slope_e, v.slope_d
                );
            }
            let _ = writeln!(
                s,
                "{} of {} inequalities violated; {}",
                violations.len(),
                sys.len(),
                if violations.is_empty() {
                    "total"
                } else {
                    "not total"
                }
            );
            s
        }
    };
    emit(config, &text, stdout)?;
    Ok(if violations.is_empty() {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    })
}

/// One line of the orientation sweep.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct SweepRow {
    pub orientation: String,
    pub status: String,
    pub rows: usize,
    pub digest: String,
}

fn digest(a: &Analysis) -> String {
    let join = |v: &[num_rational::BigRational]| {
        v.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    match (&a.result, &a.mis) {
        (FeasibilityResult::Witness(x), _) => format!("x=({})", join(x)),
        (FeasibilityResult::Certificate(_), Some(mis)) => {
            let idx: Vec<String> = mis.indices.iter().map(|i| i.to_string()).collect();
            format!("mis=[{}] y=({})", idx.join(" "), join(&mis.certificate))
        }
        (FeasibilityResult::Certificate(y), None) => format!("y=({})", join(y)),
    }
}

/// Analyses every orientation of `ty`, in orientation order.
pub fn sweep(ty: DynkinType, seed: u64) -> std::result::Result<Vec<SweepRow>, Failure> {
    ty.orientations()
        .par_iter()
        .map(|bits| {
            let q = Quiver::from_type(ty, bits).map_err(Failure::Input)?;
            let a = analyze(&q, seed)?;
            Ok(SweepRow {
                orientation: bits.clone(),
                status: if a.result.is_feasible() {
                    "feasible"
                } else {
                    "infeasible"
                }
                .into(),
                rows: a.system.len(),
                digest: digest(&a),
            })
        })
        .collect()
}

pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).expect("CSV row serializes");
    }
    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("UTF-8 CSV")
}

pub fn cmd_sweep(config: &RunConfig, stdout: &mut dyn Write) -> std::result::Result<i32, Failure> {
    let ty: DynkinType = config
        .dynkin
        .as_deref()
        .ok_or_else(|| Failure::Input(Error::Parse("sweep needs --type".into())))?
        .parse()
        .map_err(Failure::Input)?;
    let rows = sweep(ty, config.seed)?;
    let text = match config.format {
        Some(Format::Json) => json_text(&serde_json::to_value(&rows).expect("rows serialize")),
        _ => sweep_csv(&rows),
    };
    emit(config, &text, stdout)?;
    Ok(EXIT_OK)
}

pub fn cmd_ar(config: &RunConfig, stdout: &mut dyn Write) -> std::result::Result<i32, Failure> {
    let q = load(config)?;
    let ar = knit(&q).map_err(Failure::Internal)?;
    let text = match config.format {
        Some(Format::Dot) | Some(Format::Text) => ar.to_dot(),
        _ => json_text(&ar.to_json()),
    };
    emit(config, &text, stdout)?;
    Ok(EXIT_OK)
}

/// Parses `args` (including the program name) and runs the command. Errors go
/// to `stderr`; the return value is the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(stderr, "{e}");
                    EXIT_INPUT
                }
            };
        }
    };
    let outcome = match &cli.command {
        Command::Indec(c) => cmd_indec(c, stdout),
        Command::Inequalities(c) => cmd_inequalities(c, stdout),
        Command::Solve(c) => cmd_solve(c, stdout),
        Command::Verify { config, theta } => cmd_verify(config, theta, stdout),
        Command::Sweep(c) => cmd_sweep(c, stdout),
        Command::Ar(c) => cmd_ar(c, stdout),
    };
    match outcome {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "{f}");
            f.code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("stabq").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn seeds() {
        assert_eq!(parse_seed("0xD15EA5E").unwrap(), DEFAULT_SEED);
        assert_eq!(parse_seed("17").unwrap(), 17);
        assert!(parse_seed("x").is_err());
    }

    #[test]
    fn indec_a2() {
        let (code, out, _) = run_str(&["indec", "--type", "A2"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().last(), Some("count 3"));
    }

    #[test]
    fn input_errors_exit_2() {
        assert_eq!(run_str(&["indec", "--type", "B3"]).0, EXIT_INPUT);
        assert_eq!(
            run_str(&["indec", "--type", "A3", "--orientation", "0"]).0,
            EXIT_INPUT
        );
        assert_eq!(run_str(&["indec"]).0, EXIT_INPUT);
        assert_eq!(run_str(&["bogus"]).0, EXIT_INPUT);
        assert_eq!(run_str(&["sweep", "--quiver", "x.json"]).0, EXIT_INPUT);
    }

    #[test]
    fn solve_a2() {
        let (code, out, _) = run_str(&["solve", "--type", "A2", "--format", "json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["status"], "feasible");
    }
}
