//! Command-line front end. [`run`] is pure apart from reading `@path`
//! arguments, so it can be driven directly from tests.
//!
//! Exit codes: 0 when every requested check passes, 1 when a mathematical
//! check fails (the first counterexample is printed), 2 on usage, parse or
//! input errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};

use crate::algebra::{Parity, StructureConstants, TwistedN2};
use crate::bialgebra::{classify_r, cybe, delta_r, RMatrix, WindowSpec};
use crate::checks::{check_axioms_with, CorruptedTwistedN2};
use crate::cohomology::{build_derivation_system, report_for_system, DerivationSpec};
use crate::error::Error;
use crate::linear::Tensor2;
use crate::parse::{parse_element, parse_expression, parse_tensor2};
use crate::scalar::HalfInt;

pub const WINDOW_ENV: &str = "SUPERBIALG_WINDOW";

#[derive(Debug, Parser)]
#[command(name = "superbialg", version, about = "Exact computations in the twisted N=2 superconformal algebra")]
pub struct Cli {
    /// Emit stable key=value records.
    #[arg(long, global = true)]
    pub porcelain: bool,

    /// Replace the structure constants by a deliberately broken table.
    #[arg(long, global = true, hide = true)]
    pub corrupt_structure_constants: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check antisymmetry, grading, the L[0] eigenvalue and Jacobi up to an index bound.
    CheckAlgebra {
        #[arg(value_parser = parse_halfint)]
        max_index: HalfInt,
    },
    /// Classify an r-matrix: skewness, CYBE and a window search for MYBE witnesses.
    Classify {
        /// Tensor expression, or @path to a file holding one.
        #[arg(allow_hyphen_values = true)]
        r: String,
        /// Window bound for the witness search.
        n: Option<u32>,
    },
    /// Evaluate the coboundary cobracket Δ_r(x).
    Delta {
        #[arg(allow_hyphen_values = true)]
        r: String,
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// Evaluate c(r) = [r12,r13] + [r12,r23] + [r13,r23].
    Cybe {
        #[arg(allow_hyphen_values = true)]
        r: String,
    },
    /// Windowed first cohomology of derivations into the tensor square.
    H1 {
        #[arg(long, value_enum)]
        parity: ParityArg,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_halfint)]
        degree: HalfInt,
        #[arg(long)]
        domain: Option<u32>,
        #[arg(long)]
        target: Option<u32>,
        #[arg(long)]
        eq: Option<u32>,
        /// List every derivation basis vector.
        #[arg(long)]
        verbose: bool,
    },
    /// Print the canonical form of an expression.
    Parse {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ParityArg {
    Even,
    Odd,
}

impl From<ParityArg> for Parity {
    fn from(p: ParityArg) -> Parity {
        match p {
            ParityArg::Even => Parity::Even,
            ParityArg::Odd => Parity::Odd,
        }
    }
}

fn parse_halfint(s: &str) -> Result<HalfInt, String> {
    HalfInt::from_str(s).map_err(|_| format!("'{s}' is not a half-integer (use n or n/2)"))
}

/// Default window bounds, overridable through [`WINDOW_ENV`] as a
/// comma-separated `key=value` list, e.g. `classify=4,domain=5,target=6,eq=2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Windows {
    pub classify: u32,
    pub domain: u32,
    pub target: u32,
    pub eq: u32,
}

impl Default for Windows {
    fn default() -> Self {
        Windows { classify: 4, domain: 5, target: 6, eq: 2 }
    }
}

impl Windows {
    pub fn from_env_value(value: Option<&str>) -> Result<Self, String> {
        let mut w = Windows::default();
        let Some(value) = value else { return Ok(w) };
        for item in value.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, val) = item
                .split_once('=')
                .ok_or_else(|| format!("{WINDOW_ENV}: expected key=value, got '{item}'"))?;
            let n: u32 = val
                .trim()
                .parse()
                .ok()
                .filter(|n| *n > 0)
                .ok_or_else(|| format!("{WINDOW_ENV}: '{val}' is not a positive integer"))?;
            match key.trim() {
                "classify" => w.classify = n,
                "domain" => w.domain = n,
                "target" => w.target = n,
                "eq" => w.eq = n,
                other => return Err(format!("{WINDOW_ENV}: unknown key '{other}'")),
            }
        }
        Ok(w)
    }
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout, stderr: String::new() }
    }

    fn check(passed: bool, stdout: String) -> Self {
        Outcome { code: if passed { 0 } else { 1 }, stdout, stderr: String::new() }
    }

    fn usage(message: impl Into<String>) -> Self {
        let mut stderr = message.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        Outcome { code: 2, stdout: String::new(), stderr }
    }
}

impl From<Error> for Outcome {
    fn from(e: Error) -> Self {
        Outcome::usage(format!("error: {e}"))
    }
}

/// Parses `args` (program name first) and runs the command. `window_env`
/// is the value of [`WINDOW_ENV`], if set.
pub fn run<I, T>(args: I, window_env: Option<&str>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome::ok(text)
            } else {
                Outcome::usage(text)
            };
        }
    };
    let windows = match Windows::from_env_value(window_env) {
        Ok(w) => w,
        Err(msg) => return Outcome::usage(format!("error: {msg}")),
    };
    match execute(&cli, windows) {
        Ok(out) => out,
        Err(e) => e.into(),
    }
}

fn read_arg(arg: &str) -> Result<String, Error> {
    match arg.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).map_err(|e| Error::Parse {
            position: 1,
            message: format!("cannot read {path}: {e}"),
        }),
        None => Ok(arg.to_string()),
    }
}

fn read_r(arg: &str) -> Result<RMatrix, Error> {
    RMatrix::new(parse_tensor2(read_arg(arg)?.trim())?)
}

fn execute(cli: &Cli, windows: Windows) -> Result<Outcome, Error> {
    let porcelain = cli.porcelain;
    Ok(match &cli.command {
        Command::CheckAlgebra { max_index } => {
            if max_index.twice() < 0 {
                return Ok(Outcome::usage("error: max_index must be non-negative"));
            }
            let sc: &dyn StructureConstants = if cli.corrupt_structure_constants {
                &CorruptedTwistedN2
            } else {
                &TwistedN2
            };
            let report = check_axioms_with(sc, *max_index);
            let text = if porcelain {
                report.to_record()
            } else {
                match &report.failure {
                    None => format!(
                        "ok: antisymmetry, grading, L[0] eigenvalue and Jacobi hold on {} generators with |index| <= {}\n",
                        report.generators, report.max_index
                    ),
                    Some(c) => format!("FAILED: {c}\n"),
                }
            };
            Outcome::check(report.passed(), text)
        }
        Command::Classify { r, n } => {
            let r = read_r(r)?;
            let window = WindowSpec::new(n.unwrap_or(windows.classify));
            let report = classify_r(&r, window);
            let mut text = report.to_record();
            if !porcelain {
                let verdict = if report.is_triangular() {
                    "triangular coboundary"
                } else {
                    "not triangular"
                };
                writeln!(text, "verdict: {verdict}").unwrap();
            }
            Outcome::check(report.is_triangular(), text)
        }
        Command::Delta { r, x } => {
            let r = read_r(r)?;
            let x = parse_element(read_arg(x)?.trim())?;
            let d = delta_r(&r, &x)?;
            Outcome::ok(value_line(porcelain, &d))
        }
        Command::Cybe { r } => {
            let r = read_r(r)?;
            let c = cybe(&r);
            let text = if porcelain {
                format!("value={c}\nzero={}\n", c.is_zero())
            } else {
                format!("{c}\n")
            };
            Outcome::check(c.is_zero(), text)
        }
        Command::H1 { parity, degree, domain, target, eq, verbose } => {
            let spec = DerivationSpec::new(
                (*parity).into(),
                *degree,
                domain.unwrap_or(windows.domain),
                target.unwrap_or(windows.target),
                eq.unwrap_or(windows.eq),
            )?;
            let sys = build_derivation_system(&spec)?;
            let report = report_for_system(&sys);
            let mut text = report.to_record();
            if *verbose {
                for (k, v) in report.derivations.basis.iter().enumerate() {
                    writeln!(text, "basis[{k}]:").unwrap();
                    text.push_str(&sys.describe(v));
                }
            }
            if let Some(&k) = report.residuals.first() {
                writeln!(text, "residual[{k}]:").unwrap();
                text.push_str(&sys.describe(&report.derivations.basis[k]));
            }
            Outcome::check(report.is_clean(), text)
        }
        Command::Parse { expr } => {
            let e = parse_expression(read_arg(expr)?.trim())?;
            let text = if porcelain {
                format!("arity={}\nvalue={e}\n", e.arity())
            } else {
                format!("{e}\n")
            };
            Outcome::ok(text)
        }
    })
}

fn value_line(porcelain: bool, t: &Tensor2) -> String {
    if porcelain {
        format!("value={t}\n")
    } else {
        format!("{t}\n")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn go(args: &[&str]) -> Outcome {
        let mut v = vec!["superbialg"];
        v.extend_from_slice(args);
        run(v, None)
    }

    #[test]
    fn window_env_parsing() {
        assert_eq!(Windows::from_env_value(None).unwrap(), Windows::default());
        let w = Windows::from_env_value(Some("classify=6, eq=1")).unwrap();
        assert_eq!((w.classify, w.eq, w.domain), (6, 1, 5));
        assert!(Windows::from_env_value(Some("eq=0")).is_err());
        assert!(Windows::from_env_value(Some("depth=3")).is_err());
        assert!(Windows::from_env_value(Some("eq")).is_err());
    }

    #[test]
    fn cybe_triangular_example() {
        let out = go(&["cybe", "1 L[1] (x) L[0] - 1 L[0] (x) L[1]"]);
        assert_eq!(out, Outcome::ok("0\n".into()));
    }

    #[test]
    fn parse_errors_exit_2() {
        let out = go(&["parse", "1 T[1]"]);
        assert_eq!(out.code, 2);
        assert!(out.stderr.contains("T"));
        assert_eq!(go(&["parse", "2 L[0] ? L[1]"]).code, 2);
        assert_eq!(go(&["frobnicate"]).code, 2);
        assert_eq!(go(&["h1", "--parity", "even", "--degree", "1/3"]).code, 2);
    }

    #[test]
    fn parse_echoes_canonical_form() {
        let out = go(&["parse", "- 1/2 T[3/2] + 2 L[0]"]);
        assert_eq!(out.stdout, "2 L[0] - 1/2 T[3/2]\n");
        let out = go(&["--porcelain", "parse", "G[1/2] (x) G[1/2]"]);
        assert_eq!(out.stdout, "arity=2\nvalue=1 G[1/2] (x) G[1/2]\n");
    }

    #[test]
    fn delta_example() {
        let out = go(&["delta", "1 L[1] (x) L[0] - 1 L[0] (x) L[1]", "1 L[0]"]);
        assert_eq!(out.code, 0);
        assert_eq!(out.stdout, "1 L[0] (x) L[1] - 1 L[1] (x) L[0]\n");
        assert_eq!(go(&["delta", "1 L[1] (x) L[0]", "1 L[0] + 1 G[0]"]).code, 2);
    }

    #[test]
    fn check_algebra_and_corruption() {
        assert_eq!(go(&["check-algebra", "1"]).code, 0);
        let bad = go(&["check-algebra", "1", "--corrupt-structure-constants"]);
        assert_eq!(bad.code, 1);
        assert!(bad.stdout.starts_with("FAILED: jacobi"));
    }

    #[test]
    fn small_h1_window() {
        let out = go(&[
            "--porcelain", "h1", "--parity", "odd", "--degree", "-1/2", "--domain", "2", "--target", "2", "--eq", "1",
        ]);
        assert_eq!(out.code, 0, "{}", out.stdout);
        assert!(out.stdout.contains("degree=-1/2\n"));
        assert!(out.stdout.contains("quotient_dim=0\n"));
        assert_eq!(go(&["h1", "--parity", "odd", "--degree", "0", "--domain", "1", "--eq", "1"]).code, 2);
    }
}
