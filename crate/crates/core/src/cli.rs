//! The `tanglex` command line.
//!
//! [`run`] turns arguments into a [`Report`] without touching the process, so
//! the binary is a thin wrapper and the commands can be tested in-process.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::check::full_suite;
use crate::error::Error;
use crate::invariant::{alexander_with, tangle_invariant_with, Evaluator};
use crate::oracle::alexander_via_burau;
use crate::tangle::{braid_closure_components, braid_to_tangle, parse, parse_braid, MorseWord};

pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_EVALUATOR_MISMATCH: i32 = 3;
pub const EXIT_ORACLE_MISMATCH: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "tanglex", version, about = "Alexander polynomials and tangle invariants from crossing state sums")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Raw state sum, turning number and normalized Alexander polynomial.
    Alexander {
        #[command(flatten)]
        input: InputArgs,
        /// Compare against the Burau determinant (braid input only).
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Coordinates of the tangle in the canonical basis.
    Vector {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run the identity suite and the move-invariance fuzzer.
    Check {
        #[arg(long, default_value_t = 50)]
        fuzz: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest boundary size for the dimension counts.
        #[arg(long, default_value_t = 6)]
        dims: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct InputArgs {
    /// Morse word, e.g. "bottom 1 up; cup 2 cw; x+ 1; cap 2;"
    #[arg(long)]
    pub text: Option<String>,
    /// File holding a Morse word.
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// Braid word such as "1 -2 1"; the closure is cut open at the first strand.
    #[arg(long, allow_hyphen_values = true)]
    pub braid: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct OutputArgs {
    /// Strand count for --braid (default: one more than the largest generator).
    #[arg(long)]
    pub strands: Option<usize>,
    #[arg(long, value_enum, default_value_t = EvaluatorArg::Dp)]
    pub evaluator: EvaluatorArg,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum EvaluatorArg {
    Naive,
    Dp,
    Both,
}

impl From<EvaluatorArg> for Evaluator {
    fn from(e: EvaluatorArg) -> Self {
        match e {
            EvaluatorArg::Naive => Evaluator::Naive,
            EvaluatorArg::Dp => Evaluator::Dp,
            EvaluatorArg::Both => Evaluator::Both,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    Text(String),
    File(PathBuf),
    Braid { word: String, strands: Option<usize> },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CommandKind {
    Alexander { oracle: bool },
    Vector,
    Check { fuzz: usize, dims: usize },
}

/// Everything a command needs, after argument parsing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub command: CommandKind,
    pub source: Option<Source>,
    pub evaluator: Evaluator,
    pub format: Format,
    pub seed: u64,
}

impl From<Cli> for RunConfig {
    fn from(cli: Cli) -> Self {
        let source = |i: InputArgs, strands: Option<usize>| {
            if let Some(t) = i.text {
                Source::Text(t)
            } else if let Some(f) = i.file {
                Source::File(f)
            } else {
                Source::Braid { word: i.braid.unwrap_or_default(), strands }
            }
        };
        match cli.command {
            Command::Alexander { input, oracle, output } => RunConfig {
                command: CommandKind::Alexander { oracle },
                source: Some(source(input, output.strands)),
                evaluator: output.evaluator.into(),
                format: output.format,
                seed: 0,
            },
            Command::Vector { input, output } => RunConfig {
                command: CommandKind::Vector,
                source: Some(source(input, output.strands)),
                evaluator: output.evaluator.into(),
                format: output.format,
                seed: 0,
            },
            Command::Check { fuzz, seed, dims, format } => RunConfig {
                command: CommandKind::Check { fuzz, dims },
                source: None,
                evaluator: Evaluator::Dp,
                format,
                seed,
            },
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Report {
    fn fail(code: i32, msg: impl Into<String>) -> Self {
        Self { code, stdout: String::new(), stderr: msg.into() }
    }
}

struct Loaded {
    tangle: MorseWord,
    braid: Option<(Vec<i32>, usize)>,
}

fn load(source: &Source) -> Result<Loaded, Report> {
    let parse_err = |e: Error| Report::fail(EXIT_PARSE, format!("parse error: {e}\n"));
    match source {
        Source::Text(t) => Ok(Loaded { tangle: parse(t).map_err(parse_err)?, braid: None }),
        Source::File(p) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| Report::fail(EXIT_PARSE, format!("cannot read {}: {e}\n", p.display())))?;
            Ok(Loaded { tangle: parse(&text).map_err(parse_err)?, braid: None })
        }
        Source::Braid { word, strands } => {
            let w = parse_braid(word).map_err(parse_err)?;
            let n = strands.unwrap_or_else(|| w.iter().map(|g| g.unsigned_abs() as usize).max().unwrap_or(0) + 1);
            let tangle = braid_to_tangle(&w, n).map_err(parse_err)?;
            Ok(Loaded { tangle, braid: Some((w, n)) })
        }
    }
}

fn eval_err(e: Error) -> Report {
    let code = if matches!(e, Error::EvaluatorMismatch(_)) { EXIT_EVALUATOR_MISMATCH } else { EXIT_PARSE };
    Report::fail(code, format!("error: {e}\n"))
}

pub fn cmd_alexander(cfg: &RunConfig) -> Report {
    let CommandKind::Alexander { oracle } = cfg.command else {
        return Report::fail(EXIT_PARSE, "not an alexander config\n");
    };
    let loaded = match cfg.source.as_ref().map(load) {
        Some(Ok(l)) => l,
        Some(Err(r)) => return r,
        None => return Report::fail(EXIT_PARSE, "no input\n"),
    };
    let res = match alexander_with(&loaded.tangle, cfg.evaluator) {
        Ok(r) => r,
        Err(e) => return eval_err(e),
    };

    let mut code = 0;
    let mut oracle_value = None;
    let mut agree = None;
    let mut notice = None;
    if oracle {
        match &loaded.braid {
            None => notice = Some("oracle unavailable: needs --braid input".to_string()),
            Some((w, n)) => match braid_closure_components(w, *n) {
                Ok(1) => match alexander_via_burau(w, *n) {
                    Ok(v) => {
                        let same = v == res.alexander;
                        if !same {
                            code = EXIT_ORACLE_MISMATCH;
                        }
                        agree = Some(same);
                        oracle_value = Some(v);
                    }
                    Err(e) => notice = Some(format!("oracle unavailable: {e}")),
                },
                Ok(c) => notice = Some(format!("oracle unavailable: closure has {c} components")),
                Err(e) => notice = Some(format!("oracle unavailable: {e}")),
            },
        }
    }

    let stdout = match cfg.format {
        Format::Json => {
            let mut v = json!({ "delta": res.delta, "tau": res.tau, "alexander": res.alexander });
            if oracle {
                v["oracle"] = json!({ "value": oracle_value, "agree": agree, "notice": notice });
            }
            format!("{v}\n")
        }
        Format::Text => {
            let mut s = format!("delta: {}\ntau: {}\nalexander: {}\n", res.delta, res.tau, res.alexander);
            if let Some(v) = &oracle_value {
                let verdict = if agree == Some(true) { "AGREE" } else { "DISAGREE" };
                let _ = writeln!(s, "oracle: {v} {verdict}");
            }
            if let Some(n) = &notice {
                let _ = writeln!(s, "{n}");
            }
            s
        }
    };
    Report { code, stdout, stderr: String::new() }
}

pub fn cmd_vector(cfg: &RunConfig) -> Report {
    let loaded = match cfg.source.as_ref().map(load) {
        Some(Ok(l)) => l,
        Some(Err(r)) => return r,
        None => return Report::fail(EXIT_PARSE, "no input\n"),
    };
    let v = match tangle_invariant_with(&loaded.tangle, cfg.evaluator) {
        Ok(v) => v,
        Err(e) => return eval_err(e),
    };
    let stdout = match cfg.format {
        Format::Json => format!("{}\n", v.to_json()),
        Format::Text => format!("{v}\n"),
    };
    Report { code: 0, stdout, stderr: String::new() }
}

pub fn cmd_check(cfg: &RunConfig) -> Report {
    let CommandKind::Check { fuzz, dims } = cfg.command else {
        return Report::fail(EXIT_PARSE, "not a check config\n");
    };
    let results = full_suite(dims, fuzz, cfg.seed);
    let ok = results.iter().all(|r| r.passed);
    let stdout = match cfg.format {
        Format::Json => format!("{}\n", json!({ "passed": ok, "results": results })),
        Format::Text => {
            let mut s = String::new();
            for r in &results {
                let _ = writeln!(s, "{} {}: {}", if r.passed { "PASS" } else { "FAIL" }, r.name, r.detail);
            }
            s
        }
    };
    Report { code: if ok { 0 } else { EXIT_CHECK_FAILED }, stdout, stderr: String::new() }
}

pub fn execute(cfg: &RunConfig) -> Report {
    match cfg.command {
        CommandKind::Alexander { .. } => cmd_alexander(cfg),
        CommandKind::Vector => cmd_vector(cfg),
        CommandKind::Check { .. } => cmd_check(cfg),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Report
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&RunConfig::from(cli)),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Report::fail(EXIT_PARSE, text)
            } else {
                Report { code: 0, stdout: text, stderr: String::new() }
            }
        }
    }
}
