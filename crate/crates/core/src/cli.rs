//! Batch front end: `verify`, `classify` and `table`.
//!
//! Exit codes: 0 success, 1 axiom violation or brute-force/closed-form
//! disagreement, 2 usage error.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::checks::{run_all, CheckOptions, Coverage, SuiteReport, DEFAULT_SAMPLES, DEFAULT_SEED};
use crate::hopf::{BookAlgebra, HopfError};
use crate::mpi::{classify, unique_implementing_pair, Classification, MpiError, PairIndex};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "bookhopf",
    version,
    about = "Hopf axioms and modular pairs in involution of H(p, s)"
)]
struct Cli {
    #[command(subcommand)]
    command: CommandArgs,
}

#[derive(Debug, Subcommand)]
enum CommandArgs {
    /// Check every Hopf-algebra axiom.
    Verify(RunArgs),
    /// Classify all pairs (g^i, β_j) by brute force.
    Classify(RunArgs),
    /// One summary row per s in 1..p.
    Table(TableArgs),
}

#[derive(Debug, Args)]
struct RunArgs {
    #[arg(long)]
    p: u32,
    #[arg(long, required_unless_present = "all_s", conflicts_with = "all_s")]
    s: Option<u32>,
    /// Every s in 1..p.
    #[arg(long)]
    all_s: bool,
    /// Allow s = 0 (not a bialgebra; negative control).
    #[arg(long)]
    permissive: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for sampled checks.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Number of samples for pair/triple checks that are not exhaustive.
    #[arg(long, default_value_t = DEFAULT_SAMPLES)]
    samples: u64,
    /// Make every check exhaustive.
    #[arg(long)]
    exhaustive: bool,
}

#[derive(Debug, Args)]
struct TableArgs {
    #[arg(long)]
    p: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Verify,
    Classify,
    Table,
}

/// Validated invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub p: u32,
    /// The values of `s` to run, in increasing order.
    pub s_values: Vec<u32>,
    pub permissive: bool,
    pub format: Format,
    pub seed: u64,
    pub samples: u64,
    pub exhaustive: bool,
}

impl RunConfig {
    pub fn check_options(&self) -> CheckOptions {
        CheckOptions {
            seed: self.seed,
            samples: self.samples,
            exhaustive: self.exhaustive,
            ..CheckOptions::default()
        }
    }

    fn algebras(&self) -> impl Iterator<Item = BookAlgebra> + '_ {
        self.s_values.iter().map(|&s| {
            BookAlgebra::new(self.p, s, self.permissive).expect("validated configuration")
        })
    }
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(message: impl Into<String>) -> Self {
        Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: message.into(),
        }
    }
}

fn validate(p: u32, s: Option<u32>, all_s: bool, permissive: bool) -> Result<Vec<u32>, HopfError> {
    // Building one algebra surfaces every parameter error.
    match s {
        Some(s) if !all_s => {
            BookAlgebra::new(p, s, permissive)?;
            Ok(vec![s])
        }
        _ => {
            BookAlgebra::new(p, 1, false)?;
            Ok((1..p).collect())
        }
    }
}

fn parse_config<I, T>(args: I) -> Result<RunConfig, Outcome>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(args).map_err(|e| {
        let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        let text = e.render().to_string();
        if code == EXIT_OK {
            Outcome {
                code,
                stdout: text,
                stderr: String::new(),
            }
        } else {
            Outcome::usage(text)
        }
    })?;
    let usage = |e: HopfError| Outcome::usage(format!("error: {e}\n"));
    let (command, a) = match cli.command {
        CommandArgs::Verify(a) => (Command::Verify, a),
        CommandArgs::Classify(a) => (Command::Classify, a),
        CommandArgs::Table(a) => {
            return Ok(RunConfig {
                command: Command::Table,
                p: a.p,
                s_values: validate(a.p, None, true, false).map_err(usage)?,
                permissive: false,
                format: a.format,
                seed: DEFAULT_SEED,
                samples: DEFAULT_SAMPLES,
                exhaustive: false,
            })
        }
    };
    let s_values = validate(a.p, a.s, a.all_s, a.permissive).map_err(usage)?;
    Ok(RunConfig {
        command,
        p: a.p,
        s_values,
        permissive: a.permissive,
        format: a.format,
        seed: a.seed,
        samples: a.samples,
        exhaustive: a.exhaustive,
    })
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match parse_config(args) {
        Ok(config) => execute(&config),
        Err(outcome) => outcome,
    }
}

pub fn execute(config: &RunConfig) -> Outcome {
    match config.command {
        Command::Verify => cmd_verify(config),
        Command::Classify => cmd_classify(config),
        Command::Table => cmd_table(config),
    }
}

fn to_json<T: Serialize>(items: &[T]) -> String {
    let text = match items {
        [single] => serde_json::to_string_pretty(single),
        many => serde_json::to_string_pretty(many),
    };
    text.expect("reports serialize") + "\n"
}

/// Whether a verification report counts as success: every axiom holds, or
/// for `s = 0` the failures are exactly the predicted ones.
pub fn verify_succeeded(report: &SuiteReport) -> bool {
    if report.s == 0 {
        report.is_expected_negative_control()
    } else {
        report.all_pass()
    }
}

pub fn cmd_verify(config: &RunConfig) -> Outcome {
    let opts = config.check_options();
    let reports: Vec<SuiteReport> = config.algebras().map(|h| run_all(&h, &opts)).collect();
    let ok = reports.iter().all(verify_succeeded);
    let stdout = match config.format {
        Format::Json => to_json(&reports),
        Format::Text => reports
            .iter()
            .map(render_suite)
            .collect::<Vec<_>>()
            .join("\n"),
    };
    Outcome {
        code: if ok { EXIT_OK } else { EXIT_FAILURE },
        stdout,
        stderr: String::new(),
    }
}

fn render_suite(report: &SuiteReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "H({}, {}){}",
        report.p,
        report.s,
        if report.permissive {
            "  [permissive]"
        } else {
            ""
        }
    );
    let _ = writeln!(
        out,
        "  {:<17} {:<6} {:>9} {:<34} {:>10} {:>8}",
        "axiom", "status", "checked", "coverage", "violations", "ms"
    );
    for r in &report.axioms {
        let coverage = match r.coverage {
            Coverage::Exhaustive => "exhaustive".to_string(),
            Coverage::Sampled { samples, seed } => format!("sampled n={samples} seed={seed}"),
        };
        let status = if r.passed() { "pass" } else { "FAIL" };
        let _ = writeln!(
            out,
            "  {:<17} {:<6} {:>9} {:<34} {:>10} {:>8}",
            r.axiom.name(),
            status,
            r.checked,
            coverage,
            r.violation_count,
            r.elapsed_ms
        );
        for v in &r.violations {
            let _ = writeln!(out, "      at {}: {} ≠ {}", v.at, v.lhs, v.rhs);
        }
        if r.violation_count > r.violations.len() as u64 {
            let _ = writeln!(
                out,
                "      … {} more ({} with y-degree ≥ p)",
                r.violation_count - r.violations.len() as u64,
                r.y_overflow_violations
            );
        }
    }
    let verdict = if report.s == 0 {
        if report.is_expected_negative_control() {
            "failures are exactly the predicted Δ(y)^p ≠ 0 and its consequences".to_string()
        } else {
            format!("UNEXPECTED failure pattern: {:?}", report.failing())
        }
    } else if report.all_pass() {
        "all axioms hold".to_string()
    } else {
        format!("axioms violated: {:?}", report.failing())
    };
    let _ = writeln!(out, "  result: {verdict}");
    out
}

fn pair_list(pairs: &[PairIndex]) -> String {
    if pairs.is_empty() {
        return "none".into();
    }
    pairs
        .iter()
        .map(|x| format!("(i={}, j={})", x.i, x.j))
        .collect::<Vec<_>>()
        .join(", ")
}

fn classify_all(config: &RunConfig) -> Result<Vec<Classification>, MpiError> {
    config.algebras().map(|h| classify(&h)).collect()
}

pub fn cmd_classify(config: &RunConfig) -> Outcome {
    let results = match classify_all(config) {
        Ok(r) => r,
        Err(e) => {
            return Outcome {
                code: EXIT_FAILURE,
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
            }
        }
    };
    let stdout = match config.format {
        Format::Json => to_json(&results),
        Format::Text => results
            .iter()
            .map(render_classification)
            .collect::<Vec<_>>()
            .join("\n"),
    };
    Outcome {
        code: EXIT_OK,
        stdout,
        stderr: String::new(),
    }
}

fn render_classification(c: &Classification) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "H({}, {})", c.p, c.s);
    let _ = writeln!(out, "  MPI: {}", pair_list(&c.mpi));
    let _ = writeln!(out, "  implements S²: {}", pair_list(&c.implements));
    let _ = writeln!(
        out,
        "  {:>3} {:>3}  {:<10} {:<6} {:<6}  β(l)",
        "i", "j", "implements", "stable", "agrees"
    );
    for r in &c.pairs {
        let _ = writeln!(
            out,
            "  {:>3} {:>3}  {:<10} {:<6} {:<6}  {}",
            r.i, r.j, r.implements_s2, r.stable, r.closed_form_agrees, r.stability_value
        );
    }
    out
}

/// One line of `table`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub s: u32,
    pub mpi_exists: bool,
    pub mpi: Vec<PairIndex>,
    /// The pairs with `T = S²`.
    pub implementing: Vec<PairIndex>,
    /// `β(l)` at each implementing pair.
    pub beta_l: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableReport {
    pub p: u32,
    pub rows: Vec<TableRow>,
}

pub fn build_table(config: &RunConfig) -> Result<TableReport, MpiError> {
    let rows = classify_all(config)?
        .into_iter()
        .map(|c| TableRow {
            s: c.s,
            mpi_exists: c.has_mpi(),
            beta_l: c
                .implements
                .iter()
                .map(|x| {
                    c.pair(x.i, x.j)
                        .expect("listed pair")
                        .stability_value
                        .to_string()
                })
                .collect(),
            implementing: c.implements,
            mpi: c.mpi,
        })
        .collect();
    Ok(TableReport { p: config.p, rows })
}

pub fn cmd_table(config: &RunConfig) -> Outcome {
    let table = match build_table(config) {
        Ok(t) => t,
        Err(e) => {
            return Outcome {
                code: EXIT_FAILURE,
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
            }
        }
    };
    let stdout = match config.format {
        Format::Json => serde_json::to_string_pretty(&table).expect("table serializes") + "\n",
        Format::Text => render_table(&table),
    };
    Outcome {
        code: EXIT_OK,
        stdout,
        stderr: String::new(),
    }
}

fn render_table(t: &TableReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "p = {}", t.p);
    let _ = writeln!(
        out,
        "  {:>3}  {:<4}  {:<20} {:<20} β(l)",
        "s", "MPI", "MPI pairs", "implements S²"
    );
    for r in &t.rows {
        let _ = writeln!(
            out,
            "  {:>3}  {:<4}  {:<20} {:<20} {}",
            r.s,
            if r.mpi_exists { "yes" } else { "no" },
            pair_list(&r.mpi),
            pair_list(&r.implementing),
            r.beta_l.join(", ")
        );
    }
    let expected: Vec<String> = (1..t.p)
        .map(|s| {
            let (i, j) = unique_implementing_pair(t.p, s);
            format!("s={s}→(i={i}, j={j})")
        })
        .collect();
    let _ = writeln!(
        out,
        "  predicted implementing pairs: {}",
        expected.join(" ")
    );
    out
}
