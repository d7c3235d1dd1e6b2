//! Command-line front end. Every subcommand writes CSV (default) or JSON to
//! stdout or `--out`.
//!
//! Exit codes: 0 success, 2 invalid configuration, 3 result produced but its
//! truncation is not certified, 4 numeric failure.

use std::fs::File;
use std::io::{BufReader, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::airy::{airy_a_with, AiryOptions, DEFAULT_MAX_TERMS};
use crate::enumeration::{kernel_table, ClassTag, KernelWeightTable, DEFAULT_R_MAX};
use crate::probability::{
    parse_grid, probability_curve_with, ProbabilityCurve, ProbabilityError, DEFAULT_TOL,
};
use crate::simulator::{run_experiment, standard_error, ExperimentConfig};

pub const SEED_ENV: &str = "CRITICAL_PLANARITY_SEED";

#[derive(Debug, Parser)]
#[command(name = "critical-planarity", version, about = "Planarity of the critical random graph G(n, M)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact weighted cubic kernel counts h_r as numerator/denominator rows.
    Coeffs(CoeffsArgs),
    /// Limiting class probability p(lambda) at one point or on a grid.
    Prob(ProbArgs),
    /// The function A(y, lambda) with its error bound.
    Airy(AiryArgs),
    /// Monte Carlo experiment on G(n, M) in the critical window.
    Simulate(SimulateArgs),
    /// Analytic against empirical probabilities, one row per lambda.
    Compare(CompareArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// all, planar, sp, outerplanar, or the name of a custom class given by --table.
    #[arg(long, default_value = "planar")]
    pub class: String,
    /// Largest r (kernels on 2r vertices); defaults to order/2, or 30.
    #[arg(long)]
    pub rmax: Option<usize>,
    /// Truncation order N of the series system: even, at least 2.
    #[arg(long)]
    pub order: Option<usize>,
    /// CSV of weights (r,numerator,denominator) for a custom class.
    #[arg(long)]
    pub table: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CoeffsArgs {
    #[command(flatten)]
    pub table: TableArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ProbArgs {
    #[command(flatten)]
    pub table: TableArgs,
    #[arg(long, allow_hyphen_values = true, conflicts_with = "grid")]
    pub lambda: Option<f64>,
    /// min:max:step, endpoints included.
    #[arg(long, allow_hyphen_values = true)]
    pub grid: Option<String>,
    /// Certification threshold for the last term, relative to p.
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct AiryArgs {
    #[arg(long)]
    pub y: f64,
    #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
    pub lambda: f64,
    /// Relative tolerance.
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
    #[arg(long, default_value_t = DEFAULT_MAX_TERMS)]
    pub max_terms: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ExperimentArgs {
    #[arg(long, default_value_t = 1_000_000)]
    pub n: usize,
    #[arg(long, default_value_t = 400)]
    pub trials: usize,
    #[arg(long, env = SEED_ENV, default_value_t = 42)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
    pub lambda: f64,
    #[command(flatten)]
    pub experiment: ExperimentArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    /// Class of the analytic half: planar or sp.
    #[arg(long, default_value = "planar")]
    pub class: String,
    /// Class measured by the simulator; must match --class.
    #[arg(long)]
    pub empirical_class: Option<String>,
    #[arg(long)]
    pub rmax: Option<usize>,
    #[arg(long, allow_hyphen_values = true, conflicts_with = "grid")]
    pub lambda: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub grid: Option<String>,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
    #[command(flatten)]
    pub experiment: ExperimentArgs,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug)]
pub enum CliError {
    Config(String),
    /// The output was written but is not certified.
    Uncertified(String),
    Numeric(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Config(_) => 2,
            CliError::Uncertified(_) => 3,
            CliError::Numeric(_) => 4,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Config(m) => write!(f, "configuration error: {m}"),
            CliError::Uncertified(m) => write!(f, "warning: {m}"),
            CliError::Numeric(m) => write!(f, "numeric failure: {m}"),
        }
    }
}

fn numeric(e: impl std::fmt::Display) -> CliError {
    CliError::Numeric(e.to_string())
}

fn config(e: impl std::fmt::Display) -> CliError {
    CliError::Config(e.to_string())
}

/// Parses `args` (program name first) and runs the subcommand; returns the
/// process exit code.
pub fn run<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&cli.command) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("{e}");
            e.exit_code()
        }
    }
}

pub fn main() -> ExitCode {
    ExitCode::from(run(std::env::args_os()))
}

pub fn execute(command: &Command) -> Result<(), CliError> {
    match command {
        Command::Coeffs(a) => cmd_coeffs(a),
        Command::Prob(a) => cmd_prob(a),
        Command::Airy(a) => cmd_airy(a),
        Command::Simulate(a) => cmd_simulate(a),
        Command::Compare(a) => cmd_compare(a),
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| config(format!("{}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| numeric(format!("writing output: {e}")))
        }
    }
}

fn resolve_r_max(rmax: Option<usize>, order: Option<usize>) -> Result<usize, CliError> {
    if let Some(n) = order {
        if n < 2 || n % 2 != 0 {
            return Err(config(format!("--order must be even and at least 2, got {n}")));
        }
    }
    match (rmax, order) {
        (Some(r), Some(n)) if 2 * r > n => Err(config(format!(
            "--rmax {r} needs order at least {}, got --order {n}",
            2 * r
        ))),
        (Some(r), _) => Ok(r),
        (None, Some(n)) => Ok(n / 2),
        (None, None) => Ok(DEFAULT_R_MAX),
    }
}

fn load_table(args: &TableArgs) -> Result<KernelWeightTable, CliError> {
    let class: ClassTag = args.class.parse().map_err(config)?;
    let r_max = resolve_r_max(args.rmax, args.order)?;
    if let Some(path) = &args.table {
        let file = File::open(path).map_err(|e| config(format!("{}: {e}", path.display())))?;
        let table = KernelWeightTable::read_csv(class, BufReader::new(file)).map_err(config)?;
        return match args.rmax {
            Some(r) => table.truncated(r).map_err(config),
            None => Ok(table),
        };
    }
    if class == ClassTag::outerplanar() && args.rmax.is_none() && args.order.is_none() {
        return Ok(KernelWeightTable::outerplanar());
    }
    kernel_table(&class, r_max).map_err(config)
}

fn cmd_coeffs(args: &CoeffsArgs) -> Result<(), CliError> {
    let table = load_table(&args.table)?;
    let text = match args.output.format {
        Format::Csv => table.to_csv_string(),
        Format::Json => {
            let rows: Vec<_> = table
                .weights()
                .iter()
                .enumerate()
                .map(|(r, h)| json!({"r": r, "numerator": h.numer().to_string(), "denominator": h.denom().to_string()}))
                .collect();
            let doc = json!({"class": table.class().to_string(), "note": table.note(), "rows": rows});
            serde_json::to_string_pretty(&doc).expect("json") + "\n"
        }
    };
    emit(&args.output.out, &text)?;
    match table.note() {
        Some(note) => Err(CliError::Uncertified(format!("class {}: {note}", table.class()))),
        None => Ok(()),
    }
}

fn grid_or_point(lambda: Option<f64>, grid: &Option<String>) -> Result<Vec<f64>, CliError> {
    match (lambda, grid) {
        (Some(l), _) if !l.is_finite() => Err(config("lambda must be finite")),
        (Some(l), _) => Ok(vec![l]),
        (None, Some(g)) => parse_grid(g).map_err(config),
        (None, None) => Err(config("give --lambda or --grid")),
    }
}

fn curve_error(e: ProbabilityError) -> CliError {
    match e {
        ProbabilityError::InvalidGrid(_) | ProbabilityError::RMaxTooSmall(_) => config(e),
        ProbabilityError::Airy(crate::airy::AiryError::OutsideEnvelope { .. }) => config(e),
        _ => numeric(e),
    }
}

fn curve_json(curve: &ProbabilityCurve) -> String {
    let points: Vec<_> = curve
        .points
        .iter()
        .map(|p| json!({"lambda": p.lambda, "p": p.p, "error_bound": p.error_bound, "certified": p.certified}))
        .collect();
    let doc = json!({"class": curve.class.to_string(), "r_max": curve.r_max, "points": points});
    serde_json::to_string_pretty(&doc).expect("json") + "\n"
}

fn cmd_prob(args: &ProbArgs) -> Result<(), CliError> {
    if !(args.tol > 0.0) {
        return Err(config("--tol must be positive"));
    }
    let grid = grid_or_point(args.lambda, &args.grid)?;
    let table = load_table(&args.table)?;
    let curve = probability_curve_with(&table, &grid, args.tol).map_err(curve_error)?;
    let text = match args.output.format {
        Format::Csv => curve.to_csv_string(),
        Format::Json => curve_json(&curve),
    };
    emit(&args.output.out, &text)?;
    if let Some(note) = table.note() {
        return Err(CliError::Uncertified(format!("class {}: {note}", table.class())));
    }
    let bad: Vec<String> = curve
        .points
        .iter()
        .filter(|p| !p.certified)
        .map(|p| p.lambda.to_string())
        .collect();
    if bad.is_empty() {
        Ok(())
    } else {
        Err(CliError::Uncertified(format!(
            "truncation at r = {} not certified for lambda in [{}]; raise --rmax",
            table.r_max(),
            bad.join(", ")
        )))
    }
}

fn cmd_airy(args: &AiryArgs) -> Result<(), CliError> {
    let options = AiryOptions {
        max_terms: args.max_terms,
    };
    let r = airy_a_with(args.y, args.lambda, args.tol, &options).map_err(|e| match e {
        crate::airy::AiryError::ToleranceNotReached { .. } => numeric(e),
        _ => config(e),
    })?;
    let text = match args.output.format {
        Format::Csv => format!(
            "y,lambda,value,tail_bound,terms_used\n{},{},{:.16e},{:.3e},{}\n",
            args.y, args.lambda, r.value, r.tail_bound, r.terms_used
        ),
        Format::Json => {
            let doc = json!({
                "y": args.y, "lambda": args.lambda, "value": r.value,
                "log2_value": r.scaled.log2_abs(), "tail_bound": r.tail_bound,
                "relative_error": r.relative_error, "terms_used": r.terms_used,
            });
            serde_json::to_string_pretty(&doc).expect("json") + "\n"
        }
    };
    emit(&args.output.out, &text)
}

fn cmd_simulate(args: &SimulateArgs) -> Result<(), CliError> {
    let config_ = ExperimentConfig {
        lambda: args.lambda,
        n: args.experiment.n,
        trials: args.experiment.trials,
        seed: args.experiment.seed,
    };
    let report = run_experiment(&config_).map_err(|e| match e {
        crate::simulator::SimulatorError::InvalidConfig(_) => config(e),
        _ => numeric(e),
    })?;
    let text = match args.output.format {
        Format::Csv => report.to_csv_string(),
        Format::Json => report.to_json() + "\n",
    };
    emit(&args.output.out, &text)
}

fn cmd_compare(args: &CompareArgs) -> Result<(), CliError> {
    let analytic: ClassTag = args.class.parse().map_err(config)?;
    let empirical: ClassTag = match &args.empirical_class {
        Some(c) => c.parse().map_err(config)?,
        None => analytic.clone(),
    };
    if analytic != empirical {
        return Err(config(format!(
            "analytic class {analytic} and empirical class {empirical} differ"
        )));
    }
    if !matches!(analytic, ClassTag::Planar | ClassTag::SeriesParallel) {
        return Err(config(format!("the simulator measures planar or sp, not {analytic}")));
    }
    let grid = grid_or_point(args.lambda, &args.grid)?;
    let table = kernel_table(&analytic, resolve_r_max(args.rmax, None)?).map_err(config)?;
    let curve = probability_curve_with(&table, &grid, args.tol).map_err(curve_error)?;

    let mut text = String::from("lambda,p_analytic,p_empirical,se,z_score\n");
    for point in &curve.points {
        let config_ = ExperimentConfig {
            lambda: point.lambda,
            n: args.experiment.n,
            trials: args.experiment.trials,
            seed: args.experiment.seed,
        };
        let report = run_experiment(&config_).map_err(|e| match e {
            crate::simulator::SimulatorError::InvalidConfig(_) => config(e),
            _ => numeric(e),
        })?;
        let p_emp = match analytic {
            ClassTag::Planar => report.p_planar,
            _ => report.p_sp,
        };
        // standard error under the analytic value, so z stays finite when
        // every trial agrees
        let se0 = standard_error(point.p, report.trials);
        let z = if se0 > 0.0 { (p_emp - point.p) / se0 } else { 0.0 };
        text.push_str(&format!(
            "{},{:.16e},{:.16e},{:.16e},{:.6}\n",
            point.lambda, point.p, p_emp, se0, z
        ));
    }
    emit(&args.out, &text)
}
