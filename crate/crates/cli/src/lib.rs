//! The `gjmskit` command line: coefficient tables, batch verification with
//! one JSON report per check, Q-curvature values and series dumps.

mod error;
mod report;
pub mod suites;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use gjms_compositions::{enumerate, mcoeff, ncoeff};
use gjms_exact::{factorial, int, parse_rational, Poly, Rational};
use gjms_models::{EinsteinModel, Param, SchoutenModel};
use gjms_series::Matrix;
use rayon::prelude::*;
use serde::Serialize;

pub use error::CliError;
pub use report::{CheckReport, Job, Status};

const THREADS_VAR: &str = "GJMSKIT_THREADS";

#[derive(Debug, Parser)]
#[command(name = "gjmskit", version, about = "Exact verification of GJMS operator identities")]
struct Cli {
    /// Report elapsed_ms as 0 so that repeated runs are byte-identical.
    #[arg(long, global = true)]
    no_timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Export the composition coefficients m_I and n_I.
    Coeffs {
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..=16))]
        max_order: u32,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run a family of checks and print one JSON report per check.
    Verify {
        #[command(subcommand)]
        suite: Suite,
    },
    /// Q-curvature of a model, computed three ways.
    Q {
        #[arg(long, value_enum)]
        model: ModelKind,
        /// The operator order 2N.
        #[arg(long)]
        order: u32,
        #[command(flatten)]
        params: ModelArgs,
    },
    /// Coefficients of v, w or the potential H_0 in powers of r^2.
    Series {
        #[arg(long, value_enum)]
        model: ModelKind,
        #[arg(long, value_enum)]
        what: SeriesKind,
        #[arg(long, default_value_t = 8)]
        truncation: u32,
        #[command(flatten)]
        params: ModelArgs,
    },
}

#[derive(Debug, Subcommand)]
enum Suite {
    Inversion {
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(1..=12))]
        max_order: u32,
    },
    Residue {
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..=8))]
        max_order: u32,
    },
    Lemma1 {
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u64).range(1..=16))]
        s_max: u64,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
    Einstein {
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..=12))]
        max_order: u32,
        #[arg(long, default_value = "formal", value_parser = parse_param)]
        n: Param,
        #[arg(long, default_value = "formal", value_parser = parse_param)]
        lambda: Param,
    },
    Lcf {
        /// JSON array of rows of "p/q" strings; a random diagonal matrix when absent.
        #[arg(long)]
        schouten: Option<PathBuf>,
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..=12))]
        max_order: u32,
        #[arg(long, default_value = "formal", value_parser = parse_param)]
        n: Param,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        dim: usize,
    },
    All {
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(2..=10))]
        max_order: u32,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
}

#[derive(Debug, Args)]
struct ModelArgs {
    /// Dimension; defaults to formal for Einstein and to the matrix size for LCF.
    #[arg(long, value_parser = parse_param)]
    n: Option<Param>,
    #[arg(long, default_value = "formal", value_parser = parse_param)]
    lambda: Param,
    #[arg(long)]
    schouten: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModelKind {
    Einstein,
    Lcf,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SeriesKind {
    V,
    W,
    H0,
}

fn parse_param(text: &str) -> Result<Param, String> {
    if text == "formal" {
        return Ok(Param::Formal);
    }
    parse_rational(text).map(Param::Value).map_err(|e| e.to_string())
}

/// Reads a Schouten matrix from a JSON array of rows of rational strings.
pub fn load_schouten(path: &Path) -> Result<Matrix, CliError> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: shown.clone(), source })?;
    let rows: Vec<Vec<String>> =
        serde_json::from_str(&text).map_err(|e| CliError::SchoutenFile { path: shown.clone(), reason: e.to_string() })?;
    if rows.is_empty() || rows.iter().any(|row| row.len() != rows.len()) {
        return Err(CliError::SchoutenFile { path: shown, reason: "expected a nonempty square array".into() });
    }
    let matrix = Matrix::parse_rows(&rows).map_err(|e| CliError::SchoutenFile { path: shown.clone(), reason: e.to_string() })?;
    if !matrix.is_symmetric() {
        return Err(CliError::SchoutenFile { path: shown, reason: "matrix is not symmetric".into() });
    }
    Ok(matrix)
}

/// Parses `args` (program name first), runs the command and writes its
/// output to `out`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut impl Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("gjmskit: {e}");
            e.exit_code()
        }
    }
}

fn execute(cli: Cli, out: &mut impl Write) -> Result<u8, CliError> {
    let timed = !cli.no_timing;
    match cli.command {
        Command::Coeffs { max_order, format } => {
            write_coeffs(max_order, format, out)?;
            Ok(0)
        }
        Command::Verify { suite } => {
            let jobs = suite_jobs(suite)?;
            let reports = run_jobs(&jobs, timed)?;
            write_reports(&reports, out)?;
            Ok(if reports.iter().all(CheckReport::passed) { 0 } else { 1 })
        }
        Command::Q { model, order, params } => {
            if order == 0 || order % 2 == 1 {
                return Err(CliError::Usage(format!("--order must be a positive even number, got {order}")));
            }
            let routes = match model {
                ModelKind::Einstein => einstein_model(&params).q_three_ways(order / 2)?,
                ModelKind::Lcf => schouten_model(&params)?.q_three_ways(order / 2)?,
            };
            if routes.iter().all(|q| *q == routes[0]) {
                writeln!(out, "{}", routes[0]).map_err(output_error)?;
                Ok(0)
            } else {
                for (route, q) in ["definition", "explicit", "recursive"].iter().zip(&routes) {
                    writeln!(out, "{route}: {q}").map_err(output_error)?;
                }
                Ok(1)
            }
        }
        Command::Series { model, what, truncation, params } => {
            let coeffs = series_coefficients(model, what, truncation as usize, &params)?;
            for (k, c) in coeffs.iter().enumerate() {
                let line = SeriesLine { model: model_name(model), what: series_name(what), power: 2 * k, coeff: c.to_string() };
                let json = serde_json::to_string(&line).map_err(|e| CliError::Output(e.to_string()))?;
                writeln!(out, "{json}").map_err(output_error)?;
            }
            Ok(0)
        }
    }
}

fn output_error(e: std::io::Error) -> CliError {
    CliError::Output(e.to_string())
}

fn einstein_model(params: &ModelArgs) -> EinsteinModel {
    EinsteinModel::new(params.n.clone().unwrap_or(Param::Formal), params.lambda.clone())
}

fn schouten_model(params: &ModelArgs) -> Result<SchoutenModel, CliError> {
    let path = params.schouten.as_ref().ok_or_else(|| CliError::Usage("--model lcf needs --schouten FILE".into()))?;
    let matrix = load_schouten(path)?;
    let n = params.n.clone().unwrap_or_else(|| Param::Value(int(matrix.dim() as i64)));
    Ok(SchoutenModel::new(matrix, n)?)
}

fn suite_jobs(suite: Suite) -> Result<Vec<Job>, CliError> {
    Ok(match suite {
        Suite::Inversion { max_order } => suites::inversion(max_order),
        Suite::Residue { max_order } => suites::residue(max_order),
        Suite::Lemma1 { s_max, trials, seed } => suites::lemma1(s_max as usize, trials, seed),
        Suite::Einstein { max_order, n, lambda } => {
            let mut jobs = suites::einstein(EinsteinModel::new(n, lambda), max_order);
            jobs.extend(suites::sphere(max_order));
            jobs
        }
        Suite::Lcf { schouten, max_order, n, seed, dim } => {
            let (model, seed) = match schouten {
                Some(path) => (SchoutenModel::new(load_schouten(&path)?, n)?, None),
                None => (SchoutenModel::random_diagonal(dim, seed).with_n(n), Some(seed)),
            };
            let mut jobs = suites::lcf(model.clone(), max_order, seed);
            jobs.extend(suites::double_metric(model, 6, seed));
            jobs
        }
        Suite::All { max_order, seed } => {
            let mut jobs = suites::tables();
            jobs.extend(suites::inversion(10));
            jobs.extend(suites::pi_polynomial(max_order));
            jobs.extend(suites::lemma1(8, 200, seed));
            jobs.extend(suites::residue(6));
            jobs.extend(suites::einstein(EinsteinModel::formal(), max_order));
            jobs.extend(suites::sphere(max_order));
            jobs.extend(suites::agreement(max_order));
            jobs.extend(suites::lcf(SchoutenModel::random_diagonal(10, seed), max_order, Some(seed)));
            jobs.extend(suites::double_metric(SchoutenModel::random_symmetric(6, seed), 6, Some(seed)));
            jobs.extend(suites::lcf_sphere());
            jobs
        }
    })
}

fn thread_count() -> Result<Option<usize>, CliError> {
    match std::env::var(THREADS_VAR) {
        Ok(text) => match text.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(CliError::Usage(format!("{THREADS_VAR} must be a positive integer, got {text:?}"))),
        },
        Err(_) => Ok(None),
    }
}

/// Runs the jobs on a pool and returns the reports sorted by check key.
pub fn run_jobs(jobs: &[Job], timed: bool) -> Result<Vec<CheckReport>, CliError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = thread_count()? {
        builder = builder.num_threads(n);
    }
    let pool = builder.build().map_err(|e| CliError::Usage(e.to_string()))?;
    let mut reports: Vec<CheckReport> = pool.install(|| jobs.par_iter().flat_map_iter(|job| job.execute(timed)).collect());
    reports.sort_by(CheckReport::key_cmp);
    Ok(reports)
}

fn write_reports(reports: &[CheckReport], out: &mut impl Write) -> Result<(), CliError> {
    for report in reports {
        let json = serde_json::to_string(report).map_err(|e| CliError::Output(e.to_string()))?;
        writeln!(out, "{json}").map_err(output_error)?;
    }
    Ok(())
}

#[derive(Serialize)]
struct CoeffRow {
    order: u32,
    composition: String,
    m: String,
    n: String,
}

fn write_coeffs(max_order: u32, format: Format, out: &mut impl Write) -> Result<(), CliError> {
    let mut rows = Vec::new();
    for order in 1..=max_order {
        for comp in enumerate(order).expect("order is positive") {
            rows.push(CoeffRow { order, composition: comp.to_string(), m: mcoeff(&comp).to_string(), n: ncoeff(&comp).to_string() });
        }
    }
    match format {
        Format::Json => {
            for row in &rows {
                let json = serde_json::to_string(row).map_err(|e| CliError::Output(e.to_string()))?;
                writeln!(out, "{json}").map_err(output_error)?;
            }
        }
        Format::Csv => {
            let mut writer = csv::Writer::from_writer(out);
            for row in &rows {
                writer.serialize(row).map_err(|e| CliError::Output(e.to_string()))?;
            }
            writer.flush().map_err(output_error)?;
        }
        Format::Table => {
            let width = rows.iter().map(|r| r.composition.len()).max().unwrap_or(0).max("composition".len());
            writeln!(out, "{:>5}  {:<width$}  {:>12}  {:>12}", "order", "composition", "m", "n").map_err(output_error)?;
            for row in &rows {
                writeln!(out, "{:>5}  {:<width$}  {:>12}  {:>12}", row.order, row.composition, row.m, row.n).map_err(output_error)?;
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct SeriesLine {
    model: &'static str,
    what: &'static str,
    power: usize,
    coeff: String,
}

fn model_name(model: ModelKind) -> &'static str {
    match model {
        ModelKind::Einstein => "einstein",
        ModelKind::Lcf => "lcf",
    }
}

fn series_name(what: SeriesKind) -> &'static str {
    match what {
        SeriesKind::V => "v",
        SeriesKind::W => "w",
        SeriesKind::H0 => "h0",
    }
}

/// `mu_2N / ((N-1)!^2 4^{N-1})`, the `r^{2N-2}` coefficient of `H_0`.
fn potential_coefficient(mu: &Poly, big_n: u32) -> Poly {
    let fact = Rational::from_integer(factorial(big_n as u64 - 1));
    let weight = int(1) / (&fact * &fact * Rational::from_integer(4.into()).pow(big_n as i32 - 1));
    mu.scale(&weight)
}

fn series_coefficients(model: ModelKind, what: SeriesKind, order: usize, params: &ModelArgs) -> Result<Vec<Poly>, CliError> {
    let constant = |c: &Rational| Poly::constant(c.clone());
    Ok(match model {
        ModelKind::Einstein => {
            let model = einstein_model(params);
            match what {
                SeriesKind::W => model.density_series(order).coeffs().to_vec(),
                SeriesKind::V => {
                    let w = model.density_series(order);
                    w.mul(&w).coeffs().to_vec()
                }
                SeriesKind::H0 => (1..=order as u32 + 1).map(|n| potential_coefficient(&model.mu(n), n)).collect(),
            }
        }
        ModelKind::Lcf => {
            let model = schouten_model(params)?;
            match what {
                SeriesKind::W => model.density_series(order).coeffs().iter().map(constant).collect(),
                SeriesKind::V => model.volume_series(order).coeffs().iter().map(constant).collect(),
                SeriesKind::H0 => (1..=order as u32 + 1).map(|n| potential_coefficient(&model.mu(n), n)).collect(),
            }
        }
    })
}
