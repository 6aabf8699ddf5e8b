//! `octachain` command line: tables, verification, resistances, export and
//! ratio series for the crossed octagonal chains `O_n`.

mod render;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use octachain::closed_forms::{
    extrapolated_ratios, fitted_gutman_cubic, fitted_wiener_cubic, ratio_series,
    verify_theorems_with, Check, Status, VerificationReport,
};
use octachain::invariants::{
    effective_resistance, full_report_with_cap, kirchhoff_spectral_route,
    mult_kirchhoff_spectral_route, spanning_trees_matrix_tree, spanning_trees_product_route,
    DEFAULT_EDGE_CAP,
};
use octachain::matrix::{decimal, two_decimals};
use octachain::{ChainGraph, Error, Rational};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use render::text_table;

/// Largest `n` for which `ratio` computes invariants directly; beyond it the
/// closed-form Kirchhoff indices are divided by the fitted distance cubics.
pub const DIRECT_RATIO_LIMIT: u32 = 50;

const RATIO_PLACES: u32 = 6;

#[derive(Debug, Parser)]
#[command(
    name = "octachain",
    version,
    about = "Exact invariants of linear crossed octagonal chains"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format; `export` defaults to csv, everything else to table.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Write output here instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,

    /// Largest edge count for the deletion-contraction spanning-tree oracle.
    #[arg(long, global = true, value_name = "K", default_value_t = DEFAULT_EDGE_CAP)]
    pub edge_cap: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Kf, Kf* or spanning-tree counts for n = 1..n_max.
    Table {
        which: Which,
        /// Defaults to 20 for kf and kfstar, 8 for tau.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n_max: Option<u32>,
    },
    /// Check every closed form and identity for n = 1..n_max.
    Verify {
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..))]
        n_max: u32,
    },
    /// Effective resistance between two vertices, written like 4 or 4'.
    Resistance {
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
    },
    /// All invariants per n with exact numerators and denominators.
    Export {
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..))]
        n_max: u32,
    },
    /// Kf/W and Kf*/Gut for n = 1..n_max.
    Ratio {
        #[arg(long, default_value_t = DIRECT_RATIO_LIMIT, value_parser = clap::value_parser!(u32).range(1..))]
        n_max: u32,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Kf,
    Kfstar,
    Tau,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Debug)]
pub enum CliError {
    /// Bad arguments; exit code 2.
    Usage(String),
    /// A computation or check failed; exit code 1.
    Check(String),
    Render(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Check(_) | CliError::Render(_) => 1,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Check(m) => write!(f, "check failed: {m}"),
            CliError::Render(m) => write!(f, "cannot render output: {m}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidChainLength(_)
            | Error::VertexParse { .. }
            | Error::SameVertex(_)
            | Error::EdgeCapExceeded { .. } => CliError::Usage(e.to_string()),
            other => CliError::Check(other.to_string()),
        }
    }
}

/// Rendered output plus the exit code it should end with.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub code: u8,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                stdout.write_all(text.as_bytes())
            } else {
                stderr.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli) {
        Ok(outcome) => {
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, &outcome.text) {
                    let _ = writeln!(stderr, "usage error: cannot write {}: {e}", path.display());
                    return 2;
                }
            } else if stdout.write_all(outcome.text.as_bytes()).is_err() {
                return 1;
            }
            outcome.code
        }
        Err(e) => {
            let _ = writeln!(stderr, "{e}");
            e.exit_code()
        }
    }
}

pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let format = cli.format;
    let ok = |text: String| Ok(Outcome { text, code: 0 });
    match &cli.command {
        Command::Table { which, n_max } => {
            let n_max = n_max.unwrap_or(match which {
                Which::Tau => 8,
                _ => 20,
            });
            ok(cmd_table(*which, n_max, format.unwrap_or(Format::Table))?)
        }
        Command::Verify { n_max } => Ok(run_verify_with(
            *n_max,
            cli.edge_cap,
            &|n| ChainGraph::build(n as i64),
            format.unwrap_or(Format::Table),
        )?),
        Command::Resistance { n, u, v } => {
            ok(cmd_resistance(*n, u, v, format.unwrap_or(Format::Table))?)
        }
        Command::Export { n_max } => ok(cmd_export(
            *n_max,
            cli.edge_cap,
            format.unwrap_or(Format::Csv),
        )?),
        Command::Ratio { n_max } => ok(cmd_ratio(*n_max, format.unwrap_or(Format::Table))?),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KirchhoffRow {
    pub n: u32,
    pub num: String,
    pub den: String,
    #[serde(rename = "2dp")]
    pub two_dp: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TauRow {
    pub n: u32,
    pub tau: String,
}

fn exact_parts(value: &Rational) -> (String, String) {
    (value.numer().to_string(), value.denom().to_string())
}

fn exact_text(value: &Rational) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        value.to_string()
    }
}

fn per_n<T: Send>(
    n_max: u32,
    f: impl Fn(u32) -> Result<T, CliError> + Sync + Send,
) -> Result<Vec<T>, CliError> {
    (1..=n_max).into_par_iter().map(f).collect()
}

pub fn kirchhoff_rows(which: Which, n_max: u32) -> Result<Vec<KirchhoffRow>, CliError> {
    per_n(n_max, |n| {
        let g = ChainGraph::build(n as i64)?;
        let value = match which {
            Which::Kfstar => mult_kirchhoff_spectral_route(&g)?,
            _ => kirchhoff_spectral_route(&g)?,
        };
        let (num, den) = exact_parts(&value);
        Ok(KirchhoffRow {
            n,
            num,
            den,
            two_dp: two_decimals(&value),
        })
    })
}

pub fn tau_rows(n_max: u32) -> Result<Vec<TauRow>, CliError> {
    per_n(n_max, |n| {
        let g = ChainGraph::build(n as i64)?;
        let cofactor = spanning_trees_matrix_tree(&g)?;
        let product = spanning_trees_product_route(&g)?;
        if cofactor != product {
            return Err(CliError::Check(format!(
                "spanning trees at n={n}: matrix-tree {cofactor}, eigenvalue product {product}"
            )));
        }
        Ok(TauRow {
            n,
            tau: cofactor.to_string(),
        })
    })
}

pub fn cmd_table(which: Which, n_max: u32, format: Format) -> Result<String, CliError> {
    if which == Which::Tau {
        let rows = tau_rows(n_max)?;
        return match format {
            Format::Table => {
                let body: Vec<Vec<String>> = rows
                    .iter()
                    .map(|r| vec![r.n.to_string(), r.tau.clone()])
                    .collect();
                Ok(text_table(&["n", "tau"], &body))
            }
            Format::Csv => render::csv(&rows),
            Format::Json => render::json(&rows),
        };
    }
    let label = if which == Which::Kf { "Kf" } else { "Kf*" };
    let rows = kirchhoff_rows(which, n_max)?;
    match format {
        Format::Table => {
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    let exact = if r.den == "1" {
                        r.num.clone()
                    } else {
                        format!("{}/{}", r.num, r.den)
                    };
                    vec![r.n.to_string(), exact, r.two_dp.clone()]
                })
                .collect();
            Ok(text_table(&["n", &format!("{label} exact"), label], &body))
        }
        Format::Csv => render::csv(&rows),
        Format::Json => render::json(&rows),
    }
}

#[derive(Serialize)]
struct VerifyJson<'a> {
    passed: bool,
    checks: Vec<CheckRecord<'a>>,
}

#[derive(Serialize)]
struct CheckRecord<'a> {
    status: String,
    name: &'a str,
    n: Option<u32>,
    detail: &'a str,
}

impl<'a> From<&'a Check> for CheckRecord<'a> {
    fn from(c: &'a Check) -> Self {
        CheckRecord {
            status: c.status.to_string(),
            name: &c.name,
            n: c.n,
            detail: &c.detail,
        }
    }
}

pub fn render_verification(
    report: &VerificationReport,
    format: Format,
) -> Result<String, CliError> {
    let records: Vec<CheckRecord> = report.checks.iter().map(CheckRecord::from).collect();
    match format {
        Format::Json => render::json(&VerifyJson {
            passed: report.passed(),
            checks: records,
        }),
        Format::Csv => render::csv(&records),
        Format::Table => {
            let mut out = String::new();
            for c in &report.checks {
                let n = c.n.map_or_else(|| "all".to_string(), |n| format!("n={n}"));
                out.push_str(&format!(
                    "{:<4}  {:<34}  {:<5}  {}\n",
                    c.status, c.name, n, c.detail
                ));
            }
            let count = |s: Status| report.with_status(s).count();
            out.push_str(&format!(
                "{} checks: {} pass, {} warn, {} info, {} fail\n",
                report.checks.len(),
                count(Status::Pass),
                count(Status::Warn),
                count(Status::Info),
                count(Status::Fail)
            ));
            Ok(out)
        }
    }
}

/// Runs verification against graphs from `builder`; exit code 1 when any
/// mandatory check fails.
pub fn run_verify_with(
    n_max: u32,
    edge_cap: usize,
    builder: &(dyn Fn(u32) -> octachain::Result<ChainGraph> + Sync),
    format: Format,
) -> Result<Outcome, CliError> {
    let report = verify_theorems_with(n_max, edge_cap, builder);
    let text = render_verification(&report, format)?;
    Ok(Outcome {
        text,
        code: if report.passed() { 0 } else { 1 },
    })
}

pub fn cmd_resistance(n: i64, u: &str, v: &str, format: Format) -> Result<String, CliError> {
    let g = ChainGraph::build(n)?;
    let a = g.vertex(u)?;
    let b = g.vertex(v)?;
    if a == b {
        return Err(CliError::Usage(format!("u and v are the same vertex {a}")));
    }
    let r = effective_resistance(&g, a, b)?;
    let record = ResistanceRecord {
        n,
        u: a.to_string(),
        v: b.to_string(),
        num: r.numer().to_string(),
        den: r.denom().to_string(),
        decimal: decimal(&r, RATIO_PLACES),
    };
    match format {
        Format::Table => Ok(format!(
            "r({}, {}) on O_{n} = {} ~ {}\n",
            record.u,
            record.v,
            exact_text(&r),
            record.decimal
        )),
        Format::Csv => render::csv(&[record]),
        Format::Json => render::json(&record),
    }
}

#[derive(Serialize)]
struct ResistanceRecord {
    n: i64,
    u: String,
    v: String,
    num: String,
    den: String,
    decimal: String,
}

/// One export line. Exact integers are strings so JSON consumers with
/// 53-bit numbers keep every digit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExportRow {
    pub n: u32,
    pub kf_num: String,
    pub kf_den: String,
    pub kf_2dp: String,
    pub kfstar_num: String,
    pub kfstar_den: String,
    pub kfstar_2dp: String,
    pub tau: String,
    pub wiener: String,
    pub gutman: String,
}

pub fn export_rows(n_max: u32, edge_cap: usize) -> Result<Vec<ExportRow>, CliError> {
    per_n(n_max, |n| {
        let report = full_report_with_cap(&ChainGraph::build(n as i64)?, edge_cap)?;
        let (kf_num, kf_den) = exact_parts(&report.kf);
        let (kfstar_num, kfstar_den) = exact_parts(&report.kf_star);
        Ok(ExportRow {
            n,
            kf_num,
            kf_den,
            kf_2dp: two_decimals(&report.kf),
            kfstar_num,
            kfstar_den,
            kfstar_2dp: two_decimals(&report.kf_star),
            tau: report.tau.to_string(),
            wiener: report.wiener.to_string(),
            gutman: report.gutman.to_string(),
        })
    })
}

pub fn cmd_export(n_max: u32, edge_cap: usize, format: Format) -> Result<String, CliError> {
    let rows = export_rows(n_max, edge_cap)?;
    match format {
        Format::Csv => render::csv(&rows),
        Format::Json => render::json(&rows),
        Format::Table => {
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        r.n.to_string(),
                        r.kf_2dp.clone(),
                        r.kfstar_2dp.clone(),
                        r.tau.clone(),
                        r.wiener.clone(),
                        r.gutman.clone(),
                    ]
                })
                .collect();
            Ok(text_table(&["n", "Kf", "Kf*", "tau", "W", "Gut"], &body))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatioRecord {
    pub n: u32,
    /// `computed` from the graph, or `extrapolated` from closed forms.
    pub source: String,
    pub kf_over_wiener: String,
    pub kf_over_wiener_decimal: String,
    pub kfstar_over_gutman: String,
    pub kfstar_over_gutman_decimal: String,
}

fn ratio_record(n: u32, source: &str, a: &Rational, b: &Rational) -> RatioRecord {
    RatioRecord {
        n,
        source: source.to_string(),
        kf_over_wiener: exact_text(a),
        kf_over_wiener_decimal: decimal(a, RATIO_PLACES),
        kfstar_over_gutman: exact_text(b),
        kfstar_over_gutman_decimal: decimal(b, RATIO_PLACES),
    }
}

pub fn ratio_records(n_max: u32) -> Result<Vec<RatioRecord>, CliError> {
    let series = ratio_series(n_max.min(DIRECT_RATIO_LIMIT))?;
    let mut out: Vec<RatioRecord> = series
        .rows
        .iter()
        .map(|r| ratio_record(r.n, "computed", &r.kf_over_wiener, &r.kfstar_over_gutman))
        .collect();
    if n_max > DIRECT_RATIO_LIMIT {
        let w = fitted_wiener_cubic()?;
        let g = fitted_gutman_cubic()?;
        for n in DIRECT_RATIO_LIMIT + 1..=n_max {
            let (a, b) = extrapolated_ratios(n as i64, &w, &g)?;
            out.push(ratio_record(n, "extrapolated", &a, &b));
        }
    }
    Ok(out)
}

pub fn cmd_ratio(n_max: u32, format: Format) -> Result<String, CliError> {
    let rows = ratio_records(n_max)?;
    match format {
        Format::Csv => render::csv(&rows),
        Format::Json => render::json(&rows),
        Format::Table => {
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        r.n.to_string(),
                        r.source.clone(),
                        r.kf_over_wiener_decimal.clone(),
                        r.kfstar_over_gutman_decimal.clone(),
                    ]
                })
                .collect();
            Ok(text_table(&["n", "source", "Kf/W", "Kf*/Gut"], &body))
        }
    }
}
