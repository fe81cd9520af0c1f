//! `qsharm`: tables, point evaluation, grid export and verification runs.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use qsharm::tables::{render_table, sample_grid, OutputFormat, TableKind};
use qsharm::verify::{run_suite, Suite, DEFAULT_TWO_L_MAX};
use qsharm::{eval_harmonic_at, Angle, HalfInt, PhiRange, QuantumPair, QuasiHarmonic};

#[derive(Parser)]
#[command(
    name = "qsharm",
    version,
    about = "Exact associated Legendre functions and quasi-spherical harmonics"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Legendre-function or normalization table.
    Table(TableArgs),
    /// Evaluate Y_l^m(θ, φ) at one point; prints "re,im".
    Eval(EvalArgs),
    /// Write a θ×φ grid of Y_l^m as CSV.
    Sample(SampleArgs),
    /// Run a verification suite; exit status 1 if any case fails.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Legendre,
    Norms,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
    Latex,
}

impl From<Format> for OutputFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Text => OutputFormat::Text,
            Format::Csv => OutputFormat::Csv,
            Format::Json => OutputFormat::Json,
            Format::Latex => OutputFormat::Latex,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Range {
    #[value(name = "2pi")]
    TwoPi,
    #[value(name = "4pi")]
    FourPi,
}

impl From<Range> for PhiRange {
    fn from(r: Range) -> Self {
        match r {
            Range::TwoPi => PhiRange::TwoPi,
            Range::FourPi => PhiRange::FourPi,
        }
    }
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct TableArgs {
    #[arg(value_enum)]
    kind: Kind,
    /// Largest 2|m| (11 means |m| up to 11/2).
    #[arg(long, default_value_t = 11)]
    two_m_max: u32,
    #[arg(long, default_value_t = 5)]
    i_max: u32,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Quantum numbers, either doubled (`--two-l 3`) or exact (`--l 3/2`).
#[derive(Args)]
#[command(group(ArgGroup::new("lval").required(true).args(["two_l", "l"])))]
#[command(group(ArgGroup::new("mval").required(true).args(["two_m", "m"])))]
struct PairArgs {
    #[arg(long, allow_hyphen_values = true)]
    two_l: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    l: Option<HalfInt>,
    #[arg(long, allow_hyphen_values = true)]
    two_m: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    m: Option<HalfInt>,
}

impl PairArgs {
    fn pair(&self) -> Result<QuantumPair> {
        let l = self
            .l
            .unwrap_or_else(|| HalfInt::from_twice(self.two_l.unwrap_or_default()));
        let m = self
            .m
            .unwrap_or_else(|| HalfInt::from_twice(self.two_m.unwrap_or_default()));
        Ok(QuantumPair::new(l, m)?)
    }
}

#[derive(Args)]
struct EvalArgs {
    #[command(flatten)]
    pair: PairArgs,
    /// Radians, or a multiple of π such as `pi/2`.
    #[arg(long, allow_hyphen_values = true)]
    theta: Angle,
    #[arg(long, allow_hyphen_values = true)]
    phi: Angle,
    /// Divide by √(φ factor · N²_θ).
    #[arg(long)]
    normalized: bool,
    #[arg(long, value_enum, default_value = "2pi")]
    phi_range: Range,
}

#[derive(Args)]
struct SampleArgs {
    #[command(flatten)]
    pair: PairArgs,
    #[arg(long)]
    n_theta: usize,
    #[arg(long)]
    n_phi: usize,
    #[arg(long)]
    normalized: bool,
    #[arg(long, value_enum, default_value = "2pi")]
    phi_range: Range,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy)]
enum SuiteChoice {
    One(Suite),
    All,
}

fn parse_suite(s: &str) -> Result<SuiteChoice, String> {
    if s == "all" {
        return Ok(SuiteChoice::All);
    }
    s.parse().map(SuiteChoice::One).map_err(|_| {
        let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
        format!("unknown suite; expected one of: {}, all", names.join(", "))
    })
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct VerifyArgs {
    #[arg(value_parser = parse_suite)]
    suite: SuiteChoice,
    #[arg(long, default_value_t = DEFAULT_TWO_L_MAX as u32)]
    two_l_max: u32,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

/// Shortest round-trip form, without a negative zero.
fn fmt_float(v: f64) -> String {
    format!("{:?}", if v == 0.0 { 0.0 } else { v })
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Table(a) => {
            let kind = match a.kind {
                Kind::Legendre => TableKind::Legendre,
                Kind::Norms => TableKind::Norms,
            };
            emit(
                a.out.as_deref(),
                &render_table(kind, a.two_m_max, a.i_max, a.format.into()),
            )?;
        }
        Command::Eval(a) => {
            let h = QuasiHarmonic::new(a.pair.pair()?).with_phi_range(a.phi_range.into());
            let y = eval_harmonic_at::<f64>(&h, &a.theta, &a.phi, a.normalized)?;
            println!("{},{}", fmt_float(y.re), fmt_float(y.im));
        }
        Command::Sample(a) => {
            let grid = sample_grid(
                a.pair.pair()?,
                a.n_theta,
                a.n_phi,
                a.normalized,
                a.phi_range.into(),
            )?;
            emit(a.out.as_deref(), &grid)?;
        }
        Command::Verify(a) => {
            let suites: Vec<Suite> = match a.suite {
                SuiteChoice::One(s) => vec![s],
                SuiteChoice::All => Suite::ALL.to_vec(),
            };
            let reports: Vec<_> = suites
                .into_iter()
                .map(|s| run_suite(s, a.two_l_max as i64))
                .collect();
            let text = match a.format {
                Format::Json if reports.len() == 1 => reports[0].to_json() + "\n",
                Format::Json => serde_json_array(&reports),
                _ => reports.iter().map(|r| r.to_text()).collect(),
            };
            emit(a.out.as_deref(), &text)?;
            if reports.iter().any(|r| !r.passed()) {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn serde_json_array(reports: &[qsharm::VerificationReport]) -> String {
    let items: Vec<String> = reports.iter().map(|r| r.to_json()).collect();
    format!("[\n{}\n]\n", items.join(",\n"))
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
