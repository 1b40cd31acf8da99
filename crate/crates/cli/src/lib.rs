//! Command-line front end: wall reports, figures, quiver verdicts and
//! asymptotic-stability checks.
//!
//! Exit codes: 0 ok, 1 internal error, 2 usage error, 3 a checked condition failed.

pub mod decimal;
pub mod plot;
pub mod report;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Parser, Subcommand, ValueEnum};
use walllab_core::{region_verdict, theta, vert_theorem_report, EnumerateOptions, Rational, Region, SlicePoint, TheoremInput};

pub use plot::{render_svg, PlotOptions};
pub use report::WallReport;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PREDICATE: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("internal error: {0}")]
    Internal(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Internal(_) | CliError::Io(_) => EXIT_INTERNAL,
        }
    }
}

impl From<walllab_core::Error> for CliError {
    fn from(e: walllab_core::Error) -> Self {
        use walllab_core::Error as E;
        match e {
            E::Internal(m) => CliError::Internal(m),
            other => CliError::Usage(other.to_string()),
        }
    }
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.parse::<Rational>().map_err(|e| e.to_string())
}

#[derive(Debug, Parser)]
#[command(name = "walllab", version, about = "Exact λ-wall computations on P³ at β = 0")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Enumerate candidate walls for v = (−R, 0, D, 0).
    Walls {
        #[arg(long, allow_hyphen_values = true)]
        rank: i64,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        degree: Rational,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Constant K of the support-property form.
        #[arg(long, value_parser = parse_rational, default_value = "1")]
        k: Rational,
        /// Keep candidates with wall constant below 1/6.
        #[arg(long)]
        no_cutoff: bool,
        /// Add a Unix timestamp to JSON output.
        #[arg(long)]
        timestamp: bool,
    },
    /// Draw the wall curves as SVG.
    Plot {
        #[arg(long, allow_hyphen_values = true)]
        rank: i64,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        degree: Rational,
        #[arg(long)]
        svg: PathBuf,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        alpha_max: Option<Rational>,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true, default_value = "3")]
        s_max: Rational,
    },
    /// Locate a point of the slice relative to the quiver region.
    Quiver {
        #[arg(long, allow_hyphen_values = true)]
        rank: i64,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        degree: Rational,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        alpha2: Rational,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        s: Rational,
    },
    /// Check asymptotic-stability conditions described by a JSON file.
    Asym {
        #[arg(long)]
        spec: PathBuf,
    },
}

/// Parses `args` and runs the command, returning the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(&cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

pub fn execute(command: &Command, out: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Walls { rank, degree, format, out: path, k, no_cutoff, timestamp } => {
            let opts = EnumerateOptions { k: k.clone(), innermost_cutoff: !no_cutoff, threads: None };
            let mut buf = Vec::new();
            cmd_walls(*rank, degree, *format, &opts, *timestamp, &mut buf)?;
            emit(path.as_ref(), &buf, out)?;
            Ok(EXIT_OK)
        }
        Command::Plot { rank, degree, svg, alpha_max, s_max } => {
            let opts = PlotOptions { alpha_max: alpha_max.clone(), s_max: s_max.clone() };
            let text = cmd_plot(*rank, degree, &opts)?;
            fs::write(svg, text)?;
            Ok(EXIT_OK)
        }
        Command::Quiver { rank, degree, alpha2, s } => {
            cmd_quiver(*rank, degree, alpha2, s, out)?;
            Ok(EXIT_OK)
        }
        Command::Asym { spec } => {
            let text = fs::read_to_string(spec)?;
            cmd_asym(&text, out)
        }
    }
}

fn emit(path: Option<&PathBuf>, bytes: &[u8], out: &mut dyn Write) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, bytes)?,
        None => out.write_all(bytes)?,
    }
    Ok(())
}

pub fn cmd_walls(
    rank: i64,
    degree: &Rational,
    format: Format,
    opts: &EnumerateOptions,
    timestamp: bool,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let (mut report, families) = WallReport::build(rank, degree, opts)?;
    if timestamp {
        let secs = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map_err(|e| CliError::Internal(e.to_string()))?
            .as_secs();
        report.timestamp = Some(secs);
    }
    match format {
        Format::Json => report.write_json(out),
        Format::Csv => report.write_csv(out),
        Format::Table => report.write_table(&families, out),
    }
}

pub fn cmd_plot(rank: i64, degree: &Rational, opts: &PlotOptions) -> Result<String, CliError> {
    let (report, families) = WallReport::build(rank, degree, &EnumerateOptions::default())?;
    render_svg(&report.v, &families, !report.degenerate.is_empty(), opts)
}

pub fn cmd_quiver(rank: i64, degree: &Rational, alpha2: &Rational, s: &Rational, out: &mut dyn Write) -> Result<(), CliError> {
    walllab_core::walls::validate_input(rank, degree)?;
    let p = SlicePoint::new(alpha2.clone(), s.clone())?;
    let verdict = region_verdict(rank, degree, &p);
    let short = match verdict.region {
        Region::Inside => "inside: moduli empty",
        Region::OnMonadWall => "on monad wall",
        Region::Outside => "outside",
    };
    let th = theta(&p);
    writeln!(out, "{short}")?;
    writeln!(out, "(6s+1)α² = {}", verdict.monad_parameter)?;
    writeln!(out, "θ = ({}, {}, {}, {})", th.0[0], th.0[1], th.0[2], th.0[3])?;
    match &verdict.dim_vector {
        Some(n) => {
            writeln!(out, "n(E) = ({}, {}, {}, {})", n.0[0], n.0[1], n.0[2], n.0[3])?;
            writeln!(out, "θ·n(E) = {}", th.pair(n))?;
        }
        None => writeln!(out, "n(E): not an integral dimension vector (D not an integer)")?,
    }
    writeln!(out, "θ·(0,0,0,1) = {}", verdict.forced_sub_pairing)?;
    writeln!(out, "{}", verdict.message)?;
    Ok(())
}

/// Prints the JSON report; returns 3 when a condition fails.
pub fn cmd_asym(spec_json: &str, out: &mut dyn Write) -> Result<i32, CliError> {
    let input: TheoremInput =
        serde_json::from_str(spec_json).map_err(|e| CliError::Usage(format!("malformed spec: {e}")))?;
    let report = vert_theorem_report(&input)?;
    serde_json::to_writer_pretty(&mut *out, &report).map_err(|e| CliError::Internal(e.to_string()))?;
    writeln!(out)?;
    Ok(if report.any_failed() { EXIT_PREDICATE } else { EXIT_OK })
}
