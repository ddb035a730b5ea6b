//! Command-line front end for `schubert-core`.

pub mod format;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use schubert_core::{cohomology_closed, cohomology_oracle, verify_range, CoefficientRing, Error};

pub use format::{CellRecord, CohomologyReport, ComplexExport, EdgeRecord};

pub const EXIT_MISMATCH: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_RESOURCE: u8 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: io::Error,
    },
    #[error("closed formula and oracle disagree in degrees {degrees:?}")]
    Disagreement { degrees: Vec<usize> },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(Error::InvalidArgument(_) | Error::InvalidCover { .. }) => EXIT_USAGE,
            CliError::Core(Error::UnsupportedSize { .. } | Error::Resource(_)) => EXIT_RESOURCE,
            CliError::Core(_) | CliError::Disagreement { .. } => EXIT_MISMATCH,
            CliError::Io { .. } => EXIT_RESOURCE,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "schubert",
    version,
    about = "Cohomology of real Grassmannians from Schubert cells"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print H^*(Gr_k(n); R).
    Cohomology {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Z, Q or Z/<m>
        #[arg(long, default_value = "Z")]
        coeff: CoefficientRing,
        #[arg(long, value_enum, default_value_t = Method::Closed)]
        method: Method,
        #[arg(long, value_enum, default_value_t = ReportFormat::Table)]
        format: ReportFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Export the cochain complex.
    Complex {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = ComplexFormat::Json)]
        format: ComplexFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Shorthand for `complex --format dot`.
    Dot {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run every consistency check for all 1 <= k <= n <= max-n.
    Verify {
        #[arg(long, default_value_t = 9)]
        max_n: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Closed,
    Oracle,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Table,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ComplexFormat {
    Json,
    Csv,
    Dot,
}

/// Runs one command. Results go to `--out` when given, otherwise to `stdout`.
pub fn run(cli: Cli, stdout: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Cohomology {
            n,
            k,
            coeff,
            method,
            format,
            out,
        } => {
            let module = match method {
                Method::Closed => cohomology_closed(n, k, coeff)?,
                Method::Oracle => cohomology_oracle(n, k, coeff)?,
                Method::Both => {
                    let closed = cohomology_closed(n, k, coeff)?;
                    let oracle = cohomology_oracle(n, k, coeff)?;
                    let degrees = closed.differing_degrees(&oracle);
                    if !degrees.is_empty() {
                        for &m in &degrees {
                            let _ = writeln!(
                                stdout,
                                "H^{m}: closed {:?}, oracle {:?}",
                                closed.group(m),
                                oracle.group(m)
                            );
                        }
                        return Err(CliError::Disagreement { degrees });
                    }
                    closed
                }
            };
            let report = CohomologyReport::new(n, k, &module);
            let bytes = match format {
                ReportFormat::Table => report.to_table().into_bytes(),
                ReportFormat::Json => (report.to_json() + "\n").into_bytes(),
                ReportFormat::Csv => {
                    let mut buf = Vec::new();
                    report.write_csv(&mut buf).map_err(csv_error)?;
                    buf
                }
            };
            emit(&bytes, out, stdout)
        }
        Command::Complex { n, k, format, out } => export(n, k, format, out, stdout),
        Command::Dot { n, k, out } => export(n, k, ComplexFormat::Dot, out, stdout),
        Command::Verify { max_n } => {
            let reports = verify_range(max_n, |r| {
                let _ = writeln!(
                    stdout,
                    "Gr_{}({}): {} cells, {} covers, {} summands, {} rings ok",
                    r.k, r.n, r.cells, r.covers_checked, r.summands, r.rings_checked
                );
            })?;
            let _ = writeln!(
                stdout,
                "all {} Grassmannians with n <= {max_n} verified",
                reports.len()
            );
            Ok(())
        }
    }
}

fn export(
    n: usize,
    k: usize,
    format: ComplexFormat,
    out: Option<PathBuf>,
    stdout: &mut dyn Write,
) -> Result<(), CliError> {
    let export = ComplexExport::build(n, k)?;
    let bytes = match format {
        ComplexFormat::Json => (export.to_json() + "\n").into_bytes(),
        ComplexFormat::Dot => export.to_dot().into_bytes(),
        ComplexFormat::Csv => {
            let mut buf = Vec::new();
            export.write_csv(&mut buf).map_err(csv_error)?;
            buf
        }
    };
    emit(&bytes, out, stdout)
}

fn emit(bytes: &[u8], out: Option<PathBuf>, stdout: &mut dyn Write) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(&path, bytes).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        }),
        None => stdout.write_all(bytes).map_err(|source| CliError::Io {
            path: "<stdout>".into(),
            source,
        }),
    }
}

// csv only writes into in-memory buffers here
fn csv_error(e: csv::Error) -> CliError {
    CliError::Io {
        path: "<csv>".into(),
        source: io::Error::other(e),
    }
}
