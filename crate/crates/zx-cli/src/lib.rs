//! Library side of the `starzx` binary: the benchmark harness and the
//! writers behind `run` and `discover`.

pub mod bench;
mod output;

use std::path::Path;

pub use bench::{
    aggregate, append_csv, bench_diagram, bench_run, read_csv, Aggregate, BenchConfig, BenchRow, Cell, CellReport,
    Closure, Relevance,
};
pub use output::{
    bitstring, fmt_f64, histogram, peaks_json, statevector_csv, terms_report, Emit, PeakEntry, PeaksFile,
};

/// Failures of a subcommand, each with its own exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Missing or malformed input file or configuration.
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Failure(String),
}

impl CliError {
    pub fn io(path: &Path, e: std::io::Error) -> Self {
        CliError::Failure(format!("{}: {e}", path.display()))
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 3,
            CliError::Failure(_) => 1,
        }
    }
}

/// Reads a file that the user named, mapping failures to input errors.
pub fn read_input(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}
