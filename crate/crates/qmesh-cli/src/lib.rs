//! Command implementations behind the `qmesh` binary.
//!
//! Each `cmd_*` returns the text to print; the binary only parses flags,
//! prints, and picks the exit code.

mod bijection;
mod render;
mod tables;

use std::path::PathBuf;

use qmesh::gf::{self, Engine};
use qmesh::oracle;
use qmesh::{Class, QuadrantSpec};

pub use bijection::{cmd_bijection, BijectionMap, Show};
pub use render::{render_series, OutputFormat};
pub use tables::{cmd_paper_tables, table_file_name, ERRATA_FILE, ERRATA_MAX_N, LISTINGS};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Qmesh(#[from] qmesh::Error),
    #[error("{0}")]
    Usage(String),
    #[error("--max-n {requested} exceeds the cap {cap}; raise MMP_MAX_N to allow it")]
    Cap { requested: usize, cap: usize },
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}

pub const MAX_N_VAR: &str = "MMP_MAX_N";
pub const DEFAULT_MAX_N_CAP: usize = 16;

/// The largest `--max-n` accepted, from `MMP_MAX_N` or the default.
pub fn max_n_cap() -> Result<usize, CliError> {
    match std::env::var(MAX_N_VAR) {
        Ok(raw) => raw
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{MAX_N_VAR}={raw:?} is not a non-negative integer"))),
        Err(_) => Ok(DEFAULT_MAX_N_CAP),
    }
}

pub fn check_max_n(requested: usize) -> Result<(), CliError> {
    let cap = max_n_cap()?;
    if requested > cap {
        return Err(CliError::Cap { requested, cap });
    }
    Ok(())
}

/// Text to print and whether every check in it passed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub ok: bool,
}

#[derive(Clone, Debug)]
pub struct SeriesRequest {
    pub avoid: Class,
    pub spec: QuadrantSpec,
    pub max_n: usize,
    pub engine: Engine,
    pub format: OutputFormat,
}

pub fn cmd_series(req: &SeriesRequest) -> Result<String, CliError> {
    check_max_n(req.max_n)?;
    let routed = gf::compute(req.avoid, &req.spec, req.max_n, req.engine)?;
    Ok(render_series(req.avoid, &req.spec, &routed, req.format))
}

/// Runs one subject, or every subject for `"all"`.
pub fn cmd_verify(subject: &str, max_n: usize) -> Result<Outcome, CliError> {
    check_max_n(max_n)?;
    let reports = if subject == "all" { oracle::verify_all(max_n) } else { vec![oracle::verify(subject, max_n)?] };
    let text = reports.iter().map(ToString::to_string).collect::<String>();
    Ok(Outcome { text, ok: reports.iter().all(oracle::VerificationReport::passed) })
}

pub fn cmd_conjecture(k_max: u32, max_n: usize) -> Result<Outcome, CliError> {
    check_max_n(max_n)?;
    if k_max == 0 {
        return Err(CliError::Usage("--k-max must be at least 1".into()));
    }
    let report = oracle::check_conjecture1(k_max, max_n);
    Ok(Outcome { text: report.to_string(), ok: report.passed() })
}
