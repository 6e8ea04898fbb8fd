use std::fmt::Write;

use clap::ValueEnum;

use qmesh::dyck::{self, DyckPath};
use qmesh::Permutation;

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BijectionMap {
    /// 132-avoiders to Dyck paths
    Phi,
    /// 123-avoiders to Dyck paths
    Psi,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Show {
    Path,
    Perm,
    Stats,
    Lift,
}

impl BijectionMap {
    fn forward(self, sigma: &Permutation) -> Result<DyckPath, qmesh::Error> {
        match self {
            BijectionMap::Phi => dyck::phi(sigma),
            BijectionMap::Psi => dyck::psi(sigma),
        }
    }

    fn inverse(self, path: &DyckPath) -> Permutation {
        match self {
            BijectionMap::Phi => dyck::phi_inv(path),
            BijectionMap::Psi => dyck::psi_inv(path),
        }
    }
}

/// Letters mean a path; the path parser then reports the first bad step.
fn looks_like_path(input: &str) -> bool {
    input.chars().any(|c| c.is_ascii_alphabetic())
}

fn render_stats(path: &DyckPath) -> String {
    let stats = path.stats();
    let joined = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
    let peaks: Vec<String> = stats.peaks.iter().map(|p| format!("({},{})", p.column, p.diagonal)).collect();
    let mut out = String::new();
    writeln!(out, "path: {path}").unwrap();
    writeln!(out, "semilength: {}", path.semilength()).unwrap();
    writeln!(out, "returns: {}", joined(&stats.returns)).unwrap();
    writeln!(out, "ret: {}", stats.ret).unwrap();
    writeln!(out, "hills: {}", stats.hills).unwrap();
    writeln!(out, "peaks (column,diagonal): {}", peaks.join(" ")).unwrap();
    out
}

/// Accepts a permutation word or a `D`/`R` path and shows the requested side.
/// `lift` maps through `D·P·R` and back to a permutation of length `n + 1`.
pub fn cmd_bijection(map: BijectionMap, input: &str, show: Show) -> Result<String, CliError> {
    let (sigma, path) = if looks_like_path(input) {
        let path: DyckPath = input.parse()?;
        (map.inverse(&path), path)
    } else {
        let sigma: Permutation = input.parse()?;
        let path = map.forward(&sigma)?;
        (sigma, path)
    };
    Ok(match show {
        Show::Path => format!("{path}\n"),
        Show::Perm => format!("{sigma}\n"),
        Show::Stats => render_stats(&path),
        Show::Lift => {
            let lifted = map.inverse(&path.lift());
            let parts: Vec<String> = lifted.word().iter().map(u32::to_string).collect();
            format!("{}\n", parts.join(","))
        }
    })
}
