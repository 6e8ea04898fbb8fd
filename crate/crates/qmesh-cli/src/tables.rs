use std::fs;
use std::path::{Path, PathBuf};

use qmesh::gf::{self, Engine};
use qmesh::oracle;
use qmesh::{Class, QuadrantSpec};

use crate::{check_max_n, CliError};

/// `(avoid, spec)` of every series listing regenerated by [`cmd_paper_tables`].
pub const LISTINGS: [(&str, &str); 58] = [
    ("132", "0,1,e,0"),
    ("132", "0,2,e,0"),
    ("132", "0,3,e,0"),
    ("132", "0,4,e,0"),
    ("132", "0,5,e,0"),
    ("132", "1,1,e,0"),
    ("132", "1,2,e,0"),
    ("132", "1,3,e,0"),
    ("132", "2,1,e,0"),
    ("132", "2,2,e,0"),
    ("132", "2,3,e,0"),
    ("132", "3,1,e,0"),
    ("132", "3,2,e,0"),
    ("132", "3,3,e,0"),
    ("132", "0,1,e,1"),
    ("132", "0,1,e,2"),
    ("132", "0,1,e,3"),
    ("132", "0,2,e,2"),
    ("132", "0,2,e,3"),
    ("132", "0,3,e,3"),
    ("132", "1,1,e,1"),
    ("132", "1,1,e,2"),
    ("132", "1,1,e,3"),
    ("132", "1,2,e,2"),
    ("132", "1,2,e,3"),
    ("132", "1,3,e,3"),
    ("132", "2,1,e,1"),
    ("132", "2,1,e,2"),
    ("132", "2,1,e,3"),
    ("132", "2,2,e,2"),
    ("132", "2,2,e,3"),
    ("132", "2,3,e,3"),
    ("132", "3,1,e,1"),
    ("132", "3,1,e,2"),
    ("132", "3,1,e,3"),
    ("132", "3,2,e,2"),
    ("132", "3,2,e,3"),
    ("132", "3,3,e,3"),
    ("132", "e,0,e,0"),
    ("132", "e,1,e,0"),
    ("132", "e,2,e,0"),
    ("132", "e,3,e,0"),
    ("132", "e,4,e,0"),
    ("132", "e,5,e,0"),
    ("132", "e,1,e,1"),
    ("132", "e,1,e,2"),
    ("132", "e,1,e,3"),
    ("132", "e,2,e,2"),
    ("132", "e,2,e,3"),
    ("132", "e,3,e,3"),
    ("123", "0,1,0,0"),
    ("123", "0,2,0,0"),
    ("123", "0,3,0,0"),
    ("123", "0,4,0,0"),
    ("123", "0,5,0,0"),
    ("123", "0,1,0,1"),
    ("123", "0,2,0,1"),
    ("123", "0,2,0,2"),
];

pub const ERRATA_FILE: &str = "errata.txt";

/// Errata compare against enumeration, so they stop at a size enumeration handles quickly.
pub const ERRATA_MAX_N: usize = 9;

pub fn table_file_name(avoid: Class, spec: &QuadrantSpec) -> String {
    format!("Q_{avoid}_{}.txt", spec.tag())
}

fn write(path: PathBuf, contents: &str) -> Result<PathBuf, CliError> {
    fs::write(&path, contents).map_err(|source| CliError::Io { path: path.clone(), source })?;
    Ok(path)
}

/// Writes one table per listing plus the errata file into `dir`; returns the paths written.
pub fn cmd_paper_tables(dir: &Path, max_n: usize) -> Result<Vec<PathBuf>, CliError> {
    check_max_n(max_n)?;
    fs::create_dir_all(dir).map_err(|source| CliError::Io { path: dir.to_path_buf(), source })?;
    let mut written = Vec::new();
    for (avoid, spec) in LISTINGS {
        let avoid: Class = avoid.parse()?;
        let spec: QuadrantSpec = spec.parse()?;
        let routed = gf::compute(avoid, &spec, max_n, Engine::Auto)?;
        let mut text = format!("# Q^({spec}) over S_n({avoid}) via {}\n", routed.via);
        for line in routed.series.render_lines() {
            text.push_str(&line);
            text.push('\n');
        }
        written.push(write(dir.join(table_file_name(avoid, &spec)), &text)?);
    }
    let mut text = String::from("# theorem-id; parameters; first-divergent (n, exponent); paper-value; oracle-value\n");
    for erratum in oracle::errata(ERRATA_MAX_N) {
        text.push_str(&erratum.to_string());
        text.push('\n');
    }
    written.push(write(dir.join(ERRATA_FILE), &text)?);
    Ok(written)
}
