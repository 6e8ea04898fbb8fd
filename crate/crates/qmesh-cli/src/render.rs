use std::fmt::Write;

use clap::ValueEnum;
use serde::Serialize;

use qmesh::gf::Routed;
use qmesh::{Class, QuadrantSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Table,
    Csv,
    Json,
}

#[derive(Serialize)]
struct Term {
    xexp: usize,
    /// Decimal string; values outgrow 64-bit integers.
    coeff: String,
}

#[derive(Serialize)]
struct Row {
    n: usize,
    terms: Vec<Term>,
}

#[derive(Serialize)]
struct Document {
    avoid: String,
    spec: String,
    engine: String,
    via: String,
    series: Vec<Row>,
}

fn rows(routed: &Routed) -> Vec<Row> {
    routed
        .series
        .coeffs()
        .iter()
        .enumerate()
        .map(|(n, poly)| Row { n, terms: poly.terms().map(|(xexp, c)| Term { xexp, coeff: c.to_string() }).collect() })
        .collect()
}

/// Renders a computed series. Every format lists the same nonzero coefficients.
pub fn render_series(avoid: Class, spec: &QuadrantSpec, routed: &Routed, format: OutputFormat) -> String {
    match format {
        OutputFormat::Table => {
            let mut out = String::new();
            for line in routed.series.render_lines() {
                out.push_str(&line);
                out.push('\n');
            }
            out
        }
        OutputFormat::Csv => {
            let mut out = String::from("n,exponent,coefficient\n");
            for row in rows(routed) {
                for term in row.terms {
                    writeln!(out, "{},{},{}", row.n, term.xexp, term.coeff).expect("writing to a String");
                }
            }
            out
        }
        OutputFormat::Json => {
            let doc = Document {
                avoid: avoid.to_string(),
                spec: spec.to_string(),
                engine: routed.engine.to_string(),
                via: routed.via.clone(),
                series: rows(routed),
            };
            let mut out = serde_json::to_string_pretty(&doc).expect("plain data serializes");
            out.push('\n');
            out
        }
    }
}
