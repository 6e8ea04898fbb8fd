use std::collections::BTreeSet;
use std::fs;
use std::process::{Command, Output};

use proptest::prelude::*;
use serde_json::Value;

fn qmesh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qmesh")).args(args).env_remove("MMP_MAX_N").output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = qmesh(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn line(text: &str, n: usize) -> String {
    let prefix = format!("t^{n}: ");
    text.lines().find_map(|l| l.strip_prefix(&prefix)).unwrap_or_default().to_string()
}

#[test]
fn series_lines() {
    let text = stdout(&["series", "--avoid", "132", "--spec", "1,1,e,1", "--max-n", "6"]);
    assert!(text.starts_with("t^0: 1\n"));
    let text = stdout(&["series", "--avoid", "132", "--spec", "0,1,e,0", "--max-n", "4"]);
    assert_eq!(line(&text, 4), "1+6x+6x^2+x^3");
    let text = stdout(&["series", "--avoid", "132", "--spec", "e,0,e,0", "--max-n", "4"]);
    assert_eq!(line(&text, 4), "6+4x+3x^2+x^4");
    let text = stdout(&["series", "--avoid", "132", "--spec", "0,0,e,0", "--max-n", "0"]);
    assert_eq!(text, "t^0: 1\n");
}

#[test]
fn brute_and_auto_agree() {
    for (avoid, spec) in [("132", "2,1,e,0"), ("123", "0,1,0,1"), ("123", "0,1,2,0")] {
        let auto = stdout(&["series", "--avoid", avoid, "--spec", spec, "--max-n", "8"]);
        let brute = stdout(&["series", "--avoid", avoid, "--spec", spec, "--max-n", "8", "--engine", "brute"]);
        assert_eq!(auto, brute, "{avoid} {spec}");
    }
}

fn table_terms(text: &str) -> BTreeSet<(usize, usize, String)> {
    let mut terms = BTreeSet::new();
    let csv = text.lines().filter_map(|l| l.strip_prefix("t^")).filter_map(|l| l.split_once(": "));
    for (n, poly) in csv {
        for term in poly.replace('-', "+-").split('+').filter(|t| !t.is_empty()) {
            let (c, e) = match term.split_once('x') {
                None => (term.to_string(), 0),
                Some((c, rest)) => {
                    let c = if c.is_empty() { "1".into() } else { c.to_string() };
                    (c, rest.strip_prefix('^').map_or(1, |e| e.parse().unwrap()))
                }
            };
            terms.insert((n.parse().unwrap(), e, c));
        }
    }
    terms
}

#[test]
fn formats_carry_the_same_coefficients() {
    let base = ["series", "--avoid", "132", "--spec", "1,2,e,1", "--max-n", "9"];
    let table = stdout(&base);
    let csv = stdout(&[&base[..], &["--format", "csv"]].concat());
    let json = stdout(&[&base[..], &["--format", "json"]].concat());

    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("n,exponent,coefficient"));
    let from_csv: BTreeSet<(usize, usize, String)> = lines
        .map(|l| {
            let f: Vec<&str> = l.split(',').collect();
            (f[0].parse().unwrap(), f[1].parse().unwrap(), f[2].to_string())
        })
        .collect();

    let doc: Value = serde_json::from_str(&json).unwrap();
    assert_eq!(doc["avoid"], "132");
    assert_eq!(doc["spec"], "1,2,e,1");
    let mut from_json = BTreeSet::new();
    for row in doc["series"].as_array().unwrap() {
        let n = row["n"].as_u64().unwrap() as usize;
        for term in row["terms"].as_array().unwrap() {
            let e = term["xexp"].as_u64().unwrap() as usize;
            from_json.insert((n, e, term["coeff"].as_str().unwrap().to_string()));
        }
    }
    assert_eq!(table_terms(&table), from_csv);
    assert_eq!(from_csv, from_json);
    let reparsed: Value = serde_json::from_str(&serde_json::to_string(&doc).unwrap()).unwrap();
    assert_eq!(reparsed, doc);
}

#[test]
fn bijection_views() {
    assert_eq!(stdout(&["bijection", "--map", "phi", "--input", "867943251"]), "DDRDDRRRDDRDRDRRDR\n");
    assert_eq!(stdout(&["bijection", "--map", "psi", "--input", "869743251"]), "DDRDDRRRDDRDRDRRDR\n");
    assert_eq!(
        stdout(&["bijection", "--map", "psi", "--input", "DDRDDRRRDDRDRDRRDR", "--show", "perm"]),
        "869743251\n"
    );
    assert_eq!(
        stdout(&["bijection", "--map", "psi", "--input", "869743251", "--show", "lift"]),
        "8,6,10,9,4,3,2,7,1,5\n"
    );
    let stats = stdout(&["bijection", "--map", "phi", "--input", "867943251", "--show", "stats"]);
    assert!(stats.contains("returns: 4,8,9\n"), "{stats}");
    assert!(stats.contains("ret: 3\n"));
}

#[test]
fn exit_codes() {
    assert_eq!(qmesh(&["verify", "--subject", "thm-18", "--max-n", "8"]).status.code(), Some(0));
    let failing = qmesh(&["verify", "--subject", "thm-3", "--max-n", "5"]);
    assert_eq!(failing.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&failing.stdout).contains("FAIL"));
    assert_eq!(qmesh(&["verify", "--subject", "thm-99"]).status.code(), Some(2));
    assert_eq!(qmesh(&["bijection", "--map", "phi", "--input", "132"]).status.code(), Some(2));
    let bad_path = qmesh(&["bijection", "--map", "phi", "--input", "DDRX"]);
    assert_eq!(bad_path.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad_path.stderr).starts_with("error: "));
    assert_eq!(qmesh(&["conjecture", "--k-max", "2", "--max-n", "8"]).status.code(), Some(0));
    assert_ne!(qmesh(&["series", "--avoid", "231", "--spec", "0,0,0,0"]).status.code(), Some(0));
}

#[test]
fn max_n_cap() {
    let run = |cap: Option<&str>, n: &str| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_qmesh"));
        cmd.args(["series", "--avoid", "132", "--spec", "0,1,e,0", "--max-n", n]).env_remove("MMP_MAX_N");
        if let Some(cap) = cap {
            cmd.env("MMP_MAX_N", cap);
        }
        cmd.output().unwrap().status.code()
    };
    assert_eq!(run(None, "16"), Some(0));
    assert_eq!(run(None, "17"), Some(2));
    assert_eq!(run(Some("5"), "6"), Some(2));
    assert_eq!(run(Some("5"), "5"), Some(0));
    assert_eq!(run(Some("20"), "18"), Some(0));
    assert_eq!(run(Some("many"), "3"), Some(2));
}

#[test]
fn table_files_are_byte_stable() {
    let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    for dir in [&a, &b] {
        stdout(&["paper-tables", "--out-dir", dir.path().to_str().unwrap(), "--max-n", "8"]);
    }
    let mut names: Vec<_> = fs::read_dir(a.path()).unwrap().map(|e| e.unwrap().file_name()).collect();
    names.sort();
    assert!(names.len() > 50);
    assert!(names.iter().any(|n| n == "errata.txt"));
    for name in names {
        assert_eq!(fs::read(a.path().join(&name)).unwrap(), fs::read(b.path().join(&name)).unwrap(), "{name:?}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn phi_round_trips_through_the_binary(seed in any::<u64>()) {
        // hills and height-two pyramids chosen by the seed bits
        let n = 1 + (seed % 9) as usize;
        let path: String = (0..n).map(|i| if seed >> (i + 4) & 1 == 1 { "DR" } else { "DDRR" }).collect();
        let perm = stdout(&["bijection", "--map", "phi", "--input", &path, "--show", "perm"]);
        let back = stdout(&["bijection", "--map", "phi", "--input", perm.trim()]);
        prop_assert_eq!(back.trim(), path);
    }
}
