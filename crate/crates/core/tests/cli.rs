use std::path::Path;
use std::process::Command;

use liecoh::cli::{AlgebraFile, Report, Value};

fn liecoh(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_liecoh"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().unwrap(),
    )
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

const SL2: &str = r#"{
  "version": 1,
  "name": "sl2",
  "dim": 3,
  "basis": ["H", "E", "F"],
  "brackets": {
    "[0,1]": {"1": "2"},
    "[0,2]": {"2": "-2"},
    "[1,2]": {"0": "1"}
  },
  "h_subalgebra": [["0", "1", "-1"]]
}"#;

const ABELIAN2: &str = r#"{"version": 1, "name": "abelian2", "dim": 2, "basis": ["X", "Y"]}"#;

const HEIS3: &str = r#"{"version": 1, "name": "heis3", "dim": 3, "basis": ["X", "Y", "Z"],
  "brackets": {"[0,1]": {"2": "1"}}}"#;

#[test]
fn check_golden() {
    let (out, _, code) = liecoh(&["check", "builtin:sl2"]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "command: check builtin:sl2
inputs digest: c799c14505bb340698f9beb2c52e8dbea4231ddda7ef7e1e665c068a30eb271d
algebra: sl2
dim: 3
jacobi: ok
semisimple: yes
reductive: yes
killing det: -128
killing rank: 3
center dim: 0
derived dim: 3
"
    );
}

#[test]
fn check_files() {
    let dir = tempfile::tempdir().unwrap();
    let sl2 = write(dir.path(), "sl2.json", SL2);
    let ab = write(dir.path(), "abelian2.json", ABELIAN2);
    let heis = write(dir.path(), "heis3.json", HEIS3);

    let (out, _, code) = liecoh(&["check", &sl2]);
    assert_eq!(code, 0);
    assert!(out.contains("semisimple: yes\n") && out.contains("killing det: -128\n"));
    assert!(out.contains("h dim: 1\n"));

    let (out, _, _) = liecoh(&["check", &ab]);
    assert!(out.contains("semisimple: no\n") && out.contains("reductive: yes\n"));

    let (out, _, _) = liecoh(&["check", &heis]);
    assert!(out.contains("semisimple: no\n") && out.contains("reductive: no\n"));
}

#[test]
fn cohomology_from_files() {
    let dir = tempfile::tempdir().unwrap();
    let sl2 = write(dir.path(), "sl2.json", SL2);
    let betti = |args: &[&str]| {
        let mut full = vec!["cohomology", sl2.as_str(), "--json"];
        full.extend_from_slice(args);
        let (out, _, code) = liecoh(&full);
        assert_eq!(code, 0, "{out}");
        Report::parse_machine(&out).unwrap().get("betti").cloned().unwrap()
    };
    assert_eq!(betti(&["--coeffs", "trivial", "--degree", "all"]), Value::Counts(vec![1, 0, 0, 1]));
    assert_eq!(betti(&["--coeffs", "adjoint", "--degree", "all"]), Value::Counts(vec![0, 0, 0, 0]));
    assert_eq!(betti(&["--relative"]), Value::Counts(vec![1, 0, 1]));
    assert_eq!(betti(&["--degree", "3"]), Value::Counts(vec![1]));

    let (out, _, _) = liecoh(&["cohomology", &sl2, "--relative", "--representatives"]);
    assert!(out.contains("caveat: "));
    assert!(out.contains("rep H^2 #1: "));
}

#[test]
fn module_files() {
    let dir = tempfile::tempdir().unwrap();
    let sl2 = write(dir.path(), "sl2.json", SL2);
    // The defining 2-dim representation of sl2.
    let std2 = write(
        dir.path(),
        "std.json",
        r#"{"version": 1, "label": "standard", "vdim": 2, "actions": [
            [["1","0"],["0","-1"]], [["0","1"],["0","0"]], [["0","0"],["1","0"]]]}"#,
    );
    let coeffs = format!("file:{std2}");
    let (out, _, code) = liecoh(&["cohomology", &sl2, "--coeffs", &coeffs]);
    assert_eq!(code, 0);
    assert!(out.contains("betti: (0, 0, 0, 0)\n"), "{out}");

    // Same matrices with a sign error on F violate the module axiom.
    let bad = write(
        dir.path(),
        "bad.json",
        r#"{"version": 1, "vdim": 2, "actions": [
            [["1","0"],["0","-1"]], [["0","1"],["0","0"]], [["0","0"],["-1","0"]]]}"#,
    );
    let coeffs = format!("file:{bad}");
    let (_, err, code) = liecoh(&["cohomology", &sl2, "--coeffs", &coeffs]);
    assert_eq!(code, 1, "{err}");
}

#[test]
fn volume_golden() {
    let (out, _, code) = liecoh(&["volume", "seifert", "--chi", "-5/2", "--e", "3/2"]);
    assert_eq!(code, 0);
    assert!(out.ends_with("volume: 50/3 · π²\n"), "{out}");
    let (out, _, _) = liecoh(&["volume", "sl2tilde", "--n", "1", "--e", "3/2"]);
    assert!(out.ends_with("volume: 6 · π²\n"));
    let (out, _, _) = liecoh(&["volume", "seifert", "--chi", "0", "--e", "1"]);
    assert!(out.ends_with("volume: 0\n"));
    let (_, err, code) = liecoh(&["volume", "seifert", "--chi", "1", "--e", "0"]);
    assert_eq!(code, 1);
    assert!(err.contains("nonzero"));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let broken = write(dir.path(), "broken.json", "{\"version\": 1, \"name\": ");
    let (_, err, code) = liecoh(&["check", &broken]);
    assert_eq!(code, 2);
    assert!(err.contains("broken.json:1:"), "{err}");

    let jacobi = write(
        dir.path(),
        "jacobi.json",
        r#"{"version":1,"name":"bad","dim":3,"basis":["a","b","c"],
            "brackets":{"[0,1]":{"2":"1"},"[1,2]":{"0":"1"},"[0,2]":{"0":"1"}}}"#,
    );
    let (_, err, code) = liecoh(&["check", &jacobi]);
    assert_eq!(code, 1);
    assert!(err.contains("Jacobi"), "{err}");

    let (_, _, code) = liecoh(&["check", "/nonexistent/file.json"]);
    assert_eq!(code, 2);
    let (_, _, code) = liecoh(&["cohomology", "builtin:sl2", "--coeffs", "spinor"]);
    assert_eq!(code, 2);
    let (_, _, code) = liecoh(&["cohomology", "builtin:sl2", "--degree", "4"]);
    assert_eq!(code, 1);
    let (_, err, code) = liecoh(&["cohomology", "builtin:sl2", "--relative"]);
    assert_eq!(code, 2);
    assert!(err.contains("h_subalgebra"));
}

#[test]
fn machine_output_is_deterministic_and_round_trips() {
    for args in [
        vec!["check", "builtin:fivedim_ext:1/2", "--json"],
        vec!["cohomology", "builtin:sl2R_ext", "--coeffs", "coadjoint", "--relative", "--representatives", "--json"],
        vec!["volume", "sl2tilde", "--n", "-2", "--e", "-1/3", "--json"],
    ] {
        let (a, _, code) = liecoh(&args);
        let (b, _, _) = liecoh(&args);
        assert_eq!(code, 0);
        assert_eq!(a, b);
        let report = Report::parse_machine(&a).unwrap();
        assert_eq!(report.to_machine(), a);
    }
}

#[test]
fn verify_paper_json_and_mutation() {
    let (a, _, code) = liecoh(&["verify-paper", "--json"]);
    assert_eq!(code, 0);
    let (b, _, _) = liecoh(&["verify-paper", "--json"]);
    assert_eq!(a, b);
    let report = Report::parse_machine(&a).unwrap();
    assert_eq!(report.to_machine(), a);
    assert_eq!(report.get("all pass"), Some(&Value::Flag(true)));
    let criteria: std::collections::BTreeSet<u32> = report
        .entries
        .iter()
        .filter_map(|e| match e.value {
            Value::Check { criterion, .. } => Some(criterion),
            _ => None,
        })
        .collect();
    assert_eq!(criteria, (1..=10).collect());

    let (out, _, code) = liecoh(&["verify-paper", "--mutate", "coadjoint-sign"]);
    assert_eq!(code, 3);
    assert!(out.lines().any(|l| l.starts_with("FAIL") && l.contains("identity:j-")));
}

#[test]
fn export_then_load() {
    let dir = tempfile::tempdir().unwrap();
    let (json, _, code) = liecoh(&["export", "fivedim_ext:3"]);
    assert_eq!(code, 0);
    let file = AlgebraFile::parse(&json, "export").unwrap();
    assert_eq!(file.dim, 7);
    assert_eq!(file.h_subalgebra.as_ref().map(Vec::len), Some(2));
    let path = write(dir.path(), "f.json", &json);
    let (out, _, _) = liecoh(&["cohomology", &path, "--coeffs", "adjoint", "--relative", "--degree", "1"]);
    assert!(out.contains("betti: (0)\n"), "{out}");
    let (from_file, _, _) = liecoh(&["check", &path, "--json"]);
    let (builtin, _, _) = liecoh(&["check", "builtin:fivedim_ext:3", "--json"]);
    let strip = |s: &str| s.lines().skip(1).collect::<Vec<_>>().join("\n");
    assert_eq!(strip(&from_file), strip(&builtin));
}
