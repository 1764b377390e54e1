//! End-to-end checks of the command-line interface: output formats,
//! golden files, exit codes, and file/stdin plumbing.

use serde_json::Value;
use std::io::Write as _;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_posetal"))
}

fn run_ok(args: &[&str]) -> String {
    let out = bin().args(args).output().unwrap();
    assert!(
        out.status.success(),
        "command {:?} failed: {}",
        args,
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn run_raw(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn golden(name: &str) -> String {
    let path = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(path).unwrap()
}

/// Parse JSON and zero every wall_ms so timings never break comparisons.
fn normalized(text: &str) -> Value {
    let mut value: Value = serde_json::from_str(text).unwrap();
    if let Some(reports) = value.get_mut("reports").and_then(Value::as_array_mut) {
        for report in reports {
            report["wall_ms"] = Value::from(0);
        }
    }
    value
}

#[test]
fn verify_single_suite_matches_golden() {
    let out = run_ok(&["verify", "family-counts", "--json"]);
    assert_eq!(
        normalized(&out),
        normalized(&golden("verify_family_counts.json"))
    );
}

#[test]
fn verify_all_passes_with_versioned_schema() {
    let out = run_ok(&["verify", "all", "--json"]);
    let value = normalized(&out);
    assert_eq!(value["schema_version"], 1);
    assert_eq!(value["field"], "gf32003");
    let reports = value["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 16);
    for report in reports {
        assert_eq!(report["passed"], true, "suite {} failed", report["theorem"]);
    }
}

#[test]
fn verify_rejects_unknown_ids() {
    let out = run_raw(&["verify", "no-such-theorem"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(
        String::from_utf8_lossy(&out.stderr).contains("unknown theorem id"),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
}

#[test]
fn betti_json_matches_golden() {
    let out = run_ok(&["betti", "--family", "grid", "--n", "3", "--ld", "--json"]);
    assert_eq!(
        normalized(&out),
        normalized(&golden("betti_grid3_chain.json"))
    );
}

#[test]
fn betti_csv_is_exact() {
    let out = run_ok(&["betti", "--family", "diamond", "--n", "1", "--ld", "--csv"]);
    assert_eq!(out, "i,j,value\n0,0,1\n1,2,2\n2,4,1\n");
}

#[test]
fn homology_json_matches_golden() {
    let out = run_ok(&[
        "complex", "homology", "--family", "diamond", "--n", "2", "--ld", "--json",
    ]);
    assert_eq!(
        normalized(&out),
        normalized(&golden("homology_diamond2_chain.json"))
    );
}

#[test]
fn field_flag_reaches_the_engine() {
    let human = run_ok(&[
        "complex", "homology", "--family", "chain", "--n", "4", "--t", "2", "--field", "qq",
    ]);
    assert!(human.contains("over qq"), "output: {human}");
}

#[test]
fn poset_json_round_trips_through_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("poset.json");
    let built = run_ok(&[
        "poset", "build", "--family", "cycle", "--m", "3", "--r", "2",
    ]);
    std::fs::write(&path, &built).unwrap();

    let ideal_json = run_ok(&[
        "ideal",
        "path",
        "--input",
        path.to_str().unwrap(),
        "--t",
        "2",
        "--json",
    ]);
    let ideal_path = dir.path().join("ideal.json");
    std::fs::write(&ideal_path, &ideal_json).unwrap();

    // Feed the serialized ideal back in for a Betti table.
    let table = run_ok(&["betti", "--input", ideal_path.to_str().unwrap(), "--json"]);
    let value: Value = serde_json::from_str(&table).unwrap();
    assert_eq!(value["n_vars"], 3);
    assert_eq!(
        value["entries"],
        serde_json::json!([[0, 0, 1], [1, 2, 3], [2, 3, 2]])
    );
}

#[test]
fn stdin_dash_reads_a_poset() {
    let built = run_ok(&["poset", "build", "--family", "chain", "--n", "4"]);
    let mut child = bin()
        .args(["ideal", "path", "--input", "-", "--t", "2"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(built.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.trim(), "(x1*x2, x2*x3, x3*x4)");
}

#[test]
fn check_verbs_report_verdicts() {
    let cm = run_ok(&["check", "cm", "--family", "chain", "--n", "4", "--t", "2"]);
    assert!(
        cm.contains("cohen-macaulay over gf32003: true"),
        "output: {cm}"
    );

    let not_cm = run_ok(&["check", "cm", "--family", "chain", "--n", "5", "--t", "2"]);
    assert!(not_cm.contains("false"), "output: {not_cm}");

    let forest = run_ok(&[
        "check", "forest", "--family", "cycle", "--m", "3", "--r", "2", "--t", "3", "--json",
    ]);
    let value: Value = serde_json::from_str(&forest).unwrap();
    assert_eq!(value["check"], "forest");
    assert_eq!(value["verdict"], true);

    let seqcm = run_ok(&[
        "check", "seqcm", "--family", "chain", "--n", "5", "--t", "3",
    ]);
    assert!(seqcm.contains("true"), "output: {seqcm}");
}

#[test]
fn decompose_lists_minimal_primes() {
    let out = run_ok(&[
        "ideal",
        "decompose",
        "--family",
        "diamond",
        "--n",
        "1",
        "--ld",
        "--json",
    ]);
    let value: Value = serde_json::from_str(&out).unwrap();
    let components = value.as_array().unwrap();
    // Four arcs, two routes: the four minimal transversals of {12, 34}.
    assert_eq!(components.len(), 4);
    for component in components {
        assert_eq!(component.as_array().unwrap().len(), 2);
    }
}

#[test]
fn missing_source_is_a_usage_error() {
    let out = run_raw(&["betti"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(
        String::from_utf8_lossy(&out.stderr).contains("--input"),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
}
