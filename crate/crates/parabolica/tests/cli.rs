//! End-to-end checks of the `parabolica` binary: subcommands, exit codes,
//! deterministic JSON output and the budget environment fallback.

use std::process::Command;

fn run(args: &[&str]) -> (i32, String) {
    run_env(args, &[])
}

fn run_env(args: &[&str], env: &[(&str, &str)]) -> (i32, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_parabolica"));
    cmd.args(args);
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
    )
}

#[test]
fn describe_prints_the_m_sets() {
    let (code, out) = run(&["describe", "gl:4,1,4,2,1"]);
    assert_eq!(code, 0);
    assert!(out.contains("M1 = [5, 8, 12]"), "{out}");

    let (code, out) = run(&["describe", "gl:2,2"]);
    assert_eq!(code, 0);
    assert!(out.contains("M1 = [4]"), "{out}");
}

#[test]
fn usage_errors_exit_with_2() {
    let (code, _) = run(&["describe", "zz:1,1"]);
    assert_eq!(code, 2);
    let (code, _) = run(&["factor", "gl:1,1", "7"]);
    assert_eq!(code, 2);
    let (code, _) = run(&["kw", "gl:1,1", "--xi", "9"]);
    assert_eq!(code, 2);
}

#[test]
fn budget_exhaustion_exits_with_3() {
    // a tiny budget cannot expand F_8 over gl_12
    let (code, out) = run(&["factor", "gl:4,1,4,2,1", "12", "--budget", "10000"]);
    assert_eq!(code, 3, "{out}");
    // the same limit arrives through the environment
    let (code, _) = run_env(
        &["factor", "gl:4,1,4,2,1", "12"],
        &[("PARABOLICA_BUDGET", "10000")],
    );
    assert_eq!(code, 3);
}

#[test]
fn factor_borel_chain() {
    let (code, out) = run(&["factor", "gl:1,1,1", "3", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["m"], 3);
    assert_eq!(v["verified"], true);
    let factors = v["factors"].as_array().unwrap();
    assert_eq!(factors.len(), 3);
    assert_eq!(factors[0]["poly"], "e[2,1]");
    assert_eq!(factors[2]["poly"], "e[1,3]");
    // certificate polynomials round-trip through the grammar
    for f in factors {
        let text = f["poly"].as_str().unwrap();
        let p: parabolica::Poly = text.parse().unwrap();
        assert_eq!(p.to_string(), text);
    }
}

#[test]
fn kw_emits_a_line_per_generator() {
    let (code, out) = run(&["kw", "gl:2,2", "--xi", "1"]);
    assert_eq!(code, 0);
    for m in 1..=4 {
        assert!(out.contains(&format!("X{m}")), "{out}");
    }
}

#[test]
fn json_output_is_deterministic() {
    let args = ["index", "gl:2,1", "--format", "json", "--seed", "5"];
    let (c1, first) = run(&args);
    let (c2, second) = run(&args);
    assert_eq!(c1, 0);
    assert_eq!(c2, 0);
    assert_eq!(first, second);
    // and parses back into the report type
    let v: parabolica::cli::IndexReport = serde_json::from_str(&first).unwrap();
    assert!(v.ovdb_balanced);
}

#[test]
fn counterexample_reports_the_relation() {
    let (code, out) = run(&["counterexample", "--format", "json"]);
    assert_eq!(code, 0);
    assert!(out.contains("X_{5,1}*X_{5,2} + 1/4*X_2^2 - X_{4,1}^2*X_{4,2}"));
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(v["identities"]
        .as_array()
        .unwrap()
        .iter()
        .all(|i| i["equal"] == true));
}

#[test]
fn separate_isolates_a_factor() {
    let (code, out) = run(&["separate", "gl:1,1,1", "3", "2", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["m"], 3);
    assert_eq!(v["t"], 2);
    assert!(v["isolated_value"].as_str().unwrap().contains("X1"));
}

#[test]
fn verify_suite_small_scale() {
    // n <= 3 keeps this fast; exercises the rayon path too
    let (code, out) = run(&["verify-suite", "--max-n", "3", "--jobs", "2"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("passed, 0 failed"), "{out}");
}
