use std::path::Path;
use std::process::Command;

use serde_json::Value;

use graded_division::cli::run;

fn gda(args: &[&str]) -> (Value, i32) {
    let argv = std::iter::once("gda").chain(args.iter().copied());
    let (out, code) = run(argv);
    let v = serde_json::from_str(&out).unwrap_or_else(|e| panic!("non-JSON output ({e}): {out}"));
    (v, code)
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn write(dir: &Path, name: &str, v: &Value) -> String {
    let p = dir.join(name);
    std::fs::write(&p, serde_json::to_string_pretty(v).unwrap()).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn ff_grade_three_one_four_fails_condition_two() {
    let (v, code) = gda(&["ff-grade", "--p", "3", "--ell", "1", "--k", "4"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], false);
    assert_eq!(v["reason"], "condition (ii)");
    assert_eq!(v["command"], "ff-grade");
    assert_eq!(v["input"]["k"], 4);
}

#[test]
fn ff_grade_lists_every_mu() {
    let (v, _) = gda(&["ff-grade", "--p", "7", "--ell", "1", "--k", "3", "--list-mu"]);
    assert_eq!(v["verdict"], true);
    // non-cubes of GF(7)
    assert_eq!(v["mu"].as_array().unwrap().len(), 4);
    assert_eq!(v["oracles"]["witness_binomial_irreducible"], true);
}

#[test]
fn census_count_for_z2() {
    let (v, code) = gda(&["classify-real", "--group", "2", "--count-only"]);
    assert_eq!(code, 0);
    let want: Value = serde_json::from_str(include_str!("golden/census_2.json")).unwrap();
    assert_eq!(v["census"], want);
    assert_eq!(v["verdict"], true);
    assert!(v.get("representatives").is_none());
}

#[test]
fn census_golden_files() {
    for (group, all, file) in [
        ("4", false, include_str!("golden/census_4.json")),
        ("2,2", false, include_str!("golden/census_2x2.json")),
        ("2,4", false, include_str!("golden/census_2x4.json")),
        ("2", true, include_str!("golden/census_2_all_subgroups.json")),
        ("4", true, include_str!("golden/census_4_all_subgroups.json")),
        ("2,2", true, include_str!("golden/census_2x2_all_subgroups.json")),
    ] {
        let mut args = vec!["--oracle", "fast", "classify-real", "--group", group, "--count-only"];
        if all {
            args.push("--all-subgroups");
        }
        let (v, _) = gda(&args);
        assert_eq!(v["census"], serde_json::from_str::<Value>(file).unwrap(), "{group} {all}");
    }
}

#[test]
fn item_filter_restricts_census() {
    let (v, _) = gda(&["classify-real", "--group", "2,2", "--item", "3", "--count-only"]);
    assert_eq!(v["census"]["counts"]["3"], 12);
    assert_eq!(v["census"]["total"], 12);
}

#[test]
fn is_field_over_q() {
    let (v, code) = gda(&["is-field", "--field", "Q", "--group", "2,2", "--mu", "2,3"]);
    assert_eq!((code, v["verdict"].clone()), (0, Value::Bool(true)));
    let (v, _) = gda(&["is-field", "--field", "Q", "--group", "2,2", "--mu", "2,8"]);
    assert_eq!(v["verdict"], false);
    assert_eq!(v["witness"]["kind"], "zero_divisor");
    assert_eq!(v["oracles"]["witness_multiplies_to_zero"], true);
}

#[test]
fn is_field_over_finite_field_cross_checks_zero_divisors() {
    let (v, _) = gda(&["is-field", "--field", "GF(5)", "--group", "4", "--mu", "2"]);
    assert_eq!(v["verdict"], true);
    assert_eq!(v["oracles"]["zero_divisor_search_agrees"], true);
    let (v, _) = gda(&["is-field", "--field", "GF(5)", "--group", "2", "--mu", "4"]);
    assert_eq!(v["verdict"], false);
    assert_eq!(v["oracles"]["zero_divisor_search_agrees"], true);
}

#[test]
fn undecided_is_a_computed_verdict() {
    let (v, code) = gda(&["is-field", "--field", "Q", "--group", "2,8", "--mu", "2,3"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], "undecided");
}

#[test]
fn is_field_reads_spec_files() {
    let dir = tempfile::tempdir().unwrap();
    let (first, _) = gda(&["is-field", "--field", "R", "--group", "2", "--mu", "-1"]);
    assert_eq!(first["verdict"], true);
    let spec = write(dir.path(), "spec.json", &first["input"]);
    let (again, _) = gda(&["is-field", "--in", &spec]);
    assert_eq!(again, first);
}

#[test]
fn frobenius_output_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("alg.json");
    let (v, code) = gda(&["frobenius-grade", "--p", "7", "--ell", "1", "--q", "3", "--out", path(&out)]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], true);
    let (check, _) = gda(&["verify", "--in", path(&out)]);
    assert_eq!(check["verdict"], true);
    // the report itself embeds the descriptor
    let report = write(dir.path(), "report.json", &v);
    let (check, _) = gda(&["verify", "--in", &report]);
    assert_eq!(check["algebras"][0]["path"], "/witness/algebra");
}

#[test]
fn classify_output_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("census.json");
    gda(&["classify-real", "--group", "2,2", "--out", path(&out)]);
    let (check, code) = gda(&["verify", "--in", path(&out)]);
    assert_eq!(code, 0);
    assert_eq!(check["verdict"], true);
    assert_eq!(check["algebras"].as_array().unwrap().len(), 30);
}

#[test]
fn construct_invariants_iso_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let (kummer, _) = gda(&["kummer-grade", "--field", "GF(7)", "--n", "3", "--lambda", "3"]);
    assert_eq!(kummer["verdict"], true);
    let alg = write(dir.path(), "kummer.json", &kummer["witness"]["algebra"]);
    let (inv, _) = gda(&["invariants", "--in", &alg]);
    assert_eq!(inv["commutative"], true);
    let params = write(dir.path(), "params.json", &inv["invariants"]);
    let rebuilt = dir.path().join("rebuilt.json");
    let (c, _) = gda(&["construct", "--in", &params, "--out", path(&rebuilt)]);
    assert_eq!(c["verdict"], true);
    let (iso, _) = gda(&["iso", "--a", &alg, "--b", path(&rebuilt)]);
    assert_eq!(iso["verdict"], true);
    let (check, _) = gda(&["verify", "--in", path(&rebuilt)]);
    assert_eq!(check["verdict"], true);
    let (dec, _) = gda(&["decompose", "--in", &params]);
    assert_eq!(dec["verdict"], true);
    assert_eq!(dec["parts"][0]["prime"], 3);
}

#[test]
fn reports_are_deterministic() {
    let args = ["--jobs", "3", "classify-real", "--group", "2,2"];
    assert_eq!(run(std::iter::once("gda").chain(args)), run(std::iter::once("gda").chain(args)));
    let (v, _) = gda(&["--timing", "ff-grade", "--p", "5", "--ell", "1", "--k", "4"]);
    assert!(v["timing_ms"].is_u64());
    let (v, _) = gda(&["ff-grade", "--p", "5", "--ell", "1", "--k", "4"]);
    assert!(v.get("timing_ms").is_none());
}

#[test]
fn error_codes_are_distinct() {
    let dir = tempfile::tempdir().unwrap();
    let (out, code) = run(["gda", "no-such-command"]);
    assert_eq!(code, 2, "{out}");
    let missing = dir.path().join("missing.json");
    let (v, code) = gda(&["verify", "--in", path(&missing)]);
    assert_eq!((code, v["error"]["kind"].as_str()), (5, Some("io")));
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{").unwrap();
    let (v, code) = gda(&["verify", "--in", path(&bad)]);
    assert_eq!((code, v["error"]["kind"].as_str()), (3, Some("json")));
    let (v, code) = gda(&["ff-grade", "--p", "4", "--ell", "1", "--k", "2"]);
    assert_eq!((code, v["error"]["kind"].as_str()), (4, Some("precondition")));
    let (_, code) = gda(&["is-field", "--field", "Q", "--group", "2"]);
    assert_eq!(code, 2);
    let (_, code) = gda(&["is-field", "--field", "F(9)", "--group", "2", "--mu", "1"]);
    assert_eq!(code, 3);
}

#[test]
fn binary_prints_json_and_exits_with_code() {
    let exe = env!("CARGO_BIN_EXE_gda");
    let ok = Command::new(exe).args(["ff-grade", "--p", "3", "--ell", "1", "--k", "4"]).output().unwrap();
    assert!(ok.status.success());
    let v: Value = serde_json::from_slice(&ok.stdout).unwrap();
    assert_eq!(v["reason"], "condition (ii)");
    let err = Command::new(exe).args(["ff-grade", "--p", "4", "--ell", "1", "--k", "2"]).output().unwrap();
    assert_eq!(err.status.code(), Some(4));
    assert!(err.stdout.is_empty());
    let v: Value = serde_json::from_slice(&err.stderr).unwrap();
    assert_eq!(v["error"]["exit_code"], 4);
}
