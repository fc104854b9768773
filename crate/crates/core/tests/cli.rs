//! End-to-end checks of the command-line interface and its exit-code
//! contract: 0 success, 1 verification failure, 2 usage error.

use std::process::{Command, Output};

fn fusionq(args: &[&str], cache_dir: &std::path::Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fusionq"))
        .args(args)
        .env("FUSIONQ_CACHE_DIR", cache_dir)
        .output()
        .expect("binary runs")
}

#[test]
fn compute_emits_canonical_json() {
    let dir = tempfile::tempdir().unwrap();
    let out = fusionq(
        &["compute", "--shape", "1,1", "--tableau", "hook", "--variant", "hook", "--kind", "F"],
        dir.path(),
    );
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.ends_with('\n'));
    let parsed: fusionq::jsonio::FusionResultJson =
        fusionq::jsonio::from_json_str(&text).unwrap();
    assert_eq!(parsed.shape, vec![1, 1]);
    // T_1 − q: identity coefficient −q, longest element coefficient 1
    assert_eq!(parsed.element.terms.len(), 2);
    assert_eq!(parsed.element.terms[0].coeff.num, "-q");
    assert_eq!(parsed.element.terms[1].coeff.num, "1");
    // byte-identical reserialization
    let again = fusionq::jsonio::to_canonical_json(&parsed).unwrap();
    assert_eq!(again, text);
}

#[test]
fn compute_rejects_bad_partition() {
    let dir = tempfile::tempdir().unwrap();
    let out = fusionq(&["compute", "--shape", "0"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    let out = fusionq(&["compute", "--shape", "2,3"], dir.path());
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn compute_numeric_records_q0() {
    let dir = tempfile::tempdir().unwrap();
    let out = fusionq(
        &["compute", "--shape", "2,1", "--mode", "numeric"],
        dir.path(),
    );
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let parsed: fusionq::jsonio::FusionResultJson =
        fusionq::jsonio::from_json_str(&text).unwrap();
    assert_eq!(parsed.mode, "numeric");
    assert!(parsed.q0.is_some());
}

#[test]
fn compute_uses_the_cache() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["compute", "--shape", "2,2", "--kind", "G"];
    let first = fusionq(&args, dir.path());
    assert!(first.status.success());
    let entries: Vec<_> = std::fs::read_dir(dir.path()).unwrap().collect();
    assert_eq!(entries.len(), 1);
    let second = fusionq(&args, dir.path());
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn compute_tableau_index_selector() {
    let dir = tempfile::tempdir().unwrap();
    let out = fusionq(
        &["compute", "--shape", "2,1", "--tableau", "1", "--kind", "G"],
        dir.path(),
    );
    assert!(out.status.success());
    let out = fusionq(&["compute", "--shape", "2,1", "--tableau", "7"], dir.path());
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_all_smallest_cases() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("report.json");
    let out = fusionq(
        &[
            "verify",
            "--suite",
            "all",
            "--max-n",
            "2",
            "--report",
            report.to_str().unwrap(),
        ],
        dir.path(),
    );
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = std::fs::read_to_string(&report).unwrap();
    let reports: Vec<fusionq::verify::CheckReport> =
        fusionq::jsonio::from_json_str(&text).unwrap();
    assert!(reports.iter().all(|r| r.pass));
    // every suite contributed at least one check
    for check in [
        "quadratic-relation",
        "yang-baxter",
        "regularity",
        "variant-agreement",
        "t0-coefficient",
        "phi-invariance",
        "eigen-divisibility",
        "triple-regularity",
        "g-equals-f-hook",
        "dimension-sum",
        "q1-specialization",
    ] {
        assert!(
            reports.iter().any(|r| r.check == check),
            "missing {check} in report"
        );
    }
}

#[test]
fn verify_named_suites() {
    let dir = tempfile::tempdir().unwrap();
    let out = fusionq(
        &["verify", "--suite", "t0coeff", "--max-n", "3"],
        dir.path(),
    );
    assert!(out.status.success());
    let out = fusionq(
        &["verify", "--suite", "variant-agreement", "--max-n", "3"],
        dir.path(),
    );
    assert!(out.status.success());
    let out = fusionq(&["verify", "--suite", "no-such-suite"], dir.path());
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bench_small_shapes() {
    let dir = tempfile::tempdir().unwrap();
    let out = fusionq(&["bench", "--shape", "2,2", "--repetitions", "1"], dir.path());
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("results equal: true"), "{text}");
    // n = 1 is the trivial product
    let out = fusionq(&["bench", "--shape", "1", "--repetitions", "1"], dir.path());
    assert!(out.status.success());
}

#[test]
fn list_tableaux_matches_enumeration() {
    let dir = tempfile::tempdir().unwrap();
    let out = fusionq(&["list-tableaux", "--shape", "2,2"], dir.path());
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 2);
    assert!(text.contains("[[1,2],[3,4]]") || text.contains("\"rows\":[[1,2],[3,4]]"));
}
