use std::path::PathBuf;
use std::process::{Command, Output};

use skeinlab::diagram::{builtin, to_json, Builtin};
use skeinlab::rings::{LaurentInt, Monomial, SkeinPoly};

fn skeinlab(args: &[&str], workers: Option<usize>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_skeinlab"));
    cmd.args(args);
    if let Some(w) = workers {
        cmd.env("SKEINLAB_WORKERS", w.to_string());
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

fn write_builtin(name: &str) -> PathBuf {
    let Ok(Builtin::Diagram(d)) = builtin(name) else { panic!("{name} is a diagram") };
    let path = std::env::temp_dir().join(format!("skeinlab-cli-{}-{name}.json", std::process::id()));
    std::fs::write(&path, to_json(&d)).expect("temp file");
    path
}

#[test]
fn passing_suite_exits_zero() {
    let o = skeinlab(&["verify", "framing", "--k", "2"], None);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.starts_with("suite framing [k=2]: 3 checks, 0 failed"), "{out}");
    assert!(out.lines().skip(1).all(|l| l.trim_start().starts_with("PASS")));
}

#[test]
fn unknown_suite_is_an_error() {
    let o = skeinlab(&["verify", "nonsense"], None);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("unknown suite"));
}

#[test]
fn state_cap_above_hard_limit_is_an_error() {
    let o = skeinlab(&["verify", "framing", "--max-states", &((1u64 << 30) + 1).to_string()], None);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn oversized_root_is_refused_not_passed() {
    let o = skeinlab(&["verify", "prop61", "--xi", "40/1"], None);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("REFUSED"), "{out}");
    assert!(out.contains("2^100"), "{out}");
}

#[test]
fn malformed_root_is_rejected() {
    let o = skeinlab(&["verify", "skew", "--xi", "0/1"], None);
    assert!(!o.status.success());
}

#[test]
fn json_report_is_well_formed() {
    let o = skeinlab(&["verify", "tl", "lemma62", "--k", "3", "--json"], None);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).expect("json");
    let reports = v.as_array().expect("array of reports");
    assert_eq!(reports.len(), 2);
    assert_eq!(reports[0]["suite"], "tl");
    for r in reports {
        for c in r["checks"].as_array().unwrap() {
            assert_eq!(c["status"], "pass");
            assert!(c.get("wall_ms").is_none());
        }
    }
}

#[test]
fn timings_are_opt_in() {
    let o = skeinlab(&["verify", "skew", "--timings"], None);
    assert!(o.status.success());
    assert!(stdout(&o).contains(" ms]"));
}

#[test]
fn reports_do_not_depend_on_worker_count() {
    let args = ["verify", "prop61", "degrees", "tl", "--N-max", "3", "--json"];
    let base = stdout(&skeinlab(&args, Some(1)));
    for w in [2, 3, 8] {
        assert_eq!(stdout(&skeinlab(&args, Some(w))), base, "{w} workers");
    }
}

#[test]
fn eval_gamma_resolves_its_crossing() {
    let path = write_builtin("gamma");
    let o = skeinlab(&["eval", "--diagram", path.to_str().unwrap()], None);
    std::fs::remove_file(&path).ok();
    assert!(o.status.success());
    let mut expected = SkeinPoly::zero(2);
    expected.add_term(Monomial::x1x2y(1, 1, 0), LaurentInt::t(1));
    expected.add_term(Monomial::x1x2y(0, 0, 1), LaurentInt::t(-1));
    assert_eq!(stdout(&o).trim(), expected.to_string());
}

#[test]
fn eval_specializes_at_a_root() {
    let path = write_builtin("unknot");
    let o = skeinlab(&["eval", "--diagram", path.to_str().unwrap(), "--xi", "8/1"], None);
    std::fs::remove_file(&path).ok();
    assert!(o.status.success());
    // -(t^2 + t^-2) vanishes at a primitive 8th root
    assert_eq!(stdout(&o).trim(), "0");
}

#[test]
fn eval_rejects_malformed_file() {
    let path = std::env::temp_dir().join(format!("skeinlab-cli-{}-bad.json", std::process::id()));
    std::fs::write(&path, "{\"disk\": 3}").unwrap();
    let o = skeinlab(&["eval", "--diagram", path.to_str().unwrap()], None);
    std::fs::remove_file(&path).ok();
    assert_eq!(o.status.code(), Some(2));
}
