use std::process::{Command, Output};

use osdrazin::io::Instance;
use osdrazin::spectra::point_index;
use osdrazin::transfer::JacobsonQuad;
use osdrazin::Gaussian;
use osdrazin_cli::{run_campaign, Aggregate, CampaignConfig, ExitStatus};

fn osdrazin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_osdrazin")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn scalar_drazin_trial_passes() {
    let o = osdrazin(&["run", "--theorem", "thm-3.5-left", "--trials", "1", "--dim", "1", "--family", "classical", "--seed", "0"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).starts_with("thm-3.5-left: PASS"));
}

#[test]
fn ring_audit_counts_sixteen_elements() {
    let o = osdrazin(&["run", "--theorem", "thm-2.7-audit", "--scalar", "mod:2", "--dim", "2", "--format", "structured"]);
    assert_eq!(o.status.code(), Some(0));
    let agg: Aggregate = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(agg.indices["elements"][&16], 1);
    assert_eq!(agg.indices["counterexamples"][&0], 1);
}

#[test]
fn usage_errors_exit_two() {
    let o = osdrazin(&["run", "--theorem", "thm-9.9-left"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("unknown theorem id"));
    assert_eq!(osdrazin(&["run", "--theorem", "thm-3.5-left", "--trials", "0"]).status.code(), Some(2));
    assert_eq!(osdrazin(&["run", "--theorem", "cor-3.11", "--scalar", "mod:5"]).status.code(), Some(2));
    assert_eq!(osdrazin(&["run", "--theorem", "thm-3.5-left", "--family", "idempotent-pair"]).status.code(), Some(2));
    assert_eq!(osdrazin(&["run"]).status.code(), Some(2));
}

#[test]
fn structured_output_is_byte_identical() {
    let args = ["run", "--theorem", "thm-4.5-right", "--trials", "20", "--seed", "11", "--format", "structured"];
    let a = osdrazin(&args);
    let b = osdrazin(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let threads = Command::new(env!("CARGO_BIN_EXE_osdrazin")).args(args).env("OSDRAZIN_THREADS", "1").output().unwrap();
    assert_eq!(a.stdout, threads.stdout);
}

#[test]
fn exhausted_budget_exits_three() {
    let mut cfg = CampaignConfig::new("thm-3.5-left");
    cfg.trials = 1_000_000;
    cfg.dim = 4;
    cfg.budget_seconds = Some(1);
    let out = run_campaign(&cfg).unwrap();
    assert_eq!(out.status(), ExitStatus::Budget);
    assert!(out.aggregate.skipped > 0);
    assert_eq!(out.aggregate.failed, 0);
}

#[test]
fn gen_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("quad.json");
    let p = path.to_str().unwrap();
    let o = osdrazin(&["gen", "--family", "classical-quad", "--dim", "2", "--seed", "7", "--out", p]);
    assert_eq!(o.status.code(), Some(0));
    let Instance::Quad { a, b, c, d } = Instance::read(&path).unwrap() else { panic!("expected a quad") };
    JacobsonQuad::new(a.clone(), b.clone(), c.clone(), d.clone()).unwrap();
    // classical: a = d, b = c
    assert_eq!((&a, &b), (&d, &c));
    let o = osdrazin(&["check", p]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("acd = dbd"));
    let again = dir.path().join("again.json");
    osdrazin(&["gen", "--family", "classical-quad", "--dim", "2", "--seed", "7", "--out", again.to_str().unwrap()]);
    assert_eq!(std::fs::read(&path).unwrap(), std::fs::read(&again).unwrap());
}

#[test]
fn gen_families() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("j.json");
    let o = osdrazin(&["gen", "--family", "planted-jordan", "--dim", "2", "--spec", "1:2", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let Instance::Matrix { a } = Instance::read(&path).unwrap() else { panic!("expected a matrix") };
    assert_eq!(point_index(&a, &Gaussian::from_ints(1, 0)).unwrap(), 2);

    let o = osdrazin(&["gen", "--family", "idempotent-pair", "--rank", "0", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let Instance::Pair { a, b, .. } = Instance::read(&path).unwrap() else { panic!("expected a pair") };
    assert!(a.is_zero() && b.is_zero());

    let o = osdrazin(&["gen", "--family", "exhaustive-ring", "--scalar", "mod:6", "--dim", "1", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&osdrazin(&["check", path.to_str().unwrap()])).contains("6 elements"));
    assert_eq!(osdrazin(&["gen", "--family", "bogus", "--out", path.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn tampered_instance_fails_check() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pair.json");
    std::fs::write(
        &path,
        r#"{"type":"pair","a":{"dim":1,"scalar":"rational","entries":[["1"]]},"b":{"dim":1,"scalar":"rational","entries":[["0"]]},"n":1}"#,
    )
    .unwrap();
    let o = osdrazin(&["check", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn records_then_aggregate() {
    let dir = tempfile::tempdir().unwrap();
    let rec = dir.path().join("r.jsonl");
    let o = osdrazin(&["run", "--theorem", "prop-cline-right", "--trials", "15", "--records", rec.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&rec).unwrap().lines().count(), 15);
    let o = osdrazin(&["aggregate", rec.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("trials 15: passed 15"));
}

#[test]
fn failing_records_exit_one_with_counterexample() {
    let dir = tempfile::tempdir().unwrap();
    let rec = dir.path().join("bad.jsonl");
    std::fs::write(
        &rec,
        r#"{"instance_id":"thm-3.5-left#0","checks":[{"name":"beta-drazin","passed":false}],"inputs":{"a":{"dim":1,"scalar":"rational","entries":[["2"]]}}}"#,
    )
    .unwrap();
    let o = osdrazin(&["aggregate", rec.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("counterexample FAIL thm-3.5-left#0"));
    assert!(text.contains("a = "));
}
