use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use mixlab::hypothesis_graph::read_class_path;
use serde_json::Value;

fn mixlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mixlab")).args(args).output().unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = mixlab(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&ok(args)).unwrap()
}

fn code(args: &[&str]) -> i32 {
    mixlab(args).status.code().unwrap()
}

fn path(dir: &Path, name: &str) -> PathBuf {
    dir.join(name)
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn generate_families() {
    let dir = tempfile::tempdir().unwrap();
    let p = path(dir.path(), "p.hcls");
    ok(&["generate", "--family", "parity", "--n", "3", "-o", s(&p)]);
    let c = read_class_path(&p).unwrap();
    assert_eq!((c.num_hypotheses(), c.num_examples()), (7, 8));

    let t = path(dir.path(), "t.hcls");
    ok(&["generate", "--family", "threshold", "--x", "8", "-o", s(&t)]);
    let c = read_class_path(&t).unwrap();
    assert_eq!((c.num_hypotheses(), c.num_examples()), (9, 8));

    let r = path(dir.path(), "r.hcls");
    ok(&["generate", "--family", "partitioned", "--h", "6", "--x", "10", "--r", "2", "--seed", "3", "-o", s(&r)]);
    assert_eq!(read_class_path(&r).unwrap().num_examples(), 10);
}

#[test]
fn generate_usage_errors() {
    let dir = tempfile::tempdir().unwrap();
    let p = path(dir.path(), "x.hcls");
    assert_eq!(code(&["generate", "--family", "parity", "--n", "3"]), 2);
    assert_eq!(code(&["generate", "--family", "threshold", "--x", "8", "--r", "2", "-o", s(&p)]), 2);
    assert_eq!(code(&["generate", "--family", "random", "--h", "3", "-o", s(&p)]), 2);
    assert_eq!(code(&["generate", "--family", "bogus", "-o", s(&p)]), 2);
    assert_eq!(code(&["no-such-command"]), 2);
    assert!(!p.exists());
}

#[test]
fn analyze_parity_two() {
    let dir = tempfile::tempdir().unwrap();
    let p = path(dir.path(), "p.hcls");
    ok(&["generate", "--family", "parity", "--n", "2", "-o", s(&p)]);
    let v = json(&["analyze", s(&p), "--dmin", "exact", "--json"]);
    let d = v["mixing"]["d_value"].as_f64().unwrap();
    assert!((d - 3f64.sqrt() / 2.0).abs() < 1e-11);
    assert_eq!(v["mixing"]["mc"].as_f64().unwrap(), 4.0);
    assert_eq!(v["r"], 4);
    assert_eq!(v["vc"]["dimension"], 1);
    assert_eq!(v["vc"]["method"], "exact");
    assert!(v["theorem1"].is_null());

    let keys: Vec<&str> = v["mixing"].as_object().unwrap().keys().map(|k| k.as_str()).collect();
    for k in ["method", "d_value", "mc", "density_baseline", "is_mixing", "mixing_constant", "witness", "bounds"] {
        assert!(keys.contains(&k), "missing {k}");
    }
    assert!(v["mixing"]["witness"]["T"].is_array() && v["mixing"]["witness"]["S"].is_array());

    let text = ok(&["analyze", s(&p)]);
    assert!(text.contains("r               4"));
}

#[test]
fn analyze_threshold_is_not_mixing() {
    let dir = tempfile::tempdir().unwrap();
    let t = path(dir.path(), "t.hcls");
    ok(&["generate", "--family", "threshold", "--x", "16", "-o", s(&t)]);
    let v = json(&["analyze", s(&t), "--mixing-constant", "1", "--json"]);
    assert_eq!(v["mixing"]["is_mixing"], false);
    let v = json(&["analyze", s(&t), "--json", "--theorem1", "a=0", "s=0.1"]);
    assert_eq!(v["theorem1"]["mixing_condition"], false);
    let v = json(&["analyze", s(&t), "--json", "--theorem1", "a=0.5,s=0.1", "--vc", "greedy", "--dmin", "spectral"]);
    assert_eq!(v["theorem1"]["a"], 0.5);
    assert_eq!(v["vc"]["method"], "greedy");
    assert_eq!(v["mixing"]["mc_kind"], "lower");
    assert_eq!(code(&["analyze", s(&t), "--theorem1", "a=0.1"]), 2);
}

#[test]
fn analyze_capacity_and_io_errors() {
    let dir = tempfile::tempdir().unwrap();
    let r = path(dir.path(), "r.hcls");
    ok(&["generate", "--family", "random", "--h", "40", "--x", "40", "--seed", "1", "-o", s(&r)]);
    let out = mixlab(&["analyze", s(&r)]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("spectral"));
    assert_eq!(code(&["analyze", s(&r), "--dmin", "spectral", "--vc", "greedy"]), 0);

    assert_eq!(code(&["analyze", s(&path(dir.path(), "missing.hcls"))]), 4);
    let bad = path(dir.path(), "bad.hcls");
    std::fs::write(&bad, "HCLS1\nh=2 x=2\n01\n2x\n").unwrap();
    assert_eq!(code(&["analyze", s(&bad)]), 4);
}

#[test]
fn simulate_emits_one_row_per_trial() {
    let dir = tempfile::tempdir().unwrap();
    let t = path(dir.path(), "t.hcls");
    ok(&["generate", "--family", "threshold", "--x", "32", "-o", s(&t)]);
    let csv = path(dir.path(), "rows.csv");
    let v = json(&["simulate", s(&t), "--learner", "threshold", "--trials", "9", "--seed", "1", "--json", "--csv", s(&csv)]);
    assert_eq!(v["rows"].as_array().unwrap().len(), 9);
    assert_eq!(std::fs::read_to_string(&csv).unwrap().lines().count(), 10);
    let again = json(&["simulate", s(&t), "--learner", "threshold", "--trials", "9", "--seed", "1", "--json"]);
    assert_eq!(v, again);

    let other = json(&["simulate", s(&t), "--learner", "threshold", "--trials", "9", "--seed", "2", "--json"]);
    assert_ne!(v["rows"], other["rows"]);
}

#[test]
fn simulate_learner_choices() {
    let dir = tempfile::tempdir().unwrap();
    let p = path(dir.path(), "p.hcls");
    ok(&["generate", "--family", "parity", "--n", "3", "-o", s(&p)]);
    // the threshold learner refuses a non-threshold class
    assert_eq!(code(&["simulate", s(&p), "--learner", "threshold"]), 2);
    assert_eq!(code(&["simulate", s(&p), "--learner", "table"]), 2);

    let table = path(dir.path(), "l.fsl");
    let learner = mixlab::memory_learner::TableLearner::random(4, 8, 7, 2).unwrap();
    mixlab::memory_learner::write_table_learner_path(&learner, &table).unwrap();
    let v = json(&["simulate", s(&p), "--learner", "table", "--table", s(&table), "--target", "2", "--trials", "4", "--json"]);
    assert_eq!(v["learner_states"], 4);
    assert_eq!(v["per_target"][0]["target"], 2);

    let v = json(&["simulate", s(&p), "--learner", "version-space", "--all-targets", "--trials", "5", "--json"]);
    assert_eq!(v["per_target"].as_array().unwrap().len(), 7);
    assert!(v["m_hat"].as_u64().is_some());
}

#[test]
fn perturb_flips_exactly_the_requested_cells() {
    let dir = tempfile::tempdir().unwrap();
    let p = path(dir.path(), "p.hcls");
    let q = path(dir.path(), "q.hcls");
    ok(&["generate", "--family", "parity", "--n", "3", "-o", s(&p)]);
    ok(&["perturb", s(&p), "--flips", "3", "--seed", "2", "-o", s(&q)]);
    let (a, b) = (read_class_path(&p).unwrap(), read_class_path(&q).unwrap());
    let diff = (0..7).flat_map(|h| (0..8).map(move |x| (h, x))).filter(|&(h, x)| a.label(h, x) != b.label(h, x)).count();
    assert_eq!(diff, 3);

    let v = json(&["perturb", s(&p), "--cells", "0:0,1:1", "--dmin", "exact", "-o", s(&q), "--json"]);
    assert_eq!(v["cells"].as_array().unwrap().len(), 2);
    assert_eq!(v["comparison"]["holds"], true);
    assert_eq!(code(&["perturb", s(&p), "--cells", "0:0,0:0", "-o", s(&q)]), 2);
    assert_eq!(code(&["perturb", s(&p), "-o", s(&q)]), 2);
}

#[test]
fn vc_and_partition_commands() {
    let dir = tempfile::tempdir().unwrap();
    let p = path(dir.path(), "p.hcls");
    ok(&["generate", "--family", "parity", "--n", "4", "-o", s(&p)]);
    let v = json(&["vc", s(&p), "--method", "greedy", "--epsilon", "0.25", "--json"]);
    assert_eq!(v["certificate"]["shattered"], true);
    let v = json(&["vc", s(&p), "--json"]);
    assert_eq!(v["dimension"], 3);

    let r = path(dir.path(), "r.hcls");
    ok(&["generate", "--family", "partitioned", "--h", "8", "--x", "12", "--r", "3", "--seed", "1", "-o", s(&r)]);
    let v = json(&["partition", s(&r), "--check-bound", "--json"]);
    assert!(v["r"].as_u64().unwrap() <= 3);
    assert_eq!(v["bound"]["holds"], true);
}

#[test]
fn randomization_test_command() {
    let dir = tempfile::tempdir().unwrap();
    let r = path(dir.path(), "r.hcls");
    ok(&["generate", "--family", "partitioned", "--h", "12", "--x", "12", "--r", "2", "--seed", "4", "-o", s(&r)]);
    let v = json(&["randomization-test", s(&r), "--levels", "3", "--trials", "2", "--seed", "5", "--json"]);
    let levels = v["levels"].as_array().unwrap();
    assert_eq!(levels.len(), 4);
    assert_eq!(levels[0]["mean_mc"], v["mc_original"]);
    assert!(levels.iter().all(|l| l["flip_bound_holds"] == true));
    assert_eq!(code(&["randomization-test", s(&r), "--levels", "0"]), 2);
}

#[test]
fn thread_count_environment() {
    let dir = tempfile::tempdir().unwrap();
    let p = path(dir.path(), "p.hcls");
    ok(&["generate", "--family", "parity", "--n", "3", "-o", s(&p)]);
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_mixlab"))
            .args(["analyze", s(&p), "--json"])
            .env("MIXLAB_THREADS", threads)
            .output()
            .unwrap()
    };
    let one = run("1");
    let auto = run("0");
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, auto.stdout);
    assert_eq!(run("many").status.code(), Some(2));
}

#[test]
fn help_exits_zero() {
    let out = mixlab(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    for cmd in ["generate", "analyze", "randomization-test", "simulate", "perturb", "vc"] {
        assert!(text.contains(cmd), "{cmd}");
    }
}
