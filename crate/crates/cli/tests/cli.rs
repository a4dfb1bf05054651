use std::path::Path;
use std::process::{Command, Output};

fn signhom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_signhom")).args(args).env_remove("SIGNHOM_JOBS").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write_gen(dir: &Path, name: &str, file: &str) -> String {
    let o = signhom(&["gen", name]);
    assert!(o.status.success());
    let path = dir.join(file);
    std::fs::write(&path, &o.stdout).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn fig6_has_no_map_to_k6m() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_gen(dir.path(), "fig6", "fig6.sg");
    let o = signhom(&["map", &file, "--target", "k6m", "--mode", "switch"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("status: NONE\n"));
}

#[test]
fn fig6_mad() {
    let o = signhom(&["mad", "fig6"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("mad: 14/5\n"));
    assert!(text.contains("witness: 1 2 3 4 5\n"));
    let below = signhom(&["mad", "fig6", "--less-than", "14/5"]);
    assert_eq!(below.status.code(), Some(1));
}

#[test]
fn girth_vector_of_k44m() {
    let o = signhom(&["gij", "k44m"]);
    assert_eq!(stdout(&o), "g: 2 inf 4 inf\n");
}

#[test]
fn gen_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["fig6", "fig7", "gell:4", "s:k4", "random:9:0.4"] {
        let file = write_gen(dir.path(), name, "g.sg");
        let again = signhom(&["gen", &file]);
        assert_eq!(std::fs::read_to_string(&file).unwrap(), stdout(&again), "{name}");
    }
}

#[test]
fn found_map_reports_switch_set() {
    let o = signhom(&["map", "fig7", "-t", "k44m", "--format", "kv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("status=FOUND\nmode=SWITCH\n"));
    assert!(text.lines().any(|l| l.starts_with("switch=")));
    let k33 = signhom(&["map", "fig7", "-t", "k33m"]);
    assert_eq!(k33.status.code(), Some(1));
}

#[test]
fn budget_exhaustion_is_indeterminate() {
    let o = signhom(&["map", "gell:5", "-t", "k8m", "--budget", "5"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("INDETERMINATE"));
}

#[test]
fn usage_and_parse_errors_exit_two() {
    assert_eq!(signhom(&["map"]).status.code(), Some(2));
    assert_eq!(signhom(&["verify", "--suite", "bogus"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.sg");
    std::fs::write(&bad, "p signed 2 1\ne 1 3 +\n").unwrap();
    assert_eq!(signhom(&["mad", bad.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn switch_equivalence() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.sg");
    let b = dir.path().join("b.sg");
    std::fs::write(&a, "p signed 3 3\ne 1 2 +\ne 2 3 +\ne 1 3 +\n").unwrap();
    std::fs::write(&b, "p signed 3 3\ne 1 2 -\ne 2 3 +\ne 1 3 -\n").unwrap();
    let o = signhom(&["switch-equiv", a.to_str().unwrap(), b.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    // switching a set or its complement gives the same graph
    let text = stdout(&o);
    assert!(text == "equivalent: yes\nswitch: 1\n" || text == "equivalent: yes\nswitch: 2 3\n", "{text}");
    std::fs::write(&b, "p signed 3 3\ne 1 2 -\ne 2 3 +\ne 1 3 +\n").unwrap();
    let o = signhom(&["switch-equiv", a.to_str().unwrap(), b.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_suite_and_config() {
    let o = signhom(&["verify", "--suite", "edge-restriction"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("count.singleton=24"));
    assert!(text.contains("suite.status=pass"));
    let o = signhom(&["verify", "--config", "3_2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("check=config-3_2 status=pass instances=1728 failures=0"));
}

#[test]
fn reports_do_not_depend_on_worker_count() {
    let one = signhom(&["--jobs", "1", "verify", "--suite", "cycle-lemmas", "--kmax", "3"]);
    let four = signhom(&["--jobs", "4", "verify", "--suite", "cycle-lemmas", "--kmax", "3"]);
    assert_eq!(stdout(&one), stdout(&four));
    let a = signhom(&["--jobs", "1", "enumerate", "fig7", "-t", "k44m", "--cap", "50"]);
    let b = signhom(&["--jobs", "3", "enumerate", "fig7", "-t", "k44m", "--cap", "50"]);
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn enumeration_of_fig7_is_onto() {
    let o = signhom(&["enumerate", "fig7", "-t", "k44m", "--cap", "100000"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("onto: all\n"));
    assert!(text.contains("truncated: no\n"));
}

#[test]
fn scan_and_audit_fig6() {
    let o = signhom(&["scan", "fig6"]);
    assert!(stdout(&o).contains("component: 1 2 3 4 5 n0=2 n1=2 n0>=n1 holds"));
    let o = signhom(&["audit", "fig6", "--rules", "k6"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("initial: 1:1/5 2:1/5 3:1/5 4:1/5 5:-4/5\n"));
    assert!(!text.contains("\ntransfer:"));
    assert!(text.contains("conserved: yes"));
    assert_eq!(signhom(&["audit", "fig6", "--rules", "k7"]).status.code(), Some(2));
}
