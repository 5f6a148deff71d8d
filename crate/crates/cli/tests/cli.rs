use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures")).join(name)
}

fn jdlat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jdlat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn f(name: &str) -> String {
    fixture(name).display().to_string()
}

#[test]
fn build_ej_json_has_fifteen_elements() {
    let o = jdlat(&["build-ej", &f("fix_a.perm"), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["m"], 15);
    assert_eq!(v["labels"].as_array().unwrap().len(), 15);
}

#[test]
fn map_lists_known_pairs() {
    let o = jdlat(&["map", &f("fix_a.perm")]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("23 → 020"));
    assert!(out.contains("134 → 111"));
    assert!(out.contains("1234 → 444"));
    assert_eq!(out.lines().filter(|l| l.contains('→')).count(), 15);
}

#[test]
fn check_diamond_fails_every_condition() {
    let o = jdlat(&["check", &f("m3.json"), "--json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["semimodular"], true);
    assert_eq!(v["jd"], false);
    assert_eq!(v["cond_ii"], false);
    assert_eq!(v["cond_iii"], false);
}

#[test]
fn check_pentagon_reports_non_semimodular() {
    let o = jdlat(&["check", &f("n5.json"), "--json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["semimodular"], false);
    assert_eq!(v["jd"], false);
}

#[test]
fn check_tuple_and_family_pass() {
    let o = jdlat(&["check", &f("fix_a.perm"), "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["proposition"]["pass"], true);
    assert_eq!(v["jd"], true);

    let o = jdlat(&["check", &f("figure.family"), "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["cover_law"], true);
    assert_eq!(v["labels_constant"], true);
}

#[test]
fn check_random_is_seeded() {
    let a = jdlat(&["check", "--random", "20", "--seed", "7"]);
    let b = jdlat(&["check", "--random", "20", "--seed", "7"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
    assert!(stdout(&a).contains("20 of 20"));
}

#[test]
fn bad_inputs_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.perm");
    std::fs::write(&bad, "3 2\n1 1 2\n").unwrap();
    let o = jdlat(&["build-ej", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());

    let o = jdlat(&["build-ej", dir.path().join("missing").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));

    let o = jdlat(&["build-ej", &f("fix_a.perm"), "--max-n", "3"]);
    assert_eq!(o.status.code(), Some(2));

    let o = jdlat(&["no-such-verb"]);
    assert_eq!(o.status.code(), Some(2));

    let o = jdlat(&["enumerate", "--n", "4", "--realize"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn constructions_are_isomorphic() {
    // fix_b is the inverse tuple of fix_a
    let o = jdlat(&["iso", &f("fix_a.perm"), &f("fix_b.perm"), "--b-cz"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("isomorphic"));

    let o = jdlat(&["iso", &f("m3.json"), &f("n5.json")]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn json_round_trip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("ej.json");
    let o = jdlat(&[
        "export",
        &f("fix_a.perm"),
        "--json",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let o = jdlat(&["iso", out.to_str().unwrap(), &f("fix_a.perm")]);
    assert_eq!(o.status.code(), Some(0));
    let o = jdlat(&["check", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn dot_export_uses_combined_labels() {
    let o = jdlat(&["export", &f("fix_a.perm"), "--dot"]);
    assert_eq!(o.status.code(), Some(0));
    let dot = stdout(&o);
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.lines().filter(|l| l.contains("[label=")).count(), 15);
    assert!(dot.contains("label=\"134,111\""));
    assert!(dot.contains("label=\"{},000\""));
}

#[test]
fn mir_and_enumerate() {
    let o = jdlat(&["mir", &f("fix_b.perm")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("match"));

    let o = jdlat(&["enumerate", "--n", "3", "--realize"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 7);
    assert!(out.starts_with("n,class_id,lattice_size,join_width,labeled_count,witness_sigma"));
    let labeled: usize = out
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(4).unwrap().parse::<usize>().unwrap())
        .sum();
    assert_eq!(labeled, 22);
}

#[test]
fn trajectories_of_a_tuple_carry_labels() {
    let o = jdlat(&["trajectories", &f("fix_a.perm")]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("4 trajectories"));
    assert!(!out.contains("mixed"));
}

#[test]
fn run_is_callable_in_process() {
    assert_eq!(jdlat_cli::run(["jdlat", "mir", &f("fix_c.perm")]), 0);
    assert_eq!(jdlat_cli::run(["jdlat", "check"]), 2);
}
