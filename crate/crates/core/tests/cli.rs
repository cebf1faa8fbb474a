use std::path::PathBuf;
use std::process::Command;

use ratgk::cli::run;

fn spec(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("examples/specs")
        .join(name)
        .display()
        .to_string()
}

fn ratgk(args: &[&str]) -> ratgk::cli::CommandOutput {
    run(std::iter::once("ratgk").chain(args.iter().copied()))
}

#[test]
fn graph_dot_of_s3_has_two_isolated_vertices() {
    let out = ratgk(&["graph", "--spec", &spec("s3.toml"), "--format", "dot"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.starts_with("graph"));
    assert!(out.stdout.contains('2') && out.stdout.contains('3'));
    assert!(!out.stdout.contains("--"));
}

#[test]
fn graph_text_of_direct_square_has_edge() {
    let out = ratgk(&["graph", "--spec", &spec("s3_x_s3.toml")]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, "order 36\ngraph 2,3:2-3\n");
}

#[test]
fn classify_a5_reports_not_solvable() {
    let out = ratgk(&["classify", "--spec", &spec("a5.toml")]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("reason: not solvable"), "{}", out.stdout);
}

#[test]
fn classify_report_is_json() {
    let out = ratgk(&["classify", "--spec", &spec("v_rtimes_q8.toml"), "--format", "report"]);
    assert_eq!(out.code, 0);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["order"], 200);
    assert_eq!(v["matches_classification"], true);
}

#[test]
fn rational_and_cut_exit_codes() {
    assert_eq!(ratgk(&["rational", "--spec", &spec("s3.toml")]).code, 0);
    assert_eq!(ratgk(&["cut", "--spec", &spec("s3.toml")]).code, 0);
    assert_eq!(ratgk(&["rational", "--spec", &spec("gf5_rtimes_c4.toml")]).code, 1);
    assert_eq!(ratgk(&["rational", "--spec", &spec("a5.toml")]).code, 1);
    assert_eq!(ratgk(&["cut", "--spec", &spec("a5.toml")]).code, 1);
}

#[test]
fn matrix_spec_builds_order_192() {
    let out = ratgk(&["graph", "--spec", &spec("alpha_beta_gamma.toml")]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.starts_with("order 192\n"));
}

#[test]
fn orbits_of_case_d() {
    let out = ratgk(&["orbits", "--case", "d"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let sizes: Vec<usize> = out
        .stdout
        .lines()
        .filter_map(|l| l.trim().strip_prefix("size "))
        .map(|l| l.split(' ').next().unwrap().parse().unwrap())
        .collect();
    assert_eq!(sizes.iter().sum::<usize>(), 625);
    assert_eq!(sizes.iter().filter(|&&s| s == 192).count(), 2);
}

#[test]
fn verify_paper_and_witnesses_succeed() {
    let out = ratgk(&["verify-paper"]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    assert!(out.stdout.lines().any(|l| l.starts_with("PASS de.orders")));
    let out = ratgk(&["witnesses"]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    assert!(out.stdout.contains("witness.all-six"));
}

#[test]
fn search_finds_nothing_for_the_mixed_path() {
    let out = ratgk(&["search", "--target", "2,3,5:2-3,2-5", "--expect", "none"]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    assert!(out.stdout.contains("examined 48 of 48"));
}

#[test]
fn search_expect_mismatch_exits_one() {
    let out = ratgk(&["search", "--target", "2,3,5:2-3,2-5", "--expect", "found"]);
    assert_eq!(out.code, 1);
    let out = ratgk(&["search", "--target", "2,5:", "--expect", "found"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("order 200"));
}

#[test]
fn invalid_inputs_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.toml");
    std::fs::write(&bad, "format = 1\nkind = \"matrix\"\nprime = 4\ngenerators = []\n").unwrap();
    let out = ratgk(&["graph", "--spec", bad.to_str().unwrap()]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("prime"), "{}", out.stderr);

    std::fs::write(&bad, "kind = \"named\"\nname = \"S3\"\n").unwrap();
    let out = ratgk(&["graph", "--spec", bad.to_str().unwrap()]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("format"));

    assert_eq!(ratgk(&["graph", "--spec", "/nonexistent.toml"]).code, 2);
    assert_eq!(ratgk(&["search", "--target", "2,3:2-7"]).code, 2);
    assert_eq!(ratgk(&["orbits", "--case", "q"]).code, 2);
    assert_eq!(ratgk(&["verify-paper", "--format", "dot"]).code, 2);
    assert_eq!(ratgk(&["search", "--target", "2,3:", "--max-dim", "3"]).code, 2);
}

#[test]
fn cap_is_enforced() {
    let out = ratgk(&["graph", "--spec", &spec("alpha_beta_gamma.toml"), "--cap", "100"]);
    assert_eq!(out.code, 2);
}

#[test]
fn output_is_deterministic() {
    let args = ["witnesses", "--format", "report"];
    assert_eq!(ratgk(&args), ratgk(&args));
}

#[test]
fn binary_writes_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("s3.dot");
    let status = Command::new(env!("CARGO_BIN_EXE_ratgk"))
        .args(["graph", "--spec", &spec("s3.toml"), "--format", "dot", "--out"])
        .arg(&target)
        .status()
        .unwrap();
    assert!(status.success());
    let written = std::fs::read_to_string(&target).unwrap();
    assert_eq!(written, ratgk(&["graph", "--spec", &spec("s3.toml"), "--format", "dot"]).stdout);
}

#[test]
fn binary_exit_codes_propagate() {
    let status = Command::new(env!("CARGO_BIN_EXE_ratgk"))
        .args(["classify", "--spec", &spec("a5.toml")])
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(1));
    let status = Command::new(env!("CARGO_BIN_EXE_ratgk"))
        .args(["graph", "--spec", "/nonexistent.toml"])
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(2));
    assert!(!status.stderr.is_empty());
}
