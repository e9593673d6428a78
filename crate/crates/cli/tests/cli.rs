use std::process::{Command, Output};

use serde_json::Value;

fn tiedbox(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tiedbox")).args(args).env_remove("TIEDBOX_PROFILE").output().expect("binary runs")
}

fn lines(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout).lines().map(|l| serde_json::from_str(l).expect("json line")).collect()
}

fn summary(out: &Output) -> Value {
    lines(out).pop().expect("summary line")
}

fn row<'a>(rows: &'a [Value], name: &str) -> &'a Value {
    rows.iter().find(|r| r["name"] == name).unwrap_or_else(|| panic!("no row {name}"))
}

#[test]
fn dim_bh_sequence() {
    let out = tiedbox(&["dim", "--family", "bh", "--max-n", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let rows = lines(&out);
    assert_eq!(row(&rows, "dim bh sequence")["got"], "1,3,11,47,231");
    assert_eq!(summary(&out)["status"], "pass");
}

#[test]
fn enumerate_br_jones() {
    let out = tiedbox(&["enumerate", "--monoid", "br-jones", "--n", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(row(&lines(&out), "|br-jones| n=4")["got"], "35");
}

#[test]
fn enumerate_list_has_one_row_per_element() {
    let out = tiedbox(&["enumerate", "--monoid", "sr-symmetric", "--n", "3", "--list"]);
    assert_eq!(lines(&out).iter().filter(|r| r["name"].as_str().is_some_and(|s| s.starts_with("element"))).count(), 24);
}

#[test]
fn present_check_brjn() {
    let out = tiedbox(&["present-check", "--preset", "brjn", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(summary(&out)["status"], "pass");
}

#[test]
fn weakened_relations_file_fails() {
    let mut p = tiedbox::presentations::brauer(3);
    for i in 1..3 {
        p = p.without_relation(&format!("t{i} s{i}"), &format!("t{i}")).unwrap();
    }
    let path = std::env::temp_dir().join(format!("tiedbox-weak-{}.txt", std::process::id()));
    std::fs::write(&path, p.to_text()).unwrap();
    let out = tiedbox(&["present-check", "--preset", "brauer", "--n", "3", "--relations", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(out.status.code(), Some(1));
    let rows = lines(&out);
    let nf = row(&rows, "brauer n=3: normal forms = |target|");
    assert!(nf["witness"].as_str().unwrap().contains("same image"), "{nf}");
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(tiedbox(&["enumerate", "--monoid", "nope", "--n", "3"]).status.code(), Some(64));
    assert_eq!(tiedbox(&["dim", "--family", "bh", "--max-n", "0"]).status.code(), Some(64));
    assert_eq!(tiedbox(&["multiply", "--algebra", "bh", "--n", "3", "g1"]).status.code(), Some(64));
    assert_eq!(
        tiedbox(&["normal-form", "--monoid", "br-symmetric", "--n", "3", "--element", "x"]).status.code(),
        Some(64)
    );
    assert_eq!(tiedbox(&["verify-all", "--criterion", "0"]).status.code(), Some(64));
    assert_eq!(tiedbox(&["--help"]).status.code(), Some(0));
}

#[test]
fn corrupted_mobius_exits_1() {
    let out = tiedbox(&["idempotent-check", "--algebra", "bh", "--n", "3", "--corrupt-mobius"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(row(&lines(&out), "bH_3: E_I complete, central, orthogonal")["status"], "fail");
}

#[test]
fn beyond_enumeration_bound_is_inconclusive() {
    let out = tiedbox(&["enumerate", "--monoid", "br-partition", "--n", "5"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(summary(&out)["status"], "inconclusive");
}

#[test]
fn multiply_agrees_with_tensor_oracle() {
    let out = tiedbox(&["multiply", "--algebra", "bt", "--n", "3", "g1", "e2", "g1^-1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(row(&lines(&out), "tensor oracle agrees")["status"], "pass");
}

#[test]
fn rep_and_cellular_checks() {
    let out = tiedbox(&["rep-check", "--algebra", "bh", "--n", "3"]);
    assert_eq!(row(&lines(&out), "rank φ(bH_3)")["got"], "11");
    let out = tiedbox(&["cellular", "--algebra", "btl", "--n", "3", "--check-axioms"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(row(&lines(&out), "bTL_3: cellular basis size")["got"], "10");
}

#[test]
fn center_and_normal_form() {
    let out = tiedbox(&["center", "--n", "4"]);
    assert_eq!(row(&lines(&out), "|Z(BR(S_4))| = 2^3")["got"], "8");
    let out = tiedbox(&["normal-form", "--monoid", "sr-symmetric", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn out_file_and_determinism() {
    let dir = std::env::temp_dir();
    let a = dir.join(format!("tiedbox-a-{}.txt", std::process::id()));
    let b = dir.join(format!("tiedbox-b-{}.txt", std::process::id()));
    for p in [&a, &b] {
        let out = tiedbox(&["verify-all", "--profile", "quick", "--seed", "7", "--out", p.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
        assert!(out.stdout.is_empty());
        assert!(String::from_utf8_lossy(&out.stderr).contains("verify-all quick"));
    }
    let (x, y) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    std::fs::remove_file(&a).ok();
    std::fs::remove_file(&b).ok();
    assert_eq!(x, y);
}

#[test]
fn profile_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_tiedbox"))
        .args(["verify-all", "--criterion", "1"])
        .env("TIEDBOX_PROFILE", "quick")
        .output()
        .unwrap();
    assert_eq!(summary(&out)["command"], "verify-all quick");
}

#[test]
fn table_format() {
    let out = tiedbox(&["dim", "--family", "tl", "--max-n", "4", "--format", "table"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.starts_with("name"));
    assert!(text.trim_end().ends_with("overall: pass"));
}
