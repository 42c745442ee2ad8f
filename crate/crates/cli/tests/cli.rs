use std::process::{Command, Output};

fn knotpoly(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_knotpoly"))
        .args(args)
        .env_remove("KNOT_TABLE")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

const TREFOIL: &str = "X(1,5,2,4);X(3,1,4,6);X(5,3,6,2)";

#[test]
fn conway_unknot() {
    let o = knotpoly(&["conway", "--pd", "O"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1\n");
}

#[test]
fn torus_trefoil() {
    let o = knotpoly(&["torus", "--m", "3"]);
    assert_eq!(stdout(&o), "1+z^2\n");
}

#[test]
fn kn_one() {
    let o = knotpoly(&["kn", "--n", "1"]);
    assert_eq!(stdout(&o), "1+4z^2+4z^4+z^6\n");
}

#[test]
fn a2_and_lk() {
    let o = knotpoly(&["a2", "--pd", TREFOIL]);
    assert_eq!(stdout(&o), "1\n");
    let o = knotpoly(&[
        "lk",
        "--pd",
        "X(10,2,11,1);X(6,4,7,3);X(12,10,5,9);X(8,6,9,5);X(2,12,3,11);X(4,8,1,7)",
    ]);
    assert_eq!(stdout(&o), "lk(0,1) = 2\n");
}

#[test]
fn a2_of_link_is_an_input_error() {
    let o = knotpoly(&[
        "a2",
        "--pd",
        "X(10,2,11,1);X(6,4,7,3);X(12,10,5,9);X(8,6,9,5);X(2,12,3,11);X(4,8,1,7)",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn pd_from_file() {
    let path = std::env::temp_dir().join(format!("knotpoly-cli-{}.pd", std::process::id()));
    std::fs::write(&path, format!("{TREFOIL}\n")).unwrap();
    let o = knotpoly(&["conway", "--file", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(stdout(&o), "1+z^2\n");
}

#[test]
fn json_output() {
    let o = knotpoly(&["conway", "--pd", TREFOIL, "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["command"], "conway");
    assert_eq!(v["input"], TREFOIL);
    assert_eq!(v["result"], "1+z^2");
    let text = knotpoly(&["conway", "--pd", TREFOIL]);
    assert_eq!(stdout(&text).trim(), v["result"]);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(
        knotpoly(&["conway", "--pd", "X(1,2"]).status.code(),
        Some(2)
    );
    assert_eq!(
        knotpoly(&["conway", "--pd", "O", "--file", "x"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(knotpoly(&["conway"]).status.code(), Some(2));
    assert_eq!(knotpoly(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(knotpoly(&["torus", "--m", "0"]).status.code(), Some(2));
    let o = knotpoly(&["conway", "--pd", "X(1,2,3,4)"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
}

#[test]
fn budget_exhaustion_exits_1() {
    let o = knotpoly(&["conway", "--pd", TREFOIL, "--budget", "1"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verbose_prints_stats_to_stderr() {
    let o = knotpoly(&["conway", "--pd", TREFOIL, "-v"]);
    assert_eq!(stdout(&o), "1+z^2\n");
    assert!(String::from_utf8_lossy(&o.stderr).contains("nodes expanded"));
}

#[test]
fn verify_passes() {
    let o = knotpoly(&["verify", "--max-n", "50"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().last(), Some("ALL CHECKS PASSED"));
}

#[test]
fn verify_json_lines() {
    let o = knotpoly(&[
        "verify", "--max-n", "3", "--max-l", "3", "--max-r", "3", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<serde_json::Value> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert!(lines.len() >= 20);
    assert!(lines
        .iter()
        .all(|v| v["passed"] == true && v["check_name"].is_string()));
}

#[test]
fn verify_with_corrupted_table_exits_1() {
    let table: serde_json::Value =
        serde_json::from_str(knotpoly::table::DEFAULT_TABLE_JSON).unwrap();
    let mut table = table;
    for e in table.as_array_mut().unwrap() {
        if e["name"] == "8_19" {
            e["conway"] = "1+5z^2+4z^4+z^6".into();
        }
    }
    let path = std::env::temp_dir().join(format!("knotpoly-table-{}.json", std::process::id()));
    std::fs::write(&path, table.to_string()).unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_knotpoly"))
        .args(["verify", "--max-n", "3", "--max-l", "3", "--max-r", "3"])
        .env("KNOT_TABLE", &path)
        .output()
        .unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("FAIL table/8_19"), "{out}");
    assert!(out.lines().last().unwrap().contains("CHECKS FAILED"));
}

#[test]
fn unreadable_table_is_usage_error() {
    let o = Command::new(env!("CARGO_BIN_EXE_knotpoly"))
        .args(["verify", "--max-n", "3"])
        .env("KNOT_TABLE", "/nonexistent/table.json")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}
