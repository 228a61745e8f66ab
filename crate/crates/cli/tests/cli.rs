use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dualsl2"))
        .args(args)
        .env_remove("DUALSL2_GROUP_BUDGET")
        .env_remove("DUALSL2_DIXON_BUDGET")
        .output()
        .expect("spawn dualsl2")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_all_q3_json() {
    let o = run(&["verify", "--q", "3", "--all", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["status"], "PASS");
    let reports = v["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 9);
    for r in reports {
        assert_eq!(r["status"], "PASS", "{}", r["check"]);
        assert_eq!(r["q"], 3);
    }
    assert_eq!(reports[0]["check"], "field");
    assert_eq!(reports[8]["check"], "realize");
}

#[test]
fn even_q_is_a_config_error() {
    let o = run(&["verify", "--q", "4"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("q must be odd"));
    assert!(o.stdout.is_empty());
}

#[test]
fn non_prime_power_is_a_config_error() {
    let o = run(&["order", "--q", "15"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn chartab_both_methods_agree() {
    let o = run(&["chartab", "--q", "3", "--method", "both"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("tables agree up to row permutation: true"));
    assert!(s.contains("method little_group"));
    assert!(s.contains("method dixon"));
}

#[test]
fn chartab_json_schema() {
    let o = run(&["chartab", "--q", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["q"], 3);
    assert_eq!(v["group_order"], 648);
    assert_eq!(v["classes"].as_array().unwrap().len(), 25);
    let irr = v["irreducibles"].as_array().unwrap();
    assert_eq!(irr.len(), 25);
    let sq: i64 = irr
        .iter()
        .map(|r| r["degree"].as_i64().unwrap().pow(2))
        .sum();
    assert_eq!(sq, 648);
}

#[test]
fn dim_table_csv_q5() {
    let o = run(&["dim-table", "--q", "5", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    let lines: Vec<&str> = s.lines().collect();
    assert_eq!(lines[0], "dim,count");
    assert!(lines.contains(&"sum,49"));
    assert!(lines.contains(&"sum_dim_sq,15000"));
}

#[test]
fn dim_table_large_q_needs_no_group() {
    // |G2^F| for q = 27 is far beyond the enumeration budget
    let o = run(&["dim-table", "--q", "27", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("sum_dim_sq,386889048"));
}

#[test]
fn group_budget_override() {
    let o = Command::new(env!("CARGO_BIN_EXE_dualsl2"))
        .args(["order", "--q", "3"])
        .env("DUALSL2_GROUP_BUDGET", "100")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("budget"));
}

#[test]
fn output_is_deterministic_across_thread_counts() {
    let a = run(&["verify", "--q", "3", "--format", "json", "--threads", "1"]);
    let b = run(&["verify", "--q", "3", "--format", "json", "--threads", "4"]);
    let c = run(&["verify", "--q", "3", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("dualsl2-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("order.json");
    let o = run(&[
        "order",
        "--q",
        "3",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["details"]["order"], 648);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn selected_checks_run_in_dependency_order() {
    let o = run(&[
        "verify", "--q", "3", "--check", "theorem", "--check", "field", "--format", "csv",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "check,q,status\nfield,3,PASS\ntheorem,3,PASS\n");
}
