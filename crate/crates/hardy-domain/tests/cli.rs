use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hardy-domain"))
}

fn stdout_of(args: &[&str]) -> String {
    let out = bin().args(args).output().expect("binary runs");
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn norm_of_transformed_indicator_in_weak_l1() {
    assert_eq!(stdout_of(&["norm", "L1w", "S(chi(0,1))"]).trim(), "1");
}

#[test]
fn measure_of_dyadic_block_in_linf() {
    assert_eq!(stdout_of(&["measure", "Linf", "[4,8)"]).trim(), "0.5");
}

#[test]
fn eval_uses_g_formatting() {
    assert_eq!(stdout_of(&["eval", "t^(-2) on (1,inf)", "2"]).trim(), "0.25");
    assert_eq!(stdout_of(&["eval", "chi(0,1)", "5"]).trim(), "0");
}

#[test]
fn usage_errors_exit_2() {
    let out = bin().arg("bogus-cmd").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin().args(["norm", "L1"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin().args(["norm", "NoSuchSpace", "chi(0,1)"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_single_check_json_is_deterministic() {
    let a = stdout_of(&["verify", "--filter", "a04", "--json"]);
    let b = stdout_of(&["verify", "--filter", "a04", "--json"]);
    assert_eq!(a, b);
    let parsed: serde_json::Value = serde_json::from_str(&a).unwrap();
    let arr = parsed.as_array().unwrap();
    assert_eq!(arr.len(), 1);
    assert_eq!(arr[0]["id"], "a04");
    assert_eq!(arr[0]["anchor"], "optimal-domain-endpoint-verdicts");
    assert_eq!(arr[0]["status"], "pass");
    for key in ["lhs", "rhs", "tol"] {
        assert!(arr[0][key].is_number(), "{key} missing");
    }
}

#[test]
fn verify_csv_has_matching_columns() {
    let csv = stdout_of(&["verify", "--filter", "a04", "--csv"]);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("id,anchor,status,lhs,rhs,tol"));
    let row = lines.next().unwrap();
    assert!(row.starts_with("a04,optimal-domain-endpoint-verdicts,pass,"));
}

#[test]
fn verify_unknown_filter_is_an_error() {
    let out = bin().args(["verify", "--filter", "zzz"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn plot_data_writes_two_column_csv() {
    let path = std::env::temp_dir().join("hardy_domain_plot_test.csv");
    let _ = std::fs::remove_file(&path);
    stdout_of(&["plot-data", "a10", "--out", path.to_str().unwrap()]);
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.lines().count() >= 5);
    for line in text.lines() {
        let cols: Vec<&str> = line.split(',').collect();
        assert_eq!(cols.len(), 2, "line {line:?}");
        cols.iter().for_each(|c| {
            c.parse::<f64>().unwrap();
        });
    }
    let _ = std::fs::remove_file(&path);
}

#[test]
fn flags_win_over_config_file() {
    let path = std::env::temp_dir().join("hardy_domain_cfg_test.toml");
    std::fs::write(&path, "tol = 0.5\ngrid = 7\n").unwrap();
    // A bad tol in the config would not break eval; a bad env var must.
    let out = bin()
        .args(["--config", path.to_str().unwrap(), "eval", "chi(0,1)", "0.5"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let out = bin()
        .env("HARDY_DOMAIN_TOL", "not-a-number")
        .args(["eval", "chi(0,1)", "0.5"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin()
        .env("HARDY_DOMAIN_TOL", "1e-9")
        .args(["eval", "chi(0,1)", "0.5"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let _ = std::fs::remove_file(&path);
}

#[test]
fn member_flags_select_the_space_variant() {
    let base = stdout_of(&["member", "Lp:2", "(1-t)^(-0.5) on (0,1)"]);
    assert!(base.starts_with("NotIn"), "{base}");
    let dom = stdout_of(&["member", "Lp:2", "(1-t)^(-0.5) on (0,1)", "--domain"]);
    assert!(dom.starts_with("In"), "{dom}");
}
