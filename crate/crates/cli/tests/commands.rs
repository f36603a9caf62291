use std::process::{Command, Output};

fn ncweyl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ncweyl")).args(args).env_remove("NCWEYL_FORMAT").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("json report")
}

#[test]
fn verify_defaults_pass() {
    let o = ncweyl(&["verify", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v = json(&o);
    assert_eq!(v["command"], "verify");
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.len() >= 30);
    assert!(checks.iter().all(|c| c["status"] != "fail"));
    assert!(checks.iter().any(|c| c["id"].as_str().unwrap().starts_with("num_")));
    assert_eq!(v["params"]["eta"], "0.1");
}

#[test]
fn verify_filter_selects_tilde_phase_space() {
    let v = json(&ncweyl(&["verify", "--filter", "eq_4_3", "--format", "json"]));
    let ids: Vec<&str> = v["checks"].as_array().unwrap().iter().map(|c| c["id"].as_str().unwrap()).collect();
    assert_eq!(ids, ["eq_4_3_xx", "eq_4_3_pp", "eq_4_3_xp", "eq_4_3_xdpd", "eq_4_3_xpd", "eq_4_3_xdp"]);
}

#[test]
fn verify_unknown_filter_warns() {
    let o = ncweyl(&["verify", "--filter", "nosuch", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("warning"));
    assert!(json(&o)["checks"].as_array().unwrap().is_empty());
}

#[test]
fn verify_numeric_filter() {
    let o = ncweyl(&["verify", "--filter", "num_spectrum", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    let rows: Vec<&str> = s.lines().collect();
    assert_eq!(rows[0], "id,status,anchor,residual");
    assert_eq!(rows.len(), 3);
}

#[test]
fn spectrum_ground_row() {
    let o = ncweyl(&["spectrum"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    let row: Vec<&str> = s.lines().nth(1).unwrap().split(',').collect();
    assert_eq!(&row[..2], ["0", "0"]);
    let lambda: f64 = row[2].parse().unwrap();
    let residual: f64 = row[4].parse().unwrap();
    assert!((lambda - 1.0).abs() < 1e-10);
    assert!(residual < 1e-10);
}

#[test]
fn spectrum_commutative_limit_is_degenerate() {
    let o = ncweyl(&["spectrum", "--theta", "0", "--eta", "0"]);
    assert_eq!(o.status.code(), Some(0));
    for line in stdout(&o).lines().skip(1) {
        let f: Vec<&str> = line.split(',').collect();
        let (n1, n2): (f64, f64) = (f[0].parse().unwrap(), f[1].parse().unwrap());
        let lambda: f64 = f[2].parse().unwrap();
        assert!((lambda - (n1 + n2 + 1.0)).abs() < 1e-12, "{line}");
    }
}

#[test]
fn spectrum_splitting_with_derived_eta() {
    let v = json(&ncweyl(&["spectrum", "--theta", "0.04", "--mu", "1", "--omega", "1", "--format", "json"]));
    assert_eq!(v["params"]["eta"], "0.04");
    let xi2 = 1.0 / (1.0 + 0.04f64 * 0.04 / 4.0);
    let want = 2.0 * xi2 * 0.04;
    assert!((v["splitting"].as_f64().unwrap() - want).abs() < 1e-10);
    assert!((v["splitting"].as_f64().unwrap() - 0.0799).abs() < 1e-4);
}

#[test]
fn spectrum_off_constraint_fails() {
    let o = ncweyl(&["spectrum", "--theta", "0.1", "--eta", "0.3", "--nmax", "10"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("n1,n2,lambda,formula,residual\n"));
}

#[test]
fn expr_examples() {
    let o = ncweyl(&["expr", "commutator", "xh1", "ph1", "--algebra", "deformed"]);
    assert_eq!(stdout(&o).trim(), "i*hbar");
    let o = ncweyl(&["expr", "normal-order", "ph1*xh1", "--algebra", "deformed"]);
    assert_eq!(stdout(&o).trim(), "xh1*ph1 - i*hbar");
    let o = ncweyl(&["expr", "vev", "ah2*adj(ah1)", "--algebra", "hatbose"]);
    assert_eq!(stdout(&o).trim(), "-(i/hbar)*xi^2*theta^(1/2)*eta^(1/2)");
}

#[test]
fn expr_numeric_shadow() {
    let v = json(&ncweyl(&["expr", "commutator", "xh1", "xh2", "--numeric", "--format", "json"]));
    assert_eq!(v["result"], "i*xi^2*theta");
    let im = v["numeric"]["value"][1].as_f64().unwrap();
    assert!((im - 0.1 / (1.0 + 0.01 / 4.0)).abs() < 1e-14);
    assert!(v["numeric"]["residual"].as_f64().unwrap() < 1e-10);
}

#[test]
fn expr_parse_error_has_location() {
    let o = ncweyl(&["expr", "normal-order", "xh1*(ph1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("1:9"));
    let o = ncweyl(&["expr", "normal-order", "a1", "--algebra", "deformed"]);
    assert_eq!(o.status.code(), Some(2));
    let o = ncweyl(&["expr", "commutator", "xh1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn constraint_examples() {
    let v = json(&ncweyl(&["constraint", "oscillator", "--mu", "1", "--omega", "1", "--theta", "0.1"]));
    assert_eq!(v["eta"].as_f64(), Some(0.1));
    assert_eq!(v["K"], "mu^2*omega^2");
    assert_eq!(v["gamma"], "1");
    let v = json(&ncweyl(&["constraint", "oscillator", "--theta", "0"]));
    assert_eq!(v["eta"].as_f64(), Some(0.0));
    let v = json(&ncweyl(&["constraint", "oscillator", "--mu", "2", "--omega", "3", "--theta", "0.01"]));
    assert!((v["eta"].as_f64().unwrap() - 0.36).abs() < 1e-15);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["constraint", "pendulum"][..],
        &["spectrum", "--theta", "abc"],
        &["spectrum", "--mu", "-1"],
        &["spectrum", "--nmax", "3"],
        &["spectrum", "--buffer", "0"],
        &["nosuch"],
    ] {
        assert_eq!(ncweyl(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn output_file_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let p = path.to_str().unwrap();
    let o = ncweyl(&["verify", "--filter", "eq_3", "--format", "json", "--output", p]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let first = std::fs::read(&path).unwrap();
    let v: serde_json::Value = serde_json::from_slice(&first).unwrap();
    assert_eq!(v["artifacts"][0], p);
    ncweyl(&["verify", "--filter", "eq_3", "--format", "json", "--output", p]);
    assert_eq!(std::fs::read(&path).unwrap(), first);
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
    assert_eq!(stdout(&ncweyl(&["spectrum", "--nmax", "8"])), stdout(&ncweyl(&["spectrum", "--nmax", "8"])));
}

#[test]
fn format_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_ncweyl"))
        .args(["constraint", "--theta", "0.1"])
        .env("NCWEYL_FORMAT", "text")
        .output()
        .unwrap();
    assert!(stdout(&o).starts_with("system oscillator\n"));
}
