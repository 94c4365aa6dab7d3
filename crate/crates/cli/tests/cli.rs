use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn msm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_msm")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn value_line(o: &Output) -> (f64, f64) {
    let text = stdout(o);
    let line = text.lines().find(|l| l.starts_with("value:")).expect("value line");
    let mut parts = line["value:".len()..].split_whitespace().map(|t| t.parse::<f64>().unwrap());
    (parts.next().unwrap(), parts.next().unwrap())
}

const BASE: &str = "fixed.alpha = 0.5\nfixed.alpha_p = 0\nfixed.beta = 0.2\nfixed.beta_p = 0.4\n\
                    fixed.gamma = 1.5\nfixed.p = 0.5\nfixed.b = 1\nfixed.c = 1\n";

fn write_grid(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn eval_left_wright_matches_termwise() {
    // Riemann–Liouville order 1.2 applied to t^{0.5} J_{0.5}(t)
    let common = [
        "--side", "left", "--alpha", "1.2", "--gamma", "1.2", "--rho", "1.5", "--p", "0.5", "--b", "1", "--c", "1",
        "--x", "1.3",
    ];
    let mut a: Vec<&str> = vec!["eval", "--route", "wright"];
    a.extend(common);
    let wright = msm(&a);
    assert_eq!(wright.status.code(), Some(0), "{}", String::from_utf8_lossy(&wright.stderr));
    let mut b: Vec<&str> = vec!["eval", "--route", "termwise"];
    b.extend(common);
    let termwise = msm(&b);
    let (w, t) = (value_line(&wright), value_line(&termwise));
    assert!((w.0 - t.0).abs() <= 1e-10 * w.0.abs());
    assert!(stdout(&wright).contains("terms_used:"));
    assert!(stdout(&wright).contains("tail_estimate:"));
}

#[test]
fn eval_rejects_nonpositive_gamma() {
    let o = msm(&["eval", "--side", "left", "--route", "wright", "--gamma", "-0.5", "--rho", "1", "--c", "1", "--x", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("Re(γ) > 0"));
}

#[test]
fn eval_cosine_gives_sine() {
    for route in ["wright", "hyp6f7", "termwise", "quadrature"] {
        let o = msm(&[
            "eval", "--side", "left", "--route", route, "--kind", "cos", "--gamma", "1", "--rho", "1", "--c", "1", "--x",
            "1",
        ]);
        assert_eq!(o.status.code(), Some(0), "{route}");
        let (re, _) = value_line(&o);
        assert!((re - 1f64.sin()).abs() < 1e-10, "{route}: {re}");
    }
}

#[test]
fn eval_term_cap_is_a_convergence_failure() {
    let o = Command::new(env!("CARGO_BIN_EXE_msm"))
        .args(["eval", "--side", "left", "--route", "wright", "--gamma", "1.1", "--rho", "1.2", "--c", "50", "--x", "3"])
        .env("MSM_MAX_TERMS", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("converged: false"));
}

#[test]
fn bad_arguments_exit_four() {
    assert_eq!(msm(&["eval", "--side", "up"]).status.code(), Some(4));
    assert_eq!(msm(&["grid", "expand", "--grid", "/nonexistent/grid"]).status.code(), Some(4));
}

#[test]
fn grid_expand() {
    let dir = tempfile::tempdir().unwrap();
    let one = write_grid(dir.path(), "one.grid", &format!("{BASE}fixed.rho = 1.2\nfixed.x = 1\n"));
    let o = msm(&["grid", "expand", "--grid", one.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 1);
    assert!(stdout(&o).contains("admissible=true"));

    let nine = write_grid(
        dir.path(),
        "nine.grid",
        &format!("{BASE}rho.start = 1\nrho.stop = 2\nrho.count = 3\nx.start = 0.5\nx.stop = 1.5\nx.count = 3\n"),
    );
    let o = msm(&["grid", "expand", "--grid", nine.to_str().unwrap()]);
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(lines.len(), 9);
    assert!(lines[0].contains("rho=1 ") && lines[0].contains("x=0.5"));
    assert!(lines[1].contains("rho=1 ") && lines[1].contains("x=1"));
    assert!(lines[3].contains("rho=1.5 ") && lines[3].contains("x=0.5"));

    let bad = write_grid(dir.path(), "bad.grid", &format!("{BASE}fixed.x = 1\nrho.start = 1\nrho.stop = 2\nrho.count = 0\n"));
    let o = msm(&["grid", "expand", "--grid", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn verify_inadmissible_grid_reports_nothing() {
    let dir = tempfile::tempdir().unwrap();
    // left image needs Re ρ + p > 0
    let grid = write_grid(dir.path(), "none.grid", &format!("{BASE}fixed.rho = -3\nfixed.x = 1\n"));
    let out = dir.path().join("r.json");
    let o = msm(&["verify", "--grid", grid.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("warning"));
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(report["summary"]["cases"], 0);
    assert!(!report["warnings"].as_array().unwrap().is_empty());
}

#[test]
fn verify_writes_csv_and_audit() {
    let dir = tempfile::tempdir().unwrap();
    let grid = write_grid(
        dir.path(),
        "audit.grid",
        &format!("{BASE}rho.start = 1\nrho.stop = 2\nrho.count = 2\nfixed.x = 1.2\naudit = true\n"),
    );
    let out = dir.path().join("r.json");
    let csv = dir.path().join("r.csv");
    let o = msm(&[
        "verify", "--grid", grid.to_str().unwrap(), "--out", out.to_str().unwrap(), "--csv", csv.to_str().unwrap(),
        "--quad-nodes", "100",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let rows = std::fs::read_to_string(csv).unwrap();
    assert_eq!(rows.lines().count(), 1 + 2 * 3);
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    let audit = report["printed_formula_audit"].as_array().unwrap();
    assert_eq!(audit.len(), 2);
    // β ≠ 0 here, so the printed left 6F7 statement disagrees
    assert_eq!(audit[0]["mismatches"][0], "bessel/left/6F7");
    assert_eq!(report["config"]["quadrature_nodes"], 100);
}
