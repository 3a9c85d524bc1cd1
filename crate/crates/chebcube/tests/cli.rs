//! End-to-end tests of the `chebcube` binary: exit codes, CSV shapes, and
//! reproducibility of file output.

use std::process::{Command, Output};

use tempfile::tempdir;

fn chebcube(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chebcube"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

#[test]
fn rule_export_csv_shape() {
    let dir = tempdir().unwrap();
    let path = dir.path().join("r.csv");
    let out = chebcube(&[
        "rule", "--dim", "3", "--n", "4", "--sigma", "EEE", "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).contains("wrote 35 nodes"));

    let csv = std::fs::read_to_string(&path).unwrap();
    assert!(!csv.contains('\r'), "LF line endings only");
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "x1,x2,x3,weight");
    assert_eq!(lines.len(), 1 + 35);
    let weight_sum: f64 = lines[1..]
        .iter()
        .map(|l| l.rsplit(',').next().unwrap().parse::<f64>().unwrap())
        .sum();
    assert!((weight_sum - 1.0).abs() < 1e-13);
}

#[test]
fn rule_export_lebesgue_weights() {
    let dir = tempdir().unwrap();
    let path = dir.path().join("cc.csv");
    let out = chebcube(&[
        "rule", "--dim", "3", "--n", "4", "--sigma", "EEE", "--measure", "lebesgue", "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let csv = std::fs::read_to_string(&path).unwrap();
    let weight_sum: f64 = csv
        .lines()
        .skip(1)
        .map(|l| l.rsplit(',').next().unwrap().parse::<f64>().unwrap())
        .sum();
    assert!((weight_sum - 8.0).abs() < 1e-12, "lambda sums to the cube volume");
}

#[test]
fn integrate_reports_error_lines() {
    let out = chebcube(&["integrate", "--fn", "EXP", "--rule", "sigma-EEO", "--n", "8"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("approx"));
    assert!(text.contains("reference"));
    assert!(text.contains("rel_error"));
}

#[test]
fn cc_integrates_runge() {
    let out = chebcube(&["cc", "--n", "12", "--sigma", "EEE", "--fn", "RUNGE"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("cc n=12 sigma=EEE"));
    let rel: f64 = text
        .lines()
        .find(|l| l.starts_with("rel_error"))
        .and_then(|l| l.rsplit(' ').next())
        .unwrap()
        .parse()
        .unwrap();
    assert!(rel < 1e-1 && rel > 0.0);
}

#[test]
fn hyper_writes_coefficients_and_grid_note() {
    let dir = tempdir().unwrap();
    let path = dir.path().join("c.csv");
    let out = chebcube(&[
        "hyper", "--n", "4", "--fn", "GAUSSIAN", "--coeffs-out",
        path.to_str().unwrap(), "--control-grid", "11",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("# control grid: 11^3 equispaced"));
    let csv = std::fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "alpha1,alpha2,alpha3,c");
    // dim of the total-degree space: (4+1)(4+2)(4+3)/6
    assert_eq!(lines.len(), 1 + 35);
}

#[test]
fn bench_csv_deterministic() {
    let dir = tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for path in [&a, &b] {
        let out = chebcube(&[
            "bench", "--suite", "EXP,RUNGE", "--rules", "sigma-EEE,gauss-cheb",
            "--n-min", "2", "--n-max", "6", "--stride", "2", "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    }
    let first = std::fs::read(&a).unwrap();
    let second = std::fs::read(&b).unwrap();
    assert_eq!(first, second, "repeated runs are byte-identical");

    let text = String::from_utf8(first).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "# n range: 2..=6 stride 2");
    assert_eq!(
        lines.next().unwrap(),
        "rule,measure,n,nodes,function,approx,reference,rel_error"
    );
    // 2 rules x 2 functions x 3 degrees
    assert_eq!(lines.count(), 12);
}

#[test]
fn invalid_arguments_exit_2() {
    // malformed sigma letter
    let dir = tempdir().unwrap();
    let path = dir.path().join("r.csv");
    let out = chebcube(&[
        "rule", "--dim", "3", "--n", "4", "--sigma", "EOX", "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!path.exists());

    // unknown function id
    let out = chebcube(&["integrate", "--fn", "SINC", "--n", "4"]);
    assert_eq!(out.status.code(), Some(2));

    // missing required argument (clap usage error)
    let out = chebcube(&["rule", "--dim", "3"]);
    assert_eq!(out.status.code(), Some(2));

    // lebesgue rules exist only in dimension 3
    let out = chebcube(&[
        "rule", "--dim", "2", "--n", "4", "--sigma", "EO", "--measure", "lebesgue", "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn help_exits_zero() {
    let out = chebcube(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("bench"));
}
