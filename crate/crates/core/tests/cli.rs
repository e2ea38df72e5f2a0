use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2};
use std::process::{Command, Output};

use serde_json::Value;

fn regapprox(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_regapprox"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = regapprox(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut v = args.to_vec();
    v.extend(["--format", "json"]);
    serde_json::from_str(&stdout(&v)).unwrap()
}

fn column(doc: &Value, name: &str) -> Vec<Value> {
    let i = doc["columns"]
        .as_array()
        .unwrap()
        .iter()
        .position(|c| c == name)
        .unwrap();
    doc["rows"].as_array().unwrap().iter().map(|r| r[i].clone()).collect()
}

fn summary(doc: &Value, key: &str) -> f64 {
    doc["summary"][key].as_f64().unwrap()
}

#[test]
fn chebyshev_rule_with_two_nodes() {
    let csv = stdout(&["rule", "--basis", "chebyshev1", "--n", "1"]);
    let rows: Vec<Vec<f64>> = csv
        .lines()
        .filter(|l| !l.starts_with('#'))
        .skip(1)
        .map(|l| l.split(',').map(|c| c.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), 2);
    assert!((rows[0][1] + FRAC_1_SQRT_2).abs() < 1e-10);
    assert!((rows[1][1] - FRAC_1_SQRT_2).abs() < 1e-10);
    assert!(rows.iter().all(|r| (r[2] - FRAC_PI_2).abs() < 1e-10));
}

#[test]
fn legendre_rule_middle_row() {
    let doc = json(&["rule", "--basis", "legendre", "--n", "2"]);
    let mid = &doc["rows"][1];
    assert_eq!(mid[0], 1);
    assert_eq!(mid[1].as_f64().unwrap(), 0.0);
    assert!((mid[2].as_f64().unwrap() - 0.8888888889).abs() < 1e-10);
}

#[test]
fn negative_node_count_fails() {
    let out = regapprox(&["rule", "--n", "-1"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("N must be nonnegative"));
}

#[test]
fn header_records_config_and_seed() {
    let csv = stdout(&["denoise", "--seed", "7", "--grid-size", "5"]);
    let header = csv.lines().next().unwrap();
    let config: Value = serde_json::from_str(header.strip_prefix("# regapprox denoise ").unwrap()).unwrap();
    assert_eq!(config["seed"], 7);
    assert_eq!(config["effective"]["mu"], "filter");
    assert!(csv.lines().last().unwrap().starts_with("# summary "));
}

#[test]
fn regularization_does_not_help_clean_data() {
    let base = ["fit", "--signal", "oscillatory", "--n", "600", "--l", "200", "--solver", "l2"];
    let e0 = summary(&json(&[&base[..], &["--lambda", "0"]].concat()), "uniform_error");
    let e1 = summary(&json(&[&base[..], &["--lambda", "0.1"]].concat()), "uniform_error");
    assert!(e0 <= e1, "{e0} vs {e1}");
}

#[test]
fn constant_signal_is_reproduced() {
    for (n, l) in [("4", "2"), ("30", "30"), ("10", "21")] {
        let doc = json(&["fit", "--signal", "one", "--n", n, "--l", l, "--basis", "legendre"]);
        assert!(summary(&doc, "uniform_error") <= 1e-12);
    }
}

#[test]
fn basis_polynomial_gives_unit_coefficient() {
    let doc = json(&["fit", "--signal", "phi2", "--n", "8", "--l", "5"]);
    for (i, b) in column(&doc, "beta").iter().enumerate() {
        let expect = if i == 2 { 1.0 } else { 0.0 };
        assert!((b.as_f64().unwrap() - expect).abs() < 1e-12);
    }
}

#[test]
fn denoising_the_gate_spectrum() {
    let doc = json(&[
        "denoise", "--signal", "gate", "--n", "100", "--l", "30", "--lambda", "0.1", "--mu", "filter",
        "--solver", "l1", "--seed", "42",
    ]);
    assert!(summary(&doc, "l2_error_fit") < summary(&doc, "l2_error_noisy"));
}

#[test]
fn noiseless_denoise_matches_clean_fit() {
    let d = json(&["denoise", "--snr-db", "inf", "--lambda", "0", "--grid-size", "9", "--l", "12", "--solver", "l2", "--mu", "constant:1"]);
    assert_eq!(summary(&d, "l2_error_noisy"), 0.0);
    let f = json(&["fit", "--signal", "gate", "--n", "100", "--l", "12", "--lambda", "0", "--grid-size", "9"]);
    assert_eq!(summary(&d, "uniform_error_fit"), summary(&f, "uniform_error"));
}

#[test]
fn lambda_sweep_reports_best_lambda() {
    let doc = json(&["denoise", "--lambda-grid=-15:5:0.5"]);
    let lambdas = column(&doc, "lambda");
    assert_eq!(lambdas.len(), 41);
    let errors: Vec<f64> = column(&doc, "l2_error").iter().map(|v| v.as_f64().unwrap()).collect();
    let best = errors.iter().cloned().fold(f64::INFINITY, f64::min);
    let i = errors.iter().position(|e| *e == best).unwrap();
    assert_eq!(lambdas[i].as_f64().unwrap(), summary(&doc, "best_lambda"));
}

#[test]
fn lebesgue_values_below_bound() {
    let doc = json(&["lebesgue", "--basis", "chebyshev1", "--l-range", "1:60", "--lambda", "0.1", "--mu", "constant:1"]);
    let values = column(&doc, "value");
    let bounds = column(&doc, "bound");
    assert_eq!(values.len(), 60);
    assert!(bounds[0].is_null());
    for (v, b) in values.iter().zip(&bounds).skip(1) {
        assert!(v.as_f64().unwrap() <= b.as_f64().unwrap());
    }
}

#[test]
fn sparsity_columns() {
    let doc = json(&["sparsity", "--l-range", "1:60", "--lambda", "0"]);
    for (b, a) in column(&doc, "nnz_beta").iter().zip(column(&doc, "nnz_alpha")) {
        assert_eq!(*b, a);
    }
    let doc = json(&["sparsity", "--l-range", "1:60", "--lambda", "0.1"]);
    assert!(column(&doc, "identity_holds").iter().all(|v| v == true));
}

#[test]
fn barycentric_needs_square_degree() {
    let out = regapprox(&["denoise", "--solver", "bary-l1", "--n", "20", "--l", "10"]);
    assert!(!out.status.success());
    stdout(&["denoise", "--solver", "bary-l1", "--n", "20", "--l", "20", "--mu", "constant:1"]);
}

#[test]
fn zero_signal_has_undefined_snr() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("zero.csv");
    let rule = regapprox::quadrature::gauss_rule(regapprox::basis::BasisKind::ChebyshevFirstKind, 4).unwrap();
    let text: String = rule.nodes().iter().map(|x| format!("{x:.17e},0\n")).collect();
    std::fs::write(&path, text).unwrap();
    let p = path.to_str().unwrap();
    let out = regapprox(&["denoise", "--input", p, "--n", "4", "--l", "2"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("SNR"));
    // the same file fits fine without noise
    stdout(&["fit", "--input", p, "--n", "4", "--l", "2"]);
    let out = regapprox(&["fit", "--input", p, "--n", "5"]);
    assert!(!out.status.success());
}

#[test]
fn output_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rule.csv");
    stdout(&["rule", "--n", "3", "--output", path.to_str().unwrap()]);
    assert_eq!(std::fs::read_to_string(&path).unwrap(), stdout(&["rule", "--n", "3"]));
}
