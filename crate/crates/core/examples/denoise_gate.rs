//! Recovering the gate spectrum from samples with 10 dB of white noise.

use regapprox::analysis::l2_error;
use regapprox::basis::BasisKind;
use regapprox::quadrature::gauss_rule;
use regapprox::regsolve::{filter_penalties, fit, Solver};
use regapprox::signals::{add_noise, gate_spectrum};

fn main() {
    let basis = BasisKind::ChebyshevFirstKind;
    let (n, l) = (100, 30);
    let rule = gauss_rule(basis, n).unwrap();
    let clean: Vec<f64> = rule.nodes().iter().map(|&x| gate_spectrum(x)).collect();
    let noisy = add_noise(&clean, 10.0, 42).unwrap();
    println!("sigma = {:.6}", noisy.sigma);
    println!(
        "noisy samples: L2 error {:.6}",
        l2_error(&rule, &clean, &noisy.values).unwrap()
    );

    let mut best = (f64::INFINITY, 0.0);
    for k in 0..=40 {
        let lambda = 10f64.powf(-15.0 + 0.5 * k as f64);
        let penalty = filter_penalties(l, lambda).unwrap();
        let r = fit(basis, l, &rule, &noisy.values, &penalty, Solver::L1).unwrap();
        let p: Vec<f64> = rule.nodes().iter().map(|&x| r.eval(x).unwrap()).collect();
        let err = l2_error(&rule, &clean, &p).unwrap();
        if err < best.0 {
            best = (err, lambda);
        }
        if k % 4 == 0 {
            println!("lambda = {lambda:8.1e}  L2 error {err:.6}");
        }
    }
    println!("best lambda {:.1e} with L2 error {:.6}", best.1, best.0);
}
