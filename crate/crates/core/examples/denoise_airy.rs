//! Ai(40x) sampled on Legendre nodes, perturbed, and refitted with the
//! barycentric l1 formula.

use regapprox::analysis::l2_error;
use regapprox::barycentric::build_l1_form;
use regapprox::basis::BasisKind;
use regapprox::quadrature::gauss_rule;
use regapprox::regsolve::PenaltySpec;
use regapprox::signals::{add_noise, airy_scaled};

fn main() {
    let basis = BasisKind::Legendre;
    let n = 400;
    let rule = gauss_rule(basis, n).unwrap();
    let clean: Vec<f64> = rule.nodes().iter().map(|&x| airy_scaled(x).unwrap()).collect();
    let noisy = add_noise(&clean, 20.0, 7).unwrap();
    println!("noisy samples: L2 error {:.4e}", l2_error(&rule, &clean, &noisy.values).unwrap());

    for lambda in [0.0, 3e-4, 1e-3, 3e-3, 1e-2] {
        let form = build_l1_form(&rule, &noisy.values, &PenaltySpec::constant(n, lambda, 1.0).unwrap()).unwrap();
        let p: Vec<f64> = rule.nodes().iter().map(|&x| form.eval(x)).collect();
        println!("lambda = {lambda:7.0e}  L2 error {:.4e}", l2_error(&rule, &clean, &p).unwrap());
    }
    for x in [-1.0, -0.5, 0.0, 0.5] {
        println!("Ai(40·{x:+.1}) = {:+.10}", airy_scaled(x).unwrap());
    }
}
