//! l2 and l1 regularized fits of e^x, and the coefficients they produce.

use regapprox::basis::BasisKind;
use regapprox::quadrature::gauss_rule;
use regapprox::regsolve::{fit, PenaltySpec, Solver};

fn main() {
    let basis = BasisKind::Legendre;
    let (n, l) = (32, 10);
    let rule = gauss_rule(basis, n).unwrap();
    let f: Vec<f64> = rule.nodes().iter().map(|x| x.exp()).collect();

    let penalty = PenaltySpec::constant(l, 1e-3, 1.0).unwrap();
    let l2 = fit(basis, l, &rule, &f, &penalty, Solver::L2).unwrap();
    let l1 = fit(basis, l, &rule, &f, &penalty, Solver::L1).unwrap();

    println!("{:>3} {:>12} {:>12} {:>12}", "l", "alpha", "beta l2", "beta l1");
    for i in 0..=l {
        println!("{i:>3} {:>12.4e} {:>12.4e} {:>12.4e}", l2.alpha[i], l2.beta[i], l1.beta[i]);
    }
    for x in [-0.9, 0.0, 0.7] {
        println!(
            "p({x:+.1}) l2 = {:.10}  l1 = {:.10}  exact = {:.10}",
            l2.eval(x).unwrap(),
            l1.eval(x).unwrap(),
            f64::exp(x)
        );
    }
}
