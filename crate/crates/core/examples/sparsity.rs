//! Nonzero counts of l1 coefficients as the degree grows.

use regapprox::analysis::sparsity_report;
use regapprox::basis::BasisKind;
use regapprox::quadrature::gauss_rule;
use regapprox::regsolve::{fit, PenaltySpec, Solver};
use regapprox::signals::test_oscillatory;

fn main() {
    let basis = BasisKind::ChebyshevFirstKind;
    let rule = gauss_rule(basis, 100).unwrap();
    let f: Vec<f64> = rule.nodes().iter().map(|&x| test_oscillatory(x)).collect();
    let lambda = 0.1;
    println!("{:>3} {:>9} {:>9} {:>11} {:>8}", "L", "nnz beta", "nnz alpha", "thresholded", "identity");
    for l in (5..=60).step_by(5) {
        let penalty = PenaltySpec::constant(l, lambda, 1.0).unwrap();
        let r = fit(basis, l, &rule, &f, &penalty, Solver::L1).unwrap();
        let s = sparsity_report(&r.alpha, &r.beta, 0.0, lambda).unwrap();
        println!(
            "{l:>3} {:>9} {:>9} {:>11} {:>8}",
            s.nnz_beta, s.nnz_alpha, s.zero_beta_nonzero_alpha, s.identity_holds
        );
    }
}
