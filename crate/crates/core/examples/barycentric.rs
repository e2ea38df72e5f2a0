//! Regularized barycentric forms against their series counterparts.

use regapprox::barycentric::{build_l1_form, build_l2_form};
use regapprox::basis::BasisKind;
use regapprox::quadrature::gauss_rule;
use regapprox::regsolve::{fit, PenaltySpec, Solver};

fn main() {
    let basis = BasisKind::ChebyshevFirstKind;
    let n = 40;
    let rule = gauss_rule(basis, n).unwrap();
    let f: Vec<f64> = rule.nodes().iter().map(|x| 1.0 / (1.0 + 25.0 * x * x)).collect();
    let penalty = PenaltySpec::constant(n, 0.05, 1.0).unwrap();

    let l2 = build_l2_form(&rule, &f, &penalty).unwrap();
    let l1 = build_l1_form(&rule, &f, &penalty).unwrap();
    let s2 = fit(basis, n, &rule, &f, &penalty, Solver::L2).unwrap();
    let s1 = fit(basis, n, &rule, &f, &penalty, Solver::L1).unwrap();

    println!("denominator scale of the l2 form: {}", l2.denom_scale);
    for x in [-0.8, -0.31, 0.05, 0.5, 0.97] {
        println!(
            "x = {x:+.2}  l2 bary {:+.12}  series {:+.12} | l1 bary {:+.12}  series {:+.12}",
            l2.eval(x),
            s2.eval(x).unwrap(),
            l1.eval(x),
            s1.eval(x).unwrap()
        );
    }
}
