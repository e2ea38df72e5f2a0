//! Gauss rules for both bases and their exactness on monomials.

use regapprox::basis::BasisKind;
use regapprox::quadrature::gauss_rule;

fn main() {
    for basis in [BasisKind::ChebyshevFirstKind, BasisKind::Legendre] {
        let rule = gauss_rule(basis, 4).unwrap();
        println!("{basis}, N = 4");
        for (x, w) in rule.nodes().iter().zip(rule.weights()) {
            println!("  x = {x:>20.16}  w = {w:.16}");
        }
        // degree 2N+1 = 9 is the highest degree integrated exactly
        let even = rule.integrate_fn(|x| x.powi(8));
        let odd = rule.integrate_fn(|x| x.powi(9));
        println!("  ∫ x^8 w = {even:.16}, ∫ x^9 w = {odd:.1e}");
    }
}
