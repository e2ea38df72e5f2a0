//! Lebesgue constants of the regularized projection and their reference curves.

use regapprox::analysis::{eta, lebesgue_chebyshev, lebesgue_legendre};
use regapprox::regsolve::{filter_penalties, PenaltySpec};

fn main() {
    println!("eta = {:.6}", eta());
    println!("{:>4} {:>10} {:>10} {:>10} {:>10} {:>10}", "L", "cheb", "bound", "cheb λ=.1", "legendre", "filter");
    for l in [2, 5, 10, 20, 50, 100] {
        let plain = lebesgue_chebyshev(l, &PenaltySpec::none(l)).unwrap();
        let reg = lebesgue_chebyshev(l, &PenaltySpec::constant(l, 0.1, 1.0).unwrap()).unwrap();
        let leg = lebesgue_legendre(l, &PenaltySpec::none(l)).unwrap();
        let filt = lebesgue_chebyshev(l, &filter_penalties(l, 0.1).unwrap()).unwrap();
        println!(
            "{l:>4} {:>10.5} {:>10.5} {:>10.5} {:>10.5} {:>10.5}",
            plain.value,
            plain.bound.unwrap(),
            reg.value,
            leg.value,
            filt.value
        );
    }
}
