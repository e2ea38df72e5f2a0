//! Diagnostics: Lebesgue constants, sparsity counts, the l1 continuous-limit
//! gap and error metrics.

mod integrate;
pub mod lebesgue;
pub mod metrics;
pub mod sparsity;

use std::f64::consts::PI;

use crate::basis::{eval_classical, BasisKind};
use crate::error::Result;

pub use lebesgue::{
    dirichlet_integral, dirichlet_kernel, eta, lebesgue, lebesgue_chebyshev, lebesgue_legendre,
    LebesgueReport, ETA_PRINTED,
};
pub use metrics::{clustered_grid, l2_error, uniform_error};
pub use sparsity::{sparsity_report, SparsityReport};

use integrate::{integrate_abs, sign_changes, with_ends};

/// `∫_{-1}^{1} |Φ̃_ℓ(x)| dω(x)`.
///
/// The Chebyshev case is integrated in `θ` (`x = cos θ`), which removes the
/// endpoint singularity of the weight.
pub fn abs_moment(basis: BasisKind, degree: usize) -> Result<f64> {
    let norm = basis.normalization(degree);
    let m = 16 * (degree + 1);
    match basis {
        BasisKind::ChebyshevFirstKind => {
            let g = |t: f64| eval_classical(basis, degree, t.cos());
            let samples: Vec<f64> = (0..=m).map(|i| i as f64 * PI / m as f64).collect();
            let breaks = with_ends(0.0, sign_changes(g, &samples), PI);
            Ok(norm * integrate_abs(g, &breaks, m)?)
        }
        BasisKind::Legendre => {
            let g = |x: f64| eval_classical(basis, degree, x);
            let samples: Vec<f64> = (0..=m).rev().map(|i| (i as f64 * PI / m as f64).cos()).collect();
            let breaks = with_ends(-1.0, sign_changes(g, &samples), 1.0);
            Ok(norm * integrate_abs(g, &breaks, m)?)
        }
    }
}

/// Gap `|β_ℓ − β̄_ℓ| = ½ λ μ_ℓ |1 − ∫|Φ̃_ℓ| dω|` between the discrete l1
/// coefficient and its continuous counterpart, valid when both are nonzero
/// and share a sign.
pub fn continuous_gap_l1(basis: BasisKind, degree: usize, lambda: f64, mu: f64) -> Result<f64> {
    if lambda == 0.0 {
        return Ok(0.0);
    }
    let moment = abs_moment(basis, degree)?;
    Ok(0.5 * lambda * mu * (1.0 - moment).abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn abs_moments() {
        let c0 = abs_moment(BasisKind::ChebyshevFirstKind, 0).unwrap();
        assert!((c0 - PI.sqrt()).abs() < 1e-13);
        // ∫_0^π |cos ℓθ| dθ = 2 for ℓ ≥ 1
        for l in [1, 4, 9] {
            let c = abs_moment(BasisKind::ChebyshevFirstKind, l).unwrap();
            assert!((c - 2.0 * (2.0 / PI).sqrt()).abs() < 1e-12, "{l} {c}");
        }
        let l0 = abs_moment(BasisKind::Legendre, 0).unwrap();
        assert!((l0 - 2f64.sqrt()).abs() < 1e-13);
        // ∫|P_1| = 1, scaled by √(3/2)
        let l1 = abs_moment(BasisKind::Legendre, 1).unwrap();
        assert!((l1 - 1.5f64.sqrt()).abs() < 1e-13);
    }

    #[test]
    fn continuous_gap_examples() {
        let g = continuous_gap_l1(BasisKind::ChebyshevFirstKind, 0, 2.0, 1.5).unwrap();
        assert!((g - 0.5 * 3.0 * (PI.sqrt() - 1.0)).abs() < 1e-12);
        assert!(((PI.sqrt() - 1.0) / 2.0 - 0.3862269).abs() < 1e-7);
        assert_eq!(continuous_gap_l1(BasisKind::Legendre, 3, 0.0, 1.0).unwrap(), 0.0);
        let g = continuous_gap_l1(BasisKind::Legendre, 0, 1.0, 1.0).unwrap();
        assert!((g - 0.5 * (2f64.sqrt() - 1.0)).abs() < 1e-12);
    }
}
