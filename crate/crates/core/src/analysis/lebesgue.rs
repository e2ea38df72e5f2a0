//! Lebesgue constants of the l2-regularized projection.
//!
//! Chebyshev: `Λ_L = (1/π) ∫_{-π}^{π} |u_L(t)| dt`, `u_L = ρ_0/2 + Σ ρ_ℓ cos ℓt`.
//! Legendre:  `Λ_L = ½ ∫_{-1}^{1} |K_L(x)| dx`, `K_L = Σ (2ℓ+1) ρ_ℓ P_ℓ(x)`.
//! Here `ρ_ℓ = 1 / (1 + λ μ_ℓ²)`.

use std::f64::consts::PI;

use serde::Serialize;

use super::integrate::{integrate_abs, sign_changes, with_ends};
use crate::basis::{clenshaw_classical, BasisKind};
use crate::error::{check_len, Result};
use crate::regsolve::PenaltySpec;

/// `η` as printed alongside the bound.
pub const ETA_PRINTED: f64 = 2.220884;

/// `Si(x) = ∫_0^x sin t / t dt` by its Maclaurin series (fine for |x| ≲ 10).
pub fn sine_integral(x: f64) -> f64 {
    let mut term = x;
    let mut sum = x;
    let x2 = x * x;
    for k in 1..60 {
        let kf = k as f64;
        // term_k = (-1)^k x^{2k+1} / (2k+1)!
        term *= -x2 / ((2.0 * kf) * (2.0 * kf + 1.0));
        let add = term / (2.0 * kf + 1.0);
        sum += add;
        if add.abs() < 1e-18 * sum.abs() {
            break;
        }
    }
    sum
}

/// `η = 4/π² + (2/π)(1 + Si(π))`.
pub fn eta() -> f64 {
    4.0 / (PI * PI) + 2.0 / PI * (1.0 + sine_integral(PI))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LebesgueReport {
    pub basis: BasisKind,
    pub degree: usize,
    pub lambda: f64,
    pub mu: Vec<f64>,
    pub value: f64,
    /// Upper bound from the regularized Dirichlet estimate (`L ≥ 2`).
    pub bound: Option<f64>,
    /// Asymptotic value, with `μ_min` in place of the intermediate `μ̃`.
    pub asymptote: Option<f64>,
}

fn damping(penalty: &PenaltySpec) -> f64 {
    let m = penalty.mu_min();
    if penalty.lambda() == 0.0 {
        1.0
    } else if m.is_infinite() {
        f64::INFINITY
    } else {
        1.0 + penalty.lambda() * m * m
    }
}

fn factors(penalty: &PenaltySpec) -> Vec<f64> {
    (0..penalty.mu().len()).map(|l| penalty.l2_factor(l)).collect()
}

fn common_factor(rho: &[f64]) -> Option<f64> {
    rho.windows(2).all(|w| w[0] == w[1]).then(|| rho[0])
}

/// Dirichlet kernel `D_n(x) = sin((n+½)x) / sin(x/2)`, `2n+1` at the origin.
pub fn dirichlet_kernel(n: usize, x: f64) -> f64 {
    let s = (0.5 * x).sin();
    if s == 0.0 {
        (2 * n + 1) as f64
    } else {
        ((n as f64 + 0.5) * x).sin() / s
    }
}

/// `(1/2π) ∫_{-π}^{π} |D_n(x)| dx`, integrated between the kernel zeros.
pub fn dirichlet_integral(n: usize) -> Result<f64> {
    let zeros = (1..=n).map(|k| k as f64 * PI / (n as f64 + 0.5)).collect();
    let breaks = with_ends(0.0, zeros, PI);
    let half = integrate_abs(|x| dirichlet_kernel(n, x), &breaks, 8 * (n + 1))?;
    Ok(half / PI)
}

/// Lebesgue constant for the normalized Chebyshev basis.
pub fn lebesgue_chebyshev(degree: usize, penalty: &PenaltySpec) -> Result<LebesgueReport> {
    check_len("penalization vector", degree + 1, penalty.mu().len())?;
    let rho = factors(penalty);
    let panels = 8 * (degree + 1);
    // u_L is even, so (1/π)∫_{-π}^{π} = (2/π)∫_0^π.
    let half = match common_factor(&rho) {
        Some(0.0) => 0.0,
        Some(r) => {
            let zeros = (1..=degree)
                .map(|k| k as f64 * PI / (degree as f64 + 0.5))
                .collect();
            let breaks = with_ends(0.0, zeros, PI);
            integrate_abs(|t| 0.5 * r * dirichlet_kernel(degree, t), &breaks, panels)?
        }
        None => {
            let mut coeffs = rho.clone();
            coeffs[0] *= 0.5;
            let u = |t: f64| clenshaw_classical(BasisKind::ChebyshevFirstKind, &coeffs, t.cos());
            let m = 16 * (degree + 1);
            let samples: Vec<f64> = (0..=m).map(|i| i as f64 * PI / m as f64).collect();
            let breaks = with_ends(0.0, sign_changes(u, &samples), PI);
            integrate_abs(u, &breaks, panels)?
        }
    };
    let d = damping(penalty);
    let (bound, asymptote) = if degree >= 2 {
        let l = degree as f64;
        let c = 4.0 / (PI * PI);
        (Some((c * (l - 1.0).ln() + eta()) / d), Some(c * l.ln() / d))
    } else {
        (None, None)
    };
    Ok(LebesgueReport {
        basis: BasisKind::ChebyshevFirstKind,
        degree,
        lambda: penalty.lambda(),
        mu: penalty.mu().to_vec(),
        value: 2.0 * half / PI,
        bound,
        asymptote,
    })
}

/// Lebesgue constant for the normalized Legendre basis.
pub fn lebesgue_legendre(degree: usize, penalty: &PenaltySpec) -> Result<LebesgueReport> {
    check_len("penalization vector", degree + 1, penalty.mu().len())?;
    let coeffs: Vec<f64> = factors(penalty)
        .into_iter()
        .enumerate()
        .map(|(l, r)| (2 * l + 1) as f64 * r)
        .collect();
    let kernel = |x: f64| clenshaw_classical(BasisKind::Legendre, &coeffs, x);
    let m = 16 * (degree + 1);
    // Chebyshev-spaced samples resolve the zeros that cluster at ±1.
    let samples: Vec<f64> = (0..=m).rev().map(|i| (i as f64 * PI / m as f64).cos()).collect();
    let breaks = with_ends(-1.0, sign_changes(kernel, &samples), 1.0);
    let value = 0.5 * integrate_abs(kernel, &breaks, 16 * (degree + 1))?;
    let d = damping(penalty);
    let asymptote = (degree >= 2).then(|| 2.0 * (2.0 / PI).sqrt() * (degree as f64).sqrt() / d);
    Ok(LebesgueReport {
        basis: BasisKind::Legendre,
        degree,
        lambda: penalty.lambda(),
        mu: penalty.mu().to_vec(),
        value,
        bound: asymptote,
        asymptote,
    })
}

pub fn lebesgue(basis: BasisKind, degree: usize, penalty: &PenaltySpec) -> Result<LebesgueReport> {
    match basis {
        BasisKind::ChebyshevFirstKind => lebesgue_chebyshev(degree, penalty),
        BasisKind::Legendre => lebesgue_legendre(degree, penalty),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn constant(l: usize, lambda: f64, mu: f64) -> PenaltySpec {
        PenaltySpec::constant(l, lambda, mu).unwrap()
    }

    #[test]
    fn eta_matches_printed_value() {
        assert!((sine_integral(PI) - 1.851937051982466).abs() < 1e-14);
        assert!((eta() - ETA_PRINTED).abs() < 1e-6);
    }

    #[test]
    fn degree_zero_constants() {
        let r = lebesgue_chebyshev(0, &PenaltySpec::none(0)).unwrap();
        assert!((r.value - 1.0).abs() < 1e-12);
        assert!(r.bound.is_none());
        let r = lebesgue_legendre(0, &PenaltySpec::none(0)).unwrap();
        assert!((r.value - 1.0).abs() < 1e-12);
        assert!((dirichlet_integral(0).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn chebyshev_matches_dirichlet_integral() {
        for l in [1, 2, 7, 30] {
            let a = lebesgue_chebyshev(l, &PenaltySpec::none(l)).unwrap().value;
            let b = dirichlet_integral(l).unwrap();
            assert!((a - b).abs() < 1e-12 * b);
        }
    }

    #[test]
    fn clenshaw_kernel_agrees_with_closed_form() {
        // A μ profile that differs only in the last bit takes the generic path.
        let l = 25;
        let mut mu = vec![1.0; l + 1];
        mu[l] = 1.0 + f64::EPSILON;
        let generic = lebesgue_chebyshev(l, &PenaltySpec::new(0.3, mu).unwrap()).unwrap();
        let closed = lebesgue_chebyshev(l, &constant(l, 0.3, 1.0)).unwrap();
        assert!((generic.value - closed.value).abs() < 1e-9 * closed.value);
    }

    #[test]
    fn constant_mu_scaling() {
        let base = lebesgue_chebyshev(10, &PenaltySpec::none(10)).unwrap();
        let reg = lebesgue_chebyshev(10, &constant(10, 1.0, 1.0)).unwrap();
        assert!((reg.value - base.value / 2.0).abs() < 1e-9);

        let base = lebesgue_legendre(10, &PenaltySpec::none(10)).unwrap();
        let reg = lebesgue_legendre(10, &constant(10, 3.0, 1.0)).unwrap();
        assert!((reg.value - base.value / 4.0).abs() < 1e-9);
    }

    #[test]
    fn known_fourier_lebesgue_values() {
        // Reference values of (1/π)∫_0^π |D_n| computed independently.
        assert!((dirichlet_integral(1).unwrap() - 1.4359911241769172).abs() < 1e-10);
        assert!((dirichlet_integral(2).unwrap() - 1.6421884352221212).abs() < 1e-10);
        assert!((dirichlet_integral(10).unwrap() - 2.2233569241536846).abs() < 1e-10);
        let v = dirichlet_integral(2).unwrap();
        assert!(v <= 4.0 / (PI * PI) * 1f64.ln() + eta());
    }

    #[test]
    fn legendre_reference_value() {
        // Θ_10 from an independent adaptive quadrature.
        let r = lebesgue_legendre(10, &PenaltySpec::none(10)).unwrap();
        assert!((r.value - 4.707173847571464).abs() < 1e-8);
    }

    #[test]
    fn all_infinite_mu_gives_zero() {
        let p = PenaltySpec::new(0.5, vec![f64::INFINITY; 4]).unwrap();
        assert_eq!(lebesgue_chebyshev(3, &p).unwrap().value, 0.0);
        assert_eq!(lebesgue_legendre(3, &p).unwrap().value, 0.0);
    }

    #[test]
    fn filter_profile_is_reported() {
        let p = crate::regsolve::filter_penalties(12, 0.1).unwrap();
        let r = lebesgue_chebyshev(12, &p).unwrap();
        assert!(r.value > 0.0 && r.value.is_finite());
        let r = lebesgue_legendre(12, &p).unwrap();
        assert!(r.value > 0.0 && r.value.is_finite());
    }
}
