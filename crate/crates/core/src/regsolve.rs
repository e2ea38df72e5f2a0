//! Closed-form solvers for the regularized weighted least squares problems
//!
//! ```text
//! min_β ‖Λ^½ (A β − f)‖² + λ ‖R β‖₂²     (l2)
//! min_β ‖Λ^½ (A β − f)‖² + λ ‖R β‖₁      (l1)
//! ```
//!
//! with `R = diag(μ_0, …, μ_L)`. On Gauss nodes `AᵀΛA = I`, so both problems
//! decouple per coefficient. With `α = AᵀΛf`:
//!
//! * l2: `β_ℓ = α_ℓ / (1 + λ μ_ℓ²)`
//! * l1: `β_ℓ = ½ S_{λ μ_ℓ}(2 α_ℓ)`
//!
//! An infinite `μ_ℓ` forces `β_ℓ = 0` whenever `λ > 0`; with `λ = 0` the
//! penalty is absent and `0·∞` is taken as 0.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::basis::{eval_series, BasisKind, BasisMatrix};
use crate::error::{check_len, Error, Result};
use crate::quadrature::QuadratureRule;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PenaltySpec {
    lambda: f64,
    mu: Vec<f64>,
}

impl PenaltySpec {
    /// Validates `λ ≥ 0` (finite) and `μ_ℓ ∈ [0, +∞]`.
    pub fn new(lambda: f64, mu: Vec<f64>) -> Result<Self> {
        if !(lambda.is_finite() && lambda >= 0.0) {
            return Err(Error::InvalidPenalty(format!(
                "lambda must be finite and nonnegative, got {lambda}"
            )));
        }
        if let Some(bad) = mu.iter().find(|m| m.is_nan() || **m < 0.0) {
            return Err(Error::InvalidPenalty(format!(
                "penalization parameters must lie in [0, +inf], got {bad}"
            )));
        }
        Ok(PenaltySpec { lambda, mu })
    }

    /// `μ_ℓ = value` for `ℓ = 0..=degree`.
    pub fn constant(degree: usize, lambda: f64, value: f64) -> Result<Self> {
        PenaltySpec::new(lambda, vec![value; degree + 1])
    }

    /// No regularization at all.
    pub fn none(degree: usize) -> Self {
        PenaltySpec {
            lambda: 0.0,
            mu: vec![1.0; degree + 1],
        }
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn mu(&self) -> &[f64] {
        &self.mu
    }

    pub fn with_lambda(&self, lambda: f64) -> Result<Self> {
        PenaltySpec::new(lambda, self.mu.clone())
    }

    /// Effective threshold `λ μ_ℓ`, with `0 · ∞ = 0`.
    pub fn threshold(&self, degree: usize) -> f64 {
        if self.lambda == 0.0 {
            0.0
        } else {
            self.lambda * self.mu[degree]
        }
    }

    /// `ρ_ℓ = 1 / (1 + λ μ_ℓ²)`; exactly 0 for infinite `μ_ℓ` and `λ > 0`.
    pub fn l2_factor(&self, degree: usize) -> f64 {
        if self.lambda == 0.0 {
            return 1.0;
        }
        let mu = self.mu[degree];
        if mu.is_infinite() {
            0.0
        } else {
            1.0 / (1.0 + self.lambda * mu * mu)
        }
    }

    /// Smallest `μ_ℓ`.
    pub fn mu_min(&self) -> f64 {
        self.mu.iter().copied().fold(f64::INFINITY, f64::min)
    }

    /// All `μ_ℓ` equal.
    pub fn is_constant(&self) -> bool {
        self.mu.windows(2).all(|w| w[0] == w[1])
    }
}

/// Filter profile `F(t)`: 1 on [0, ½], `sin²(πt)` on [½, 1], 0 from 1 on.
pub fn filter_function(t: f64) -> f64 {
    if t <= 0.5 {
        1.0
    } else if t < 1.0 {
        (PI * t).sin().powi(2)
    } else {
        0.0
    }
}

/// `μ_ℓ = 1 / F(ℓ / L)`, with `F = 0` mapped to `+∞`.
pub fn filter_penalties(degree: usize, lambda: f64) -> Result<PenaltySpec> {
    if degree == 0 {
        return Err(Error::InvalidPenalty(
            "filter penalties need L >= 1".to_string(),
        ));
    }
    let mu = (0..=degree)
        .map(|l| {
            let f = filter_function(l as f64 / degree as f64);
            if f == 0.0 {
                f64::INFINITY
            } else {
                1.0 / f
            }
        })
        .collect();
    PenaltySpec::new(lambda, mu)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Solver {
    L2,
    L1,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FitResult {
    pub basis: BasisKind,
    pub degree: usize,
    /// Inner coefficients `α = AᵀΛf`.
    pub alpha: Vec<f64>,
    /// Solution coefficients `β`.
    pub beta: Vec<f64>,
    pub solver: Solver,
    pub penalty: PenaltySpec,
}

impl FitResult {
    /// `p(x) = Σ_ℓ β_ℓ Φ̃_ℓ(x)`.
    pub fn eval(&self, x: f64) -> Result<f64> {
        eval_series(self.basis, &self.beta, x)
    }
}

/// Same as [`FitResult::eval`].
pub fn eval_fit(fit: &FitResult, x: f64) -> Result<f64> {
    fit.eval(x)
}

/// `α_ℓ = Σ_j ω_j A[j][ℓ] f_j`.
pub fn inner_coeffs(rule: &QuadratureRule, a: &BasisMatrix, f_values: &[f64]) -> Result<Vec<f64>> {
    check_len("basis matrix rows", rule.len(), a.rows())?;
    check_len("sample values", rule.len(), f_values.len())?;
    let mut alpha = vec![0.0; a.cols()];
    for (j, (&w, &f)) in rule.weights().iter().zip(f_values).enumerate() {
        let wf = w * f;
        for (acc, &phi) in alpha.iter_mut().zip(a.row(j)) {
            *acc += wf * phi;
        }
    }
    Ok(alpha)
}

/// `S_k(a) = max(0, a − k) + min(0, a + k)`; `k = +∞` gives 0.
#[inline]
pub fn soft_threshold(a: f64, k: f64) -> f64 {
    f64::max(0.0, a - k) + f64::min(0.0, a + k)
}

pub fn solve_l2(alpha: &[f64], penalty: &PenaltySpec) -> Result<Vec<f64>> {
    check_len("penalization vector", alpha.len(), penalty.mu.len())?;
    Ok(alpha
        .iter()
        .enumerate()
        .map(|(l, &a)| a * penalty.l2_factor(l))
        .collect())
}

pub fn solve_l1(alpha: &[f64], penalty: &PenaltySpec) -> Result<Vec<f64>> {
    check_len("penalization vector", alpha.len(), penalty.mu.len())?;
    Ok(alpha
        .iter()
        .enumerate()
        .map(|(l, &a)| 0.5 * soft_threshold(2.0 * a, penalty.threshold(l)))
        .collect())
}

/// Samples at the nodes of `rule` → inner coefficients → regularized coefficients.
pub fn fit(
    basis: BasisKind,
    degree: usize,
    rule: &QuadratureRule,
    f_values: &[f64],
    penalty: &PenaltySpec,
    solver: Solver,
) -> Result<FitResult> {
    if rule.basis() != basis {
        return Err(Error::BasisMismatch);
    }
    if degree > 2 * rule.n() + 1 {
        return Err(Error::DegreeTooLarge {
            degree,
            nodes: rule.len(),
        });
    }
    check_len("penalization vector", degree + 1, penalty.mu.len())?;
    let a = crate::basis::basis_matrix(basis, degree, rule.nodes())?;
    let alpha = inner_coeffs(rule, &a, f_values)?;
    let beta = match solver {
        Solver::L2 => solve_l2(&alpha, penalty)?,
        Solver::L1 => solve_l1(&alpha, penalty)?,
    };
    Ok(FitResult {
        basis,
        degree,
        alpha,
        beta,
        solver,
        penalty: penalty.clone(),
    })
}

/// Objective of the matrix-form l1 problem, `‖Λ^½(Aβ − f)‖² + λ Σ μ_ℓ |β_ℓ|`.
pub fn l1_objective(
    rule: &QuadratureRule,
    a: &BasisMatrix,
    f_values: &[f64],
    penalty: &PenaltySpec,
    beta: &[f64],
) -> Result<f64> {
    let p = a.apply(beta)?;
    check_len("sample values", rule.len(), f_values.len())?;
    let residual: f64 = rule
        .weights()
        .iter()
        .zip(p.iter().zip(f_values))
        .map(|(w, (p, f))| w * (p - f) * (p - f))
        .sum();
    let penalty_term: f64 = beta
        .iter()
        .enumerate()
        .filter(|(_, b)| **b != 0.0)
        .map(|(l, b)| penalty.threshold(l) * b.abs())
        .sum();
    Ok(residual + penalty_term)
}
