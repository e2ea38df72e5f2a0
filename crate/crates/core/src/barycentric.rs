//! Regularized barycentric interpolation formulas for `L = N`.
//!
//! On Gauss nodes the Lagrange basis reduces, via Christoffel–Darboux, to
//! barycentric weights `Ω_j = ω_j Φ̃_N(x_j)`. The two regularized minimizers
//! then read
//!
//! ```text
//! l2:  p(x) = Σ_j Ω_j/(x−x_j) f_j / ((1 + λμ_0²) Σ_j Ω_j/(x−x_j))     (constant μ)
//! l1:  p(x) = Σ_j Ω_j/(x−x_j) g_j / Σ_j Ω_j/(x−x_j),
//!      g_j = f_j + Σ_ℓ c_ℓ Φ̃_ℓ(x_j),   c_ℓ = ½ S_{λμ_ℓ}(2α_ℓ) − α_ℓ
//! ```

use serde::{Deserialize, Serialize};

use crate::basis::{basis_matrix, eval_normalized, BasisKind};
use crate::error::{check_len, Error, Result};
use crate::quadrature::QuadratureRule;
use crate::regsolve::{inner_coeffs, soft_threshold, PenaltySpec};

/// Node coincidence tolerance, in units of machine epsilon.
const COINCIDENCE_ULPS: f64 = 4.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BaryVariant {
    L2,
    L1,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BarycentricForm {
    pub nodes: Vec<f64>,
    pub bary_weights: Vec<f64>,
    pub modified_values: Vec<f64>,
    pub denom_scale: f64,
    pub variant: BaryVariant,
}

/// `Ω_j = ω_j Φ̃_N(x_j)` for a rule with `N + 1` nodes.
pub fn bary_weights(basis: BasisKind, rule: &QuadratureRule) -> Result<Vec<f64>> {
    let n = rule.n();
    rule.nodes()
        .iter()
        .zip(rule.weights())
        .map(|(&x, &w)| Ok(w * eval_normalized(basis, n, x)?))
        .collect()
}

/// l2 form. Only a constant, finite `μ` is supported; anything else should go
/// through [`crate::regsolve::fit`] and series evaluation.
pub fn build_l2_form(
    rule: &QuadratureRule,
    f_values: &[f64],
    penalty: &PenaltySpec,
) -> Result<BarycentricForm> {
    check_len("sample values", rule.len(), f_values.len())?;
    check_len("penalization vector", rule.len(), penalty.mu().len())?;
    if !penalty.is_constant() || !penalty.mu()[0].is_finite() {
        return Err(Error::UnsupportedPenaltyProfile);
    }
    let mu0 = penalty.mu()[0];
    Ok(BarycentricForm {
        nodes: rule.nodes().to_vec(),
        bary_weights: bary_weights(rule.basis(), rule)?,
        modified_values: f_values.to_vec(),
        denom_scale: 1.0 + penalty.lambda() * mu0 * mu0,
        variant: BaryVariant::L2,
    })
}

pub fn build_l1_form(
    rule: &QuadratureRule,
    f_values: &[f64],
    penalty: &PenaltySpec,
) -> Result<BarycentricForm> {
    check_len("sample values", rule.len(), f_values.len())?;
    check_len("penalization vector", rule.len(), penalty.mu().len())?;
    let basis = rule.basis();
    let a = basis_matrix(basis, rule.n(), rule.nodes())?;
    let alpha = inner_coeffs(rule, &a, f_values)?;
    let correction: Vec<f64> = alpha
        .iter()
        .enumerate()
        .map(|(l, &al)| 0.5 * soft_threshold(2.0 * al, penalty.threshold(l)) - al)
        .collect();
    let shift = a.apply(&correction)?;
    let modified_values = f_values.iter().zip(shift).map(|(f, s)| f + s).collect();
    Ok(BarycentricForm {
        nodes: rule.nodes().to_vec(),
        bary_weights: bary_weights(basis, rule)?,
        modified_values,
        denom_scale: 1.0,
        variant: BaryVariant::L1,
    })
}

impl BarycentricForm {
    /// Second (true) barycentric formula; returns the scaled node value when
    /// `x` coincides with a node.
    pub fn eval(&self, x: f64) -> f64 {
        let mut num = 0.0;
        let mut den = 0.0;
        for ((&xj, &wj), &gj) in self
            .nodes
            .iter()
            .zip(&self.bary_weights)
            .zip(&self.modified_values)
        {
            let d = x - xj;
            if d.abs() <= COINCIDENCE_ULPS * f64::EPSILON * xj.abs().max(1.0) {
                return gj / self.denom_scale;
            }
            let t = wj / d;
            num += t * gj;
            den += t;
        }
        num / (self.denom_scale * den)
    }
}

/// Same as [`BarycentricForm::eval`].
pub fn eval_bary(form: &BarycentricForm, x: f64) -> f64 {
    form.eval(x)
}
