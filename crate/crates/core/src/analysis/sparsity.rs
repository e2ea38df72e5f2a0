//! Nonzero-count diagnostics for l1-regularized coefficients.

use serde::Serialize;

use crate::error::{check_len, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SparsityReport {
    /// `‖β‖₀`
    pub nnz_beta: usize,
    /// `‖AᵀΛf‖₀ = ‖α‖₀`
    pub nnz_alpha: usize,
    /// `#{ℓ : β_ℓ = 0, α_ℓ ≠ 0}`
    pub zero_beta_nonzero_alpha: usize,
    /// `‖β‖₀ = ‖α‖₀ − #{β_ℓ = 0, α_ℓ ≠ 0}`
    pub identity_holds: bool,
    /// `‖β‖₀ ≤ ‖α‖₀`
    pub bound_holds: bool,
    /// For `λ = 0` only: `‖β‖₀ = ‖α‖₀`.
    pub unregularized_holds: Option<bool>,
}

/// Counts entries with magnitude above `zero_tol` and checks the sparsity
/// identities. `lambda` selects whether the unregularized equality applies.
pub fn sparsity_report(
    alpha: &[f64],
    beta: &[f64],
    zero_tol: f64,
    lambda: f64,
) -> Result<SparsityReport> {
    check_len("coefficient vectors", alpha.len(), beta.len())?;
    let nonzero = |v: f64| v.abs() > zero_tol;
    let nnz_alpha = alpha.iter().filter(|&&a| nonzero(a)).count();
    let nnz_beta = beta.iter().filter(|&&b| nonzero(b)).count();
    let zero_beta_nonzero_alpha = alpha
        .iter()
        .zip(beta)
        .filter(|(&a, &b)| nonzero(a) && !nonzero(b))
        .count();
    Ok(SparsityReport {
        nnz_beta,
        nnz_alpha,
        zero_beta_nonzero_alpha,
        identity_holds: nnz_alpha.checked_sub(zero_beta_nonzero_alpha) == Some(nnz_beta),
        bound_holds: nnz_beta <= nnz_alpha,
        unregularized_holds: (lambda == 0.0).then_some(nnz_beta == nnz_alpha),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::regsolve::{solve_l1, PenaltySpec};

    #[test]
    fn soft_threshold_example() {
        let alpha = [3.0, 0.4, -3.0];
        let beta = solve_l1(&alpha, &PenaltySpec::constant(2, 1.0, 1.0).unwrap()).unwrap();
        assert_eq!(beta, vec![2.5, 0.0, -2.5]);
        let r = sparsity_report(&alpha, &beta, 0.0, 1.0).unwrap();
        assert_eq!((r.nnz_beta, r.nnz_alpha, r.zero_beta_nonzero_alpha), (2, 3, 1));
        assert!(r.identity_holds && r.bound_holds);
        assert_eq!(r.unregularized_holds, None);
    }

    #[test]
    fn full_threshold() {
        let alpha = [0.1, -0.2, 0.0, 0.3];
        let r = sparsity_report(&alpha, &[0.0; 4], 0.0, 5.0).unwrap();
        assert_eq!(r.nnz_beta, 0);
        assert_eq!(r.zero_beta_nonzero_alpha, r.nnz_alpha);
        assert!(r.identity_holds);
    }

    #[test]
    fn identity_fails_when_beta_is_nonzero_where_alpha_vanishes() {
        let r = sparsity_report(&[0.0, 1.0], &[1.0, 1.0], 0.0, 0.0).unwrap();
        assert!(!r.identity_holds && !r.bound_holds);
        assert_eq!(r.unregularized_holds, Some(false));
    }

    #[test]
    fn tolerance_and_length_checks() {
        let r = sparsity_report(&[1e-14, 1.0], &[1e-14, 1.0], 1e-12, 0.0).unwrap();
        assert_eq!((r.nnz_alpha, r.nnz_beta), (1, 1));
        assert_eq!(r.unregularized_holds, Some(true));
        assert!(sparsity_report(&[1.0], &[1.0, 2.0], 0.0, 0.0).is_err());
    }
}
