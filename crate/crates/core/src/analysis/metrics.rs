use std::f64::consts::PI;

use crate::error::{check_len, Error, Result};
use crate::quadrature::QuadratureRule;

/// The points `cos(kπ/(m−1))`, `k = 0..m`, in ascending order. Computed in
/// sine form so the grid is exactly antisymmetric.
pub fn clustered_grid(m: usize) -> Vec<f64> {
    match m {
        0 => Vec::new(),
        1 => vec![0.0],
        _ => {
            let d = (m - 1) as f64;
            (0..m)
                .map(|k| (0.5 * PI * (2.0 * k as f64 - d) / d).sin())
                .collect()
        }
    }
}

/// `max |f_ref − p|` over a clustered grid of `grid_size` points.
pub fn uniform_error(
    f_ref: impl Fn(f64) -> f64,
    fit_eval: impl Fn(f64) -> f64,
    grid_size: usize,
) -> Result<f64> {
    if grid_size < 2 {
        return Err(Error::InvalidArgument(
            "uniform error needs at least 2 grid points".to_string(),
        ));
    }
    Ok(clustered_grid(grid_size)
        .into_iter()
        .map(|x| (f_ref(x) - fit_eval(x)).abs())
        .fold(0.0, f64::max))
}

/// Discrete `L_2(dω)` error `sqrt(Σ_j ω_j (f_j − p_j)²)`.
pub fn l2_error(rule: &QuadratureRule, f_values: &[f64], fit_values: &[f64]) -> Result<f64> {
    check_len("sample values", rule.len(), f_values.len())?;
    check_len("fit values", rule.len(), fit_values.len())?;
    let sq: Vec<f64> = f_values
        .iter()
        .zip(fit_values)
        .map(|(f, p)| (f - p) * (f - p))
        .collect();
    Ok(rule.integrate(&sq)?.sqrt())
}
