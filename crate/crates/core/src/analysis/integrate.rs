//! Panel-refined integration of `|g|` for piecewise-smooth kernels.
//!
//! Breakpoints go at the sign changes of `g` so every piece is smooth; each
//! piece is covered by 16-point Gauss–Legendre panels and the panel count is
//! doubled until two successive totals agree to [`REL_TOL`].

use std::sync::OnceLock;

use crate::basis::BasisKind;
use crate::error::{Error, Result};
use crate::quadrature::{gauss_rule, QuadratureRule};

pub(crate) const REL_TOL: f64 = 1e-9;
pub(crate) const MAX_DOUBLINGS: usize = 6;

fn gl16() -> &'static QuadratureRule {
    static RULE: OnceLock<QuadratureRule> = OnceLock::new();
    RULE.get_or_init(|| gauss_rule(BasisKind::Legendre, 15).expect("16-point Gauss-Legendre rule"))
}

fn panel_sum(g: &impl Fn(f64) -> f64, a: f64, b: f64, panels: usize) -> f64 {
    let rule = gl16();
    let h = (b - a) / panels as f64;
    let mut total = 0.0;
    for p in 0..panels {
        let lo = a + p as f64 * h;
        let mid = lo + 0.5 * h;
        let mut s = 0.0;
        for (&x, &w) in rule.nodes().iter().zip(rule.weights()) {
            s += w * g(mid + 0.5 * h * x).abs();
        }
        total += 0.5 * h * s;
    }
    total
}

/// `∫ |g|` over `[breaks[0], breaks[last]]`.
///
/// `base_panels` is the initial panel count for the whole range; each piece
/// gets its share by length, and at least one panel.
pub(crate) fn integrate_abs(
    g: impl Fn(f64) -> f64,
    breaks: &[f64],
    base_panels: usize,
) -> Result<f64> {
    let (Some(&start), Some(&end)) = (breaks.first(), breaks.last()) else {
        return Ok(0.0);
    };
    let span = end - start;
    if span <= 0.0 {
        return Ok(0.0);
    }
    let shares: Vec<usize> = breaks
        .windows(2)
        .map(|w| ((base_panels as f64 * (w[1] - w[0]) / span).ceil() as usize).max(1))
        .collect();
    let estimate = |scale: usize| -> f64 {
        breaks
            .windows(2)
            .zip(&shares)
            .filter(|(w, _)| w[1] > w[0])
            .map(|(w, &k)| panel_sum(&g, w[0], w[1], k * scale))
            .sum()
    };
    let mut previous = estimate(1);
    let mut scale = 1;
    for _ in 0..MAX_DOUBLINGS {
        scale *= 2;
        let current = estimate(scale);
        if (current - previous).abs() <= REL_TOL * current.abs() {
            return Ok(current);
        }
        if scale == 1 << MAX_DOUBLINGS {
            return Err(Error::RefinementNoConvergence {
                last: current,
                previous,
            });
        }
        previous = current;
    }
    unreachable!("refinement loop always returns")
}

/// Locates sign changes of `g` between consecutive sample points and refines
/// them by bisection. Returned points are ascending and exclude the ends.
pub(crate) fn sign_changes(g: impl Fn(f64) -> f64, samples: &[f64]) -> Vec<f64> {
    let values: Vec<f64> = samples.iter().map(|&x| g(x)).collect();
    let mut roots = Vec::new();
    for i in 0..samples.len().saturating_sub(1) {
        let (mut a, mut b) = (samples[i], samples[i + 1]);
        let (fa, fb) = (values[i], values[i + 1]);
        if fa == 0.0 {
            if i > 0 {
                roots.push(a);
            }
            continue;
        }
        if fa.signum() == fb.signum() || fb == 0.0 {
            continue;
        }
        for _ in 0..200 {
            let mid = 0.5 * (a + b);
            if mid <= a || mid >= b {
                break;
            }
            let fm = g(mid);
            if fm == 0.0 {
                a = mid;
                b = mid;
                break;
            }
            if fm.signum() == fa.signum() {
                a = mid;
            } else {
                b = mid;
            }
        }
        roots.push(0.5 * (a + b));
    }
    roots
}

/// `[a, interior..., b]` as integration breakpoints.
pub(crate) fn with_ends(a: f64, mut interior: Vec<f64>, b: f64) -> Vec<f64> {
    interior.retain(|&x| x > a && x < b);
    let mut out = Vec::with_capacity(interior.len() + 2);
    out.push(a);
    out.extend(interior);
    out.push(b);
    out
}
