//! `Ai(t)` on [-40, 40] from the Airy equation `y'' = t y`.
//!
//! The equation is marched with an adaptive-order Taylor method, one cache
//! step at a time:
//!
//! * `t ≤ 0`: forward from `t = 0` with `Ai(0) = 3^{-2/3}/Γ(2/3)` and
//!   `Ai'(0) = -3^{-1/3}/Γ(1/3)`. The solutions oscillate there, so errors stay
//!   bounded.
//! * `t > 0`: backward from `t = 48`, started from the asymptotic expansion.
//!   Marching outward from the origin is useless on this side because any
//!   rounding excites the growing `Bi` solution, whereas backward marching
//!   damps it.
//!
//! Values and derivatives are stored every [`CACHE_STEP`] and joined by cubic
//! Hermite interpolation, whose error there stays below 1e-9.

use std::f64::consts::PI;
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// `Ai(0)`.
pub const AI0: f64 = 0.355_028_053_887_817_2;
/// `Ai'(0)`.
pub const AIP0: f64 = -0.258_819_403_792_806_8;

/// Grid spacing of the cache in `t`.
pub const CACHE_STEP: f64 = 1.0 / 256.0;
/// Cached range is `[-T_MAX, T_MAX]`.
pub const T_MAX: f64 = 40.0;
const BACKWARD_START: f64 = 48.0;
const MAX_ORDER: usize = 60;
const TERM_TOL: f64 = 1e-17;

struct AiryTable {
    /// `(Ai, Ai')` at `t_i = (i − offset) · CACHE_STEP`.
    samples: Vec<(f64, f64)>,
    offset: usize,
    /// `Ai(0)` reached by the backward march.
    backward_at_zero: f64,
}

/// One Taylor step of `y'' = t y` from `t0` over `h`.
fn taylor_step(t0: f64, y: f64, dy: f64, h: f64) -> Option<(f64, f64)> {
    let scale = y.abs().max(dy.abs() * h.abs()).max(f64::MIN_POSITIVE);
    // c_{k+2} = (t0 c_k + c_{k-1}) / ((k+2)(k+1))
    let mut c = [y, dy, 0.5 * t0 * y];
    let mut hk = h * h;
    let mut value = y + dy * h + c[2] * hk;
    let mut deriv = dy + 2.0 * c[2] * h;
    let mut quiet = 0;
    for k in 1..MAX_ORDER {
        let next = (t0 * c[1] + c[0]) / (((k + 2) * (k + 1)) as f64);
        hk *= h;
        let term = next * hk;
        value += term;
        deriv += (k + 2) as f64 * next * hk / h;
        if term.abs() <= TERM_TOL * scale {
            quiet += 1;
            if quiet == 2 {
                return Some((value, deriv));
            }
        } else {
            quiet = 0;
        }
        c = [c[1], c[2], next];
    }
    None
}

/// Leading asymptotic expansion for large positive `z`.
fn asymptotic(z: f64) -> (f64, f64) {
    let zeta = 2.0 / 3.0 * z.powf(1.5);
    let (mut u, mut su, mut sv) = (1.0, 1.0, 1.0);
    let mut zpow = 1.0;
    for k in 1..12 {
        let kf = k as f64;
        u *= (6.0 * kf - 5.0) * (6.0 * kf - 3.0) * (6.0 * kf - 1.0) / ((2.0 * kf - 1.0) * 216.0 * kf);
        let v = -(6.0 * kf + 1.0) / (6.0 * kf - 1.0) * u;
        zpow *= -zeta;
        su += u / zpow;
        sv += v / zpow;
    }
    let pref = (-zeta).exp() / (2.0 * PI.sqrt());
    (pref / z.powf(0.25) * su, -pref * z.powf(0.25) * sv)
}

impl AiryTable {
    fn build() -> std::result::Result<AiryTable, f64> {
        let steps = (T_MAX / CACHE_STEP).round() as usize;
        let mut samples = vec![(0.0, 0.0); 2 * steps + 1];
        let offset = steps;

        samples[offset] = (AI0, AIP0);
        let (mut y, mut dy) = (AI0, AIP0);
        for i in 1..=steps {
            let t0 = -((i - 1) as f64) * CACHE_STEP;
            (y, dy) = taylor_step(t0, y, dy, -CACHE_STEP).ok_or(t0)?;
            samples[offset - i] = (y, dy);
        }

        let start = (BACKWARD_START / CACHE_STEP).round() as usize;
        let (mut y, mut dy) = asymptotic(start as f64 * CACHE_STEP);
        for i in (0..start).rev() {
            let t0 = (i + 1) as f64 * CACHE_STEP;
            (y, dy) = taylor_step(t0, y, dy, -CACHE_STEP).ok_or(t0)?;
            if i >= 1 && i <= steps {
                samples[offset + i] = (y, dy);
            }
        }
        Ok(AiryTable {
            samples,
            offset,
            backward_at_zero: y,
        })
    }

    fn eval(&self, t: f64) -> f64 {
        let s = t / CACHE_STEP + self.offset as f64;
        let last = self.samples.len() - 1;
        let i = (s.floor().max(0.0) as usize).min(last - 1);
        let u = s - i as f64;
        let (y0, d0) = self.samples[i];
        let (y1, d1) = self.samples[i + 1];
        let h = CACHE_STEP;
        let u2 = u * u;
        let u3 = u2 * u;
        (2.0 * u3 - 3.0 * u2 + 1.0) * y0
            + (u3 - 2.0 * u2 + u) * h * d0
            + (-2.0 * u3 + 3.0 * u2) * y1
            + (u3 - u2) * h * d1
    }
}

fn table() -> Result<&'static AiryTable> {
    static TABLE: OnceLock<std::result::Result<AiryTable, f64>> = OnceLock::new();
    TABLE
        .get_or_init(AiryTable::build)
        .as_ref()
        .map_err(|&t| Error::AiryIntegration { t })
}

/// `Ai(t)` for `|t| ≤ 40`.
pub fn airy_ai(t: f64) -> Result<f64> {
    if t.is_nan() || t.abs() > T_MAX * (1.0 + crate::basis::DOMAIN_SLACK) {
        return Err(Error::Domain { x: t / T_MAX });
    }
    Ok(table()?.eval(t.clamp(-T_MAX, T_MAX)))
}

/// `Ai(40 x)` on [-1, 1].
pub fn airy_scaled(x: f64) -> Result<f64> {
    let x = crate::basis::clamp_domain(x)?;
    airy_ai(T_MAX * x)
}

/// Difference between `Ai(0)` reached by the backward march and the exact value.
pub fn backward_join_error() -> Result<f64> {
    Ok(table()?.backward_at_zero - AI0)
}
