//! Seeded additive white Gaussian noise at a prescribed SNR.
//!
//! The noise stream is fully determined by the seed:
//!
//! 1. `ChaCha20Rng::seed_from_u64(seed)` (rand_chacha), a counter-based
//!    stream cipher generator with a documented, stable output stream;
//! 2. each pair of `u64` draws `(a, b)` becomes `u1 = 1 − (a >> 11)·2⁻⁵³ ∈ (0, 1]`
//!    and `u2 = (b >> 11)·2⁻⁵³ ∈ [0, 1)`;
//! 3. Box–Muller: `z0 = √(−2 ln u1) cos(2π u2)`, `z1 = √(−2 ln u1) sin(2π u2)`,
//!    consumed in that order.
//!
//! The noise standard deviation is `σ = √(P · 10^(−snr/10))` with `P` the mean
//! square of the clean samples.

use std::f64::consts::PI;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha20Rng;

use crate::error::{Error, Result};

const TWO_POW_M53: f64 = 1.0 / (1u64 << 53) as f64;

/// Standard normal deviates from the documented stream above.
pub struct GaussianStream {
    rng: ChaCha20Rng,
    spare: Option<f64>,
}

impl GaussianStream {
    pub fn new(seed: u64) -> Self {
        GaussianStream {
            rng: ChaCha20Rng::seed_from_u64(seed),
            spare: None,
        }
    }

    pub fn next_normal(&mut self) -> f64 {
        if let Some(z) = self.spare.take() {
            return z;
        }
        let u1 = 1.0 - (self.rng.next_u64() >> 11) as f64 * TWO_POW_M53;
        let u2 = (self.rng.next_u64() >> 11) as f64 * TWO_POW_M53;
        let r = (-2.0 * u1.ln()).sqrt();
        let (s, c) = (2.0 * PI * u2).sin_cos();
        self.spare = Some(r * s);
        r * c
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct NoisySamples {
    pub values: Vec<f64>,
    pub sigma: f64,
    pub seed: u64,
    pub snr_db: f64,
}

/// Mean square of `values`.
pub fn signal_power(values: &[f64]) -> f64 {
    values.iter().map(|v| v * v).sum::<f64>() / values.len() as f64
}

/// Adds i.i.d. `N(0, σ²)` noise with `σ² = P · 10^(−snr_db/10)`.
/// `snr_db = +∞` returns the input unchanged.
pub fn add_noise(values: &[f64], snr_db: f64, seed: u64) -> Result<NoisySamples> {
    if values.is_empty() {
        return Err(Error::InvalidSamples("no samples to perturb".to_string()));
    }
    if snr_db.is_nan() || snr_db == f64::NEG_INFINITY {
        return Err(Error::InvalidSnr(snr_db));
    }
    let power = signal_power(values);
    if power == 0.0 {
        return Err(Error::UndefinedSnr);
    }
    if snr_db == f64::INFINITY {
        return Ok(NoisySamples {
            values: values.to_vec(),
            sigma: 0.0,
            seed,
            snr_db,
        });
    }
    let sigma = (power * 10f64.powf(-snr_db / 10.0)).sqrt();
    let mut stream = GaussianStream::new(seed);
    let noisy = values
        .iter()
        .map(|v| v + sigma * stream.next_normal())
        .collect();
    Ok(NoisySamples {
        values: noisy,
        sigma,
        seed,
        snr_db,
    })
}
