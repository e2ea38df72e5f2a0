//! Orthonormal Chebyshev (first kind) and Legendre polynomials on [-1, 1].
//!
//! The normalized family `Φ̃_ℓ` satisfies `∫ Φ̃_ℓ Φ̃_ℓ' dω = δ_ℓℓ'` where
//!
//! * Chebyshev: `dω = (1 - x²)^(-1/2) dx`, `Φ̃_0 = 1/√π`, `Φ̃_ℓ = √(2/π) T_ℓ`;
//! * Legendre: `dω = dx`, `Φ̃_ℓ = √((2ℓ+1)/2) P_ℓ`.
//!
//! Everything is evaluated by the classical three-term recurrence and then
//! scaled, so the discrete Gram matrix on the matching Gauss nodes is the
//! identity.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Arguments this far outside [-1, 1] are clamped instead of rejected.
pub const DOMAIN_SLACK: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BasisKind {
    /// Chebyshev polynomials of the first kind, `dω = (1-x²)^(-1/2) dx`.
    #[serde(rename = "chebyshev1")]
    ChebyshevFirstKind,
    /// Legendre polynomials, `dω = dx`.
    Legendre,
}

impl BasisKind {
    /// Scale factor turning the classical polynomial of `degree` into the orthonormal one.
    pub fn normalization(self, degree: usize) -> f64 {
        match self {
            BasisKind::ChebyshevFirstKind => {
                if degree == 0 {
                    1.0 / PI.sqrt()
                } else {
                    (2.0 / PI).sqrt()
                }
            }
            BasisKind::Legendre => ((2 * degree + 1) as f64 / 2.0).sqrt(),
        }
    }

    /// `∫_{-1}^{1} dω`.
    pub fn total_measure(self) -> f64 {
        match self {
            BasisKind::ChebyshevFirstKind => PI,
            BasisKind::Legendre => 2.0,
        }
    }

    /// Density of `dω` with respect to `dx` (infinite at ±1 for Chebyshev).
    pub fn weight(self, x: f64) -> f64 {
        match self {
            BasisKind::ChebyshevFirstKind => 1.0 / (1.0 - x * x).sqrt(),
            BasisKind::Legendre => 1.0,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            BasisKind::ChebyshevFirstKind => "chebyshev1",
            BasisKind::Legendre => "legendre",
        }
    }

    /// Coefficients `(a_k, b_k)` of `φ_{k+1} = a_k(x) φ_k + b_k φ_{k-1}` for `k >= 1`,
    /// with `a_k(x) = a_k · x`.
    #[inline]
    fn recurrence(self, k: usize) -> (f64, f64) {
        match self {
            BasisKind::ChebyshevFirstKind => (2.0, -1.0),
            BasisKind::Legendre => {
                let kf = k as f64;
                ((2.0 * kf + 1.0) / (kf + 1.0), -kf / (kf + 1.0))
            }
        }
    }
}

impl std::fmt::Display for BasisKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for BasisKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "chebyshev1" | "chebyshev" | "cheb" => Ok(BasisKind::ChebyshevFirstKind),
            "legendre" | "leg" => Ok(BasisKind::Legendre),
            other => Err(Error::InvalidArgument(format!("unknown basis '{other}'"))),
        }
    }
}

/// Clamps `x` into [-1, 1] when it lies within [`DOMAIN_SLACK`] of the interval.
pub fn clamp_domain(x: f64) -> Result<f64> {
    if x.is_nan() || x.abs() > 1.0 + DOMAIN_SLACK {
        Err(Error::Domain { x })
    } else {
        Ok(x.clamp(-1.0, 1.0))
    }
}

/// Classical `T_ℓ(x)` or `P_ℓ(x)` by forward recurrence. Valid for any real `x`.
pub fn eval_classical(basis: BasisKind, degree: usize, x: f64) -> f64 {
    let mut prev = 1.0;
    if degree == 0 {
        return prev;
    }
    let mut cur = x;
    for k in 1..degree {
        let (a, b) = basis.recurrence(k);
        let next = a * x * cur + b * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Orthonormal `Φ̃_ℓ(x)`.
pub fn eval_normalized(basis: BasisKind, degree: usize, x: f64) -> Result<f64> {
    let x = clamp_domain(x)?;
    Ok(basis.normalization(degree) * eval_classical(basis, degree, x))
}

/// Classical values `φ_0(x), …, φ_L(x)` written into `out` (length `L + 1`).
pub(crate) fn fill_classical(basis: BasisKind, x: f64, out: &mut [f64]) {
    let Some(first) = out.first_mut() else {
        return;
    };
    *first = 1.0;
    if out.len() == 1 {
        return;
    }
    out[1] = x;
    for k in 1..out.len() - 1 {
        let (a, b) = basis.recurrence(k);
        out[k + 1] = a * x * out[k] + b * out[k - 1];
    }
}

/// Evaluates `Σ_ℓ c_ℓ φ_ℓ(x)` over the *classical* family by Clenshaw's backward recurrence.
pub fn clenshaw_classical(basis: BasisKind, coeffs: &[f64], x: f64) -> f64 {
    match coeffs.len() {
        0 => return 0.0,
        1 => return coeffs[0],
        _ => {}
    }
    let n = coeffs.len() - 1;
    // b_k = c_k + a_k x b_{k+1} + b_{k+1}' b_{k+2}
    let mut b1 = 0.0; // b_{k+1}
    let mut b2 = 0.0; // b_{k+2}
    for k in (1..=n).rev() {
        let (a, _) = basis.recurrence(k);
        let (_, bnext) = basis.recurrence(k + 1);
        let bk = coeffs[k] + a * x * b1 + bnext * b2;
        b2 = b1;
        b1 = bk;
    }
    let (_, beta1) = basis.recurrence(1);
    coeffs[0] + x * b1 + beta1 * b2
}

/// Evaluates `Σ_ℓ β_ℓ Φ̃_ℓ(x)` with the normalization folded into the coefficients.
pub fn eval_series(basis: BasisKind, beta: &[f64], x: f64) -> Result<f64> {
    let x = clamp_domain(x)?;
    let scaled: Vec<f64> = beta
        .iter()
        .enumerate()
        .map(|(l, &b)| b * basis.normalization(l))
        .collect();
    Ok(clenshaw_classical(basis, &scaled, x))
}

/// Row-major `(N+1) × (L+1)` matrix `A[j][ℓ] = Φ̃_ℓ(x_j)`.
#[derive(Debug, Clone, PartialEq)]
pub struct BasisMatrix {
    basis: BasisKind,
    nodes: Vec<f64>,
    cols: usize,
    entries: Vec<f64>,
}

impl BasisMatrix {
    pub fn basis(&self) -> BasisKind {
        self.basis
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn rows(&self) -> usize {
        self.nodes.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Highest degree `L` represented by the columns.
    pub fn degree(&self) -> usize {
        self.cols - 1
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.entries[row * self.cols + col]
    }

    pub fn row(&self, row: usize) -> &[f64] {
        &self.entries[row * self.cols..(row + 1) * self.cols]
    }

    /// `A β`, the series evaluated at every node.
    pub fn apply(&self, coeffs: &[f64]) -> Result<Vec<f64>> {
        crate::error::check_len("coefficient vector", self.cols, coeffs.len())?;
        Ok((0..self.rows())
            .map(|j| self.row(j).iter().zip(coeffs).map(|(a, c)| a * c).sum())
            .collect())
    }
}

pub fn basis_matrix(basis: BasisKind, degree: usize, nodes: &[f64]) -> Result<BasisMatrix> {
    let cols = degree + 1;
    let mut entries = vec![0.0; nodes.len() * cols];
    let mut clamped = Vec::with_capacity(nodes.len());
    for (j, &x) in nodes.iter().enumerate() {
        let x = clamp_domain(x)?;
        clamped.push(x);
        let row = &mut entries[j * cols..(j + 1) * cols];
        fill_classical(basis, x, row);
        for (l, v) in row.iter_mut().enumerate() {
            *v *= basis.normalization(l);
        }
    }
    Ok(BasisMatrix {
        basis,
        nodes: clamped,
        cols,
        entries,
    })
}
