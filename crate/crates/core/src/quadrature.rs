//! Gauss quadrature rules whose nodes are the zeros of `Φ̃_{N+1}`.
//!
//! Chebyshev–Gauss rules come from the closed-form angle formula. Gauss–Legendre
//! rules use Golub–Welsch: the eigenvalues of the symmetric tridiagonal Jacobi
//! matrix are the nodes and `2 v_0²` (first eigenvector component) the weights.

use std::f64::consts::PI;

use crate::basis::BasisKind;
use crate::error::{check_len, Error, Result};

/// Maximum implicit QL iterations spent on a single eigenvalue.
const MAX_QL_ITERATIONS: usize = 60;

#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    basis: BasisKind,
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl QuadratureRule {
    pub fn basis(&self) -> BasisKind {
        self.basis
    }

    /// Nodes in strictly ascending order.
    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Number of nodes, `N + 1`.
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// `N`, one less than the node count.
    pub fn n(&self) -> usize {
        self.nodes.len() - 1
    }

    /// `Σ_j ω_j v_j`.
    pub fn integrate(&self, values: &[f64]) -> Result<f64> {
        check_len("quadrature values", self.len(), values.len())?;
        Ok(self.weights.iter().zip(values).map(|(w, v)| w * v).sum())
    }

    /// Applies the rule to a function sampled at the nodes.
    pub fn integrate_fn(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }
}

/// `N + 1`-point Gauss rule for `basis`, exact on polynomials of degree `2N + 1`.
pub fn gauss_rule(basis: BasisKind, n: usize) -> Result<QuadratureRule> {
    let (nodes, weights) = match basis {
        BasisKind::ChebyshevFirstKind => chebyshev_gauss(n),
        BasisKind::Legendre => golub_welsch_legendre(n)?,
    };
    Ok(QuadratureRule {
        basis,
        nodes,
        weights,
    })
}

fn chebyshev_gauss(n: usize) -> (Vec<f64>, Vec<f64>) {
    let m = n + 1;
    // cos((2(N-j)+1)π/(2N+2)) == sin((2j-N)π/(2N+2)); sin is odd bit-for-bit.
    let nodes = (0..m)
        .map(|j| {
            let k = 2.0 * j as f64 - n as f64;
            (k * PI / (2.0 * m as f64)).sin()
        })
        .collect();
    (nodes, vec![PI / m as f64; m])
}

fn golub_welsch_legendre(n: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    let m = n + 1;
    let mut diag = vec![0.0; m];
    let mut offdiag: Vec<f64> = (1..m)
        .map(|k| {
            let k = k as f64;
            k / (4.0 * k * k - 1.0).sqrt()
        })
        .collect();
    offdiag.push(0.0);
    let mut first = vec![0.0; m];
    first[0] = 1.0;
    tridiagonal_ql(&mut diag, &mut offdiag, &mut first).ok_or(Error::EigenNoConvergence { n })?;

    let mut pairs: Vec<(f64, f64)> = diag
        .into_iter()
        .zip(first)
        .map(|(x, v)| (x, 2.0 * v * v))
        .collect();
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0));

    let mut nodes: Vec<f64> = pairs.iter().map(|p| p.0).collect();
    let mut weights: Vec<f64> = pairs.iter().map(|p| p.1).collect();
    for j in 0..m / 2 {
        let k = m - 1 - j;
        let x = 0.5 * (nodes[k] - nodes[j]);
        let w = 0.5 * (weights[j] + weights[k]);
        nodes[j] = -x;
        nodes[k] = x;
        weights[j] = w;
        weights[k] = w;
    }
    if m % 2 == 1 {
        nodes[m / 2] = 0.0;
    }
    Ok((nodes, weights))
}

/// Implicit QL with Wilkinson shifts on a symmetric tridiagonal matrix.
///
/// `diag` receives the eigenvalues. `offdiag[i]` couples rows `i` and `i+1`
/// (last entry unused). Only the first row of the eigenvector matrix is
/// accumulated, in `first`, which must start as `e_0`.
fn tridiagonal_ql(diag: &mut [f64], offdiag: &mut [f64], first: &mut [f64]) -> Option<()> {
    let n = diag.len();
    for l in 0..n {
        let mut iterations = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = diag[m].abs() + diag[m + 1].abs();
                if offdiag[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iterations += 1;
            if iterations > MAX_QL_ITERATIONS {
                return None;
            }
            let mut g = (diag[l + 1] - diag[l]) / (2.0 * offdiag[l]);
            let mut r = g.hypot(1.0);
            g = diag[m] - diag[l] + offdiag[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut underflow = false;
            for i in (l..m).rev() {
                let f = s * offdiag[i];
                let b = c * offdiag[i];
                r = f.hypot(g);
                offdiag[i + 1] = r;
                if r == 0.0 {
                    diag[i + 1] -= p;
                    offdiag[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = diag[i + 1] - p;
                r = (diag[i] - g) * s + 2.0 * c * b;
                p = s * r;
                diag[i + 1] = g + p;
                g = c * r - b;
                let z = first[i + 1];
                first[i + 1] = s * first[i] + c * z;
                first[i] = c * first[i] - s * z;
            }
            if underflow {
                continue;
            }
            diag[l] -= p;
            offdiag[l] = g;
            offdiag[m] = 0.0;
        }
    }
    Some(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::{basis_matrix, eval_normalized};

    const BASES: [BasisKind; 2] = [BasisKind::ChebyshevFirstKind, BasisKind::Legendre];

    #[test]
    fn closed_form_small_rules() {
        let r = gauss_rule(BasisKind::ChebyshevFirstKind, 1).unwrap();
        let h = 0.5f64.sqrt();
        assert!((r.nodes()[0] + h).abs() < 1e-15 && (r.nodes()[1] - h).abs() < 1e-15);
        assert!(r.weights().iter().all(|w| (w - PI / 2.0).abs() < 1e-15));

        let r = gauss_rule(BasisKind::Legendre, 1).unwrap();
        let s = 1.0 / 3f64.sqrt();
        assert!((r.nodes()[0] + s).abs() < 1e-15 && (r.nodes()[1] - s).abs() < 1e-15);
        assert!(r.weights().iter().all(|w| (w - 1.0).abs() < 1e-15));

        let r = gauss_rule(BasisKind::Legendre, 2).unwrap();
        let s = 0.6f64.sqrt();
        assert!((r.nodes()[0] + s).abs() < 1e-15);
        assert_eq!(r.nodes()[1], 0.0);
        assert!((r.nodes()[2] - s).abs() < 1e-15);
        let expect = [5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0];
        for (w, e) in r.weights().iter().zip(expect) {
            assert!((w - e).abs() < 1e-15);
        }
    }

    #[test]
    fn single_node_rules() {
        let r = gauss_rule(BasisKind::Legendre, 0).unwrap();
        assert_eq!(r.nodes(), &[0.0]);
        assert!((r.weights()[0] - 2.0).abs() < 1e-15);
        let r = gauss_rule(BasisKind::ChebyshevFirstKind, 0).unwrap();
        assert_eq!(r.nodes(), &[0.0]);
    }

    #[test]
    fn integrate_examples() {
        let r = gauss_rule(BasisKind::ChebyshevFirstKind, 1).unwrap();
        let v: Vec<f64> = r.nodes().iter().map(|x| x * x).collect();
        assert!((r.integrate(&v).unwrap() - PI / 2.0).abs() < 1e-14);

        let r = gauss_rule(BasisKind::Legendre, 2).unwrap();
        assert!((r.integrate(&[1.0; 3]).unwrap() - 2.0).abs() < 1e-15);

        let r = gauss_rule(BasisKind::Legendre, 5).unwrap();
        let v: Vec<f64> = r.nodes().iter().map(|x| x.powi(8)).collect();
        assert!((r.integrate(&v).unwrap() - 2.0 / 9.0).abs() < 1e-12);

        assert!(matches!(
            r.integrate(&[1.0; 3]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn ordering_symmetry_and_measure() {
        for basis in BASES {
            for n in [0, 1, 2, 7, 30, 101, 200] {
                let r = gauss_rule(basis, n).unwrap();
                assert_eq!(r.len(), n + 1);
                assert!(r.nodes().windows(2).all(|w| w[0] < w[1]));
                assert!(r.nodes().iter().all(|x| x.abs() < 1.0));
                assert!(r.weights().iter().all(|&w| w > 0.0));
                for j in 0..=n {
                    assert!((r.nodes()[j] + r.nodes()[n - j]).abs() <= 1e-14);
                    assert!((r.weights()[j] - r.weights()[n - j]).abs() <= 1e-14);
                }
                let total: f64 = r.weights().iter().sum();
                assert!((total - basis.total_measure()).abs() < 1e-13, "{basis} {n}");
            }
        }
    }

    #[test]
    fn nodes_are_zeros() {
        for basis in BASES {
            for n in [3, 40, 150] {
                let r = gauss_rule(basis, n).unwrap();
                let scale = basis.normalization(n + 1);
                for &x in r.nodes() {
                    let v = eval_normalized(basis, n + 1, x).unwrap();
                    assert!(v.abs() <= 1e-10 * scale.max(1.0), "{basis} {n} {x} {v}");
                }
            }
        }
    }

    #[test]
    fn gram_identity_small() {
        for basis in BASES {
            let n = 12;
            let r = gauss_rule(basis, n).unwrap();
            let a = basis_matrix(basis, n, r.nodes()).unwrap();
            for l in 0..=n {
                for k in 0..=n {
                    let g: f64 = (0..=n).map(|j| r.weights()[j] * a.get(j, l) * a.get(j, k)).sum();
                    let expect = if l == k { 1.0 } else { 0.0 };
                    assert!((g - expect).abs() < 1e-13);
                }
            }
        }
    }

    #[test]
    fn beyond_n_gram_is_not_identity() {
        // Degree N+1 is a zero of the rule, so its discrete norm vanishes.
        let r = gauss_rule(BasisKind::Legendre, 4).unwrap();
        let a = basis_matrix(BasisKind::Legendre, 5, r.nodes()).unwrap();
        let g: f64 = (0..5).map(|j| r.weights()[j] * a.get(j, 5).powi(2)).sum();
        assert!(g.abs() < 1e-12);
    }
}
