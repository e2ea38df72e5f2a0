#![allow(dead_code)]

use nalgebra::{DMatrix, DVector};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use regapprox::basis::{basis_matrix, BasisKind};
use regapprox::quadrature::QuadratureRule;
use regapprox::regsolve::PenaltySpec;

pub struct Rng(ChaCha8Rng);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(ChaCha8Rng::seed_from_u64(seed))
    }

    pub fn unit(&mut self) -> f64 {
        (self.0.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    pub fn range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.unit()
    }

    pub fn index(&mut self, lo: usize, hi: usize) -> usize {
        lo + (self.0.next_u64() % (hi - lo + 1) as u64) as usize
    }

    pub fn pick<T: Copy>(&mut self, items: &[T]) -> T {
        items[self.index(0, items.len() - 1)]
    }

    pub fn basis(&mut self) -> BasisKind {
        self.pick(&[BasisKind::ChebyshevFirstKind, BasisKind::Legendre])
    }
}

/// Dense solve of `(AᵀΛA + λ diag(μ²)) β = AᵀΛf` without assuming orthogonality.
pub fn dense_l2(rule: &QuadratureRule, degree: usize, f: &[f64], penalty: &PenaltySpec) -> Vec<f64> {
    let a = basis_matrix(rule.basis(), degree, rule.nodes()).unwrap();
    let am = DMatrix::from_fn(a.rows(), a.cols(), |i, j| a.get(i, j));
    let lam = DMatrix::from_diagonal(&DVector::from_column_slice(rule.weights()));
    let mut gram = am.transpose() * &lam * &am;
    for (l, m) in penalty.mu().iter().enumerate() {
        gram[(l, l)] += penalty.lambda() * m * m;
    }
    let rhs = am.transpose() * &lam * DVector::from_column_slice(f);
    gram.lu().solve(&rhs).expect("regularized Gram matrix is invertible").as_slice().to_vec()
}
