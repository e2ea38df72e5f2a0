//! Closed-form l2- and l1-regularized weighted least squares polynomial
//! approximation on [-1, 1].
//!
//! Samples taken at Gauss nodes make the discrete Gram matrix of an
//! orthonormal Chebyshev or Legendre basis the identity, so both regularized
//! problems are solved coefficient by coefficient:
//!
//! ```
//! use regapprox::{basis::BasisKind, quadrature::gauss_rule, regsolve::*};
//!
//! let rule = gauss_rule(BasisKind::ChebyshevFirstKind, 40).unwrap();
//! let f: Vec<f64> = rule.nodes().iter().map(|x| x.exp()).collect();
//! let penalty = PenaltySpec::constant(20, 1e-3, 1.0).unwrap();
//! let fit = fit(BasisKind::ChebyshevFirstKind, 20, &rule, &f, &penalty, Solver::L1).unwrap();
//! assert!((fit.eval(0.5).unwrap() - 0.5f64.exp()).abs() < 1e-2);
//! ```
//!
//! Modules:
//!
//! * [`basis`]: orthonormal polynomials, basis matrices, Clenshaw evaluation
//! * [`quadrature`]: Gauss rules (closed form / Golub–Welsch)
//! * [`regsolve`]: the closed-form l2 and l1 solvers
//! * [`barycentric`]: regularized barycentric formulas for `L = N`
//! * [`analysis`]: Lebesgue constants, sparsity counts, error metrics
//! * [`signals`]: test functions, Airy, seeded noise, CSV input
//! * [`cli`]: the table-producing commands behind the `regapprox` binary

pub mod analysis;
pub mod barycentric;
pub mod basis;
pub mod cli;
pub mod error;
pub mod quadrature;
pub mod regsolve;
pub mod signals;

pub use error::{Error, Result};
