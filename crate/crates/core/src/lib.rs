//! Analytical and Monte-Carlo machinery for space-time fractional telegraph
//! equations.
//!
//! The crate is organised bottom-up:
//!
//! * [`specfun`]: Mittag-Leffler functions (and derivative), modified Bessel
//!   `I0`/`I1`, reciprocal Gamma and `erfc`.
//! * [`operators`]: Riesz-Feller Fourier symbol, a quadrature Caputo-Hadamard
//!   derivative, and the Laplace-domain kernels of the Hilfer problem.
//! * [`solutions`]: closed-form characteristic functions, the time-domain
//!   Hilfer kernels, the classical telegraph density and Fourier inversion.
//! * [`stochastic`]: telegraph, Brownian-time, stable and inverse-stable
//!   samplers plus empirical characteristic functions.
//! * [`validation`]: independent oracles (forward Laplace quadrature,
//!   eigenfunction residuals, Monte-Carlo bands) producing [`CheckReport`]s.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod operators;
pub mod quad;
pub mod solutions;
pub mod specfun;
pub mod stochastic;
pub mod validation;

pub use error::{Error, Result};
pub use validation::CheckReport;

/// Complex number used for every characteristic function and symbol.
pub type ComplexValue = num_complex::Complex64;
