//! Special functions consumed by the analytic and stochastic modules.

mod bessel;
mod contour;
mod gamma;
mod mittag_leffler;

pub use bessel::{bessel_i, BESSEL_X_MAX};
pub use gamma::{erfc, gamma, ln_gamma, rgamma, sin_pi};
pub use mittag_leffler::{ml, ml_deriv, Branch, EvalResult, MlArgs, Z_MAX};
