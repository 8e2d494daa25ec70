//! Characteristic functions of the telegraph equations with Caputo-Hadamard
//! time derivatives.
//!
//! With `u = ln^ν(t/t0)` and roots `ξ, η` of `z² + 2λz + b`,
//!
//! `û(β, t) = ½[(1 + λ/m) E_{ν,1}(ξu) + (1 - λ/m) E_{ν,1}(ηu)]`,
//!
//! where `b = c²β²` for the second-order space derivative and
//! `b = c²ψ(β)` for a Riesz-Feller derivative with symbol `ψ`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::roots::{roots, Roots};
use super::series::{recurrence_series, series_ok};
use crate::error::{Error, Result};
use crate::operators::RieszFeller;
use crate::specfun::{ml, ml_deriv, MlArgs};

/// Parameters `(ν, λ, c, t0, α)` of a Hadamard telegraph equation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HadamardModel {
    pub nu: f64,
    pub lambda: f64,
    pub c: f64,
    pub t0: f64,
    /// Space order; 2 is the second derivative.
    pub alpha: f64,
}

impl HadamardModel {
    pub fn new(nu: f64, lambda: f64, c: f64, t0: f64, alpha: f64) -> Result<Self> {
        if !(nu > 0.0 && nu <= 1.0) {
            return Err(Error::domain("nu", nu, "time order must lie in (0, 1]"));
        }
        if !(lambda > 0.0 && lambda.is_finite()) {
            return Err(Error::domain("lambda", lambda, "rate must be > 0"));
        }
        if !(c > 0.0 && c.is_finite()) {
            return Err(Error::domain("c", c, "velocity must be > 0"));
        }
        if !(t0 > 0.0 && t0.is_finite()) {
            return Err(Error::domain("t0", t0, "lower terminal must be > 0"));
        }
        if !(alpha > 0.0 && alpha <= 2.0) {
            return Err(Error::domain("alpha", alpha, "space order must lie in (0, 2]"));
        }
        Ok(HadamardModel { nu, lambda, c, t0, alpha })
    }

    /// `ln^ν(t/t0)`.
    pub fn time_variable(&self, t: f64) -> Result<f64> {
        if !(t >= self.t0 && t.is_finite()) {
            return Err(Error::domain("t", t, "time must satisfy t >= t0"));
        }
        Ok((t / self.t0).ln().powf(self.nu))
    }
}

/// Properties of a space-fractional evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceCfFlags {
    /// The CF is known to be the law of `S^α(c² L^ν(ln t/t0))` (`ν ≤ 1/2`, `θ = 0`).
    pub probabilistic: bool,
    /// `θ ≠ 0`: evaluated formally, no process representation is claimed.
    pub formal_extension: bool,
}

impl SpaceCfFlags {
    pub fn new(model: &HadamardModel, theta: f64) -> Self {
        SpaceCfFlags { probabilistic: model.nu <= 0.5 && theta == 0.0, formal_extension: theta != 0.0 }
    }
}

/// `û(β, t)` for the second-order space derivative (`model.alpha` must be 2).
pub fn hadamard_cf(model: &HadamardModel, t: f64, beta: f64) -> Result<Complex64> {
    if model.alpha != 2.0 {
        return Err(Error::domain("alpha", model.alpha, "hadamard_cf needs alpha = 2; use space_hadamard_cf"));
    }
    let u = model.time_variable(t)?;
    let b = Complex64::new(model.c * model.c * beta * beta, 0.0);
    telegraph_cf(model.nu, model.lambda, b, u)
}

/// `û(β, t)` for the Riesz-Feller space derivative of order `model.alpha` and
/// skewness `theta`. See [`SpaceCfFlags`] for the interpretation.
pub fn space_hadamard_cf(model: &HadamardModel, theta: f64, t: f64, beta: f64) -> Result<Complex64> {
    let rf = RieszFeller::new(model.alpha, theta)?;
    let u = model.time_variable(t)?;
    let b = model.c * model.c * rf.symbol(beta);
    telegraph_cf(model.nu, model.lambda, b, u)
}

/// `½[(1 + λ/m) E_{ν,1}(ξu) + (1 - λ/m) E_{ν,1}(ηu)]` for `u ≥ 0`.
///
/// Small `|root|·u` is summed directly from the power series, which has no
/// branch or confluence issues; otherwise see [`two_root_cf`].
pub fn telegraph_cf(nu: f64, lambda: f64, b: Complex64, u: f64) -> Result<Complex64> {
    if u == 0.0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    let r = roots(lambda, b);
    if series_ok(nu, r.radius(), u) {
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        return Ok(recurrence_series(nu, 1.0, lambda, b, u, one, zero));
    }
    two_root_cf(nu, lambda, &r, u)
}

/// Mittag-Leffler form of [`telegraph_cf`] for given roots. Confluent roots
/// use the limit `E_{ν,1}(-λu) + λu E'_{ν,1}(-λu)`.
pub fn two_root_cf(nu: f64, lambda: f64, r: &Roots, u: f64) -> Result<Complex64> {
    if r.confluent {
        let z = 0.5 * (r.xi + r.eta) * u;
        let e = ml(&MlArgs::new(nu, 1.0, z))?.value;
        let d = ml_deriv(&MlArgs::new(nu, 1.0, z))?.value;
        return Ok(e + lambda * u * d);
    }
    let e1 = ml(&MlArgs::new(nu, 1.0, r.xi * u))?.value;
    let e2 = ml(&MlArgs::new(nu, 1.0, r.eta * u))?.value;
    Ok(0.5 * (e1 + e2) + lambda / (2.0 * r.m) * (e1 - e2))
}
