//! Time-domain kernels and characteristic function of the Hilfer telegraph
//! equation
//!
//! `D^{2γ,δ} u + 2λ D^{γ,δ} u = c² D^α_θ u - ω u + f(x, t)`.
//!
//! In Laplace space the solution is
//! `Δ(s) f̂1 + 2λ Ξ(s) f̂2 + Ω(s) F̂(s)`; each kernel
//! `s^p / (s^{2γ} + 2λs^γ + b)` inverts to
//! `t^{β'-1} [E_{γ,β'}(ξt^γ) - E_{γ,β'}(ηt^γ)] / (ξ - η)` with `β' = γ - p`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::roots::{roots, Roots};
use super::series::{recurrence_series, series_ok};
use crate::error::{Error, Result};
use crate::operators::{HilferOrders, KernelKind, RieszFeller};
use crate::quad::GaussRule;
use crate::specfun::{ml, ml_deriv, MlArgs};

/// Coefficient of the `f̂2` term in the assembled solution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum F2Convention {
    /// `2λ Ξ f̂2`, as obtained from the Laplace-domain solution.
    #[default]
    TwoLambda,
    /// `Ξ f̂2`, without the `2λ` factor.
    Printed,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HilferModel {
    pub orders: HilferOrders,
    pub lambda: f64,
    pub c: f64,
    pub omega: f64,
    pub rf: RieszFeller,
    pub f2_convention: F2Convention,
}

impl HilferModel {
    pub fn new(orders: HilferOrders, lambda: f64, c: f64, omega: f64, rf: RieszFeller) -> Result<Self> {
        if !(lambda >= 0.0 && lambda.is_finite()) {
            return Err(Error::domain("lambda", lambda, "rate must be >= 0"));
        }
        if !(c > 0.0 && c.is_finite()) {
            return Err(Error::domain("c", c, "velocity must be > 0"));
        }
        if !(omega >= 0.0 && omega.is_finite()) {
            return Err(Error::domain("omega", omega, "omega must be >= 0"));
        }
        Ok(HilferModel { orders, lambda, c, omega, rf, f2_convention: F2Convention::default() })
    }

    pub fn with_f2_convention(mut self, convention: F2Convention) -> Self {
        self.f2_convention = convention;
        self
    }

    /// `b(β) = ω + c² ψ(β)`.
    pub fn b(&self, beta: f64) -> Complex64 {
        self.omega + self.c * self.c * self.rf.symbol(beta)
    }
}

/// Time-domain kernel of the given kind at `t > 0`.
pub fn hilfer_kernel(kind: KernelKind, orders: &HilferOrders, lambda: f64, b: Complex64, t: f64) -> Result<Complex64> {
    if !(t > 0.0 && t.is_finite()) {
        return Err(Error::domain("t", t, "kernel time must be > 0"));
    }
    let g = orders.gamma();
    let index = orders.ml_index(kind);
    let x = t.powf(g);
    let r = roots(lambda, b);
    if series_ok(g, r.radius(), x) {
        let zero = Complex64::new(0.0, 0.0);
        let one = Complex64::new(1.0, 0.0);
        let s = recurrence_series(g, index, lambda, b, x, zero, one);
        return scale(s, t, index - 1.0, orders.small_time_exponent(kind));
    }
    two_root_kernel(kind, orders, &r, t)
}

/// Mittag-Leffler form of [`hilfer_kernel`] for given roots; confluent roots
/// use `t^{β'-1+γ} E'_{γ,β'}(ξt^γ)`.
pub fn two_root_kernel(kind: KernelKind, orders: &HilferOrders, r: &Roots, t: f64) -> Result<Complex64> {
    let g = orders.gamma();
    let index = orders.ml_index(kind);
    let x = t.powf(g);
    let lead = orders.small_time_exponent(kind);
    if r.confluent {
        let z = 0.5 * (r.xi + r.eta) * x;
        let d = ml_deriv(&MlArgs::new(g, index, z))?.value;
        return scale(d * x, t, index - 1.0, lead);
    }
    let e1 = ml(&MlArgs::new(g, index, r.xi * x))?.value;
    let e2 = ml(&MlArgs::new(g, index, r.eta * x))?.value;
    scale((e1 - e2) / (2.0 * r.m), t, index - 1.0, lead)
}

fn scale(v: Complex64, t: f64, power: f64, lead: f64) -> Result<Complex64> {
    let out = v * t.powf(power);
    if !(out.re.is_finite() && out.im.is_finite()) {
        return Err(Error::Singularity { t, exponent: lead });
    }
    Ok(out)
}

/// Forcing term `F̂(β, t)` of the Fourier-transformed equation.
pub type Forcing<'a> = &'a (dyn Fn(f64, f64) -> Complex64 + Sync);

/// Nodes of the Gauss-Legendre rule for the forcing convolution.
pub const CONVOLUTION_NODES: usize = 64;

/// `û(β, t) = Δ(t) f̂1 + k Ξ(t) f̂2 + ∫_0^t Ω(τ) F̂(β, t - τ) dτ`, with `k = 2λ`
/// or 1 according to `model.f2_convention`.
///
/// The convolution uses `τ = v^{1/γ}`, which turns the `τ^{2γ-1}` behaviour of
/// `Ω` at the origin into a smooth integrand.
pub fn hilfer_cf(
    model: &HilferModel,
    t: f64,
    beta: f64,
    f1_hat: Complex64,
    f2_hat: Complex64,
    forcing: Option<Forcing<'_>>,
) -> Result<Complex64> {
    let o = &model.orders;
    let b = model.b(beta);
    let lambda = model.lambda;
    let mut total = Complex64::new(0.0, 0.0);
    if f1_hat != Complex64::new(0.0, 0.0) {
        total += hilfer_kernel(KernelKind::Delta, o, lambda, b, t)? * f1_hat;
    }
    if f2_hat != Complex64::new(0.0, 0.0) {
        let k = match model.f2_convention {
            F2Convention::TwoLambda => 2.0 * lambda,
            F2Convention::Printed => 1.0,
        };
        if k != 0.0 {
            total += hilfer_kernel(KernelKind::Xi, o, lambda, b, t)? * (k * f2_hat);
        }
    }
    if let Some(f) = forcing {
        let g = o.gamma();
        let rule = GaussRule::new(CONVOLUTION_NODES);
        let mut failure = None;
        let conv = rule.integrate(0.0, t.powf(g), |v| {
            if v <= 0.0 {
                return Complex64::new(0.0, 0.0);
            }
            let tau = v.powf(1.0 / g);
            let jac = tau / (g * v);
            let kernel = match hilfer_kernel(KernelKind::Omega, o, lambda, b, tau) {
                Ok(k) => k,
                Err(e) => {
                    failure.get_or_insert(e);
                    return Complex64::new(0.0, 0.0);
                }
            };
            let fv = f(beta, t - tau);
            if !(fv.re.is_finite() && fv.im.is_finite()) {
                failure.get_or_insert(Error::Quadrature(format!("forcing is not finite at t = {}", t - tau)));
            }
            kernel * fv * jac
        });
        if let Some(e) = failure {
            return Err(e);
        }
        total += conv;
    }
    Ok(total)
}
