use num_complex::Complex64;
use std::f64::consts::PI;

use super::laplace::{laplace_forward, Head, LaplacePolicy};
use super::report::{CheckPoint, CheckReport};
use crate::error::Result;
use crate::operators::{caputo_hadamard_deriv, kernel_laplace, HadamardQuad, HilferOrders, KernelKind};
use crate::solutions::{hilfer_kernel, roots};
use crate::specfun::{ml, rgamma, MlArgs};
use crate::stochastic::EmpiricalCf;

/// Exponential growth rate of the time-domain kernel: roots `r` of
/// `z² + 2λz + b` with `|arg r| < γπ/2` make `E_γ(r t^γ)` grow like
/// `e^{Re(r^{1/γ}) t}`.
pub fn kernel_growth_rate(orders: &HilferOrders, lambda: f64, b: Complex64) -> f64 {
    let g = orders.gamma();
    let r = roots(lambda, b);
    [r.xi, r.eta]
        .iter()
        .filter(|z| z.norm() > 0.0 && z.arg().abs() < g * PI / 2.0)
        .map(|z| z.powf(1.0 / g).re)
        .fold(0.0, f64::max)
}

/// Small-time series of the kernel,
/// `Σ_{k≥1} h_k t^{β'-1+γk}/Γ(γk+β')` with `h_k` the divided differences of
/// `z^k` at the two roots, truncated on `(0, t_min]`.
fn kernel_head(kind: KernelKind, orders: &HilferOrders, lambda: f64, b: Complex64, t_min: f64) -> Head {
    let g = orders.gamma();
    let index = orders.ml_index(kind);
    let mut terms = Vec::new();
    let (mut prev, mut cur) = (Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0));
    let mut small = 0;
    let mut peak = 0.0_f64;
    for k in 1..2000 {
        let q = index + g * k as f64;
        let c = cur * rgamma(q);
        let size = c.norm() * t_min.powf(q - 1.0);
        terms.push((c, q - 1.0));
        peak = peak.max(size);
        if size <= 1e-18 * peak {
            small += 1;
            if small >= 3 {
                break;
            }
        } else {
            small = 0;
        }
        let next = -2.0 * lambda * cur - b * prev;
        prev = cur;
        cur = next;
    }
    Head { t_min, terms }
}

/// Forward Laplace transform of `hilfer_kernel` against `kernel_laplace`, at
/// relative tolerance `tol`.
///
/// Kernels that are not integrable at the origin (leading power ≤ -1) use the
/// finite-part head series on `(0, t_min]`.
pub fn check_kernel(
    kind: KernelKind,
    orders: &HilferOrders,
    lambda: f64,
    b: Complex64,
    s_list: &[Complex64],
    tol: f64,
) -> CheckReport {
    let name = format!("kernel {kind:?} gamma={} delta={} lambda={} b={}", orders.gamma(), orders.delta(), lambda, b);
    let lead = orders.small_time_exponent(kind);
    let growth = kernel_growth_rate(orders, lambda, b);
    let head = if lead <= -1.0 {
        let r = roots(lambda, b).radius().max(1.0);
        let smax = s_list.iter().map(|s| s.norm()).fold(1.0, f64::max);
        let t_min = (0.5 / r).powf(1.0 / orders.gamma()).min(0.5 / smax);
        Some(kernel_head(kind, orders, lambda, b, t_min))
    } else {
        None
    };
    let policy = LaplacePolicy { growth_rate: growth, small_time_exponent: lead, head, ..Default::default() };
    let mut points = Vec::new();
    let mut errors = Vec::new();
    for &s in s_list {
        let input = format!("s={s}");
        let expected = match kernel_laplace(kind, orders, lambda, b, s) {
            Ok(v) => v,
            Err(e) => {
                errors.push(format!("{input}: {e}"));
                continue;
            }
        };
        match laplace_forward(|t| hilfer_kernel(kind, orders, lambda, b, t), s, &policy) {
            Ok(observed) => points.push(CheckPoint { input, expected, observed, tolerance: tol * expected.norm() }),
            Err(e) => errors.push(format!("{input}: {e}")),
        }
    }
    CheckReport::with_errors(name, points, 1.0, errors)
}

/// Quadrature Caputo-Hadamard derivative of `E_{ν,1}(η ln^ν(t/t0))` against
/// `η E_{ν,1}(η ln^ν(t/t0))`, absolute tolerance `tol`.
pub fn check_eigen(nu: f64, etas: &[f64], t0: f64, t_list: &[f64], tol: f64) -> CheckReport {
    let name = format!("eigen nu={nu} t0={t0}");
    let mut points = Vec::new();
    let mut errors = Vec::new();
    let spec = match HadamardQuad::with_t0(t0) {
        Ok(s) => s,
        Err(e) => return CheckReport::with_errors(name, points, 1.0, vec![e.to_string()]),
    };
    for &eta in etas {
        let f = |t: f64| -> f64 {
            let u = (t / t0).ln().max(0.0).powf(nu);
            ml(&MlArgs::new(nu, 1.0, eta * u)).map_or(f64::NAN, |r| r.value.re)
        };
        for &t in t_list {
            let input = format!("eta={eta} t={t}");
            match caputo_hadamard_deriv(f, nu, t, &spec) {
                Ok(d) => {
                    points.push(CheckPoint { input, expected: (eta * f(t)).into(), observed: d.into(), tolerance: tol })
                }
                Err(e) => errors.push(format!("{input}: {e}")),
            }
        }
    }
    CheckReport::with_errors(name, points, 1.0, errors)
}

/// Analytic CF against a Monte-Carlo estimate: a frequency is in band when
/// `|analytic - estimate| ≤ band_multiplier · stderr`, and the check passes when
/// at least `pass_fraction` of the frequencies are in band.
pub fn mc_compare<F>(
    name: &str,
    analytic: F,
    empirical: &EmpiricalCf,
    band_multiplier: f64,
    pass_fraction: f64,
) -> CheckReport
where
    F: Fn(f64) -> Result<Complex64>,
{
    let mut points = Vec::new();
    let mut errors = Vec::new();
    for ((&beta, &est), &se) in empirical.betas.iter().zip(&empirical.estimate).zip(&empirical.stderr) {
        let input = format!("beta={beta}");
        match analytic(beta) {
            Ok(expected) => points.push(CheckPoint { input, expected, observed: est, tolerance: band_multiplier * se }),
            Err(e) => errors.push(format!("{input}: {e}")),
        }
    }
    CheckReport::with_errors(name, points, pass_fraction, errors)
}
