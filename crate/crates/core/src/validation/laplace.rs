//! Forward Laplace transform by quadrature, `∫_0^∞ e^{-st} f(t) dt`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::cell::RefCell;

use crate::error::{Error, Result};
use crate::quad::integrate_adaptive;

/// Small-time expansion `f(t) = Σ c_k t^{p_k}` on `(0, t_min]`.
///
/// The head contributes the finite-part integral
/// `Σ_k c_k Σ_n (-s)^n/n! · t_min^{p_k+n+1}/(p_k+n+1)`, which is the analytic
/// continuation of the transform in the exponents and so also covers
/// non-integrable powers `p_k ≤ -1` (except `p_k + n + 1 = 0`).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Head {
    pub t_min: f64,
    pub terms: Vec<(Complex64, f64)>,
}

impl Head {
    pub fn transform(&self, s: Complex64) -> Result<Complex64> {
        let t = self.t_min;
        let mut total = Complex64::new(0.0, 0.0);
        for &(c, p) in &self.terms {
            let mut sum = Complex64::new(0.0, 0.0);
            let mut coeff = Complex64::new(1.0, 0.0);
            let mut tpow = t.powf(p + 1.0);
            for n in 0..500 {
                let denom = p + n as f64 + 1.0;
                if denom.abs() < 1e-12 {
                    return Err(Error::Singularity { t: 0.0, exponent: p });
                }
                let term = coeff * (tpow / denom);
                sum += term;
                if n > 2 && term.norm() <= 1e-18 * sum.norm() {
                    break;
                }
                coeff *= -s / (n as f64 + 1.0);
                tpow *= t;
            }
            total += c * sum;
        }
        Ok(total)
    }
}

/// How to truncate and start the transform integral.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LaplacePolicy {
    /// `|f(t)|` grows no faster than `e^{growth_rate·t}` (times a power).
    pub growth_rate: f64,
    /// Leading power of `f` at the origin, used to smooth the first interval.
    pub small_time_exponent: f64,
    /// Analytic treatment of `(0, t_min]`.
    pub head: Option<Head>,
    pub rel_tol: f64,
}

impl Default for LaplacePolicy {
    fn default() -> Self {
        LaplacePolicy { growth_rate: 0.0, small_time_exponent: 0.0, head: None, rel_tol: 1e-12 }
    }
}

const MAX_DOUBLINGS: usize = 60;
const TAIL_TOL: f64 = 1e-10;

/// `∫_0^∞ e^{-st} f(t) dt` for `Re s > policy.growth_rate`.
///
/// Adaptive Gauss-Kronrod on `[0, T]` with `T` doubled until the exponential
/// tail bound `|f(T)| e^{-Re(s) T} · T / (Re(s) - growth)` falls below `1e-10`
/// of the result. Without a head, `f` must be integrable at 0
/// (`small_time_exponent > -1`); the first interval is integrated in
/// `t = T₁ w^q`, `q = 1/(1 + p)`, which removes the leading singularity.
pub fn laplace_forward<F>(f: F, s: Complex64, policy: &LaplacePolicy) -> Result<Complex64>
where
    F: Fn(f64) -> Result<Complex64>,
{
    let margin = s.re - policy.growth_rate;
    if !(margin > 0.0) {
        return Err(Error::domain("s", s.re, "Re s must exceed the growth rate of f"));
    }
    let p = policy.small_time_exponent;
    let (mut total, start) = match &policy.head {
        Some(h) => (h.transform(s)?, h.t_min),
        None => {
            if !(p > -1.0) {
                return Err(Error::Singularity { t: 0.0, exponent: p });
            }
            (Complex64::new(0.0, 0.0), 0.0)
        }
    };

    let failure: RefCell<Option<Error>> = RefCell::new(None);
    let eval = |t: f64| -> Complex64 {
        match f(t) {
            Ok(v) if v.re.is_finite() && v.im.is_finite() => v * (-s * t).exp(),
            Ok(_) => {
                failure.borrow_mut().get_or_insert(Error::EvaluationFailure { at: t });
                Complex64::new(0.0, 0.0)
            }
            Err(e) => {
                failure.borrow_mut().get_or_insert(e);
                Complex64::new(0.0, 0.0)
            }
        }
    };

    let abs_floor = 1e-300;
    let first = (1.0 / margin).min(1.0).max(start * 2.0);
    if start == 0.0 && p < 0.0 {
        let q = 1.0 / (1.0 + p);
        let (v, _) = integrate_adaptive(
            |w: f64| {
                if w <= 0.0 {
                    return Complex64::new(0.0, 0.0);
                }
                let t = first * w.powf(q);
                eval(t) * (first * q * w.powf(q - 1.0))
            },
            0.0,
            1.0,
            abs_floor,
            policy.rel_tol,
        )?;
        total += v;
    } else {
        let (v, _) = integrate_adaptive(eval, start, first, abs_floor, policy.rel_tol)?;
        total += v;
    }
    if let Some(e) = failure.borrow_mut().take() {
        return Err(e);
    }

    let mut a = first;
    for _ in 0..MAX_DOUBLINGS {
        let b = 2.0 * a;
        let (v, _) = integrate_adaptive(eval, a, b, abs_floor, policy.rel_tol)?;
        if let Some(e) = failure.borrow_mut().take() {
            return Err(e);
        }
        total += v;
        let fb = f(b)?.norm();
        let tail = fb * (-s.re * b).exp() * b.max(1.0) / margin;
        if tail <= TAIL_TOL * total.norm() || (tail == 0.0 && total.norm() == 0.0) {
            return Ok(total);
        }
        a = b;
    }
    Err(Error::Quadrature("exponential tail bound not met".into()))
}
