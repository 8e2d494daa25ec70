//! Two-parameter Mittag-Leffler function `E_{α,β}(z) = Σ z^k / Γ(αk + β)`
//! and its derivative in `z`.
//!
//! Branches, in order of preference:
//!
//! 1. `z = 0`: `1/Γ(β)`.
//! 2. Taylor series with compensated summation while the largest term stays
//!    within a factor `e³` of the result (`|z|^{1/α} ≤ 3`, `|z| ≤ 5`).
//! 3. Closed forms for `α ∈ {1, 2}`, `β ∈ {1, 2}` (exponential, cosh, sinh).
//! 4. Algebraic expansion `-Σ_{k≥1} z^{-k}/Γ(β - αk)` for real negative `z`
//!    with `α < 1` and `|z|^{1/α} ≥ 40`, truncated at its smallest term.
//! 5. Laplace-transform inversion on a parabolic contour (see `contour`).

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::contour::ml_contour;
use super::gamma::{ln_gamma, rgamma};
use crate::error::{Error, Result};

/// Largest `|z|` inside the certified domain.
pub const Z_MAX: f64 = 1e4;

const TAYLOR_MAX_ABS: f64 = 5.0;
const TAYLOR_MAX_GROWTH: f64 = 3.0;
const ASYMPTOTIC_MIN_GROWTH: f64 = 40.0;
const MAX_TERMS: usize = 10_000;

/// Arguments of a two-parameter Mittag-Leffler evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MlArgs {
    pub alpha: f64,
    pub beta: f64,
    pub z: Complex64,
}

impl MlArgs {
    pub fn new(alpha: f64, beta: f64, z: impl Into<Complex64>) -> Self {
        MlArgs { alpha, beta, z: z.into() }
    }

    fn validate(&self) -> Result<()> {
        if !(self.alpha > 0.0 && self.alpha <= 2.0) {
            return Err(Error::domain("alpha", self.alpha, "Mittag-Leffler order must lie in (0, 2]"));
        }
        if !self.beta.is_finite() {
            return Err(Error::domain("beta", self.beta, "Mittag-Leffler index must be finite"));
        }
        if !(self.z.re.is_finite() && self.z.im.is_finite()) {
            return Err(Error::domain("z", self.z.norm(), "argument must be finite"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    Taylor,
    Asymptotic,
    Contour,
    ClosedForm,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvalResult {
    pub value: Complex64,
    pub est_abs_error: f64,
    pub branch: Branch,
}

/// `E_{α,β}(z)` for `α ∈ (0, 2]`.
///
/// Points with `|z| > Z_MAX` are still evaluated but reported through
/// [`Error::Uncertified`], which carries the value. Exact closed forms
/// (`α, β ∈ {1, 2}`) are certified everywhere.
pub fn ml(args: &MlArgs) -> Result<EvalResult> {
    args.validate()?;
    let out = eval(args.alpha, args.beta, args.z);
    certify(args, out)
}

/// `d/dz E_{α,β}(z) = Σ_{k≥0} (k+1) z^k / Γ(α(k+1) + β)`.
pub fn ml_deriv(args: &MlArgs) -> Result<EvalResult> {
    args.validate()?;
    let out = eval_deriv(args.alpha, args.beta, args.z);
    certify(args, out)
}

/// Branch-selecting evaluation without domain checks. Used internally where
/// the arguments were validated upstream.
pub(crate) fn eval(alpha: f64, beta: f64, z: Complex64) -> EvalResult {
    let real_input = z.im == 0.0;
    let mut out = eval_inner(alpha, beta, z);
    if real_input {
        out.value.im = 0.0;
    }
    out
}

pub(crate) fn eval_deriv(alpha: f64, beta: f64, z: Complex64) -> EvalResult {
    let real_input = z.im == 0.0;
    let mut out = if z == Complex64::new(0.0, 0.0) {
        let v = rgamma(alpha + beta);
        EvalResult { value: v.into(), est_abs_error: f64::EPSILON * v.abs(), branch: Branch::Taylor }
    } else if taylor_ok(alpha, z) {
        taylor(alpha, beta, z, true)
    } else {
        // α z E'_{α,β}(z) = E_{α,β-1}(z) - (β - 1) E_{α,β}(z)
        let lower = eval_inner(alpha, beta - 1.0, z);
        let same = eval_inner(alpha, beta, z);
        let denom = alpha * z;
        EvalResult {
            value: (lower.value - (beta - 1.0) * same.value) / denom,
            est_abs_error: (lower.est_abs_error + (beta - 1.0).abs() * same.est_abs_error) / denom.norm(),
            branch: same.branch,
        }
    };
    if real_input {
        out.value.im = 0.0;
    }
    out
}

fn certify(args: &MlArgs, out: EvalResult) -> Result<EvalResult> {
    if args.z.norm() > Z_MAX && out.branch != Branch::ClosedForm {
        return Err(Error::Uncertified {
            re: out.value.re,
            im: out.value.im,
            est_abs_error: out.est_abs_error,
            reason: "|z| exceeds the certified Mittag-Leffler domain",
        });
    }
    Ok(out)
}

fn taylor_ok(alpha: f64, z: Complex64) -> bool {
    let r = z.norm();
    r <= TAYLOR_MAX_ABS && r.powf(1.0 / alpha) <= TAYLOR_MAX_GROWTH
}

fn eval_inner(alpha: f64, beta: f64, z: Complex64) -> EvalResult {
    if z == Complex64::new(0.0, 0.0) {
        let v = rgamma(beta);
        return EvalResult { value: v.into(), est_abs_error: f64::EPSILON * v.abs(), branch: Branch::Taylor };
    }
    if taylor_ok(alpha, z) {
        return taylor(alpha, beta, z, false);
    }
    if let Some(v) = closed_form(alpha, beta, z) {
        return EvalResult { value: v, est_abs_error: 4.0 * f64::EPSILON * v.norm(), branch: Branch::ClosedForm };
    }
    if z.im == 0.0 && z.re < 0.0 && alpha < 1.0 && (-z.re).powf(1.0 / alpha) >= ASYMPTOTIC_MIN_GROWTH {
        return algebraic_expansion(alpha, beta, z.re);
    }
    let c = ml_contour(alpha, beta, z);
    EvalResult { value: c.value, est_abs_error: c.est_abs_error, branch: Branch::Contour }
}

fn closed_form(alpha: f64, beta: f64, z: Complex64) -> Option<Complex64> {
    match (alpha, beta) {
        (a, b) if a == 1.0 && b == 1.0 => Some(z.exp()),
        (a, b) if a == 1.0 && b == 2.0 => Some((z.exp() - 1.0) / z),
        (a, b) if a == 2.0 && b == 1.0 => Some(z.sqrt().cosh()),
        (a, b) if a == 2.0 && b == 2.0 => {
            let r = z.sqrt();
            Some(r.sinh() / r)
        }
        _ => None,
    }
}

/// Neumaier-compensated complex accumulator.
#[derive(Default)]
struct Compensated {
    sum: Complex64,
    carry: Complex64,
}

impl Compensated {
    fn add(&mut self, x: Complex64) {
        self.sum.re = neumaier(self.sum.re, x.re, &mut self.carry.re);
        self.sum.im = neumaier(self.sum.im, x.im, &mut self.carry.im);
    }

    fn total(&self) -> Complex64 {
        self.sum + self.carry
    }
}

fn neumaier(sum: f64, x: f64, carry: &mut f64) -> f64 {
    let t = sum + x;
    if sum.abs() >= x.abs() {
        *carry += (sum - t) + x;
    } else {
        *carry += (x - t) + sum;
    }
    t
}

/// Power series for `E_{α,β}` (or its derivative when `deriv`). Stops after
/// three consecutive terms below `1e-16` of the running sum, once past the
/// minimum of Γ.
fn taylor(alpha: f64, beta: f64, z: Complex64, deriv: bool) -> EvalResult {
    let mut acc = Compensated::default();
    let mut abs_sum = 0.0;
    let mut zpow = Complex64::new(1.0, 0.0);
    let mut small = 0;
    let mut last = 0.0;
    let mut converged = false;
    for k in 0..MAX_TERMS {
        let kf = k as f64;
        let coef = if deriv { (kf + 1.0) * rgamma(alpha * (kf + 1.0) + beta) } else { rgamma(alpha * kf + beta) };
        let term = zpow * coef;
        acc.add(term);
        abs_sum += term.norm();
        last = term.norm();
        let past_gamma_min = alpha * kf + beta > 2.0;
        if past_gamma_min && last < 1e-16 * acc.total().norm() {
            small += 1;
            if small >= 3 {
                converged = true;
                break;
            }
        } else {
            small = 0;
        }
        zpow *= z;
        if zpow == Complex64::new(0.0, 0.0) && past_gamma_min {
            converged = true;
            break;
        }
    }
    let value = acc.total();
    let mut est = 2.0 * f64::EPSILON * abs_sum + last;
    if !converged {
        est = est.max(value.norm());
    }
    EvalResult { value, est_abs_error: est, branch: Branch::Taylor }
}

/// `E_{α,β}(x) ≈ -Σ_{k≥1} x^{-k}/Γ(β - αk)` for `x < 0`, `α < 1`. Terms are
/// added until the envelope `Γ(αk + 1 - β)/|x|^k` starts to grow or drops
/// below rounding level.
fn algebraic_expansion(alpha: f64, beta: f64, x: f64) -> EvalResult {
    let ax = x.abs();
    let ln_ax = ax.ln();
    let mut sum = 0.0_f64;
    let mut prev_env = f64::INFINITY;
    let mut last_env = 0.0;
    let mut sign = -1.0; // (-1)^k for k = 1
    for k in 1..MAX_TERMS {
        let kf = k as f64;
        let shift = alpha * kf + 1.0 - beta;
        if shift > 0.0 {
            let env = (ln_gamma(shift) - kf * ln_ax).exp();
            if env > prev_env || (sum != 0.0 && env <= 1e-17 * sum.abs()) {
                break;
            }
            prev_env = env;
            last_env = env;
        }
        // x^{-k} = sign / |x|^k
        let term = -sign * (-kf * ln_ax).exp() * rgamma(beta - alpha * kf);
        sum += term;
        sign = -sign;
    }
    EvalResult {
        value: sum.into(),
        est_abs_error: last_env + 4.0 * f64::EPSILON * sum.abs(),
        branch: Branch::Asymptotic,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{E, PI};

    fn real(alpha: f64, beta: f64, x: f64) -> f64 {
        ml(&MlArgs::new(alpha, beta, x)).unwrap().value.re
    }

    #[test]
    fn exponential_reduction() {
        assert!((real(1.0, 1.0, 1.0) - E).abs() <= 1e-15 * E);
    }

    #[test]
    fn cosine_reduction_at_quarter_period() {
        let x = PI / 2.0;
        assert!(real(2.0, 1.0, -x * x).abs() <= 1e-15);
    }

    #[test]
    fn half_order_against_erfc_closed_form() {
        // E_{1/2,1}(z) = e^{z²} erfc(-z); 60-digit series value for z = 0.5.
        let want = 1.952_360_489_182_557_4;
        let got = real(0.5, 1.0, 0.5);
        assert!(((got - want) / want).abs() <= 1e-13, "{got}");
        let via_erfc = (0.25_f64).exp() * crate::specfun::erfc(-0.5);
        assert!(((got - via_erfc) / want).abs() <= 1e-13);
    }

    #[test]
    fn value_at_origin_is_reciprocal_gamma() {
        for &(a, b) in &[(0.4, 0.7), (1.3, 2.5), (2.0, -0.5), (0.9, 1.0)] {
            let got = real(a, b, 0.0);
            assert!((got - rgamma(b)).abs() <= 1e-16 * rgamma(b).abs().max(1.0));
        }
        // β at a Gamma pole: the k = 0 term drops out.
        assert_eq!(real(0.7, 0.0, 0.0), 0.0);
    }

    #[test]
    fn derivative_examples() {
        let d = ml_deriv(&MlArgs::new(1.0, 1.0, 1.0)).unwrap().value.re;
        assert!((d - E).abs() <= 1e-14);
        for &(a, b) in &[(0.5, 1.0), (1.5, 0.3), (0.8, 2.0)] {
            let d0 = ml_deriv(&MlArgs::new(a, b, 0.0)).unwrap().value.re;
            assert!((d0 - rgamma(a + b)).abs() <= 1e-15);
        }
    }

    #[test]
    fn derivative_against_central_difference() {
        let h = 1e-6;
        let fd = (real(0.7, 1.0, 0.3 + h) - real(0.7, 1.0, 0.3 - h)) / (2.0 * h);
        let d = ml_deriv(&MlArgs::new(0.7, 1.0, 0.3)).unwrap().value.re;
        assert!((d - fd).abs() <= 1e-6, "{d} vs {fd}");
    }

    #[test]
    fn derivative_off_taylor_region() {
        // Large arguments go through the index-recurrence route.
        for &(a, b, x) in &[(0.6_f64, 1.0_f64, -12.0_f64), (1.4, 0.8, -20.0), (0.9, 1.5, 8.0)] {
            let h = 1e-5 * x.abs();
            let fd = (real(a, b, x + h) - real(a, b, x - h)) / (2.0 * h);
            let d = ml_deriv(&MlArgs::new(a, b, x)).unwrap().value.re;
            assert!((d - fd).abs() <= 1e-6 * fd.abs().max(1e-3), "({a},{b},{x}): {d} vs {fd}");
        }
    }

    #[test]
    fn real_input_gives_real_output() {
        for &(a, b, x) in &[(0.35, 1.0, -7.0), (1.7, 0.4, -30.0), (0.8, 2.0, 3.0)] {
            let v = ml(&MlArgs::new(a, b, x)).unwrap().value;
            assert!(v.im.abs() <= 1e-13);
        }
    }

    #[test]
    fn domain_errors() {
        assert!(ml(&MlArgs::new(2.5, 1.0, 1.0)).unwrap_err().is_parameter_error());
        assert!(ml(&MlArgs::new(0.0, 1.0, 1.0)).unwrap_err().is_parameter_error());
        assert!(ml(&MlArgs::new(1.0, f64::NAN, 1.0)).unwrap_err().is_parameter_error());
    }

    #[test]
    fn outside_certified_domain_is_flagged() {
        match ml(&MlArgs::new(0.5, 1.0, -2.0e4)) {
            Err(Error::Uncertified { re, .. }) => {
                // Leading term 1/(|z| Γ(1/2)).
                let lead = 1.0 / (2.0e4 * PI.sqrt());
                assert!((re - lead).abs() < 1e-3 * lead);
            }
            other => panic!("expected uncertified, got {other:?}"),
        }
    }

    #[test]
    fn branches_are_recorded() {
        let b = |a, be, z: f64| ml(&MlArgs::new(a, be, z)).unwrap().branch;
        assert_eq!(b(0.5, 1.0, 0.5), Branch::Taylor);
        assert_eq!(b(1.0, 1.0, -20.0), Branch::ClosedForm);
        assert_eq!(b(0.5, 1.0, -20.0), Branch::Asymptotic);
        assert_eq!(b(1.5, 1.0, -20.0), Branch::Contour);
    }
}
