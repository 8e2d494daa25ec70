//! Stable samplers by the Kanter / Chambers-Mallows-Stuck transformation of a
//! uniform angle and a unit exponential.

use rand::Rng;
use rand_distr::{Distribution, Exp1};
use std::f64::consts::PI;

use super::rng::{par_draw, RngSpec};
use super::telegraph::{check_count, check_positive, SampleBatch};
use crate::error::{Error, Result};

/// Positive stable variable with `E e^{-uX} = e^{-u^a}`, `0 < a < 1`.
pub(crate) fn positive_stable<R: Rng>(rng: &mut R, a: f64) -> f64 {
    let u = PI * open01(rng);
    let w: f64 = Exp1.sample(rng);
    let num = (a * u).sin() / u.sin().powf(1.0 / a);
    num * ((1.0 - a) * u).sin().powf((1.0 - a) / a) / w.powf((1.0 - a) / a)
}

/// Symmetric stable variable with `E e^{iβX} = e^{-|β|^α}`, `0 < α ≤ 2`.
pub(crate) fn symmetric_stable<R: Rng>(rng: &mut R, alpha: f64) -> f64 {
    let v = PI * (open01(rng) - 0.5);
    let w: f64 = Exp1.sample(rng);
    if alpha == 1.0 {
        return v.tan();
    }
    let e = (1.0 - alpha) / alpha;
    (alpha * v).sin() / v.cos().powf(1.0 / alpha) * ((1.0 - alpha) * v).cos().powf(e) / w.powf(e)
}

fn open01<R: Rng>(rng: &mut R) -> f64 {
    loop {
        let u: f64 = rng.gen();
        if u > 0.0 {
            return u;
        }
    }
}

/// Subordinator marginal with `E e^{-uX} = e^{-scale·u^order}`, `order ∈ (0, 1)`.
pub fn sample_skewed_stable(order: f64, scale: f64, n: usize, rng: &RngSpec) -> Result<SampleBatch> {
    if !(order > 0.0 && order < 1.0) {
        return Err(Error::domain("order", order, "stable order must lie in (0, 1)"));
    }
    check_positive("scale", scale)?;
    check_count(n)?;
    let s = scale.powf(1.0 / order);
    Ok(SampleBatch::new(par_draw(rng, n, |r| s * positive_stable(r, order)), scale))
}

/// Symmetric stable marginal with `E e^{iβX} = e^{-time_scale·|β|^α}`.
/// At `α = 2` this is Gaussian with variance `2·time_scale`.
pub fn sample_stable_symmetric(alpha: f64, time_scale: f64, n: usize, rng: &RngSpec) -> Result<SampleBatch> {
    if !(alpha > 0.0 && alpha <= 2.0) {
        return Err(Error::domain("alpha", alpha, "stable order must lie in (0, 2]"));
    }
    check_positive("time_scale", time_scale)?;
    check_count(n)?;
    let s = time_scale.powf(1.0 / alpha);
    Ok(SampleBatch::new(par_draw(rng, n, |r| s * symmetric_stable(r, alpha)), time_scale))
}
