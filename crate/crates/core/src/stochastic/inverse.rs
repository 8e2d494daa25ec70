//! First passage `L^ν(t) = inf{s ≥ 0 : H(s) ≥ t}` of
//! `H(s) = H1(s) + (2λ)^{1/ν} H2(s)`, where `H1`, `H2` are independent stable
//! subordinators of orders `2ν` and `ν` normalised as `E e^{-uH(s)} = e^{-s u^order}`.
//! The Laplace exponent of `H` is `u^{2ν} + 2λ u^ν`; at `ν = 1/2`, `H1(s) = s`.
//!
//! `H` is built from stationary increments on an `s`-grid; the crossing time is
//! interpolated linearly inside the step where `H` first reaches the level.

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::rng::{par_draw, RngSpec};
use super::stable::{positive_stable, symmetric_stable};
use super::telegraph::{check_count, check_positive, SampleBatch};
use crate::error::{Error, Result};

/// Grid of the inverse-time simulation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct InverseTimeGrid {
    pub step: f64,
    /// Initial horizon in `s`; doubled whenever a path has not crossed.
    pub horizon: f64,
    /// Largest horizon before giving up.
    pub max_horizon: f64,
}

impl InverseTimeGrid {
    pub const DEFAULT_STEP: f64 = 1e-3;

    pub fn with_step(step: f64) -> Self {
        InverseTimeGrid { step, horizon: 1.0, max_horizon: step * 2f64.powi(26) }
    }
}

impl Default for InverseTimeGrid {
    fn default() -> Self {
        Self::with_step(Self::DEFAULT_STEP)
    }
}

struct Increments {
    drift: bool,
    h1_scale: f64,
    h2_scale: f64,
    order1: f64,
    order2: f64,
}

impl Increments {
    fn new(nu: f64, lambda: f64, step: f64) -> Self {
        let order1 = 2.0 * nu;
        Increments {
            drift: order1 == 1.0,
            h1_scale: if order1 == 1.0 { step } else { step.powf(1.0 / order1) },
            h2_scale: (2.0 * lambda).powf(1.0 / nu) * step.powf(1.0 / nu),
            order1,
            order2: nu,
        }
    }

    fn draw<R: Rng>(&self, rng: &mut R) -> f64 {
        let a = if self.drift { self.h1_scale } else { self.h1_scale * positive_stable(rng, self.order1) };
        let b = if self.h2_scale > 0.0 { self.h2_scale * positive_stable(rng, self.order2) } else { 0.0 };
        a + b
    }
}

fn validate(nu: f64, lambda: f64, grid: &InverseTimeGrid) -> Result<()> {
    if !(nu > 0.0 && nu <= 0.5) {
        return Err(Error::domain("nu", nu, "inverse-time order must lie in (0, 1/2]"));
    }
    if !(lambda >= 0.0 && lambda.is_finite()) {
        return Err(Error::domain("lambda", lambda, "rate must be >= 0"));
    }
    check_positive("grid_step", grid.step)?;
    check_positive("horizon", grid.horizon)?;
    Ok(())
}

/// Crossing times of one path of `H` above each of the ascending `levels`.
fn crossings<R: Rng>(rng: &mut R, inc: &Increments, grid: &InverseTimeGrid, levels: &[f64]) -> Result<Vec<f64>> {
    let mut out = Vec::with_capacity(levels.len());
    let mut k: u64 = 0;
    let mut h = 0.0;
    // Start value of `H` and increment over the most recent step.
    let (mut h_prev, mut dh) = (0.0, 0.0);
    let mut horizon = grid.horizon;
    for &level in levels {
        if level <= 0.0 {
            out.push(0.0);
            continue;
        }
        while h < level {
            h_prev = h;
            dh = inc.draw(rng);
            h += dh;
            k += 1;
            let s = k as f64 * grid.step;
            if s >= horizon && h < level {
                horizon *= 2.0;
                if horizon > grid.max_horizon {
                    return Err(Error::GridExhausted { level, horizon: s });
                }
            }
        }
        let s_prev = (k - 1) as f64 * grid.step;
        out.push(s_prev + grid.step * (level - h_prev) / dh);
    }
    Ok(out)
}

/// `n` samples of `L^ν(t)`.
pub fn sim_inverse_time(
    nu: f64,
    lambda: f64,
    t: f64,
    n: usize,
    rng: &RngSpec,
    grid: &InverseTimeGrid,
) -> Result<SampleBatch> {
    let levels = sim_inverse_time_levels(nu, lambda, &[t], n, rng, grid)?;
    Ok(SampleBatch::new(levels.into_iter().next().unwrap_or_default(), t))
}

/// `L^ν` at several ascending levels from shared paths; `result[j][i]` is the
/// `i`-th path at `levels[j]`.
pub fn sim_inverse_time_levels(
    nu: f64,
    lambda: f64,
    levels: &[f64],
    n: usize,
    rng: &RngSpec,
    grid: &InverseTimeGrid,
) -> Result<Vec<Vec<f64>>> {
    validate(nu, lambda, grid)?;
    check_count(n)?;
    if let Some(&l) = levels.iter().find(|l| !(**l >= 0.0 && l.is_finite())) {
        return Err(Error::domain("t", l, "levels must be finite and >= 0"));
    }
    if levels.windows(2).any(|w| w[1] < w[0]) {
        return Err(Error::domain("t", levels[0], "levels must be ascending"));
    }
    let inc = Increments::new(nu, lambda, grid.step);
    let paths = par_draw(rng, n, |r| crossings(r, &inc, grid, levels));
    let mut out = vec![Vec::with_capacity(n); levels.len()];
    for p in paths {
        for (j, v) in p?.into_iter().enumerate() {
            out[j].push(v);
        }
    }
    Ok(out)
}

/// `S^α(c² L^ν(ln(t/t0)))` with `S^α` an independent symmetric stable process
/// (`E e^{iβS(s)} = e^{-s|β|^α}`).
#[allow(clippy::too_many_arguments)]
pub fn sim_stable_inverse_time(
    nu: f64,
    lambda: f64,
    c: f64,
    alpha: f64,
    t0: f64,
    t: f64,
    n: usize,
    rng: &RngSpec,
    grid: &InverseTimeGrid,
) -> Result<SampleBatch> {
    check_positive("c", c)?;
    check_positive("t0", t0)?;
    if !(alpha > 0.0 && alpha <= 2.0) {
        return Err(Error::domain("alpha", alpha, "stable order must lie in (0, 2]"));
    }
    if !(t >= t0 && t.is_finite()) {
        return Err(Error::domain("t", t, "time must satisfy t >= t0"));
    }
    let clock = sim_inverse_time(nu, lambda, (t / t0).ln(), n, rng, grid)?;
    let outer = rng.substream(1);
    let z = par_draw(&outer, n, |r| symmetric_stable(r, alpha));
    let values = clock.values.iter().zip(z).map(|(&l, z)| (c * c * l).powf(1.0 / alpha) * z).collect();
    Ok(SampleBatch::new(values, t))
}
