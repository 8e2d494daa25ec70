use rand::Rng;
use rand_distr::{Distribution, Exp, StandardNormal};
use serde::{Deserialize, Serialize};

use super::rng::{par_draw, RngSpec};
use crate::error::{Error, Result};

/// Terminal values of `n` independent realisations at horizon `t`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampleBatch {
    pub values: Vec<f64>,
    pub t: f64,
    pub n: usize,
}

impl SampleBatch {
    pub(crate) fn new(values: Vec<f64>, t: f64) -> Self {
        let n = values.len();
        SampleBatch { values, t, n }
    }
}

pub(crate) fn check_positive(name: &'static str, v: f64) -> Result<()> {
    if !(v > 0.0 && v.is_finite()) {
        return Err(Error::domain(name, v, "must be > 0"));
    }
    Ok(())
}

pub(crate) fn check_count(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::domain("n", 0.0, "sample size must be >= 1"));
    }
    Ok(())
}

/// Position at time `t` of a telegraph path with rate `lambda`, speed `c` and
/// the number of direction changes.
pub(crate) fn telegraph_path<R: Rng>(rng: &mut R, hold: &Exp<f64>, c: f64, t: f64) -> (f64, u32) {
    let mut v = if rng.gen::<bool>() { c } else { -c };
    let mut now = 0.0;
    let mut x = 0.0;
    let mut switches = 0;
    loop {
        let h = hold.sample(rng);
        if now + h >= t {
            return (x + v * (t - now), switches);
        }
        x += v * h;
        now += h;
        v = -v;
        switches += 1;
    }
}

/// Symmetric telegraph process `T(t)` started at 0, with the number of
/// direction changes on each path.
pub fn sim_telegraph_with_switches(
    lambda: f64,
    c: f64,
    t: f64,
    n: usize,
    rng: &RngSpec,
) -> Result<(SampleBatch, Vec<u32>)> {
    check_positive("lambda", lambda)?;
    check_positive("c", c)?;
    check_positive("t", t)?;
    check_count(n)?;
    let hold = Exp::new(lambda).map_err(|_| Error::domain("lambda", lambda, "invalid rate"))?;
    let pairs = par_draw(rng, n, |r| telegraph_path(r, &hold, c, t));
    let (values, switches) = pairs.into_iter().unzip();
    Ok((SampleBatch::new(values, t), switches))
}

/// Symmetric telegraph process `T(t)` started at 0.
pub fn sim_telegraph(lambda: f64, c: f64, t: f64, n: usize, rng: &RngSpec) -> Result<SampleBatch> {
    Ok(sim_telegraph_with_switches(lambda, c, t, n, rng)?.0)
}

/// `T(|B(τ)|)` with `B` an independent Brownian motion, `Var B(τ) = 2τ`.
fn brownian_time(lambda: f64, c: f64, tau: f64, horizon: f64, n: usize, rng: &RngSpec) -> Result<SampleBatch> {
    check_positive("lambda", lambda)?;
    check_positive("c", c)?;
    check_count(n)?;
    let hold = Exp::new(lambda).map_err(|_| Error::domain("lambda", lambda, "invalid rate"))?;
    let sd = (2.0 * tau).sqrt();
    let values = par_draw(rng, n, |r| {
        let z: f64 = StandardNormal.sample(r);
        let clock = (sd * z).abs();
        if clock == 0.0 {
            0.0
        } else {
            telegraph_path(r, &hold, c, clock).0
        }
    });
    Ok(SampleBatch::new(values, horizon))
}

/// `T(|B(ln(t/t0))|)`.
pub fn sim_brownian_time_telegraph(
    lambda: f64,
    c: f64,
    t0: f64,
    t: f64,
    n: usize,
    rng: &RngSpec,
) -> Result<SampleBatch> {
    check_positive("t0", t0)?;
    if !(t >= t0 && t.is_finite()) {
        return Err(Error::domain("t", t, "time must satisfy t >= t0"));
    }
    brownian_time(lambda, c, (t / t0).ln(), t, n, rng)
}

/// `T(|B(t)|)`, the composition without the logarithmic clock.
pub fn sim_brownian_time_telegraph_direct(lambda: f64, c: f64, t: f64, n: usize, rng: &RngSpec) -> Result<SampleBatch> {
    if !(t >= 0.0 && t.is_finite()) {
        return Err(Error::domain("t", t, "time must be >= 0"));
    }
    brownian_time(lambda, c, t, t, n, rng)
}
