//! Modified Bessel functions of the first kind, orders 0 and 1.
//!
//! Both series have positive terms for real `x`, so plain summation keeps
//! full relative accuracy all the way to the overflow guard.

use crate::error::{Error, Result};

/// Largest argument accepted; `I0(700) ≈ 1.5e302`.
pub const BESSEL_X_MAX: f64 = 700.0;

/// `I_order(x)` for `order ∈ {0, 1}` and `0 ≤ x ≤ 700`.
pub fn bessel_i(order: u32, x: f64) -> Result<f64> {
    if !(x >= 0.0) {
        return Err(Error::domain("x", x, "modified Bessel argument must be >= 0"));
    }
    if x > BESSEL_X_MAX {
        return Err(Error::Overflow("modified Bessel argument above 700"));
    }
    match order {
        0 => Ok(series(x, 0)),
        1 => Ok(series(x, 1)),
        _ => Err(Error::domain("order", order as f64, "only orders 0 and 1")),
    }
}

fn series(x: f64, order: u32) -> f64 {
    let q = 0.25 * x * x;
    let mut term = if order == 0 { 1.0 } else { 0.5 * x };
    let mut sum = term;
    let mut k = 0.0_f64;
    loop {
        k += 1.0;
        term *= q / (k * (k + order as f64));
        sum += term;
        if term <= 1e-17 * sum || term == 0.0 {
            break;
        }
    }
    sum
}
