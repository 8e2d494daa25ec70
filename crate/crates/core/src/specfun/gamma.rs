//! Gamma-family helpers on top of `libm`.

use std::f64::consts::PI;

/// Euler Gamma function.
pub fn gamma(x: f64) -> f64 {
    libm::tgamma(x)
}

/// Natural log of `|Γ(x)|`.
pub fn ln_gamma(x: f64) -> f64 {
    libm::lgamma_r(x).0
}

/// Complementary error function.
pub fn erfc(x: f64) -> f64 {
    libm::erfc(x)
}

/// `sin(πx)` with exact zeros at the integers.
pub fn sin_pi(x: f64) -> f64 {
    let r = x - 2.0 * (x / 2.0).round();
    if r == 0.0 || r.abs() == 1.0 {
        return 0.0;
    }
    if r > 0.5 {
        (PI * (1.0 - r)).sin()
    } else if r < -0.5 {
        -(PI * (1.0 + r)).sin()
    } else {
        (PI * r).sin()
    }
}

/// Reciprocal Gamma, entire in `x`: `1/Γ(x)` with `1/Γ(-n) = 0` for
/// `n = 0, 1, 2, ...`.
pub fn rgamma(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if x <= 0.0 && x == x.floor() {
        return 0.0;
    }
    if x >= 0.5 {
        let g = libm::tgamma(x);
        return if g.is_infinite() { 0.0 } else { 1.0 / g };
    }
    // Reflection: 1/Γ(x) = Γ(1-x) sin(πx) / π.
    // Overflows to ±inf below x ≈ -170.6, where |1/Γ(x)| > f64::MAX.
    libm::tgamma(1.0 - x) * sin_pi(x) / PI
}
