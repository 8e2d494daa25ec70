use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Order and skewness of a Riesz-Feller derivative,
/// `0 < α ≤ 2`, `|θ| ≤ min(α, 2 - α)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RieszFeller {
    alpha: f64,
    theta: f64,
}

impl RieszFeller {
    pub fn new(alpha: f64, theta: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha <= 2.0) {
            return Err(Error::domain("alpha", alpha, "Riesz-Feller order must lie in (0, 2]"));
        }
        if !(theta.abs() <= alpha.min(2.0 - alpha)) {
            return Err(Error::domain("theta", theta, "skewness must satisfy |theta| <= min(alpha, 2 - alpha)"));
        }
        Ok(RieszFeller { alpha, theta })
    }

    /// Symmetric (Riesz) case, `θ = 0`.
    pub fn riesz(alpha: f64) -> Result<Self> {
        Self::new(alpha, 0.0)
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    /// `ψ(β) = |β|^α e^{iθπ sign(β)/2}`; the operator acts in Fourier space as
    /// multiplication by `-ψ(β)`.
    pub fn symbol(&self, beta: f64) -> Complex64 {
        if beta == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        let v = Complex64::from_polar(beta.abs().powf(self.alpha), self.theta * PI / 2.0);
        if beta < 0.0 {
            v.conj()
        } else {
            v
        }
    }
}

/// Free-function form of [`RieszFeller::symbol`].
pub fn riesz_feller_symbol(p: &RieszFeller, beta: f64) -> Complex64 {
    p.symbol(beta)
}
