use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Roots of `z² + 2λz + b = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Roots {
    pub xi: Complex64,
    pub eta: Complex64,
    /// `sqrt(λ² - b)`, principal branch.
    pub m: Complex64,
    pub confluent: bool,
}

impl Roots {
    /// Relative threshold on `|m|` below which the roots are treated as equal.
    pub const CONFLUENT_TOL: f64 = 1e-7;

    /// Same roots with the other square-root branch, `m → -m`.
    pub fn other_branch(&self) -> Roots {
        Roots { xi: self.eta, eta: self.xi, m: -self.m, confluent: self.confluent }
    }

    /// Largest root modulus.
    pub fn radius(&self) -> f64 {
        self.xi.norm().max(self.eta.norm())
    }
}

/// `ξ = -λ + m`, `η = -λ - m` with `m = sqrt(λ² - b)`.
pub fn roots(lambda: f64, b: Complex64) -> Roots {
    let m = (Complex64::new(lambda * lambda, 0.0) - b).sqrt();
    Roots { xi: -lambda + m, eta: -lambda - m, m, confluent: m.norm() < Roots::CONFLUENT_TOL * lambda.abs().max(1.0) }
}
