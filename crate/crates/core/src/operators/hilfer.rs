use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The three Laplace-domain kernels of the Hilfer telegraph problem.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KernelKind {
    Delta,
    Xi,
    Omega,
}

impl KernelKind {
    pub const ALL: [KernelKind; 3] = [KernelKind::Delta, KernelKind::Xi, KernelKind::Omega];
}

/// Orders `(γ, δ)` of the Hilfer derivative `D^{2γ,δ}` and `D^{γ,δ}`.
///
/// `γ ∈ (0, 1]`. The type parameter `δ` lies in `[0, 1]`; the extended
/// constructor admits `δ ∈ [0, 3/2]`, where the kernels are still defined
/// formally but may fail to be locally integrable at `t = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HilferOrders {
    gamma: f64,
    delta: f64,
    extended: bool,
}

impl HilferOrders {
    pub fn new(gamma: f64, delta: f64) -> Result<Self> {
        Self::check_gamma(gamma)?;
        if !(0.0..=1.0).contains(&delta) {
            return Err(Error::domain("delta", delta, "type parameter must lie in [0, 1]"));
        }
        Ok(HilferOrders { gamma, delta, extended: false })
    }

    pub fn extended(gamma: f64, delta: f64) -> Result<Self> {
        Self::check_gamma(gamma)?;
        if !(0.0..=1.5).contains(&delta) {
            return Err(Error::domain("delta", delta, "extended type parameter must lie in [0, 3/2]"));
        }
        Ok(HilferOrders { gamma, delta, extended: true })
    }

    fn check_gamma(gamma: f64) -> Result<()> {
        if !(gamma > 0.0 && gamma <= 1.0) {
            return Err(Error::domain("gamma", gamma, "order must lie in (0, 1]"));
        }
        Ok(())
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn is_extended(&self) -> bool {
        self.extended
    }

    /// Power of `s` in the numerator of the kernel.
    pub fn numerator_exponent(&self, kind: KernelKind) -> f64 {
        let (g, d) = (self.gamma, self.delta);
        match kind {
            KernelKind::Delta => 1.0 - d * (2.0 - 2.0 * g),
            KernelKind::Xi => -d * (1.0 - g),
            KernelKind::Omega => 0.0,
        }
    }

    /// Mittag-Leffler index `β'` of the time-domain kernel; the kernel behaves
    /// like `t^{β'+γ-1}` as `t → 0`.
    pub fn ml_index(&self, kind: KernelKind) -> f64 {
        self.gamma - self.numerator_exponent(kind)
    }

    /// Leading power of `t` at the origin, `β' + γ - 1`.
    pub fn small_time_exponent(&self, kind: KernelKind) -> f64 {
        self.ml_index(kind) + self.gamma - 1.0
    }
}

/// `s^p / (s^{2γ} + 2λ s^γ + b)` with `p` set by `kind`. Principal branches.
pub fn kernel_laplace(
    kind: KernelKind,
    orders: &HilferOrders,
    lambda: f64,
    b: Complex64,
    s: Complex64,
) -> Result<Complex64> {
    if s.re <= 0.0 && s.im == 0.0 {
        return Err(Error::domain("s", s.re, "Laplace variable must lie off the closed negative real axis"));
    }
    let g = orders.gamma();
    let sg = s.powf(g);
    let den = sg * sg + 2.0 * lambda * sg + b;
    if den.norm() < 1e-12 {
        return Err(Error::Pole { re: s.re, im: s.im });
    }
    let p = orders.numerator_exponent(kind);
    let num = if p == 0.0 { Complex64::new(1.0, 0.0) } else { s.powf(p) };
    Ok(num / den)
}
