//! Caputo-type Hadamard derivative of order `ν ∈ (0, 1)`,
//!
//! `(t d/dt)^ν f(t) = 1/Γ(1-ν) ∫_{t0}^t (ln t/τ)^{-ν} (τ d/dτ) f(τ) dτ/τ`.
//!
//! With `u = ln(τ/t0)` and `g(u) = f(t0 e^u)` this is the Caputo derivative of
//! `g` at `U = ln(t/t0)`. The L1 product rule is used: `g` is interpolated
//! piecewise linearly on a mesh graded toward both ends of `[0, U]` and the
//! kernel `(U-u)^{-ν}` is integrated exactly on each cell.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::specfun::rgamma;

/// Discretisation of the Caputo-Hadamard integral.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HadamardQuad {
    t0: f64,
    n_nodes: usize,
    grading: f64,
}

impl HadamardQuad {
    pub const DEFAULT_NODES: usize = 4096;
    pub const DEFAULT_GRADING: f64 = 2.0;

    pub fn new(t0: f64, n_nodes: usize, grading: f64) -> Result<Self> {
        if !(t0 > 0.0 && t0.is_finite()) {
            return Err(Error::domain("t0", t0, "lower terminal must be > 0"));
        }
        if n_nodes < 16 {
            return Err(Error::domain("n_nodes", n_nodes as f64, "at least 16 mesh nodes"));
        }
        if !(grading >= 1.0 && grading.is_finite()) {
            return Err(Error::domain("grading", grading, "grading exponent must be >= 1"));
        }
        Ok(HadamardQuad { t0, n_nodes, grading })
    }

    /// Default mesh (4096 nodes, grading exponent 2) for terminal `t0`.
    pub fn with_t0(t0: f64) -> Result<Self> {
        Self::new(t0, Self::DEFAULT_NODES, Self::DEFAULT_GRADING)
    }

    pub fn t0(&self) -> f64 {
        self.t0
    }

    pub fn n_nodes(&self) -> usize {
        self.n_nodes
    }

    pub fn grading(&self) -> f64 {
        self.grading
    }

    /// Mesh points in `u = ln(τ/t0)` on `[0, upper]`.
    pub fn mesh(&self, upper: f64) -> Vec<f64> {
        let n = self.n_nodes - 1;
        let r = self.grading;
        (0..=n)
            .map(|j| {
                let x = j as f64 / n as f64;
                let g = if x <= 0.5 { 0.5 * (2.0 * x).powf(r) } else { 1.0 - 0.5 * (2.0 * (1.0 - x)).powf(r) };
                upper * g
            })
            .collect()
    }
}

/// Approximates `(t d/dt)^ν f(t)` for `t > t0`.
///
/// `f` is sampled at `τ = t0 e^u` for every mesh point, including `τ = t0`.
pub fn caputo_hadamard_deriv<F: Fn(f64) -> f64>(f: F, nu: f64, t: f64, spec: &HadamardQuad) -> Result<f64> {
    if !(nu > 0.0 && nu < 1.0) {
        return Err(Error::domain("nu", nu, "Caputo-Hadamard order must lie in (0, 1)"));
    }
    if !(t > spec.t0 && t.is_finite()) {
        return Err(Error::domain("t", t, "evaluation time must exceed t0"));
    }
    let upper = (t / spec.t0).ln();
    let mesh = spec.mesh(upper);
    let mut values = Vec::with_capacity(mesh.len());
    for &u in &mesh {
        let tau = spec.t0 * u.exp();
        let v = f(tau);
        if !v.is_finite() {
            return Err(Error::EvaluationFailure { at: tau });
        }
        values.push(v);
    }
    let one_minus = 1.0 - nu;
    let mut acc = 0.0;
    for j in 0..mesh.len() - 1 {
        let h = mesh[j + 1] - mesh[j];
        if h <= 0.0 {
            continue;
        }
        let slope = (values[j + 1] - values[j]) / h;
        let w = (upper - mesh[j]).powf(one_minus) - (upper - mesh[j + 1]).max(0.0).powf(one_minus);
        acc += slope * w;
    }
    Ok(acc * rgamma(2.0 - nu))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::gamma;

    fn power_law(b: f64, t0: f64) -> impl Fn(f64) -> f64 {
        move |t: f64| (t / t0).ln().powf(b)
    }

    #[test]
    fn power_law_example() {
        let t0 = 1.5;
        let spec = HadamardQuad::with_t0(t0).unwrap();
        let t = t0 * std::f64::consts::E;
        let got = caputo_hadamard_deriv(power_law(2.0, t0), 0.5, t, &spec).unwrap();
        let want = gamma(3.0) / gamma(2.5);
        assert!((got - want).abs() < 1e-4, "{got} vs {want}");
    }

    #[test]
    fn constant_has_zero_derivative() {
        let spec = HadamardQuad::with_t0(0.7).unwrap();
        for &nu in &[0.1, 0.5, 0.9] {
            assert_eq!(caputo_hadamard_deriv(|_| 3.25, nu, 2.0, &spec).unwrap(), 0.0);
        }
    }

    #[test]
    fn linear_in_f_on_a_fixed_mesh() {
        let spec = HadamardQuad::new(1.0, 257, 2.0).unwrap();
        let f = |t: f64| t.ln().powf(1.3);
        let g = |t: f64| (0.5 * t).sin();
        let (a, b) = (2.5, -1.75);
        let lhs = caputo_hadamard_deriv(|t| a * f(t) + b * g(t), 0.4, 3.0, &spec).unwrap();
        let rhs = a * caputo_hadamard_deriv(f, 0.4, 3.0, &spec).unwrap()
            + b * caputo_hadamard_deriv(g, 0.4, 3.0, &spec).unwrap();
        assert!((lhs - rhs).abs() <= 1e-10);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(HadamardQuad::new(0.0, 64, 2.0).is_err());
        assert!(HadamardQuad::new(1.0, 8, 2.0).is_err());
        assert!(HadamardQuad::new(1.0, 64, 0.5).is_err());
        let spec = HadamardQuad::with_t0(1.0).unwrap();
        assert!(caputo_hadamard_deriv(|t| t, 1.0, 2.0, &spec).is_err());
        assert!(caputo_hadamard_deriv(|t| t, 0.5, 1.0, &spec).is_err());
        assert!(matches!(
            caputo_hadamard_deriv(|t| 1.0 / (t - 1.0), 0.5, 2.0, &spec),
            Err(Error::EvaluationFailure { .. })
        ));
    }

    #[test]
    fn mesh_is_monotone_and_spans_interval() {
        let spec = HadamardQuad::new(1.0, 33, 3.0).unwrap();
        let m = spec.mesh(2.0);
        assert_eq!(m.len(), 33);
        assert_eq!(m[0], 0.0);
        assert_eq!(*m.last().unwrap(), 2.0);
        assert!(m.windows(2).all(|w| w[1] > w[0]));
    }
}
