//! Fourier inversion of characteristic functions,
//!
//! `f(x) = (1/π) ∫_0^∞ Re(φ(β) e^{-iβx}) dβ`,
//!
//! by the trapezoidal rule on `β_k = k dβ`. Atoms and indicator plateaus are
//! removed from `φ` analytically first: they do not decay in `β` (or decay only
//! like `1/β`) and are added back exactly.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use super::density::{Atom, DensityEval};
use crate::error::{Error, Result};

/// Uniform density `height` on `(-half_width, half_width)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Plateau {
    pub half_width: f64,
    pub height: f64,
}

impl Plateau {
    /// `2h sin(wβ)/β`.
    pub fn cf(&self, beta: f64) -> f64 {
        if beta == 0.0 {
            2.0 * self.height * self.half_width
        } else {
            2.0 * self.height * (self.half_width * beta).sin() / beta
        }
    }

    fn value(&self, x: f64) -> f64 {
        let w = self.half_width;
        if x.abs() < w {
            self.height
        } else if x.abs() == w {
            0.5 * self.height
        } else {
            0.0
        }
    }

    fn mass_on(&self, lo: f64, hi: f64) -> f64 {
        let a = lo.max(-self.half_width);
        let b = hi.min(self.half_width);
        self.height * (b - a).max(0.0)
    }
}

/// Frequency grid of the inversion.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct InversionSpec {
    /// Frequency step; defaults to a period of four times the largest `|x|`.
    pub d_beta: Option<f64>,
    /// The range ends once `|φ - removed parts|` stays below this.
    pub tol: f64,
    pub max_points: usize,
    /// Allowed deviation from `φ(-β) = conj φ(β)`.
    pub symmetry_tol: f64,
}

impl Default for InversionSpec {
    fn default() -> Self {
        InversionSpec { d_beta: None, tol: 1e-6, max_points: 1 << 17, symmetry_tol: 1e-8 }
    }
}

const CHUNK: usize = 512;
const QUIET_RUN: usize = 64;

/// Inverts `cf` on `x_grid`. `atoms` and `plateaus` describe parts of the law
/// whose transforms are subtracted before the numerical inversion.
pub fn invert_cf<F>(
    cf: F,
    x_grid: &[f64],
    spec: &InversionSpec,
    atoms: &[Atom],
    plateaus: &[Plateau],
) -> Result<DensityEval>
where
    F: Fn(f64) -> Result<Complex64> + Sync,
{
    if x_grid.is_empty() {
        return Err(Error::domain("x_grid", 0.0, "grid must not be empty"));
    }
    if let Some(&x) = x_grid.iter().find(|x| !x.is_finite()) {
        return Err(Error::domain("x", x, "grid points must be finite"));
    }
    let x_max = x_grid.iter().fold(0.0_f64, |m, x| m.max(x.abs()));
    let d_beta = match spec.d_beta {
        Some(d) if d > 0.0 && d.is_finite() => d,
        Some(d) => return Err(Error::domain("d_beta", d, "frequency step must be > 0")),
        None => 2.0 * PI / (4.0 * x_max.max(0.25)),
    };

    let residual = |beta: f64| -> Result<Complex64> {
        let mut v = cf(beta)?;
        for a in atoms {
            v -= a.mass * Complex64::from_polar(1.0, beta * a.location);
        }
        for p in plateaus {
            v -= p.cf(beta);
        }
        Ok(v)
    };

    for k in [1usize, 3, 17, 101] {
        let beta = k as f64 * d_beta;
        let plus = cf(beta)?;
        let minus = cf(-beta)?;
        let deviation = (minus - plus.conj()).norm();
        if deviation > spec.symmetry_tol * (1.0 + plus.norm()) {
            return Err(Error::SymmetryViolation { beta, deviation });
        }
    }

    let mut values: Vec<Complex64> = Vec::new();
    let mut quiet = 0;
    let mut tail = 0.0_f64;
    let mut resolution_limited = true;
    while values.len() < spec.max_points {
        let start = values.len();
        let end = (start + CHUNK).min(spec.max_points);
        let chunk = (start..end).into_par_iter().map(|k| residual(k as f64 * d_beta)).collect::<Result<Vec<_>>>()?;
        let mut done = false;
        for v in chunk {
            values.push(v);
            if v.norm() < spec.tol {
                quiet += 1;
                tail = tail.max(v.norm());
                if quiet >= QUIET_RUN {
                    done = true;
                    break;
                }
            } else {
                quiet = 0;
                tail = 0.0;
            }
        }
        if done {
            resolution_limited = false;
            break;
        }
    }
    let b_max = values.len() as f64 * d_beta;
    let truncation_error =
        if resolution_limited { values.last().map_or(0.0, |v| v.norm()) * b_max / PI } else { tail * b_max / PI };

    let w = d_beta / PI;
    let pdf: Vec<f64> = x_grid
        .par_iter()
        .map(|&x| {
            let mut s = 0.5 * values[0].re;
            for (k, v) in values.iter().enumerate().skip(1) {
                let (sin, cos) = (k as f64 * d_beta * x).sin_cos();
                s += v.re * cos + v.im * sin;
            }
            w * s + plateaus.iter().map(|p| p.value(x)).sum::<f64>()
        })
        .collect();

    let lo = x_grid.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = x_grid.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let mut mass = 0.5 * values[0].re * (hi - lo);
    for (k, v) in values.iter().enumerate().skip(1) {
        let beta = k as f64 * d_beta;
        // ∫ Re(v e^{-iβx}) dx = Re(v (e^{-iβhi} - e^{-iβlo}) / (-iβ))
        let diff = Complex64::from_polar(1.0, -beta * hi) - Complex64::from_polar(1.0, -beta * lo);
        mass += (v * diff / Complex64::new(0.0, -beta)).re;
    }
    mass *= w;
    mass += plateaus.iter().map(|p| p.mass_on(lo, hi)).sum::<f64>();
    mass += atoms.iter().filter(|a| a.location >= lo && a.location <= hi).map(|a| a.mass).sum::<f64>();

    Ok(DensityEval {
        x_grid: x_grid.to_vec(),
        pdf,
        atoms: atoms.to_vec(),
        truncation_error,
        resolution_limited,
        mass_in_grid: mass,
    })
}

/// Characteristic function values on a symmetric frequency grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CfGrid {
    pub betas: Vec<f64>,
    pub values: Vec<Complex64>,
}

impl CfGrid {
    /// `n` equispaced frequencies on `[-b_max, b_max]` (`n` odd includes 0).
    pub fn evaluate<F>(b_max: f64, n: usize, cf: F) -> Result<CfGrid>
    where
        F: Fn(f64) -> Result<Complex64> + Sync,
    {
        if n < 2 || !(b_max > 0.0 && b_max.is_finite()) {
            return Err(Error::domain("b_max", b_max, "need b_max > 0 and at least two points"));
        }
        let step = 2.0 * b_max / (n - 1) as f64;
        let betas: Vec<f64> = (0..n).map(|k| if 2 * k + 1 == n { 0.0 } else { -b_max + k as f64 * step }).collect();
        // Mirror the positive half so the grid is exactly symmetric.
        let betas: Vec<f64> = (0..n).map(|k| if k < n / 2 { -betas[n - 1 - k] } else { betas[k] }).collect();
        let values = betas.par_iter().map(|&b| cf(b)).collect::<Result<Vec<_>>>()?;
        Ok(CfGrid { betas, values })
    }

    /// Largest `|φ(-β) - conj φ(β)|` over the grid.
    pub fn hermitian_deviation(&self) -> f64 {
        let n = self.values.len();
        (0..n).map(|k| (self.values[n - 1 - k] - self.values[k].conj()).norm()).fold(0.0, f64::max)
    }
}
