use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::specfun::bessel_i;

/// Point mass of a distribution.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Atom {
    pub location: f64,
    pub mass: f64,
}

/// Density of a law with an absolutely continuous part and atoms.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DensityEval {
    pub x_grid: Vec<f64>,
    /// Continuous part at each grid point.
    pub pdf: Vec<f64>,
    pub atoms: Vec<Atom>,
    /// Estimated sup-norm error of `pdf` from truncating the frequency range.
    pub truncation_error: f64,
    /// The frequency range was capped before the transform had decayed.
    pub resolution_limited: bool,
    /// Probability carried by `[min x, max x]`, atoms included.
    pub mass_in_grid: f64,
}

/// Law of the symmetric telegraph process at time `t` started at 0.
///
/// Continuous part `e^{-λt}/(2c) [λ I0(z) + ∂_t I0(z)]` on `|x| < ct` with
/// `z = (λ/c) sqrt(c²t² - x²)`; atoms of mass `e^{-λt}/2` at `±ct`. `λt` is
/// limited to 700 by the range of `I0`.
pub fn telegraph_density(lambda: f64, c: f64, t: f64, x_grid: &[f64]) -> Result<DensityEval> {
    if !(lambda > 0.0 && lambda.is_finite()) {
        return Err(Error::domain("lambda", lambda, "rate must be > 0"));
    }
    if !(c > 0.0 && c.is_finite()) {
        return Err(Error::domain("c", c, "velocity must be > 0"));
    }
    if !(t > 0.0 && t.is_finite()) {
        return Err(Error::domain("t", t, "time must be > 0"));
    }
    if let Some(&x) = x_grid.iter().find(|x| !x.is_finite()) {
        return Err(Error::domain("x", x, "grid points must be finite"));
    }
    let pdf = x_grid.par_iter().map(|&x| telegraph_pdf(lambda, c, t, x)).collect::<Result<Vec<_>>>()?;
    let atom_mass = 0.5 * (-lambda * t).exp();
    let atoms = vec![Atom { location: -c * t, mass: atom_mass }, Atom { location: c * t, mass: atom_mass }];
    let mass_in_grid = grid_mass(x_grid, &pdf, &atoms);
    Ok(DensityEval {
        x_grid: x_grid.to_vec(),
        pdf,
        atoms,
        truncation_error: 0.0,
        resolution_limited: false,
        mass_in_grid,
    })
}

/// Continuous part of the telegraph law at a single point.
pub fn telegraph_pdf(lambda: f64, c: f64, t: f64, x: f64) -> Result<f64> {
    let ct = c * t;
    if x.abs() >= ct {
        return Ok(0.0);
    }
    let s = ((ct - x) * (ct + x)).sqrt();
    let z = lambda / c * s;
    let i0 = bessel_i(0, z)?;
    // I1(z)/sqrt(c²t² - x²) = (λ/c) I1(z)/z, finite at the edges.
    let i1_over_z = if z > 1e-4 { bessel_i(1, z)? / z } else { 0.5 * (1.0 + z * z / 8.0) };
    let dt_i0 = i1_over_z * lambda / c * lambda * c * t;
    Ok((-lambda * t).exp() / (2.0 * c) * (lambda * i0 + dt_i0))
}

/// Trapezoidal mass of `pdf` on the grid plus the atoms it covers.
pub(crate) fn grid_mass(x_grid: &[f64], pdf: &[f64], atoms: &[Atom]) -> f64 {
    if x_grid.is_empty() {
        return 0.0;
    }
    let lo = x_grid.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = x_grid.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let continuous: f64 = x_grid.windows(2).zip(pdf.windows(2)).map(|(x, p)| 0.5 * (x[1] - x[0]) * (p[0] + p[1])).sum();
    continuous + atoms.iter().filter(|a| a.location >= lo && a.location <= hi).map(|a| a.mass).sum::<f64>()
}
