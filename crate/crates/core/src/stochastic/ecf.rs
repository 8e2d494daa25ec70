use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::telegraph::SampleBatch;
use crate::error::{Error, Result};

/// Monte-Carlo estimate of `E e^{iβX}` with per-frequency standard errors.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EmpiricalCf {
    pub betas: Vec<f64>,
    pub estimate: Vec<Complex64>,
    pub stderr: Vec<f64>,
}

/// `(1/n) Σ e^{iβX_j}`; the standard error is `sqrt(s²/n)` with `s²` the
/// sample variance of the complex summands.
pub fn empirical_cf(batch: &SampleBatch, betas: &[f64]) -> Result<EmpiricalCf> {
    let n = batch.values.len();
    if n < 2 {
        return Err(Error::domain("n", n as f64, "empirical CF needs at least two samples"));
    }
    let nf = n as f64;
    let pairs: Vec<(Complex64, f64)> = betas
        .par_iter()
        .map(|&beta| {
            let (mut re, mut im) = (0.0, 0.0);
            for &x in &batch.values {
                let (s, c) = (beta * x).sin_cos();
                re += c;
                im += s;
            }
            let mut mean = Complex64::new(re / nf, im / nf);
            if mean.norm() > 1.0 {
                mean /= mean.norm();
            }
            let var = ((1.0 - mean.norm_sqr()) * nf / (nf - 1.0)).max(0.0);
            (mean, (var / nf).sqrt())
        })
        .collect();
    let (estimate, stderr) = pairs.into_iter().unzip();
    Ok(EmpiricalCf { betas: betas.to_vec(), estimate, stderr })
}
