//! Quadrature building blocks: Gauss-Legendre rules and an adaptive
//! Gauss-Kronrod (7/15) integrator for complex-valued integrands.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Gauss-Legendre nodes and weights on `[-1, 1]`.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, d) = legendre_with_derivative(n, x);
        dp = if d != 0.0 { d } else { dp };
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Fixed Gauss-Legendre rule mapped to `[a, b]`.
#[derive(Debug, Clone)]
pub struct GaussRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussRule {
    pub fn new(n: usize) -> Self {
        let (nodes, weights) = gauss_legendre(n);
        GaussRule { nodes, weights }
    }

    pub fn integrate<F: FnMut(f64) -> Complex64>(&self, a: f64, b: f64, mut f: F) -> Complex64 {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        self.nodes.iter().zip(&self.weights).map(|(x, w)| f(mid + half * x) * *w).sum::<Complex64>() * half
    }
}

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_728,
];
const WG: [f64; 4] =
    [0.129_484_966_168_869_7, 0.279_705_391_489_276_7, 0.381_830_050_505_118_9, 0.417_959_183_673_469_4];

fn kronrod15<F: FnMut(f64) -> Complex64>(f: &mut F, a: f64, b: f64) -> (Complex64, f64) {
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let fc = f(mid);
    let mut kron = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for j in 0..7 {
        let dx = half * XGK[j];
        let pair = f(mid - dx) + f(mid + dx);
        kron += pair * WGK[j];
        if j % 2 == 1 {
            gauss += pair * WG[j / 2];
        }
    }
    let kron = kron * half;
    let gauss = gauss * half;
    (kron, (kron - gauss).norm())
}

/// Adaptive Gauss-Kronrod integration of `f` over `[a, b]` by interval
/// bisection until the summed error estimate meets
/// `max(abs_tol, rel_tol·|I|)`.
pub fn integrate_adaptive<F: FnMut(f64) -> Complex64>(
    mut f: F,
    a: f64,
    b: f64,
    abs_tol: f64,
    rel_tol: f64,
) -> Result<(Complex64, f64)> {
    const MAX_INTERVALS: usize = 4000;
    let (v, e) = kronrod15(&mut f, a, b);
    let mut pieces = vec![(a, b, v, e)];
    loop {
        let total: Complex64 = pieces.iter().map(|p| p.2).sum();
        let err: f64 = pieces.iter().map(|p| p.3).sum();
        if !(total.re.is_finite() && total.im.is_finite()) {
            return Err(Error::Quadrature("integrand is not finite".into()));
        }
        if err <= abs_tol.max(rel_tol * total.norm()) {
            return Ok((total, err));
        }
        if pieces.len() >= MAX_INTERVALS {
            return Err(Error::Quadrature(format!(
                "no convergence on [{a}, {b}]: error {err:e} after {MAX_INTERVALS} intervals"
            )));
        }
        let (idx, _) = pieces.iter().enumerate().max_by(|x, y| x.1 .3.total_cmp(&y.1 .3)).unwrap();
        let (lo, hi, _, _) = pieces.swap_remove(idx);
        let m = 0.5 * (lo + hi);
        let (v1, e1) = kronrod15(&mut f, lo, m);
        let (v2, e2) = kronrod15(&mut f, m, hi);
        pieces.push((lo, m, v1, e1));
        pieces.push((m, hi, v2, e2));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_legendre_integrates_polynomials_exactly() {
        let rule = GaussRule::new(8);
        // degree 15 monomial
        let v = rule.integrate(0.0, 2.0, |x| Complex64::new(x.powi(15), 0.0));
        assert!((v.re - 2f64.powi(16) / 16.0).abs() < 1e-9);
        let (x, w) = gauss_legendre(64);
        assert!((w.iter().sum::<f64>() - 2.0).abs() < 1e-14);
        assert!(x.windows(2).all(|p| p[0] < p[1]));
    }

    #[test]
    fn adaptive_handles_endpoint_singularity() {
        let (v, _) = integrate_adaptive(|x| Complex64::new(x.sqrt().recip(), 0.0), 0.0, 1.0, 1e-12, 1e-12).unwrap();
        assert!((v.re - 2.0).abs() < 1e-9);
    }

    #[test]
    fn adaptive_complex_oscillatory() {
        let (v, _) = integrate_adaptive(|x| Complex64::new(0.0, 7.0 * x).exp(), 0.0, 3.0, 1e-13, 1e-13).unwrap();
        let want = (Complex64::new(0.0, 21.0).exp() - 1.0) / Complex64::new(0.0, 7.0);
        assert!((v - want).norm() < 1e-12);
    }
}
