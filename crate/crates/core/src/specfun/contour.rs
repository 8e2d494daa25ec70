//! Mittag-Leffler evaluation by numerical inversion of its Laplace transform.
//!
//! `E_{α,β}(z)` is the value at `t = 1` of the inverse Laplace transform of
//! `s^{α-β} / (s^α - z)`. The Bromwich integral is deformed onto a parabola
//! `s(u) = μ(1 + iu)²` and discretised with the trapezoidal rule; poles of the
//! transform lying to the right of the chosen parabola enter through their
//! residues `s*^{1-β} e^{s*} / α`. The parabola parameters `(μ, h, N)` are the
//! error-balancing choices of R. Garrappa's `ml` algorithm (SIAM J. Numer.
//! Anal. 53, 2015), picking among the admissible regions between
//! singularities the one needing the fewest nodes.

use num_complex::Complex64;
use std::f64::consts::PI;

/// `ln(2^-52)`.
const LOG_MACHINE_EPS: f64 = -36.043_653_389_117_15;
const NODE_BUDGET: f64 = 200.0;

#[derive(Debug, Clone, Copy)]
pub(crate) struct ContourValue {
    pub value: Complex64,
    pub est_abs_error: f64,
}

struct Params {
    mu: f64,
    h: f64,
    n: f64,
}

impl Params {
    const INFEASIBLE: Params = Params { mu: 0.0, h: 0.0, n: f64::INFINITY };
}

/// `E_{α,β}(z)` for `z ≠ 0`.
pub(crate) fn ml_contour(alpha: f64, beta: f64, z: Complex64) -> ContourValue {
    let mut log_tol = (1e-15_f64).ln();
    let theta = z.arg();
    let radius = z.norm().powf(1.0 / alpha);

    // Poles of s^{α-β}/(s^α - z) on the principal sheet.
    let kmin = (-alpha / 2.0 - theta / (2.0 * PI)).ceil() as i64;
    let kmax = (alpha / 2.0 - theta / (2.0 * PI)).floor() as i64;
    let mut poles: Vec<(f64, Complex64)> = (kmin..=kmax)
        .map(|k| {
            let s = Complex64::from_polar(radius, (theta + 2.0 * PI * k as f64) / alpha);
            ((s.re + s.norm()) / 2.0, s)
        })
        .filter(|(phi, _)| *phi > 1e-15)
        .collect();
    poles.sort_by(|a, b| a.0.total_cmp(&b.0));

    // Singularities ordered by φ(s) = (Re s + |s|)/2, the origin first.
    let mut sing = vec![Complex64::new(0.0, 0.0)];
    let mut phi = vec![0.0];
    for (p, s) in &poles {
        sing.push(*s);
        phi.push(*p);
    }
    let j1 = sing.len();
    let mut p_str = vec![f64::max(0.0, -2.0 * (alpha - beta + 1.0))];
    p_str.extend(std::iter::repeat_n(1.0, j1 - 1));
    let mut q_str = vec![1.0; j1 - 1];
    q_str.push(f64::INFINITY);
    phi.push(f64::INFINITY);

    let (best_region, params) = loop {
        let admissible: Vec<usize> =
            (0..j1).filter(|&j| phi[j] < (log_tol - LOG_MACHINE_EPS) && phi[j] < phi[j + 1]).collect();
        let mut best: Option<(usize, Params)> = None;
        for &j in &admissible {
            let par = if j + 1 < j1 {
                optimal_bounded(phi[j], phi[j + 1], p_str[j], q_str[j], log_tol)
            } else {
                optimal_unbounded(phi[j], p_str[j], log_tol)
            };
            if best.as_ref().is_none_or(|(_, b)| par.n < b.n) {
                best = Some((j, par));
            }
        }
        match best {
            Some((j, par)) if par.n <= NODE_BUDGET => break (j, par),
            _ => log_tol += 10f64.ln(),
        }
    };

    let n = params.n as i64;
    let mu = params.mu;
    let h = params.h;
    let i = Complex64::new(0.0, 1.0);
    let mut sum = Complex64::new(0.0, 0.0);
    let mut scale = 0.0_f64;
    for k in -n..=n {
        let u = h * k as f64;
        let s = mu * (i * u + 1.0).powi(2);
        let ds = Complex64::new(-2.0 * mu * u, 2.0 * mu);
        let f = s.powf(alpha - beta) / (s.powf(alpha) - z) * ds * s.exp();
        scale = scale.max(f.norm());
        sum += f;
    }
    let integral = sum * h / (2.0 * PI * i);

    let mut residues = Complex64::new(0.0, 0.0);
    let mut residue_scale = 0.0_f64;
    for s in &sing[best_region + 1..] {
        let r = s.powf(1.0 - beta) * s.exp() / alpha;
        residue_scale = residue_scale.max(r.norm());
        residues += r;
    }

    let target = log_tol.exp();
    ContourValue {
        value: integral + residues,
        est_abs_error: target + f64::EPSILON * (h * scale * (2 * n + 1) as f64 / (2.0 * PI) + residue_scale),
    }
}

/// Optimal parabola for a region bounded by two singularities.
fn optimal_bounded(phi_j: f64, phi_j1: f64, pj: f64, qj: f64, log_tol: f64) -> Params {
    const FAC: f64 = 1.01;
    let mut log_tol = log_tol;
    let f_max = (log_tol - LOG_MACHINE_EPS).exp();

    let sq_phi_j = phi_j.sqrt();
    let threshold = 2.0 * (log_tol - LOG_MACHINE_EPS).sqrt();
    let sq_phi_j1 = phi_j1.sqrt().min(threshold - sq_phi_j);

    let (sq_bar_j, sq_bar_j1, f_bar) = if pj < 1e-14 && qj < 1e-14 {
        (sq_phi_j, sq_phi_j1, 1.0)
    } else if pj < 1e-14 {
        let f_min = if sq_phi_j > 0.0 { FAC * (sq_phi_j / (sq_phi_j1 - sq_phi_j)).powf(qj) } else { FAC };
        if f_min >= f_max {
            return Params::INFEASIBLE;
        }
        let f_bar = f_min + f_min / f_max * (f_max - f_min);
        let fq = f_bar.powf(-1.0 / qj);
        (sq_phi_j, (2.0 * sq_phi_j1 - fq * sq_phi_j) / (2.0 + fq), f_bar)
    } else if qj < 1e-14 {
        let f_min = FAC * (sq_phi_j1 / (sq_phi_j1 - sq_phi_j)).powf(pj);
        if f_min >= f_max {
            return Params::INFEASIBLE;
        }
        let f_bar = f_min + f_min / f_max * (f_max - f_min);
        let fp = f_bar.powf(-1.0 / pj);
        ((2.0 * sq_phi_j + fp * sq_phi_j1) / (2.0 - fp), sq_phi_j1, f_bar)
    } else {
        let f_min = FAC * (sq_phi_j + sq_phi_j1) / (sq_phi_j1 - sq_phi_j).powf(pj.max(qj));
        if f_min >= f_max {
            return Params::INFEASIBLE;
        }
        let f_min = f_min.max(1.5);
        let f_bar = f_min + f_min / f_max * (f_max - f_min);
        let fp = f_bar.powf(-1.0 / pj);
        let fq = f_bar.powf(-1.0 / qj);
        let w = -phi_j1 / log_tol;
        let den = 2.0 + w - (1.0 + w) * fp + fq;
        (
            ((2.0 + w + fq) * sq_phi_j + fp * sq_phi_j1) / den,
            (-(1.0 + w) * fq * sq_phi_j + (2.0 + w - (1.0 + w) * fp) * sq_phi_j1) / den,
            f_bar,
        )
    };

    log_tol -= f_bar.ln();
    let w = -sq_bar_j1 * sq_bar_j1 / log_tol;
    let mu = (((1.0 + w) * sq_bar_j + sq_bar_j1) / (2.0 + w)).powi(2);
    let h = -2.0 * PI / log_tol * (sq_bar_j1 - sq_bar_j) / ((1.0 + w) * sq_bar_j + sq_bar_j1);
    let n = ((1.0 - log_tol / mu).sqrt() / h).ceil();
    if !(mu > 0.0 && h > 0.0 && n.is_finite()) {
        return Params::INFEASIBLE;
    }
    Params { mu, h, n }
}

/// Optimal parabola for the unbounded region to the right of the last
/// singularity.
fn optimal_unbounded(phi_j: f64, pj: f64, log_tol: f64) -> Params {
    let sq_phi_j = phi_j.sqrt();
    let mut phibar = if phi_j > 0.0 { phi_j * 1.01 } else { 0.01 };
    let mut sq_phibar = phibar.sqrt();

    const F_MIN: f64 = 1.0;
    const F_MAX: f64 = 10.0;
    const F_TAR: f64 = 5.0;

    let (mut n, mut a, mut sq_mu);
    let mut guard = 0;
    loop {
        let phi_t = phibar;
        let log_eps_phi_t = log_tol / phi_t;
        n = (phi_t / PI * (1.0 - 3.0 * log_eps_phi_t / 2.0 + (1.0 - 2.0 * log_eps_phi_t).sqrt())).ceil();
        a = PI * n / phi_t;
        sq_mu = sq_phibar * (4.0 - a).abs() / (7.0 - (1.0 + 12.0 * a).sqrt()).abs();
        let fbar = ((sq_phibar - sq_phi_j) / sq_mu).powf(-pj);
        guard += 1;
        if pj < 1e-14 || (F_MIN < fbar && fbar < F_MAX) || guard > 100 {
            break;
        }
        sq_phibar = F_TAR.powf(-1.0 / pj) * sq_mu + sq_phi_j;
        phibar = sq_phibar * sq_phibar;
    }
    let mut mu = sq_mu * sq_mu;
    let mut h = (-3.0 * a - 2.0 + 2.0 * (1.0 + 12.0 * a).sqrt()) / (4.0 - a) / n;

    // Keep round-off under control for large μ.
    let threshold = log_tol - LOG_MACHINE_EPS;
    if mu > threshold {
        let q = if pj.abs() < 1e-14 { 0.0 } else { F_TAR.powf(-1.0 / pj) * mu.sqrt() };
        let phibar = (q + sq_phi_j).powi(2);
        if phibar < threshold {
            let w = (LOG_MACHINE_EPS / (LOG_MACHINE_EPS - log_tol)).sqrt();
            let u = (-phibar / LOG_MACHINE_EPS).sqrt();
            mu = threshold;
            n = (w * log_tol / 2.0 / PI / (u * w - 1.0)).ceil();
            h = w / n;
        } else {
            return Params::INFEASIBLE;
        }
    }
    if !(mu > 0.0 && h > 0.0 && n.is_finite()) {
        return Params::INFEASIBLE;
    }
    Params { mu, h, n }
}
