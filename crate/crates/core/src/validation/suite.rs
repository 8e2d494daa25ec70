//! The standard validation suite.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::checks::{check_eigen, check_kernel, kernel_growth_rate, mc_compare};
use super::report::CheckReport;
use crate::error::Result;
use crate::operators::{kernel_laplace, HilferOrders, KernelKind, RieszFeller};
use crate::solutions::{hadamard_cf, space_hadamard_cf, HadamardModel};
use crate::stochastic::{
    empirical_cf, sim_brownian_time_telegraph, sim_stable_inverse_time, sim_telegraph, InverseTimeGrid, RngSpec,
};

/// Groups of checks in the suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SuiteGroup {
    Kernels,
    Eigen,
    Mc,
    All,
}

/// Sizes of the suite's Monte-Carlo checks.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub seed: u64,
    pub kernel_draws: usize,
    pub mc_n_brownian: usize,
    pub mc_n_telegraph: usize,
    pub mc_n_inverse: usize,
    pub inverse_step: f64,
}

impl SuiteConfig {
    pub fn new(seed: u64) -> Self {
        SuiteConfig {
            seed,
            kernel_draws: 20,
            mc_n_brownian: 1_000_000,
            mc_n_telegraph: 1_000_000,
            mc_n_inverse: 100_000,
            inverse_step: InverseTimeGrid::DEFAULT_STEP,
        }
    }
}

/// Laplace points of the kernel checks.
pub fn kernel_s_points() -> Vec<Complex64> {
    vec![2.0.into(), 3.0.into(), 5.0.into(), Complex64::new(2.0, 1.0)]
}

/// A randomised kernel problem `(kind, orders, λ, b)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KernelDraw {
    pub kind: KernelKind,
    pub orders: HilferOrders,
    pub lambda: f64,
    pub b: Complex64,
}

/// `count` kernel problems drawn from `seed`. Every third draw has a real
/// `b`; the others use `b = ω + c² ψ^θ_α(β)` with a random Riesz-Feller
/// symbol. Draws whose kernel grows too fast for the `s` points, sit within
/// 0.05 of a non-integrable `t^{-1}` leading power, or put a pole near an
/// `s` point are redrawn.
pub fn kernel_draws(seed: u64, count: usize) -> Vec<KernelDraw> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x6b65_726e_656c);
    let s_points = kernel_s_points();
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let kind = KernelKind::ALL[out.len() % 3];
        let gamma = rng.gen_range(0.2..=1.0);
        let delta = rng.gen_range(0.0..=1.0);
        let Ok(orders) = HilferOrders::new(gamma, delta) else { continue };
        let lambda = rng.gen_range(0.0..2.0);
        let b = if out.len() % 3 == 0 {
            Complex64::new(rng.gen_range(0.0..4.0), 0.0)
        } else {
            let alpha = rng.gen_range(0.3..=2.0);
            let bound = f64::min(alpha, 2.0 - alpha);
            let theta = rng.gen_range(-1.0..=1.0) * bound;
            let Ok(rf) = RieszFeller::new(alpha, theta) else { continue };
            let omega = rng.gen_range(0.0..1.0);
            let c = rng.gen_range(0.5..1.5);
            let beta = rng.gen_range(-2.5..2.5);
            omega + c * c * rf.symbol(beta)
        };
        if kernel_growth_rate(&orders, lambda, b) > 1.0 {
            continue;
        }
        if (orders.small_time_exponent(kind) + 1.0).abs() < 0.05 {
            continue;
        }
        let near_pole = s_points.iter().any(|&s| {
            let sg = s.powf(gamma);
            (sg * sg + 2.0 * lambda * sg + b).norm() < 1e-3
        });
        if near_pole || s_points.iter().any(|&s| kernel_laplace(kind, &orders, lambda, b, s).is_err()) {
            continue;
        }
        out.push(KernelDraw { kind, orders, lambda, b });
    }
    out
}

pub fn suite_kernels(config: &SuiteConfig) -> Vec<CheckReport> {
    let s = kernel_s_points();
    let mut reports = Vec::new();
    let unit = HilferOrders::new(1.0, 0.0).expect("valid orders");
    reports.push(check_kernel(KernelKind::Omega, &unit, 1.0, 0.0.into(), &[2.0.into()], 1e-6));
    let half = HilferOrders::new(0.5, 0.5).expect("valid orders");
    reports.push(check_kernel(KernelKind::Delta, &half, 1.0, 2.0.into(), &s[..3], 1e-6));
    let skew = HilferOrders::new(0.9, 0.1).expect("valid orders");
    reports.push(check_kernel(KernelKind::Xi, &skew, 0.5, Complex64::new(1.0, 0.5), &[3.0.into()], 1e-6));
    let draws = kernel_draws(config.seed, config.kernel_draws);
    let random: Vec<CheckReport> = draws
        .par_iter()
        .enumerate()
        .map(|(i, d)| {
            let mut r = check_kernel(d.kind, &d.orders, d.lambda, d.b, &s, 1e-6);
            r.name = format!("random {i}: {}", r.name);
            r
        })
        .collect();
    reports.extend(random);
    reports
}

pub fn suite_eigen() -> Vec<CheckReport> {
    let t_list = [1.5, std::f64::consts::E, 4.0];
    [0.25, 0.5, 0.75].par_iter().map(|&nu| check_eigen(nu, &[-0.5, -1.0, -2.0], 1.0, &t_list, 1e-4)).collect()
}

/// Monte-Carlo identifications: Brownian-time telegraph against the ν = 1/2
/// Hadamard CF, the classical telegraph against ν = 1, and the stable process
/// at inverse-stable time against the space-fractional CF for α ∈ {1.5, 2}.
pub fn suite_mc(config: &SuiteConfig) -> Result<Vec<CheckReport>> {
    let e = std::f64::consts::E;
    let (lambda, c, t0, t) = (1.0, 1.0, 1.0, e);
    let mut reports = Vec::new();

    let betas21: Vec<f64> = (0..21).map(|k| -5.0 + 0.5 * k as f64).collect();
    let m = HadamardModel::new(0.5, lambda, c, t0, 2.0)?;
    let batch = sim_brownian_time_telegraph(lambda, c, t0, t, config.mc_n_brownian, &RngSpec::new(config.seed, 1))?;
    let ecf = empirical_cf(&batch, &betas21)?;
    reports.push(mc_compare("mc brownian-time telegraph vs nu=1/2", |b| hadamard_cf(&m, t, b), &ecf, 4.0, 0.95));

    let m1 = HadamardModel::new(1.0, lambda, c, t0, 2.0)?;
    let tau = (t / t0).ln();
    let batch = sim_telegraph(lambda, c, tau, config.mc_n_telegraph, &RngSpec::new(config.seed, 2))?;
    let ecf = empirical_cf(&batch, &betas21)?;
    reports.push(mc_compare("mc telegraph vs nu=1", |b| hadamard_cf(&m1, t, b), &ecf, 4.0, 0.95));

    let betas15: Vec<f64> = (0..15).map(|k| -3.5 + 0.5 * k as f64).collect();
    let grid = InverseTimeGrid::with_step(config.inverse_step);
    for (i, &alpha) in [1.5, 2.0].iter().enumerate() {
        let m = HadamardModel::new(0.5, lambda, c, t0, alpha)?;
        let rng = RngSpec::new(config.seed, 3 + i as u64);
        let batch = sim_stable_inverse_time(0.5, lambda, c, alpha, t0, t, config.mc_n_inverse, &rng, &grid)?;
        let ecf = empirical_cf(&batch, &betas15)?;
        let name = format!("mc stable at inverse time vs space CF alpha={alpha}");
        reports.push(mc_compare(&name, |b| space_hadamard_cf(&m, 0.0, t, b), &ecf, 4.0, 0.9));
    }
    Ok(reports)
}

/// Runs the selected group of checks. Deterministic for a fixed configuration.
pub fn run_suite(group: SuiteGroup, config: &SuiteConfig) -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    if matches!(group, SuiteGroup::Kernels | SuiteGroup::All) {
        out.extend(suite_kernels(config));
    }
    if matches!(group, SuiteGroup::Eigen | SuiteGroup::All) {
        out.extend(suite_eigen());
    }
    if matches!(group, SuiteGroup::Mc | SuiteGroup::All) {
        out.extend(suite_mc(config)?);
    }
    Ok(out)
}
