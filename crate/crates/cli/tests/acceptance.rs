//! Acceptance criteria. Each criterion prints one `PASS`/`FAIL` line; the
//! process fails if any criterion fails.

use std::f64::consts::E;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::Instant;

use num_complex::Complex64;
use statrs::distribution::{ChiSquared, ContinuousCDF, Discrete, Poisson};

use fractel::operators::{caputo_hadamard_deriv, HadamardQuad, HilferOrders, KernelKind, RieszFeller};
use fractel::quad::integrate_adaptive;
use fractel::solutions::{
    hadamard_cf, hilfer_cf, hilfer_kernel, invert_cf, roots, space_hadamard_cf, telegraph_density, telegraph_pdf,
    two_root_cf, Atom, F2Convention, HadamardModel, HilferModel, InversionSpec, Plateau,
};
use fractel::specfun::{gamma, ml, MlArgs};
use fractel::stochastic::{
    empirical_cf, sim_brownian_time_telegraph, sim_stable_inverse_time, sim_telegraph_with_switches, InverseTimeGrid,
    RngSpec,
};
use fractel::validation::{check_eigen, check_kernel, kernel_draws, kernel_s_points, mc_compare};

const SEED: u64 = 42;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn fail<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn ml_real(alpha: f64, beta: f64, z: f64) -> Result<f64, String> {
    ml(&MlArgs::new(alpha, beta, z)).map(|r| r.value.re).map_err(fail)
}

fn special_functions() -> Outcome {
    let oracle = include_str!("../../core/tests/data/ml_oracle.csv");
    let mut rows = 0;
    let mut worst = 0.0_f64;
    for line in oracle.lines().skip(1) {
        let f: Vec<f64> = line.split(',').map(|x| x.parse().unwrap()).collect();
        let got = ml_real(f[0], f[1], f[2])?;
        worst = worst.max((got - f[3]).abs() / f[3].abs());
        rows += 1;
    }
    let mut worst_exp = 0.0_f64;
    let mut worst_cos = 0.0_f64;
    for k in 0..=110 {
        let z = -50.0 + 0.5 * k as f64;
        worst_exp = worst_exp.max((ml_real(1.0, 1.0, z)? - z.exp()).abs() / z.exp());
        let x = 0.1 * k as f64;
        worst_cos = worst_cos.max((ml_real(2.0, 1.0, -x * x)? - x.cos()).abs());
    }
    ensure(
        rows == 200 && worst <= 1e-10 && worst_exp <= 1e-10 && worst_cos <= 1e-10,
        format!("{rows} oracle points, worst rel {worst:.2e}; exp rel {worst_exp:.2e}; cos abs {worst_cos:.2e}"),
    )
}

fn power_law() -> Outcome {
    let spec = HadamardQuad::with_t0(1.0).map_err(fail)?;
    let t = 3.0_f64;
    let u = t.ln();
    let mut worst = 0.0_f64;
    let mut pairs = 0;
    for &b in &[0.5, 1.0, 2.0, 3.5] {
        for &nu in &[0.25, 0.5, 0.75] {
            let got = caputo_hadamard_deriv(|s: f64| s.ln().powf(b), nu, t, &spec).map_err(fail)?;
            let want = gamma(b + 1.0) / gamma(b + 1.0 - nu) * u.powf(b - nu);
            worst = worst.max((got - want).abs());
            pairs += 1;
        }
    }
    ensure(pairs == 12 && worst <= 1e-4, format!("{pairs} (b, nu) pairs, worst abs error {worst:.2e}"))
}

fn eigenfunction() -> Outcome {
    let mut worst = 0.0_f64;
    let mut all = true;
    for &nu in &[0.25, 0.5, 0.75] {
        let r = check_eigen(nu, &[-0.5, -1.0, -2.0], 1.0, &[1.5, E, 4.0], 1e-4);
        all &= r.passed && r.points.len() == 9;
        worst = worst.max(r.max_ratio);
    }
    ensure(all, format!("27 points, worst error/tolerance {worst:.2e}"))
}

fn kernel_oracle() -> Outcome {
    let draws = kernel_draws(SEED, 20);
    let complex_b = draws.iter().filter(|d| d.b.im != 0.0).count();
    let s = kernel_s_points();
    let mut worst = 0.0_f64;
    let mut failed = Vec::new();
    for (i, d) in draws.iter().enumerate() {
        let r = check_kernel(d.kind, &d.orders, d.lambda, d.b, &s, 1e-6);
        worst = worst.max(r.max_ratio);
        if !r.passed || r.points.len() != s.len() {
            failed.push(format!("draw {i}: {}", r.summary()));
        }
    }
    ensure(
        draws.len() == 20 && complex_b > 0 && failed.is_empty(),
        format!("{} draws ({complex_b} with complex b), worst error/tolerance {worst:.2e} {failed:?}", draws.len()),
    )
}

fn normalization_and_symmetry() -> Outcome {
    let sets: [(f64, f64, f64, f64, f64); 10] = [
        (1.0, 1.0, 1.0, 2.0, 0.0),
        (0.5, 1.0, 1.0, 2.0, 0.0),
        (0.25, 0.5, 2.0, 2.0, 0.0),
        (0.75, 2.0, 0.5, 2.0, 0.0),
        (0.5, 1.0, 1.0, 1.5, 0.0),
        (0.5, 1.0, 1.0, 1.5, 0.3),
        (0.9, 0.3, 1.5, 1.0, 0.0),
        (0.6, 1.2, 0.8, 0.7, -0.5),
        (0.4, 0.8, 1.0, 1.2, 0.6),
        (1.0, 1.5, 1.0, 0.5, 0.2),
    ];
    let t = E;
    let mut worst_norm = 0.0_f64;
    let mut worst_sym = 0.0_f64;
    let mut worst_branch = 0.0_f64;
    for &(nu, lambda, c, alpha, theta) in &sets {
        let m = HadamardModel::new(nu, lambda, c, 1.0, alpha).map_err(fail)?;
        let cf = |b: f64| {
            if alpha == 2.0 && theta == 0.0 {
                hadamard_cf(&m, t, b)
            } else {
                space_hadamard_cf(&m, theta, t, b)
            }
        };
        worst_norm = worst_norm.max((cf(0.0).map_err(fail)? - 1.0).norm());
        for k in 1..=50 {
            let beta = 0.2 * k as f64;
            let plus = cf(beta).map_err(fail)?;
            let minus = cf(-beta).map_err(fail)?;
            worst_sym = worst_sym.max((minus - plus.conj()).norm());
        }
        let rf = RieszFeller::new(alpha, theta).map_err(fail)?;
        for k in [1, 7, 23, 50] {
            let beta = 0.2 * k as f64;
            let r = roots(lambda, c * c * rf.symbol(beta));
            let u = m.time_variable(t).map_err(fail)?;
            let a = two_root_cf(nu, lambda, &r, u).map_err(fail)?;
            let b = two_root_cf(nu, lambda, &r.other_branch(), u).map_err(fail)?;
            worst_branch = worst_branch.max((a - b).norm() / a.norm().max(1e-300));
        }
    }
    ensure(
        worst_norm <= 1e-12 && worst_sym <= 1e-10 && worst_branch <= 1e-12,
        format!("10 parameter sets; |cf(0)-1| {worst_norm:.2e}, hermitian {worst_sym:.2e}, branch {worst_branch:.2e}"),
    )
}

fn classical_reduction() -> Outcome {
    let (lambda, c, t0, t) = (1.0, 1.0, 1.0, E * E);
    let m = HadamardModel::new(1.0, lambda, c, t0, 2.0).map_err(fail)?;
    let tau = (t / t0).ln();
    let ct = c * tau;
    let e = (-lambda * tau).exp();
    let atoms = [Atom { location: -ct, mass: e / 2.0 }, Atom { location: ct, mass: e / 2.0 }];
    let edge = e * (lambda + lambda * lambda * tau / 2.0) / (2.0 * c);
    let plateaus = [Plateau { half_width: ct, height: edge }];
    let xs: Vec<f64> = (0..=240).map(|k| -1.2 * ct + 0.01 * ct * k as f64).collect();
    let inv = invert_cf(|b| hadamard_cf(&m, t, b), &xs, &InversionSpec::default(), &atoms, &plateaus).map_err(fail)?;
    let exact = telegraph_density(lambda, c, tau, &xs).map_err(fail)?;
    let sup = xs
        .iter()
        .zip(inv.pdf.iter().zip(&exact.pdf))
        .filter(|(x, _)| (x.abs() - ct).abs() > 1e-9)
        .map(|(_, (a, b))| (a - b).abs())
        .fold(0.0, f64::max);

    let (cont, _) = integrate_adaptive(|x| telegraph_pdf(lambda, c, tau, x).unwrap().into(), -ct, ct, 1e-14, 1e-14)
        .map_err(fail)?;
    let mass = cont.re + exact.atoms.iter().map(|a| a.mass).sum::<f64>();

    let h = 1e-3;
    let u = |x: f64, s: f64| telegraph_pdf(lambda, c, s, x).unwrap();
    let mut res = 0.0_f64;
    let mut scale = 0.0_f64;
    for k in 0..=36 {
        let x = -0.9 * ct + 0.05 * ct * k as f64;
        let u0 = u(x, tau);
        let u_tt = (u(x, tau + h) - 2.0 * u0 + u(x, tau - h)) / (h * h);
        let u_t = (u(x, tau + h) - u(x, tau - h)) / (2.0 * h);
        let u_xx = (u(x + h, tau) - 2.0 * u0 + u(x - h, tau)) / (h * h);
        res = res.max((u_tt + 2.0 * lambda * u_t - c * c * u_xx).abs());
        scale = scale.max(u_tt.abs()).max((2.0 * lambda * u_t).abs()).max((c * c * u_xx).abs());
    }
    let rel = res / scale;
    ensure(
        sup <= 1e-3 && (mass - 1.0).abs() <= 1e-8 && rel <= 1e-3,
        format!("inversion sup error {sup:.2e}; mass error {:.2e}; PDE residual {rel:.2e}", (mass - 1.0).abs()),
    )
}

fn mc_brownian_time() -> Outcome {
    let (lambda, c, t0, t) = (1.0, 1.0, 1.0, E);
    let m = HadamardModel::new(0.5, lambda, c, t0, 2.0).map_err(fail)?;
    let betas: Vec<f64> = (0..21).map(|k| -5.0 + 0.5 * k as f64).collect();
    let batch = sim_brownian_time_telegraph(lambda, c, t0, t, 1_000_000, &RngSpec::new(SEED, 101)).map_err(fail)?;
    let ecf = empirical_cf(&batch, &betas).map_err(fail)?;
    let r = mc_compare("brownian time", |b| hadamard_cf(&m, t, b), &ecf, 4.0, 0.95);
    let inside = r.points.iter().filter(|p| p.ratio() <= 1.0).count();
    ensure(r.passed, format!("{inside}/21 frequencies within 4 stderr"))
}

fn mc_stable_inverse_time() -> Outcome {
    let (lambda, c, t0, t) = (1.0, 1.0, 1.0, E);
    let betas: Vec<f64> = (0..15).map(|k| -3.5 + 0.5 * k as f64).collect();
    let grid = InverseTimeGrid::default();
    let mut detail = Vec::new();
    let mut ok = true;
    for (i, &alpha) in [1.5, 2.0].iter().enumerate() {
        let m = HadamardModel::new(0.5, lambda, c, t0, alpha).map_err(fail)?;
        let rng = RngSpec::new(SEED, 201 + i as u64);
        let batch = sim_stable_inverse_time(0.5, lambda, c, alpha, t0, t, 100_000, &rng, &grid).map_err(fail)?;
        let ecf = empirical_cf(&batch, &betas).map_err(fail)?;
        let r = mc_compare("stable at inverse time", |b| space_hadamard_cf(&m, 0.0, t, b), &ecf, 4.0, 0.9);
        let inside = r.points.iter().filter(|p| p.ratio() <= 1.0).count();
        ok &= r.passed;
        detail.push(format!("alpha={alpha}: {inside}/15"));
    }
    ensure(ok, format!("{} frequencies within 4 stderr", detail.join(", ")))
}

fn telegraph_law() -> Outcome {
    let (lambda, c, t) = (1.0, 1.0, 2.0);
    let n = 1_000_000;
    let (batch, switches) = sim_telegraph_with_switches(lambda, c, t, n, &RngSpec::new(SEED, 301)).map_err(fail)?;
    let nf = n as f64;
    let ct = c * t;

    let p_atom = (-lambda * t).exp();
    let atoms = batch.values.iter().filter(|x| x.abs() == ct).count() as f64;
    let z_atom = (atoms / nf - p_atom) / (p_atom * (1.0 - p_atom) / nf).sqrt();

    let bins = 40;
    let width = 2.0 * ct / bins as f64;
    let mut counts = vec![0usize; bins];
    for &x in batch.values.iter().filter(|x| x.abs() < ct) {
        counts[(((x + ct) / width) as usize).min(bins - 1)] += 1;
    }
    let mut worst_bin = 0.0_f64;
    for (k, &count) in counts.iter().enumerate() {
        let lo = -ct + width * k as f64;
        let (p, _) =
            integrate_adaptive(|x| telegraph_pdf(lambda, c, t, x).unwrap().into(), lo, lo + width, 1e-13, 1e-12)
                .map_err(fail)?;
        let p = p.re;
        worst_bin = worst_bin.max((count as f64 / nf - p).abs() / (p * (1.0 - p) / nf).sqrt());
    }

    let poisson = Poisson::new(lambda * t).map_err(fail)?;
    let top = 8;
    let mut observed = vec![0usize; top + 1];
    for &s in &switches {
        observed[(s as usize).min(top)] += 1;
    }
    let mut chi2 = 0.0;
    for (k, &o) in observed.iter().enumerate() {
        let p =
            if k < top { poisson.pmf(k as u64) } else { 1.0 - (0..top).map(|j| poisson.pmf(j as u64)).sum::<f64>() };
        chi2 += (o as f64 - nf * p).powi(2) / (nf * p);
    }
    let critical = ChiSquared::new(top as f64).map_err(fail)?.inverse_cdf(0.999);
    ensure(
        z_atom.abs() <= 3.0 && worst_bin <= 4.0 && chi2 <= critical,
        format!(
            "atom z-score {z_atom:.2}; worst bin z-score {worst_bin:.2} over {bins} bins; switch chi2 {chi2:.1} (0.999 quantile {critical:.1})"
        ),
    )
}

fn hilfer_reductions() -> Outcome {
    let mut worst_omega = 0.0_f64;
    for &lambda in &[0.3, 1.0, 2.0] {
        for b in
            [Complex64::new(0.5, 0.0), Complex64::new(3.0, 0.0), Complex64::new(1.0, 2.0), Complex64::new(0.0, 0.0)]
        {
            for &delta in &[0.0, 0.5, 1.0] {
                let orders = HilferOrders::new(1.0, delta).map_err(fail)?;
                for &t in &[0.5, 1.0, 3.0] {
                    let r = roots(lambda, b);
                    let want = ((r.xi * t).exp() - (r.eta * t).exp()) / (r.xi - r.eta);
                    let got = hilfer_kernel(KernelKind::Omega, &orders, lambda, b, t).map_err(fail)?;
                    worst_omega = worst_omega.max((got - want).norm() / want.norm().max(1.0));
                }
            }
        }
    }

    let mut worst_f2 = 0.0_f64;
    let mut worst_factor = 0.0_f64;
    let mut printed_differs = true;
    for &lambda in &[0.25, 1.0, 2.0] {
        let orders = HilferOrders::new(1.0, 1.0).map_err(fail)?;
        let rf = RieszFeller::riesz(2.0).map_err(fail)?;
        let model = HilferModel::new(orders, lambda, 1.0, 0.0, rf).map_err(fail)?;
        let printed = model.with_f2_convention(F2Convention::Printed);
        for &t in &[0.5, 1.0, 3.0] {
            let one = Complex64::new(1.0, 0.0);
            let zero = Complex64::new(0.0, 0.0);
            let two = hilfer_cf(&model, t, 0.0, zero, one, None).map_err(fail)?;
            let pr = hilfer_cf(&printed, t, 0.0, zero, one, None).map_err(fail)?;
            let want = 1.0 - (-2.0 * lambda * t).exp();
            worst_f2 = worst_f2.max((two - want).norm());
            worst_factor = worst_factor.max((two - pr * (2.0 * lambda)).norm() / two.norm());
            printed_differs &= (pr - want).norm() > 1e-3;
        }
    }
    ensure(
        worst_omega <= 1e-10 && worst_f2 <= 1e-10 && worst_factor <= 1e-15 && printed_differs,
        format!(
            "omega error {worst_omega:.2e}; f2 channel error {worst_f2:.2e}; printed/two-lambda factor error {worst_factor:.2e}"
        ),
    )
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(fail)?;
    let run = |name: &str| -> Result<Vec<u8>, String> {
        let out = dir.path().join(name);
        let o = Command::new(env!("CARGO_BIN_EXE_fractel"))
            .args(["validate", "all", "--seed", "42", "--out"])
            .arg(&out)
            .output()
            .map_err(fail)?;
        if !o.status.success() {
            return Err(format!("validate exited with {:?}: {}", o.status.code(), String::from_utf8_lossy(&o.stderr)));
        }
        std::fs::read(&out).map_err(fail)
    };
    let a = run("first.json")?;
    let b = run("second.json")?;
    let reports: serde_json::Value = serde_json::from_slice(&a).map_err(fail)?;
    let n = reports.as_array().map_or(0, Vec::len);
    ensure(a == b && n > 0, format!("{n} reports, {} bytes, identical: {}", a.len(), a == b))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("1 special-function conformance", special_functions),
        ("2 power-law property", power_law),
        ("3 eigenfunction identity", eigenfunction),
        ("4 kernel Laplace oracle", kernel_oracle),
        ("5 normalization and symmetry", normalization_and_symmetry),
        ("6 classical reduction chain", classical_reduction),
        ("7 Monte-Carlo Brownian time", mc_brownian_time),
        ("8 Monte-Carlo stable at inverse time", mc_stable_inverse_time),
        ("9 telegraph simulator law", telegraph_law),
        ("10 gamma=1 Hilfer reductions", hilfer_reductions),
        ("11 end-to-end determinism", determinism),
    ];
    let mut failures = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {name}: {detail} ({secs:.1} s)"),
            Err(detail) => {
                failures += 1;
                println!("FAIL criterion {name}: {detail} ({secs:.1} s)");
            }
        }
    }
    println!("{} of 11 acceptance criteria passed", 11 - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}
