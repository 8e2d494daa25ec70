use num_complex::Complex64;
use serde::Serialize;
use serde_json::json;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use fractel::operators::{HilferOrders, RieszFeller};
use fractel::solutions::{
    hadamard_cf, hilfer_cf, invert_cf, space_hadamard_cf, telegraph_density, Atom, CfGrid, DensityEval, F2Convention,
    HadamardModel, HilferModel, InversionSpec, Plateau, SpaceCfFlags,
};
use fractel::specfun::{ml, ml_deriv, MlArgs};
use fractel::stochastic::{
    sample_skewed_stable, sample_stable_symmetric, sim_brownian_time_telegraph, sim_brownian_time_telegraph_direct,
    sim_inverse_time, sim_stable_inverse_time, sim_telegraph, InverseTimeGrid, RngSpec, SampleBatch,
};
use fractel::validation::{run_suite, SuiteConfig, SuiteGroup};

use crate::args::{CfCommand, Command, Convention, DensityCommand, FreqGrid, Group, SimulateCommand, XGrid};

/// A run that did not complete; maps onto the process exit code.
pub enum Failure {
    /// Invalid input, exit 2.
    Parameter(serde_json::Value),
    /// Numerical or I/O failure, exit 1.
    Internal(serde_json::Value),
}

impl Failure {
    pub fn report(self) -> ExitCode {
        let (code, body) = match self {
            Failure::Parameter(v) => (2, v),
            Failure::Internal(v) => (1, v),
        };
        eprintln!("{body}");
        ExitCode::from(code)
    }

    fn parameter(name: &str, message: impl Into<String>) -> Self {
        Failure::Parameter(json!({ "error": "parameter", "name": name, "message": message.into() }))
    }
}

impl From<fractel::Error> for Failure {
    fn from(e: fractel::Error) -> Self {
        match &e {
            fractel::Error::Domain { name, value, reason } => Failure::Parameter(json!({
                "error": "parameter",
                "name": name,
                "value": value,
                "message": reason,
            })),
            _ => Failure::Internal(json!({ "error": "numerical", "message": e.to_string() })),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Internal(json!({ "error": "io", "message": e.to_string() }))
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Internal(json!({ "error": "io", "message": e.to_string() }))
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Internal(json!({ "error": "io", "message": e.to_string() }))
    }
}

type Outcome = Result<ExitCode, Failure>;

/// Honours `FRACTEL_THREADS`; results never depend on it.
pub fn configure_threads() -> Result<(), Failure> {
    let Ok(raw) = std::env::var("FRACTEL_THREADS") else { return Ok(()) };
    let n: usize =
        raw.parse().ok().filter(|&n| n > 0).ok_or_else(|| {
            Failure::parameter("FRACTEL_THREADS", format!("expected a positive integer, got {raw:?}"))
        })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Failure::Internal(json!({ "error": "threads", "message": e.to_string() })))
}

pub fn run(command: Command) -> Outcome {
    match command {
        Command::Ml(a) => {
            let args = MlArgs::new(a.alpha, a.beta, Complex64::new(a.z_re, a.z_im));
            let r = if a.deriv { ml_deriv(&args)? } else { ml(&args)? };
            let out = json!({
                "value": { "re": r.value.re, "im": r.value.im },
                "est_abs_error": r.est_abs_error,
                "branch": r.branch,
            });
            println!("{out}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Cf(c) => cf(c),
        Command::Density(d) => density(d),
        Command::Simulate(s) => simulate(s),
        Command::Validate(v) => {
            let group = match v.group {
                Group::Kernels => SuiteGroup::Kernels,
                Group::Eigen => SuiteGroup::Eigen,
                Group::Mc => SuiteGroup::Mc,
                Group::All => SuiteGroup::All,
            };
            let config = SuiteConfig::new(v.seed);
            let reports = run_suite(group, &config)?;
            for r in &reports {
                eprintln!("{}", r.summary());
            }
            let body = serde_json::to_string_pretty(&reports)?;
            match &v.out {
                Some(path) => {
                    std::fs::write(path, body + "\n")?;
                    echo_config(path, "validate", &json!({ "group": group, "suite": config }))?;
                }
                None => println!("{body}"),
            }
            if reports.iter().all(|r| r.passed) {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
    }
}

fn sidecar(out: &Path, suffix: &str) -> PathBuf {
    let mut s = out.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}

fn echo_config<T: Serialize>(out: &Path, command: &str, params: &T) -> Result<(), Failure> {
    let body = json!({ "command": command, "params": params, "out": out });
    std::fs::write(sidecar(out, ".config.json"), serde_json::to_string_pretty(&body)? + "\n")?;
    Ok(())
}

fn check_freq_grid(g: &FreqGrid) -> Result<(), Failure> {
    if !(g.beta_max > 0.0 && g.beta_max.is_finite()) {
        return Err(Failure::parameter("beta_max", "must be > 0"));
    }
    if g.n_beta < 2 {
        return Err(Failure::parameter("n_beta", "at least two frequencies"));
    }
    Ok(())
}

fn write_cf(out: &Path, grid: &CfGrid) -> Result<(), Failure> {
    let mut w = csv::Writer::from_path(out)?;
    w.write_record(["beta", "re", "im"])?;
    for (b, v) in grid.betas.iter().zip(&grid.values) {
        w.write_record([b.to_string(), v.re.to_string(), v.im.to_string()])?;
    }
    w.flush()?;
    Ok(())
}

fn cf(c: CfCommand) -> Outcome {
    match &c {
        CfCommand::Hadamard { model, grid, out } => {
            let m = HadamardModel::new(model.nu, model.lambda, model.c, model.t0, 2.0)?;
            check_freq_grid(grid)?;
            m.time_variable(model.t)?;
            let values = CfGrid::evaluate(grid.beta_max, grid.n_beta, |b| hadamard_cf(&m, model.t, b))?;
            write_cf(out, &values)?;
            echo_config(out, "cf hadamard", &c)?;
        }
        CfCommand::SpaceHadamard { model, alpha, theta, grid, out } => {
            let m = HadamardModel::new(model.nu, model.lambda, model.c, model.t0, *alpha)?;
            RieszFeller::new(*alpha, *theta)?;
            check_freq_grid(grid)?;
            m.time_variable(model.t)?;
            let values = CfGrid::evaluate(grid.beta_max, grid.n_beta, |b| space_hadamard_cf(&m, *theta, model.t, b))?;
            write_cf(out, &values)?;
            let flags = SpaceCfFlags::new(&m, *theta);
            echo_config(out, "cf space-hadamard", &json!({ "args": &c, "flags": flags }))?;
        }
        CfCommand::Hilfer {
            gamma,
            delta,
            extended,
            lambda,
            c: speed,
            omega,
            alpha,
            theta,
            t,
            f1,
            f2,
            convention,
            grid,
            out,
        } => {
            let orders =
                if *extended { HilferOrders::extended(*gamma, *delta)? } else { HilferOrders::new(*gamma, *delta)? };
            let rf = RieszFeller::new(*alpha, *theta)?;
            let conv = match convention {
                Convention::TwoLambda => F2Convention::TwoLambda,
                Convention::Printed => F2Convention::Printed,
            };
            let m = HilferModel::new(orders, *lambda, *speed, *omega, rf)?.with_f2_convention(conv);
            check_freq_grid(grid)?;
            if !(*t > 0.0 && t.is_finite()) {
                return Err(Failure::parameter("t", "must be > 0"));
            }
            let (a, b) = (Complex64::new(*f1, 0.0), Complex64::new(*f2, 0.0));
            let values = CfGrid::evaluate(grid.beta_max, grid.n_beta, |beta| hilfer_cf(&m, *t, beta, a, b, None))?;
            write_cf(out, &values)?;
            echo_config(out, "cf hilfer", &c)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn x_grid(g: &XGrid, default_half_width: f64) -> Result<Vec<f64>, Failure> {
    let lo = g.x_min.unwrap_or(-default_half_width);
    let hi = g.x_max.unwrap_or(default_half_width);
    if !(lo.is_finite() && hi.is_finite() && hi > lo) {
        return Err(Failure::parameter("x_min", "need finite x_min < x_max"));
    }
    if g.n_x < 2 {
        return Err(Failure::parameter("n_x", "at least two points"));
    }
    let step = (hi - lo) / (g.n_x - 1) as f64;
    Ok((0..g.n_x).map(|k| if k + 1 == g.n_x { hi } else { lo + k as f64 * step }).collect())
}

fn write_density(out: &Path, d: &DensityEval) -> Result<(), Failure> {
    let mut w = csv::Writer::from_path(out)?;
    w.write_record(["x", "pdf"])?;
    for (x, p) in d.x_grid.iter().zip(&d.pdf) {
        w.write_record([x.to_string(), p.to_string()])?;
    }
    w.flush()?;
    let side = json!({
        "atoms": d.atoms,
        "mass_in_grid": d.mass_in_grid,
        "truncation_error": d.truncation_error,
        "resolution_limited": d.resolution_limited,
    });
    std::fs::write(sidecar(out, ".atoms.json"), serde_json::to_string_pretty(&side)? + "\n")?;
    Ok(())
}

fn density(d: DensityCommand) -> Outcome {
    match &d {
        DensityCommand::Telegraph { lambda, c, t, grid, out } => {
            let xs = x_grid(grid, 1.2 * c * t)?;
            let dens = telegraph_density(*lambda, *c, *t, &xs)?;
            write_density(out, &dens)?;
            echo_config(out, "density telegraph", &d)?;
        }
        DensityCommand::Inverted { model, alpha, theta, grid, max_points, out } => {
            let m = HadamardModel::new(model.nu, model.lambda, model.c, model.t0, *alpha)?;
            RieszFeller::new(*alpha, *theta)?;
            let tau = (model.t / m.t0).ln();
            m.time_variable(model.t)?;
            if tau == 0.0 {
                return Err(Failure::parameter("t", "t = t0 gives a point mass; nothing to invert"));
            }
            let classical = m.nu == 1.0 && *alpha == 2.0;
            let half = if classical { 1.2 * m.c * tau } else { 5.0 * (m.c * tau).max(1.0) };
            let xs = x_grid(grid, half)?;
            let (atoms, plateaus) = if classical {
                let e = (-m.lambda * tau).exp();
                let edge = e * (m.lambda + m.lambda * m.lambda * tau / 2.0) / (2.0 * m.c);
                (
                    vec![Atom { location: -m.c * tau, mass: e / 2.0 }, Atom { location: m.c * tau, mass: e / 2.0 }],
                    vec![Plateau { half_width: m.c * tau, height: edge }],
                )
            } else {
                (Vec::new(), Vec::new())
            };
            let spec = InversionSpec { max_points: *max_points, ..Default::default() };
            let dens = invert_cf(|b| space_hadamard_cf(&m, *theta, model.t, b), &xs, &spec, &atoms, &plateaus)?;
            write_density(out, &dens)?;
            echo_config(out, "density inverted", &d)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn write_samples(out: &Path, header: &serde_json::Value, batch: &SampleBatch) -> Result<(), Failure> {
    let mut f = BufWriter::new(File::create(out)?);
    writeln!(f, "# {header}")?;
    {
        let mut w = csv::Writer::from_writer(&mut f);
        w.write_record(["value"])?;
        for v in &batch.values {
            w.write_record([v.to_string()])?;
        }
        w.flush()?;
    }
    f.flush()?;
    Ok(())
}

fn simulate(s: SimulateCommand) -> Outcome {
    let (name, run, batch) = match &s {
        SimulateCommand::Telegraph { lambda, c, t, run } => {
            ("simulate telegraph", run, sim_telegraph(*lambda, *c, *t, run.n, &RngSpec::new(run.seed, 0))?)
        }
        SimulateCommand::BrownianTime { lambda, c, t0, t, direct, run } => {
            let rng = RngSpec::new(run.seed, 0);
            let b = if *direct {
                sim_brownian_time_telegraph_direct(*lambda, *c, *t, run.n, &rng)?
            } else {
                sim_brownian_time_telegraph(*lambda, *c, *t0, *t, run.n, &rng)?
            };
            ("simulate brownian-time", run, b)
        }
        SimulateCommand::Stable { alpha, scale, skewed, run } => {
            let rng = RngSpec::new(run.seed, 0);
            let b = if *skewed {
                sample_skewed_stable(*alpha, *scale, run.n, &rng)?
            } else {
                sample_stable_symmetric(*alpha, *scale, run.n, &rng)?
            };
            ("simulate stable", run, b)
        }
        SimulateCommand::InverseTime { nu, lambda, t, grid_step, compose_alpha, c, t0, run } => {
            let rng = RngSpec::new(run.seed, 0);
            let grid = InverseTimeGrid::with_step(*grid_step);
            let b = match compose_alpha {
                Some(a) => sim_stable_inverse_time(*nu, *lambda, *c, *a, *t0, *t, run.n, &rng, &grid)?,
                None => sim_inverse_time(*nu, *lambda, *t, run.n, &rng, &grid)?,
            };
            ("simulate inverse-time", run, b)
        }
    };
    let header = json!({ "command": name, "params": &s, "seed": run.seed, "n": batch.n });
    write_samples(&run.out, &header, &batch)?;
    echo_config(&run.out, name, &s)?;
    Ok(ExitCode::SUCCESS)
}
