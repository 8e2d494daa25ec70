//! Independent oracles for the analytic modules: forward Laplace quadrature
//! against the Laplace-domain kernels, Caputo-Hadamard eigenfunction residuals,
//! and Monte-Carlo against analytic characteristic functions.

mod checks;
mod laplace;
mod report;
mod suite;

pub use checks::{check_eigen, check_kernel, kernel_growth_rate, mc_compare};
pub use laplace::{laplace_forward, Head, LaplacePolicy};
pub use report::{CheckPoint, CheckReport};
pub use suite::{
    kernel_draws, kernel_s_points, run_suite, suite_eigen, suite_kernels, suite_mc, KernelDraw, SuiteConfig, SuiteGroup,
};
