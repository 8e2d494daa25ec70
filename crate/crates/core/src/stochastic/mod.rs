//! Monte-Carlo samplers for the processes behind the characteristic functions,
//! and empirical characteristic functions.

mod ecf;
mod inverse;
mod rng;
mod stable;
mod telegraph;

pub use ecf::{empirical_cf, EmpiricalCf};
pub use inverse::{sim_inverse_time, sim_inverse_time_levels, sim_stable_inverse_time, InverseTimeGrid};
pub use rng::RngSpec;
pub use stable::{sample_skewed_stable, sample_stable_symmetric};
pub use telegraph::{
    sim_brownian_time_telegraph, sim_brownian_time_telegraph_direct, sim_telegraph, sim_telegraph_with_switches,
    SampleBatch,
};
