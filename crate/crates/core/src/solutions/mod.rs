//! Closed-form characteristic functions, the telegraph law, and numerical
//! Fourier inversion.

mod density;
mod hadamard;
mod hilfer;
mod inversion;
mod roots;
mod series;

pub use density::{telegraph_density, telegraph_pdf, Atom, DensityEval};
pub use hadamard::{hadamard_cf, space_hadamard_cf, telegraph_cf, two_root_cf, HadamardModel, SpaceCfFlags};
pub use hilfer::{hilfer_cf, hilfer_kernel, two_root_kernel, F2Convention, Forcing, HilferModel, CONVOLUTION_NODES};
pub use inversion::{invert_cf, CfGrid, InversionSpec, Plateau};
pub use roots::{roots, Roots};
