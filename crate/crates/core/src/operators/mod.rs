//! Fractional operators: the Riesz-Feller Fourier symbol, a quadrature
//! Caputo-Hadamard derivative, and the Laplace-domain Hilfer kernels.

mod hadamard;
mod hilfer;
mod riesz_feller;

pub use hadamard::{caputo_hadamard_deriv, HadamardQuad};
pub use hilfer::{kernel_laplace, HilferOrders, KernelKind};
pub use riesz_feller::{riesz_feller_symbol, RieszFeller};
