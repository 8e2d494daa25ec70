use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A parameter lies outside the admissible set of the operation.
    #[error("{name} = {value} is outside its domain: {reason}")]
    Domain { name: &'static str, value: f64, reason: &'static str },

    /// The evaluation ran outside the region where the error contract holds.
    /// The best available value is still returned to the caller.
    #[error("value {re} + {im}i is not certified (estimated error {est_abs_error:e}): {reason}")]
    Uncertified { re: f64, im: f64, est_abs_error: f64, reason: &'static str },

    #[error("overflow: {0}")]
    Overflow(&'static str),

    #[error("denominator vanishes at s = {re} + {im}i")]
    Pole { re: f64, im: f64 },

    #[error("function is not finite at t = {at}")]
    EvaluationFailure { at: f64 },

    #[error("kernel is singular at t = {t} (exponent {exponent})")]
    Singularity { t: f64, exponent: f64 },

    #[error("quadrature failed: {0}")]
    Quadrature(String),

    #[error("Hermitian symmetry violated at beta = {beta}: deviation {deviation:e}")]
    SymmetryViolation { beta: f64, deviation: f64 },

    #[error("first passage above level {level} not found before s = {horizon}")]
    GridExhausted { level: f64, horizon: f64 },
}

impl Error {
    pub(crate) fn domain(name: &'static str, value: f64, reason: &'static str) -> Self {
        Error::Domain { name, value, reason }
    }

    /// True for errors caused by invalid caller input, as opposed to numerical
    /// failures during an otherwise valid computation.
    pub fn is_parameter_error(&self) -> bool {
        matches!(self, Error::Domain { .. })
    }
}
