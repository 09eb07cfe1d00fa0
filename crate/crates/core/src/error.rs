use thiserror::Error;

/// Errors raised by model construction, the analytic formulas and the
/// numerical solvers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A physical parameter is outside the family's admissible range.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// The radial grid is malformed or touches a singularity of the model.
    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    /// A model/family combination that the requested operation does not support.
    #[error("configuration error: {0}")]
    Config(String),

    /// A value outside the mathematical domain of an operation
    /// (negative ε², non-normalizable ground state, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// The requested level does not exist as a bound state.
    #[error("no bound state with n = {n}; bound levels are n = 0..={max}")]
    NoBoundState { n: usize, max: usize },

    /// Bad call arguments (sizes, counts).
    #[error("argument error: {0}")]
    Argument(String),

    /// Iterative solver failed to converge or hit a singular system.
    #[error("numeric error: {0}")]
    Numeric(String),
}

pub type Result<T> = std::result::Result<T, Error>;
