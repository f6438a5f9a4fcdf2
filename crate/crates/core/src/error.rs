use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("Gamma function pole at x = {0}")]
    GammaPole(f64),

    #[error("Mittag-Leffler value not attainable to tolerance at z = {re} + {im}i: {reason}")]
    AccuracyNotAttainable { re: f64, im: f64, reason: String },

    #[error("unsupported Prabhakar parameter gamma = {0} (only 1 and 2 are implemented)")]
    UnsupportedGamma(f64),

    #[error("overflow evaluating {0}")]
    Overflow(String),

    #[error("matrix is not diagonalizable to working accuracy ({0})")]
    NotDiagonalizable(String),

    #[error("eigenvalue iteration did not converge")]
    EigenNonConvergence,

    #[error("leading coefficient of the series is zero")]
    ZeroLeadingCoefficient,

    #[error("unsupported scheme: {0}")]
    UnsupportedScheme(String),

    #[error("singular step matrix (c I - s A) is not invertible")]
    SingularStepMatrix,

    #[error("nonlinear iteration did not converge at step {step} (residual {residual:e})")]
    NonlinearNonConvergence { step: usize, residual: f64 },

    #[error("quadrature did not converge: {0}")]
    QuadratureNonConvergence(String),

    #[error("insufficient range: {0}")]
    InsufficientRange(String),

    #[error("unreliable tail estimate: {0}")]
    UnreliableTail(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}
