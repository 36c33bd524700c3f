use thiserror::Error;

/// Errors raised by the geometric, closed-form, solver and continuation layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("at least three circles are required, got {0}")]
    TooFewCircles(usize),

    #[error("radius {index} must be positive and finite, got {value}")]
    InvalidRadius { index: usize, value: f64 },

    #[error("dimension mismatch: expected {expected} angles, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("angle {index} is not finite")]
    NonFiniteAngle { index: usize },

    #[error("side {side} has zero length (coincident vertices)")]
    SingularConfiguration { side: usize },

    #[error("parade is degenerate: vertices {0} and {1} coincide")]
    DegenerateParade(usize, usize),

    #[error("expected {expected} parade signs, got {got}")]
    SignCountMismatch { expected: usize, got: usize },

    #[error("input must be positive and finite, got {0}")]
    NonPositiveInput(f64),

    #[error("tangential radius {sigma} must lie in (0, {max})")]
    SigmaOutOfRange { sigma: f64, max: f64 },

    #[error("socle closure residual {residual:e} is not zero")]
    InconsistentSocle { residual: f64 },

    #[error("sign pattern does not give a stationary circuit around the socle (side {side})")]
    NotStationary { side: usize },

    #[error("skip index {index} is invalid for {n} circles")]
    InvalidSkipIndex { index: usize, n: usize },

    #[error("operation requires {expected} circles, got {got}")]
    UnsupportedCircleCount { expected: usize, got: usize },

    #[error("radii must be pairwise distinct")]
    NonDistinctRadii,

    #[error("Newton iteration did not converge after {iterations} iterations (gradient norm {gradient_norm:e})")]
    NoConvergence { iterations: usize, gradient_norm: f64 },

    #[error("invalid solver settings: {0}")]
    InvalidSettings(String),

    #[error("brute-force oracle refuses n = {0} (limited to n <= 4)")]
    OracleTooLarge(usize),

    #[error("invalid sweep plan: {0}")]
    InvalidPlan(String),
}

pub type Result<T> = std::result::Result<T, Error>;
