use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid character tuple: {0}")]
    InvalidTuple(String),
    #[error("tuple {0} does not satisfy the Hodge condition")]
    NotHodge(String),

    #[error("division by an expression whose enclosure contains zero")]
    DivisionNearZero,
    #[error("logarithm argument {0} straddles the branch cut")]
    BranchAmbiguity(String),
    #[error("pole of the integrand lies on the integration path: {0}")]
    PoleOnPath(String),
    #[error("invalid exponent: {0}")]
    InvalidExponent(String),
    #[error("repeated denominator root is not supported")]
    RepeatedRoot,
    #[error("integral does not converge: {0}")]
    NonConvergent(String),
    #[error("trigonometric denominator vanishes at alpha = {0}")]
    TrigPole(String),
    #[error("parse error: {0}")]
    Parse(String),

    #[error("series diverges at x = 1 (parameter excess {0} <= 0)")]
    Divergent(f64),
    #[error("tolerance {tol:e} not met (best error estimate {estimate:e})")]
    ToleranceNotMet { tol: f64, estimate: f64 },
    #[error("Pochhammer regularization needs a non-integer exponent, got {0}")]
    IntegerAlpha(f64),
    #[error("bad contour radius {0}")]
    BadRadius(f64),

    #[error("unknown identity {0}")]
    UnknownIdentity(String),
    #[error("parameters outside every admissible route: {0}")]
    InvalidParameters(String),
    #[error("verification failed for {}: max residual {:e}", .0.id, .0.max_residual)]
    VerificationFailed(Box<crate::identities::VerificationRecord>),
}

pub type Result<T> = std::result::Result<T, Error>;
