use thiserror::Error;

/// Errors raised by exact projective and domain computations.
///
/// `InvariantTrap` is reserved for conditions that a theorem rules out; hitting
/// one means the library itself is wrong, so callers should treat it as fatal
/// rather than recoverable.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum GeomError {
    #[error("points are not collinear")]
    NonCollinear,
    #[error("degenerate configuration: {0}")]
    DegenerateConfiguration(String),
    #[error("no affine chart contains all the given points")]
    NoCommonChart,
    #[error("point is not on the boundary of the domain")]
    NotOnBoundary,
    #[error("point set is empty after restriction")]
    EmptyAfterRestriction,
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("point is not in the interior of the domain")]
    NotInterior,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("vertex list does not define a properly convex polytope: {0}")]
    NotProperlyConvex(String),
    #[error("internal invariant violated: {0}")]
    InvariantTrap(String),
}

pub type GeomResult<T> = Result<T, GeomError>;
