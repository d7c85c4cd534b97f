use hilbert_core::GeomError;
use hilbert_simplices::SimplexError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ProjError {
    /// The span of the simplex and the intersection of the supporting
    /// hyperplanes fail to complement each other. Signals an invariant
    /// violation in the construction, never an expected input condition.
    #[error("span and hyperplane intersection do not form a direct sum")]
    DirectSumFailure,

    /// The point lies in the projection's kernel subspace.
    #[error("point lies in the kernel of the projection")]
    InKernel,

    /// The minimization loop hit its pass cap before converging.
    #[error("closest-point descent did not reach tolerance within {passes} passes")]
    ToleranceNotReached { passes: usize },

    #[error(transparent)]
    Simplex(#[from] SimplexError),

    #[error(transparent)]
    Geometry(#[from] GeomError),
}

pub type ProjResult<T> = Result<T, ProjError>;
