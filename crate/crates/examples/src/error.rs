use hilbert_core::GeomError;
use hilbert_simplices::SimplexError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ExError {
    #[error("the three points do not form a half triangle")]
    NotHalfTriangle,
    #[error("frame normalization failed: {0}")]
    FrameFailure(String),
    #[error("generator does not preserve the domain: {0}")]
    NonPreserving(String),
    #[error("generator does not fix the simplex vertices: {0}")]
    NotFixingVertices(String),
    #[error("interval endpoints coincide")]
    DegenerateInterval,
    #[error(transparent)]
    Simplex(#[from] SimplexError),
    #[error(transparent)]
    Geometry(#[from] GeomError),
}

pub type ExResult<T> = Result<T, ExError>;
