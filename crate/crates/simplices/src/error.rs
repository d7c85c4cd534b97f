use hilbert_core::GeomError;
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum SimplexError {
    #[error("vertex lifts are linearly dependent")]
    DependentVertices,
    #[error("a proper face of the simplex meets the interior of the domain")]
    InteriorLeak,
    #[error("the relative interior of the simplex lies in the boundary")]
    EmptyInterior,
    #[error("point does not lie in the relative interior of the simplex")]
    NotInSimplex,
    #[error("point does not lie in the required face: {0}")]
    NotInFace(String),
    #[error("join hypothesis fails: {0}")]
    CrossSegmentInBoundary(String),
    #[error("degenerate hull: {0}")]
    DegenerateHull(String),
    #[error("face intersection is not compact: {0}")]
    FaceIntersectionUnbounded(String),
    #[error("enumeration budget of {budget} nodes exhausted after visiting {visited}")]
    BudgetExceeded { budget: usize, visited: usize },
    #[error(transparent)]
    Geometry(#[from] GeomError),
}

pub type SimplexResult<T> = Result<T, SimplexError>;
