use hilbert_core::GeomError;
use hilbert_projections::ProjError;
use hilbert_simplices::SimplexError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum RelError {
    /// A family-level certifier was handed an empty family.
    #[error("the simplex family is empty")]
    EmptyFamily,

    /// The supplied path fails the quasi-geodesic inequalities on its own
    /// sample pairs.
    #[error("path is not a (1, c)-quasi-geodesic: {detail}")]
    NotQuasiGeodesic { detail: String },

    #[error(transparent)]
    Projection(#[from] ProjError),

    #[error(transparent)]
    Simplex(#[from] SimplexError),

    #[error(transparent)]
    Geometry(#[from] GeomError),
}

pub type RelResult<T> = Result<T, RelError>;
