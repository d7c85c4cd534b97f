//! Properly embedded simplices in polytope Hilbert geometries: recognition,
//! intrinsic flat metric, joins, slides, canonical centers, and exhaustive
//! enumeration of maximal simplices.
//!
//! Exact rational arithmetic decides membership, embeddedness and the
//! intrinsic metric; floating point is confined to searches whose results
//! are rounded back to exact witnesses before anything is certified.

pub mod center;
pub mod descent;
pub mod embedded;
pub mod error;
pub mod family;
pub mod slide;

pub use center::{canonicalize, center_of_mass, center_of_mass_with, CenterOptions};
pub use descent::{closest_on_simplex, directed_hausdorff_sample, hausdorff_sample, DescentOptions};
pub use embedded::{join_opposite, opposite, recognize, EmbeddedSimplex};
pub use error::{SimplexError, SimplexResult};
pub use family::{
    contains_parallel_copy, enumerate_max_simplices, EnumerationReport, SimplexFamily, TriState,
};
pub use slide::slide;
