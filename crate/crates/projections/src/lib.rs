//! Two projection systems onto a properly embedded simplex, and their
//! coarse comparison.
//!
//! A simplex sitting properly inside a polytope domain admits linear
//! projections: pick, for each maximal boundary face, a facet of the domain
//! containing it; the chosen hyperplanes intersect in a complement of the
//! simplex's span, and projecting along that complement maps the whole
//! domain onto the simplex. It also admits the metric projection sending a
//! point to its nearest simplex point, which is set-valued in general. The
//! exact layer builds and audits the linear projections; the float layer
//! runs the metric minimization and measures the gap between the two
//! systems, reporting empirical constants with witnesses.

pub mod closest;
pub mod error;
pub mod gap;
pub mod linear;
pub mod support;

pub use closest::{closest_point, grid_oracle, grid_oracle_radius, ClosestPoint};
pub use error::{ProjError, ProjResult};
pub use gap::{
    coarse_gap, contraction_hat, domain_id, neighborhood_chord, simplex_id, GapSpec, GapWitness,
    PiMode, ProjectionReport,
};
pub use linear::{build_projection, face_compatible, project, LinearProjection};
pub use support::{supporting_sets, validate_supporting_set, SupportingSet};
