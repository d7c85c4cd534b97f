//! Exact projective geometry and Hilbert metrics on properly convex domains.
//!
//! The crate keeps two strictly separated layers. The exact layer works over
//! arbitrary-precision rationals: projective points, cross ratios, polytope
//! domains with their full face lattice, and Hilbert distances stored as
//! `q = exp(2H)` so that comparison and addition never round. The float layer
//! (`floatgeo`, `quadric`) exists for samplers and optimizers; anything it
//! finds is either reported as an estimate or converted into a rational
//! witness and re-certified exactly.

pub mod domain;
pub mod error;
pub mod floatgeo;
pub mod length;
pub mod linalg;
pub mod projective;
pub mod quadric;
pub mod rat;

pub use domain::{Chord, FaceData, FaceId, Facet, Location, Mask, PolytopeDomain, SupportingData};
pub use error::{GeomError, GeomResult};
pub use floatgeo::FloatDomain;
pub use length::HilbertLength;
pub use projective::{cross_ratio, line_param, span, Chart, HPoint, LinSubspace, ProjMap};
pub use quadric::QuadricDomain;
pub use rat::{parse_rat, rat, rint, Rat};
