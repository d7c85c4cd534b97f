//! Worked constructions over the exact Hilbert geometry stack: standard
//! domains, the cone product with its diagonal core, thickenings with a
//! certified sandwich, parallel simplex families, corner rescaling
//! sequences, and orbit sampling for exact matrix groups.
//!
//! Everything exact stays exact: group generators, frames, and cores are
//! rational, and float shows up only in gap reports and rank tolerances.

pub mod error;
pub mod lattice;
pub mod orbit;
pub mod parallel;
pub mod product;
pub mod rescale;
pub mod standard;
pub mod thicken;

pub use error::{ExError, ExResult};
pub use lattice::{stabilizer_lattice, StabilizerLattice, RANK_TOL};
pub use orbit::{orbit_sample, GroupGens, LimitSample, OrbitSample, LIMIT_EPS};
pub use parallel::parallel_family;
pub use product::{product_domain, ConeProduct};
pub use rescale::{benzecri_rescale, RescaleSequence};
pub use standard::{make_standard, StandardDomain, StandardKind};
pub use thicken::{thicken, Thickening};
