//! Desk-scale certification toolkit for coarse-geometry conditions on
//! Hilbert geometries: thin-triangle constants, almost-projection-system
//! axioms, isolation diameters, transverse-triangle penetration, and
//! quasi-geodesic stability.
//!
//! Every estimator here is one-sided: sampled diameters and constants are
//! lower bounds for the true values, and certificates record the sampling
//! resolution they were obtained at. Runs parallelize over samples with
//! max/min aggregation only, so reports are scheduling-independent, and all
//! report types serialize to JSON.

pub mod aps;
pub mod audit;
pub mod error;
pub mod isolation;
pub mod morse;
pub mod thin;
pub mod transverse;

pub use aps::{aps_check, ApsMode, ApsSpec, APSReport};
pub use audit::triangle_audit;
pub use error::{RelError, RelResult};
pub use isolation::{isolation_diameter, IsoSpec, IsolationReport, IsolationRow};
pub use morse::{morse_check, penetration_bound, MorseReport};
pub use thin::{thin_certify, thin_exhaustive, ThinCert, ThinMethod};
pub use transverse::{transverse_measure, TransverseCheck};
