//! Thin-triangle certification by sampling.
//!
//! The one-side criterion: if every point of one side lies within `R` of the
//! union of the other two sides, the triangle is `2R`-thin. Sampling one
//! side at a fixed Hilbert arc step therefore certifies a thinness constant
//! without touching the other sides; the exhaustive method samples all
//! three and reports the raw maximum instead.

use hilbert_core::floatgeo::dist_to_segment;
use hilbert_core::FloatDomain;
use rayon::prelude::*;
use serde::Serialize;

/// How a [`ThinCert`] was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ThinMethod {
    /// One side sampled; `delta = 2 * r` by the one-side criterion.
    OneSideCriterion,
    /// All three sides sampled; `delta` is the raw maximum.
    ExhaustiveSample,
}

/// A sampled thinness certificate for one triangle.
#[derive(Clone, Debug, Serialize)]
pub struct ThinCert {
    /// Chart coordinates of the three corners.
    pub triangle: [Vec<f64>; 3],
    pub method: ThinMethod,
    /// Certified one-side radius (largest sampled distance to the far sides).
    #[serde(rename = "R")]
    pub r: f64,
    /// Certified thinness constant.
    pub delta: f64,
    /// Hilbert arc step between consecutive samples.
    pub resolution: f64,
}

/// Largest distance from samples of `[a, b]` (taken at Hilbert arc step
/// `resolution`) to the union of the segments `[a, c]` and `[c, b]`.
fn side_radius(dom: &dyn FloatDomain, a: &[f64], b: &[f64], c: &[f64], resolution: f64) -> f64 {
    let total = dom.dist(a, b);
    if !total.is_finite() || total <= 0.0 {
        return 0.0;
    }
    let n = (total / resolution).ceil().max(1.0) as usize;
    (0..=n)
        .into_par_iter()
        .map(|i| {
            let h = total * i as f64 / n as f64;
            let p = dom.geodesic_point_f64(a, b, h);
            dist_to_segment(dom, &p, a, c, 64).min(dist_to_segment(dom, &p, c, b, 64))
        })
        .reduce(|| 0.0, f64::max)
}

/// Certify thinness of the triangle `(x, y, z)` through the one-side
/// criterion: sample `[x, y]`, measure the worst distance to the other two
/// sides, and return `delta = 2R`.
pub fn thin_certify(
    dom: &dyn FloatDomain,
    x: &[f64],
    y: &[f64],
    z: &[f64],
    resolution: f64,
) -> ThinCert {
    let r = side_radius(dom, x, y, z, resolution);
    ThinCert {
        triangle: [x.to_vec(), y.to_vec(), z.to_vec()],
        method: ThinMethod::OneSideCriterion,
        r,
        delta: 2.0 * r,
        resolution,
    }
}

/// Measure thinness directly on all three sides. The result is the sampled
/// maximum distance from any side to the union of the other two, which is
/// never below what the one-side criterion can refute.
pub fn thin_exhaustive(
    dom: &dyn FloatDomain,
    x: &[f64],
    y: &[f64],
    z: &[f64],
    resolution: f64,
) -> ThinCert {
    let r = side_radius(dom, x, y, z, resolution)
        .max(side_radius(dom, y, z, x, resolution))
        .max(side_radius(dom, z, x, y, resolution));
    ThinCert {
        triangle: [x.to_vec(), y.to_vec(), z.to_vec()],
        method: ThinMethod::ExhaustiveSample,
        r,
        delta: r,
        resolution,
    }
}
