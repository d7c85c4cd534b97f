//! Transverse-triangle measurement: how long do geodesic triangle edges
//! linger inside a neighborhood of a family simplex?

use hilbert_core::{FloatDomain, GeomError, PolytopeDomain};
use hilbert_simplices::{closest_on_simplex, DescentOptions, SimplexFamily};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{RelError, RelResult};

/// Measured neighborhood penetration for one triangle against a family.
#[derive(Clone, Debug, Serialize)]
pub struct TransverseCheck {
    /// Neighborhood radius used for membership.
    pub kappa: f64,
    /// Largest sampled diameter of an edge's stay inside any member's
    /// kappa-neighborhood.
    pub delta: f64,
    /// The same measurement split by triangle edge.
    pub per_edge: [f64; 3],
    /// Carried-through configuration for downstream thinness conclusions;
    /// measurement itself does not use them.
    pub lambda: Option<f64>,
    pub sigma: Option<f64>,
}

/// Edge samples at a fixed Hilbert step. Sample count is capped to keep the
/// cost proportional to the edge length over the resolution.
fn edge_samples(domain: &dyn FloatDomain, a: &[f64], b: &[f64], resolution: f64) -> Vec<Vec<f64>> {
    let total = domain.dist(a, b);
    if !total.is_finite() || total <= 0.0 {
        return vec![a.to_vec()];
    }
    let n = ((total / resolution).ceil() as usize).max(1).min(200_000);
    (0..=n).map(|i| domain.geodesic_point_f64(a, b, total * i as f64 / n as f64)).collect()
}

/// Measure `delta = max` over the three edges and all family members of the
/// sampled diameter of the edge's intersection with the member's
/// kappa-neighborhood. Samples on one edge lie on a common geodesic, so the
/// diameter of any collected subset is the distance between its extremes.
pub fn transverse_measure(
    domain: &PolytopeDomain,
    family: &SimplexFamily,
    triangle: [&[f64]; 3],
    kappa: f64,
    resolution: f64,
) -> RelResult<TransverseCheck> {
    if kappa <= 0.0 || !kappa.is_finite() {
        return Err(RelError::Geometry(GeomError::InvalidInput(
            "kappa must be positive and finite".into(),
        )));
    }
    if family.is_empty() {
        return Err(RelError::EmptyFamily);
    }
    let edges = [(0usize, 1usize), (1, 2), (2, 0)];
    let mut per_edge = [0.0f64; 3];
    for (e, (i, j)) in edges.iter().enumerate() {
        let samples = edge_samples(domain, triangle[*i], triangle[*j], resolution);
        let dists: Vec<Vec<f64>> = family
            .members
            .par_iter()
            .map(|s| {
                samples
                    .iter()
                    .map(|p| closest_on_simplex(s, p, None, DescentOptions::default()).1)
                    .collect()
            })
            .collect();
        let mut worst = 0.0f64;
        for member_dists in &dists {
            let inside: Vec<usize> = member_dists
                .iter()
                .enumerate()
                .filter(|(_, d)| **d <= kappa)
                .map(|(k, _)| k)
                .collect();
            if inside.len() >= 2 {
                let first = &samples[inside[0]];
                let last = &samples[*inside.last().expect("nonempty")];
                worst = worst.max(domain.dist(first, last));
            }
        }
        per_edge[e] = worst;
    }
    let delta = per_edge.iter().cloned().fold(0.0, f64::max);
    Ok(TransverseCheck { kappa, delta, per_edge, lambda: None, sigma: None })
}
