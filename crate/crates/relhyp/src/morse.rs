//! Quasi-geodesic stability check: a (1,c)-quasi-geodesic must stay within
//! `4*delta + 10*c` of the geodesic between its endpoints.

use hilbert_core::{FloatDomain, GeomError};
use hilbert_core::floatgeo::dist_to_segment;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{RelError, RelResult};

/// Slack for the pairwise quasi-geodesic verification; absorbs float noise
/// in sampled distances without admitting real violations.
const QG_SLACK: f64 = 1e-9;

/// Outcome of [`morse_check`].
#[derive(Clone, Copy, Debug, Serialize)]
pub struct MorseReport {
    /// Whether the measured gap is within the stability bound.
    pub passes: bool,
    /// Sampled Hausdorff distance between the path and the geodesic
    /// connecting its endpoints.
    pub gap: f64,
    /// The bound `4*delta + 10*c`.
    pub bound: f64,
}

/// Verify a sampled path `(t_i, point_i)` is a (1,c)-quasi-geodesic on all
/// sample pairs, then measure its Hausdorff gap to the geodesic between its
/// endpoints. Passes when the gap is within `4*delta + 10*c`.
pub fn morse_check(
    domain: &dyn FloatDomain,
    path: &[(f64, Vec<f64>)],
    c: f64,
    delta: f64,
) -> RelResult<MorseReport> {
    if path.len() < 2 {
        return Err(RelError::Geometry(GeomError::InvalidInput(
            "a sampled path needs at least two points".into(),
        )));
    }
    for i in 0..path.len() {
        for j in i + 1..path.len() {
            let (ti, pi) = &path[i];
            let (tj, pj) = &path[j];
            let d = domain.dist(pi, pj);
            let span = (tj - ti).abs();
            if d < span - c - QG_SLACK {
                return Err(RelError::NotQuasiGeodesic {
                    detail: format!(
                        "samples {i} and {j}: dist {d:.6} below lower bound {:.6}",
                        span - c
                    ),
                });
            }
            if d > span + c + QG_SLACK {
                return Err(RelError::NotQuasiGeodesic {
                    detail: format!(
                        "samples {i} and {j}: dist {d:.6} above upper bound {:.6}",
                        span + c
                    ),
                });
            }
        }
    }

    let a = &path[0].1;
    let b = &path[path.len() - 1].1;
    // Path side of the Hausdorff gap.
    let forward = path
        .par_iter()
        .map(|(_, p)| dist_to_segment(domain, p, a, b, 64))
        .reduce(|| 0.0, f64::max);
    // Geodesic side: sample the segment and take the closest path point.
    let total = domain.dist(a, b);
    let n = 256usize;
    let backward = (0..=n)
        .into_par_iter()
        .map(|i| {
            let g = domain.geodesic_point_f64(a, b, total * i as f64 / n as f64);
            path.iter().fold(f64::INFINITY, |m, (_, p)| m.min(domain.dist(&g, p)))
        })
        .reduce(|| 0.0, f64::max);

    let gap = forward.max(backward);
    let bound = 4.0 * delta + 10.0 * c;
    Ok(MorseReport { passes: gap <= bound, gap, bound })
}

/// The geodesic-penetration bound `Delta + 10*sigma0 + 18*c*sigma0`, with
/// the bookkeeping constraint `sigma0 >= max(10*C, 1)` enforced.
pub fn penetration_bound(delta_cap: f64, c: f64, sigma0: f64, big_c: f64) -> RelResult<f64> {
    let floor = (10.0 * big_c).max(1.0);
    if sigma0 < floor {
        return Err(RelError::Geometry(GeomError::InvalidInput(format!(
            "sigma0 = {sigma0} violates sigma0 >= max(10C, 1) = {floor}"
        ))));
    }
    Ok(delta_cap + 10.0 * sigma0 + 18.0 * c * sigma0)
}
