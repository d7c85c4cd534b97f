//! Coarse comparison of the linear and closest-point projections.
//!
//! Every delta produced here is an empirical lower bound for an existential
//! constant: reports carry their sample counts and the arg-max witness and
//! never claim the true value. Sampling is prefix-stable in the sample
//! index, so enlarging a run only appends samples and the estimates are
//! monotone nondecreasing in the sample count.

use hilbert_core::floatgeo::dist_to_segment;
use hilbert_core::{FloatDomain, HPoint, PolytopeDomain};
use hilbert_simplices::EmbeddedSimplex;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::closest::{closest_point, grid_oracle};
use crate::error::ProjResult;
use crate::linear::{build_projection, project, LinearProjection};
use crate::support::supporting_sets;

/// How the closest-point side of the comparison is evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PiMode {
    /// Coordinate descent from the barycenter start.
    Descent,
    /// Hierarchical grid oracle (slow, for cross-checks).
    GridOracle,
}

/// Sampling plan for [`coarse_gap`].
#[derive(Clone, Copy, Debug)]
pub struct GapSpec {
    pub samples: usize,
    pub seed: u64,
    pub tol: f64,
    pub pi_mode: PiMode,
    /// Number of sampled pairs for the contraction constant; zero skips it.
    pub contraction_pairs: usize,
}

impl Default for GapSpec {
    fn default() -> Self {
        GapSpec { samples: 256, seed: 7, tol: 1e-10, pi_mode: PiMode::Descent, contraction_pairs: 0 }
    }
}

/// Arg-max data backing a reported delta.
#[derive(Clone, Debug, Serialize)]
pub struct GapWitness {
    /// Canonical integer lift of the sampled point.
    pub point: Vec<String>,
    /// Facet indices of the supporting set attaining the maximum.
    pub facets: Vec<usize>,
    /// The attained distance.
    pub value: f64,
}

/// Comparison report; serializes to the JSON shape used by the CLI.
#[derive(Clone, Debug, Serialize)]
pub struct ProjectionReport {
    #[serde(rename = "delta1")]
    pub delta1_hat: f64,
    #[serde(rename = "delta2")]
    pub delta2_hat: Option<f64>,
    #[serde(rename = "delta4")]
    pub delta4_hat: Option<f64>,
    pub samples: usize,
    pub witness: Option<GapWitness>,
    pub domain_id: String,
    pub simplex_id: String,
}

/// FNV-1a over a byte stream; stable content id for reports.
fn fnv1a(bytes: impl Iterator<Item = u8>) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

/// Content id of a polytope domain: dimension data plus canonical vertex lifts.
pub fn domain_id(domain: &PolytopeDomain) -> String {
    let mut text = format!("d{}v{}", domain.ambient_dim(), domain.vertex_count());
    for v in domain.vertices() {
        for c in v.canonical() {
            text.push(',');
            text.push_str(&c.to_string());
        }
        text.push(';');
    }
    format!("dom-{:016x}", fnv1a(text.bytes()))
}

/// Content id of an embedded simplex: its canonical vertex key.
pub fn simplex_id(s: &EmbeddedSimplex) -> String {
    let mut text = String::new();
    for row in s.canonical_key() {
        for c in row {
            text.push(',');
            text.push_str(&c.to_string());
        }
        text.push(';');
    }
    format!("spx-{:016x}", fnv1a(text.bytes()))
}

/// Prefix-stable interior sample: depends only on `(seed, index)`.
fn sample_at(domain: &PolytopeDomain, seed: u64, index: u64) -> HPoint {
    let mut rng =
        ChaCha8Rng::seed_from_u64(seed ^ index.wrapping_mul(0x9e37_79b9_7f4a_7c15));
    domain.sample_interior(&mut rng)
}

/// The gap from the linear projections to the closest-point projection:
/// delta1_hat is the largest Hilbert distance, over interior samples and
/// over every supporting set, between the linear image of a sample and its
/// closest point on the simplex. Sample evaluation runs in parallel and
/// aggregates by maximum, so the result is independent of thread order.
pub fn coarse_gap(
    domain: &PolytopeDomain,
    s: &EmbeddedSimplex,
    spec: GapSpec,
) -> ProjResult<ProjectionReport> {
    let sets = supporting_sets(domain, s);
    let projections: Vec<LinearProjection> =
        sets.iter().map(|h| build_projection(domain, s, h)).collect::<ProjResult<_>>()?;

    let per_sample: Vec<(f64, usize, HPoint)> = (0..spec.samples as u64)
        .into_par_iter()
        .map(|i| -> ProjResult<(f64, usize, HPoint)> {
            let x = sample_at(domain, spec.seed, i);
            let p_chart = match spec.pi_mode {
                PiMode::Descent => {
                    let cp = closest_point(domain, s, &x, spec.tol)?;
                    domain.chart_point(&cp.point).expect("closest point is interior")
                }
                PiMode::GridOracle => {
                    let (u, _) = grid_oracle(domain, s, &x, 8.0, 1e-3)?;
                    s.chart_from_flat_f64(&u)
                }
            };
            let mut best = (0.0f64, 0usize);
            for (k, l) in projections.iter().enumerate() {
                let y = project(l, &x)?;
                let y_chart = domain.chart_point(&y).expect("images of interior points are interior");
                let d = domain.dist(&y_chart, &p_chart);
                if d > best.0 {
                    best = (d, k);
                }
            }
            Ok((best.0, best.1, x))
        })
        .collect::<ProjResult<_>>()?;

    let mut delta1 = 0.0f64;
    let mut witness: Option<GapWitness> = None;
    for (value, set_idx, x) in &per_sample {
        if witness.is_none() || *value > delta1 {
            delta1 = *value;
            witness = Some(GapWitness {
                point: x.canonical().iter().map(|c| c.to_string()).collect(),
                facets: sets[*set_idx].facets.clone(),
                value: *value,
            });
        }
    }

    let delta4 = if spec.contraction_pairs > 0 {
        Some(contraction_hat(domain, &projections, spec.contraction_pairs, spec.seed)?)
    } else {
        None
    };

    Ok(ProjectionReport {
        delta1_hat: delta1,
        delta2_hat: None,
        delta4_hat: delta4,
        samples: spec.samples,
        witness,
        domain_id: domain_id(domain),
        simplex_id: simplex_id(s),
    })
}

/// Empirical contraction constant: the smallest level such that every
/// sampled pair whose projected images are at least that far apart has both
/// images within the level of the sampled segment. Computed per pair as
/// `min(separation + eps, distance to segment)` and maximized; the epsilon
/// resolves the open threshold condition.
pub fn contraction_hat(
    domain: &PolytopeDomain,
    projections: &[LinearProjection],
    pairs: usize,
    seed: u64,
) -> ProjResult<f64> {
    let per_pair: Vec<f64> = (0..pairs as u64)
        .into_par_iter()
        .map(|i| -> ProjResult<f64> {
            let x = sample_at(domain, seed ^ 0x5bd1_e995, 2 * i);
            let y = sample_at(domain, seed ^ 0x5bd1_e995, 2 * i + 1);
            let xc = domain.chart_point(&x).expect("interior sample");
            let yc = domain.chart_point(&y).expect("interior sample");
            let mut worst = 0.0f64;
            for l in projections {
                let lx = project(l, &x)?;
                let ly = project(l, &y)?;
                let lxc = domain.chart_point(&lx).expect("interior image");
                let lyc = domain.chart_point(&ly).expect("interior image");
                let a = domain.dist(&lxc, &lyc);
                let b = dist_to_segment(domain, &lxc, &xc, &yc, 64)
                    .max(dist_to_segment(domain, &lyc, &xc, &yc, 64));
                worst = worst.max((a + 1e-9).min(b));
            }
            Ok(worst)
        })
        .collect::<ProjResult<_>>()?;
    Ok(per_pair.into_iter().fold(0.0, f64::max))
}

/// Length of the part of the segment `[x, y]` within Hilbert distance
/// `radius` of the simplex, estimated with `steps + 1` evenly spaced probes
/// whose distance to the simplex comes from the closest-point descent.
pub fn neighborhood_chord(
    domain: &PolytopeDomain,
    s: &EmbeddedSimplex,
    x: &HPoint,
    y: &HPoint,
    radius: f64,
    steps: usize,
) -> ProjResult<f64> {
    let xc = domain.chart_point(x).expect("interior endpoint");
    let yc = domain.chart_point(y).expect("interior endpoint");
    let mut inside: Vec<Vec<f64>> = Vec::new();
    for i in 0..=steps {
        let t = i as f64 / steps as f64;
        let u = domain.segment_point(&xc, &yc, t);
        let (_, d) = hilbert_simplices::closest_on_simplex(
            s,
            &u,
            None,
            hilbert_simplices::DescentOptions::default(),
        );
        if d <= radius {
            inside.push(u);
        }
    }
    let mut diam = 0.0f64;
    if let (Some(first), Some(last)) = (inside.first(), inside.last()) {
        diam = domain.dist(first, last);
    }
    Ok(diam)
}
