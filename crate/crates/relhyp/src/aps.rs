//! Sampled audit of the three almost-projection-system axioms.

use std::sync::Arc;

use hilbert_core::rat::rat_from_f64;
use hilbert_core::{FloatDomain, GeomError, HPoint, PolytopeDomain, Rat};
use hilbert_projections::{
    build_projection, closest_point, project, simplex_id, supporting_sets, LinearProjection,
};
use hilbert_simplices::{closest_on_simplex, DescentOptions, EmbeddedSimplex, SimplexFamily};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::audit::triangle_audit;
use crate::error::{RelError, RelResult};

/// Which projection realizes the system.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ApsMode {
    /// Linear projection from the first supporting set of each member.
    Linear,
    /// Closest-point projection by descent.
    Closest,
}

/// Sampling plan for [`aps_check`].
#[derive(Clone, Copy, Debug)]
pub struct ApsSpec {
    /// Interior samples per member for axioms 1 and 3.
    pub samples: usize,
    /// Simplex-surface samples per member for axioms 1 and 2.
    pub surface_samples: usize,
    /// Flat-coordinate radius for surface sampling.
    pub budget: f64,
    pub seed: u64,
    /// Descent tolerance for closest-point queries.
    pub tol: f64,
}

impl Default for ApsSpec {
    fn default() -> Self {
        ApsSpec { samples: 24, surface_samples: 16, budget: 3.0, seed: 11, tol: 1e-9 }
    }
}

/// Empirical axiom constants with their witnesses.
#[derive(Clone, Debug, Serialize)]
pub struct APSReport {
    pub family_id: String,
    /// One empirical constant per axiom, in axiom order.
    pub c_hat: [f64; 3],
    pub samples: usize,
    /// Human-readable arg-max description per axiom.
    pub witnesses: [String; 3],
}

struct Member {
    simplex: EmbeddedSimplex,
    linear: Option<LinearProjection>,
    id: String,
}

impl Member {
    /// Chart coordinates of the chosen projection of `x`.
    fn project_chart(
        &self,
        domain: &PolytopeDomain,
        x: &HPoint,
        mode: ApsMode,
        tol: f64,
    ) -> RelResult<Vec<f64>> {
        match mode {
            ApsMode::Linear => {
                let l = self.linear.as_ref().expect("linear mode builds projections");
                let y = project(l, x)?;
                Ok(domain.chart_point(&y).expect("image of interior point"))
            }
            ApsMode::Closest => {
                let cp = closest_point(domain, &self.simplex, x, tol)?;
                Ok(domain.chart_point(&cp.point).expect("simplex point"))
            }
        }
    }
}

/// Prefix-stable interior sample.
fn sample_at(domain: &PolytopeDomain, seed: u64, index: u64) -> HPoint {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ index.wrapping_mul(0x9e37_79b9_7f4a_7c15));
    domain.sample_interior(&mut rng)
}

/// Deterministic flat-coordinate surface samples of a simplex.
fn surface_charts(s: &EmbeddedSimplex, count: usize, budget: f64, seed: u64) -> Vec<Vec<f64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let u: Vec<f64> = (0..s.dim()).map(|_| rng.gen_range(-budget..=budget)).collect();
            s.chart_from_flat_f64(&u)
        })
        .collect()
}

fn sampled_diam(domain: &PolytopeDomain, charts: &[Vec<f64>]) -> f64 {
    let mut d = 0.0f64;
    for (i, a) in charts.iter().enumerate() {
        for b in &charts[i + 1..] {
            d = d.max(domain.dist(a, b));
        }
    }
    d
}

/// Rationalize a span-chart point back into the exact layer.
fn chart_to_hpoint(domain: &PolytopeDomain, chart: &[f64]) -> RelResult<HPoint> {
    let xi: Vec<Rat> = chart
        .iter()
        .map(|&c| rat_from_f64(c, 1_000_000_000_000))
        .collect::<Result<_, _>>()
        .map_err(RelError::Geometry)?;
    let lift = domain.span().lift_from_coords(&xi);
    let p = HPoint::new(lift).map_err(RelError::Geometry)?;
    if !domain.is_interior(&p) {
        return Err(RelError::Geometry(GeomError::NotInterior));
    }
    Ok(p)
}

/// Measure the three axiom constants over the family by sampling. Every
/// reported value is the observed maximum, an empirical lower bound for any
/// constant the axioms could hold with. Samples evaluate in parallel and
/// aggregate by maximum, so reports are scheduling-independent.
pub fn aps_check(
    domain: &Arc<PolytopeDomain>,
    family: &SimplexFamily,
    mode: ApsMode,
    spec: ApsSpec,
) -> RelResult<APSReport> {
    if family.is_empty() {
        return Err(RelError::EmptyFamily);
    }
    let members: Vec<Member> = family
        .members
        .iter()
        .map(|s| -> RelResult<Member> {
            let linear = match mode {
                ApsMode::Linear => {
                    let sets = supporting_sets(domain, s);
                    Some(build_projection(domain, s, &sets[0])?)
                }
                ApsMode::Closest => None,
            };
            Ok(Member { simplex: s.clone(), linear, id: simplex_id(s) })
        })
        .collect::<RelResult<_>>()?;

    // The interior samples are exact rational points, shared by index across
    // members; re-assert the triangle inequality on them exactly before
    // trusting any float measurement below.
    let xs: Vec<HPoint> =
        (0..spec.samples as u64).map(|i| sample_at(domain, spec.seed ^ 0x0a5e_5eed, i)).collect();
    triangle_audit(domain, &xs)?;

    let mut c1 = (0.0f64, String::from("no sample"));
    let mut c2 = (0.0f64, String::from("no sample"));
    let mut c3 = (0.0f64, String::from("no sample"));

    // Axiom 1 (near-additivity through the projection point) and axiom 3
    // (projected balls of radius dist(x, S) stay small), per member.
    for (mi, m) in members.iter().enumerate() {
        let surface =
            surface_charts(&m.simplex, spec.surface_samples, spec.budget, spec.seed ^ mi as u64);
        let per_sample: Vec<(f64, f64, u64)> = (0..spec.samples as u64)
            .into_par_iter()
            .map(|i| -> RelResult<(f64, f64, u64)> {
                let x = &xs[i as usize];
                let xc = domain.chart_point(x).expect("interior sample");
                let pc = m.project_chart(domain, x, mode, spec.tol)?;
                let d_x_pi = domain.dist(&xc, &pc);

                let mut viol = 0.0f64;
                for p in &surface {
                    viol = viol.max(d_x_pi + domain.dist(&pc, p) - domain.dist(&xc, p));
                }

                // Ball samples: walk from x toward fresh interior samples,
                // at most the distance to the simplex.
                let (_, r) = closest_on_simplex(&m.simplex, &xc, None, DescentOptions::default());
                let mut projected = Vec::with_capacity(8);
                for j in 0..8u64 {
                    let z = sample_at(domain, spec.seed ^ 0xba11, i * 8 + j);
                    let zc = domain.chart_point(&z).expect("interior sample");
                    let frac = (j + 1) as f64 / 8.0;
                    let b = domain.geodesic_point_f64(&xc, &zc, frac * r);
                    let hp = chart_to_hpoint(domain, &b)?;
                    projected.push(m.project_chart(domain, &hp, mode, spec.tol)?);
                }
                Ok((viol, sampled_diam(domain, &projected), i))
            })
            .collect::<RelResult<_>>()?;
        for (viol, diam, i) in per_sample {
            if viol > c1.0 {
                c1 = (viol, format!("member {} sample {}", m.id, i));
            }
            if diam > c3.0 {
                c3 = (diam, format!("member {} sample {}", m.id, i));
            }
        }
    }

    // Axiom 2: projected images of the other members stay small.
    for (mi, m) in members.iter().enumerate() {
        for (oi, other) in members.iter().enumerate() {
            if mi == oi {
                continue;
            }
            let surface = surface_charts(
                &other.simplex,
                spec.surface_samples,
                spec.budget,
                spec.seed ^ (0xfeed + oi as u64),
            );
            let projected: Vec<Vec<f64>> = surface
                .par_iter()
                .map(|p| {
                    let hp = chart_to_hpoint(domain, p)?;
                    m.project_chart(domain, &hp, mode, spec.tol)
                })
                .collect::<RelResult<_>>()?;
            let diam = sampled_diam(domain, &projected);
            if diam > c2.0 {
                c2 = (diam, format!("{} projected onto {}", other.id, m.id));
            }
        }
    }

    let ids: Vec<String> = members.iter().map(|m| m.id.clone()).collect();
    Ok(APSReport {
        family_id: ids.join("+"),
        c_hat: [c1.0, c2.0, c3.0],
        samples: spec.samples,
        witnesses: [c1.1, c2.1, c3.1],
    })
}
