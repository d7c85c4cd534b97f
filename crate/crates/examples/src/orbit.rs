//! Orbit and limit-set sampling for exact matrix groups acting on a
//! polytope domain. Enumeration is breadth-first over words in the
//! generators and their inverses, with order-independent deduplication by
//! canonical integer lift; limit detection is a float-angle report only.

use std::collections::HashSet;
use std::sync::Arc;

use hilbert_core::{FaceId, HPoint, Location, PolytopeDomain, ProjMap};
use rayon::prelude::*;

use crate::error::{ExError, ExResult};

/// Reporting threshold for limit-sample detection, as a background angle
/// sine against the facet hyperplanes.
pub const LIMIT_EPS: f64 = 1e-3;

/// Exact generators of a subgroup preserving the domain, with a word
/// budget for enumeration.
pub struct GroupGens {
    gens: Vec<ProjMap>,
    budget: usize,
}

impl GroupGens {
    /// Validates exactly that every generator permutes the vertex set,
    /// hence maps the vertex hull onto itself.
    pub fn new(
        domain: &Arc<PolytopeDomain>,
        gens: Vec<ProjMap>,
        budget: usize,
    ) -> ExResult<Self> {
        for (k, g) in gens.iter().enumerate() {
            if g.dim() != domain.ambient_dim() {
                return Err(ExError::NonPreserving(format!(
                    "generator {k} acts on dimension {} but the domain has ambient {}",
                    g.dim(),
                    domain.ambient_dim()
                )));
            }
            for (i, v) in domain.vertices().iter().enumerate() {
                let gv = g.apply(v);
                if !domain.vertices().iter().any(|w| w.proj_eq(&gv)) {
                    return Err(ExError::NonPreserving(format!(
                        "generator {k} moves vertex {i} off the vertex set"
                    )));
                }
            }
        }
        Ok(Self { gens, budget })
    }

    pub fn generators(&self) -> &[ProjMap] {
        &self.gens
    }

    pub fn budget(&self) -> usize {
        self.budget
    }
}

/// An orbit point close to the boundary, labeled by the face its almost
/// active facets cut out.
pub struct LimitSample {
    pub point: HPoint,
    pub face: FaceId,
    /// Smallest facet angle sine at the point.
    pub gap: f64,
}

pub struct OrbitSample {
    /// All orbit points up to the word budget, in first-seen order.
    pub orbit: Vec<HPoint>,
    pub limit: Vec<LimitSample>,
    /// Generators of the sampled core hull: the limit points themselves.
    /// An approximation only; no convergence is certified.
    pub core_hull: Vec<HPoint>,
}

/// Enumerate the orbit of the basepoint up to the word budget and report
/// which points have crept within `eps` of the boundary, paired with the
/// face their near-active facets determine.
pub fn orbit_sample(
    domain: &Arc<PolytopeDomain>,
    gens: &GroupGens,
    basepoint: &HPoint,
    max_word_length: usize,
    eps: f64,
) -> ExResult<OrbitSample> {
    if domain.locate(basepoint) != Location::Interior {
        return Err(ExError::Geometry(hilbert_core::GeomError::NotInterior));
    }
    if !(eps > 0.0) || !eps.is_finite() {
        return Err(ExError::Geometry(hilbert_core::GeomError::InvalidInput(
            "limit threshold must be a positive finite angle".into(),
        )));
    }
    let budget = max_word_length.min(gens.budget());
    let mut steps: Vec<ProjMap> = gens.generators().to_vec();
    steps.extend(gens.generators().iter().map(|g| g.inverse()));

    let mut seen: HashSet<Vec<hilbert_core::rat::Int>> = HashSet::new();
    seen.insert(basepoint.canonical());
    let mut orbit = vec![basepoint.clone()];
    let mut frontier = vec![basepoint.clone()];
    for _ in 0..budget {
        // Children are produced in frontier-then-step order, so the
        // sequential dedup below is schedule independent.
        let children: Vec<HPoint> = frontier
            .par_iter()
            .flat_map_iter(|x| steps.iter().map(move |g| g.apply(x)))
            .collect();
        let mut next = Vec::new();
        for y in children {
            if seen.insert(y.canonical()) {
                orbit.push(y.clone());
                next.push(y);
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }

    let sines: Vec<Option<Vec<f64>>> =
        orbit.par_iter().map(|x| domain.facet_sines(x)).collect();
    let mut limit = Vec::new();
    for (x, s) in orbit.iter().zip(&sines) {
        let Some(s) = s else { continue };
        let mut active: hilbert_core::Mask = 0;
        let mut gap = f64::INFINITY;
        for (j, v) in s.iter().enumerate() {
            if *v <= eps {
                active |= 1 << j;
            }
            gap = gap.min(*v);
        }
        if active == 0 {
            continue;
        }
        // A near-active set with no matching face is a reporting artifact
        // of a loose threshold, not an error.
        let Some(face) = domain.face_by_active(active) else { continue };
        limit.push(LimitSample { point: x.clone(), face, gap });
    }
    let core_hull = limit.iter().map(|l| l.point.clone()).collect();
    Ok(OrbitSample { orbit, limit, core_hull })
}
