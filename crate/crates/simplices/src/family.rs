//! Families of properly embedded simplices and exhaustive enumeration of
//! the maximal ones, one canonical representative per parallelism class.
//!
//! Vertices of a properly embedded simplex sit in pairwise distinct open
//! boundary faces (two vertices sharing a face would kill a drop-one
//! condition), and sliding each vertex inside its face preserves proper
//! embeddedness. Every parallelism class therefore has exactly one
//! representative whose vertices are barycenters of faces of the domain,
//! which reduces enumeration to a search over subsets of face barycenters.

use std::sync::Arc;

use hilbert_core::{linalg, HPoint, Mask, PolytopeDomain, Rat};
use num::Zero;

use crate::embedded::{recognize, EmbeddedSimplex};
use crate::error::{SimplexError, SimplexResult};

/// Certification state of a family property. Enumeration alone proves
/// nothing about isolation or completeness, so flags start out unknown.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TriState {
    True,
    False,
    Unknown,
}

impl std::fmt::Display for TriState {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TriState::True => write!(f, "true"),
            TriState::False => write!(f, "false"),
            TriState::Unknown => write!(f, "unknown"),
        }
    }
}

/// A family of properly embedded simplices of one domain, with the
/// certification flags attached by later analyses.
#[derive(Clone, Debug)]
pub struct SimplexFamily {
    pub members: Vec<EmbeddedSimplex>,
    pub isolated: TriState,
    pub coarsely_complete: TriState,
    pub invariant: TriState,
    /// Free-form audit trail of how the flags were obtained.
    pub notes: String,
}

impl SimplexFamily {
    pub fn new(members: Vec<EmbeddedSimplex>) -> Self {
        SimplexFamily {
            members,
            isolated: TriState::Unknown,
            coarsely_complete: TriState::Unknown,
            invariant: TriState::Unknown,
            notes: String::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn max_dim(&self) -> usize {
        self.members.iter().map(|s| s.dim()).max().unwrap_or(0)
    }
}

/// Result of an enumeration run: the surviving maximal family plus search
/// statistics for budget accounting.
#[derive(Clone, Debug)]
pub struct EnumerationReport {
    pub family: SimplexFamily,
    /// Search nodes visited.
    pub visited: usize,
    /// Properly embedded families found before the maximality filter.
    pub raw_count: usize,
}

/// True when a canonical parallel copy of `small` sits inside the closure
/// of `big`: for each vertex face of `small`, the vertices of `big` lying
/// in that face's closure span it exactly, and the resulting barycenters
/// are independent. Sound and complete for simplices with barycentric
/// vertices because a closed face of the hull of `big` is the hull of the
/// `big` vertices it contains.
pub fn contains_parallel_copy(big: &EmbeddedSimplex, small: &EmbeddedSimplex) -> bool {
    if !Arc::ptr_eq(big.domain(), small.domain()) || big.dim() < small.dim() {
        return false;
    }
    let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(small.dim() + 1);
    for j in 0..=small.dim() {
        let a = small.active_mask(j);
        let t: Vec<usize> =
            (0..=big.dim()).filter(|&l| big.active_mask(l) & a == a).collect();
        if t.is_empty() {
            return false;
        }
        let inter: Mask = t.iter().fold(!0, |acc, &l| acc & big.active_mask(l));
        if inter != a {
            return false;
        }
        let mut bary = vec![Rat::zero(); big.lifts()[0].len()];
        for &l in &t {
            bary = linalg::add_vec(&bary, &big.lifts()[l]);
        }
        rows.push(bary);
    }
    linalg::rank(&rows) == small.dim() + 1
}

struct Search {
    points: Vec<HPoint>,
    masks: Vec<Mask>,
    lifts: Vec<Vec<Rat>>,
    budget: usize,
    visited: usize,
    found: Vec<Vec<usize>>,
}

impl Search {
    /// Extends the chosen set by candidates above `from`. `drops[j]` is the
    /// intersection of the chosen masks without the j-th, `all` with all.
    fn dfs(
        &mut self,
        chosen: &mut Vec<usize>,
        drops: &mut Vec<Mask>,
        all: Mask,
        from: usize,
    ) -> SimplexResult<()> {
        self.visited += 1;
        if self.visited > self.budget {
            return Err(SimplexError::BudgetExceeded {
                budget: self.budget,
                visited: self.visited,
            });
        }
        if chosen.len() >= 2 && all == 0 {
            self.found.push(chosen.clone());
            // A valid family cannot extend: the new drop-one against the
            // added candidate would be this empty intersection.
            return Ok(());
        }
        for c in from..self.points.len() {
            let mc = self.masks[c];
            if !chosen.is_empty() {
                if drops.iter().any(|d| d & mc == 0) {
                    continue;
                }
                let mut rows: Vec<Vec<Rat>> =
                    chosen.iter().map(|&i| self.lifts[i].clone()).collect();
                rows.push(self.lifts[c].clone());
                if linalg::rank(&rows) != rows.len() {
                    continue;
                }
            }
            let mut next_drops: Vec<Mask> = drops.iter().map(|d| d & mc).collect();
            next_drops.push(all);
            chosen.push(c);
            self.dfs(chosen, &mut next_drops, all & mc, c + 1)?;
            chosen.pop();
        }
        Ok(())
    }
}

/// Enumerates the maximal properly embedded simplices of the domain, one
/// canonical representative per parallelism class, vertices at face
/// barycenters. `budget` caps the number of search nodes.
pub fn enumerate_max_simplices(
    domain: &Arc<PolytopeDomain>,
    budget: usize,
) -> SimplexResult<EnumerationReport> {
    let mut points = Vec::with_capacity(domain.face_count());
    let mut masks = Vec::with_capacity(domain.face_count());
    let mut lifts = Vec::with_capacity(domain.face_count());
    for (i, face) in domain.faces().iter().enumerate() {
        let p = domain.face_barycenter(hilbert_core::FaceId(i));
        let lift = domain
            .ambient_chart()
            .dehomog(&p)
            .expect("face barycenters have positive chart value");
        points.push(p);
        masks.push(face.active);
        lifts.push(lift);
    }
    let mut search = Search { points, masks, lifts, budget, visited: 0, found: Vec::new() };
    let mut chosen = Vec::new();
    let mut drops = Vec::new();
    search.dfs(&mut chosen, &mut drops, !0, 0)?;

    let raw_count = search.found.len();
    let mut members: Vec<EmbeddedSimplex> = Vec::with_capacity(raw_count);
    for idx in &search.found {
        let verts: Vec<HPoint> = idx.iter().map(|&i| search.points[i].clone()).collect();
        members.push(recognize(domain, &verts)?);
    }
    members.sort_by(|a, b| b.dim().cmp(&a.dim()).then_with(|| a.canonical_key().cmp(&b.canonical_key())));
    let mut survivors: Vec<EmbeddedSimplex> = Vec::new();
    for s in members {
        if !survivors.iter().any(|b| contains_parallel_copy(b, &s)) {
            survivors.push(s);
        }
    }
    Ok(EnumerationReport {
        family: SimplexFamily::new(survivors),
        visited: search.visited,
        raw_count,
    })
}
