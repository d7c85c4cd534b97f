//! Properly embedded simplices: recognition, the intrinsic metric, flat
//! coordinates, parallelism and joins.

use std::sync::Arc;

use hilbert_core::{linalg, rat::rat_to_f64, FaceId, HilbertLength, HPoint, Location, Mask,
    PolytopeDomain, Rat};
use num::{One, Signed, Zero};

use crate::error::{SimplexError, SimplexResult};

/// A properly embedded k-simplex: the relative interior of the convex hull of
/// k+1 independent boundary points lies in the open domain, while every
/// proper face of the hull stays in the boundary.
#[derive(Clone, Debug)]
pub struct EmbeddedSimplex {
    domain: Arc<PolytopeDomain>,
    verts: Vec<HPoint>,
    /// Chart-positive lifts of the vertices (chart value one).
    lifts: Vec<Vec<Rat>>,
    /// Span-chart coordinates of the vertices (chart value one), f64.
    vchart_f64: Vec<Vec<f64>>,
    vertex_faces: Vec<FaceId>,
    active_masks: Vec<Mask>,
    dim: usize,
}

/// Chart-positive ambient lift of a closure point, scaled to chart value one.
pub(crate) fn positive_lift(domain: &PolytopeDomain, p: &HPoint) -> Option<Vec<Rat>> {
    domain.ambient_chart().dehomog(p)
}

/// Decides proper embeddedness of the simplex spanned by `verts` and builds
/// the witness structure.
///
/// The tests are exact and rest on two facts about polytope boundaries: a
/// nonnegative vertex combination is active on a facet exactly when all its
/// vertices are, and the relative interior of a sub-hull meets the boundary
/// exactly when all its vertices share a facet.
pub fn recognize(
    domain: &Arc<PolytopeDomain>,
    verts: &[HPoint],
) -> SimplexResult<EmbeddedSimplex> {
    if verts.len() < 2 {
        return Err(SimplexError::Geometry(hilbert_core::GeomError::InvalidInput(
            "a properly embedded simplex needs at least two vertices".into(),
        )));
    }
    let mut lifts = Vec::with_capacity(verts.len());
    let mut vertex_faces = Vec::with_capacity(verts.len());
    let mut active_masks = Vec::with_capacity(verts.len());
    for v in verts {
        match domain.locate(v) {
            Location::Boundary(f) => {
                vertex_faces.push(f);
                active_masks.push(domain.face(f).active);
            }
            Location::Interior => return Err(SimplexError::InteriorLeak),
            Location::Outside => {
                return Err(SimplexError::Geometry(hilbert_core::GeomError::OutOfRange(
                    "simplex vertex lies outside the closed domain".into(),
                )))
            }
        }
        lifts.push(positive_lift(domain, v).expect("closure points have positive chart value"));
    }
    let rows: Vec<Vec<Rat>> = lifts.clone();
    if linalg::rank(&rows) != verts.len() {
        return Err(SimplexError::DependentVertices);
    }
    let all: Mask = active_masks.iter().fold(!0, |a, m| a & m);
    if all != 0 {
        return Err(SimplexError::EmptyInterior);
    }
    for j in 0..verts.len() {
        let rest: Mask = active_masks
            .iter()
            .enumerate()
            .filter(|(l, _)| *l != j)
            .fold(!0, |a, (_, m)| a & m);
        if rest == 0 {
            return Err(SimplexError::InteriorLeak);
        }
    }
    let vchart_f64 = verts
        .iter()
        .map(|v| {
            let u = domain.chart_coords(v).expect("closure points have positive chart value");
            u.iter().map(rat_to_f64).collect()
        })
        .collect();
    Ok(EmbeddedSimplex {
        domain: domain.clone(),
        verts: verts.to_vec(),
        lifts,
        vchart_f64,
        vertex_faces,
        active_masks,
        dim: verts.len() - 1,
    })
}

impl EmbeddedSimplex {
    pub fn domain(&self) -> &Arc<PolytopeDomain> {
        &self.domain
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[HPoint] {
        &self.verts
    }

    pub fn vertex_face(&self, j: usize) -> FaceId {
        self.vertex_faces[j]
    }

    pub fn vertex_faces(&self) -> &[FaceId] {
        &self.vertex_faces
    }

    pub fn active_mask(&self, j: usize) -> Mask {
        self.active_masks[j]
    }

    /// Chart-positive lifts, chart value one; barycentric weights against
    /// these lifts are the affine weights of the domain chart.
    pub fn lifts(&self) -> &[Vec<Rat>] {
        &self.lifts
    }

    /// Deduplication key: the canonical vertex lifts, sorted.
    pub fn canonical_key(&self) -> Vec<Vec<num::BigInt>> {
        let mut key: Vec<Vec<num::BigInt>> = self.verts.iter().map(|v| v.canonical()).collect();
        key.sort();
        key
    }

    /// Barycentric coordinates of a relative-interior point, normalized to
    /// sum one. Exact; errors with NotInSimplex off the relative interior.
    pub fn barycentric(&self, x: &HPoint) -> SimplexResult<Vec<Rat>> {
        let Some(xl) = positive_lift(&self.domain, x) else {
            return Err(SimplexError::NotInSimplex);
        };
        let Some(lambda) = linalg::solve_columns(&self.lifts, &xl) else {
            return Err(SimplexError::NotInSimplex);
        };
        if lambda.iter().any(|l| !l.is_positive()) {
            return Err(SimplexError::NotInSimplex);
        }
        Ok(lambda)
    }

    /// The point with the given positive barycentric weights.
    pub fn point_from_barycentric(&self, lambda: &[Rat]) -> SimplexResult<HPoint> {
        if lambda.len() != self.verts.len() || lambda.iter().any(|l| !l.is_positive()) {
            return Err(SimplexError::NotInSimplex);
        }
        let mut out = vec![Rat::zero(); self.domain.ambient_dim()];
        for (w, lift) in lambda.iter().zip(&self.lifts) {
            out = linalg::add_vec(&out, &linalg::scale_vec(lift, w));
        }
        Ok(HPoint::new(out).expect("positive combination is nonzero"))
    }

    pub fn barycenter(&self) -> HPoint {
        self.point_from_barycentric(&vec![Rat::one(); self.verts.len()])
            .expect("all-ones weights are positive")
    }

    /// Intrinsic Hilbert distance of the simplex between relative-interior
    /// points: `exp(2 d) = max_{i,j} (x_i y_j) / (y_i x_j)` in barycentric
    /// coordinates.
    pub fn simplex_distance(&self, x: &HPoint, y: &HPoint) -> SimplexResult<HilbertLength> {
        let l = self.barycentric(x)?;
        let m = self.barycentric(y)?;
        let ratios: Vec<Rat> = l.iter().zip(&m).map(|(a, b)| a / b).collect();
        let max = ratios.iter().max().expect("nonempty").clone();
        let min = ratios.iter().min().expect("nonempty").clone();
        Ok(HilbertLength::from_q(max / min)?)
    }

    /// Flat coordinates: the exact ratio tuple `lambda_{i+1} / lambda_1`.
    pub fn flat_coords(&self, x: &HPoint) -> SimplexResult<Vec<Rat>> {
        let l = self.barycentric(x)?;
        Ok(l[1..].iter().map(|v| v / &l[0]).collect())
    }

    pub fn point_from_flat(&self, r: &[Rat]) -> SimplexResult<HPoint> {
        if r.len() != self.dim {
            return Err(SimplexError::NotInSimplex);
        }
        let mut lambda = Vec::with_capacity(self.dim + 1);
        lambda.push(Rat::one());
        lambda.extend_from_slice(r);
        self.point_from_barycentric(&lambda)
    }

    /// Distance in flat coordinates, along an independent code path from
    /// `simplex_distance`: with ratio vectors `r, s`, the per-coordinate
    /// quotients together with 1 span the same spread of eigenvalue ratios.
    pub fn flat_distance(r: &[Rat], s: &[Rat]) -> SimplexResult<HilbertLength> {
        if r.len() != s.len() {
            return Err(SimplexError::NotInSimplex);
        }
        if r.iter().chain(s).any(|v| !v.is_positive()) {
            return Err(SimplexError::NotInSimplex);
        }
        let mut rho = vec![Rat::one()];
        rho.extend(r.iter().zip(s).map(|(a, b)| a / b));
        let max = rho.iter().max().expect("nonempty").clone();
        let min = rho.iter().min().expect("nonempty").clone();
        Ok(HilbertLength::from_q(max / min)?)
    }

    /// Log-flat coordinates for float optimization.
    pub fn flat_f64(&self, x: &HPoint) -> SimplexResult<Vec<f64>> {
        Ok(self.flat_coords(x)?.iter().map(|r| rat_to_f64(r).ln()).collect())
    }

    /// Flat metric on log coordinates: half the spread of `{0} ∪ {u_i - v_i}`.
    pub fn flat_dist_f64(u: &[f64], v: &[f64]) -> f64 {
        let mut lo = 0.0f64;
        let mut hi = 0.0f64;
        for (a, b) in u.iter().zip(v) {
            let d = a - b;
            lo = lo.min(d);
            hi = hi.max(d);
        }
        0.5 * (hi - lo)
    }

    /// Span-chart coordinates (f64) of the simplex point with log-flat
    /// coordinates `u`; feeds directly into the domain's float metric.
    pub fn chart_from_flat_f64(&self, u: &[f64]) -> Vec<f64> {
        let shift = u.iter().fold(0.0f64, |m, x| m.max(*x));
        let mut w = Vec::with_capacity(self.dim + 1);
        w.push((-shift).exp());
        w.extend(u.iter().map(|x| (x - shift).exp()));
        let total: f64 = w.iter().sum();
        let m = self.vchart_f64[0].len();
        let mut out = vec![0.0; m];
        for (wi, vc) in w.iter().zip(&self.vchart_f64) {
            for (o, c) in out.iter_mut().zip(vc) {
                *o += wi / total * c;
            }
        }
        out
    }

    /// Span-chart coordinates of each vertex (f64), chart value one.
    pub fn vertex_charts_f64(&self) -> &[Vec<f64>] {
        &self.vchart_f64
    }

    /// Same face data: a vertex bijection matching faces exactly. Returns
    /// the lexicographically first witness permutation.
    pub fn parallel_witness(&self, other: &EmbeddedSimplex) -> Option<Vec<usize>> {
        if !Arc::ptr_eq(&self.domain, &other.domain) || self.dim != other.dim {
            return None;
        }
        let n = self.verts.len();
        let mut perm = Vec::with_capacity(n);
        let mut used = vec![false; n];
        fn assign(
            j: usize,
            n: usize,
            mine: &[FaceId],
            theirs: &[FaceId],
            used: &mut Vec<bool>,
            perm: &mut Vec<usize>,
        ) -> bool {
            if j == n {
                return true;
            }
            for t in 0..n {
                if !used[t] && mine[j] == theirs[t] {
                    used[t] = true;
                    perm.push(t);
                    if assign(j + 1, n, mine, theirs, used, perm) {
                        return true;
                    }
                    perm.pop();
                    used[t] = false;
                }
            }
            false
        }
        if assign(0, n, &self.vertex_faces, &other.vertex_faces, &mut used, &mut perm) {
            Some(perm)
        } else {
            None
        }
    }

    pub fn is_parallel_to(&self, other: &EmbeddedSimplex) -> bool {
        self.parallel_witness(other).is_some()
    }
}

/// True when the two index sets split the vertices of `s` into two
/// complementary nonempty faces.
pub fn opposite(s: &EmbeddedSimplex, f1: &[usize], f2: &[usize]) -> bool {
    let n = s.vertices().len();
    if f1.is_empty() || f2.is_empty() {
        return false;
    }
    let mut seen = vec![0u8; n];
    for &i in f1 {
        if i >= n {
            return false;
        }
        seen[i] += 1;
    }
    for &i in f2 {
        if i >= n {
            return false;
        }
        seen[i] += 1;
    }
    seen.iter().all(|&c| c == 1)
}

/// Joins two simplices (given by their vertex tuples) sitting in opposite
/// faces of the domain into one properly embedded simplex.
///
/// Structural checks on the carrying faces, the faces of the two hull
/// barycenters: their closures share no domain vertex, and every segment
/// between the open faces crosses the interior (the face active sets are
/// disjoint). The join itself is then re-validated from scratch.
pub fn join_opposite(
    domain: &Arc<PolytopeDomain>,
    verts1: &[HPoint],
    verts2: &[HPoint],
) -> SimplexResult<EmbeddedSimplex> {
    let side = |verts: &[HPoint], which: &str| -> SimplexResult<FaceId> {
        if verts.is_empty() {
            return Err(SimplexError::CrossSegmentInBoundary(format!(
                "side {which} has no vertices"
            )));
        }
        for v in verts {
            if !domain.in_closure(v) {
                return Err(SimplexError::CrossSegmentInBoundary(format!(
                    "side {which} has a vertex outside the closed domain"
                )));
            }
        }
        // The carrying face of the side is the face of its barycenter.
        let mut sum = vec![Rat::zero(); domain.ambient_dim()];
        for v in verts {
            let l = positive_lift(domain, v).expect("closure point");
            sum = linalg::add_vec(&sum, &l);
        }
        let bary = HPoint::new(sum).expect("positive combination");
        match domain.locate(&bary) {
            Location::Boundary(f) => Ok(f),
            _ => Err(SimplexError::CrossSegmentInBoundary(format!(
                "side {which} does not span a boundary face"
            ))),
        }
    };
    let f1 = side(verts1, "one")?;
    let f2 = side(verts2, "two")?;
    if domain.face(f1).verts & domain.face(f2).verts != 0 {
        return Err(SimplexError::CrossSegmentInBoundary(
            "the carrying face closures intersect".into(),
        ));
    }
    if domain.face(f1).active & domain.face(f2).active != 0 {
        return Err(SimplexError::CrossSegmentInBoundary(
            "segments between the carrying faces stay in the boundary".into(),
        ));
    }
    let mut all = verts1.to_vec();
    all.extend_from_slice(verts2);
    recognize(domain, &all)
}
