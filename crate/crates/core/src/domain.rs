//! Properly convex polytope domains with exact Hilbert geometry.
//!
//! A domain is built from an explicit list of vertex lifts. The lifts matter:
//! the domain is the projectivization of the cone they positively span, and
//! the constructor rejects vertex lists whose cone is not salient or whose
//! projectivization is not a polytope with exactly the given vertices.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use num::{One, Signed, Zero};
use rand::Rng;

use crate::error::{GeomError, GeomResult};
use crate::length::HilbertLength;
use crate::linalg;
use crate::projective::{Chart, HPoint, LinSubspace, ProjMap};
use crate::rat::{canonical_int_vec, Rat};

/// Bit set over vertices or facets. Vertex count is capped at 64 and facet
/// count at 128, comfortably above desk scale.
pub type Mask = u128;

pub const MAX_VERTICES: usize = 64;
pub const MAX_FACETS: usize = 128;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FaceId(pub usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Location {
    Interior,
    Boundary(FaceId),
    Outside,
}

/// A facet of the domain: a supporting functional in span coordinates,
/// nonnegative on every vertex, together with its incident vertices.
#[derive(Clone, Debug)]
pub struct Facet {
    functional: Vec<Rat>,
    pub verts: Mask,
}

/// A proper closed boundary face, keyed by its vertex set.
#[derive(Clone, Debug)]
pub struct FaceData {
    pub verts: Mask,
    pub active: Mask,
    pub dim: usize,
}

/// Boundary data of a point: the active facets at the point.
#[derive(Clone, Debug)]
pub struct SupportingData {
    pub active: Vec<usize>,
    /// Ambient functionals of the active facets (valid on the span).
    pub functionals: Vec<Vec<Rat>>,
    /// True when exactly one facet is active: a C^1 boundary point of the
    /// polytope stratification.
    pub is_c1: bool,
}

/// An open chord of the domain: the boundary endpoints of the line through
/// two interior points, ordered so the segment runs a, x, y, b.
#[derive(Clone, Debug)]
pub struct Chord {
    pub a: HPoint,
    pub b: HPoint,
    pub face_a: FaceId,
    pub face_b: FaceId,
    pub t_a: Rat,
    pub t_b: Rat,
}

#[derive(Debug)]
pub struct PolytopeDomain {
    verts: Vec<HPoint>,
    span: LinSubspace,
    /// Vertex lifts in span coordinates, signs as given.
    vcoords: Vec<Vec<Rat>>,
    /// Chart functional on span coordinates, strictly positive on the cone.
    chart: Vec<Rat>,
    facets: Vec<Facet>,
    faces: Vec<FaceData>,
    face_by_verts: HashMap<Mask, FaceId>,
    face_doms: Vec<OnceLock<Arc<PolytopeDomain>>>,
    // f64 mirrors of the chart data, for the float estimators.
    chart_f64: Vec<f64>,
    facets_f64: Vec<Vec<f64>>,
    vcoords_f64: Vec<Vec<f64>>,
}

fn for_each_combination(n: usize, k: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(start: usize, n: usize, left: usize, buf: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if left == 0 {
            f(buf);
            return;
        }
        for i in start..=n.saturating_sub(left) {
            buf.push(i);
            rec(i + 1, n, left - 1, buf, f);
            buf.pop();
        }
    }
    let mut buf = Vec::with_capacity(k);
    rec(0, n, k, &mut buf, f);
}

impl PolytopeDomain {
    pub fn new(verts: Vec<HPoint>) -> GeomResult<Self> {
        let n = verts.len();
        if n == 0 {
            return Err(GeomError::InvalidInput("empty vertex list".into()));
        }
        if n > MAX_VERTICES {
            return Err(GeomError::InvalidInput(format!(
                "{n} vertices exceed the supported maximum {MAX_VERTICES}"
            )));
        }
        let ambient = verts[0].dim_ambient();
        if verts.iter().any(|v| v.dim_ambient() != ambient) {
            return Err(GeomError::InvalidInput("mixed ambient dimensions".into()));
        }
        for i in 0..n {
            for j in i + 1..n {
                if verts[i].proj_eq(&verts[j]) {
                    return Err(GeomError::NotProperlyConvex(format!(
                        "vertices {i} and {j} coincide"
                    )));
                }
            }
        }
        let span = LinSubspace::span_of_points(&verts)?;
        let m = span.dim();
        let vcoords: Vec<Vec<Rat>> = verts
            .iter()
            .map(|v| span.coords_of(v.coords()).expect("vertex lies in the span"))
            .collect();

        if m == 1 {
            // A single projective point; a valid 0-dimensional domain.
            let chart = vec![vcoords[0][0].clone()];
            let mut dom = PolytopeDomain {
                verts,
                span,
                vcoords,
                chart,
                facets: Vec::new(),
                faces: Vec::new(),
                face_by_verts: HashMap::new(),
                face_doms: Vec::new(),
                chart_f64: Vec::new(),
                facets_f64: Vec::new(),
                vcoords_f64: Vec::new(),
            };
            dom.fill_float_mirrors();
            return Ok(dom);
        }

        // Facet enumeration: every (m-1)-subset of vertex lifts spanning a
        // hyperplane proposes a supporting functional; keep the ones with all
        // vertices weakly on one side.
        let mut facets: Vec<Facet> = Vec::new();
        let mut seen: Vec<Vec<num::BigInt>> = Vec::new();
        let mut failure: Option<GeomError> = None;
        for_each_combination(n, m - 1, &mut |subset| {
            if failure.is_some() {
                return;
            }
            let rows: Vec<Vec<Rat>> = subset.iter().map(|&i| vcoords[i].clone()).collect();
            let ns = linalg::nullspace(&rows, m);
            if ns.len() != 1 {
                return; // subset does not span a hyperplane
            }
            let mut f = ns.into_iter().next().unwrap();
            let key = canonical_int_vec(&f);
            if seen.contains(&key) {
                return;
            }
            let values: Vec<Rat> = vcoords.iter().map(|v| linalg::dot(&f, v)).collect();
            let pos = values.iter().any(|x| x.is_positive());
            let neg = values.iter().any(|x| x.is_negative());
            if pos && neg {
                return; // separating, not supporting
            }
            if neg {
                f = f.iter().map(|x| -x).collect();
            }
            let mut mask: Mask = 0;
            for (i, v) in values.iter().enumerate() {
                if v.is_zero() {
                    mask |= 1 << i;
                }
            }
            seen.push(key);
            if facets.len() == MAX_FACETS {
                failure = Some(GeomError::InvalidInput(format!(
                    "facet count exceeds the supported maximum {MAX_FACETS}"
                )));
                return;
            }
            facets.push(Facet { functional: linalg::normalize_functional(&f), verts: mask });
        });
        if let Some(e) = failure {
            return Err(e);
        }

        // Chart functional: the sum of the facet functionals. It is strictly
        // positive on every vertex lift exactly when the cone is salient.
        let mut chart = vec![Rat::zero(); m];
        for facet in &facets {
            chart = linalg::add_vec(&chart, &facet.functional);
        }
        for (i, v) in vcoords.iter().enumerate() {
            if !linalg::dot(&chart, v).is_positive() {
                return Err(GeomError::NotProperlyConvex(format!(
                    "vertex {i} is not separated from the origin; the lifted cone is not salient"
                )));
            }
        }

        // Every listed vertex must be extreme: the facets through it single
        // it out. This rejects duplicates in disguise and interior points.
        for i in 0..n {
            let mut isolated: Mask = (1 << n) - 1;
            for facet in &facets {
                if facet.verts & (1 << i) != 0 {
                    isolated &= facet.verts;
                }
            }
            if isolated != 1 << i {
                return Err(GeomError::NotProperlyConvex(format!(
                    "vertex {i} is not an extreme point of the hull"
                )));
            }
        }

        // Face lattice: closure of the facet vertex sets under intersection.
        let mut masks: Vec<Mask> = facets.iter().map(|f| f.verts).collect();
        masks.sort_unstable();
        masks.dedup();
        let mut queue: Vec<Mask> = masks.clone();
        while let Some(a) = queue.pop() {
            for f in &facets {
                let b = a & f.verts;
                if b != 0 && !masks.contains(&b) {
                    masks.push(b);
                    queue.push(b);
                }
            }
        }
        let full: Mask = (1 << n) - 1;
        masks.retain(|&mk| mk != full);
        let mut faces: Vec<FaceData> = masks
            .into_iter()
            .map(|mk| {
                let rows: Vec<Vec<Rat>> = (0..n)
                    .filter(|i| mk & (1 << i) != 0)
                    .map(|i| vcoords[i].clone())
                    .collect();
                let dim = linalg::rank(&rows) - 1;
                let active = facets
                    .iter()
                    .enumerate()
                    .filter(|(_, f)| mk & f.verts == mk)
                    .fold(0 as Mask, |acc, (j, _)| acc | (1 << j));
                FaceData { verts: mk, active, dim }
            })
            .collect();
        faces.sort_by_key(|f| (f.dim, f.verts));
        let face_by_verts: HashMap<Mask, FaceId> =
            faces.iter().enumerate().map(|(i, f)| (f.verts, FaceId(i))).collect();
        let face_doms = (0..faces.len()).map(|_| OnceLock::new()).collect();

        let mut dom = PolytopeDomain {
            verts,
            span,
            vcoords,
            chart,
            facets,
            faces,
            face_by_verts,
            face_doms,
            chart_f64: Vec::new(),
            facets_f64: Vec::new(),
            vcoords_f64: Vec::new(),
        };
        dom.fill_float_mirrors();
        Ok(dom)
    }

    fn fill_float_mirrors(&mut self) {
        let tof = |v: &[Rat]| v.iter().map(crate::rat::rat_to_f64).collect::<Vec<f64>>();
        self.chart_f64 = tof(&self.chart);
        self.facets_f64 = self.facets.iter().map(|f| tof(&f.functional)).collect();
        self.vcoords_f64 = self.vcoords.iter().map(|v| tof(v)).collect();
    }

    pub fn ambient_dim(&self) -> usize {
        self.span.ambient()
    }

    /// Projective dimension of the domain.
    pub fn dim(&self) -> usize {
        self.span.dim() - 1
    }

    pub fn vertices(&self) -> &[HPoint] {
        &self.verts
    }

    pub fn vertex_count(&self) -> usize {
        self.verts.len()
    }

    pub fn span(&self) -> &LinSubspace {
        &self.span
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    pub fn facet(&self, i: usize) -> &Facet {
        &self.facets[i]
    }

    pub fn faces(&self) -> &[FaceData] {
        &self.faces
    }

    pub fn face(&self, id: FaceId) -> &FaceData {
        &self.faces[id.0]
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn face_vertex_indices(&self, id: FaceId) -> Vec<usize> {
        let mk = self.faces[id.0].verts;
        (0..self.verts.len()).filter(|i| mk & (1 << i) != 0).collect()
    }

    pub fn face_by_vertex_mask(&self, mask: Mask) -> Option<FaceId> {
        self.face_by_verts.get(&mask).copied()
    }

    /// The face whose active set is exactly the given nonempty facet set.
    pub fn face_by_active(&self, active: Mask) -> Option<FaceId> {
        if active == 0 {
            return None;
        }
        let mut verts: Mask = (1 << self.verts.len()) - 1;
        for (j, f) in self.facets.iter().enumerate() {
            if active & (1 << j) != 0 {
                verts &= f.verts;
            }
        }
        if verts == 0 {
            return None;
        }
        self.face_by_verts.get(&verts).copied()
    }

    /// Chart coordinates: span coordinates scaled so the chart functional is
    /// one. None when the point is outside the span or on the chart's
    /// hyperplane at infinity (which misses the closed domain).
    pub fn chart_coords(&self, x: &HPoint) -> Option<Vec<Rat>> {
        let xi = self.span.coords_of(x.coords())?;
        let c = linalg::dot(&self.chart, &xi);
        if c.is_zero() {
            return None;
        }
        Some(xi.iter().map(|v| v / &c).collect())
    }

    pub fn point_from_chart(&self, u: &[Rat]) -> HPoint {
        HPoint::new(self.span.lift_from_coords(u)).expect("chart points are nonzero")
    }

    /// Sine of the background angle from x to each facet hyperplane,
    /// computed on the f64 mirrors of the span data. None when x misses
    /// the span. Near-zero entries flag facets the point almost supports.
    pub fn facet_sines(&self, x: &HPoint) -> Option<Vec<f64>> {
        let xi = self.span.coords_of(x.coords())?;
        let xf: Vec<f64> = xi.iter().map(crate::rat::rat_to_f64).collect();
        let nx = xf.iter().map(|v| v * v).sum::<f64>().sqrt();
        if !(nx > 0.0) {
            return None;
        }
        Some(
            self.facets_f64
                .iter()
                .map(|f| {
                    let nf = f.iter().map(|v| v * v).sum::<f64>().sqrt();
                    let dot: f64 = f.iter().zip(&xf).map(|(a, b)| a * b).sum();
                    (dot / (nf * nx)).abs()
                })
                .collect(),
        )
    }

    /// Chart coordinates and active facet mask, or None when outside.
    fn classify(&self, x: &HPoint) -> Option<(Vec<Rat>, Mask)> {
        if x.dim_ambient() != self.ambient_dim() {
            return None;
        }
        let u = self.chart_coords(x)?;
        if self.span.dim() == 1 {
            return Some((u, 0));
        }
        let mut active: Mask = 0;
        for (j, f) in self.facets.iter().enumerate() {
            let v = linalg::dot(&f.functional, &u);
            if v.is_negative() {
                return None;
            }
            if v.is_zero() {
                active |= 1 << j;
            }
        }
        Some((u, active))
    }

    pub fn locate(&self, x: &HPoint) -> Location {
        match self.classify(x) {
            None => Location::Outside,
            Some((_, 0)) => Location::Interior,
            Some((_, active)) => {
                let id = self
                    .face_by_active(active)
                    .expect("active set of a closure point names a face");
                Location::Boundary(id)
            }
        }
    }

    pub fn is_interior(&self, x: &HPoint) -> bool {
        matches!(self.locate(x), Location::Interior)
    }

    pub fn in_closure(&self, x: &HPoint) -> bool {
        !matches!(self.locate(x), Location::Outside)
    }

    /// Smallest face whose relative interior contains the boundary point.
    pub fn face_of(&self, x: &HPoint) -> GeomResult<FaceId> {
        match self.locate(x) {
            Location::Boundary(id) => Ok(id),
            _ => Err(GeomError::NotOnBoundary),
        }
    }

    pub fn supporting_data(&self, x: &HPoint) -> GeomResult<SupportingData> {
        let Some((_, active)) = self.classify(x) else {
            return Err(GeomError::NotOnBoundary);
        };
        if active == 0 {
            return Err(GeomError::NotOnBoundary);
        }
        let idx: Vec<usize> =
            (0..self.facets.len()).filter(|j| active & (1 << j) != 0).collect();
        let functionals = idx.iter().map(|&j| self.ambient_functional(j)).collect();
        Ok(SupportingData { is_c1: idx.len() == 1, active: idx, functionals })
    }

    /// Ambient row representing facet `j`'s functional on the span.
    pub fn ambient_functional(&self, j: usize) -> Vec<Rat> {
        let f = &self.facets[j].functional;
        let mut row = vec![Rat::zero(); self.ambient_dim()];
        for (i, c) in f.iter().enumerate() {
            let e = self.span.coordinate_functional(i);
            row = linalg::add_vec(&row, &linalg::scale_vec(&e, c));
        }
        row
    }

    /// Ambient chart functional (valid on the span).
    pub fn ambient_chart(&self) -> Chart {
        let mut row = vec![Rat::zero(); self.ambient_dim()];
        for (i, c) in self.chart.iter().enumerate() {
            let e = self.span.coordinate_functional(i);
            row = linalg::add_vec(&row, &linalg::scale_vec(&e, c));
        }
        Chart::new(row).expect("chart functional is nonzero")
    }

    fn chord_data(&self, x: &HPoint, y: &HPoint) -> GeomResult<(Vec<Rat>, Vec<Rat>, Rat, Rat)> {
        let Some((u, ax)) = self.classify(x) else { return Err(GeomError::NotInterior) };
        let Some((v, ay)) = self.classify(y) else { return Err(GeomError::NotInterior) };
        if ax != 0 || ay != 0 {
            return Err(GeomError::NotInterior);
        }
        if x.proj_eq(y) {
            return Err(GeomError::DegenerateConfiguration("coincident chord points".into()));
        }
        let w = linalg::sub_vec(&v, &u);
        let mut t_hi: Option<Rat> = None;
        let mut t_lo: Option<Rat> = None;
        for f in &self.facets {
            let alpha = linalg::dot(&f.functional, &u);
            let beta = linalg::dot(&f.functional, &v);
            if alpha == beta {
                continue;
            }
            let t = &alpha / (&alpha - &beta);
            if beta < alpha {
                // crossing beyond y
                if t_hi.as_ref().is_none_or(|cur| t < *cur) {
                    t_hi = Some(t);
                }
            } else if t_lo.as_ref().is_none_or(|cur| t > *cur) {
                t_lo = Some(t);
            }
        }
        // The chart is bounded, so the line leaves the domain on both sides.
        let t_lo = t_lo.ok_or_else(|| {
            GeomError::InvariantTrap("chord misses the boundary behind x".into())
        })?;
        let t_hi = t_hi.ok_or_else(|| {
            GeomError::InvariantTrap("chord misses the boundary beyond y".into())
        })?;
        Ok((u, w, t_lo, t_hi))
    }

    fn point_on_line(&self, u: &[Rat], w: &[Rat], t: &Rat) -> (HPoint, Mask) {
        let p = linalg::add_vec(u, &linalg::scale_vec(w, t));
        let mut active: Mask = 0;
        for (j, f) in self.facets.iter().enumerate() {
            if linalg::dot(&f.functional, &p).is_zero() {
                active |= 1 << j;
            }
        }
        (self.point_from_chart(&p), active)
    }

    /// Boundary endpoints of the chord through two interior points.
    pub fn chord(&self, x: &HPoint, y: &HPoint) -> GeomResult<Chord> {
        let (u, w, t_a, t_b) = self.chord_data(x, y)?;
        let (a, mask_a) = self.point_on_line(&u, &w, &t_a);
        let (b, mask_b) = self.point_on_line(&u, &w, &t_b);
        let face = |mask: Mask, which: &str| {
            self.face_by_active(mask).ok_or_else(|| {
                GeomError::InvariantTrap(format!("chord endpoint {which} has no face"))
            })
        };
        Ok(Chord {
            a,
            b,
            face_a: face(mask_a, "a")?,
            face_b: face(mask_b, "b")?,
            t_a,
            t_b,
        })
    }

    /// Exact Hilbert distance between interior points.
    pub fn hilbert_distance(&self, x: &HPoint, y: &HPoint) -> GeomResult<HilbertLength> {
        if !self.is_interior(x) || !self.is_interior(y) {
            return Err(GeomError::NotInterior);
        }
        if x.proj_eq(y) {
            return Ok(HilbertLength::zero());
        }
        let (_, _, t_a, t_b) = self.chord_data(x, y)?;
        // Cross ratio [a, x, y, b] at affine parameters (t_a, 0, 1, t_b).
        let one = Rat::one();
        let q = (&t_b * (&one - &t_a)) / (&t_a * (&one - &t_b));
        HilbertLength::from_q(q)
    }

    /// The point on the geodesic segment `[x, y]` at distance `s` from `x`.
    /// An exact `s` yields an exact point. A float `s` is realized by an
    /// exact point at a nearby rational line parameter.
    pub fn geodesic_point(&self, x: &HPoint, y: &HPoint, s: &HilbertLength) -> GeomResult<HPoint> {
        if s.is_zero() {
            return Ok(x.clone());
        }
        let (u, w, t_a, t_b) = self.chord_data(x, y)?;
        let one = Rat::one();
        let q_total = (&t_b * (&one - &t_a)) / (&t_a * (&one - &t_b));
        match s {
            HilbertLength::Exact { q: q_s } => {
                if *q_s > q_total {
                    return Err(GeomError::OutOfRange(
                        "requested length exceeds the distance to y".into(),
                    ));
                }
                // Solving [a, x, p(t), b] = q_s for the affine parameter t.
                let t = (&t_a * &t_b * (q_s - &one)) / (&(q_s * &t_a) - &t_b);
                Ok(self.point_on_line(&u, &w, &t).0)
            }
            HilbertLength::Float(h) => {
                let h_total = HilbertLength::from_q(q_total.clone())?.as_f64();
                if *h > h_total * (1.0 + 1e-12) + 1e-15 {
                    return Err(GeomError::OutOfRange(
                        "requested length exceeds the distance to y".into(),
                    ));
                }
                let (ta, tb) = (crate::rat::rat_to_f64(&t_a), crate::rat::rat_to_f64(&t_b));
                let qs = (2.0 * h.min(h_total)).exp();
                let t = (ta * tb * (qs - 1.0)) / (qs * ta - tb);
                let t = crate::rat::rat_from_f64(t.clamp(0.0, 1.0), 1_000_000_000_000)?;
                Ok(self.point_on_line(&u, &w, &t).0)
            }
        }
    }

    /// Decides whether `(a, b, c)` is a half triangle: both segments
    /// `[a, b]` and `[b, c]` run inside the boundary while the open segment
    /// `(a, c)` crosses the interior. Points outside the closure never form
    /// one, and the three points must be pairwise distinct.
    pub fn half_triangle(&self, a: &HPoint, b: &HPoint, c: &HPoint) -> GeomResult<bool> {
        let masks: Vec<Option<(Vec<Rat>, Mask)>> =
            [a, b, c].iter().map(|p| self.classify(p)).collect();
        let Some(parts) = masks.into_iter().collect::<Option<Vec<_>>>() else {
            return Ok(false);
        };
        if a.proj_eq(b) || b.proj_eq(c) || a.proj_eq(c) {
            return Ok(false);
        }
        let (ma, mb, mc) = (parts[0].1, parts[1].1, parts[2].1);
        // A segment between closure points lies in the boundary iff its
        // endpoints share a facet; it meets the interior iff they do not.
        Ok(ma & mb != 0 && mb & mc != 0 && ma & mc == 0)
    }

    /// Exact Hausdorff distance between two finite interior subsets,
    /// optionally restricted to the closed ball around `center`.
    pub fn hausdorff_distance(
        &self,
        a: &[HPoint],
        b: &[HPoint],
        restrict: Option<(&HPoint, &HilbertLength)>,
    ) -> GeomResult<HilbertLength> {
        let keep = |pts: &[HPoint]| -> GeomResult<Vec<HPoint>> {
            let mut out = Vec::new();
            for p in pts {
                if !self.is_interior(p) {
                    return Err(GeomError::NotInterior);
                }
                if let Some((c, r)) = restrict {
                    let d = self.hilbert_distance(p, c)?;
                    if d > *r {
                        continue;
                    }
                }
                out.push(p.clone());
            }
            Ok(out)
        };
        let fa = keep(a)?;
        let fb = keep(b)?;
        if fa.is_empty() || fb.is_empty() {
            return Err(GeomError::EmptyAfterRestriction);
        }
        let directed = |from: &[HPoint], to: &[HPoint]| -> GeomResult<HilbertLength> {
            let mut worst = HilbertLength::zero();
            for p in from {
                let mut best: Option<HilbertLength> = None;
                for q in to {
                    let d = self.hilbert_distance(p, q)?;
                    if best.as_ref().is_none_or(|cur| d < *cur) {
                        best = Some(d);
                    }
                }
                let best = best.expect("nonempty target set");
                if best > worst {
                    worst = best;
                }
            }
            Ok(worst)
        };
        let d_ab = directed(&fa, &fb)?;
        let d_ba = directed(&fb, &fa)?;
        Ok(if d_ab > d_ba { d_ab } else { d_ba })
    }

    /// Barycenter of the whole vertex list (an interior point).
    pub fn barycenter(&self) -> HPoint {
        self.combination(&vec![Rat::one(); self.verts.len()])
            .expect("all-ones weights are admissible")
    }

    /// Relative-interior point of a face: the sum of its vertex lifts.
    pub fn face_barycenter(&self, id: FaceId) -> HPoint {
        let mk = self.faces[id.0].verts;
        let weights: Vec<Rat> = (0..self.verts.len())
            .map(|i| if mk & (1 << i) != 0 { Rat::one() } else { Rat::zero() })
            .collect();
        self.combination(&weights).expect("faces are nonempty")
    }

    /// Nonnegative combination of the vertex lifts.
    pub fn combination(&self, weights: &[Rat]) -> GeomResult<HPoint> {
        if weights.len() != self.verts.len() {
            return Err(GeomError::InvalidInput("one weight per vertex required".into()));
        }
        if weights.iter().any(|w| w.is_negative()) {
            return Err(GeomError::InvalidInput("weights must be nonnegative".into()));
        }
        let mut out = vec![Rat::zero(); self.ambient_dim()];
        for (w, v) in weights.iter().zip(&self.verts) {
            if w.is_zero() {
                continue;
            }
            out = linalg::add_vec(&out, &linalg::scale_vec(v.coords(), w));
        }
        HPoint::new(out).map_err(|_| GeomError::InvalidInput("all weights are zero".into()))
    }

    /// Random interior point with small integer weights on all vertices.
    pub fn sample_interior<R: Rng>(&self, rng: &mut R) -> HPoint {
        let weights: Vec<Rat> = (0..self.verts.len())
            .map(|_| {
                let w: i64 = rng.gen_range(1..=64);
                Rat::from_integer(w.into())
            })
            .collect();
        self.combination(&weights).expect("positive weights are admissible")
    }

    /// Random point in the relative interior of a face.
    pub fn sample_face<R: Rng>(&self, rng: &mut R, id: FaceId) -> HPoint {
        let mk = self.faces[id.0].verts;
        let weights: Vec<Rat> = (0..self.verts.len())
            .map(|i| {
                if mk & (1 << i) != 0 {
                    let w: i64 = rng.gen_range(1..=64);
                    Rat::from_integer(w.into())
                } else {
                    Rat::zero()
                }
            })
            .collect();
        self.combination(&weights).expect("faces are nonempty")
    }

    /// The closed face as a domain in its own span, built lazily.
    pub fn face_domain(&self, id: FaceId) -> Arc<PolytopeDomain> {
        self.face_doms[id.0]
            .get_or_init(|| {
                let verts: Vec<HPoint> = self
                    .face_vertex_indices(id)
                    .into_iter()
                    .map(|i| self.verts[i].clone())
                    .collect();
                Arc::new(
                    PolytopeDomain::new(verts)
                        .expect("a face of a valid polytope is a valid polytope"),
                )
            })
            .clone()
    }

    /// True when the map permutes the vertex set projectively.
    pub fn preserved_by(&self, g: &ProjMap) -> bool {
        if g.dim() != self.ambient_dim() {
            return false;
        }
        self.verts.iter().all(|v| {
            let img = g.apply(v);
            self.verts.iter().any(|w| img.proj_eq(w))
        })
    }

    // f64 access for the float estimators.

    pub(crate) fn chart_f64(&self) -> &[f64] {
        &self.chart_f64
    }

    pub(crate) fn facets_f64(&self) -> &[Vec<f64>] {
        &self.facets_f64
    }

    pub fn vertex_chart_f64(&self, i: usize) -> Vec<f64> {
        let u = &self.vcoords_f64[i];
        let c: f64 = self.chart_f64.iter().zip(u).map(|(a, b)| a * b).sum();
        u.iter().map(|x| x / c).collect()
    }

    /// Exact chart coordinates of a vertex (chart value one).
    pub fn vertex_chart_coords(&self, i: usize) -> Vec<Rat> {
        let u = &self.vcoords[i];
        let c = linalg::dot(&self.chart, u);
        u.iter().map(|x| x / &c).collect()
    }
}
