//! Canonical centers of finite interior point sets, and the canonical
//! representative of a parallelism class of embedded simplices.
//!
//! The center is the Chebyshev center of the set inside its convex hull:
//! the hull point minimizing the largest Hilbert distance to the set.
//! Hilbert balls are convex, so the objective is quasiconvex along chart
//! segments and coordinate-wise golden-section descent over hull weights
//! finds the minimum. When the minimizer set is flat, a probe of its
//! extent followed by one recursion picks a canonical point of it. The
//! float argmin is rationalized back into an exact hull combination, so
//! the result provably lies in the hull (and in the carrying open face).

use hilbert_core::floatgeo::golden_min;
use hilbert_core::rat::{rat_from_f64, rat_to_f64};
use hilbert_core::{linalg, FloatDomain, HilbertLength, HPoint, Location, PolytopeDomain, Rat};
use num::{Signed, Zero};

use crate::embedded::{positive_lift, EmbeddedSimplex};
use crate::error::{SimplexError, SimplexResult};
use crate::slide::slide;

/// Tuning for the center descent.
#[derive(Clone, Copy, Debug)]
pub struct CenterOptions {
    /// Stop a descent once a full pass improves by less than this.
    pub tol: f64,
    /// Hard cap on descent passes.
    pub max_passes: usize,
    /// Objective slack used when probing the extent of the minimizer set.
    pub probe: f64,
    /// Probe diameters above this trigger one canonicalizing recursion.
    pub flat_tol: f64,
    pub recurse: bool,
}

impl Default for CenterOptions {
    fn default() -> Self {
        CenterOptions { tol: 1e-11, max_passes: 200, probe: 1e-7, flat_tol: 1e-5, recurse: true }
    }
}

/// Denominator cap when rationalizing hull weights.
const WEIGHT_DEN_CAP: u64 = 1_000_000_000;

struct Solve<'a> {
    dom: &'a PolytopeDomain,
    /// Chart coordinates of the hull generators, chart value one each.
    charts: Vec<Vec<f64>>,
    /// Chart coordinates of the objective anchors.
    anchors: &'a [Vec<f64>],
}

impl Solve<'_> {
    fn point(&self, lam: &[f64]) -> Vec<f64> {
        let m = self.charts[0].len();
        let mut x = vec![0.0; m];
        for (w, c) in lam.iter().zip(&self.charts) {
            for (o, v) in x.iter_mut().zip(c) {
                *o += w * v;
            }
        }
        x
    }

    fn g(&self, lam: &[f64]) -> f64 {
        let x = self.point(lam);
        self.anchors.iter().map(|a| self.dom.dist(&x, a)).fold(0.0, f64::max)
    }

    fn mix(lam: &[f64], j: usize, t: f64) -> Vec<f64> {
        let mut out: Vec<f64> = lam.iter().map(|w| (1.0 - t) * w).collect();
        out[j] += t;
        out
    }

    /// Coordinate descent over hull weights; weights stay on the unit
    /// simplex throughout because each move mixes toward one generator.
    fn minimize(&self, opts: &CenterOptions) -> (Vec<f64>, f64) {
        let n = self.charts.len();
        let mut lam = vec![1.0 / n as f64; n];
        if n == 1 {
            let v = self.g(&lam);
            return (lam, v);
        }
        let mut val = self.g(&lam);
        for _ in 0..opts.max_passes {
            let before = val;
            for j in 0..n {
                if 1.0 - lam[j] < 1e-12 {
                    continue;
                }
                let t_lo = (-lam[j] / (1.0 - lam[j])).max(-1e3);
                let (t, f) =
                    golden_min(&mut |t| self.g(&Self::mix(&lam, j, t)), t_lo, 1.0, 1e-13);
                if f < val {
                    val = f;
                    lam = Self::mix(&lam, j, t);
                    for w in lam.iter_mut() {
                        if *w < 0.0 {
                            *w = 0.0;
                        }
                    }
                    let s: f64 = lam.iter().sum();
                    for w in lam.iter_mut() {
                        *w /= s;
                    }
                }
            }
            if before - val < opts.tol {
                break;
            }
        }
        (lam, val)
    }

    /// Largest `t` on the segment from `lam` toward generator `j` (or away,
    /// on the negative side) keeping the objective within `thresh`.
    fn probe_extent(&self, lam: &[f64], j: usize, thresh: f64, positive: bool) -> f64 {
        let far = if positive {
            1.0
        } else if 1.0 - lam[j] < 1e-12 {
            0.0
        } else {
            (-lam[j] / (1.0 - lam[j])).max(-1e3)
        };
        if self.g(&Self::mix(lam, j, far)) <= thresh {
            return far;
        }
        let (mut lo, mut hi) = (0.0f64, far);
        for _ in 0..40 {
            let mid = 0.5 * (lo + hi);
            if self.g(&Self::mix(lam, j, mid)) <= thresh {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo
    }
}

/// The Chebyshev center of a finite set of interior points, taken inside
/// the convex hull of the set and returned as an exact hull combination.
///
/// Depends only on the set (duplicates and order are ignored), and a
/// projective symmetry of the domain permuting the set moves the center
/// accordingly, up to the float tolerance of the descent.
pub fn center_of_mass(domain: &PolytopeDomain, pts: &[HPoint]) -> SimplexResult<HPoint> {
    center_of_mass_with(domain, pts, &CenterOptions::default())
}

pub fn center_of_mass_with(
    domain: &PolytopeDomain,
    pts: &[HPoint],
    opts: &CenterOptions,
) -> SimplexResult<HPoint> {
    if pts.is_empty() {
        return Err(SimplexError::DegenerateHull("empty point set".into()));
    }
    let mut set: Vec<HPoint> = Vec::new();
    for p in pts {
        if !matches!(domain.locate(p), Location::Interior) {
            return Err(SimplexError::DegenerateHull(
                "point set leaves the open domain".into(),
            ));
        }
        if !set.iter().any(|q| q.proj_eq(p)) {
            set.push(p.clone());
        }
    }
    // The set is sorted to a canonical order so the descent path, and with
    // it the rounded output, depends only on the set.
    set.sort_by_key(|p| p.canonical());
    if set.len() == 1 {
        return Ok(set.remove(0));
    }
    let charts: Vec<Vec<f64>> = set
        .iter()
        .map(|p| {
            let u = domain.chart_coords(p).expect("interior points have chart coordinates");
            u.iter().map(rat_to_f64).collect()
        })
        .collect();
    let solve = Solve { dom: domain, charts: charts.clone(), anchors: &charts };
    let (lam, best) = solve.minimize(opts);

    let mut lam = lam;
    if opts.recurse {
        // Probe how far the near-minimizers extend; a flat minimizer set is
        // replaced by the Chebyshev center of its probed extremes.
        let thresh = best + opts.probe;
        let mut probes: Vec<Vec<f64>> = vec![lam.clone()];
        for j in 0..set.len() {
            for positive in [true, false] {
                let t = solve.probe_extent(&lam, j, thresh, positive);
                if t.abs() > 1e-9 {
                    probes.push(Solve::mix(&lam, j, t));
                }
            }
        }
        let pts_f64: Vec<Vec<f64>> = probes.iter().map(|l| solve.point(l)).collect();
        let mut diam = 0.0f64;
        for i in 0..pts_f64.len() {
            for j in i + 1..pts_f64.len() {
                diam = diam.max(domain.dist(&pts_f64[i], &pts_f64[j]));
            }
        }
        if diam > opts.flat_tol {
            let inner = Solve { dom: domain, charts: pts_f64.clone(), anchors: &pts_f64 };
            let (mu, _) = inner.minimize(opts);
            let mut combined = vec![0.0; set.len()];
            for (w, l) in mu.iter().zip(&probes) {
                for (o, v) in combined.iter_mut().zip(l) {
                    *o += w * v;
                }
            }
            lam = combined;
        }
    }

    // Rationalize the weights and rebuild exactly inside the hull.
    let mut exact: Vec<Rat> = lam
        .iter()
        .map(|w| {
            if *w <= 0.0 {
                Rat::zero()
            } else {
                let r = rat_from_f64(*w, WEIGHT_DEN_CAP).unwrap_or_else(|_| Rat::zero());
                if r.is_negative() {
                    Rat::zero()
                } else {
                    r
                }
            }
        })
        .collect();
    if exact.iter().all(|w| w.is_zero()) {
        exact = vec![Rat::from_integer(1.into()); set.len()];
    }
    let mut out = vec![Rat::zero(); domain.ambient_dim()];
    for (w, p) in exact.iter().zip(&set) {
        if w.is_zero() {
            continue;
        }
        let lift = positive_lift(domain, p).expect("interior point");
        out = linalg::add_vec(&out, &linalg::scale_vec(&lift, w));
    }
    Ok(HPoint::new(out).expect("hull combination is nonzero"))
}

/// Canonicalizes an embedded simplex relative to per-vertex sample sets:
/// each vertex slides to the center of the samples in its own open face.
/// Depends only on the sample sets, so it is idempotent, and the returned
/// length bounds the Hausdorff displacement.
pub fn canonicalize(
    s: &EmbeddedSimplex,
    samples: &[Vec<HPoint>],
) -> SimplexResult<(EmbeddedSimplex, HilbertLength)> {
    if samples.len() != s.dim() + 1 {
        return Err(SimplexError::FaceIntersectionUnbounded(format!(
            "need one sample set per vertex, got {} for dimension {}",
            samples.len(),
            s.dim()
        )));
    }
    let domain = s.domain();
    let mut moves = Vec::with_capacity(samples.len());
    for (j, group) in samples.iter().enumerate() {
        if group.is_empty() {
            return Err(SimplexError::FaceIntersectionUnbounded(format!(
                "vertex {j} has no samples in its face"
            )));
        }
        let face = s.vertex_face(j);
        for p in group {
            if domain.locate(p) != Location::Boundary(face) {
                return Err(SimplexError::FaceIntersectionUnbounded(format!(
                    "a sample for vertex {j} leaves its open face"
                )));
            }
        }
        let fd = domain.face_domain(face);
        let w = center_of_mass(&fd, group)?;
        moves.push((j, w));
    }
    slide(s, &moves)
}
