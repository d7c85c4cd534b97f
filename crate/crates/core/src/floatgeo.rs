//! Float view of a convex domain, for estimators that sample and optimize.
//!
//! Exact arithmetic certifies; floats explore. Everything here works in an
//! affine chart where segments are straight lines, and only ever feeds
//! results back into exact code as explicit rational witnesses.

use crate::domain::PolytopeDomain;
use crate::projective::HPoint;

/// Cross ratio length from chord parameters: the chord leaves the domain at
/// affine parameters `t_a < 0` and `t_b > 1` relative to `x` at 0, `y` at 1.
pub fn length_from_params(t_a: f64, t_b: f64) -> f64 {
    let q = (t_b * (1.0 - t_a)) / (t_a * (1.0 - t_b));
    0.5 * q.ln()
}

/// A properly convex domain seen through a fixed bounded affine chart.
pub trait FloatDomain: Sync {
    /// Dimension of the chart (number of chart coordinates).
    fn chart_dim(&self) -> usize;

    /// Chart coordinates of a projective point, or None at infinity.
    fn chart_point(&self, x: &HPoint) -> Option<Vec<f64>>;

    /// Strict interior test in chart coordinates.
    fn contains(&self, u: &[f64]) -> bool;

    /// Chord parameters `(t_a, t_b)` with `t_a < 0 < 1 < t_b` for the line
    /// through interior points `u` (t = 0) and `v` (t = 1); None when a point
    /// is not interior or the points coincide to working precision.
    fn chord_params(&self, u: &[f64], v: &[f64]) -> Option<(f64, f64)>;

    /// Hilbert distance between interior chart points.
    fn dist(&self, u: &[f64], v: &[f64]) -> f64 {
        let d2: f64 = u.iter().zip(v).map(|(a, b)| (a - b) * (a - b)).sum();
        if d2 < 1e-30 {
            return 0.0;
        }
        match self.chord_params(u, v) {
            Some((ta, tb)) => length_from_params(ta, tb),
            None => f64::INFINITY,
        }
    }

    /// Affine point at parameter `t` on the segment from `u` to `v`.
    fn segment_point(&self, u: &[f64], v: &[f64], t: f64) -> Vec<f64> {
        u.iter().zip(v).map(|(a, b)| a + t * (b - a)).collect()
    }

    /// Point on the geodesic `[u, v]` at Hilbert distance `h` from `u`.
    fn geodesic_point_f64(&self, u: &[f64], v: &[f64], h: f64) -> Vec<f64> {
        if h <= 0.0 {
            return u.to_vec();
        }
        let Some((ta, tb)) = self.chord_params(u, v) else {
            return u.to_vec();
        };
        let qs = (2.0 * h).exp();
        let t = (ta * tb * (qs - 1.0)) / (qs * ta - tb);
        self.segment_point(u, v, t.clamp(0.0, 1.0))
    }
}

impl FloatDomain for PolytopeDomain {
    fn chart_dim(&self) -> usize {
        self.span().dim()
    }

    fn chart_point(&self, x: &HPoint) -> Option<Vec<f64>> {
        let u = self.chart_coords(x)?;
        Some(u.iter().map(crate::rat::rat_to_f64).collect())
    }

    fn contains(&self, u: &[f64]) -> bool {
        self.facets_f64().iter().all(|f| dot_f64(f, u) > 0.0)
    }

    fn chord_params(&self, u: &[f64], v: &[f64]) -> Option<(f64, f64)> {
        let mut t_lo: Option<f64> = None;
        let mut t_hi: Option<f64> = None;
        for f in self.facets_f64() {
            let alpha = dot_f64(f, u);
            let beta = dot_f64(f, v);
            if alpha <= 0.0 || beta <= 0.0 {
                return None;
            }
            if alpha == beta {
                continue;
            }
            let t = alpha / (alpha - beta);
            if beta < alpha {
                if t_hi.is_none_or(|cur| t < cur) {
                    t_hi = Some(t);
                }
            } else if t_lo.is_none_or(|cur| t > cur) {
                t_lo = Some(t);
            }
        }
        Some((t_lo?, t_hi?))
    }
}

pub(crate) fn dot_f64(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Hilbert distance from `p` to the straight segment `[a, b]`. The distance
/// along the segment need not be unimodal, so a coarse scan with `coarse + 1`
/// probes picks the basin before golden refinement.
pub fn dist_to_segment(dom: &dyn FloatDomain, p: &[f64], a: &[f64], b: &[f64], coarse: usize) -> f64 {
    let n = coarse.max(2);
    let mut best = f64::INFINITY;
    let mut best_t = 0.0;
    for i in 0..=n {
        let t = i as f64 / n as f64;
        let d = dom.dist(p, &dom.segment_point(a, b, t));
        if d < best {
            best = d;
            best_t = t;
        }
    }
    let w = 1.0 / n as f64;
    let lo = (best_t - w).max(0.0);
    let hi = (best_t + w).min(1.0);
    let (_, refined) = golden_min(
        &mut |t| dom.dist(p, &dom.segment_point(a, b, t)),
        lo,
        hi,
        1e-12,
    );
    refined.min(best)
}

/// Chart coordinates of a polytope domain point given as raw f64 weights on
/// the vertices (used by samplers that never leave float land).
pub fn polytope_chart_from_weights(dom: &PolytopeDomain, weights: &[f64]) -> Vec<f64> {
    let m = dom.span().dim();
    let mut u = vec![0.0; m];
    for (i, w) in weights.iter().enumerate() {
        if *w == 0.0 {
            continue;
        }
        let vu = dom.vertex_chart_f64(i);
        for (o, x) in u.iter_mut().zip(&vu) {
            *o += w * x;
        }
    }
    let c: f64 = dom.chart_f64().iter().zip(&u).map(|(a, b)| a * b).sum();
    u.iter().map(|x| x / c).collect()
}

/// Golden section search for the minimum of a unimodal function on `[lo, hi]`.
/// Returns `(argmin, min)` once the bracket shrinks below `tol`.
pub fn golden_min(f: &mut dyn FnMut(f64) -> f64, lo: f64, hi: f64, tol: f64) -> (f64, f64) {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let (mut a, mut b) = (lo, hi);
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    while (b - a).abs() > tol {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
    }
    let mid = 0.5 * (a + b);
    let fm = f(mid);
    if fm <= fc && fm <= fd {
        (mid, fm)
    } else if fc <= fd {
        (c, fc)
    } else {
        (d, fd)
    }
}
