//! Rescaling toward a corner: a half triangle picks a projective frame in
//! which the corner is the first coordinate axis, and a diagonal sequence
//! stretches the domain onto the corner simplex spanned by the first three
//! axes. The gap to that simplex is measured in the background angle.

use std::sync::Arc;

use hilbert_core::rat::{rat_to_f64, rint};
use hilbert_core::{linalg, HPoint, PolytopeDomain, ProjMap, Rat};

use crate::error::{ExError, ExResult};

/// One element of the rescaling sequence at a half triangle.
pub struct RescaleSequence {
    /// Frame map sending b to e1, a to e1 + e2, c to e1 + e3.
    pub frame: ProjMap,
    /// Sequence index.
    pub n: u32,
    /// Diagonal stretch diag(1, 4^n, 2^n, 1, ...) in frame coordinates.
    pub map: ProjMap,
    /// Frame coordinates of the rescaled domain vertices.
    pub rescaled: Vec<Vec<f64>>,
    /// Largest background angle sine from a rescaled vertex to the corner
    /// simplex; zero when every vertex already sits inside it.
    pub gap: f64,
}

impl RescaleSequence {
    /// The interior point the stretch recenters: frame coordinates
    /// (1, 4^-n, 2^-n, 0, ...), which the rescaled frame sends back to
    /// (1, 1, 1, 0, ...). Converges to the corner b.
    pub fn interior_point(&self) -> HPoint {
        let d = self.frame.dim();
        let mut u = vec![rint(0); d];
        u[0] = rint(1);
        u[1] = rint(1) / num::pow(rint(4), self.n as usize);
        u[2] = rint(1) / num::pow(rint(2), self.n as usize);
        self.frame.inverse().apply(&HPoint::new(u).expect("nonzero frame lift"))
    }
}

/// Sine of the background angle from a lift to the closed corner simplex
/// {[w] : w >= 0, supp(w) in the first three coordinates}, minimized over
/// the two signed representatives of the line.
fn corner_gap(u: &[f64]) -> f64 {
    let norm2: f64 = u.iter().map(|v| v * v).sum();
    let tail: f64 = u.iter().skip(3).map(|v| v * v).sum();
    let neg: f64 = u.iter().take(3).map(|v| v.min(0.0) * v.min(0.0)).sum();
    let pos: f64 = u.iter().take(3).map(|v| v.max(0.0) * v.max(0.0)).sum();
    ((tail + neg.min(pos)) / norm2).sqrt()
}

fn column_matrix(cols: &[Vec<Rat>], d: usize) -> Vec<Vec<Rat>> {
    (0..d).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect()
}

/// The n-th rescaling element at the half triangle (a, b, c): frame the
/// corner, stretch by diag(1, 4^n, 2^n, 1, ...), and report how far the
/// rescaled vertex set still is from the corner simplex.
pub fn benzecri_rescale(
    domain: &Arc<PolytopeDomain>,
    a: &HPoint,
    b: &HPoint,
    c: &HPoint,
    n: u32,
) -> ExResult<RescaleSequence> {
    if !domain.half_triangle(a, b, c)? {
        return Err(ExError::NotHalfTriangle);
    }
    let d = domain.ambient_dim();
    let sub = |x: &[Rat], y: &[Rat]| -> Vec<Rat> {
        x.iter().zip(y).map(|(p, q)| p - q).collect()
    };
    let mut cols = vec![
        b.coords().to_vec(),
        sub(a.coords(), b.coords()),
        sub(c.coords(), b.coords()),
    ];
    if linalg::rank(&column_matrix(&cols, d)) < 3 {
        return Err(ExError::FrameFailure(
            "half-triangle lifts do not span a 3-dim frame".into(),
        ));
    }
    // Greedy completion by coordinate vectors keeps the frame exact.
    for i in 0..d {
        if cols.len() == d {
            break;
        }
        let mut e = vec![rint(0); d];
        e[i] = rint(1);
        cols.push(e);
        if linalg::rank(&column_matrix(&cols, d)) < cols.len() {
            cols.pop();
        }
    }
    let frame_inv = column_matrix(&cols, d);
    let frame_rows = linalg::invert(&frame_inv)
        .ok_or_else(|| ExError::FrameFailure("frame completion is singular".into()))?;
    let frame = ProjMap::new(frame_rows)?;

    let mut entries = vec![rint(1); d];
    entries[1] = num::pow(rint(4), n as usize);
    entries[2] = num::pow(rint(2), n as usize);
    let map = ProjMap::diagonal(&entries)?;

    let push = map.compose(&frame);
    let rescaled: Vec<Vec<f64>> = domain
        .vertices()
        .iter()
        .map(|v| push.apply_lift(v.coords()).iter().map(rat_to_f64).collect())
        .collect();
    let gap = rescaled.iter().map(|u| corner_gap(u)).fold(0.0, f64::max);
    Ok(RescaleSequence { frame, n, map, rescaled, gap })
}
