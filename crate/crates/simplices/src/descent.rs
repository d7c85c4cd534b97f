//! Floating-point search utilities on embedded simplices.
//!
//! The flat coordinates of a properly embedded simplex identify it with
//! R^k, and the restricted metric is the sup of finitely many affine
//! functionals there, so distance-to-a-point is convex in the flat chart.
//! Coordinate descent with a golden-section line search converges to the
//! global minimum; everything here is deterministic for fixed inputs.

use hilbert_core::floatgeo::golden_min;
use hilbert_core::FloatDomain;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::embedded::EmbeddedSimplex;

/// Tuning for the flat-chart coordinate descent.
#[derive(Clone, Copy, Debug)]
pub struct DescentOptions {
    /// Stop once a full pass improves the objective by less than this.
    pub tol: f64,
    /// Hard cap on coordinate passes.
    pub max_passes: usize,
    /// Initial half-width of the line-search bracket in flat coordinates.
    pub bracket: f64,
}

impl Default for DescentOptions {
    fn default() -> Self {
        DescentOptions { tol: 1e-10, max_passes: 120, bracket: 4.0 }
    }
}

fn objective(s: &EmbeddedSimplex, flat: &[f64], target_chart: &[f64]) -> f64 {
    let p = s.chart_from_flat_f64(flat);
    s.domain().dist(&p, target_chart)
}

/// Minimises the ambient Hilbert distance from `target_chart` (bounded-chart
/// coordinates of an interior point) over the open simplex `s`.
///
/// Returns the argmin in flat coordinates and the attained distance. The
/// optional `warm` start lets samplers walk along a path cheaply.
pub fn closest_on_simplex(
    s: &EmbeddedSimplex,
    target_chart: &[f64],
    warm: Option<&[f64]>,
    opts: DescentOptions,
) -> (Vec<f64>, f64) {
    let k = s.dim();
    if k == 0 {
        return (Vec::new(), objective(s, &[], target_chart));
    }
    let starts: Vec<Vec<f64>> = match warm {
        Some(w) => vec![w.to_vec()],
        None => vec![
            vec![0.0; k],
            vec![1.0; k],
            vec![-1.0; k],
            (0..k).map(|i| if i % 2 == 0 { 2.0 } else { -2.0 }).collect(),
        ],
    };
    let mut best: Option<(Vec<f64>, f64)> = None;
    for start in starts {
        let mut u = start;
        let mut val = objective(s, &u, target_chart);
        for _ in 0..opts.max_passes {
            let before = val;
            for i in 0..k {
                let mut lo = u[i] - opts.bracket;
                let mut hi = u[i] + opts.bracket;
                // Expand the bracket while the minimum sits on its edge.
                for _ in 0..8 {
                    let (t, f) = golden_min(
                        &mut |t| {
                            let mut v = u.clone();
                            v[i] = t;
                            objective(s, &v, target_chart)
                        },
                        lo,
                        hi,
                        1e-12,
                    );
                    let width = hi - lo;
                    if t - lo < 0.05 * width {
                        lo -= width;
                        continue;
                    }
                    if hi - t < 0.05 * width {
                        hi += width;
                        continue;
                    }
                    if f < val {
                        val = f;
                        u[i] = t;
                    }
                    break;
                }
            }
            if before - val < opts.tol {
                break;
            }
        }
        if best.as_ref().is_none_or(|(_, b)| val < *b) {
            best = Some((u, val));
        }
    }
    best.expect("at least one start")
}

/// Monte-Carlo lower estimate of the directed Hausdorff distance from `s1`
/// to `s2`: the largest distance from a sampled point of `s1` to `s2`.
pub fn directed_hausdorff_sample(
    s1: &EmbeddedSimplex,
    s2: &EmbeddedSimplex,
    samples: usize,
    radius: f64,
    seed: u64,
) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = s1.dim();
    let mut worst = 0.0f64;
    let mut warm: Option<Vec<f64>> = None;
    for _ in 0..samples {
        let flat: Vec<f64> = (0..k).map(|_| rng.gen_range(-radius..=radius)).collect();
        let p = s1.chart_from_flat_f64(&flat);
        let (arg, d) = closest_on_simplex(s2, &p, warm.as_deref(), DescentOptions::default());
        // A warm start may miss the basin after a long jump; re-solve cold
        // whenever it looks worse than the trivial comparison point.
        let (arg, d) = if warm.is_some() {
            let (ca, cd) = closest_on_simplex(s2, &p, None, DescentOptions::default());
            if cd < d {
                (ca, cd)
            } else {
                (arg, d)
            }
        } else {
            (arg, d)
        };
        warm = Some(arg);
        if d > worst {
            worst = d;
        }
    }
    worst
}

/// Symmetric sampled Hausdorff estimate between two simplices of the same
/// ambient domain. Always a lower bound for the true Hausdorff distance.
pub fn hausdorff_sample(
    s1: &EmbeddedSimplex,
    s2: &EmbeddedSimplex,
    samples: usize,
    radius: f64,
    seed: u64,
) -> f64 {
    let a = directed_hausdorff_sample(s1, s2, samples, radius, seed);
    let b = directed_hausdorff_sample(s2, s1, samples, radius, seed ^ 0x9e37_79b9_7f4a_7c15);
    a.max(b)
}
