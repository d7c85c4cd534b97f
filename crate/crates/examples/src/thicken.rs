//! Thickenings of the diagonal core with a certified sandwich: exact inner
//! radius by construction, sampled outer bound on the hull generators.

use hilbert_core::{FloatDomain, GeomError, HPoint, Rat};
use hilbert_core::rat::rint;
use hilbert_simplices::{closest_on_simplex, DescentOptions};

use crate::error::{ExError, ExResult};
use crate::product::ConeProduct;

/// Finite sample of the radius-R thickening of the core, `R = log(q) / 2`.
pub struct Thickening {
    q: Rat,
    radius: f64,
    core_points: Vec<HPoint>,
    samples: Vec<HPoint>,
}

impl Thickening {
    pub fn q(&self) -> &Rat {
        &self.q
    }

    /// Hilbert radius of the thickening.
    pub fn radius(&self) -> f64 {
        self.radius
    }

    /// Diagonal lattice points the samples were pushed from.
    pub fn core_points(&self) -> &[HPoint] {
        &self.core_points
    }

    /// Hull generators: every vertex of the sampled hull is one of these.
    pub fn samples(&self) -> &[HPoint] {
        &self.samples
    }

    /// Worst sampled distance from any hull generator to the core, by
    /// flat-coordinate minimization over the core simplex.
    pub fn outer_audit(&self, cp: &ConeProduct) -> ExResult<f64> {
        let core = cp.core_simplex()?;
        let dom = cp.product();
        let mut worst = 0.0f64;
        for y in &self.samples {
            let chart = dom.chart_point(y).ok_or(GeomError::NotInterior)?;
            let (_, d) = closest_on_simplex(&core, &chart, None, DescentOptions::default());
            worst = worst.max(d);
        }
        Ok(worst)
    }

    /// Worst sampled core distance over exact chart midpoints of sample
    /// pairs: hull points one convex-combination step beyond the samples.
    pub fn midpoint_audit(&self, cp: &ConeProduct) -> ExResult<f64> {
        let core = cp.core_simplex()?;
        let dom = cp.product();
        let half = Rat::new(1.into(), 2.into());
        let mut worst = 0.0f64;
        for (i, a) in self.samples.iter().enumerate() {
            for b in &self.samples[i + 1..] {
                let ca = dom.chart_coords(a).ok_or(GeomError::NotInterior)?;
                let cb = dom.chart_coords(b).ok_or(GeomError::NotInterior)?;
                let mid: Vec<Rat> =
                    ca.iter().zip(&cb).map(|(x, y)| (x + y) * &half).collect();
                let lift = dom.span().lift_from_coords(&mid);
                let m = HPoint::new(lift)?;
                let chart = dom.chart_point(&m).ok_or(GeomError::NotInterior)?;
                let (_, d) = closest_on_simplex(&core, &chart, None, DescentOptions::default());
                worst = worst.max(d);
            }
        }
        Ok(worst)
    }
}

/// Sample the thickening `{ y : H(y, core) <= R }` for `q = exp(2R) > 1`:
/// push every diagonal lattice point `[(x, x)]` to `[(q x, x)]` and
/// `[(x, q x)]`. The inner inclusion is certified exactly: the chord
/// `s -> [(s x, x)]` meets the boundary at `s = 0` and `s = infinity`, so
/// the cross ratio against the diagonal point is exactly `q`.
pub fn thicken(cp: &ConeProduct, q: &Rat, granularity: usize) -> ExResult<Thickening> {
    if q <= &rint(1) {
        return Err(ExError::Geometry(GeomError::OutOfRange(
            "thickening needs q > 1".into(),
        )));
    }
    if granularity == 0 {
        return Err(ExError::Geometry(GeomError::InvalidInput(
            "granularity must be at least 1".into(),
        )));
    }
    let base = cp.base();
    let k = base.vertex_count();
    let mut weights = vec![1usize; k];
    let mut core_points = Vec::new();
    loop {
        let lift: Vec<Rat> = (0..base.ambient_dim())
            .map(|c| {
                weights
                    .iter()
                    .zip(base.vertices())
                    .map(|(w, v)| &v.coords()[c] * rint(*w as i64))
                    .sum()
            })
            .collect();
        core_points.push(cp.star(&HPoint::new(lift)?));
        // Odometer over weight vectors in 1..=granularity.
        let mut slot = 0;
        loop {
            if slot == k {
                break;
            }
            weights[slot] += 1;
            if weights[slot] <= granularity {
                break;
            }
            weights[slot] = 1;
            slot += 1;
        }
        if slot == k {
            break;
        }
    }

    let dom = cp.product();
    let qinv = rint(1) / q;
    let mut samples = Vec::with_capacity(2 * core_points.len());
    for x in &core_points {
        // Split the doubled lift back into its base half.
        let d = base.ambient_dim();
        let half = HPoint::new(x.coords()[..d].to_vec())?;
        for s in [q, &qinv] {
            let y = cp.scaled_pair(&half, s)?;
            let len = dom.hilbert_distance(&y, x)?;
            if len.q() != Some(q) {
                return Err(ExError::Geometry(GeomError::InvariantTrap(
                    "pushed sample is not at exact distance R from its core point".into(),
                )));
            }
            samples.push(y);
        }
    }
    let radius = 0.5 * hilbert_core::rat::rat_to_f64(q).ln();
    Ok(Thickening { q: q.clone(), radius, core_points, samples })
}
