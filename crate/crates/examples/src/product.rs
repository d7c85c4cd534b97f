//! The product construction: from a polytope domain with cone `C`, the
//! domain `{ [(v, w)] : v, w in C }` on doubled coordinates, together with
//! its diagonal core.

use std::sync::Arc;

use hilbert_core::{GeomError, GeomResult, HPoint, PolytopeDomain, Rat};
use hilbert_simplices::{recognize, EmbeddedSimplex, SimplexResult};

/// A polytope domain, its product domain, and the diagonal core.
pub struct ConeProduct {
    base: Arc<PolytopeDomain>,
    product: Arc<PolytopeDomain>,
    core: Vec<HPoint>,
}

impl ConeProduct {
    pub fn base(&self) -> &Arc<PolytopeDomain> {
        &self.base
    }

    pub fn product(&self) -> &Arc<PolytopeDomain> {
        &self.product
    }

    /// Diagonal images of the base vertices, spanning the core.
    pub fn core_vertices(&self) -> &[HPoint] {
        &self.core
    }

    /// Diagonal embedding `x -> [(x, x)]`. Independent of the chosen lift,
    /// so no normalization is needed; defined on all of projective space.
    pub fn star(&self, x: &HPoint) -> HPoint {
        let mut lift = x.coords().to_vec();
        lift.extend_from_slice(x.coords());
        HPoint::new(lift).expect("nonzero lift doubles to a nonzero lift")
    }

    /// The point `[(s * x, x)]` on the interval face through `star(x)`.
    /// Depends on `s` only, not on the lift of `x`.
    pub fn scaled_pair(&self, x: &HPoint, s: &Rat) -> GeomResult<HPoint> {
        if s <= &Rat::from_integer(0.into()) {
            return Err(GeomError::OutOfRange("pair scale must be positive".into()));
        }
        let mut lift: Vec<Rat> = x.coords().iter().map(|c| c * s).collect();
        lift.extend_from_slice(x.coords());
        HPoint::new(lift)
    }

    /// Product-domain vertex `[(v_i, 0)]`.
    pub fn left_vertex(&self, i: usize) -> HPoint {
        let v = self.base.vertices()[i].coords();
        let mut lift = v.to_vec();
        lift.extend(std::iter::repeat(Rat::from_integer(0.into())).take(v.len()));
        HPoint::new(lift).expect("vertex lift is nonzero")
    }

    /// Product-domain vertex `[(0, v_i)]`.
    pub fn right_vertex(&self, i: usize) -> HPoint {
        let v = self.base.vertices()[i].coords();
        let mut lift: Vec<Rat> =
            std::iter::repeat(Rat::from_integer(0.into())).take(v.len()).collect();
        lift.extend_from_slice(v);
        HPoint::new(lift).expect("vertex lift is nonzero")
    }

    /// The core as a properly embedded simplex (requires a simplex base).
    pub fn core_simplex(&self) -> SimplexResult<EmbeddedSimplex> {
        recognize(&self.product, &self.core)
    }
}

/// Build the product domain of a polytope. Its vertex set is exactly
/// `{(v, 0)} ∪ {(0, v)}` over the base vertices (the extreme rays of the
/// product cone), which keeps the result polytopal.
pub fn product_domain(base: &Arc<PolytopeDomain>) -> GeomResult<ConeProduct> {
    let d = base.ambient_dim();
    let zero = vec![Rat::from_integer(0.into()); d];
    let mut verts = Vec::with_capacity(2 * base.vertex_count());
    for v in base.vertices() {
        let mut lift = v.coords().to_vec();
        lift.extend_from_slice(&zero);
        verts.push(HPoint::new(lift)?);
    }
    for v in base.vertices() {
        let mut lift = zero.clone();
        lift.extend_from_slice(v.coords());
        verts.push(HPoint::new(lift)?);
    }
    let product = Arc::new(PolytopeDomain::new(verts)?);
    let core = base
        .vertices()
        .iter()
        .map(|v| {
            let mut lift = v.coords().to_vec();
            lift.extend_from_slice(v.coords());
            HPoint::new(lift).expect("vertex lift is nonzero")
        })
        .collect();
    Ok(ConeProduct { base: base.clone(), product, core })
}
