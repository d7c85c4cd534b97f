//! Standard domains: simplices, the square, and Klein balls.

use std::sync::Arc;

use hilbert_core::{FloatDomain, GeomError, GeomResult, HPoint, PolytopeDomain, QuadricDomain};

/// Requested standard domain.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StandardKind {
    /// The open simplex spanned by the first `d` coordinate directions
    /// (so `Simplex(3)` is the triangle).
    Simplex(usize),
    /// Alias for `Simplex(2)`.
    Interval,
    /// The square with vertices `[1, ±1, ±1]`.
    Square,
    /// The Klein model of hyperbolic `d`-space.
    KleinBall(usize),
}

/// A constructed standard domain. Polytopes carry exact data; quadrics are
/// float-mode only.
#[derive(Clone)]
pub enum StandardDomain {
    Polytope(Arc<PolytopeDomain>),
    Quadric(Arc<QuadricDomain>),
}

impl StandardDomain {
    pub fn as_polytope(&self) -> Option<&Arc<PolytopeDomain>> {
        match self {
            StandardDomain::Polytope(p) => Some(p),
            StandardDomain::Quadric(_) => None,
        }
    }

    pub fn float(&self) -> &dyn FloatDomain {
        match self {
            StandardDomain::Polytope(p) => p.as_ref(),
            StandardDomain::Quadric(q) => q.as_ref(),
        }
    }
}

/// Build a validated standard domain.
pub fn make_standard(kind: StandardKind) -> GeomResult<StandardDomain> {
    match kind {
        StandardKind::Simplex(d) => {
            if d < 2 {
                return Err(GeomError::InvalidInput(format!(
                    "a simplex domain needs at least 2 vertices, got {d}"
                )));
            }
            let verts: Vec<HPoint> = (0..d)
                .map(|i| {
                    let mut c = vec![0i64; d];
                    c[i] = 1;
                    HPoint::from_ints(&c)
                })
                .collect();
            Ok(StandardDomain::Polytope(Arc::new(PolytopeDomain::new(verts)?)))
        }
        StandardKind::Interval => make_standard(StandardKind::Simplex(2)),
        StandardKind::Square => {
            let verts = vec![
                HPoint::from_ints(&[1, 1, 1]),
                HPoint::from_ints(&[1, -1, 1]),
                HPoint::from_ints(&[1, -1, -1]),
                HPoint::from_ints(&[1, 1, -1]),
            ];
            Ok(StandardDomain::Polytope(Arc::new(PolytopeDomain::new(verts)?)))
        }
        StandardKind::KleinBall(d) => {
            if d < 2 {
                return Err(GeomError::InvalidInput(format!(
                    "a Klein ball needs dimension at least 2, got {d}"
                )));
            }
            Ok(StandardDomain::Quadric(Arc::new(QuadricDomain::klein_ball(d))))
        }
    }
}
