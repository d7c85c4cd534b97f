use std::sync::Arc;

use hilbert_core::{HPoint, PolytopeDomain};
use hilbert_simplices::{recognize, EmbeddedSimplex};

pub fn triangle() -> Arc<PolytopeDomain> {
    Arc::new(
        PolytopeDomain::new(vec![
            HPoint::from_ints(&[1, 0, 0]),
            HPoint::from_ints(&[0, 1, 0]),
            HPoint::from_ints(&[0, 0, 1]),
        ])
        .unwrap(),
    )
}

pub fn square() -> Arc<PolytopeDomain> {
    Arc::new(
        PolytopeDomain::new(vec![
            HPoint::from_ints(&[1, 1, 1]),
            HPoint::from_ints(&[1, -1, 1]),
            HPoint::from_ints(&[1, -1, -1]),
            HPoint::from_ints(&[1, 1, -1]),
        ])
        .unwrap(),
    )
}

pub fn simplex3() -> Arc<PolytopeDomain> {
    Arc::new(
        PolytopeDomain::new(vec![
            HPoint::from_ints(&[1, 0, 0, 0]),
            HPoint::from_ints(&[0, 1, 0, 0]),
            HPoint::from_ints(&[0, 0, 1, 0]),
            HPoint::from_ints(&[0, 0, 0, 1]),
        ])
        .unwrap(),
    )
}

/// The properly embedded triangle of the 3-simplex with vertices at two
/// domain vertices and the opposite edge midpoint.
pub fn triangle_in_simplex3(dom: &Arc<PolytopeDomain>) -> EmbeddedSimplex {
    recognize(
        dom,
        &[
            HPoint::from_ints(&[1, 0, 0, 0]),
            HPoint::from_ints(&[0, 1, 0, 0]),
            HPoint::from_ints(&[0, 0, 1, 1]),
        ],
    )
    .unwrap()
}
