// Each integration test binary compiles its own copy; not all use every fixture.
#![allow(dead_code)]

use std::sync::Arc;

use hilbert_core::{HPoint, PolytopeDomain};
use hilbert_simplices::{recognize, EmbeddedSimplex};

/// The standard 2-simplex domain in R^3.
pub fn triangle() -> Arc<PolytopeDomain> {
    let verts = vec![
        HPoint::from_ints(&[1, 0, 0]),
        HPoint::from_ints(&[0, 1, 0]),
        HPoint::from_ints(&[0, 0, 1]),
    ];
    Arc::new(PolytopeDomain::new(verts).expect("triangle domain"))
}

/// The standard 3-simplex domain in R^4.
pub fn simplex3() -> Arc<PolytopeDomain> {
    let verts = vec![
        HPoint::from_ints(&[1, 0, 0, 0]),
        HPoint::from_ints(&[0, 1, 0, 0]),
        HPoint::from_ints(&[0, 0, 1, 0]),
        HPoint::from_ints(&[0, 0, 0, 1]),
    ];
    Arc::new(PolytopeDomain::new(verts).expect("3-simplex domain"))
}

/// The square domain with vertices [1, ±1, ±1].
pub fn square() -> Arc<PolytopeDomain> {
    let verts = vec![
        HPoint::from_ints(&[1, 1, 1]),
        HPoint::from_ints(&[1, -1, 1]),
        HPoint::from_ints(&[1, -1, -1]),
        HPoint::from_ints(&[1, 1, -1]),
    ];
    Arc::new(PolytopeDomain::new(verts).expect("square domain"))
}

/// The whole triangle as a properly embedded 2-simplex of itself.
pub fn full_triangle(dom: &Arc<PolytopeDomain>) -> EmbeddedSimplex {
    recognize(
        dom,
        &[
            HPoint::from_ints(&[1, 0, 0]),
            HPoint::from_ints(&[0, 1, 0]),
            HPoint::from_ints(&[0, 0, 1]),
        ],
    )
    .expect("full triangle")
}

/// Properly embedded triangle (e1, e2, e3 + e4) in the 3-simplex: one vertex
/// sits in the open edge between the last two domain vertices, so its edge
/// [e1, e2] lies in two facets and the supporting choices multiply.
pub fn mixed_triangle(dom: &Arc<PolytopeDomain>) -> EmbeddedSimplex {
    recognize(
        dom,
        &[
            HPoint::from_ints(&[1, 0, 0, 0]),
            HPoint::from_ints(&[0, 1, 0, 0]),
            HPoint::from_ints(&[0, 0, 1, 1]),
        ],
    )
    .expect("mixed triangle")
}

/// Properly embedded line in the triangle joining two edge midpoints.
pub fn midpoint_line(dom: &Arc<PolytopeDomain>) -> EmbeddedSimplex {
    recognize(dom, &[HPoint::from_ints(&[1, 1, 0]), HPoint::from_ints(&[1, 0, 1])])
        .expect("midpoint line")
}

/// The horizontal axis of the square: a properly embedded line between the
/// midpoints of the two vertical edges.
pub fn square_axis(dom: &Arc<PolytopeDomain>) -> EmbeddedSimplex {
    recognize(dom, &[HPoint::from_ints(&[1, 1, 0]), HPoint::from_ints(&[1, -1, 0])])
        .expect("square axis")
}
