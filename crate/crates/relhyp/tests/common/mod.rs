// Shared fixtures; each test binary compiles its own copy.
#![allow(dead_code)]

use std::sync::Arc;

use hilbert_core::{HPoint, PolytopeDomain, QuadricDomain};
use hilbert_simplices::{recognize, EmbeddedSimplex};

pub fn triangle() -> Arc<PolytopeDomain> {
    let verts = vec![
        HPoint::from_ints(&[1, 0, 0]),
        HPoint::from_ints(&[0, 1, 0]),
        HPoint::from_ints(&[0, 0, 1]),
    ];
    Arc::new(PolytopeDomain::new(verts).expect("triangle domain"))
}

pub fn square() -> Arc<PolytopeDomain> {
    let verts = vec![
        HPoint::from_ints(&[1, 1, 1]),
        HPoint::from_ints(&[1, -1, 1]),
        HPoint::from_ints(&[1, -1, -1]),
        HPoint::from_ints(&[1, 1, -1]),
    ];
    Arc::new(PolytopeDomain::new(verts).expect("square domain"))
}

pub fn klein_disc() -> QuadricDomain {
    QuadricDomain::klein_ball(2)
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

/// Properly embedded line in the triangle joining two edge midpoints.
pub fn midpoint_line(dom: &Arc<PolytopeDomain>) -> EmbeddedSimplex {
    recognize(dom, &[HPoint::from_ints(&[1, 1, 0]), HPoint::from_ints(&[1, 0, 1])])
        .expect("midpoint line")
}

/// Horizontal axis of the square.
pub fn square_axis(dom: &Arc<PolytopeDomain>) -> EmbeddedSimplex {
    recognize(dom, &[HPoint::from_ints(&[1, 1, 0]), HPoint::from_ints(&[1, -1, 0])])
        .expect("square axis")
}

/// Horizontal line of the square at chart height `num / den`.
pub fn square_horizontal(dom: &Arc<PolytopeDomain>, num: i64, den: i64) -> EmbeddedSimplex {
    recognize(
        dom,
        &[HPoint::from_ints(&[den, den, num]), HPoint::from_ints(&[den, -den, num])],
    )
    .expect("horizontal line")
}

/// Diagonal of the square through the center.
pub fn square_diagonal(dom: &Arc<PolytopeDomain>, flip: bool) -> EmbeddedSimplex {
    let (a, b) = if flip {
        (HPoint::from_ints(&[1, -1, 1]), HPoint::from_ints(&[1, 1, -1]))
    } else {
        (HPoint::from_ints(&[1, 1, 1]), HPoint::from_ints(&[1, -1, -1]))
    };
    recognize(dom, &[a, b]).expect("diagonal")
}

/// Klein-disc chart corners of the equilateral triangle with hyperbolic
/// circumradius `rho`, vertices at angles 90, 210 and 330 degrees.
pub fn klein_triangle(rho: f64) -> [Vec<f64>; 3] {
    let t = rho.tanh();
    let angles = [90.0f64, 210.0, 330.0];
    angles.map(|deg| {
        let a = deg.to_radians();
        vec![t * a.cos(), t * a.sin()]
    })
}

/// Chart corners of the equilateral log-coordinate triangle of side `m`
/// inside the 2-simplex domain.
pub fn flat_triangle(dom: &Arc<PolytopeDomain>, m: f64) -> [Vec<f64>; 3] {
    let s = full_triangle(dom);
    [
        s.chart_from_flat_f64(&[m, 0.0]),
        s.chart_from_flat_f64(&[0.0, m]),
        s.chart_from_flat_f64(&[-m, -m]),
    ]
}
