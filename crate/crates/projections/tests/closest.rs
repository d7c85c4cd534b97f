mod common;

use hilbert_core::{HPoint, ProjMap};
use hilbert_projections::{closest_point, grid_oracle_radius, ProjError};

/// Matching tolerance between the descent radius and the hierarchical grid
/// oracle, which stops at Hilbert step 1e-3.
const ORACLE_TOL: f64 = 2e-3;

#[test]
fn queries_on_the_simplex_return_themselves() {
    let dom = common::simplex3();
    let s = common::mixed_triangle(&dom);
    let x = s.barycenter();
    let cp = closest_point(&dom, &s, &x, 1e-10).expect("closest point");
    assert!(cp.point.proj_eq(&x));
    assert_eq!(cp.radius, 0.0);
    assert_eq!(cp.flat_diameter, 0.0);
}

#[test]
fn symmetric_query_matches_the_grid_oracle() {
    // The coordinate swap x2 <-> x3 preserves the domain, fixes the line's
    // endpoints, and fixes the query, so the minimizer set is symmetric.
    let dom = common::triangle();
    let s = common::midpoint_line(&dom);
    let g = ProjMap::permutation(&[0, 2, 1]).expect("swap");
    assert!(dom.preserved_by(&g));
    for v in s.vertices() {
        assert!(s.vertices().iter().any(|w| g.apply(v).proj_eq(w)));
    }
    let x = HPoint::from_ints(&[5, 1, 1]);
    assert!(g.apply(&x).proj_eq(&x));

    let cp = closest_point(&dom, &s, &x, 1e-10).expect("closest point");
    let oracle = grid_oracle_radius(&dom, &s, &x, 8.0, 1e-3).expect("oracle");
    assert!(
        (cp.radius - oracle).abs() <= ORACLE_TOL,
        "descent {} vs oracle {}",
        cp.radius,
        oracle
    );
    // The returned point is an exact member of the open simplex.
    assert!(s.barycentric(&cp.point).is_ok());
}

#[test]
fn off_axis_query_in_the_square_matches_the_grid_oracle() {
    let dom = common::square();
    let s = common::square_axis(&dom);
    let x = HPoint::from_ints(&[10, 3, 5]);
    let cp = closest_point(&dom, &s, &x, 1e-10).expect("closest point");
    let oracle = grid_oracle_radius(&dom, &s, &x, 8.0, 1e-3).expect("oracle");
    assert!((cp.radius - oracle).abs() <= ORACLE_TOL);
}

#[test]
fn radius_is_equivariant_under_domain_symmetries() {
    // The coordinate swap x2 <-> x3 on the 3-simplex carries the mixed
    // triangle's edge midpoints around: it maps the line between the two
    // edge midpoints to a different properly embedded line.
    let dom = common::simplex3();
    let s = hilbert_simplices::recognize(
        &dom,
        &[HPoint::from_ints(&[1, 1, 0, 0]), HPoint::from_ints(&[0, 0, 1, 1])],
    )
    .expect("line");
    let g = ProjMap::permutation(&[0, 2, 1, 3]).expect("swap x2 x3");
    assert!(dom.preserved_by(&g));
    let gs = hilbert_simplices::recognize(
        &dom,
        &[g.apply(&s.vertices()[0]), g.apply(&s.vertices()[1])],
    )
    .expect("image line");

    let x = HPoint::from_ints(&[7, 1, 2, 3]);
    let gx = g.apply(&x);
    let r = closest_point(&dom, &s, &x, 1e-10).expect("closest").radius;
    let gr = closest_point(&dom, &gs, &gx, 1e-10).expect("closest").radius;
    assert!((r - gr).abs() <= 1e-6, "radius {} vs transported {}", r, gr);
}

#[test]
fn flat_minimizer_sets_are_reported_not_hidden() {
    // The square is a metric product of two intervals, so the distance from
    // an off-axis point to the horizontal axis is the vertical displacement
    // wherever the horizontal displacement is smaller: the minimizer is a
    // genuine segment and its flat extent is about twice the radius.
    let dom = common::square();
    let s = common::square_axis(&dom);
    let x = HPoint::from_ints(&[10, 3, 5]);
    let cp = closest_point(&dom, &s, &x, 1e-10).expect("closest point");
    assert!(cp.flat_diameter > 0.5 * cp.radius, "flat diameter {}", cp.flat_diameter);
    assert!(cp.flat_diameter <= 2.0 * cp.radius + 1e-3);

    // In the triangle the hexagonal unit ball has no edge parallel to the
    // midpoint line, so the same query style has an essentially unique
    // minimizer.
    let dom = common::triangle();
    let s = common::midpoint_line(&dom);
    let x = HPoint::from_ints(&[5, 1, 1]);
    let cp = closest_point(&dom, &s, &x, 1e-10).expect("closest point");
    assert!(cp.flat_diameter < 1e-2, "flat diameter {}", cp.flat_diameter);
}

#[test]
fn zero_tolerance_cannot_be_reached() {
    let dom = common::triangle();
    let s = common::midpoint_line(&dom);
    let x = HPoint::from_ints(&[5, 1, 1]);
    match closest_point(&dom, &s, &x, 0.0) {
        Err(ProjError::ToleranceNotReached { passes }) => assert!(passes > 0),
        other => panic!("expected tolerance failure, got {:?}", other.map(|c| c.radius)),
    }
}
