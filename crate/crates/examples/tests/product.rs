mod common;

use hilbert_core::rat::{rat, rint};
use hilbert_core::{GeomError, HPoint, Location, ProjMap};
use hilbert_examples::product_domain;

/// The product of the triangle cone with itself is the positive orthant of
/// six-space, so its projectivization must come out as the full 5-simplex.
/// The constructor validates the vertex list, so success certifies the
/// extreme-ray computation.
#[test]
fn triangle_product_is_the_five_simplex() {
    let tri = common::triangle();
    let cp = product_domain(&tri).unwrap();
    let prod = cp.product();
    assert_eq!(prod.vertex_count(), 6);
    assert_eq!(prod.dim(), 5);
    assert_eq!(prod.facet_count(), 6);
    for (i, v) in prod.vertices().iter().enumerate() {
        let mut e = [0i64; 6];
        e[i] = 1;
        assert!(v.proj_eq(&HPoint::from_ints(&e)), "vertex order is left then right");
    }
}

#[test]
fn square_product_has_eight_extreme_rays() {
    let sq = common::square();
    let cp = product_domain(&sq).unwrap();
    assert_eq!(cp.product().vertex_count(), 8);
    assert_eq!(cp.product().dim(), 5);
}

/// Face law at an extreme point: the diagonal image of a base vertex lies
/// on the open segment between its left and right copies, a face of
/// projective dimension one.
#[test]
fn star_of_a_vertex_carries_a_one_dimensional_face() {
    let tri = common::triangle();
    let cp = product_domain(&tri).unwrap();
    let n = tri.vertex_count();
    for (i, v) in tri.vertices().iter().enumerate() {
        let sv = cp.star(v);
        let Location::Boundary(f) = cp.product().locate(&sv) else {
            panic!("star of a vertex is a boundary point");
        };
        assert_eq!(cp.product().face(f).dim, 1);
        assert_eq!(cp.product().face_vertex_indices(f), vec![i, n + i]);
        assert!(cp.left_vertex(i).proj_eq(&cp.product().vertices()[i]));
        assert!(cp.right_vertex(i).proj_eq(&cp.product().vertices()[n + i]));
    }
}

#[test]
fn star_ignores_the_choice_of_lift() {
    let tri = common::triangle();
    let cp = product_domain(&tri).unwrap();
    let x = HPoint::from_ints(&[5, 2, 1]);
    let scaled = HPoint::new(x.coords().iter().map(|c| c * rat(7, 3)).collect()).unwrap();
    assert!(cp.star(&x).proj_eq(&cp.star(&scaled)));
}

/// The diagonal embedding is isometric onto the core: distances agree as
/// exact cross ratios, not merely to float tolerance.
#[test]
fn core_is_isometrically_embedded() {
    let tri = common::triangle();
    let cp = product_domain(&tri).unwrap();
    let pts = [
        HPoint::from_ints(&[1, 1, 1]),
        HPoint::from_ints(&[5, 2, 1]),
        HPoint::from_ints(&[3, 4, 7]),
        HPoint::from_ints(&[10, 1, 9]),
    ];
    for x in &pts {
        for y in &pts {
            let base = tri.hilbert_distance(x, y).unwrap();
            let prod = cp.product().hilbert_distance(&cp.star(x), &cp.star(y)).unwrap();
            assert!(base.q().is_some(), "polytope distances are exact");
            assert_eq!(base.q(), prod.q());
        }
    }
}

/// A diagonal map acting on the base acts diagonally-in-blocks on the
/// product, preserving both the product domain and the core pointwise
/// up to the expected permutation.
#[test]
fn diagonal_action_preserves_product_and_core() {
    let tri = common::triangle();
    let cp = product_domain(&tri).unwrap();
    let g = ProjMap::diagonal(&[rint(9), rint(3), rint(1)]).unwrap();
    let gg = ProjMap::diagonal(&[rint(9), rint(3), rint(1), rint(9), rint(3), rint(1)]).unwrap();
    // Vertices map to vertices, so the hull is preserved.
    for v in cp.product().vertices() {
        let image = gg.apply(v);
        assert!(cp.product().vertices().iter().any(|w| w.proj_eq(&image)));
    }
    // The diagonal square commutes with the star embedding.
    for x in [HPoint::from_ints(&[1, 1, 1]), HPoint::from_ints(&[2, 5, 3])] {
        assert!(gg.apply(&cp.star(&x)).proj_eq(&cp.star(&g.apply(&x))));
    }
}

#[test]
fn scaled_pair_rejects_nonpositive_scales() {
    let tri = common::triangle();
    let cp = product_domain(&tri).unwrap();
    let x = HPoint::from_ints(&[1, 1, 1]);
    for s in [rint(0), rint(-2)] {
        match cp.scaled_pair(&x, &s) {
            Err(GeomError::OutOfRange(_)) => {}
            other => panic!("expected an out-of-range scale, got {other:?}"),
        }
    }
    assert!(cp.scaled_pair(&x, &rint(1)).unwrap().proj_eq(&cp.star(&x)));
}

#[test]
fn core_recognizes_as_a_properly_embedded_triangle() {
    let tri = common::triangle();
    let cp = product_domain(&tri).unwrap();
    let core = cp.core_simplex().unwrap();
    assert_eq!(core.dim(), 2);
    for (cv, bv) in core.vertices().iter().zip(tri.vertices()) {
        assert!(cv.proj_eq(&cp.star(bv)));
    }
}
