mod common;

use common::{simplex3, square, triangle};
use hilbert_core::{GeomError, HPoint, Location};
use hilbert_simplices::{recognize, SimplexError};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn accepts_vertex_vertex_midpoint_triangle() {
    let dom = simplex3();
    let s = common::triangle_in_simplex3(&dom);
    assert_eq!(s.dim(), 2);
    // Three pairwise distinct vertex faces: two domain vertices, one edge.
    let faces = s.vertex_faces();
    assert_ne!(faces[0], faces[1]);
    assert_ne!(faces[0], faces[2]);
    assert_ne!(faces[1], faces[2]);
    assert_eq!(dom.face(faces[2]).dim, 1);
}

#[test]
fn accepts_full_simplex_of_simplex_domains() {
    for dom in [triangle(), simplex3()] {
        let s = recognize(&dom, &dom.vertices().to_vec()).unwrap();
        assert_eq!(s.dim(), dom.dim());
    }
}

#[test]
fn facet_triple_has_empty_interior() {
    let dom = simplex3();
    let verts = vec![
        HPoint::from_ints(&[1, 0, 0, 0]),
        HPoint::from_ints(&[0, 1, 0, 0]),
        HPoint::from_ints(&[0, 0, 1, 0]),
    ];
    assert!(matches!(recognize(&dom, &verts), Err(SimplexError::EmptyInterior)));
}

#[test]
fn dependent_vertices_rejected() {
    let dom = simplex3();
    let verts = vec![
        HPoint::from_ints(&[1, 0, 0, 0]),
        HPoint::from_ints(&[0, 1, 0, 0]),
        HPoint::from_ints(&[1, 1, 0, 0]),
    ];
    assert!(matches!(recognize(&dom, &verts), Err(SimplexError::DependentVertices)));
}

#[test]
fn interior_vertex_rejected() {
    let dom = simplex3();
    let verts = vec![HPoint::from_ints(&[1, 0, 0, 0]), HPoint::from_ints(&[1, 1, 1, 1])];
    assert!(matches!(recognize(&dom, &verts), Err(SimplexError::InteriorLeak)));
}

#[test]
fn outside_vertex_rejected() {
    let dom = simplex3();
    let verts = vec![HPoint::from_ints(&[1, 0, 0, 0]), HPoint::from_ints(&[0, -1, 1, 1])];
    assert!(matches!(
        recognize(&dom, &verts),
        Err(SimplexError::Geometry(GeomError::OutOfRange(_)))
    ));
}

#[test]
fn single_vertex_rejected() {
    let dom = simplex3();
    let verts = vec![HPoint::from_ints(&[1, 0, 0, 0])];
    assert!(matches!(
        recognize(&dom, &verts),
        Err(SimplexError::Geometry(GeomError::InvalidInput(_)))
    ));
}

#[test]
fn midpoint_path_leaks_through_interior() {
    // Three consecutive edge midpoints of the square: the segment between
    // the two outer midpoints crosses the interior, a drop-one failure.
    let dom = square();
    let verts = vec![
        HPoint::from_ints(&[2, 0, 2]),
        HPoint::from_ints(&[2, -2, 0]),
        HPoint::from_ints(&[2, 0, -2]),
    ];
    assert!(matches!(recognize(&dom, &verts), Err(SimplexError::InteriorLeak)));
}

#[test]
fn square_diagonal_valid_edge_pair_not() {
    let dom = square();
    let diag = vec![HPoint::from_ints(&[1, 1, 1]), HPoint::from_ints(&[1, -1, -1])];
    assert_eq!(recognize(&dom, &diag).unwrap().dim(), 1);
    let edge = vec![HPoint::from_ints(&[1, 1, 1]), HPoint::from_ints(&[1, -1, 1])];
    assert!(matches!(recognize(&dom, &edge), Err(SimplexError::EmptyInterior)));
}

#[test]
fn simplex_faces_match_ambient_faces() {
    // For a properly embedded simplex, the closed simplex face of a hull
    // point equals the trace of the ambient closed face: the support of the
    // weights recovers exactly the vertices whose active set contains the
    // point's active set.
    let dom = simplex3();
    let s = common::triangle_in_simplex3(&dom);
    let mut rng = ChaCha8Rng::seed_from_u64(71);
    for _ in 0..200 {
        let mut support: Vec<usize> = (0..3).filter(|_| rng.gen_bool(0.6)).collect();
        if support.is_empty() {
            support.push(rng.gen_range(0..3));
        }
        let mut weights = vec![hilbert_core::Rat::from_integer(0.into()); 3];
        for &j in &support {
            let w: i64 = rng.gen_range(1..=9);
            weights[j] = hilbert_core::Rat::from_integer(w.into());
        }
        let mut lift = vec![hilbert_core::Rat::from_integer(0.into()); 4];
        for (j, w) in weights.iter().enumerate() {
            for (o, c) in lift.iter_mut().zip(&s.lifts()[j]) {
                *o += w * c;
            }
        }
        let x = HPoint::new(lift).unwrap();
        let ambient_active = match dom.locate(&x) {
            Location::Interior => 0,
            Location::Boundary(f) => dom.face(f).active,
            Location::Outside => panic!("hull point left the closure"),
        };
        let trace: Vec<usize> = (0..3)
            .filter(|&j| s.active_mask(j) & ambient_active == ambient_active)
            .collect();
        if support.len() == 3 {
            assert_eq!(ambient_active, 0);
            assert_eq!(trace, vec![0, 1, 2]);
        } else {
            assert_eq!(trace, support);
        }
    }
}
