mod common;

use hilbert_core::rat::rint;
use hilbert_core::{HPoint, ProjMap, Rat};
use hilbert_examples::{orbit_sample, product_domain, ExError, GroupGens, LIMIT_EPS};

fn diag3(a: i64, b: i64, c: i64) -> ProjMap {
    ProjMap::diagonal(&[rint(a), rint(b), rint(c)]).unwrap()
}

/// Doubles a diagonal map into its block action on the product domain.
fn doubled(g: &ProjMap) -> ProjMap {
    let mut entries: Vec<Rat> =
        g.matrix().iter().enumerate().map(|(i, row)| row[i].clone()).collect();
    let copy = entries.clone();
    entries.extend(copy);
    ProjMap::diagonal(&entries).unwrap()
}

#[test]
fn generators_must_permute_the_vertex_set() {
    let tri = common::triangle();
    assert!(GroupGens::new(&tri, vec![diag3(9, 3, 1), diag3(1, 9, 3)], 16).is_ok());
    let shear = ProjMap::from_int_rows(&[&[1, 1, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap();
    match GroupGens::new(&tri, vec![shear], 16) {
        Err(ExError::NonPreserving(_)) => {}
        _ => panic!("a shear does not preserve the triangle"),
    }
}

#[test]
fn zero_word_budget_keeps_only_the_basepoint() {
    let tri = common::triangle();
    let gens = GroupGens::new(&tri, vec![diag3(9, 3, 1), diag3(1, 9, 3)], 16).unwrap();
    let bary = HPoint::from_ints(&[1, 1, 1]);
    let os = orbit_sample(&tri, &gens, &bary, 0, LIMIT_EPS).unwrap();
    assert_eq!(os.orbit.len(), 1);
    assert!(os.orbit[0].proj_eq(&bary));
    assert!(os.limit.is_empty());
}

/// The rank-two diagonal lattice on the triangle: words of length at most
/// 8 in g, h and their inverses reach exactly the L1 ball of exponent
/// pairs, and the orbit creeps within the reporting threshold of every
/// vertex of the triangle.
#[test]
fn diagonal_lattice_orbit_reaches_all_three_vertices() {
    let tri = common::triangle();
    let gens = GroupGens::new(&tri, vec![diag3(9, 3, 1), diag3(1, 9, 3)], 16).unwrap();
    let bary = HPoint::from_ints(&[1, 1, 1]);
    let os = orbit_sample(&tri, &gens, &bary, 8, LIMIT_EPS).unwrap();
    // Distinct exponent pairs give distinct points, so the orbit size is
    // the L1 ball count 1 + sum_{k=1..8} 4k.
    assert_eq!(os.orbit.len(), 145);
    assert_eq!(os.limit.len(), 105);
    assert_eq!(os.core_hull.len(), os.limit.len());
    let mut vertex_hits = [false; 3];
    for l in &os.limit {
        let verts = tri.face_vertex_indices(l.face);
        assert!(l.gap <= LIMIT_EPS);
        if verts.len() == 1 {
            vertex_hits[verts[0]] = true;
        }
    }
    assert_eq!(vertex_hits, [true; 3], "every vertex face must be reached");
}

/// The doubled action on the product domain: limit samples land in the
/// pair faces spanned by the left and right copy of each base vertex.
#[test]
fn doubled_action_reaches_the_pair_faces() {
    let tri = common::triangle();
    let cp = product_domain(&tri).unwrap();
    let prod = cp.product().clone();
    let g = diag3(9, 3, 1);
    let h = diag3(1, 9, 3);
    let gens = GroupGens::new(&prod, vec![doubled(&g), doubled(&h)], 16).unwrap();
    let base = cp.scaled_pair(&HPoint::from_ints(&[1, 1, 1]), &rint(2)).unwrap();
    let os = orbit_sample(&prod, &gens, &base, 8, LIMIT_EPS).unwrap();
    assert_eq!(os.orbit.len(), 145);
    let faces: Vec<Vec<usize>> =
        os.limit.iter().map(|l| prod.face_vertex_indices(l.face)).collect();
    for i in 0..3 {
        assert!(
            faces.iter().any(|f| *f == vec![i, i + 3]),
            "pair face {i} not reached"
        );
    }
}

#[test]
fn interior_basepoints_are_required() {
    let tri = common::triangle();
    let gens = GroupGens::new(&tri, vec![diag3(9, 3, 1)], 16).unwrap();
    let edge = HPoint::from_ints(&[1, 1, 0]);
    assert!(orbit_sample(&tri, &gens, &edge, 4, LIMIT_EPS).is_err());
    let bary = HPoint::from_ints(&[1, 1, 1]);
    assert!(orbit_sample(&tri, &gens, &bary, 4, f64::NAN).is_err());
    assert!(orbit_sample(&tri, &gens, &bary, 4, 0.0).is_err());
}
