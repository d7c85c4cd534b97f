mod common;

use hilbert_core::{linalg, rat, rint, HPoint, Location, Rat};
use hilbert_projections::{
    build_projection, face_compatible, project, supporting_sets, ProjError,
};
use num::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn int_matrix(rows: &[&[i64]]) -> Vec<Vec<Rat>> {
    rows.iter().map(|r| r.iter().map(|&v| rint(v)).collect()).collect()
}

#[test]
fn whole_simplex_projection_is_the_identity() {
    let dom = common::triangle();
    let s = common::full_triangle(&dom);
    let sets = supporting_sets(&dom, &s);
    let l = build_projection(&dom, &s, &sets[0]).expect("projection");
    assert_eq!(l.matrix(), int_matrix(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]));
    assert_eq!(l.kernel().dim(), 0);
}

#[test]
fn mixed_triangle_projections_match_the_frozen_formulas() {
    let dom = common::simplex3();
    let s = common::mixed_triangle(&dom);
    let sets = supporting_sets(&dom, &s);
    assert_eq!(sets.len(), 2);
    let ls: Vec<_> =
        sets.iter().map(|h| build_projection(&dom, &s, h).expect("projection")).collect();

    // One choice supports the edge [e1, e2] in {x3 = 0}: the leftover
    // direction e4 is collapsed and the image of a lift copies x3 into the
    // last coordinate. The other picks {x4 = 0} and collapses e3. Identify
    // them by their kernels; the enumeration order follows the domain's
    // facet indexing, not the coordinate order.
    let e3 = [rint(0), rint(0), rint(1), rint(0)];
    let e4 = [rint(0), rint(0), rint(0), rint(1)];
    let collapse_e4 = ls.iter().find(|l| l.kernel().contains_lift(&e4)).expect("one kernel e4");
    let collapse_e3 = ls.iter().find(|l| l.kernel().contains_lift(&e3)).expect("one kernel e3");
    assert_eq!(collapse_e4.kernel().dim(), 1);
    assert_eq!(
        collapse_e4.matrix(),
        int_matrix(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 1, 0]])
    );
    assert_eq!(
        collapse_e3.matrix(),
        int_matrix(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 1], &[0, 0, 0, 1]])
    );
}

#[test]
fn projections_are_exactly_idempotent_and_fix_the_simplex() {
    let dom = common::simplex3();
    let s = common::mixed_triangle(&dom);
    for set in supporting_sets(&dom, &s) {
        let l = build_projection(&dom, &s, &set).expect("projection");
        let square = linalg::mat_mul(l.matrix(), l.matrix());
        assert_eq!(square, l.matrix());
        for lift in s.lifts() {
            assert_eq!(l.apply_lift(lift), *lift);
        }
    }
}

#[test]
fn interior_points_project_into_the_open_simplex() {
    let dom = common::simplex3();
    let s = common::mixed_triangle(&dom);
    let sets = supporting_sets(&dom, &s);
    let ls: Vec<_> =
        sets.iter().map(|h| build_projection(&dom, &s, h).expect("projection")).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for _ in 0..500 {
        let x = dom.sample_interior(&mut rng);
        for l in &ls {
            let y = project(l, &x).expect("interior point not in kernel");
            let weights = s.barycentric(&y).expect("image lies on the simplex");
            assert!(weights.iter().all(|w| w > &Rat::zero()));
        }
    }
}

#[test]
fn kernel_never_meets_the_open_domain() {
    let dom = common::simplex3();
    let s = common::mixed_triangle(&dom);
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    for set in supporting_sets(&dom, &s) {
        let l = build_projection(&dom, &s, &set).expect("projection");
        assert_eq!(l.kernel().dim(), dom.ambient_dim() - s.dim() - 1);
        for _ in 0..100 {
            // Random rational combination of the kernel basis.
            let combo: Vec<Rat> = {
                let mut v = vec![Rat::zero(); dom.ambient_dim()];
                for b in l.kernel().basis() {
                    let c = rat(rng.gen_range(-9i64..=9), rng.gen_range(1i64..=9));
                    for (o, x) in v.iter_mut().zip(b) {
                        *o += &c * x;
                    }
                }
                v
            };
            if linalg::is_zero_vec(&combo) {
                continue;
            }
            let p = HPoint::new(combo).expect("nonzero");
            assert_ne!(dom.locate(&p), Location::Interior);
        }
    }
}

#[test]
fn kernel_points_error_as_in_kernel() {
    let dom = common::simplex3();
    let s = common::mixed_triangle(&dom);
    let sets = supporting_sets(&dom, &s);
    // Pick the projection whose collapsed direction is the domain vertex e4.
    let e4 = HPoint::from_ints(&[0, 0, 0, 1]);
    let l = sets
        .iter()
        .map(|h| build_projection(&dom, &s, h).expect("projection"))
        .find(|l| l.kernel().contains_lift(&[rint(0), rint(0), rint(0), rint(1)]))
        .expect("one choice collapses e4");
    assert!(matches!(project(&l, &e4), Err(ProjError::InKernel)));
}

#[test]
fn simplex_points_are_fixed_projectively() {
    let dom = common::simplex3();
    let s = common::mixed_triangle(&dom);
    let sets = supporting_sets(&dom, &s);
    let l = build_projection(&dom, &s, &sets[0]).expect("projection");
    let mut rng = ChaCha8Rng::seed_from_u64(47);
    for _ in 0..200 {
        let weights: Vec<Rat> =
            (0..3).map(|_| rat(rng.gen_range(1i64..=40), rng.gen_range(1i64..=7))).collect();
        let z = s.point_from_barycentric(&weights).expect("interior of simplex");
        let image = project(&l, &z).expect("not in kernel");
        assert!(image.proj_eq(&z));
    }
}

#[test]
fn boundary_faces_through_the_simplex_are_respected() {
    let dom = common::simplex3();
    let s = common::mixed_triangle(&dom);
    let sets = supporting_sets(&dom, &s);
    for set in &sets {
        let l = build_projection(&dom, &s, set).expect("projection");

        // A point of the open edge carrying the midpoint vertex: its image
        // must stay in that same open edge.
        let x = HPoint::from_ints(&[0, 0, 1, 3]);
        assert!(face_compatible(&dom, &l, &x).expect("not in kernel"));
        let y = project(&l, &x).expect("not in kernel");
        assert_eq!(dom.locate(&y), dom.locate(&x));

        // A point of an open facet whose face meets the simplex boundary.
        let x = HPoint::from_ints(&[0, 5, 1, 3]);
        assert!(face_compatible(&dom, &l, &x).expect("not in kernel"));

        // Interior points land inside.
        let x = HPoint::from_ints(&[1, 2, 3, 4]);
        assert!(face_compatible(&dom, &l, &x).expect("not in kernel"));
    }
}

#[test]
fn tampered_supporting_data_trips_the_direct_sum_trap() {
    let dom = common::simplex3();
    let s = common::mixed_triangle(&dom);
    let sets = supporting_sets(&dom, &s);

    // Duplicate one hyperplane into another slot: the intersection becomes
    // too large to complement the span.
    let mut bad = sets[0].clone();
    bad.functionals[1] = bad.functionals[0].clone();
    assert!(matches!(build_projection(&dom, &s, &bad), Err(ProjError::DirectSumFailure)));

    // Wrong arity.
    let mut short = sets[0].clone();
    short.functionals.pop();
    short.facets.pop();
    assert!(matches!(build_projection(&dom, &s, &short), Err(ProjError::DirectSumFailure)));
}
