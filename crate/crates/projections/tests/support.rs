mod common;

use hilbert_projections::{supporting_sets, validate_supporting_set};

#[test]
fn whole_triangle_has_exactly_one_supporting_set() {
    let dom = common::triangle();
    let s = common::full_triangle(&dom);
    let sets = supporting_sets(&dom, &s);
    assert_eq!(sets.len(), 1);
    // One hyperplane per maximal face, each a distinct facet of the domain.
    let mut facets = sets[0].facets.clone();
    facets.sort_unstable();
    facets.dedup();
    assert_eq!(facets.len(), 3);
    assert!(validate_supporting_set(&dom, &s, &sets[0]));
}

#[test]
fn mixed_triangle_has_exactly_two_supporting_sets() {
    let dom = common::simplex3();
    let s = common::mixed_triangle(&dom);
    let sets = supporting_sets(&dom, &s);
    // The edge joining the two vertex-type corners lies in two facets of the
    // domain; every other maximal face has a unique supporting facet.
    assert_eq!(sets.len(), 2);
    for set in &sets {
        assert!(validate_supporting_set(&dom, &s, set));
    }
    // The two sets differ in exactly one slot, and the enumeration is
    // lexicographic in the facet indices.
    assert!(sets[0].facets < sets[1].facets);
    let diff: Vec<usize> = (0..3).filter(|&j| sets[0].facets[j] != sets[1].facets[j]).collect();
    assert_eq!(diff.len(), 1);
}

#[test]
fn facet_interior_line_has_one_supporting_set() {
    let dom = common::triangle();
    let s = common::midpoint_line(&dom);
    let sets = supporting_sets(&dom, &s);
    assert_eq!(sets.len(), 1);
    assert!(validate_supporting_set(&dom, &s, &sets[0]));
}

#[test]
fn validation_rejects_tampered_sets() {
    let dom = common::simplex3();
    let s = common::mixed_triangle(&dom);
    let sets = supporting_sets(&dom, &s);

    // Wrong arity.
    let mut short = sets[0].clone();
    short.functionals.pop();
    assert!(!validate_supporting_set(&dom, &s, &short));

    // Swapping two hyperplanes breaks the vanishing pattern: each must
    // contain the maximal face opposite its own slot.
    let mut swapped = sets[0].clone();
    swapped.functionals.swap(0, 1);
    assert!(!validate_supporting_set(&dom, &s, &swapped));

    // A functional vanishing on the whole simplex supports nothing.
    let mut degenerate = sets[0].clone();
    degenerate.functionals[0] = vec![
        hilbert_core::rat(0, 1),
        hilbert_core::rat(0, 1),
        hilbert_core::rat(1, 1),
        hilbert_core::rat(-1, 1),
    ];
    assert!(!validate_supporting_set(&dom, &s, &degenerate));
}

#[test]
fn every_enumerated_set_validates_on_a_variety_of_simplices() {
    let dom = common::simplex3();
    for s in [
        common::mixed_triangle(&dom),
        hilbert_simplices::recognize(
            &dom,
            &[
                hilbert_core::HPoint::from_ints(&[1, 1, 0, 0]),
                hilbert_core::HPoint::from_ints(&[0, 0, 1, 1]),
            ],
        )
        .expect("midpoint line"),
    ] {
        let sets = supporting_sets(&dom, &s);
        assert!(!sets.is_empty());
        for set in &sets {
            assert!(validate_supporting_set(&dom, &s, set));
            assert_eq!(set.facets.len(), s.dim() + 1);
        }
    }
}
