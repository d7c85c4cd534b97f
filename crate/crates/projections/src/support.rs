//! Supporting hyperplane sets of a properly embedded simplex: one domain
//! facet per maximal simplex face, every combination of choices.

use hilbert_core::{linalg, Mask, PolytopeDomain, Rat};
use hilbert_simplices::EmbeddedSimplex;
use num::{Signed, Zero};

/// A choice of supporting hyperplanes: for each maximal face of the simplex
/// (drop one vertex, in vertex order) one facet of the domain containing it.
#[derive(Clone, Debug)]
pub struct SupportingSet {
    /// Chosen facet index per maximal face, indexed by the dropped vertex.
    pub facets: Vec<usize>,
    /// Ambient functionals of the chosen facets, same order.
    pub functionals: Vec<Vec<Rat>>,
}

/// All supporting sets of `s`, ordered lexicographically by facet indices.
/// Nonempty: each maximal face of a properly embedded simplex lies in some
/// facet (its drop-one active set is nonempty).
pub fn supporting_sets(domain: &PolytopeDomain, s: &EmbeddedSimplex) -> Vec<SupportingSet> {
    let n = s.dim() + 1;
    let mut choices: Vec<Vec<usize>> = Vec::with_capacity(n);
    for j in 0..n {
        let drop: Mask = (0..n)
            .filter(|&l| l != j)
            .fold(!0, |acc, l| acc & s.active_mask(l));
        let facets: Vec<usize> =
            (0..domain.facet_count()).filter(|i| drop & (1 << i) != 0).collect();
        debug_assert!(!facets.is_empty(), "drop-one active set of an embedded simplex");
        choices.push(facets);
    }
    let mut out = Vec::new();
    let mut pick = vec![0usize; n];
    loop {
        let facets: Vec<usize> = pick.iter().zip(&choices).map(|(&i, c)| c[i]).collect();
        let functionals = facets.iter().map(|&i| domain.ambient_functional(i)).collect();
        out.push(SupportingSet { facets, functionals });
        // Mixed-radix counter, rightmost slot fastest, so the output is
        // lexicographic in the facet index tuples.
        let mut slot = n;
        while slot > 0 {
            slot -= 1;
            pick[slot] += 1;
            if pick[slot] < choices[slot].len() {
                break;
            }
            pick[slot] = 0;
            if slot == 0 {
                return out;
            }
        }
    }
}

/// Exact validity audit of a supporting set for `s`: hyperplane `j` vanishes
/// on every simplex vertex except vertex `j` (so it contains the maximal face
/// opposite `j` but not the whole simplex), and no cone generator of the
/// domain lies strictly on its negative side. Together these give
/// `[H_j] ∩ Ω = ∅` with `F_j ⊂ [H_j]`.
pub fn validate_supporting_set(
    domain: &PolytopeDomain,
    s: &EmbeddedSimplex,
    set: &SupportingSet,
) -> bool {
    if set.functionals.len() != s.dim() + 1 {
        return false;
    }
    for (j, h) in set.functionals.iter().enumerate() {
        for (l, v) in s.vertices().iter().enumerate() {
            let val = linalg::dot(h, v.coords());
            if l == j {
                if val.is_zero() {
                    // The hyperplane may not contain the whole simplex.
                    return false;
                }
            } else if !val.is_zero() {
                return false;
            }
        }
        // Uniform sign over the domain's cone generators: no vertex on the
        // negative side (zeros allowed, those span the chosen facet).
        for v in domain.vertices() {
            if linalg::dot(h, v.coords()).is_negative() {
                return false;
            }
        }
    }
    true
}
