//! The log-lattice of a simplex stabilizer: generators that fix every
//! vertex are simultaneously diagonal in the vertex basis, and their
//! eigenvalue ratios embed the group into a lattice of log vectors.

use hilbert_core::rat::rat_to_f64;
use hilbert_core::{HPoint, ProjMap, Rat};
use hilbert_simplices::EmbeddedSimplex;

use crate::error::{ExError, ExResult};

/// Pivot threshold for the float-mode rank of the log vectors.
pub const RANK_TOL: f64 = 1e-9;

pub struct StabilizerLattice {
    /// One log vector per generator: ln |lambda_i / lambda_1| over the
    /// non-base vertices, in vertex order.
    pub vectors: Vec<Vec<f64>>,
    /// Rank of the lattice the vectors generate, at tolerance RANK_TOL.
    pub rank: usize,
    /// Eliminated rows spanning the same space, one per pivot.
    pub basis: Vec<Vec<f64>>,
}

/// Eigenvalue of g at its exact eigenvector v, read off the first nonzero
/// lift coordinate.
fn eigenvalue_at(g: &ProjMap, v: &HPoint) -> Option<Rat> {
    let image = g.apply_lift(v.coords());
    let j = v.coords().iter().position(|c| !num::Zero::is_zero(c))?;
    Some(&image[j] / &v.coords()[j])
}

fn float_rank(mut rows: Vec<Vec<f64>>, tol: f64) -> (usize, Vec<Vec<f64>>) {
    let mut basis: Vec<Vec<f64>> = Vec::new();
    let width = rows.first().map_or(0, Vec::len);
    for col in 0..width {
        let Some(best) = rows
            .iter()
            .enumerate()
            .filter(|(_, r)| r[col].abs() > tol)
            .max_by(|a, b| a.1[col].abs().total_cmp(&b.1[col].abs()))
            .map(|(i, _)| i)
        else {
            continue;
        };
        let pivot = rows.swap_remove(best);
        for r in rows.iter_mut() {
            let f = r[col] / pivot[col];
            for (x, p) in r.iter_mut().zip(&pivot) {
                *x -= f * p;
            }
        }
        basis.push(pivot);
    }
    (basis.len(), basis)
}

/// Check exactly that every generator fixes every vertex of the simplex,
/// then return the generated log-lattice and its float-mode rank.
pub fn stabilizer_lattice(
    gens: &[ProjMap],
    s: &EmbeddedSimplex,
) -> ExResult<StabilizerLattice> {
    let verts = s.vertices();
    let mut vectors = Vec::with_capacity(gens.len());
    for (k, g) in gens.iter().enumerate() {
        let mut eigs = Vec::with_capacity(verts.len());
        for (i, v) in verts.iter().enumerate() {
            if g.dim() != v.dim_ambient() || !g.apply(v).proj_eq(v) {
                return Err(ExError::NotFixingVertices(format!(
                    "generator {k} does not fix vertex {i}"
                )));
            }
            eigs.push(eigenvalue_at(g, v).expect("vertex lifts are nonzero"));
        }
        let base = eigs[0].clone();
        vectors.push(
            eigs[1..]
                .iter()
                .map(|l| rat_to_f64(&(l / &base)).abs().ln())
                .collect(),
        );
    }
    let (rank, basis) = float_rank(vectors.clone(), RANK_TOL);
    Ok(StabilizerLattice { vectors, rank, basis })
}
