//! Parallel families over the cone product: one member per sign vector,
//! obtained by scaling each vertex lift by `q` or `1/q` in the first factor.

use hilbert_core::rat::rint;
use hilbert_core::{HPoint, Rat};
use hilbert_simplices::{recognize, EmbeddedSimplex};

use crate::error::{ExError, ExResult};
use crate::product::ConeProduct;

/// All `2^(k+1)` parallel copies of a k-simplex in the base, indexed by
/// sign vectors. Bit `i` of the family index scales vertex `i` by `q`
/// (set) or `1/q` (clear). The diagonal core sits strictly between the
/// two extreme members.
pub fn parallel_family(
    cp: &ConeProduct,
    s: &EmbeddedSimplex,
    q: &Rat,
) -> ExResult<Vec<EmbeddedSimplex>> {
    if q == &rint(1) {
        return Err(ExError::DegenerateInterval);
    }
    let verts = s.vertices();
    if verts.len() > 16 {
        return Err(ExError::FrameFailure(
            "parallel family would have more than 65536 members".into(),
        ));
    }
    let qinv = rint(1) / q;
    let mut members = Vec::with_capacity(1 << verts.len());
    for sigma in 0u32..(1 << verts.len()) {
        let lifted = verts
            .iter()
            .enumerate()
            .map(|(i, v)| {
                let scale = if sigma >> i & 1 == 1 { q } else { &qinv };
                cp.scaled_pair(v, scale)
            })
            .collect::<Result<Vec<HPoint>, _>>()?;
        members.push(recognize(cp.product(), &lifted)?);
    }
    Ok(members)
}
