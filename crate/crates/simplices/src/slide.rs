//! Sliding the vertices of a properly embedded simplex inside their faces.

use hilbert_core::{GeomError, HilbertLength, HPoint, Location};

use crate::embedded::{recognize, EmbeddedSimplex};
use crate::error::{SimplexError, SimplexResult};

/// Moves selected vertices to new positions inside their open faces and
/// returns the slid simplex together with an exact upper bound for the
/// Hausdorff distance between the two: the sum of the face-intrinsic
/// distances walked by the vertices.
///
/// Staying in the same open faces keeps the family properly embedded; a
/// recognition failure here is a broken invariant, not a user error.
pub fn slide(
    s: &EmbeddedSimplex,
    moves: &[(usize, HPoint)],
) -> SimplexResult<(EmbeddedSimplex, HilbertLength)> {
    let domain = s.domain();
    let mut targets: Vec<HPoint> = s.vertices().to_vec();
    for (j, w) in moves {
        if *j >= targets.len() {
            return Err(SimplexError::NotInFace(format!("vertex index {j} out of range")));
        }
        targets[*j] = w.clone();
    }
    let mut bound = HilbertLength::zero();
    for (j, w) in targets.iter().enumerate() {
        let face = s.vertex_face(j);
        match domain.locate(w) {
            Location::Boundary(f) if f == face => {}
            _ => {
                return Err(SimplexError::NotInFace(format!(
                    "slide target for vertex {j} leaves its open face"
                )))
            }
        }
        if w.proj_eq(&s.vertices()[j]) {
            continue;
        }
        let fd = domain.face_domain(face);
        let step = fd.hilbert_distance(&s.vertices()[j], w)?;
        bound = bound.add(&step);
    }
    let slid = recognize(domain, &targets).map_err(|e| {
        SimplexError::Geometry(GeomError::InvariantTrap(format!(
            "slide within open faces failed to stay properly embedded: {e}"
        )))
    })?;
    Ok((slid, bound))
}
