//! Exact metric sanity checks on rational sample sets.

use hilbert_core::{GeomError, HPoint, PolytopeDomain};

use crate::error::{RelError, RelResult};

/// Re-assert the triangle inequality on every triple of a rational point
/// set. With `q = exp(2 * dist)` carried exactly, the inequality
/// `dist(x, z) <= dist(x, y) + dist(y, z)` becomes `q_xz <= q_xy * q_yz`,
/// so the check is exact. Errors name the first offending triple.
pub fn triangle_audit(domain: &PolytopeDomain, points: &[HPoint]) -> RelResult<()> {
    let n = points.len();
    let mut q = vec![vec![None; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let len = domain.hilbert_distance(&points[i], &points[j])?;
            let qij = len
                .q()
                .ok_or_else(|| {
                    GeomError::InvalidInput("triangle audit needs exact distances".into())
                })?
                .clone();
            q[i][j] = Some(qij);
        }
    }
    let get = |i: usize, j: usize| -> &hilbert_core::Rat {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        q[a][b].as_ref().expect("filled above")
    };
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if i == j || j == k || i == k {
                    continue;
                }
                if get(i, k) > &(get(i, j) * get(j, k)) {
                    return Err(RelError::Geometry(GeomError::InvariantTrap(format!(
                        "triangle inequality fails on sample triple ({i}, {j}, {k})"
                    ))));
                }
            }
        }
    }
    Ok(())
}
