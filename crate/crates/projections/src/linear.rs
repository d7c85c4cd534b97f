//! Exact linear projections onto a properly embedded simplex along the
//! intersection of a supporting hyperplane set.

use hilbert_core::{linalg, GeomError, HPoint, LinSubspace, PolytopeDomain, Rat};
use hilbert_simplices::EmbeddedSimplex;
use num::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{ProjError, ProjResult};
use crate::support::SupportingSet;

/// A projective-linear projection with image the span of a simplex and
/// kernel the intersection of its supporting hyperplanes. Exact, immutable,
/// idempotent up to scale (here: exactly, the matrix squares to itself).
#[derive(Clone, Debug)]
pub struct LinearProjection {
    matrix: Vec<Vec<Rat>>,
    kernel: LinSubspace,
    image: LinSubspace,
}

impl LinearProjection {
    /// Matrix of the projection acting on ambient lifts (row-major).
    pub fn matrix(&self) -> &[Vec<Rat>] {
        &self.matrix
    }

    /// The subspace collapsed to zero.
    pub fn kernel(&self) -> &LinSubspace {
        &self.kernel
    }

    /// The span of the simplex, fixed pointwise.
    pub fn image(&self) -> &LinSubspace {
        &self.image
    }

    /// Apply to an ambient lift.
    pub fn apply_lift(&self, x: &[Rat]) -> Vec<Rat> {
        linalg::mat_vec(&self.matrix, x)
    }
}

/// Build the projection with image `Span s` and kernel the intersection of
/// the hyperplanes in `set`. The two subspaces complement each other for any
/// valid supporting set; a failed rank check is a bug trap, not an expected
/// input condition. The construction also audits, exactly, that a batch of
/// interior points projects into the open simplex.
pub fn build_projection(
    domain: &PolytopeDomain,
    s: &EmbeddedSimplex,
    set: &SupportingSet,
) -> ProjResult<LinearProjection> {
    let d = domain.ambient_dim();
    let k = s.dim() + 1;
    if set.functionals.len() != k || set.functionals.iter().any(|h| h.len() != d) {
        return Err(ProjError::DirectSumFailure);
    }

    let kernel_basis = linalg::nullspace(&set.functionals, d);
    if kernel_basis.len() + k != d {
        return Err(ProjError::DirectSumFailure);
    }

    // Columns of the change of basis: simplex lifts first, kernel basis next.
    let mut cols: Vec<Vec<Rat>> = s.lifts().to_vec();
    cols.extend(kernel_basis.iter().cloned());
    if linalg::rank(&cols) != d {
        return Err(ProjError::DirectSumFailure);
    }

    // Column i of the matrix: decompose e_i over the combined basis and keep
    // only the span component.
    let mut matrix = vec![vec![Rat::zero(); d]; d];
    for i in 0..d {
        let mut e = vec![Rat::zero(); d];
        e[i] = Rat::from_integer(1.into());
        let c = linalg::solve_columns(&cols, &e).ok_or(ProjError::DirectSumFailure)?;
        for (j, lift) in s.lifts().iter().enumerate() {
            for r in 0..d {
                matrix[r][i] += &c[j] * &lift[r];
            }
        }
    }

    let proj = LinearProjection {
        matrix,
        kernel: LinSubspace::from_spanning(&kernel_basis, d),
        image: LinSubspace::from_spanning(s.lifts(), d),
    };

    // Exact idempotence; anything else is a construction bug.
    let square = linalg::mat_mul(&proj.matrix, &proj.matrix);
    if square != proj.matrix {
        return Err(ProjError::Geometry(GeomError::InvariantTrap(
            "projection matrix is not idempotent".into(),
        )));
    }

    // Interior audit: the barycenter and a few seeded interior samples must
    // land strictly inside the simplex.
    let mut rng = ChaCha8Rng::seed_from_u64(0x51_0b_a1);
    let mut audit = vec![domain.barycenter()];
    for _ in 0..8 {
        audit.push(domain.sample_interior(&mut rng));
    }
    for x in &audit {
        let image = project(&proj, x)?;
        if s.barycentric(&image).is_err() {
            return Err(ProjError::Geometry(GeomError::InvariantTrap(
                "interior point projected outside the open simplex".into(),
            )));
        }
    }

    Ok(proj)
}

/// Apply the projection to a projective point.
pub fn project(l: &LinearProjection, x: &HPoint) -> ProjResult<HPoint> {
    let y = l.apply_lift(x.coords());
    if linalg::is_zero_vec(&y) {
        return Err(ProjError::InKernel);
    }
    Ok(HPoint::new(y)?)
}

/// Exact face compatibility: the image lies in the same open face of the
/// domain as `x` itself. Guaranteed for points of the open faces through the
/// simplex boundary (and trivially for interior points, whose open face is
/// the whole domain); callers probing other boundary points may see `false`.
pub fn face_compatible(domain: &PolytopeDomain, l: &LinearProjection, x: &HPoint) -> ProjResult<bool> {
    let y = project(l, x)?;
    Ok(domain.locate(x) == domain.locate(&y))
}
