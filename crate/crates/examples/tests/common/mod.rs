#![allow(dead_code)]

use std::sync::Arc;

use hilbert_core::{HPoint, PolytopeDomain};
use hilbert_examples::{make_standard, StandardDomain, StandardKind};

pub fn triangle() -> Arc<PolytopeDomain> {
    match make_standard(StandardKind::Simplex(3)).expect("triangle builds") {
        StandardDomain::Polytope(p) => p,
        StandardDomain::Quadric(_) => unreachable!("simplex kind is polytopal"),
    }
}

pub fn square() -> Arc<PolytopeDomain> {
    match make_standard(StandardKind::Square).expect("square builds") {
        StandardDomain::Polytope(p) => p,
        StandardDomain::Quadric(_) => unreachable!("square kind is polytopal"),
    }
}

/// Sine of the background angle between two projective points.
pub fn fs_sin(a: &HPoint, b: &HPoint) -> f64 {
    let u = a.to_f64();
    let v = b.to_f64();
    let nu = u.iter().map(|x| x * x).sum::<f64>().sqrt();
    let nv = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    let dot: f64 = u.iter().zip(&v).map(|(x, y)| x * y).sum();
    (1.0 - (dot / (nu * nv)).powi(2)).max(0.0).sqrt()
}
