mod common;

use hilbert_core::{FloatDomain, GeomError, HPoint};
use hilbert_relhyp::{morse_check, penetration_bound, RelError};

/// Arc-length samples of the geodesic [a, b].
fn geodesic_path(
    dom: &dyn FloatDomain,
    a: &[f64],
    b: &[f64],
    n: usize,
) -> Vec<(f64, Vec<f64>)> {
    let total = dom.dist(a, b);
    (0..=n)
        .map(|i| {
            let t = total * i as f64 / n as f64;
            (t, dom.geodesic_point_f64(a, b, t))
        })
        .collect()
}

#[test]
fn the_geodesic_itself_passes_with_tiny_gap() {
    let dom = common::square();
    let a = dom.chart_point(&HPoint::from_ints(&[5, -4, 0])).unwrap();
    let b = dom.chart_point(&HPoint::from_ints(&[5, 4, 0])).unwrap();
    let path = geodesic_path(dom.as_ref(), &a, &b, 64);
    let rep = morse_check(dom.as_ref(), &path, 0.0, 0.5).unwrap();
    assert!(rep.passes);
    assert_eq!(rep.bound, 2.0);
    // The only gap is the discreteness of the path samples.
    let spacing = dom.dist(&a, &b) / 64.0;
    assert!(rep.gap <= 0.5 * spacing + 1e-6, "gap {} vs spacing {spacing}", rep.gap);
}

#[test]
fn small_perturbations_pass_within_their_budget() {
    let dom = common::square();
    let a = dom.chart_point(&HPoint::from_ints(&[5, -4, 0])).unwrap();
    let b = dom.chart_point(&HPoint::from_ints(&[5, 4, 0])).unwrap();
    let mut path = geodesic_path(dom.as_ref(), &a, &b, 32);
    // Alternate the interior samples off the axis; the product metric keeps
    // pair distances equal to the parameter gaps.
    for (i, (_, p)) in path.iter_mut().enumerate() {
        if i > 0 && i < 32 {
            p[2] = if i % 2 == 0 { 0.02 } else { -0.02 };
        }
    }
    let rep = morse_check(dom.as_ref(), &path, 0.2, 0.5).unwrap();
    assert!(rep.passes);
    assert!(rep.gap >= 0.01, "perturbation must be visible, gap {}", rep.gap);
    assert!(rep.gap <= 0.1, "gap {} exceeds the perturbation scale", rep.gap);
}

#[test]
fn backtracking_violates_the_lower_bound() {
    let dom = common::square();
    let a = dom.chart_point(&HPoint::from_ints(&[5, -4, 0])).unwrap();
    let b = dom.chart_point(&HPoint::from_ints(&[5, 4, 0])).unwrap();
    let total = dom.dist(&a, &b);
    let mid = dom.geodesic_point_f64(&a, &b, 0.5 * total);
    let path = vec![(0.0, a.clone()), (1.0, mid), (2.0, a.clone())];
    let err = morse_check(dom.as_ref(), &path, 0.1, 0.5).unwrap_err();
    match err {
        RelError::NotQuasiGeodesic { detail } => {
            assert!(detail.contains("below lower bound"), "{detail}");
        }
        other => panic!("expected NotQuasiGeodesic, got {other:?}"),
    }
}

#[test]
fn teleporting_violates_the_upper_bound() {
    let dom = common::square();
    let a = dom.chart_point(&HPoint::from_ints(&[5, -4, 0])).unwrap();
    let b = dom.chart_point(&HPoint::from_ints(&[5, 4, 0])).unwrap();
    let path = vec![(0.0, a), (0.1, b)];
    let err = morse_check(dom.as_ref(), &path, 0.1, 0.5).unwrap_err();
    match err {
        RelError::NotQuasiGeodesic { detail } => {
            assert!(detail.contains("above upper bound"), "{detail}");
        }
        other => panic!("expected NotQuasiGeodesic, got {other:?}"),
    }
}

#[test]
fn a_path_needs_two_samples() {
    let dom = common::square();
    let a = dom.chart_point(&HPoint::from_ints(&[5, -4, 0])).unwrap();
    let err = morse_check(dom.as_ref(), &[(0.0, a)], 0.0, 0.5).unwrap_err();
    assert!(matches!(err, RelError::Geometry(GeomError::InvalidInput(_))));
}

#[test]
fn penetration_bound_enforces_the_sigma_floor() {
    // sigma0 below max(10 * C, 1) is bookkeeping error, not a value.
    let err = penetration_bound(1.0, 0.5, 0.5, 1.0).unwrap_err();
    assert!(matches!(err, RelError::Geometry(GeomError::InvalidInput(_))));
    let err = penetration_bound(1.0, 0.0, 0.9, 0.01).unwrap_err();
    assert!(matches!(err, RelError::Geometry(GeomError::InvalidInput(_))));

    let v = penetration_bound(1.0, 0.5, 10.0, 1.0).unwrap();
    assert_eq!(v, 1.0 + 10.0 * 10.0 + 18.0 * 0.5 * 10.0);
    let v = penetration_bound(2.0, 0.0, 1.0, 0.05).unwrap();
    assert_eq!(v, 12.0);
}

#[test]
fn report_serializes_verdict_and_gap() {
    let dom = common::square();
    let a = dom.chart_point(&HPoint::from_ints(&[5, -4, 0])).unwrap();
    let b = dom.chart_point(&HPoint::from_ints(&[5, 4, 0])).unwrap();
    let path = geodesic_path(dom.as_ref(), &a, &b, 16);
    let rep = morse_check(dom.as_ref(), &path, 0.0, 0.5).unwrap();
    let json: serde_json::Value = serde_json::to_value(rep).unwrap();
    assert!(json["passes"].as_bool().unwrap());
    assert!(json["gap"].is_number());
    assert_eq!(json["bound"].as_f64().unwrap(), 2.0);
}
