//! Strictly convex quadric domains (float only), used as smooth comparison
//! geometry next to the exact polytope machinery.

use crate::error::{GeomError, GeomResult};
use crate::floatgeo::{dot_f64, FloatDomain};
use crate::projective::HPoint;
use crate::rat::rat_to_f64;

/// The domain `{x : q(x) < 0}` of a symmetric form of signature `(1, d)`,
/// viewed in the affine chart `x_0 = 1`. The standard instance is the Klein
/// ball, whose Hilbert metric is the hyperbolic metric.
#[derive(Clone, Debug)]
pub struct QuadricDomain {
    /// Symmetric matrix of the form, size `(d + 1) x (d + 1)`.
    form: Vec<Vec<f64>>,
    dim: usize,
    tol: f64,
}

impl QuadricDomain {
    /// Klein ball model of hyperbolic d-space: `-x_0^2 + x_1^2 + ... < 0`.
    pub fn klein_ball(d: usize) -> Self {
        let mut form = vec![vec![0.0; d + 1]; d + 1];
        form[0][0] = -1.0;
        for i in 1..=d {
            form[i][i] = 1.0;
        }
        QuadricDomain { form, dim: d, tol: 1e-12 }
    }

    pub fn new(form: Vec<Vec<f64>>, tol: f64) -> GeomResult<Self> {
        let n = form.len();
        if n < 2 || form.iter().any(|r| r.len() != n) {
            return Err(GeomError::InvalidInput("quadric form must be square".into()));
        }
        for i in 0..n {
            for j in 0..n {
                if (form[i][j] - form[j][i]).abs() > tol {
                    return Err(GeomError::InvalidInput("quadric form must be symmetric".into()));
                }
            }
        }
        // Signature (1, d) via Jacobi rotations: exactly one negative
        // eigenvalue and none near zero.
        let mut a = form.clone();
        for _ in 0..100 {
            let mut off = 0.0;
            for i in 0..n {
                for j in i + 1..n {
                    off += a[i][j] * a[i][j];
                }
            }
            if off.sqrt() < tol {
                break;
            }
            for p in 0..n {
                for q in p + 1..n {
                    if a[p][q].abs() < tol * 1e-3 {
                        continue;
                    }
                    let theta = 0.5 * (2.0 * a[p][q]).atan2(a[q][q] - a[p][p]);
                    let (c, s) = (theta.cos(), theta.sin());
                    for k in 0..n {
                        let (akp, akq) = (a[k][p], a[k][q]);
                        a[k][p] = c * akp - s * akq;
                        a[k][q] = s * akp + c * akq;
                    }
                    for k in 0..n {
                        let (apk, aqk) = (a[p][k], a[q][k]);
                        a[p][k] = c * apk - s * aqk;
                        a[q][k] = s * apk + c * aqk;
                    }
                }
            }
        }
        let eigs: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
        let scale = eigs.iter().fold(0.0_f64, |m, e| m.max(e.abs()));
        if eigs.iter().any(|e| e.abs() < scale * 1e-9) {
            return Err(GeomError::DegenerateConfiguration(
                "quadric form is (numerically) degenerate".into(),
            ));
        }
        let negatives = eigs.iter().filter(|e| **e < 0.0).count();
        if negatives != 1 {
            return Err(GeomError::InvalidInput(format!(
                "quadric form must have signature (1, d); found {negatives} negative directions"
            )));
        }
        Ok(QuadricDomain { form, dim: n - 1, tol })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    fn eval_homog(&self, x: &[f64]) -> f64 {
        let mut s = 0.0;
        for (i, row) in self.form.iter().enumerate() {
            s += x[i] * dot_f64(row, x);
        }
        s
    }

    /// Value of the form at the chart point `(1, u)`.
    pub fn eval_chart(&self, u: &[f64]) -> f64 {
        let mut x = Vec::with_capacity(self.dim + 1);
        x.push(1.0);
        x.extend_from_slice(u);
        self.eval_homog(&x)
    }

    /// Hilbert distance between interior chart points (for the Klein ball
    /// this is the hyperbolic distance).
    pub fn distance(&self, u: &[f64], v: &[f64]) -> f64 {
        self.dist(u, v)
    }
}

impl FloatDomain for QuadricDomain {
    fn chart_dim(&self) -> usize {
        self.dim
    }

    fn chart_point(&self, x: &HPoint) -> Option<Vec<f64>> {
        if x.dim_ambient() != self.dim + 1 {
            return None;
        }
        let c = x.coords();
        let x0 = rat_to_f64(&c[0]);
        if x0.abs() < self.tol {
            return None;
        }
        Some(c[1..].iter().map(|v| rat_to_f64(v) / x0).collect())
    }

    fn contains(&self, u: &[f64]) -> bool {
        u.len() == self.dim && self.eval_chart(u) < -self.tol
    }

    fn chord_params(&self, u: &[f64], v: &[f64]) -> Option<(f64, f64)> {
        if !self.contains(u) || !self.contains(v) {
            return None;
        }
        // q(p + t w) is a quadratic in t with two real roots bracketing [0, 1].
        let mut p = vec![1.0];
        p.extend_from_slice(u);
        let mut w = vec![0.0];
        w.extend(v.iter().zip(u).map(|(b, a)| b - a));
        let qw = self.eval_homog(&w);
        let qp = self.eval_homog(&p);
        let mut cross = 0.0;
        for (i, row) in self.form.iter().enumerate() {
            cross += p[i] * dot_f64(row, &w);
        }
        // a t^2 + 2 b t + c with c < 0; convexity makes a > 0 on chords.
        let (a, b, c) = (qw, cross, qp);
        if a <= 0.0 {
            return None;
        }
        let disc = b * b - a * c;
        if disc <= 0.0 {
            return None;
        }
        let sq = disc.sqrt();
        let t1 = (-b - sq) / a;
        let t2 = (-b + sq) / a;
        Some((t1.min(t2), t1.max(t2)))
    }
}
