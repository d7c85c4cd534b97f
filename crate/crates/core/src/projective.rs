//! Points, maps and subspaces of real projective space, all exact.

use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use num::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{GeomError, GeomResult};
use crate::linalg;
use crate::rat::{canonical_int_vec, fmt_rat, parse_rat, rat_to_f64, Int, Rat};

/// A point of `P(R^d)`, stored as an explicit lift.
///
/// The lift is remembered as given: several constructions in this library
/// (polytope cones in particular) read the sign of the representative.
/// Equality and hashing are projective, via the canonical integer lift.
#[derive(Clone, Debug)]
pub struct HPoint {
    c: Vec<Rat>,
}

impl HPoint {
    pub fn new(c: Vec<Rat>) -> GeomResult<Self> {
        if c.is_empty() || linalg::is_zero_vec(&c) {
            return Err(GeomError::InvalidInput("zero vector is not a projective point".into()));
        }
        Ok(HPoint { c })
    }

    pub fn from_ints(v: &[i64]) -> Self {
        assert!(v.iter().any(|&x| x != 0), "zero vector is not a projective point");
        HPoint { c: v.iter().map(|&x| Rat::from_integer(Int::from(x))).collect() }
    }

    pub fn from_strs(v: &[&str]) -> GeomResult<Self> {
        HPoint::new(v.iter().map(|s| parse_rat(s)).collect::<GeomResult<Vec<_>>>()?)
    }

    pub fn dim_ambient(&self) -> usize {
        self.c.len()
    }

    pub fn coords(&self) -> &[Rat] {
        &self.c
    }

    pub fn canonical(&self) -> Vec<Int> {
        canonical_int_vec(&self.c)
    }

    /// Canonical lift as rationals, first nonzero coordinate positive.
    pub fn canonical_lift(&self) -> Vec<Rat> {
        self.canonical().into_iter().map(Rat::from_integer).collect()
    }

    pub fn proj_eq(&self, other: &HPoint) -> bool {
        if self.c.len() != other.c.len() {
            return false;
        }
        let i = self.c.iter().position(|x| !x.is_zero()).expect("nonzero lift");
        if other.c[i].is_zero() {
            return false;
        }
        // x ~ y iff x_i y_j = y_i x_j for the pivot i and every j.
        self.c
            .iter()
            .zip(&other.c)
            .all(|(xj, yj)| xj * &other.c[i] == yj * &self.c[i])
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.c.iter().map(rat_to_f64).collect()
    }
}

impl PartialEq for HPoint {
    fn eq(&self, other: &Self) -> bool {
        self.proj_eq(other)
    }
}

impl Eq for HPoint {}

impl Hash for HPoint {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.canonical().hash(state);
    }
}

impl Serialize for HPoint {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let strs: Vec<String> = self.c.iter().map(fmt_rat).collect();
        strs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for HPoint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let strs = Vec::<String>::deserialize(d)?;
        let coords = strs
            .iter()
            .map(|s| parse_rat(s))
            .collect::<GeomResult<Vec<_>>>()
            .map_err(|e| D::Error::custom(e.to_string()))?;
        HPoint::new(coords).map_err(|e| D::Error::custom(e.to_string()))
    }
}

/// An element of `PGL(d, Q)`, stored as an invertible matrix.
#[derive(Debug)]
pub struct ProjMap {
    m: Vec<Vec<Rat>>,
    inv: OnceLock<Vec<Vec<Rat>>>,
}

impl Clone for ProjMap {
    fn clone(&self) -> Self {
        ProjMap { m: self.m.clone(), inv: OnceLock::new() }
    }
}

impl PartialEq for ProjMap {
    /// Projective equality: equal up to a global scalar.
    fn eq(&self, other: &Self) -> bool {
        if self.m.len() != other.m.len() {
            return false;
        }
        let flat = |m: &Vec<Vec<Rat>>| m.iter().flatten().cloned().collect::<Vec<_>>();
        canonical_int_vec(&flat(&self.m)) == canonical_int_vec(&flat(&other.m))
    }
}

impl ProjMap {
    pub fn new(m: Vec<Vec<Rat>>) -> GeomResult<Self> {
        let n = m.len();
        if n == 0 || m.iter().any(|r| r.len() != n) {
            return Err(GeomError::InvalidInput("projective map needs a square matrix".into()));
        }
        if linalg::det(&m).is_zero() {
            return Err(GeomError::DegenerateConfiguration("singular matrix".into()));
        }
        Ok(ProjMap { m, inv: OnceLock::new() })
    }

    pub fn identity(n: usize) -> Self {
        let m = (0..n)
            .map(|i| (0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }).collect())
            .collect();
        ProjMap { m, inv: OnceLock::new() }
    }

    pub fn diagonal(entries: &[Rat]) -> GeomResult<Self> {
        if entries.iter().any(|e| e.is_zero()) {
            return Err(GeomError::DegenerateConfiguration("zero diagonal entry".into()));
        }
        let n = entries.len();
        let m = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { entries[i].clone() } else { Rat::zero() })
                    .collect()
            })
            .collect();
        Ok(ProjMap { m, inv: OnceLock::new() })
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> GeomResult<Self> {
        ProjMap::new(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rat::from_integer(Int::from(x))).collect())
                .collect(),
        )
    }

    pub fn permutation(perm: &[usize]) -> GeomResult<Self> {
        let n = perm.len();
        let mut m = vec![vec![Rat::zero(); n]; n];
        for (i, &p) in perm.iter().enumerate() {
            if p >= n {
                return Err(GeomError::InvalidInput("permutation index out of range".into()));
            }
            m[i][p] = Rat::one();
        }
        ProjMap::new(m)
    }

    pub fn dim(&self) -> usize {
        self.m.len()
    }

    pub fn matrix(&self) -> &[Vec<Rat>] {
        &self.m
    }

    pub fn apply_lift(&self, x: &[Rat]) -> Vec<Rat> {
        linalg::mat_vec(&self.m, x)
    }

    pub fn apply(&self, x: &HPoint) -> HPoint {
        // The image of a nonzero vector under an invertible map is nonzero.
        HPoint { c: self.apply_lift(x.coords()) }
    }

    fn inv_matrix(&self) -> &Vec<Vec<Rat>> {
        self.inv
            .get_or_init(|| linalg::invert(&self.m).expect("matrix was checked invertible"))
    }

    pub fn inverse(&self) -> ProjMap {
        let inv = self.inv_matrix().clone();
        let orig = self.m.clone();
        let map = ProjMap { m: inv, inv: OnceLock::new() };
        let _ = map.inv.set(orig);
        map
    }

    /// `self` after `other`: `(self.compose(other)).apply(x) = self(other(x))`.
    pub fn compose(&self, other: &ProjMap) -> ProjMap {
        ProjMap { m: linalg::mat_mul(&self.m, &other.m), inv: OnceLock::new() }
    }
}

/// A linear subspace of `R^d`, i.e. a projective subspace of `P(R^d)`.
/// The stored basis is in reduced row echelon form, so equal subspaces
/// have identical representations.
#[derive(Clone, Debug, PartialEq)]
pub struct LinSubspace {
    rows: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
    ambient: usize,
}

impl LinSubspace {
    pub fn from_spanning(vecs: &[Vec<Rat>], ambient: usize) -> Self {
        assert!(vecs.iter().all(|v| v.len() == ambient), "ambient dimension mismatch");
        let (rows, pivots) = linalg::rref(vecs.to_vec());
        LinSubspace { rows, pivots, ambient }
    }

    pub fn span_of_points(points: &[HPoint]) -> GeomResult<Self> {
        let Some(first) = points.first() else {
            return Err(GeomError::InvalidInput("span of an empty point set".into()));
        };
        let ambient = first.dim_ambient();
        if points.iter().any(|p| p.dim_ambient() != ambient) {
            return Err(GeomError::InvalidInput("mixed ambient dimensions".into()));
        }
        let rows: Vec<Vec<Rat>> = points.iter().map(|p| p.coords().to_vec()).collect();
        Ok(LinSubspace::from_spanning(&rows, ambient))
    }

    /// Linear dimension; the projective dimension is one less.
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vec<Rat>] {
        &self.rows
    }

    /// Coordinates of `lift` in the row basis, or None when not a member.
    /// RREF rows are the identity on pivot columns, so coordinates read off.
    pub fn coords_of(&self, lift: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(lift.len(), self.ambient, "ambient dimension mismatch");
        let xi: Vec<Rat> = self.pivots.iter().map(|&p| lift[p].clone()).collect();
        let rebuilt = self.lift_from_coords(&xi);
        if rebuilt == lift {
            Some(xi)
        } else {
            None
        }
    }

    pub fn lift_from_coords(&self, xi: &[Rat]) -> Vec<Rat> {
        assert_eq!(xi.len(), self.rows.len(), "coordinate count mismatch");
        let mut out = vec![Rat::zero(); self.ambient];
        for (c, row) in xi.iter().zip(&self.rows) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(row) {
                *o += c * x;
            }
        }
        out
    }

    pub fn contains_lift(&self, lift: &[Rat]) -> bool {
        self.coords_of(lift).is_some()
    }

    pub fn contains(&self, p: &HPoint) -> bool {
        self.contains_lift(p.coords())
    }

    /// Ambient functional extracting the `i`-th span coordinate.
    /// Only meaningful on members of the subspace.
    pub fn coordinate_functional(&self, i: usize) -> Vec<Rat> {
        let mut f = vec![Rat::zero(); self.ambient];
        f[self.pivots[i]] = Rat::one();
        f
    }
}

/// An affine chart `{x : f(x) = 1}` given by a linear functional.
#[derive(Clone, Debug, PartialEq)]
pub struct Chart {
    f: Vec<Rat>,
}

impl Chart {
    pub fn new(f: Vec<Rat>) -> GeomResult<Self> {
        if linalg::is_zero_vec(&f) {
            return Err(GeomError::InvalidInput("zero functional is not a chart".into()));
        }
        Ok(Chart { f })
    }

    pub fn functional(&self) -> &[Rat] {
        &self.f
    }

    pub fn eval_lift(&self, x: &[Rat]) -> Rat {
        linalg::dot(&self.f, x)
    }

    pub fn eval(&self, p: &HPoint) -> Rat {
        self.eval_lift(p.coords())
    }

    /// The representative with `f = 1`, or None for points at infinity.
    pub fn dehomog(&self, p: &HPoint) -> Option<Vec<Rat>> {
        let v = self.eval(p);
        if v.is_zero() {
            return None;
        }
        Some(p.coords().iter().map(|x| x / &v).collect())
    }
}

/// Projective span of a point set.
pub fn span(points: &[HPoint]) -> GeomResult<LinSubspace> {
    LinSubspace::span_of_points(points)
}

fn det2(u: &[Rat], v: &[Rat], i: usize, j: usize) -> Rat {
    &u[i] * &v[j] - &u[j] * &v[i]
}

/// Cross ratio `[a, x, y, b]` of four collinear points.
///
/// Computed as a quotient of 2x2 determinants over a coordinate pair on which
/// `(a, b)` is nonsingular. The value does not depend on the lifts or on the
/// chosen pair. When the four points sit at affine parameters `ta, tx, ty, tb`
/// on a line, the value is `((tx-tb)(ty-ta)) / ((tx-ta)(ty-tb))`.
pub fn cross_ratio(a: &HPoint, x: &HPoint, y: &HPoint, b: &HPoint) -> GeomResult<Rat> {
    let d = a.dim_ambient();
    if [x, y, b].iter().any(|p| p.dim_ambient() != d) {
        return Err(GeomError::InvalidInput("mixed ambient dimensions".into()));
    }
    if a.proj_eq(b) {
        return Err(GeomError::DegenerateConfiguration("coincident chord endpoints".into()));
    }
    for (p, name) in [(x, "x"), (y, "y")] {
        if p.proj_eq(a) || p.proj_eq(b) {
            return Err(GeomError::DegenerateConfiguration(format!(
                "interior point {name} coincides with a chord endpoint"
            )));
        }
    }
    let rows: Vec<Vec<Rat>> = [a, x, y, b].iter().map(|p| p.coords().to_vec()).collect();
    if linalg::rank(&rows) != 2 {
        return Err(GeomError::NonCollinear);
    }
    let (au, xu, yu, bu) = (a.coords(), x.coords(), y.coords(), b.coords());
    for i in 0..d {
        for j in i + 1..d {
            if det2(au, bu, i, j).is_zero() {
                continue;
            }
            // x, y lie on the line through a, b with nonzero coefficients on
            // both ends (coincidences were excluded), so no factor vanishes.
            let num = det2(xu, bu, i, j) * det2(au, yu, i, j);
            let den = det2(au, xu, i, j) * det2(yu, bu, i, j);
            return Ok(num / den);
        }
    }
    unreachable!("independent points admit a nonsingular coordinate pair")
}

/// The point at affine parameter `t` on the line through `x` (t = 0) and
/// `y` (t = 1), in the given chart.
pub fn line_param(x: &HPoint, y: &HPoint, t: &Rat, chart: &Chart) -> GeomResult<HPoint> {
    let u = chart.dehomog(x).ok_or(GeomError::NoCommonChart)?;
    let v = chart.dehomog(y).ok_or(GeomError::NoCommonChart)?;
    let w = linalg::sub_vec(&v, &u);
    let p = linalg::add_vec(&u, &linalg::scale_vec(&w, t));
    // chart(p) = 1, so p is nonzero.
    HPoint::new(p)
}
