//! Helpers for exact rational scalars.

use num::{BigInt, BigRational, One, Signed, Zero};
use num_traits::ToPrimitive;

use crate::error::{GeomError, GeomResult};

pub type Rat = BigRational;
pub type Int = BigInt;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

pub fn rint(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// Parses "p", "-p" or "p/q" with arbitrary-precision integers.
pub fn parse_rat(s: &str) -> GeomResult<Rat> {
    let s = s.trim();
    let bad = || GeomError::InvalidInput(format!("cannot parse rational '{s}'"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: Int = p.trim().parse().map_err(|_| bad())?;
            let q: Int = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(GeomError::InvalidInput(format!("zero denominator in '{s}'")));
            }
            Ok(Rat::new(p, q))
        }
        None => {
            let p: Int = s.parse().map_err(|_| bad())?;
            Ok(Rat::from_integer(p))
        }
    }
}

/// Canonical text form: "p" for integers, "p/q" otherwise, denominator positive.
pub fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // Fall back on a quotient of leading digits when the raw conversion
        // overflows; only relative magnitude matters at that scale.
        let n = r.numer();
        let d = r.denom();
        let shift = (n.bits().max(d.bits())).saturating_sub(500) as u32;
        let n = n >> shift;
        let d = d >> shift;
        n.to_f64().unwrap_or(f64::NAN) / d.to_f64().unwrap_or(f64::NAN)
    })
}

/// Best rational approximation with denominator at most `max_den`,
/// via the continued fraction expansion of `x`.
pub fn rat_from_f64(x: f64, max_den: u64) -> GeomResult<Rat> {
    if !x.is_finite() {
        return Err(GeomError::OutOfRange(format!("non-finite float {x}")));
    }
    let neg = x < 0.0;
    let mut x = x.abs();
    let (mut p0, mut q0) = (Int::zero(), Int::one());
    let (mut p1, mut q1) = (Int::one(), Int::zero());
    let cap = Int::from(max_den.max(1));
    for _ in 0..64 {
        let a = x.floor();
        if a > 1e18 {
            break;
        }
        let ai = Int::from(a as i64);
        let p2 = &ai * &p1 + &p0;
        let q2 = &ai * &q1 + &q0;
        if q2 > cap {
            break;
        }
        p0 = std::mem::replace(&mut p1, p2);
        q0 = std::mem::replace(&mut q1, q2);
        let frac = x - a;
        if frac < 1e-15 {
            break;
        }
        x = 1.0 / frac;
    }
    if q1.is_zero() {
        return Err(GeomError::OutOfRange(format!("no approximation for {x}")));
    }
    let r = Rat::new(p1, q1);
    Ok(if neg { -r } else { r })
}

/// Clears denominators, divides by the content and makes the first nonzero
/// entry positive. Two lifts of the same projective point agree here.
pub fn canonical_int_vec(v: &[Rat]) -> Vec<Int> {
    let mut den = Int::one();
    for x in v {
        den = num_integer::lcm(den, x.denom().clone());
    }
    let mut ints: Vec<Int> = v.iter().map(|x| x.numer() * (&den / x.denom())).collect();
    let mut g = Int::zero();
    for x in &ints {
        g = num_integer::gcd(g, x.clone());
    }
    if !g.is_zero() {
        for x in &mut ints {
            *x /= &g;
        }
    }
    if let Some(first) = ints.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            for x in &mut ints {
                *x = -x.clone();
            }
        }
    }
    ints
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["3", "-7", "22/7", "-1/3"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(fmt_rat(&r), s);
        }
        assert_eq!(fmt_rat(&parse_rat("4/6").unwrap()), "2/3");
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn continued_fraction_approximation() {
        let r = rat_from_f64(std::f64::consts::PI, 1000).unwrap();
        assert_eq!(r, rat(355, 113));
        let half = rat_from_f64(0.5, 1 << 20).unwrap();
        assert_eq!(half, rat(1, 2));
        let neg = rat_from_f64(-2.25, 100).unwrap();
        assert_eq!(neg, rat(-9, 4));
    }

    #[test]
    fn canonical_vector_identifies_lifts() {
        let a = vec![rat(1, 2), rat(-1, 3), rint(0)];
        let b = vec![rat(-3, 1), rint(2), rint(0)];
        assert_eq!(canonical_int_vec(&a), canonical_int_vec(&b));
        assert_eq!(canonical_int_vec(&a), vec![Int::from(3), Int::from(-2), Int::from(0)]);
    }
}
