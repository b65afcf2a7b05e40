//! Exact rational scalars and small helpers shared across the crate.
//!
//! All lattice-side computations use arbitrary-precision integers and
//! rationals; floating point appears only in the amoeba sampler and the
//! Poisson verifier.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};

/// Exact rational scalar. `BigRational` keeps values reduced with a
/// positive denominator, which is exactly the canonical form we need.
pub type Rat = BigRational;

/// Arbitrary-precision integer.
pub type Int = BigInt;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(Int::from(p), Int::from(q))
}

pub fn rat_int(p: i64) -> Rat {
    Rat::from_integer(Int::from(p))
}

/// Parses `"p/q"` or `"p"` into an exact rational.
pub fn parse_rat(s: &str) -> Result<Rat, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let p: Int = num
        .parse()
        .map_err(|_| format!("invalid rational numerator {num:?}"))?;
    let q: Int = den
        .parse()
        .map_err(|_| format!("invalid rational denominator {den:?}"))?;
    if q.is_zero() {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(Rat::new(p, q))
}

/// Formats a rational as `"p"` or `"p/q"`, matching the wire format.
pub fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    use num::ToPrimitive;
    r.to_f64().unwrap_or_else(|| {
        // Fall back to a quotient of lossy conversions for huge operands.
        let n = r.numer().to_f64().unwrap_or(f64::NAN);
        let d = r.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// Divides out the gcd of the entries, keeping the direction. Returns
/// `None` for the zero vector.
pub fn primitivize(v: &[Int]) -> Option<Vec<Int>> {
    let mut g = Int::zero();
    for x in v {
        g = num::integer::gcd(g, x.abs());
    }
    if g.is_zero() {
        return None;
    }
    Some(v.iter().map(|x| x / &g).collect())
}

pub fn is_primitive(v: &[Int]) -> bool {
    let mut g = Int::zero();
    for x in v {
        g = num::integer::gcd(g, x.abs());
    }
    g.is_one()
}

pub fn dot_int(a: &[Int], b: &[Int]) -> Int {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_int_rat(a: &[Int], b: &[Rat]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| Rat::from_integer(x.clone()) * y)
        .sum()
}

pub fn dot_rat(a: &[Rat], b: &[Rat]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn int_to_rat_vec(v: &[Int]) -> Vec<Rat> {
    v.iter().map(|x| Rat::from_integer(x.clone())).collect()
}

/// Clears denominators of a nonzero rational vector and primitivizes the
/// resulting integer vector.
pub fn rat_vec_to_primitive_int(v: &[Rat]) -> Option<Vec<Int>> {
    let mut lcm = Int::one();
    for x in v {
        lcm = num::integer::lcm(lcm, x.denom().clone());
    }
    let ints: Vec<Int> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    primitivize(&ints)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["3/4", "-7/2", "5", "0", "-12"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(fmt_rat(&r), s);
        }
        assert_eq!(fmt_rat(&parse_rat("4/8").unwrap()), "1/2");
        assert_eq!(fmt_rat(&parse_rat("3/-9").unwrap()), "-1/3");
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn primitivize_examples() {
        let v = vec![int(2), int(-4), int(6)];
        assert_eq!(primitivize(&v).unwrap(), vec![int(1), int(-2), int(3)]);
        assert!(primitivize(&[int(0), int(0)]).is_none());
        assert!(is_primitive(&[int(0), int(1)]));
        assert!(!is_primitive(&[int(2), int(0)]));
    }
}
