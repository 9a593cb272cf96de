//! Arbitrary precision rationals and their `p/q` text form.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serializer};

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `p`, `-p` or `p/q`. Surrounding whitespace is ignored.
pub fn parse_q(s: &str) -> Result<Q> {
    let t = s.trim();
    let bad = || Error::BadRational(s.to_string());
    match t.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Q::new(n, d))
        }
        None => Ok(Q::from_integer(t.parse().map_err(|_| bad())?)),
    }
}

/// Renders as `p` or `p/q`.
pub fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn is_one(x: &Q) -> bool {
    x.is_one()
}

pub fn abs(x: &Q) -> Q {
    x.abs()
}

/// Returns `Some(n)` if `x` is a non-negative integer that fits in `usize`.
pub fn to_usize(x: &Q) -> Option<usize> {
    if !x.is_integer() || x.is_negative() {
        return None;
    }
    x.numer().to_string().parse().ok()
}

/// Serde helpers: rationals are written as strings, and read from either
/// strings or JSON integers.
pub mod serde_q {
    use super::*;

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Raw {
        Str(String),
        Int(i64),
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Q, D::Error> {
        match Raw::deserialize(d)? {
            Raw::Str(s) => parse_q(&s).map_err(serde::de::Error::custom),
            Raw::Int(n) => Ok(q(n)),
        }
    }

    pub fn serialize<S: Serializer>(x: &Q, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&fmt_q(x))
    }

    pub mod vec {
        use super::*;

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Q>, D::Error> {
            let raw = Vec::<Raw>::deserialize(d)?;
            raw.into_iter()
                .map(|r| match r {
                    Raw::Str(s) => parse_q(&s).map_err(serde::de::Error::custom),
                    Raw::Int(n) => Ok(q(n)),
                })
                .collect()
        }

        pub fn serialize<S: Serializer>(xs: &[Q], s: S) -> std::result::Result<S::Ok, S::Error> {
            s.collect_seq(xs.iter().map(fmt_q))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_render() {
        assert_eq!(parse_q("3/6").unwrap(), qf(1, 2));
        assert_eq!(parse_q(" -4 ").unwrap(), q(-4));
        assert_eq!(fmt_q(&qf(-2, 4)), "-1/2");
        assert_eq!(fmt_q(&q(7)), "7");
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("x").is_err());
    }

    #[test]
    fn usize_conversion() {
        assert_eq!(to_usize(&q(3)), Some(3));
        assert_eq!(to_usize(&qf(1, 2)), None);
        assert_eq!(to_usize(&q(-1)), None);
    }
}
