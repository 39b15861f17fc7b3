//! Rational helpers: parsing, JSON representation and the period vector.

use crate::error::{Result, ZetaError};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

/// Wire form of an exact rational: `{"num": "<decimal>", "den": "<decimal>"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalRepr {
    pub num: String,
    pub den: String,
}

impl From<&BigRational> for RationalRepr {
    fn from(r: &BigRational) -> Self {
        RationalRepr {
            num: r.numer().to_string(),
            den: r.denom().to_string(),
        }
    }
}

impl TryFrom<&RationalRepr> for BigRational {
    type Error = ZetaError;

    fn try_from(repr: &RationalRepr) -> Result<Self> {
        let num: BigInt = repr
            .num
            .parse()
            .map_err(|_| ZetaError::Domain(format!("bad numerator {:?}", repr.num)))?;
        let den: BigInt = repr
            .den
            .parse()
            .map_err(|_| ZetaError::Domain(format!("bad denominator {:?}", repr.den)))?;
        if den.is_zero() {
            return Err(ZetaError::Domain("zero denominator".into()));
        }
        Ok(BigRational::new(num, den))
    }
}

/// `#[serde(with = "rational_serde")]` adapter for `BigRational` fields.
pub mod rational_serde {
    use super::*;

    pub fn serialize<S: Serializer>(r: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
        RationalRepr::from(r).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BigRational, D::Error> {
        let repr = RationalRepr::deserialize(d)?;
        BigRational::try_from(&repr).map_err(serde::de::Error::custom)
    }
}

pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn to_f64(r: &BigRational) -> f64 {
    // Ratio::to_f64 handles huge numerators and denominators without overflow.
    r.to_f64().unwrap_or(f64::NAN)
}

/// Parses `"a"`, `"-a"` or `"a/b"` exactly.
pub fn parse_fraction(text: &str) -> Result<BigRational> {
    let t = text.trim();
    let bad = || ZetaError::Domain(format!("malformed fraction {text:?}"));
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = n.parse().map_err(|_| bad())?;
    let den: BigInt = d.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Nonempty list of strictly positive rational periods `w_1, ..., w_N`.
///
/// `BigRational` keeps every entry reduced, so each `w_i = r_i / q_i` already
/// satisfies `gcd(r_i, q_i) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PeriodVector(Vec<BigRational>);

impl PeriodVector {
    pub fn new(entries: Vec<BigRational>) -> Result<Self> {
        if entries.is_empty() {
            return Err(ZetaError::Domain("period vector must be nonempty".into()));
        }
        if let Some(bad) = entries.iter().find(|w| !w.is_positive()) {
            return Err(ZetaError::Domain(format!(
                "periods must be positive, got {}",
                format_rational(bad)
            )));
        }
        Ok(PeriodVector(entries))
    }

    /// Convenience constructor from `(num, den)` pairs.
    pub fn from_pairs(pairs: &[(i64, i64)]) -> Result<Self> {
        Self::new(pairs.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    /// `N` copies of the unit period.
    pub fn ones(n: usize) -> Self {
        PeriodVector(vec![BigRational::one(); n.max(1)])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.0
    }

    pub fn numerators(&self) -> impl Iterator<Item = &BigInt> {
        self.0.iter().map(|w| w.numer())
    }

    pub fn denominators(&self) -> impl Iterator<Item = &BigInt> {
        self.0.iter().map(|w| w.denom())
    }

    pub fn sum(&self) -> BigRational {
        self.0.iter().fold(BigRational::zero(), |acc, w| acc + w)
    }

    pub fn product(&self) -> BigRational {
        self.0.iter().fold(BigRational::one(), |acc, w| acc * w)
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.0.iter().map(to_f64).collect()
    }
}

impl Serialize for PeriodVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let reprs: Vec<RationalRepr> = self.0.iter().map(RationalRepr::from).collect();
        reprs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for PeriodVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let reprs = Vec::<RationalRepr>::deserialize(d)?;
        let entries = reprs
            .iter()
            .map(BigRational::try_from)
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        PeriodVector::new(entries).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for PeriodVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(format_rational).collect();
        write!(f, "{}", parts.join(","))
    }
}

pub(crate) fn lcm_all<'a>(it: impl Iterator<Item = &'a BigInt>) -> BigInt {
    it.fold(BigInt::one(), |acc, x| acc.lcm(x))
}

pub(crate) fn gcd_all<'a>(it: impl Iterator<Item = &'a BigInt>) -> BigInt {
    it.fold(BigInt::zero(), |acc, x| acc.gcd(x))
}
