//! Exact rational numbers for toughness values and thresholds.

use crate::error::{Error, Result};

pub type Rational = num_rational::Ratio<i64>;

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(num, den)
}

pub fn integer(v: i64) -> Rational {
    Rational::from_integer(v)
}

/// Parses `"3"`, `"-1/2"` or `"5/2"`. Zero denominators are rejected.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = || Error::InvalidParameter(format!("not a rational number: {text:?}"));
    match text.split_once('/') {
        None => text.parse::<i64>().map(integer).map_err(|_| bad()),
        Some((num, den)) => {
            let num = num.trim().parse::<i64>().map_err(|_| bad())?;
            let den = den.trim().parse::<i64>().map_err(|_| bad())?;
            if den == 0 {
                return Err(bad());
            }
            Ok(Rational::new(num, den))
        }
    }
}

/// `(3t - 1) / 2`, the toughness required by the t-closure lemma.
pub fn closure_toughness_bound(t: u32) -> Rational {
    Rational::new(3 * i64::from(t) - 1, 2)
}

/// Serde adapter writing rationals as `"num/den"` strings (`"3"` when integral).
pub mod as_string {
    use super::{parse_rational, Rational};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(value)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).map_err(serde::de::Error::custom)
    }
}
