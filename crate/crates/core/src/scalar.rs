//! Exact rational scalars.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::str::FromStr;

/// The ground field: arbitrary precision rationals, always in lowest terms.
pub type Scalar = BigRational;

/// Degree of a homogeneous element, 0 (even) or 1 (odd).
pub type Parity = u8;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

pub fn one() -> Scalar {
    Scalar::one()
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

/// `(-1)^e`.
pub fn sign(e: usize) -> Scalar {
    if e % 2 == 0 {
        Scalar::one()
    } else {
        -Scalar::one()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("not an exact rational: {0:?}")]
pub struct ScalarParseError(pub String);

/// Parses `p`, `-p`, `p/q`. Decimal points and exponents are rejected.
pub fn parse_scalar(text: &str) -> Result<Scalar, ScalarParseError> {
    let t = text.trim();
    let bad = || ScalarParseError(text.to_string());
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let digits = |s: &str, signed: bool| {
        let body = if signed { s.strip_prefix(['-', '+']).unwrap_or(s) } else { s };
        !body.is_empty() && body.bytes().all(|b| b.is_ascii_digit())
    };
    if !digits(n, true) || !digits(d, false) {
        return Err(bad());
    }
    let n = BigInt::from_str(n.trim_start_matches('+')).map_err(|_| bad())?;
    let d = BigInt::from_str(d).map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Scalar::new(n, d))
}

/// Canonical text: `p` for integers, `p/q` otherwise, lowest terms, sign on the numerator.
pub fn format_scalar(s: &Scalar) -> String {
    if s.is_integer() {
        s.numer().to_string()
    } else {
        format!("{}/{}", s.numer(), s.denom())
    }
}

pub fn is_unit_sign(s: &Scalar) -> bool {
    s.is_integer() && s.abs().is_one()
}
