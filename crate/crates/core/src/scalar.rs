//! Exact rational scalars.
//!
//! Everything in the crate is computed over ℚ with arbitrary-precision
//! integers, so identity checks are equalities rather than tolerances.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An exact rational number, always kept in lowest terms with a positive
/// denominator.
pub type Scalar = BigRational;

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// `p / q`; panics on `q == 0`.
pub fn ratio(p: i64, q: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

pub fn half() -> Scalar {
    ratio(1, 2)
}

/// Parses `"p"` or `"p/q"` (optional leading sign on `p` only).
///
/// The result is normalized; `"p/0"`, empty strings and anything carrying
/// whitespace, a decimal point or an exponent are rejected.
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let bad = |reason: &str| Error::Scalar {
        text: text.to_string(),
        reason: reason.to_string(),
    };
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let numerator = parse_integer(num, true).ok_or_else(|| bad("malformed numerator"))?;
    let denominator = match den {
        Some(d) => parse_integer(d, false).ok_or_else(|| bad("malformed denominator"))?,
        None => BigInt::one(),
    };
    if denominator.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(Scalar::new(numerator, denominator))
}

fn parse_integer(text: &str, signed: bool) -> Option<BigInt> {
    let digits = match text.strip_prefix('-').or_else(|| text.strip_prefix('+')) {
        Some(rest) if signed => rest,
        Some(_) => return None,
        None => text,
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    BigInt::from_str(text).ok()
}

/// Canonical text form: `"p"` when the denominator is 1, `"p/q"` otherwise.
pub fn format_scalar(value: &Scalar) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Sign-aware coefficient rendering for linear combinations (`"3/2*e1"`).
pub(crate) fn format_term(coefficient: &Scalar, name: &str, first: bool) -> String {
    let magnitude = coefficient.abs();
    let body = if magnitude.is_one() {
        name.to_string()
    } else {
        format!("{}*{}", format_scalar(&magnitude), name)
    };
    match (first, coefficient.is_negative()) {
        (true, false) => body,
        (true, true) => format!("-{body}"),
        (false, false) => format!(" + {body}"),
        (false, true) => format!(" - {body}"),
    }
}
