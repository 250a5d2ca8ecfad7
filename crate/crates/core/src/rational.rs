//! Exact rational scalars and their `"p/q"` text form.

use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Arbitrary-precision rational, always reduced with a positive denominator.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RationalParseError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid integer `{0}` in rational literal")]
    InvalidInteger(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

/// Parses `"p"` or `"p/q"`; the result is normalized to lowest terms.
pub fn parse_rational(text: &str) -> Result<Rational, RationalParseError> {
    let text = text.trim();
    if text.is_empty() {
        return Err(RationalParseError::Empty);
    }
    let int = |s: &str| {
        BigInt::from_str(s.trim()).map_err(|_| RationalParseError::InvalidInteger(s.to_string()))
    };
    match text.split_once('/') {
        None => Ok(Rational::from_integer(int(text)?)),
        Some((p, q)) => {
            let (p, q) = (int(p)?, int(q)?);
            if q.is_zero() {
                return Err(RationalParseError::ZeroDenominator(text.to_string()));
            }
            Ok(Rational::new(p, q))
        }
    }
}

/// Canonical text: `"p"` when the denominator is 1, `"p/q"` otherwise.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::one(), |acc, k| acc * k)
}

pub fn factorial_rational(n: usize) -> Rational {
    Rational::from_integer(BigInt::from(factorial(n)))
}

/// Exact `q`-th root of a rational, if one exists.
///
/// Negative inputs only have a root for odd `q`.
pub fn exact_root(r: &Rational, q: u32) -> Option<Rational> {
    if q == 0 {
        return None;
    }
    if r.is_negative() && q.is_even() {
        return None;
    }
    let root_of = |n: &BigInt| {
        let root = n.nth_root(q);
        (root.pow(q) == *n).then_some(root)
    };
    let num = root_of(r.numer())?;
    let den = root_of(r.denom())?;
    Some(Rational::new(num, den))
}

/// `binom(x, k)` for rational `x` via the falling factorial `x(x-1)...(x-k+1)/k!`.
pub fn generalized_binomial(x: &Rational, k: usize) -> Rational {
    let mut acc = Rational::one();
    for i in 0..k {
        acc *= x - int(i as i64);
    }
    acc / factorial_rational(k)
}
