//! Exact rationals and their canonical text form.
//!
//! Every scalar in the crate is a [`Q`], an arbitrary-precision rational.
//! The text form is `"p/q"` in lowest terms with a positive denominator,
//! or `"p"` when the value is integral.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub type Q = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RationalParseError {
    #[error("empty rational")]
    Empty,
    #[error("malformed rational `{0}`")]
    Malformed(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Q {
    Q::zero()
}

pub fn one() -> Q {
    Q::one()
}

fn parse_int(s: &str, whole: &str) -> Result<BigInt, RationalParseError> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(RationalParseError::Malformed(whole.to_string()));
    }
    s.parse::<BigInt>()
        .map_err(|_| RationalParseError::Malformed(whole.to_string()))
}

/// Parses `"p"` or `"p/q"`; the result is normalized.
pub fn parse_rational(s: &str) -> Result<Q, RationalParseError> {
    if s.is_empty() {
        return Err(RationalParseError::Empty);
    }
    match s.split_once('/') {
        None => Ok(Q::from_integer(parse_int(s, s)?)),
        Some((n, d)) => {
            let n = parse_int(n, s)?;
            if d.starts_with('-') {
                return Err(RationalParseError::Malformed(s.to_string()));
            }
            let d = parse_int(d, s)?;
            if d.is_zero() {
                return Err(RationalParseError::ZeroDenominator(s.to_string()));
            }
            Ok(Q::new(n, d))
        }
    }
}

/// Canonical text form.
pub fn format_rational(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// `base^exp` for a possibly negative exponent. Panics on `0^negative`.
pub fn pow(base: &Q, exp: i64) -> Q {
    if exp == 0 {
        return Q::one();
    }
    let mut acc = Q::one();
    let mut b = if exp < 0 { base.recip() } else { base.clone() };
    let mut e = exp.unsigned_abs();
    while e > 0 {
        if e & 1 == 1 {
            acc *= &b;
        }
        e >>= 1;
        if e > 0 {
            b = &b * &b;
        }
    }
    acc
}

pub fn is_pm_one(x: &Q) -> bool {
    x.abs().is_one()
}

pub fn vec_is_zero(v: &[Q]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn vec_add_scaled(acc: &mut [Q], coeff: &Q, v: &[Q]) {
    if coeff.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += coeff * x;
        }
    }
}

pub fn vec_sub(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn unit(n: usize, i: usize) -> Vec<Q> {
    let mut v = vec![Q::zero(); n];
    v[i] = Q::one();
    v
}
