//! Exact scalar arithmetic: rationals, Laurent polynomials in `v`, and quantum integers.

mod laurent;
mod qint;
mod ratfunc;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

pub use laurent::LaurentPoly;
pub use qint::{q_binom, q_fact, q_int};
pub use ratfunc::RationalFunction;

/// Arbitrary-precision rational, always in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QArithError {
    #[error("q-factorial of negative integer {0}")]
    NegativeFactorial(i64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("{dividend} is not divisible by {divisor} in the Laurent ring")]
    NotDivisible { dividend: String, divisor: String },
    #[error("malformed rational {0:?}")]
    MalformedRational(String),
}

pub fn rational(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"a"` or `"a/b"` (optional sign on `a`) into a reduced rational.
pub fn parse_rational(s: &str) -> Result<Rational, QArithError> {
    let bad = || QArithError::MalformedRational(s.to_string());
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// `"a"` when integral, `"a/b"` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Returns the rational as an `i64` when it is an integer that fits.
pub fn rational_to_i64(r: &Rational) -> Option<i64> {
    if r.is_integer() {
        r.numer().to_i64()
    } else {
        None
    }
}

pub(crate) fn rational_is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}
