//! Exact arithmetic kernel.
//!
//! Coordinates and parameters are arbitrary-precision rationals
//! ([`Rational`]), normalized eagerly after every operation. Degree-2
//! algebraic values `a + b*sqrt(c)` appear only in the convex pipeline and
//! are carried by [`QuadraticNumber`]; predicates that mix several radicands
//! reduce to exact sign queries on [`RadicalSum`].

mod quadratic;
mod radical;

pub use quadratic::{quad_sign, QuadraticNumber};
pub use radical::RadicalSum;

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;

pub type Int = BigInt;
/// Exact rational number, always stored in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// Convenience constructor for small rationals.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Convenience constructor for small integers.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Three-way comparison consistent with the real order.
pub fn rational_cmp(x: &Rational, y: &Rational) -> Ordering {
    x.cmp(y)
}

/// Parses an exact rational from a fraction (`p/q`, `q > 0`), a plain
/// integer, or a decimal literal (`0.25` becomes `1/4` exactly). A single
/// leading sign is accepted.
pub fn parse_rational(input: &str) -> Result<Rational> {
    let s = input.trim();
    if s.is_empty() {
        return Err(Error::ParseNumber(input.to_string()));
    }
    let (sign, body) = match s.as_bytes()[0] {
        b'+' => (1, &s[1..]),
        b'-' => (-1, &s[1..]),
        _ => (1, s),
    };
    if body.is_empty() {
        return Err(Error::ParseNumber(input.to_string()));
    }
    let value = if let Some((num, den)) = body.split_once('/') {
        let n: BigInt = num
            .parse()
            .map_err(|_| Error::ParseNumber(input.to_string()))?;
        let d: BigInt = den
            .parse()
            .map_err(|_| Error::ParseNumber(input.to_string()))?;
        if num.starts_with('-') || num.starts_with('+') || den.starts_with('-') || den.starts_with('+') {
            return Err(Error::ParseNumber(input.to_string()));
        }
        if d.is_zero() {
            return Err(Error::ParseNumber(format!("{input}: zero denominator")));
        }
        Rational::new(n, d)
    } else if let Some((int_part, frac_part)) = body.split_once('.') {
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::ParseNumber(input.to_string()));
        }
        let int_part = if int_part.is_empty() { "0" } else { int_part };
        if !int_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::ParseNumber(input.to_string()));
        }
        let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
        let whole: BigInt = int_part
            .parse()
            .map_err(|_| Error::ParseNumber(input.to_string()))?;
        let frac: BigInt = frac_part
            .parse()
            .map_err(|_| Error::ParseNumber(input.to_string()))?;
        Rational::new(whole * &scale + frac, scale)
    } else {
        if !body.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::ParseNumber(input.to_string()));
        }
        let n: BigInt = body
            .parse()
            .map_err(|_| Error::ParseNumber(input.to_string()))?;
        Rational::from_integer(n)
    };
    Ok(if sign < 0 { -value } else { value })
}

/// Canonical string form: `p/q` with the denominator omitted when it is 1.
pub fn format_rational(x: &Rational) -> String {
    x.to_string()
}

/// Decimal rendering for display, rounded to `digits` fractional digits with
/// trailing zeros trimmed. Library results stay exact; only output formatting
/// goes through here.
pub fn to_decimal_string(x: &Rational, digits: u32) -> String {
    let scale = BigInt::from(10u32).pow(digits);
    let scaled = x * Rational::from_integer(scale.clone());
    let rounded = scaled.round().to_integer();
    let neg = rounded.is_negative();
    let abs = rounded.abs();
    let (int_part, frac_part) = abs.div_rem(&scale);
    let mut frac = frac_part.to_string();
    while frac.len() < digits as usize {
        frac.insert(0, '0');
    }
    let frac = frac.trim_end_matches('0');
    let sign = if neg { "-" } else { "" };
    if frac.is_empty() {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac}")
    }
}

pub fn to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Exact square root when `x` is the square of a rational, `None` otherwise.
pub fn rational_sqrt_exact(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    if x.is_zero() {
        return Some(Rational::zero());
    }
    let n = x.numer();
    let d = x.denom();
    let sn = n.sqrt();
    let sd = d.sqrt();
    if &(&sn * &sn) == n && &(&sd * &sd) == d {
        Some(Rational::new(sn, sd))
    } else {
        None
    }
}

/// A rational lower bound for `sqrt(x)` with absolute error below `2^-bits`.
pub fn sqrt_lower(x: &Rational, bits: u32) -> Rational {
    debug_assert!(!x.is_negative());
    if x.is_zero() {
        return Rational::zero();
    }
    // sqrt(n/d) = sqrt(n*d)/d; scale by 4^bits before the integer root.
    let nd = x.numer() * x.denom();
    let scaled = &nd << (2 * bits as usize);
    let root = scaled.sqrt();
    Rational::new(root, x.denom() << (bits as usize))
}

/// A rational upper bound for `sqrt(x)` with absolute error below `2^-bits`.
pub fn sqrt_upper(x: &Rational, bits: u32) -> Rational {
    debug_assert!(!x.is_negative());
    if x.is_zero() {
        return Rational::zero();
    }
    let nd = x.numer() * x.denom();
    let scaled = &nd << (2 * bits as usize);
    let root = scaled.sqrt() + BigInt::one();
    Rational::new(root, x.denom() << (bits as usize))
}

/// Smallest positive integer `z` with `z^2 >= x`.
pub fn ceil_sqrt(x: &Rational) -> BigInt {
    assert!(x.is_positive(), "ceil_sqrt needs a positive argument");
    let q = x.numer().div_ceil(x.denom());
    let mut z = q.sqrt();
    while &(&z * &z) * x.denom() < *x.numer() {
        z += 1;
    }
    if z.is_zero() {
        z = BigInt::one();
    }
    z
}
