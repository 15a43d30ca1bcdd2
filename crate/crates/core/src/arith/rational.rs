//! Big rationals in canonical form.
//!
//! `Rational` is `num_rational::BigRational`, which reduces by the gcd and keeps
//! the denominator positive after every operation.

use alloc::string::{String, ToString};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use num_rational::BigRational as Rational;

/// `n/d` as a canonical rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p"`, `"-p"` or `"p/q"`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

/// Serializes as `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// `x^e` for a possibly negative exponent. Panics on `0^negative`.
pub fn pow_signed(x: &Rational, e: i64) -> Rational {
    let base = if e < 0 { x.recip() } else { x.clone() };
    let mut acc = Rational::one();
    let mut b = base;
    let mut k = e.unsigned_abs();
    while k > 0 {
        if k & 1 == 1 {
            acc *= &b;
        }
        b = &b * &b;
        k >>= 1;
    }
    acc
}

/// Sign as -1, 0 or 1.
pub fn signum(x: &Rational) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}
