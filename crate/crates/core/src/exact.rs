//! Exact integer and rational helpers shared by every module.
//!
//! Rationals cross text boundaries as `"num/den"` strings; decimal notation is
//! rejected so that no value is ever silently rounded.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn from_u64(n: u64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn from_biguint(n: &BigUint) -> Rational {
    Rational::from_integer(BigInt::from(n.clone()))
}

/// Parses `"num/den"` or a bare integer.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::input(format!("rational must be written as num/den, got {s:?}"));
    if s.contains(['.', 'e', 'E']) {
        return Err(bad());
    }
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::input(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(num, den))
}

/// Canonical `"num/den"` form (reduced, positive denominator).
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn pow(r: &Rational, e: u32) -> Rational {
    num_traits::pow(r.clone(), e as usize)
}

/// Smallest integer `>= r`.
pub fn ceil_to_u64(r: &Rational) -> Option<u64> {
    r.ceil().to_integer().to_u64()
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= BigUint::from(n - i);
        acc /= BigUint::from(i + 1);
    }
    acc
}

/// Rational upper bound on `ln(x)` for rational `x >= 1`.
///
/// Writes `x = 2^m * y` with `y` in `[1, 2)` and bounds both `ln 2` and `ln y`
/// by the series `ln z = 2 * sum_{j>=0} t^(2j+1)/(2j+1)`, `t = (z-1)/(z+1)`,
/// truncated after `terms` terms; the tail is bounded by the geometric majorant
/// `2 t^(2N+1) / ((2N+1)(1 - t^2))`. Since `t <= 1/3` the absolute error is
/// below `9^-terms`.
pub fn ln_upper_bound(x: &Rational, terms: u32) -> Result<Rational> {
    if *x < Rational::one() {
        return Err(Error::input(format!(
            "ln upper bound needs x >= 1, got {}",
            format_rational(x)
        )));
    }
    let two = int(2);
    let mut m = 0u32;
    let mut y = x.clone();
    while y >= two {
        y /= &two;
        m += 1;
    }
    let ln2 = atanh_series_upper(&two, terms);
    let lny = atanh_series_upper(&y, terms);
    Ok(ln2 * int(m as i64) + lny)
}

fn atanh_series_upper(z: &Rational, terms: u32) -> Rational {
    let one = Rational::one();
    if *z == one {
        return Rational::zero();
    }
    let t = (z - &one) / (z + &one);
    let t2 = &t * &t;
    let mut power = t.clone();
    let mut sum = Rational::zero();
    for j in 0..terms {
        sum += &power / int(2 * j as i64 + 1);
        power = &power * &t2;
    }
    let tail = &power / (int(2 * terms as i64 + 1) * (&one - &t2));
    (sum + tail) * int(2)
}

/// Rational lower bound on Euler's number, used where an inequality has `e`
/// on its larger side.
pub fn euler_lower_bound() -> Rational {
    ratio(2_718_281, 1_000_000)
}

/// Floor of a nonnegative rational as `u64`; `None` on overflow or sign.
pub fn floor_to_u64(r: &Rational) -> Option<u64> {
    if r.is_negative() {
        return None;
    }
    r.floor().to_integer().to_u64()
}
