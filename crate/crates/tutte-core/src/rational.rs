//! Arbitrary-precision exact rational scalars.
//!
//! `Rational` is `num_rational::BigRational`, which keeps values reduced
//! (gcd of numerator and denominator is 1) with a positive denominator.
//! The text form is `p/q` with an optional sign, or just `p` when `q = 1`;
//! `Display` already produces it, and [`parse_rational`] reads it back while
//! rejecting zero denominators instead of panicking.

use alloc::string::ToString;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::Error;

pub type Rational = num_rational::BigRational;

/// Integer as a rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n/d` as a reduced rational.
///
/// Panics if `d == 0`; use [`parse_rational`] for untrusted input.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parse `p` or `p/q` (optional leading sign, surrounding whitespace allowed).
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let trimmed = s.trim();
    let err = || Error::BadRational(trimmed.to_string());
    let (num_str, den_str) = match trimmed.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (trimmed, "1"),
    };
    let num: BigInt = num_str.parse().map_err(|_| err())?;
    let den: BigInt = den_str.parse().map_err(|_| err())?;
    if den.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(num, den))
}

/// `base^exp` for a possibly negative exponent.
///
/// Panics if `base == 0` and `exp < 0`; callers must rule that case out.
pub fn rat_pow(base: &Rational, exp: i64) -> Rational {
    if exp >= 0 {
        num_traits::pow::pow(base.clone(), exp as usize)
    } else {
        assert!(!base.is_zero(), "negative power of zero");
        num_traits::pow::pow(base.recip(), (-exp) as usize)
    }
}

/// True if `r` is an integer in `0..=max`, returning it.
pub fn as_small_nonneg_integer(r: &Rational, max: u64) -> Option<u64> {
    if !r.is_integer() || r.is_negative() {
        return None;
    }
    let n = r.to_integer();
    if n > BigInt::from(max) {
        return None;
    }
    u64::try_from(n).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer;
    use num_traits::One;

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["3/4", "-3/4", "7", "0", "-12/5"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(r.to_string(), s);
        }
        assert_eq!(parse_rational(" 6/8 ").unwrap(), ratio(3, 4));
        assert_eq!(parse_rational("4/2").unwrap().to_string(), "2");
    }

    #[test]
    fn zero_denominator_is_an_error() {
        assert!(matches!(parse_rational("1/0"), Err(Error::BadRational(_))));
        assert!(parse_rational("a/b").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn values_stay_reduced() {
        let r = ratio(6, -8);
        assert_eq!(r, ratio(-3, 4));
        assert!(r.denom() > &BigInt::zero());
        assert!(r.numer().gcd(r.denom()).is_one());
    }

    #[test]
    fn powers() {
        assert_eq!(rat_pow(&ratio(2, 3), 2), ratio(4, 9));
        assert_eq!(rat_pow(&ratio(2, 3), -2), ratio(9, 4));
        assert_eq!(rat_pow(&rat(5), 0), rat(1));
    }

    #[test]
    fn small_integer_extraction() {
        assert_eq!(as_small_nonneg_integer(&rat(3), 5), Some(3));
        assert_eq!(as_small_nonneg_integer(&rat(9), 5), None);
        assert_eq!(as_small_nonneg_integer(&ratio(1, 2), 5), None);
        assert_eq!(as_small_nonneg_integer(&rat(-1), 5), None);
    }
}
