//! Exact integer and rational arithmetic.
//!
//! Every invariant is accumulated as an [`ExactRational`] and reported as an
//! [`ExactInteger`] once integrality has been checked.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type ExactInteger = BigInt;
pub type ExactRational = BigRational;

/// Binomial coefficient `C(n, k)`, with the convention that any out-of-range
/// argument (`n < 0`, `k < 0` or `k > n`) yields zero.
pub fn binomial(n: i64, k: i64) -> ExactInteger {
    if n < 0 || k < 0 || k > n {
        return ExactInteger::zero();
    }
    let k = k.min(n - k);
    let mut acc = ExactInteger::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Builds the canonical fraction `n / d`.
pub fn rational(n: ExactInteger, d: ExactInteger) -> Result<ExactRational> {
    if d.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(ExactRational::new(n, d))
}

pub fn int(v: i64) -> ExactRational {
    ExactRational::from_integer(ExactInteger::from(v))
}

pub fn frac(n: i64, d: i64) -> ExactRational {
    debug_assert!(d != 0);
    ExactRational::new(ExactInteger::from(n), ExactInteger::from(d))
}

/// Returns the integer value of `r`, or `None` if `r` is not integral.
pub fn to_integer(r: &ExactRational) -> Option<ExactInteger> {
    r.is_integer().then(|| r.to_integer())
}

/// Formats a rational as `p` when integral and as `p/q` otherwise.
pub fn format_rational(r: &ExactRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Inverse of [`format_rational`].
pub fn parse_rational(s: &str) -> Option<ExactRational> {
    let s = s.trim();
    match s.split_once('/') {
        None => s.parse::<ExactInteger>().ok().map(ExactRational::from_integer),
        Some((n, d)) => {
            let n: ExactInteger = n.parse().ok()?;
            let d: ExactInteger = d.parse().ok()?;
            if d.is_zero() || !d.is_positive() {
                return None;
            }
            // Only canonical forms round-trip.
            if !n.gcd(&d).is_one() || d.is_one() {
                return None;
            }
            Some(ExactRational::new(n, d))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(v: i64) -> ExactInteger {
        ExactInteger::from(v)
    }

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(4, 2), big(6));
        assert_eq!(binomial(3, 5), big(0));
        assert_eq!(binomial(6, 0), big(1));
        assert_eq!(binomial(-1, 0), big(0));
        assert_eq!(binomial(5, -1), big(0));
        assert_eq!(binomial(0, 0), big(1));
    }

    #[test]
    fn binomial_row_sums_are_powers_of_two() {
        for n in 0..=64i64 {
            let sum: ExactInteger = (0..=n).map(|k| binomial(n, k)).sum();
            assert_eq!(sum, ExactInteger::one() << n as usize, "n = {n}");
        }
    }

    #[test]
    fn rational_is_canonical() {
        assert_eq!(rational(big(2), big(4)).unwrap(), frac(1, 2));
        let r = rational(big(-3), big(-6)).unwrap();
        assert_eq!((r.numer().clone(), r.denom().clone()), (big(1), big(2)));
        let z = rational(big(0), big(7)).unwrap();
        assert_eq!((z.numer().clone(), z.denom().clone()), (big(0), big(1)));
    }

    #[test]
    fn rational_rejects_zero_denominator() {
        let err = rational(big(1), big(0)).unwrap_err();
        assert!(err.to_string().contains("denominator"));
    }

    #[test]
    fn integrality() {
        assert_eq!(to_integer(&frac(6, 3)), Some(big(2)));
        assert_eq!(to_integer(&frac(1, 3)), None);
    }

    #[test]
    fn rational_text_form() {
        assert_eq!(format_rational(&frac(-3, 6)), "-1/2");
        assert_eq!(format_rational(&int(42)), "42");
        assert_eq!(parse_rational("-1/2"), Some(frac(-1, 2)));
        assert_eq!(parse_rational("2/4"), None);
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
    }

    fn digits(len: usize) -> impl Strategy<Value = String> {
        (any::<bool>(), "[1-9]", proptest::collection::vec("[0-9]", len - 1)).prop_map(
            |(neg, lead, rest)| {
                let mut s = String::new();
                if neg {
                    s.push('-');
                }
                s.push_str(&lead);
                s.extend(rest);
                s
            },
        )
    }

    fn small_rational() -> impl Strategy<Value = ExactRational> {
        (-10_000i64..10_000, 1i64..10_000).prop_map(|(n, d)| frac(n, d))
    }

    proptest! {
        #[test]
        fn decimal_round_trip(s in digits(200)) {
            let v: ExactInteger = s.parse().unwrap();
            prop_assert_eq!(v.to_string(), s);
        }

        #[test]
        fn rational_text_round_trip(r in small_rational()) {
            prop_assert_eq!(parse_rational(&format_rational(&r)), Some(r));
        }

        #[test]
        fn field_axioms(a in small_rational(), b in small_rational(), c in small_rational()) {
            prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
            prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
            prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
            if !a.is_zero() {
                prop_assert_eq!(&a * a.recip(), int(1));
            }
            prop_assert!(a.denom().is_positive());
        }
    }
}
