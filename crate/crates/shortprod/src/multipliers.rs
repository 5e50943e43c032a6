//! Construction of truncated multipliers: digit prefixes of embedded
//! constants and leading digits of exact rationals such as powers of five.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::arith::{digit_count, ensure_base, most_significant_digits};
use crate::Error;

/// Digits of a constant, most significant first, embedded as a literal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConstantDigits {
    pub name: &'static str,
    pub base: u32,
    pub digits: &'static str,
}

/// Twenty decimal digits of pi.
pub const PI_DECIMAL: ConstantDigits = ConstantDigits {
    name: "pi",
    base: 10,
    digits: "31415926535897932384",
};

impl ConstantDigits {
    /// Number of embedded digits.
    pub fn available(&self) -> u64 {
        self.digits.len() as u64
    }

    /// The integer formed by the first `n` digits (truncation, no rounding).
    pub fn prefix(&self, n: u64) -> Result<BigUint, Error> {
        if n == 0 {
            return Err(Error::ZeroArgument("digit count"));
        }
        if n > self.available() {
            return Err(Error::ConstantDigitsExhausted {
                name: self.name,
                requested: n,
                available: self.available(),
            });
        }
        let text = &self.digits[..n as usize];
        Ok(BigUint::parse_bytes(text.as_bytes(), self.base).expect("embedded digits are valid"))
    }
}

/// The integer formed by the first `n` decimal digits of pi.
pub fn pi_multiplier(n: u64) -> Result<BigUint, Error> {
    PI_DECIMAL.prefix(n)
}

/// Keeps only the `n` most significant digits of `x` in `base`; returns `x`
/// unchanged when it has no more than `n` digits.
pub fn truncate_to_digits(x: &BigUint, n: u64, base: &BigUint) -> Result<BigUint, Error> {
    if x.is_zero() {
        return Err(Error::ZeroArgument("value"));
    }
    if n == 0 {
        return Err(Error::ZeroArgument("digit count"));
    }
    ensure_base(base)?;
    let have = digit_count(x, base)?;
    most_significant_digits(x, n.min(have), base)
}

/// The `n` most significant base-`b` digits of the rational p/q, with the
/// scale that was applied: returns (m, e) with m = floor((p/q) * base^e)
/// and base^(n-1) <= m < base^n.
///
/// Rescaling numerator or denominator by the base moves the digit count of
/// the floor by exactly one, so the loop walks straight to `n` digits.
pub fn truncate_rational(
    p: &BigUint,
    q: &BigUint,
    n: u64,
    base: &BigUint,
) -> Result<(BigUint, i64), Error> {
    if p.is_zero() {
        return Err(Error::ZeroArgument("numerator"));
    }
    if q.is_zero() {
        return Err(Error::ZeroArgument("denominator"));
    }
    if n == 0 {
        return Err(Error::ZeroArgument("digit count"));
    }
    ensure_base(base)?;
    let mut num = p.clone();
    let mut den = q.clone();
    let mut e = 0i64;
    loop {
        let m = &num / &den;
        let have = digit_count(&m, base)?;
        if have == n {
            return Ok((m, e));
        }
        if have < n {
            num *= base;
            e += 1;
        } else {
            den *= base;
            e -= 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Pow;
    use proptest::prelude::*;

    fn n(x: u128) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn pi_prefixes() {
        assert_eq!(pi_multiplier(1).unwrap(), n(3));
        assert_eq!(pi_multiplier(10).unwrap(), n(3141592653));
        assert_eq!(pi_multiplier(13).unwrap(), n(3141592653589));
        assert_eq!(
            pi_multiplier(20).unwrap(),
            "31415926535897932384".parse().unwrap()
        );
    }

    #[test]
    fn pi_prefix_bounds() {
        assert_eq!(pi_multiplier(0), Err(Error::ZeroArgument("digit count")));
        assert_eq!(
            pi_multiplier(21),
            Err(Error::ConstantDigitsExhausted {
                name: "pi",
                requested: 21,
                available: 20,
            })
        );
    }

    #[test]
    fn shorter_pi_prefixes_are_truncations_of_the_longest() {
        let full = pi_multiplier(20).unwrap();
        for len in 1..=20u64 {
            let scale: BigUint = Pow::pow(&n(10), 20 - len);
            assert_eq!(pi_multiplier(len).unwrap(), &full / scale);
        }
    }

    #[test]
    fn truncation_examples() {
        assert_eq!(truncate_to_digits(&n(998001), 3, &n(10)).unwrap(), n(998));
        assert_eq!(truncate_to_digits(&n(7), 5, &n(10)).unwrap(), n(7));
        assert_eq!(truncate_to_digits(&n(64_999_704), 2, &n(10)).unwrap(), n(64));
    }

    #[test]
    fn truncation_keeps_the_top_bits_of_a_power() {
        let p: BigUint = Pow::pow(&n(5), 100u64);
        // 5^100 needs 233 bits; its top 128 are a plain shift by 105.
        let top = truncate_to_digits(&p, 128, &n(2)).unwrap();
        assert_eq!(top, &p >> 105u32);
        assert_eq!(digit_count(&top, &n(2)).unwrap(), 128);
    }

    #[test]
    fn rational_truncation_examples() {
        let cases: [(u128, u128, u64, u128, u128, i64); 6] = [
            (1, 3, 3, 10, 333, 3),
            (22, 7, 5, 10, 31428, 4),
            (1, 25, 10, 2, 655, 14),
            (1000, 1, 2, 10, 10, -2),
            (1, 1, 8, 2, 128, 7),
            (25, 1, 8, 2, 200, 3),
        ];
        for (p, q, digits, base, m, e) in cases {
            assert_eq!(
                truncate_rational(&n(p), &n(q), digits, &n(base)).unwrap(),
                (n(m), e),
                "{p}/{q} to {digits} digits in base {base}"
            );
        }
    }

    #[test]
    fn rational_truncation_validates_inputs() {
        assert_eq!(
            truncate_rational(&n(0), &n(3), 2, &n(10)),
            Err(Error::ZeroArgument("numerator"))
        );
        assert_eq!(
            truncate_rational(&n(3), &n(0), 2, &n(10)),
            Err(Error::ZeroArgument("denominator"))
        );
        assert_eq!(
            truncate_rational(&n(3), &n(7), 0, &n(10)),
            Err(Error::ZeroArgument("digit count"))
        );
        assert_eq!(
            truncate_rational(&n(3), &n(7), 2, &n(1)),
            Err(Error::InvalidBase)
        );
    }

    proptest! {
        #[test]
        fn rational_truncation_floors_and_sizes(
            p in 1u128..,
            q in 1u128..,
            digits in 1u64..60,
            base in 2u128..40,
        ) {
            let (m, e) = truncate_rational(&n(p), &n(q), digits, &n(base)).unwrap();
            prop_assert_eq!(digit_count(&m, &n(base)).unwrap(), digits);
            // m = floor((p/q) * base^e): m*q <= p*base^e < (m+1)*q, with the
            // scale moved to whichever side keeps exponents nonnegative.
            let (scaled_p, unscale): (BigUint, BigUint) = if e >= 0 {
                (n(p) * Pow::pow(&n(base), e as u64), BigUint::from(1u32))
            } else {
                (n(p), Pow::pow(&n(base), (-e) as u64))
            };
            prop_assert!(&m * &n(q) * &unscale <= scaled_p);
            prop_assert!(scaled_p < (m + 1u32) * n(q) * unscale);
        }
    }
}
