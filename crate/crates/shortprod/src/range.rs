//! Validity ranges: for which multiplicands w does a truncated multiplier
//! still give exact leading digits of the product?
//!
//! The multiplicands are split into digit bands: band k holds the w whose
//! product w * z has exactly digits + k digits, so that producing the wanted
//! leading digits discards k digits, a division by base^k. Within band k the
//! product is exact for the whole tail family iff
//! `(w * z) rem base^k < base^k - w + 1`, checked here not per w but per run
//! of running maxima of the remainder, since the first failing w always
//! carries the largest remainder seen so far in its band.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Pow, Zero};

use crate::arith::{digit_count, ensure_base, exactness_condition};
use crate::extrema::{extrema_in_range, ExtremumRun};
use crate::Error;

/// A validity question: multiplier `z`, wanted leading `digits`, in `base`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RangeQuery {
    z: BigUint,
    digits: u64,
    base: BigUint,
}

impl RangeQuery {
    pub fn new(z: BigUint, digits: u64, base: BigUint) -> Result<Self, Error> {
        if z.is_zero() {
            return Err(Error::ZeroArgument("multiplier"));
        }
        if digits == 0 {
            return Err(Error::ZeroArgument("digit count"));
        }
        ensure_base(&base)?;
        Ok(RangeQuery { z, digits, base })
    }

    pub fn z(&self) -> &BigUint {
        &self.z
    }

    pub fn digits(&self) -> u64 {
        self.digits
    }

    pub fn base(&self) -> &BigUint {
        &self.base
    }
}

/// Half-open interval [lb, ub) of multiplicands with exact leading digits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidityRange {
    pub lb: BigUint,
    pub ub: BigUint,
}

impl fmt::Display for ValidityRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {})", self.lb, self.ub)
    }
}

/// Multiplicands whose product has exactly `digits + k` digits; truncating
/// the product to `digits` digits divides by `modulus` = base^k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DigitBand {
    pub k: u64,
    pub modulus: BigUint,
    pub first: BigUint,
    pub last: BigUint,
}

impl DigitBand {
    /// A band is empty when no product lands in its digit range.
    pub fn is_empty(&self) -> bool {
        self.last < self.first
    }
}

/// Smallest w whose product with z has at least `digits` digits.
pub fn lower_bound(q: &RangeQuery) -> BigUint {
    let floor: BigUint = Pow::pow(q.base(), q.digits() - 1);
    (floor + q.z() - 1u32) / q.z()
}

/// The k-th digit band of a query.
pub fn digit_band(q: &RangeQuery, k: u64) -> DigitBand {
    let low: BigUint = Pow::pow(q.base(), q.digits() + k - 1);
    let high = &low * q.base();
    DigitBand {
        k,
        modulus: Pow::pow(q.base(), k),
        first: (low + q.z() - 1u32) / q.z(),
        last: (high - 1u32) / q.z(),
    }
}

fn interval(lb: BigUint, ub: BigUint) -> Option<ValidityRange> {
    if ub <= lb {
        None
    } else {
        Some(ValidityRange { lb, ub })
    }
}

/// Smallest location in a violating maxima run that still violates.
///
/// Within a run, stepping back one gap lowers the remainder by
/// `(gap * z) rem m` and raises the budget `m - w + 1` by `gap`, so the
/// violation margin shrinks by a fixed amount per step; the closed form
/// counts how many backward steps keep it nonnegative.
fn smallest_violation(run: &ExtremumRun, z: &BigUint, m: &BigUint) -> BigUint {
    if run.extra_count.is_zero() {
        return run.last_location.clone();
    }
    let value = (&run.last_location * z) % m;
    // The caller established the violation, so value + w >= m + 1.
    let slack = value + &run.last_location - m - 1u32;
    let per_step = &run.gap + (&run.gap * z) % m;
    let steps = (slack / per_step).min(run.extra_count.clone());
    &run.last_location - steps * &run.gap
}

/// Computes the validity range of a truncated multiplier, or `None` when
/// even the first eligible multiplicand fails.
///
/// Bands are searched in order; inside a band, only runs of running maxima
/// of `(w * z) rem base^k` need checking, because the first failing w has
/// the largest remainder seen so far in its band (any w beating it earlier
/// would itself have failed in this or an earlier band). Two cases escape
/// the runs and are handled separately:
///
/// * when base^k divides z every remainder is zero and the condition
///   reduces to `w <= base^k`, so base^k + 1 fails if the band reaches it;
/// * when gcd(z, base^k) > 1 the remainders repeat with a period below
///   base^k, and a mere repeat of the top remainder can fail once the
///   budget `base^k - w + 1` has shrunk enough, without being a new
///   running maximum.
///
/// The band loop is capped; a search that exhausts the cap reports
/// [`Error::BandCapExceeded`] rather than looping forever.
pub fn find_range(q: &RangeQuery) -> Result<Option<ValidityRange>, Error> {
    let lb = lower_bound(q);
    let one = BigUint::one();
    let cap = 4 * (digit_count(q.z(), q.base())? + q.digits()) + 64;
    for k in 0..=cap {
        let band = digit_band(q, k);
        if band.is_empty() {
            continue;
        }
        let m = &band.modulus;
        if (q.z() % m).is_zero() {
            let threshold = m + &one;
            if band.last >= threshold {
                return Ok(interval(lb, threshold));
            }
            continue;
        }

        // Any w past the modulus fails outright, so the interesting part of
        // the band stops there; the remainder scan needs no more.
        debug_assert!(band.first <= *m);
        let scan_end = band.last.clone().min(m.clone());
        let runs = extrema_in_range(q.z(), m, &band.first, &scan_end)?;
        for run in &runs.maxima {
            if !exactness_condition(&run.last_location, q.z(), m)? {
                return Ok(interval(lb, smallest_violation(run, q.z(), m)));
            }
        }

        // Repeats of the top remainder, one period apart, come after every
        // running maximum and are the only other candidates for the first
        // failure.
        let top = runs.maxima.last().expect("sentinel opens the list");
        let period = m / q.z().gcd(m);
        let at = &top.last_location;
        let value = (at * q.z()) % m;
        // value fails at w iff w >= m + 1 - value.
        let need = m + &one - value;
        let first_repeat = if need > *at {
            at + (&need - at).div_ceil(&period) * &period
        } else {
            at + &period
        };
        if first_repeat <= scan_end {
            return Ok(interval(lb, first_repeat));
        }

        if band.last > *m {
            return Ok(interval(lb, m + &one));
        }
    }
    Err(Error::BandCapExceeded(cap))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    fn n(x: u128) -> BigUint {
        BigUint::from(x)
    }

    fn query(z: u128, digits: u64, base: u128) -> RangeQuery {
        RangeQuery::new(n(z), digits, n(base)).unwrap()
    }

    fn big_query(z: &str, digits: u64, base: u128) -> RangeQuery {
        RangeQuery::new(z.parse().unwrap(), digits, n(base)).unwrap()
    }

    fn range_of(q: &RangeQuery) -> Option<(BigUint, BigUint)> {
        find_range(q).unwrap().map(|r| (r.lb, r.ub))
    }

    #[test]
    fn query_validation() {
        assert_eq!(
            RangeQuery::new(n(0), 1, n(10)),
            Err(Error::ZeroArgument("multiplier"))
        );
        assert_eq!(
            RangeQuery::new(n(3), 0, n(10)),
            Err(Error::ZeroArgument("digit count"))
        );
        assert_eq!(RangeQuery::new(n(3), 1, n(1)), Err(Error::InvalidBase));
    }

    #[test]
    fn lower_bound_examples() {
        assert_eq!(lower_bound(&query(3141592653589, 10, 10)), n(1));
        assert_eq!(lower_bound(&query(3, 1, 10)), n(1));
        // Smallest w with 3w >= 10.
        assert_eq!(lower_bound(&query(3, 2, 10)), n(4));
    }

    #[test]
    fn band_examples() {
        let b = digit_band(&query(31416, 2, 10), 6);
        assert_eq!(b.modulus, n(1_000_000));
        assert_eq!(b.first, n(319));
        assert_eq!(b.last, n(3183));
        assert!(&b.first * 31416u32 >= n(10_000_000));
        assert!((&b.first - 1u32) * 31416u32 < n(10_000_000));
        assert!(&b.last * 31416u32 <= n(100_000_000) - 1u32);
        assert!((&b.last + 1u32) * 31416u32 > n(100_000_000) - 1u32);

        let b = digit_band(&query(3, 1, 10), 0);
        assert_eq!((b.first, b.last), (n(1), n(3)));

        // 1 * 10 hits base^(d+k) exactly, so the band holds nothing.
        let b = digit_band(&query(10, 1, 10), 0);
        assert!(b.is_empty());
        assert_eq!((b.first, b.last), (n(1), n(0)));
    }

    #[test]
    fn display_is_half_open() {
        let r = ValidityRange { lb: n(1), ub: n(1198) };
        assert_eq!(r.to_string(), "[1, 1198)");
    }

    #[test]
    fn range_examples() {
        assert_eq!(range_of(&query(3141592653589, 10, 10)), Some((n(1), n(1198))));
        assert_eq!(
            range_of(&big_query("31415926535897932384", 10, 10)),
            Some((n(1), n(17329613732)))
        );
        assert_eq!(range_of(&query(31416, 2, 10)), Some((n(1), n(1687))));
        assert_eq!(range_of(&query(3, 1, 10)), Some((n(1), n(2))));
    }

    #[test]
    fn two_digit_boundary_of_a_rounded_multiplier() {
        // 31416 * 1687 = 52_998_792 and adding w - 1 = 1686 crosses into
        // 53_000_478, so the leading pair flips from 52 to 53 right there.
        let z = n(31416);
        let ten = n(10);
        assert!(oracle::exact(&n(1686), &z, 2, &ten).unwrap());
        assert!(!oracle::exact(&n(1687), &z, 2, &ten).unwrap());
    }

    #[test]
    fn range_is_empty_when_the_multiplier_is_too_short() {
        // Fewer multiplier digits than wanted: even the first eligible w
        // lets the tail shift the output.
        assert_eq!(range_of(&query(3, 2, 10)), None);
        assert_eq!(range_of(&query(10, 5, 10)), None);
        assert_eq!(range_of(&query(9999, 5, 10)), None);
    }

    #[test]
    fn first_failure_can_be_a_repeat_of_the_top_remainder() {
        // With gcd(z, base^k) > 1 the remainders cycle; these inputs fail
        // first at a repeat of an earlier maximum, not at a fresh one.
        for (z, digits, base, ub) in [
            (5u128, 1, 10u128, 7u128),
            (50, 1, 10, 59),
            (20, 1, 10, 24),
            (8, 1, 2, 15),
        ] {
            let q = query(z, digits, base);
            assert_eq!(range_of(&q), Some((n(1), n(ub))), "z={z} d={digits} b={base}");
            assert!(!oracle::exact(&n(ub), &n(z), digits, &n(base)).unwrap());
            assert!(oracle::exact(&(n(ub) - 1u32), &n(z), digits, &n(base)).unwrap());
        }
    }

    #[test]
    fn first_failure_can_sit_right_past_the_modulus() {
        // z = 99 stays exact through w = base^k because 99w rem 10^k + w
        // telescopes to exactly 10^k; the first failure is just past it.
        assert_eq!(range_of(&query(99, 2, 10)), Some((n(1), n(101))));
        assert_eq!(range_of(&query(999, 3, 10)), Some((n(1), n(1001))));
    }

    #[test]
    fn agrees_with_the_scanning_oracle() {
        let cap = 20_000u64;
        for base in [2u128, 10] {
            for digits in 1..=3u64 {
                for z in 1..=120u128 {
                    let q = query(z, digits, base);
                    let fast = find_range(&q).unwrap();
                    match oracle::range(&q, cap) {
                        Ok(slow) => {
                            let fast = fast.map(|r| (r.lb, r.ub));
                            let slow = slow.map(|r| (r.lb, r.ub));
                            assert_eq!(fast, slow, "z={z} digits={digits} base={base}");
                        }
                        Err(Error::Inconclusive(_)) => {
                            // The fast path's bound must indeed lie beyond
                            // the oracle's cap, or the scan would have ended.
                            let r = fast.expect("beyond cap implies nonempty");
                            assert!(r.ub > n(cap as u128), "z={z} digits={digits} base={base}");
                        }
                        Err(e) => panic!("oracle failed for z={z} digits={digits} base={base}: {e}"),
                    }
                }
            }
        }
    }
}
