//! Brute-force reference implementations.
//!
//! Everything here is a deliberately naive scan built only on the primitives
//! in [`crate::arith`]. The fast paths in [`crate::extrema`] and
//! [`crate::range`] are tested against these functions; nothing here shares
//! code with them.

use num_bigint::BigUint;
use num_traits::{Pow, Zero};

use crate::arith::digit_count;
use crate::range::{RangeQuery, ValidityRange};
use crate::Error;

/// Scans longer than this are refused: the oracles are for desk-scale checks.
pub const SCAN_GUARD: u64 = 10_000_000;

/// Reference for short-product exactness: the `digits` leading digits of
/// `w * z` survive any hidden tail iff `w * z` and `w * z + w - 1` fall in the
/// same block of `base^k`, where `k` is the number of digits dropped.
pub fn exact(w: &BigUint, z: &BigUint, digits: u64, base: &BigUint) -> Result<bool, Error> {
    if w.is_zero() {
        return Err(Error::ZeroArgument("w"));
    }
    if z.is_zero() {
        return Err(Error::ZeroArgument("z"));
    }
    if digits == 0 {
        return Err(Error::ZeroArgument("digits"));
    }
    let product = w * z;
    let have = digit_count(&product, base)?;
    if have < digits {
        return Err(Error::NotEnoughDigits {
            wanted: digits,
            have,
        });
    }
    let modulus: BigUint = Pow::pow(base, have - digits);
    Ok(&product / &modulus == (product + w - 1u32) / modulus)
}

/// Reference enumeration of the running extrema of `(offset + w * z) mod m`
/// by direct scan of `w = 0..=w_max`. Returns `(minima, maxima)` as
/// `(location, value)` pairs; `w = 0` opens both lists.
#[allow(clippy::type_complexity)]
pub fn extrema(
    z: &BigUint,
    modulus: &BigUint,
    offset: &BigUint,
    w_max: u64,
) -> Result<(Vec<(BigUint, BigUint)>, Vec<(BigUint, BigUint)>), Error> {
    if modulus.is_zero() {
        return Err(Error::ZeroModulus);
    }
    if w_max > SCAN_GUARD {
        return Err(Error::ScanTooLarge {
            limit: w_max,
            guard: SCAN_GUARD,
        });
    }
    let step = z % modulus;
    let mut value = offset % modulus;
    let mut minima = vec![(BigUint::zero(), value.clone())];
    let mut maxima = vec![(BigUint::zero(), value.clone())];
    let mut low = value.clone();
    let mut high = value.clone();
    for w in 1..=w_max {
        value += &step;
        if value >= *modulus {
            value -= modulus;
        }
        if value < low {
            low = value.clone();
            minima.push((BigUint::from(w), value.clone()));
        } else if value > high {
            high = value.clone();
            maxima.push((BigUint::from(w), value.clone()));
        }
    }
    Ok((minima, maxima))
}

/// Reference range search: walk upward from the smallest multiplicand whose
/// product has `digits` digits, calling [`exact`] until it fails.
///
/// Returns `None` when the very first multiplicand already fails, and
/// [`Error::Inconclusive`] when no failure is seen up to `w_cap`.
pub fn range(q: &RangeQuery, w_cap: u64) -> Result<Option<ValidityRange>, Error> {
    if w_cap > SCAN_GUARD {
        return Err(Error::ScanTooLarge {
            limit: w_cap,
            guard: SCAN_GUARD,
        });
    }
    let floor_pow: BigUint = Pow::pow(q.base(), q.digits() - 1);
    let lb = (floor_pow + q.z() - 1u32) / q.z();
    let cap = BigUint::from(w_cap);
    let mut w = lb.clone();
    while w <= cap {
        if !exact(&w, q.z(), q.digits(), q.base())? {
            return Ok(if w == lb {
                None
            } else {
                Some(ValidityRange { lb, ub: w })
            });
        }
        w += 1u32;
    }
    Err(Error::Inconclusive(w_cap))
}
