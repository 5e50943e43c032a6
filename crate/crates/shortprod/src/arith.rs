//! Arbitrary-precision building blocks: floor division, modular distance,
//! digit counts and the exactness condition for short products.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{Pow, Zero};

use crate::Error;

pub(crate) fn ensure_base(base: &BigUint) -> Result<(), Error> {
    if *base < BigUint::from(2u32) {
        Err(Error::InvalidBase)
    } else {
        Ok(())
    }
}

/// Floor division with remainder: `a = q * m + r` with `0 <= r < m`.
pub fn floor_div_rem(a: &BigUint, m: &BigUint) -> Result<(BigUint, BigUint), Error> {
    if m.is_zero() {
        return Err(Error::ZeroModulus);
    }
    Ok(a.div_rem(m))
}

/// Distance between `a` and `b` on the circle of size `m`:
/// `min((a - b) mod m, (b - a) mod m)`.
pub fn mod_distance(a: &BigUint, b: &BigUint, m: &BigUint) -> Result<BigUint, Error> {
    if m.is_zero() {
        return Err(Error::ZeroModulus);
    }
    let ar = a % m;
    let br = b % m;
    let forward = (m + &ar - &br) % m;
    let backward = (m + &br - &ar) % m;
    Ok(forward.min(backward))
}

/// Number of digits of `x` in `base`; zero has no digits.
///
/// Computed by exact comparison against powers of the base, never through
/// floating-point logarithms.
pub fn digit_count(x: &BigUint, base: &BigUint) -> Result<u64, Error> {
    ensure_base(base)?;
    if x.is_zero() {
        return Ok(0);
    }
    let mut power = base.clone();
    let mut count = 1u64;
    while power <= *x {
        power *= base;
        count += 1;
    }
    Ok(count)
}

/// The integer formed by the `d` most significant digits of `x` in `base`.
pub fn most_significant_digits(x: &BigUint, d: u64, base: &BigUint) -> Result<BigUint, Error> {
    ensure_base(base)?;
    if d == 0 {
        return Err(Error::ZeroArgument("digit count"));
    }
    let have = digit_count(x, base)?;
    if have < d {
        return Err(Error::NotEnoughDigits { wanted: d, have });
    }
    Ok(x / Pow::pow(base, have - d))
}

/// Whether a hidden tail of the multiplier can ever disturb the quotient:
/// true iff `(w * z) mod m < m - w + 1`.
///
/// The right-hand side is taken as a signed quantity; for `w > m` it is
/// nonpositive and the condition is false. Equivalently, true iff
/// `(w * z) / m == (w * z + w - 1) / m`.
pub fn exactness_condition(w: &BigUint, z: &BigUint, m: &BigUint) -> Result<bool, Error> {
    if m.is_zero() {
        return Err(Error::ZeroModulus);
    }
    if w.is_zero() {
        return Err(Error::ZeroArgument("w"));
    }
    if z.is_zero() {
        return Err(Error::ZeroArgument("z"));
    }
    if w > m {
        return Ok(false);
    }
    let r = (w * z) % m;
    Ok(r < m - w + 1u32)
}
