//! Running extrema of `w -> (offset + w * z) mod m` in logarithmic time.
//!
//! Scanning `w = 1, 2, 3, ...`, the remainders `(w * z) mod m` reach new
//! running minima and maxima in equispaced bursts: with the latest minimum at
//! location `alpha` and the latest maximum at location `beta`, the next
//! extremum of either kind appears at `alpha + beta`. Compressing each burst
//! into one arithmetic step yields the *gap sequence*, the strictly increasing
//! list of burst spacings, of which there are at most `2 * ceil(log2 m) + 2`.
//!
//! [`extrema_with_offset`] then replays those spacings against an arbitrary
//! starting offset: each candidate spacing either extends the current record
//! (and the whole burst it starts is emitted as one [`ExtremumRun`]) or is
//! exhausted and replaced by the next larger spacing. The result lists every
//! running extremum of the scanned window without visiting every point.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::Error;

/// Spacings of the extremum bursts of `w -> (w * z) mod m`, for `w >= 1`.
///
/// Entries are strictly increasing and start at 1; every distance between
/// consecutive running extrema, for any offset, is one of them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapSequence {
    entries: Vec<BigUint>,
}

impl GapSequence {
    pub fn entries(&self) -> &[BigUint] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Iteration state of the gap search: locations of the latest minimum and
/// maximum and their remainders. Invariant between steps:
/// `0 < a_val <= b_val < m`, with `a_val = (alpha * z) mod m` and
/// `b_val = (beta * z) mod m`.
struct ExtremaState {
    alpha: BigUint,
    beta: BigUint,
    a_val: BigUint,
    b_val: BigUint,
    w: BigUint,
}

/// Computes the gap sequence of `w -> (w * z) mod m`.
///
/// `z` is reduced modulo `m`; a multiplier that reduces to zero has no
/// extrema to speak of and is rejected.
pub fn gap_sequence(z: &BigUint, modulus: &BigUint) -> Result<GapSequence, Error> {
    if modulus.is_zero() {
        return Err(Error::ZeroModulus);
    }
    let zr = z % modulus;
    if zr.is_zero() {
        return Err(Error::MultipleOfModulus);
    }

    let mut st = ExtremaState {
        alpha: BigUint::one(),
        beta: BigUint::one(),
        a_val: zr.clone(),
        b_val: zr,
        w: BigUint::one(),
    };
    let mut entries = Vec::new();
    loop {
        // Value at the next candidate location alpha + beta. It is strictly
        // below a_val (a new minimum) or strictly above b_val (a new maximum);
        // the branches alternate after the first switch.
        let v = (&st.a_val + &st.b_val) % modulus;
        if v < st.a_val {
            entries.push(st.w.clone());
            // Burst of minima spaced beta apart, each step lowering the
            // record by modulus - b_val.
            let fall = modulus - &st.b_val;
            if (&st.a_val % &fall).is_zero() {
                // The burst bottoms out at remainder zero; the scan ends there.
                return Ok(GapSequence { entries });
            }
            let t = &st.a_val / &fall;
            st.w = &st.w + &st.alpha + (&t - 1u32) * &st.beta;
            st.alpha = st.w.clone();
            st.a_val -= t * fall;
        } else {
            entries.push(st.w.clone());
            // Burst of maxima spaced alpha apart, each step raising the
            // record by a_val; t >= 1 because v = a_val + b_val fit below m.
            let t = (modulus - &st.b_val - 1u32) / &st.a_val;
            st.w = &st.w + &st.beta + (&t - 1u32) * &st.alpha;
            st.beta = st.w.clone();
            st.b_val += t * &st.a_val;
        }
        debug_assert!(!st.a_val.is_zero());
        debug_assert!(st.a_val <= st.b_val && st.b_val < *modulus);
    }
}

/// A burst of running extrema: locations `last_location - i * gap` for
/// `i = 0..=extra_count`, all of the same kind. A `(w, 0, 0)` run is the
/// sentinel for the scan origin, which opens both the minima and the maxima.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremumRun {
    pub last_location: BigUint,
    pub extra_count: BigUint,
    pub gap: BigUint,
}

impl ExtremumRun {
    fn sentinel(at: BigUint) -> Self {
        ExtremumRun {
            last_location: at,
            extra_count: BigUint::zero(),
            gap: BigUint::zero(),
        }
    }

    /// Smallest location in the run.
    pub fn first_location(&self) -> BigUint {
        &self.last_location - &self.extra_count * &self.gap
    }

    /// Number of locations in the run.
    pub fn len(&self) -> BigUint {
        &self.extra_count + 1u32
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Decodes the run in increasing location order.
    pub fn locations(&self) -> impl Iterator<Item = BigUint> + '_ {
        let mut next = Some(self.first_location());
        std::iter::from_fn(move || {
            let cur = next.take()?;
            if cur < self.last_location {
                next = Some(&cur + &self.gap);
            }
            Some(cur)
        })
    }
}

/// Running minima and maxima of a scanned window, as runs in location order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremaRuns {
    pub minima: Vec<ExtremumRun>,
    pub maxima: Vec<ExtremumRun>,
}

/// Enumerates the running extrema of `w -> (offset + w * z) mod m` over
/// `w = 0..=w_max`. The value at `w = 0` is the initial record for both
/// directions, encoded as the sentinel run `(0, 0, 0)`.
pub fn extrema_with_offset(
    z: &BigUint,
    modulus: &BigUint,
    offset: &BigUint,
    w_max: &BigUint,
) -> Result<ExtremaRuns, Error> {
    let gaps = gap_sequence(z, modulus)?;
    let zr = z % modulus;
    let origin = offset % modulus;
    let value_at = |w: &BigUint| (&origin + w * &zr) % modulus;

    let mut minima = vec![ExtremumRun::sentinel(BigUint::zero())];
    let mut maxima = vec![ExtremumRun::sentinel(BigUint::zero())];
    let mut low = origin.clone();
    let mut high = origin.clone();
    let mut w = BigUint::zero();
    let mut gap_index = 0usize;

    loop {
        let gap = &gaps.entries[gap_index];
        let candidate = &w + gap;
        if candidate > *w_max {
            // Later spacings are larger still; nothing else fits.
            break;
        }
        let v = value_at(&candidate);
        if v < low {
            // Burst of minima: each further step of `gap` lowers the value by
            // modulus - rise, until it would wrap below zero or leave range.
            let rise = (gap * &zr) % modulus;
            debug_assert!(!rise.is_zero());
            let fall = modulus - &rise;
            let mut extra = &v / &fall;
            if &candidate + &extra * gap > *w_max {
                extra = (w_max - &candidate) / gap;
            }
            w = candidate + &extra * gap;
            low = value_at(&w);
            minima.push(ExtremumRun {
                last_location: w.clone(),
                extra_count: extra,
                gap: gap.clone(),
            });
        } else if v > high {
            let rise = (gap * &zr) % modulus;
            debug_assert!(!rise.is_zero());
            let mut extra = (modulus - 1u32 - &v) / &rise;
            if &candidate + &extra * gap > *w_max {
                extra = (w_max - &candidate) / gap;
            }
            w = candidate + &extra * gap;
            high = value_at(&w);
            maxima.push(ExtremumRun {
                last_location: w.clone(),
                extra_count: extra,
                gap: gap.clone(),
            });
        } else {
            // This spacing can no longer improve either record.
            gap_index += 1;
            if gap_index == gaps.entries.len() {
                break;
            }
        }
    }
    Ok(ExtremaRuns { minima, maxima })
}

/// Running extrema of `w -> (w * z) mod m` over the window `first..=last`,
/// with `first` as the scan origin. Equivalent to [`extrema_with_offset`]
/// with offset `first * z` and all locations shifted by `first`.
pub fn extrema_in_range(
    z: &BigUint,
    modulus: &BigUint,
    first: &BigUint,
    last: &BigUint,
) -> Result<ExtremaRuns, Error> {
    if first.is_zero() {
        return Err(Error::ZeroArgument("scan start"));
    }
    if first > last {
        return Err(Error::StartAfterEnd);
    }
    let offset = first * z;
    let span = last - first;
    let mut runs = extrema_with_offset(z, modulus, &offset, &span)?;
    for run in runs.minima.iter_mut().chain(runs.maxima.iter_mut()) {
        run.last_location += first;
    }
    Ok(runs)
}
