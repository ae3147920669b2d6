use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// A nonnegative real carried as a certified upper bound.
///
/// Every operation rounds so that the stored double is greater than or equal
/// to the exact real value it stands for. Instead of directed rounding, each
/// inexact operation multiplies its result by `1 + 2^-40` and takes the next
/// float up; the accumulated slack is invisible at the 2-6 significant
/// figures the bound tables are read at.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct UpperReal(f64);

const SLACK: f64 = 1.0 + 1.0 / (1u64 << 40) as f64;

fn nudge_up(v: f64) -> f64 {
    (v * SLACK).next_up()
}

impl UpperReal {
    /// Wraps a value that is already exact (an integer below 2^53, a dyadic
    /// constant, ...).
    pub fn exact(v: f64) -> Self {
        assert!(v >= 0.0 && v.is_finite());
        UpperReal(v)
    }

    pub fn zero() -> Self {
        UpperReal(0.0)
    }

    /// Upper bound on `|n|`.
    pub fn from_bigint(n: &BigInt) -> Self {
        UpperReal(f64_up_from_bigint(n))
    }

    /// Upper bound on `|r|`.
    pub fn from_rational(r: &BigRational) -> Self {
        if r.is_zero() {
            return UpperReal(0.0);
        }
        let num = f64_up_from_bigint(r.numer());
        let den = f64_down_from_bigint(r.denom());
        UpperReal(nudge_up(num / den))
    }

    /// Upper bound on `sqrt(|n|)`, exact when `n` is a perfect square that
    /// fits a double.
    pub fn sqrt_bigint(n: &BigInt) -> Self {
        let m = n.abs();
        let r = m.sqrt();
        if &r * &r == m {
            return UpperReal::from_bigint(&r);
        }
        // f64 sqrt is correctly rounded, so one nudge after an upper-rounded
        // conversion keeps the result above the true value
        UpperReal(nudge_up(f64_up_from_bigint(&m).sqrt()))
    }

    /// Upper bound on `sqrt(|r|)`.
    pub fn sqrt_rational(r: &BigRational) -> Self {
        UpperReal::from_rational(r).sqrt()
    }

    pub fn value(&self) -> f64 {
        self.0
    }

    pub fn is_finite(&self) -> bool {
        self.0.is_finite()
    }

    pub fn add(&self, other: &UpperReal) -> UpperReal {
        UpperReal(nudge_up(self.0 + other.0))
    }

    pub fn mul(&self, other: &UpperReal) -> UpperReal {
        if self.0 == 0.0 || other.0 == 0.0 {
            return UpperReal(0.0);
        }
        UpperReal(nudge_up(self.0 * other.0))
    }

    pub fn sqrt(&self) -> UpperReal {
        UpperReal(nudge_up(self.0.sqrt()))
    }

    /// Upper bound on the `k`-th root.
    pub fn nth_root(&self, k: u32) -> UpperReal {
        assert!(k >= 1);
        if k == 1 || self.0 == 0.0 {
            return *self;
        }
        UpperReal(nudge_up(self.0.powf(1.0 / f64::from(k))))
    }

    /// Upper bound on the `k`-th power.
    pub fn powi(&self, k: u32) -> UpperReal {
        let mut acc = UpperReal::exact(1.0);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn min(&self, other: &UpperReal) -> UpperReal {
        if self.0 <= other.0 {
            *self
        } else {
            *other
        }
    }

    pub fn max(&self, other: &UpperReal) -> UpperReal {
        if self.0 >= other.0 {
            *self
        } else {
            *other
        }
    }

    /// Floors to an integer; `None` when the value is not finite.
    pub fn floor_bigint(&self) -> Option<BigInt> {
        if !self.0.is_finite() {
            return None;
        }
        BigInt::from_f64(self.0.floor())
    }
}

use num_traits::FromPrimitive;

/// `f64 >= |n|`, rounding away from zero on truncation.
pub fn f64_up_from_bigint(n: &BigInt) -> f64 {
    let m = n.abs();
    let bits = m.bits();
    if bits <= 53 {
        return m.to_f64().expect("small BigInt converts");
    }
    let v = m.to_f64().unwrap_or(f64::INFINITY);
    v.next_up()
}

/// `0 <= f64 <= |n|`.
pub fn f64_down_from_bigint(n: &BigInt) -> f64 {
    let m = n.abs();
    let bits = m.bits();
    if bits <= 53 {
        return m.to_f64().expect("small BigInt converts");
    }
    let v = m.to_f64().unwrap_or(f64::MAX);
    if v.is_finite() {
        v.next_down()
    } else {
        f64::MAX
    }
}

/// Upper bound on `log2 |n|`; `None` for zero.
pub fn log2_up_from_bigint(n: &BigInt) -> Option<f64> {
    if n.is_zero() {
        return None;
    }
    let m = n.abs();
    let bits = m.bits();
    if bits <= 53 {
        return Some(nudge_up(m.to_f64().unwrap().log2()));
    }
    let shift = bits - 53;
    let top = (m >> shift).to_f64().unwrap().next_up();
    Some(nudge_up(top.log2()) + shift as f64)
}

/// Lower bound on `log2 |n|`; `None` for zero.
pub fn log2_down_from_bigint(n: &BigInt) -> Option<f64> {
    if n.is_zero() {
        return None;
    }
    let m = n.abs();
    let bits = m.bits();
    if bits <= 53 {
        return Some((m.to_f64().unwrap().log2() / SLACK).next_down());
    }
    let shift = bits - 53;
    let top = (m >> shift).to_f64().unwrap();
    Some((top.log2() / SLACK).next_down() + shift as f64)
}
