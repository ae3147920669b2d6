//! Scaled floating coefficients for deep Graeffe iteration.
//!
//! A coefficient is a dyadic value `m * 2^e` with `|m|` in `[1, 2)` plus a
//! nonnegative error radius in the same form. Radii grow by the usual
//! product rule, so magnitude brackets stay certified after the switch from
//! exact integers.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

/// `m * 2^e`, `|m|` in `[1, 2)`, or exactly zero (`m == 0`).
#[derive(Clone, Copy, Debug)]
pub(crate) struct Dyad {
    m: f64,
    e: i64,
}

const ULP: f64 = 1.0 / (1u64 << 50) as f64;

impl Dyad {
    pub const ZERO: Dyad = Dyad { m: 0.0, e: 0 };

    fn norm(m: f64, e: i64) -> Dyad {
        if m == 0.0 {
            return Dyad::ZERO;
        }
        let (fm, fe) = frexp(m); // |fm| in [0.5, 1)
        Dyad {
            m: fm * 2.0,
            e: e + i64::from(fe) - 1,
        }
    }

    pub fn from_f64(v: f64) -> Dyad {
        Dyad::norm(v, 0)
    }

    pub fn from_bigint(n: &BigInt) -> (Dyad, Dyad) {
        if n.is_zero() {
            return (Dyad::ZERO, Dyad::ZERO);
        }
        let bits = n.magnitude().bits();
        if bits <= 53 {
            return (Dyad::from_f64(n.to_f64().unwrap()), Dyad::ZERO);
        }
        let shift = bits - 53;
        let top = (n >> shift).to_f64().unwrap();
        let val = Dyad::norm(top, shift as i64);
        // truncation error is below one unit of the kept mantissa
        let rad = Dyad::norm(1.0, shift as i64);
        (val, rad)
    }

    pub fn is_zero(&self) -> bool {
        self.m == 0.0
    }

    pub fn abs(&self) -> Dyad {
        Dyad {
            m: self.m.abs(),
            e: self.e,
        }
    }

    pub fn neg(&self) -> Dyad {
        Dyad {
            m: -self.m,
            e: self.e,
        }
    }

    pub fn mul(&self, other: &Dyad) -> Dyad {
        if self.is_zero() || other.is_zero() {
            return Dyad::ZERO;
        }
        Dyad::norm(self.m * other.m, self.e + other.e)
    }

    pub fn add(&self, other: &Dyad) -> Dyad {
        if self.is_zero() {
            return *other;
        }
        if other.is_zero() {
            return *self;
        }
        let (hi, lo) = if self.e >= other.e {
            (self, other)
        } else {
            (other, self)
        };
        let gap = hi.e - lo.e;
        if gap > 100 {
            return *hi;
        }
        Dyad::norm(hi.m + lo.m / f64::powi(2.0, gap as i32), hi.e)
    }

    /// Upper bound on `log2 |self|`; `None` for zero.
    pub fn log2_up(&self) -> Option<f64> {
        if self.is_zero() {
            return None;
        }
        Some(crate::logmag::log_slack_up(self.m.abs().log2()) + self.e as f64)
    }

    pub fn log2_down(&self) -> Option<f64> {
        if self.is_zero() {
            return None;
        }
        Some(crate::logmag::log_slack_down(self.m.abs().log2()) + self.e as f64)
    }

    fn magnitude_ge(&self, other: &Dyad) -> bool {
        if other.is_zero() {
            return true;
        }
        if self.is_zero() {
            return false;
        }
        (self.e, self.m.abs()) >= (other.e, other.m.abs())
    }
}

fn frexp(v: f64) -> (f64, i32) {
    if v == 0.0 || !v.is_finite() {
        return (v, 0);
    }
    let bits = v.to_bits();
    let exp_field = ((bits >> 52) & 0x7ff) as i32;
    if exp_field == 0 {
        // subnormal: renormalize through a scale bump
        let scaled = v * f64::powi(2.0, 64);
        let (m, e) = frexp(scaled);
        return (m, e - 64);
    }
    let e = exp_field - 1022;
    let m = f64::from_bits((bits & !(0x7ffu64 << 52)) | (1022u64 << 52));
    (m, e)
}

/// Coefficient with certified error radius.
#[derive(Clone, Copy, Debug)]
pub(crate) struct SoftCoeff {
    pub val: Dyad,
    pub rad: Dyad,
}

impl SoftCoeff {
    pub const ZERO: SoftCoeff = SoftCoeff {
        val: Dyad::ZERO,
        rad: Dyad::ZERO,
    };

    fn ulp_of(v: &Dyad) -> Dyad {
        v.abs().mul(&Dyad::from_f64(ULP))
    }

    pub fn mul(&self, other: &SoftCoeff) -> SoftCoeff {
        let val = self.val.mul(&other.val);
        let rad = self
            .val
            .abs()
            .mul(&other.rad)
            .add(&other.val.abs().mul(&self.rad))
            .add(&self.rad.mul(&other.rad))
            .add(&Self::ulp_of(&val));
        SoftCoeff { val, rad }
    }

    pub fn add(&self, other: &SoftCoeff) -> SoftCoeff {
        let val = self.val.add(&other.val);
        // alignment may discard the small addend entirely; cover it in the
        // radius along with one rounding ulp
        let drop = Self::ulp_of(&self.val.abs().add(&other.val.abs()));
        let rad = self.rad.add(&other.rad).add(&drop);
        SoftCoeff { val, rad }
    }

    pub fn neg(&self) -> SoftCoeff {
        SoftCoeff {
            val: self.val.neg(),
            rad: self.rad,
        }
    }

    /// Upper bound on the true magnitude.
    pub fn mag_up(&self) -> Dyad {
        self.val.abs().add(&self.rad)
    }

    /// Lower bound on the true magnitude (zero when the interval straddles 0).
    pub fn mag_down(&self) -> Dyad {
        let a = self.val.abs();
        if !a.magnitude_ge(&self.rad) {
            return Dyad::ZERO;
        }
        a.add(&self.rad.neg())
    }
}

pub(crate) struct SoftPoly {
    pub coeffs: Vec<SoftCoeff>,
}

impl SoftPoly {
    pub fn from_int(f: &polycore::IntPoly) -> SoftPoly {
        let coeffs = f
            .coeffs()
            .iter()
            .map(|c| {
                let (val, rad) = Dyad::from_bigint(c);
                SoftCoeff { val, rad }
            })
            .collect();
        SoftPoly { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// One Graeffe step: the polynomial whose roots are the squares.
    pub fn graeffe_step(&self) -> SoftPoly {
        let d = self.degree();
        let mut out = Vec::with_capacity(d + 1);
        for k in 0..=d {
            // coefficient of x^(2k) in f(x) * f(-x), then the (-1)^d flip
            let mut acc = SoftCoeff::ZERO;
            let i_lo = (2 * k).saturating_sub(d);
            let i_hi = (2 * k).min(d);
            for i in i_lo..=i_hi {
                let j = 2 * k - i;
                let term = self.coeffs[i].mul(&self.coeffs[j]);
                acc = if j % 2 == 1 {
                    acc.add(&term.neg())
                } else {
                    acc.add(&term)
                };
            }
            if d % 2 == 1 {
                acc = acc.neg();
            }
            out.push(acc);
        }
        SoftPoly { coeffs: out }
    }

    /// Upper bound on `log2 |f|_2`.
    pub fn log2_l2_up(&self) -> f64 {
        let mut sum = Dyad::ZERO;
        for c in &self.coeffs {
            let u = c.mag_up();
            sum = sum.add(&u.mul(&u));
        }
        match sum.log2_up() {
            Some(l) => crate::logmag::log_slack_up(l / 2.0),
            None => f64::NEG_INFINITY,
        }
    }
}

pub(crate) fn bigint_log2_up(n: &BigInt) -> Option<f64> {
    polycore::log2_up_from_bigint(n)
}

pub(crate) fn bigint_log2_down(n: &BigInt) -> Option<f64> {
    polycore::log2_down_from_bigint(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dyad_roundtrip_and_arith() {
        let a = Dyad::from_f64(6.0);
        let b = Dyad::from_f64(-0.75);
        let prod = a.mul(&b);
        assert!((prod.log2_up().unwrap() - (4.5f64).log2()).abs() < 1e-9);
        let sum = a.add(&b);
        assert!((sum.log2_down().unwrap() - (5.25f64).log2()).abs() < 1e-9);
    }

    #[test]
    fn bigint_conversion_brackets() {
        let n = BigInt::from(3) * (BigInt::from(1) << 100u32) + 12345;
        let (v, r) = Dyad::from_bigint(&n);
        let up = v.abs().add(&r).log2_up().unwrap();
        let lo = v.abs().add(&r.neg()).log2_down().unwrap();
        let exact = polycore::log2_up_from_bigint(&n).unwrap();
        assert!(lo <= exact && exact <= up + 1e-9);
    }

    #[test]
    fn soft_graeffe_matches_exact_small() {
        use polycore::parse;
        let f = parse("x^2-2").unwrap();
        let soft = SoftPoly::from_int(&f).graeffe_step();
        let exact = crate::graeffe(&f);
        for (s, e) in soft.coeffs.iter().zip(exact.coeffs()) {
            let expect = e.to_f64().unwrap();
            let up = s.mag_up().log2_up().unwrap();
            assert!((up - expect.abs().log2()).abs() < 1e-6);
        }
    }
}
