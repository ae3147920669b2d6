use num_bigint::BigInt;
use num_traits::Zero;
use polycore::IntPoly;

use crate::logmag::LogMagPoly;
use crate::soft::SoftPoly;

/// Exact Graeffe transform: returns `g` with `g(x^2) == (-1)^d f(x) f(-x)`,
/// the polynomial whose roots are the squares of the roots of `f`.
pub fn graeffe(f: &IntPoly) -> IntPoly {
    if f.is_zero() {
        return IntPoly::zero();
    }
    let a = f.coeffs();
    let d = a.len() - 1;
    let mut out = Vec::with_capacity(d + 1);
    for k in 0..=d {
        let mut acc = BigInt::zero();
        let i_lo = (2 * k).saturating_sub(d);
        let i_hi = (2 * k).min(d);
        for i in i_lo..=i_hi {
            let j = 2 * k - i;
            let term = &a[i] * &a[j];
            if j % 2 == 1 {
                acc -= term;
            } else {
                acc += term;
            }
        }
        if d % 2 == 1 {
            acc = -acc;
        }
        out.push(acc);
    }
    IntPoly::from_coeffs(out)
}

/// Graeffe iteration state: exact integers until any coefficient exceeds the
/// bit cap, then the scaled floating representation.
pub(crate) enum GraeffeSeq {
    Exact { poly: IntPoly, cap_bits: u64 },
    Soft(SoftPoly),
}

impl GraeffeSeq {
    pub fn new(f: IntPoly, cap_bits: u64) -> Self {
        GraeffeSeq::Exact { poly: f, cap_bits }
    }

    pub fn step(&mut self) {
        match self {
            GraeffeSeq::Exact { poly, cap_bits } => {
                let max_bits = poly
                    .coeffs()
                    .iter()
                    .map(|c| c.magnitude().bits())
                    .max()
                    .unwrap_or(0);
                // one step roughly doubles the bit length
                if 2 * max_bits + 16 > *cap_bits {
                    let mut soft = SoftPoly::from_int(poly);
                    soft = soft.graeffe_step();
                    *self = GraeffeSeq::Soft(soft);
                } else {
                    *poly = graeffe(poly);
                }
            }
            GraeffeSeq::Soft(soft) => {
                *soft = soft.graeffe_step();
            }
        }
    }

    pub fn log_mag(&self) -> LogMagPoly {
        match self {
            GraeffeSeq::Exact { poly, .. } => LogMagPoly::from_int(poly),
            GraeffeSeq::Soft(soft) => {
                let up = soft.coeffs.iter().map(|c| c.mag_up().log2_up()).collect();
                let lo = soft
                    .coeffs
                    .iter()
                    .map(|c| c.mag_down().log2_down())
                    .collect();
                LogMagPoly { up, lo }
            }
        }
    }

    /// Upper bound on `log2 |f_t|_2` of the current iterate.
    pub fn log2_l2_up(&self) -> f64 {
        match self {
            GraeffeSeq::Exact { poly, .. } => {
                let sq = poly.l2_norm_sq();
                match polycore::log2_up_from_bigint(&sq) {
                    Some(l) => crate::logmag::log_slack_up(l / 2.0),
                    None => f64::NEG_INFINITY,
                }
            }
            GraeffeSeq::Soft(soft) => soft.log2_l2_up(),
        }
    }
}
