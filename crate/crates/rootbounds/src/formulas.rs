//! Knuth, Zassenhaus and Cauchy-Newton root bounds, evaluated on log2
//! coefficient magnitudes so that deep Graeffe iterates cannot overflow.

use num_bigint::BigInt;
use num_traits::One;
use polycore::{IntPoly, UpperReal};

use crate::logmag::{log_slack_down, log_slack_up, LogMagPoly};
use crate::{RootBoundError, RootBoundMethod, RootBoundResult};

/// `K(f) = 2 max_i (|a_{d-i}| / |a_d|)^(1/i)`.
pub fn knuth_bound(f: &IntPoly) -> Result<UpperReal, RootBoundError> {
    let lm = require_nonconstant(f)?;
    Ok(exp2_upper(knuth_log(&lm)))
}

/// `Z(f) = (2^(1/d) - 1)^-1 max_i ((|a_{d-i}| / |a_d|) C(d,i)^-1)^(1/i)`.
pub fn zassenhaus_bound(f: &IntPoly) -> Result<UpperReal, RootBoundError> {
    let lm = require_nonconstant(f)?;
    Ok(exp2_upper(zassenhaus_log(&lm)))
}

/// Upper approximation of the Cauchy bound `C(f)`, the unique positive root
/// of `|a_d| x^d - sum_{i<d} |a_i| x^i`, via monotone Newton descent from
/// `min(K(f), Z(f))`. Returns 0 for a pure power of x.
pub fn cauchy_bound(f: &IntPoly) -> Result<RootBoundResult, RootBoundError> {
    let lm = require_nonconstant(f)?;
    let (log_bound, iters) = match cauchy_newton_log(&lm) {
        Some(v) => v,
        None => (f64::NEG_INFINITY, 0),
    };
    Ok(RootBoundResult {
        bound: exp2_upper(log_bound),
        method: RootBoundMethod::CauchyNewton,
        graeffe_depth: 0,
        newton_iters: iters,
    })
}

fn require_nonconstant(f: &IntPoly) -> Result<LogMagPoly, RootBoundError> {
    match f.degree() {
        None => Err(RootBoundError::ZeroPolynomial),
        Some(0) => Err(RootBoundError::ConstantPolynomial),
        Some(_) => Ok(LogMagPoly::from_int(f)),
    }
}

pub(crate) fn exp2_upper(log_bound: f64) -> UpperReal {
    if log_bound == f64::NEG_INFINITY {
        return UpperReal::zero();
    }
    let v = log_slack_up(log_bound).exp2();
    UpperReal::exact(v.next_up())
}

/// log2 of the Knuth formula value.
pub(crate) fn knuth_log(lm: &LogMagPoly) -> f64 {
    let d = lm.degree();
    let lead_lo = match lm.lo[d] {
        Some(v) => v,
        None => return f64::INFINITY,
    };
    let mut best = f64::NEG_INFINITY;
    for i in 1..=d {
        if let Some(up) = lm.up[d - i] {
            best = best.max(log_slack_up((up - lead_lo) / i as f64));
        }
    }
    if best == f64::NEG_INFINITY {
        // pure power of x: all roots are zero
        return f64::NEG_INFINITY;
    }
    1.0 + best
}

/// log2 of the Zassenhaus formula value.
pub(crate) fn zassenhaus_log(lm: &LogMagPoly) -> f64 {
    let d = lm.degree();
    let lead_lo = match lm.lo[d] {
        Some(v) => v,
        None => return f64::INFINITY,
    };
    let mut best = f64::NEG_INFINITY;
    let mut binom = BigInt::one();
    for i in 1..=d {
        binom = binom * BigInt::from(d - i + 1) / BigInt::from(i);
        if let Some(up) = lm.up[d - i] {
            let log_binom = polycore::log2_down_from_bigint(&binom).unwrap();
            best = best.max(log_slack_up((up - lead_lo - log_binom) / i as f64));
        }
    }
    if best == f64::NEG_INFINITY {
        return f64::NEG_INFINITY;
    }
    // 1 / (2^(1/d) - 1), rounded up in log2
    let root = (1.0 / d as f64).exp2();
    let denom = (root - 1.0).max(f64::MIN_POSITIVE);
    best + log_slack_up(-log_slack_down(denom.log2()))
}

/// log2 of an upper approximation of the Cauchy bound, with the Newton
/// iteration count. `None` when every lower coefficient vanishes.
pub(crate) fn cauchy_newton_log(lm: &LogMagPoly) -> Option<(f64, u32)> {
    let d = lm.degree();
    let lead_lo = lm.lo[d]?;
    if lm.up[..d].iter().all(Option::is_none) {
        return None;
    }
    let start = knuth_log(lm).min(zassenhaus_log(lm));
    if !start.is_finite() {
        return Some((start, 0));
    }

    // scale x = 2^start * y so the positive root of the scaled companion
    // t(y) = y^d - sum b_i y^i lies in (0, 1]
    let b: Vec<f64> = (0..d)
        .map(|i| match lm.up[i] {
            Some(up) => {
                let log_b = log_slack_up(up - lead_lo + start * (i as f64 - d as f64));
                log_b.exp2()
            }
            None => 0.0,
        })
        .collect();

    let eval = |y: f64| -> (f64, f64, f64) {
        // value, derivative, magnitude sum for an error margin
        let mut val = y.powi(d as i32);
        let mut mag = val;
        let mut der = d as f64 * y.powi(d as i32 - 1);
        for (i, bi) in b.iter().enumerate() {
            if *bi == 0.0 {
                continue;
            }
            let term = bi * y.powi(i as i32);
            val -= term;
            mag += term;
            if i > 0 {
                der -= i as f64 * bi * y.powi(i as i32 - 1);
            }
        }
        (val, der, mag)
    };

    let mut y = 1.0f64;
    let mut iters = 0u32;
    for _ in 0..64 {
        let (val, der, _) = eval(y);
        if der <= 0.0 {
            break;
        }
        let step = val / der;
        let next = y - step;
        if !(next > 0.0) {
            break;
        }
        iters += 1;
        y = next;
        if step.abs() < y / (1u64 << 20) as f64 {
            break;
        }
    }

    // certify: nudge upward until the companion evaluates provably >= 0
    let mut y_up = y * (1.0 + 1.0 / (1u64 << 38) as f64);
    let mut certified = false;
    for _ in 0..48 {
        let (val, _, mag) = eval(y_up);
        let margin = mag * (d as f64 + 1.0) / (1u64 << 48) as f64;
        if val >= margin {
            certified = true;
            break;
        }
        y_up *= 1.0 + 1.0 / (1u64 << 20) as f64;
    }
    if !certified || y_up > 1.0 {
        // fall back to the formula start bound, which is certified on its own
        return Some((start, iters));
    }
    Some((start + log_slack_up(y_up.log2()), iters))
}
