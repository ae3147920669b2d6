//! Certified upper bounds on the largest root modulus of an integer
//! polynomial and upper estimates of its Mahler measure.
//!
//! The formula bounds (Cauchy via Newton, Knuth, Zassenhaus) are evaluated in
//! log2 space on coefficient magnitudes, which keeps them usable on the
//! astronomically large coefficients produced by repeated Graeffe
//! transformation. Graeffe iteration runs in exact integer arithmetic until a
//! per-coefficient bit threshold, then switches to an upward-rounded
//! (mantissa, exponent) representation with per-coefficient error radii.

mod formulas;
mod graeffe;
mod logmag;
mod mahler;
mod soft;

pub use formulas::{cauchy_bound, knuth_bound, zassenhaus_bound};
pub use graeffe::graeffe;
pub use mahler::{mahler_upper, mahler_upper_with, MahlerEstimate};

use polycore::{IntPoly, UpperReal};
use thiserror::Error;

/// Default per-coefficient bit threshold beyond which Graeffe iteration
/// switches from exact integers to the scaled floating representation.
pub const DEFAULT_CAP_BITS: u64 = 8192;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RootBoundError {
    #[error("root bounds require degree >= 1")]
    ConstantPolynomial,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootBoundMethod {
    Knuth,
    Zassenhaus,
    CauchyNewton,
    Graeffe,
}

/// A certified upper bound on every root modulus of the input.
#[derive(Debug, Clone)]
pub struct RootBoundResult {
    pub bound: UpperReal,
    pub method: RootBoundMethod,
    pub graeffe_depth: u32,
    pub newton_iters: u32,
}

/// Upper bound on all root moduli, refined by Graeffe iteration: the minimum
/// over depths `0..=s` of `bound(f_t)^(1/2^t)`. Refinement never worsens the
/// depth-0 bound. The automatic depth is `max(5, ceil(log2 d) + 2)`.
pub fn refined_root_bound(f: &IntPoly) -> Result<RootBoundResult, RootBoundError> {
    refined_root_bound_with(f, None, DEFAULT_CAP_BITS)
}

/// As [`refined_root_bound`] with explicit depth and exact-arithmetic bit cap.
pub fn refined_root_bound_with(
    f: &IntPoly,
    depth: Option<u32>,
    cap_bits: u64,
) -> Result<RootBoundResult, RootBoundError> {
    let d = match f.degree() {
        None => return Err(RootBoundError::ZeroPolynomial),
        Some(0) => return Err(RootBoundError::ConstantPolynomial),
        Some(d) => d,
    };
    let s = depth.unwrap_or_else(|| auto_root_depth(d));
    // Newton refinement of the Cauchy bound is worthwhile at small degree;
    // at large degree the formula bounds are close enough and much cheaper.
    let use_newton = d <= 64;

    let mut seq = graeffe::GraeffeSeq::new(f.clone(), cap_bits);
    let mut best_log = f64::INFINITY;
    let mut best = (RootBoundMethod::CauchyNewton, 0u32, 0u32);
    for t in 0..=s {
        if t > 0 {
            seq.step();
        }
        let lm = seq.log_mag();
        let (log_bound, method, iters) = if use_newton {
            match formulas::cauchy_newton_log(&lm) {
                Some((lb, it)) => (lb, RootBoundMethod::CauchyNewton, it),
                None => (f64::NEG_INFINITY, RootBoundMethod::CauchyNewton, 0),
            }
        } else {
            let k = formulas::knuth_log(&lm);
            let z = formulas::zassenhaus_log(&lm);
            if k <= z {
                (k, RootBoundMethod::Knuth, 0)
            } else {
                (z, RootBoundMethod::Zassenhaus, 0)
            }
        };
        let candidate = log_bound / f64::powi(2.0, t as i32);
        if candidate < best_log {
            best_log = candidate;
            best = (
                if t == 0 { method } else { RootBoundMethod::Graeffe },
                t,
                iters,
            );
        }
    }
    Ok(RootBoundResult {
        bound: formulas::exp2_upper(best_log),
        method: best.0,
        graeffe_depth: best.1,
        newton_iters: best.2,
    })
}

pub(crate) fn auto_root_depth(d: usize) -> u32 {
    let log_d = usize::BITS - d.max(2).next_power_of_two().leading_zeros() - 1;
    (log_d + 2).max(5)
}

#[cfg(test)]
mod tests {
    use super::*;
    use polycore::parse;

    fn p(s: &str) -> IntPoly {
        parse(s).unwrap()
    }

    #[test]
    fn refined_bound_x2_minus_2() {
        let r = refined_root_bound(&p("x^2-2")).unwrap();
        let v = r.bound.value();
        assert!(v >= 2f64.sqrt(), "must stay above the true root, got {v}");
        assert!(v <= 1.5, "paper-quality bound expected, got {v}");
    }

    #[test]
    fn refined_never_worse_than_formula_bounds() {
        for s in ["x^2-2", "3x^4-x^3+11x-7", "x^5+100x-100"] {
            let f = p(s);
            let r = refined_root_bound(&f).unwrap().bound.value();
            let k = knuth_bound(&f).unwrap().value();
            let z = zassenhaus_bound(&f).unwrap().value();
            assert!(r <= k.min(z) * (1.0 + 1e-9), "{s}: {r} vs {k} {z}");
        }
    }

    #[test]
    fn errors_on_constant() {
        assert_eq!(
            refined_root_bound(&p("7")).unwrap_err(),
            RootBoundError::ConstantPolynomial
        );
        assert_eq!(
            refined_root_bound(&IntPoly::zero()).unwrap_err(),
            RootBoundError::ZeroPolynomial
        );
    }

    #[test]
    fn pure_power_has_zero_bound() {
        let r = refined_root_bound(&p("x^3")).unwrap();
        assert_eq!(r.bound.value(), 0.0);
    }
}
