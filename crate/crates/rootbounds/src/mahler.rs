use polycore::{IntPoly, UpperReal};

use crate::graeffe::GraeffeSeq;
use crate::{RootBoundError, DEFAULT_CAP_BITS};

/// Certified upper bound on the Mahler measure.
#[derive(Debug, Clone)]
pub struct MahlerEstimate {
    pub upper: UpperReal,
    /// Graeffe depth at which the minimum was attained.
    pub graeffe_depth: u32,
}

/// Upper bound on `M(f)`: the minimum over Graeffe depths `t = 0..=s` of
/// `|f_t|_2^(1/2^t)`, with the default depth `s = max(3, ceil(log2 d))`.
///
/// Depth 0 is always included, so the estimate never exceeds `|f|_2` by more
/// than the certification slack.
pub fn mahler_upper(f: &IntPoly) -> Result<MahlerEstimate, RootBoundError> {
    let d = f.degree().ok_or(RootBoundError::ZeroPolynomial)?;
    mahler_upper_with(f, auto_mahler_depth(d), DEFAULT_CAP_BITS)
}

pub fn mahler_upper_with(
    f: &IntPoly,
    depth: u32,
    cap_bits: u64,
) -> Result<MahlerEstimate, RootBoundError> {
    if f.is_zero() {
        return Err(RootBoundError::ZeroPolynomial);
    }
    let mut seq = GraeffeSeq::new(f.clone(), cap_bits);
    let mut best_log = f64::INFINITY;
    let mut best_depth = 0u32;
    for t in 0..=depth {
        if t > 0 {
            seq.step();
        }
        let candidate = seq.log2_l2_up() / f64::powi(2.0, t as i32);
        if candidate < best_log {
            best_log = candidate;
            best_depth = t;
        }
    }
    Ok(MahlerEstimate {
        upper: crate::formulas::exp2_upper(best_log),
        graeffe_depth: best_depth,
    })
}

pub(crate) fn auto_mahler_depth(d: usize) -> u32 {
    if d <= 1 {
        return 3;
    }
    let log_d = usize::BITS - (d.next_power_of_two()).leading_zeros() - 1;
    log_d.max(3)
}

#[cfg(test)]
mod tests {
    use super::*;
    use polycore::parse;

    fn p(s: &str) -> IntPoly {
        parse(s).unwrap()
    }

    #[test]
    fn depth_schedule() {
        assert_eq!(auto_mahler_depth(8), 3);
        assert_eq!(auto_mahler_depth(20), 5);
        assert_eq!(auto_mahler_depth(2), 3);
    }

    #[test]
    fn never_exceeds_l2() {
        for s in ["x^2-2", "x^8+8x^7+47x^6", "5x^3-2x+1", "x^10-1"] {
            let f = p(s);
            let m = mahler_upper(&f).unwrap().upper.value();
            let l2 = f.l2_norm().value();
            assert!(m <= l2 * (1.0 + 1e-9), "{s}: {m} vs {l2}");
        }
    }

    #[test]
    fn at_least_leading_coefficient() {
        for s in ["7x^4-1", "3x^2+2x+1", "x^5-40x+2"] {
            let f = p(s);
            let m = mahler_upper(&f).unwrap().upper.value();
            let lc: f64 = f.leading().unwrap().to_string().parse().unwrap();
            assert!(m >= lc.abs() * (1.0 - 1e-12), "{s}");
        }
    }

    #[test]
    fn cyclotomic_like_inputs_near_one() {
        // all roots on the unit circle: M = 1
        let m = mahler_upper_with(&p("x^12-1"), 8, DEFAULT_CAP_BITS)
            .unwrap()
            .upper
            .value();
        assert!(m >= 1.0 && m <= 1.01, "{m}");
    }

    #[test]
    fn power_of_x_plus_one_converges_down() {
        // M((x+1)^2d) = 1; deeper iteration tightens the estimate
        let f = p("x+1").pow(20);
        let shallow = mahler_upper_with(&f, 3, DEFAULT_CAP_BITS)
            .unwrap()
            .upper
            .value();
        let deep = mahler_upper_with(&f, 12, DEFAULT_CAP_BITS)
            .unwrap()
            .upper
            .value();
        assert!(deep <= shallow);
        assert!(deep >= 1.0);
        assert!(deep <= 1.1, "{deep}");
    }

    #[test]
    fn soft_switch_agrees_with_exact() {
        // force the scaled-float path early and compare against exact
        let f = p("x^8+8x^7+47x^6+136x^5+285x^4+171x^3-20x^2-21x+2");
        let exact = mahler_upper_with(&f, 8, 1 << 20).unwrap().upper.value();
        let soft = mahler_upper_with(&f, 8, 64).unwrap().upper.value();
        assert!(soft >= exact * (1.0 - 1e-9), "soft must stay certified");
        assert!(soft <= exact * (1.0 + 1e-6), "soft should stay sharp: {soft} vs {exact}");
    }
}
