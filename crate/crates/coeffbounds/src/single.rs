use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;
use polycore::{IntPoly, UpperReal};
use rootbounds::mahler_upper;
use serde::Serialize;

use crate::vectors::combined_report;
use crate::BoundError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SfMethod {
    /// `|g|_1 <= sqrt(2^d M(f))` — an l1 bound, hence also a height bound.
    MignotteL1Sqrt,
    /// `|g|_inf <= sqrt((2/3) C(d, floor(d/2)) M(f))`.
    MignotteRefined,
    /// `|g|_inf <= 1.1 sqrt(2^d d^(-3/4) [f]_2)`.
    Btw,
    /// Degree-aware combined report at the best admissible degree.
    DegreeAwareAtHalf,
}

impl SfMethod {
    pub fn name(&self) -> &'static str {
        match self {
            SfMethod::MignotteL1Sqrt => "mignotte_l1_sqrt",
            SfMethod::MignotteRefined => "mignotte_refined",
            SfMethod::Btw => "btw",
            SfMethod::DegreeAwareAtHalf => "degree_aware_at_half",
        }
    }
}

/// A bound exceeded by at most `s - 1` factors: at least one factor of any
/// non-trivial factorization has height (or l1 norm) below it.
#[derive(Debug, Clone)]
pub struct SingleFactorBound {
    pub value: BigInt,
    pub method: SfMethod,
    pub audit: SfAudit,
}

/// The inputs the bound was computed from.
#[derive(Debug, Clone, Default, Serialize)]
pub struct SfAudit {
    pub mahler_upper: Option<f64>,
    pub bombieri_norm: Option<f64>,
    pub delta_used: Option<usize>,
}

fn reversal_min_mahler(f: &IntPoly) -> UpperReal {
    let a = mahler_upper(f).expect("nonzero checked").upper;
    if f.trailing().is_some_and(|c| !c.is_zero()) {
        a.min(&mahler_upper(&f.reverse()).expect("nonzero").upper)
    } else {
        a
    }
}

fn require_degree(f: &IntPoly, need: usize) -> Result<usize, BoundError> {
    let d = f.degree().ok_or(BoundError::ZeroPolynomial)?;
    if d < need {
        return Err(BoundError::DegreeTooSmall { need, have: d });
    }
    Ok(d)
}

/// Mignotte's single-factor bound, l1 form: `floor(sqrt(2^d M(f)))`.
pub fn sf_mignotte(f: &IntPoly) -> Result<SingleFactorBound, BoundError> {
    let d = require_degree(f, 2)?;
    let m = reversal_min_mahler(f);
    let two_d = UpperReal::exact(1.0).powi_two(d);
    let value = two_d.mul(&m).sqrt().floor_bigint().unwrap_or_default();
    Ok(SingleFactorBound {
        value,
        method: SfMethod::MignotteL1Sqrt,
        audit: SfAudit {
            mahler_upper: Some(m.value()),
            ..Default::default()
        },
    })
}

/// Mignotte's refined height form:
/// `floor(sqrt((2/3) C(d, floor(d/2)) M(f)))`.
pub fn sf_mignotte_refined(f: &IntPoly) -> Result<SingleFactorBound, BoundError> {
    let d = require_degree(f, 2)?;
    let m = reversal_min_mahler(f);
    let central = central_binomial(d);
    // (2/3) * C * M, all upper-rounded
    let factor = UpperReal::from_bigint(&(central * 2u32));
    let third = UpperReal::exact(1.0 / 3.0).value(); // rounded up below
    let scaled = UpperReal::exact(third.next_up()).mul(&factor);
    let value = scaled.mul(&m).sqrt().floor_bigint().unwrap_or_default();
    Ok(SingleFactorBound {
        value,
        method: SfMethod::MignotteRefined,
        audit: SfAudit {
            mahler_upper: Some(m.value()),
            ..Default::default()
        },
    })
}

fn central_binomial(d: usize) -> BigInt {
    use num_traits::One;
    let k = d / 2;
    let mut c = BigInt::one();
    for i in 0..k {
        c = c * BigInt::from(d - i) / BigInt::from(i + 1);
    }
    c
}

/// The BTW bound: `floor(1.1 sqrt(2^d d^(-3/4) [f]_2))`, valid for
/// `deg(f) > 2`. The constant is taken as exactly 1.1 (the theorem
/// guarantees some c < 1.1), rounded up in the final multiply.
pub fn sf_btw(f: &IntPoly) -> Result<SingleFactorBound, BoundError> {
    let d = require_degree(f, 3)?;
    let bom = f.bombieri_norm().expect("nonzero checked");
    let two_d = UpperReal::exact(1.0).powi_two(d);
    let d_pow = (d as f64).powf(-0.75).next_up();
    let inner = two_d.mul(&UpperReal::exact(d_pow)).mul(&bom);
    let value = UpperReal::exact(1.1f64.next_up())
        .mul(&inner.sqrt())
        .floor_bigint()
        .unwrap_or_default();
    Ok(SingleFactorBound {
        value,
        method: SfMethod::Btw,
        audit: SfAudit {
            bombieri_norm: Some(bom.value()),
            ..Default::default()
        },
    })
}

/// The smallest of all applicable single-factor bounds, including the
/// degree-aware combined report used as a single-factor bound.
///
/// Any non-trivial factorization contains a factor of degree at most
/// `floor(d/2)`, so when degree analysis supplies a set of admissible factor
/// degrees, the degree-aware component is evaluated at the largest
/// admissible degree not exceeding `floor(d/2)` (default `floor(d/2)`
/// itself).
pub fn sf_best(
    f: &IntPoly,
    degree_info: Option<&BTreeSet<usize>>,
) -> Result<SingleFactorBound, BoundError> {
    let d = require_degree(f, 2)?;
    let mut candidates = vec![sf_mignotte(f)?, sf_mignotte_refined(f)?];
    if d > 2 {
        candidates.push(sf_btw(f)?);
    }
    let delta = match degree_info {
        Some(set) => set.iter().copied().filter(|&x| x >= 1 && x <= d / 2).max(),
        None => Some(d / 2),
    };
    if let Some(delta) = delta {
        if f.trailing().is_some_and(|c| !c.is_zero()) {
            let report = combined_report(f, delta)?;
            candidates.push(SingleFactorBound {
                value: report.combined.overall.clone(),
                method: SfMethod::DegreeAwareAtHalf,
                audit: SfAudit {
                    mahler_upper: Some(report.audit.mahler),
                    bombieri_norm: Some(report.audit.bombieri_norm),
                    delta_used: Some(delta),
                },
            });
        }
    }
    Ok(candidates
        .into_iter()
        .min_by(|a, b| a.value.cmp(&b.value))
        .expect("at least two candidates"))
}

trait PowiTwo {
    fn powi_two(&self, d: usize) -> UpperReal;
}

impl PowiTwo for UpperReal {
    /// `2^d` exactly (as a float power of two), times self.
    fn powi_two(&self, d: usize) -> UpperReal {
        UpperReal::exact((d as f64).exp2()).mul(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use polycore::parse;

    fn p(s: &str) -> IntPoly {
        parse(s).unwrap()
    }

    #[test]
    fn palindromic_degree8_comparison() {
        // the palindromic product where the refined Mignotte form wins
        let f = p("6x^8+27x^7+65x^6+105x^5+123x^4+105x^3+65x^2+27x+6");
        assert_eq!(sf_mignotte_refined(&f).unwrap().value, BigInt::from(21));
        assert_eq!(sf_btw(&f).unwrap().value, BigInt::from(47));
    }

    #[test]
    fn even_degree8_comparison() {
        let f = p("x^8-6x^6+59x^4-6x^2+1");
        assert_eq!(sf_btw(&f).unwrap().value, BigInt::from(21));
        assert_eq!(sf_mignotte_refined(&f).unwrap().value, BigInt::from(52));
    }

    #[test]
    fn xd_minus_one_l1_form() {
        // M(x^d - 1) = 1; the estimate is at worst the depth-0 value
        // |f|_2 = sqrt(2), so the bound lands in
        // [floor(sqrt(2^d)), sqrt(2^d) * 2^(1/4)]
        for d in [4usize, 8, 12] {
            let f = &IntPoly::monomial(BigInt::from(1), d) - &IntPoly::one();
            let v: f64 = sf_mignotte(&f).unwrap().value.to_string().parse().unwrap();
            let base = 2f64.powi(d as i32).sqrt();
            assert!(v >= base.floor() && v <= base * 2f64.powf(0.25) + 1.0, "d={d} v={v}");
        }
    }

    #[test]
    fn btw_rejects_low_degree() {
        assert!(matches!(
            sf_btw(&p("x^2+x+1")).unwrap_err(),
            BoundError::DegreeTooSmall { need: 3, .. }
        ));
        assert!(matches!(
            sf_mignotte(&p("x+1")).unwrap_err(),
            BoundError::DegreeTooSmall { need: 2, .. }
        ));
    }

    #[test]
    fn sf_best_picks_minimum() {
        let f = p("x^8-6x^6+59x^4-6x^2+1");
        let best = sf_best(&f, None).unwrap();
        assert!(best.value <= sf_btw(&f).unwrap().value);
        assert!(best.value <= sf_mignotte_refined(&f).unwrap().value);
    }

    #[test]
    fn low_degree_factor_information_helps() {
        // g1 = x^2 + 5x + 9, g2 = g1^9 + x^8: with the 2+18 degree pattern
        // the degree-aware bound at delta = 2 is dramatically smaller
        let g1 = p("x^2+5x+9");
        let g2 = &g1.pow(9) + &p("x^8");
        let f = &g1 * &g2;
        let degrees: BTreeSet<usize> = [2usize, 18].into_iter().collect();
        let best = sf_best(&f, Some(&degrees)).unwrap();
        assert_eq!(best.method, SfMethod::DegreeAwareAtHalf);
        assert_eq!(best.audit.delta_used, Some(2));
        assert!(best.value <= BigInt::from(15));
        // without degree information the single-factor forms stay huge
        let plain = sf_mignotte_refined(&f).unwrap().value;
        assert!(plain > BigInt::from(20_000_000i64));
    }

    #[test]
    fn second_low_degree_example_favours_single_factor() {
        let g1 = p("8x^2+9x+9");
        let g2 = &g1.pow(9) + &p("x^8");
        let f = &g1 * &g2;
        let refined = sf_mignotte_refined(&f).unwrap().value;
        assert!(refined < BigInt::from(27_000_000i64));
    }
}
