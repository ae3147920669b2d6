use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use polycore::{IntPoly, UpperReal};
use rootbounds::{mahler_upper, refined_root_bound, MahlerEstimate};
use serde::Serialize;

use crate::BoundError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundMethod {
    Binomial,
    BinomialRefined,
    Mignotte,
    KnuthCohen,
    Beauzamy,
    Combined,
}

impl BoundMethod {
    pub fn name(&self) -> &'static str {
        match self {
            BoundMethod::Binomial => "binomial",
            BoundMethod::BinomialRefined => "binomial_refined",
            BoundMethod::Mignotte => "mignotte",
            BoundMethod::KnuthCohen => "knuth_cohen",
            BoundMethod::Beauzamy => "beauzamy",
            BoundMethod::Combined => "combined",
        }
    }
}

/// Per-coefficient bounds for a degree-`delta` factor: `entries[i]` bounds
/// `|b_i|`, already floored to an integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundVector {
    pub method: BoundMethod,
    pub delta: usize,
    /// Ascending: index `i` bounds the coefficient of `x^i`.
    pub entries: Vec<BigInt>,
    pub overall: BigInt,
}

impl BoundVector {
    fn new(method: BoundMethod, delta: usize, entries: Vec<BigInt>) -> Self {
        debug_assert_eq!(entries.len(), delta + 1);
        debug_assert!(entries.iter().all(|e| !e.is_negative()));
        let overall = entries.iter().max().cloned().unwrap_or_else(BigInt::zero);
        BoundVector {
            method,
            delta,
            entries,
            overall,
        }
    }

    /// Entries in table order (x^delta first).
    pub fn entries_descending(&self) -> Vec<BigInt> {
        let mut v = self.entries.clone();
        v.reverse();
        v
    }
}

/// Audit trail for a report: which estimates fed the root-bound and
/// Mahler-measure dependent rows.
#[derive(Debug, Clone, Serialize)]
pub struct BoundAudit {
    /// Root bound for f.
    pub rho: f64,
    /// Root bound for the reversal.
    pub rho_bar: f64,
    /// Mahler measure upper estimate (reversal-minimized).
    pub mahler: f64,
    pub mahler_graeffe_depth: u32,
    pub l2_norm: f64,
    pub bombieri_norm: f64,
    /// Upward slack applied after every inexact operation.
    pub slack: &'static str,
}

/// All four degree-aware vectors plus their column-minimum combination.
#[derive(Debug, Clone)]
pub struct BoundReport {
    pub binomial: BoundVector,
    pub mignotte: BoundVector,
    pub beauzamy: BoundVector,
    pub knuth_cohen: BoundVector,
    pub combined: BoundVector,
    pub audit: BoundAudit,
}

fn check_common(f: &IntPoly, delta: usize) -> Result<usize, BoundError> {
    let d = f.degree().ok_or(BoundError::ZeroPolynomial)?;
    if delta < 1 || delta > d {
        return Err(BoundError::DeltaOutOfRange { delta, max: d });
    }
    if f.trailing().is_none_or(Zero::is_zero) {
        return Err(BoundError::ZeroTrailingCoefficient);
    }
    Ok(d)
}

fn binomial_coeff(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut c = BigInt::one();
    for i in 0..k.min(n - k) {
        c = c * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    c
}

/// Reversal-minimized Mahler estimate: `M(f) = M(reverse f)` exactly, but
/// the Graeffe estimates can differ, so take the smaller.
fn mahler_for_bounds(f: &IntPoly) -> MahlerEstimate {
    let a = mahler_upper(f).expect("nonzero checked");
    let b = mahler_upper(&f.reverse()).expect("nonzero checked");
    if a.upper.value() <= b.upper.value() {
        a
    } else {
        b
    }
}

/// The binomial bound with the reversal trick: `|b_i|` is dominated by the
/// smaller of the `x^i` coefficients of `|lc(f)| (x + rho)^delta` and
/// `|tc(f)| (rho_bar x + 1)^delta`.
pub fn binomial_vector(f: &IntPoly, delta: usize) -> Result<BoundVector, BoundError> {
    check_common(f, delta)?;
    let rho = refined_root_bound(f).expect("degree checked").bound;
    let rho_bar = refined_root_bound(&f.reverse())
        .expect("degree checked")
        .bound;
    Ok(binomial_vector_from_radii(f, delta, &rho, &rho_bar))
}

fn binomial_vector_from_radii(
    f: &IntPoly,
    delta: usize,
    rho: &UpperReal,
    rho_bar: &UpperReal,
) -> BoundVector {
    let lc = UpperReal::from_bigint(f.leading().unwrap());
    let tc = UpperReal::from_bigint(f.trailing().unwrap());
    let entries = (0..=delta)
        .map(|i| {
            let c = UpperReal::from_bigint(&binomial_coeff(delta, i));
            let fwd = lc.mul(&c).mul(&rho.powi((delta - i) as u32));
            let rev = tc.mul(&c).mul(&rho_bar.powi(i as u32));
            fwd.min(&rev).floor_bigint().unwrap_or_else(BigInt::zero)
        })
        .collect();
    BoundVector::new(BoundMethod::Binomial, delta, entries)
}

/// Refinement with individual root radii: the `x^i` coefficient of
/// `lc_abs * prod_{j=1..delta} (x + rho_j)`, radii sorted descending.
pub fn binomial_vector_refined(
    radii: &[UpperReal],
    lc_abs: &BigInt,
    delta: usize,
) -> Result<BoundVector, BoundError> {
    if radii.len() < delta {
        return Err(BoundError::NotEnoughRadii {
            delta,
            have: radii.len(),
        });
    }
    if radii.windows(2).any(|w| w[0].value() < w[1].value()) {
        return Err(BoundError::UnsortedRadii);
    }
    // expand prod (x + rho_j) over the delta largest radii
    let mut coeffs = vec![UpperReal::exact(1.0)];
    for rho in &radii[..delta] {
        let mut next = vec![UpperReal::zero(); coeffs.len() + 1];
        for (i, c) in coeffs.iter().enumerate() {
            next[i + 1] = next[i + 1].add(c);
            next[i] = next[i].add(&c.mul(rho));
        }
        coeffs = next;
    }
    let lc = UpperReal::from_bigint(&lc_abs.abs());
    let entries = coeffs
        .iter()
        .map(|c| {
            lc.mul(c).floor_bigint().unwrap_or_else(BigInt::zero)
        })
        .collect();
    Ok(BoundVector::new(BoundMethod::BinomialRefined, delta, entries))
}

/// Mignotte: `|b_i| <= C(delta, i) M(f)`.
pub fn mignotte_vector(f: &IntPoly, delta: usize) -> Result<BoundVector, BoundError> {
    check_common(f, delta)?;
    let m = mahler_for_bounds(f).upper;
    Ok(mignotte_vector_from_measure(delta, &m))
}

fn mignotte_vector_from_measure(delta: usize, m: &UpperReal) -> BoundVector {
    let entries = (0..=delta)
        .map(|i| {
            UpperReal::from_bigint(&binomial_coeff(delta, i))
                .mul(m)
                .floor_bigint()
                .unwrap_or_else(BigInt::zero)
        })
        .collect();
    BoundVector::new(BoundMethod::Mignotte, delta, entries)
}

/// floor(a sqrt(m)) for nonnegative integers, exactly.
fn floor_mul_sqrt(a: &BigInt, m: &BigInt) -> BigInt {
    (a * a * m).sqrt()
}

/// Knuth-Cohen with the reversal trick.
///
/// The plain bound for a degree-`delta` factor of `f` is
/// `|b_i| <= C(delta-1, i) |f|_2 + C(delta-1, i-1) |lc(f)|`, with
/// `|b_0| <= |tc(f)|` at `i = 0`. A bound for the coefficient of
/// `x^(delta-i)` in a factor of the reversal is also a bound for `|b_i|`,
/// so the vector is the index-flipped entry-wise minimum of the two
/// computations; the flipped `i = 0` rule caps the top entry at `|lc(f)|`.
pub fn knuth_cohen_vector(f: &IntPoly, delta: usize) -> Result<BoundVector, BoundError> {
    check_common(f, delta)?;
    let l2sq = f.l2_norm_sq();
    let lc = f.leading().unwrap().abs();
    let tc = f.trailing().unwrap().abs();
    let raw = |lead: &BigInt, trail: &BigInt, i: usize| -> BigInt {
        if i == 0 {
            return trail.clone();
        }
        floor_mul_sqrt(&binomial_coeff(delta - 1, i), &l2sq)
            + binomial_coeff(delta - 1, i - 1) * lead
    };
    let entries = (0..=delta)
        .map(|i| {
            let forward = raw(&lc, &tc, i);
            let flipped = raw(&tc, &lc, delta - i);
            forward.min(flipped)
        })
        .collect();
    Ok(BoundVector::new(BoundMethod::KnuthCohen, delta, entries))
}

/// Beauzamy: `|b_i| <= sqrt(C(delta, i) C(d, delta) / 2) [f]_2`, floored
/// exactly via integer square roots.
pub fn beauzamy_vector(f: &IntPoly, delta: usize) -> Result<BoundVector, BoundError> {
    let d = check_common(f, delta)?;
    let bom_sq = f.bombieri_norm_sq().expect("nonzero checked");
    let outer = binomial_coeff(d, delta);
    let entries = (0..=delta)
        .map(|i| {
            // entry^2 = C(delta,i) C(d,delta) [f]_2^2 / 2, an exact rational
            let sq = BigRational::new(binomial_coeff(delta, i) * &outer, BigInt::from(2)) * &bom_sq;
            // floor(sqrt(p/q)) = isqrt(p q) div q
            (sq.numer() * sq.denom()).sqrt() / sq.denom()
        })
        .collect();
    Ok(BoundVector::new(BoundMethod::Beauzamy, delta, entries))
}

/// All four methods plus the column minimum.
pub fn combined_report(f: &IntPoly, delta: usize) -> Result<BoundReport, BoundError> {
    check_common(f, delta)?;
    let rho = refined_root_bound(f).expect("degree checked").bound;
    let rho_bar = refined_root_bound(&f.reverse())
        .expect("degree checked")
        .bound;
    let mahler = mahler_for_bounds(f);

    let binomial = binomial_vector_from_radii(f, delta, &rho, &rho_bar);
    let mignotte = mignotte_vector_from_measure(delta, &mahler.upper);
    let beauzamy = beauzamy_vector(f, delta)?;
    let knuth_cohen = knuth_cohen_vector(f, delta)?;

    let entries: Vec<BigInt> = (0..=delta)
        .map(|i| {
            [&binomial, &mignotte, &beauzamy, &knuth_cohen]
                .iter()
                .map(|v| v.entries[i].clone())
                .min()
                .unwrap()
        })
        .collect();
    let combined = BoundVector::new(BoundMethod::Combined, delta, entries);

    let audit = BoundAudit {
        rho: rho.value(),
        rho_bar: rho_bar.value(),
        mahler: mahler.upper.value(),
        mahler_graeffe_depth: mahler.graeffe_depth,
        l2_norm: f.l2_norm().value(),
        bombieri_norm: f.bombieri_norm().expect("nonzero").value(),
        slack: "upper-rounded: each inexact operation multiplied by 1 + 2^-40",
    };
    Ok(BoundReport {
        binomial,
        mignotte,
        beauzamy,
        knuth_cohen,
        combined,
        audit,
    })
}

impl BoundReport {
    pub fn vectors(&self) -> [&BoundVector; 5] {
        [
            &self.binomial,
            &self.mignotte,
            &self.beauzamy,
            &self.knuth_cohen,
            &self.combined,
        ]
    }

    /// Stable JSON form: method name -> descending entries + overall, with
    /// audit values as decimal strings.
    pub fn to_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        for v in self.vectors() {
            map.insert(
                v.method.name().to_string(),
                serde_json::json!({
                    "entries_desc": v
                        .entries_descending()
                        .iter()
                        .map(|e| e.to_string())
                        .collect::<Vec<_>>(),
                    "overall": v.overall.to_string(),
                }),
            );
        }
        map.insert(
            "audit".to_string(),
            serde_json::json!({
                "rho": format!("{:.6e}", self.audit.rho),
                "rho_bar": format!("{:.6e}", self.audit.rho_bar),
                "mahler_upper": format!("{:.6e}", self.audit.mahler),
                "mahler_graeffe_depth": self.audit.mahler_graeffe_depth,
                "l2_norm": format!("{:.6e}", self.audit.l2_norm),
                "bombieri_norm": format!("{:.6e}", self.audit.bombieri_norm),
                "slack": self.audit.slack,
            }),
        );
        serde_json::Value::Object(map)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use polycore::parse;

    fn p(s: &str) -> IntPoly {
        parse(s).unwrap()
    }

    fn desc(v: &BoundVector) -> Vec<i64> {
        v.entries_descending()
            .iter()
            .map(|e| e.to_string().parse().unwrap())
            .collect()
    }

    // the four-method comparison products
    fn product_a() -> IntPoly {
        p("x^8+8x^7+47x^6+136x^5+285x^4+171x^3-20x^2-21x+2")
    }
    fn product_c() -> IntPoly {
        p("2x^8-22x^7+33x^6+44x^5+10x^4-13x^3+10x^2+45x-25")
    }

    #[test]
    fn knuth_cohen_exact_rows() {
        assert_eq!(
            desc(&knuth_cohen_vector(&product_a(), 4).unwrap()),
            vec![1, 366, 1093, 369, 2]
        );
        assert_eq!(
            desc(&knuth_cohen_vector(&product_c(), 4).unwrap()),
            vec![2, 86, 248, 155, 25]
        );
    }

    #[test]
    fn beauzamy_exact_rows() {
        assert_eq!(
            desc(&beauzamy_vector(&product_a(), 4).unwrap()),
            vec![275, 551, 675, 551, 275]
        );
        let f = p("3x^8+23x^7+13x^6-45x^5-253x^4+26x^3-26x^2+16x+3");
        assert_eq!(
            desc(&beauzamy_vector(&f, 4).unwrap()),
            vec![197, 394, 482, 394, 197]
        );
    }

    #[test]
    fn beauzamy_symmetry() {
        let v = beauzamy_vector(&product_c(), 4).unwrap();
        for i in 0..=4 {
            assert_eq!(v.entries[i], v.entries[4 - i]);
        }
    }

    #[test]
    fn binomial_row_of_combined_case() {
        // degree-4 row where the column minimum beats every single method
        let f = p("2x^8+2x^7-4x^6+19x^5+12x^4+8x^3-55x^2-45x+5");
        let report = combined_report(&f, 4).unwrap();
        assert_eq!(desc(&report.binomial), vec![2, 22, 95, 178, 5]);
        assert_eq!(report.combined.overall, BigInt::from(95));
        // combined is the column minimum
        for i in 0..=4 {
            for v in [&report.binomial, &report.mignotte, &report.beauzamy, &report.knuth_cohen] {
                assert!(report.combined.entries[i] <= v.entries[i]);
            }
            assert!(
                report.combined.entries[i]
                    == report
                        .vectors()
                        .iter()
                        .filter(|v| v.method != BoundMethod::Combined)
                        .map(|v| v.entries[i].clone())
                        .min()
                        .unwrap()
            );
        }
    }

    #[test]
    fn trivial_linear_factor_bounds() {
        // f = x - c: the degree-1 vector must cover f itself
        let f = p("x-17");
        let v = binomial_vector(&f, 1).unwrap();
        assert!(v.entries[0] >= BigInt::from(17));
        assert!(v.entries[1] >= BigInt::from(1));
    }

    #[test]
    fn refined_binomial_examples() {
        use polycore::UpperReal;
        // radii [3, 1]: (x+3)(x+1) = x^2 + 4x + 3
        let radii = [UpperReal::exact(3.0), UpperReal::exact(1.0)];
        let v = binomial_vector_refined(&radii, &BigInt::one(), 2).unwrap();
        assert_eq!(v.entries, vec![BigInt::from(3), BigInt::from(4), BigInt::from(1)]);
        // zero radius degenerates
        let radii = [UpperReal::exact(2.0), UpperReal::zero()];
        let v = binomial_vector_refined(&radii, &BigInt::one(), 2).unwrap();
        assert_eq!(v.entries, vec![BigInt::zero(), BigInt::from(2), BigInt::from(1)]);
        // unsorted input rejected
        let radii = [UpperReal::exact(1.0), UpperReal::exact(3.0)];
        assert_eq!(
            binomial_vector_refined(&radii, &BigInt::one(), 2).unwrap_err(),
            BoundError::UnsortedRadii
        );
    }

    #[test]
    fn refined_binomial_with_equal_radii_matches_standard_shape() {
        // all radii equal rho reproduces |lc| C(delta,i) rho^(delta-i)
        let rho = UpperReal::exact(2.0);
        let v = binomial_vector_refined(&[rho, rho, rho], &BigInt::from(3), 3).unwrap();
        assert_eq!(
            v.entries,
            vec![
                BigInt::from(24),
                BigInt::from(36),
                BigInt::from(18),
                BigInt::from(3)
            ]
        );
    }

    #[test]
    fn preconditions() {
        let f = p("x^2+1");
        assert!(matches!(
            binomial_vector(&f, 0).unwrap_err(),
            BoundError::DeltaOutOfRange { .. }
        ));
        assert!(matches!(
            binomial_vector(&f, 3).unwrap_err(),
            BoundError::DeltaOutOfRange { .. }
        ));
        let g = p("x^2+x");
        assert_eq!(
            binomial_vector(&g, 1).unwrap_err(),
            BoundError::ZeroTrailingCoefficient
        );
        assert_eq!(
            mignotte_vector(&IntPoly::zero(), 1).unwrap_err(),
            BoundError::ZeroPolynomial
        );
    }

    #[test]
    fn mignotte_palindromic_for_power_of_x_plus_one() {
        // M((x+1)^d) = 1, so entries approximate C(delta, i)
        let f = p("x+1").pow(8);
        let v = mignotte_vector(&f, 4).unwrap();
        for (i, e) in v.entries.iter().enumerate() {
            let c = binomial_coeff(4, i);
            assert!(*e >= c.clone() && *e <= c * 2, "i={i}");
        }
        // identical for f and its reversal, and palindromic
        let vr = mignotte_vector(&f.reverse(), 4).unwrap();
        assert_eq!(v.entries, vr.entries);
        for i in 0..=4 {
            assert_eq!(v.entries[i], v.entries[4 - i]);
        }
    }

    #[test]
    fn report_json_is_stable() {
        let f = p("x^4+2x^3-x+5");
        let j = combined_report(&f, 2).unwrap().to_json();
        let s = serde_json::to_string(&j).unwrap();
        assert!(s.contains("\"knuth_cohen\""));
        assert!(s.contains("\"audit\""));
        let j2 = combined_report(&f, 2).unwrap().to_json();
        assert_eq!(j, j2);
    }
}
