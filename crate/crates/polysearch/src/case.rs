use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use polycore::{cyclotomic, IntPoly, Ratio};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CaseError {
    #[error("factor list is empty")]
    NoFactors,
    #[error("constant factor not allowed: {0}")]
    ConstantFactor(String),
    #[error("product mismatch in `{source}`: stored product differs from the factor product")]
    ProductMismatch { source: String },
    #[error("zero product")]
    ZeroProduct,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CaseTag {
    Palindromic,
    StarSymmetric,
    IrreducibleClaimed,
    WeaklyChecked,
}

/// A product polynomial together with its factor list; the record format
/// for every factorization table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizationCase {
    pub product: IntPoly,
    pub factors: Vec<IntPoly>,
    pub tags: BTreeSet<CaseTag>,
    pub source: String,
}

impl FactorizationCase {
    /// Builds a case from factors, computing the product.
    pub fn new(
        factors: Vec<IntPoly>,
        tags: BTreeSet<CaseTag>,
        source: impl Into<String>,
    ) -> Result<Self, CaseError> {
        if factors.is_empty() {
            return Err(CaseError::NoFactors);
        }
        for f in &factors {
            if f.degree().is_none_or(|d| d == 0) {
                return Err(CaseError::ConstantFactor(f.to_string()));
            }
        }
        let product = factors.iter().fold(IntPoly::one(), |acc, f| &acc * f);
        Ok(FactorizationCase {
            product,
            factors,
            tags,
            source: source.into(),
        })
    }

    /// Builds a case from a stored product and factors, re-verifying the
    /// product exactly.
    pub fn from_parts(
        product: IntPoly,
        factors: Vec<IntPoly>,
        tags: BTreeSet<CaseTag>,
        source: impl Into<String>,
    ) -> Result<Self, CaseError> {
        let source = source.into();
        let case = FactorizationCase::new(factors, tags, source.clone())?;
        if case.product != product {
            return Err(CaseError::ProductMismatch { source });
        }
        Ok(case)
    }

    pub fn min_factor_height(&self) -> BigInt {
        self.factors.iter().map(|f| f.height()).min().unwrap()
    }
}

/// Smallest factor height over product height.
pub fn ratio(case: &FactorizationCase) -> Result<Ratio, CaseError> {
    if case.product.is_zero() {
        return Err(CaseError::ZeroProduct);
    }
    Ok(Ratio::new(case.min_factor_height(), case.product.height()))
}

/// Everything `verify` recomputes about one case.
#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub product_ok: bool,
    pub product_height: BigInt,
    pub factor_heights: Vec<BigInt>,
    pub ratio: Ratio,
    pub weak_irreducible: Vec<bool>,
}

/// Recomputes the product, the heights, the ratio, and a weak
/// irreducibility verdict per factor.
pub fn verify_case(case: &FactorizationCase) -> Result<VerifyReport, CaseError> {
    let recomputed = case.factors.iter().fold(IntPoly::one(), |acc, f| &acc * f);
    if recomputed != case.product {
        return Err(CaseError::ProductMismatch {
            source: case.source.clone(),
        });
    }
    let ratio = ratio(case)?;
    Ok(VerifyReport {
        product_ok: true,
        product_height: case.product.height(),
        factor_heights: case.factors.iter().map(IntPoly::height).collect(),
        ratio,
        weak_irreducible: case.factors.iter().map(weak_irreducibility).collect(),
    })
}

/// Weak irreducibility: no rational root and no proper cyclotomic divisor of
/// index up to 105. A filter, not a proof.
pub fn weak_irreducibility(f: &IntPoly) -> bool {
    let d = match f.degree() {
        None | Some(0) => return false,
        Some(d) => d,
    };
    if d == 1 {
        return true;
    }
    if f.trailing().is_none_or(Zero::is_zero) {
        return false; // x divides
    }
    if has_rational_root(f) {
        return false;
    }
    for n in 1..=105u64 {
        let phi = cyclotomic(n);
        if phi.degree().unwrap() < d && f.exact_divide(&phi).is_ok() {
            return false;
        }
    }
    true
}

fn small_divisors(n: &BigInt) -> Vec<u64> {
    // divisor enumeration for the rational root test; for huge coefficients
    // fall back to 1 (the test is explicitly weak)
    let m = n.abs();
    let Ok(v) = u64::try_from(&m) else {
        return vec![1];
    };
    if v > 1_000_000_000_000 {
        return vec![1];
    }
    let mut divs = Vec::new();
    let mut i = 1u64;
    while i * i <= v {
        if v % i == 0 {
            divs.push(i);
            if i != v / i {
                divs.push(v / i);
            }
        }
        i += 1;
    }
    divs
}

fn has_rational_root(f: &IntPoly) -> bool {
    let d = f.degree().unwrap();
    let lead = f.leading().unwrap();
    let trail = f.trailing().unwrap();
    for p in small_divisors(trail) {
        for q in &small_divisors(lead) {
            if num_integer::gcd(p, *q) != 1 {
                continue;
            }
            for sign in [1i64, -1] {
                // q^d f(p/q) = sum a_i p^i q^(d-i)
                let pv = BigInt::from(p as i64 * sign);
                let qv = BigInt::from(*q);
                let mut acc = BigInt::zero();
                let mut p_pow = BigInt::one();
                let mut powers = Vec::with_capacity(d + 1);
                for _ in 0..=d {
                    powers.push(p_pow.clone());
                    p_pow *= &pv;
                }
                let mut q_pow = BigInt::one();
                for i in (0..=d).rev() {
                    acc += &f.coeffs()[i] * &powers[i] * &q_pow;
                    q_pow *= &qv;
                }
                if acc.is_zero() {
                    return true;
                }
            }
        }
    }
    false
}
