use std::collections::HashMap;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::One;

use crate::poly::IntPoly;

static MEMO: Mutex<Option<HashMap<u64, IntPoly>>> = Mutex::new(None);

/// The `n`-th cyclotomic polynomial, `n >= 1`.
///
/// Computed by exact division: `phi_n = (x^n - 1) / prod_{d|n, d<n} phi_d`,
/// with the divisor polynomials taken from a process-wide memo table. The
/// memo is behind a mutex, so concurrent callers are safe.
pub fn cyclotomic(n: u64) -> IntPoly {
    assert!(n >= 1, "cyclotomic index must be positive");
    if let Some(hit) = MEMO.lock().unwrap().as_ref().and_then(|m| m.get(&n)) {
        return hit.clone();
    }
    let result = compute(n);
    MEMO.lock()
        .unwrap()
        .get_or_insert_with(HashMap::new)
        .insert(n, result.clone());
    result
}

fn compute(n: u64) -> IntPoly {
    if n == 1 {
        return IntPoly::from_descending_i64(&[1, -1]);
    }
    let mut divisor_product = IntPoly::one();
    for d in 1..=n / 2 {
        if n % d == 0 {
            divisor_product = &divisor_product * &cyclotomic(d);
        }
    }
    let x_n_minus_1 = &IntPoly::monomial(BigInt::one(), n as usize) - &IntPoly::one();
    x_n_minus_1
        .exact_divide(&divisor_product)
        .expect("x^n - 1 is divisible by the product of lower cyclotomics")
}
