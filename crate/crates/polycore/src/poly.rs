use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::upper::UpperReal;

/// Dense polynomial over arbitrary-precision integers.
///
/// Coefficients are stored in ascending order: index `i` holds the
/// coefficient of `x^i`. The vector never has a trailing zero, so the zero
/// polynomial is the empty vector and `degree()` returns `None` for it.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DivideError {
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("not divisible")]
    NotDivisible,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SubstituteError {
    #[error("substitution exponent must be at least 1")]
    ZeroExponent,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn x() -> Self {
        IntPoly::from_coeffs(vec![BigInt::zero(), BigInt::one()])
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::from_coeffs(vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = c;
        IntPoly::from_coeffs(v)
    }

    /// Builds from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    /// Builds from a descending coefficient list (the order used by the
    /// bracketed text format).
    pub fn from_descending(mut coeffs: Vec<BigInt>) -> Self {
        coeffs.reverse();
        IntPoly::from_coeffs(coeffs)
    }

    pub fn from_descending_i64(coeffs: &[i64]) -> Self {
        IntPoly::from_descending(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Ascending coefficient slice (empty for zero).
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Descending coefficient list, as printed in tables.
    pub fn coeffs_descending(&self) -> Vec<BigInt> {
        let mut v = self.coeffs.clone();
        v.reverse();
        v
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Trailing coefficient, i.e. the value at zero.
    pub fn trailing(&self) -> Option<&BigInt> {
        self.coeffs.first()
    }

    /// Exact quotient `self / divisor`, or an error when the division does
    /// not come out exactly in `Z[x]`.
    pub fn exact_divide(&self, divisor: &IntPoly) -> Result<IntPoly, DivideError> {
        if divisor.is_zero() {
            return Err(DivideError::ZeroDivisor);
        }
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        let dn = self.coeffs.len();
        let dd = divisor.coeffs.len();
        if dn < dd {
            return Err(DivideError::NotDivisible);
        }
        let lead = divisor.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); dn - dd + 1];
        for k in (0..quot.len()).rev() {
            let num = rem[k + dd - 1].clone();
            if num.is_zero() {
                continue;
            }
            if !(&num % lead).is_zero() {
                return Err(DivideError::NotDivisible);
            }
            let c = num / lead;
            for (j, b) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * b;
            }
            quot[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(DivideError::NotDivisible);
        }
        Ok(IntPoly::from_coeffs(quot))
    }

    /// The reversal `x^d * f(1/x)`: the coefficient list reversed.
    pub fn reverse(&self) -> IntPoly {
        let mut v = self.coeffs.clone();
        v.reverse();
        IntPoly::from_coeffs(v)
    }

    /// `f(-x)`.
    pub fn negate_x(&self) -> IntPoly {
        let v = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
            .collect();
        IntPoly::from_coeffs(v)
    }

    /// `g*(x) = reverse(g(-x))`.
    pub fn star(&self) -> IntPoly {
        self.negate_x().reverse()
    }

    /// `f(x^k)` for `k >= 1`.
    pub fn substitute_power(&self, k: usize) -> Result<IntPoly, SubstituteError> {
        if k == 0 {
            return Err(SubstituteError::ZeroExponent);
        }
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        let d = self.coeffs.len() - 1;
        let mut v = vec![BigInt::zero(); d * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[i * k] = c.clone();
        }
        Ok(IntPoly::from_coeffs(v))
    }

    pub fn pow(&self, k: usize) -> IntPoly {
        let mut acc = IntPoly::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Height: the largest coefficient magnitude (zero for the zero poly).
    pub fn height(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn l1_norm(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).sum()
    }

    /// Exact sum of squared coefficients.
    pub fn l2_norm_sq(&self) -> BigInt {
        self.coeffs.iter().map(|c| c * c).sum()
    }

    /// Certified upper bound on the l2 norm.
    pub fn l2_norm(&self) -> UpperReal {
        UpperReal::sqrt_bigint(&self.l2_norm_sq())
    }

    /// Exact square of the Bombieri weighted norm,
    /// `sum |a_j|^2 / C(d, j)`.
    pub fn bombieri_norm_sq(&self) -> Option<BigRational> {
        let d = self.degree()?;
        let mut total = BigRational::zero();
        let mut binom = BigInt::one();
        for (j, c) in self.coeffs.iter().enumerate() {
            if j > 0 {
                // C(d, j) = C(d, j-1) * (d - j + 1) / j
                binom = binom * BigInt::from(d - j + 1) / BigInt::from(j);
            }
            total += BigRational::new(c * c, binom.clone());
        }
        Some(total)
    }

    /// Certified upper bound on the Bombieri norm. `None` for zero input.
    pub fn bombieri_norm(&self) -> Option<UpperReal> {
        Some(UpperReal::sqrt_rational(&self.bombieri_norm_sq()?))
    }

    /// Exact evaluation at an integer point (Horner).
    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Whether `f == f_reversed` up to sign.
    pub fn is_palindromic(&self) -> bool {
        let r = self.reverse();
        *self == r || *self == -&r
    }

    /// Whether `f == star(f)` up to sign; products `g * star(g)` have this
    /// property.
    pub fn is_star_symmetric(&self) -> bool {
        let s = self.star();
        *self == s || *self == -&s
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({})", self)
    }
}

fn add_impl(a: &IntPoly, b: &IntPoly, negate_b: bool) -> IntPoly {
    let n = a.coeffs.len().max(b.coeffs.len());
    let mut v = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero);
        let y = b.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero);
        v.push(if negate_b { x - y } else { x + y });
    }
    IntPoly::from_coeffs(v)
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        add_impl(self, rhs, false)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        add_impl(self, rhs, true)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut v = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] += a * b;
                }
            }
        }
        IntPoly::from_coeffs(v)
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: IntPoly) -> IntPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: &IntPoly) -> IntPoly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}
