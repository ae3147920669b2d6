use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

/// The ratio of a factorization: smallest factor height over product height.
///
/// A ratio above 1 means every factor is taller than the product. Equality
/// and ordering compare the rational values, so `6/4 == 3/2`.
#[derive(Clone, Debug)]
pub struct Ratio {
    numerator: BigInt,
    denominator: BigInt,
}

impl PartialEq for Ratio {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == std::cmp::Ordering::Equal
    }
}

impl Eq for Ratio {}

impl Ratio {
    /// `numerator` is the smallest factor height, `denominator` the product
    /// height. Panics when the denominator is not positive.
    pub fn new(numerator: BigInt, denominator: BigInt) -> Self {
        assert!(denominator.is_positive(), "product height must be positive");
        assert!(!numerator.is_negative());
        Ratio {
            numerator,
            denominator,
        }
    }

    pub fn numerator(&self) -> &BigInt {
        &self.numerator
    }

    pub fn denominator(&self) -> &BigInt {
        &self.denominator
    }

    /// Exact rational value (reduced).
    pub fn value(&self) -> BigRational {
        BigRational::new(self.numerator.clone(), self.denominator.clone())
    }

    pub fn to_f64(&self) -> f64 {
        self.value().to_f64().unwrap_or(f64::NAN)
    }
}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ratio {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        // cross multiply; denominators are positive
        (&self.numerator * &other.denominator).cmp(&(&other.numerator * &self.denominator))
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.value();
        write!(f, "{}/{}", v.numer(), v.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_and_value() {
        let a = Ratio::new(BigInt::from(4), BigInt::from(3));
        let b = Ratio::new(BigInt::from(3), BigInt::from(2));
        assert!(a < b);
        assert_eq!(a.to_string(), "4/3");
        assert_eq!(
            Ratio::new(BigInt::from(6), BigInt::from(4)).to_string(),
            "3/2"
        );
    }
}
