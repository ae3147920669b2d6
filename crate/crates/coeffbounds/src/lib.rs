//! Coefficient bounds for factors of integer polynomials.
//!
//! Degree-aware methods bound each coefficient of a factor of stated degree
//! `delta`: the binomial bound (root-bound based, improved by the reversal
//! trick), Mignotte's Mahler-measure bound, the Knuth-Cohen bound (also
//! reversal-improved), and Beauzamy's Bombieri-norm bound. Taking the
//! column minimum across methods gives a combined vector at least as tight
//! as any single method.
//!
//! Single-factor bounds hold for at least one factor of any non-trivial
//! factorization regardless of its degree.
//!
//! Knuth-Cohen and Beauzamy vectors are computed entirely in integer
//! arithmetic (`floor(a sqrt(m)) = isqrt(a^2 m)`), so their floored entries
//! are exact, not merely certified.

mod minl2;
mod single;
mod vectors;

pub use minl2::{min_l2_multiple, product_l2_sq as minl2_product_l2_sq, MinL2Result};
pub use single::{sf_best, sf_btw, sf_mignotte, sf_mignotte_refined, SfMethod, SingleFactorBound};
pub use vectors::{
    beauzamy_vector, binomial_vector, binomial_vector_refined, combined_report, knuth_cohen_vector,
    mignotte_vector, BoundAudit, BoundMethod, BoundReport, BoundVector,
};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BoundError {
    #[error("factor degree {delta} outside 1..={max}")]
    DeltaOutOfRange { delta: usize, max: usize },
    #[error("input must have nonzero trailing coefficient")]
    ZeroTrailingCoefficient,
    #[error("input degree too small: need {need}, have {have}")]
    DegreeTooSmall { need: usize, have: usize },
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("root radii must be sorted in descending order")]
    UnsortedRadii,
    #[error("need at least {delta} root radii, have {have}")]
    NotEnoughRadii { delta: usize, have: usize },
}
