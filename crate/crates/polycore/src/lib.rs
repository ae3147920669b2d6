//! Exact arithmetic for dense univariate polynomials over arbitrary-precision
//! integers, together with the coefficient norms and structural transforms
//! (reversal, `x -> -x`, star, power substitution) used throughout the
//! workspace, cyclotomic polynomial generation, and a small expression /
//! coefficient-list parser.
//!
//! Polynomials are immutable after construction and always kept in canonical
//! form (no trailing zero coefficients). The degree of the zero polynomial is
//! represented as `None` rather than `-1` so that it cannot silently take part
//! in arithmetic.

mod cyclotomic;
mod parse;
mod poly;
mod ratio;
mod upper;

pub use cyclotomic::cyclotomic;
pub use parse::{parse, ParseError, PolyJson};
pub use poly::{DivideError, IntPoly, SubstituteError};
pub use ratio::Ratio;
pub use upper::{
    f64_down_from_bigint, f64_up_from_bigint, log2_down_from_bigint, log2_up_from_bigint,
    UpperReal,
};
