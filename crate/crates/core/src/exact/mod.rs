//! Exact arbitrary-precision rational scalars and dense polynomials.
//!
//! All weight, parameter, and kernel computations in this crate run over
//! [`ExactScalar`] so that structural identities (orthogonality, symmetry,
//! matching) can be checked with exact equality instead of tolerances.

mod poly;
mod scalar;

pub use poly::Polynomial;
pub use scalar::{
    binomial, factorial, format_scalar, from_f64_exact, int, parse_scalar, pow_scalar, rat,
    rising_factorial, to_f64, ExactScalar,
};
