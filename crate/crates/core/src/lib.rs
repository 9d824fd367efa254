//! Two-point Hermite quadrature with exact rational weights and error kernels.
//!
//! The rule integrates a function over `[a, b]` from the values of `f` and its
//! first `n-1` derivatives at the two endpoints. Everything that can be kept
//! exact is kept exact: weights, free parameters, and the degree-`n` error
//! kernel are arbitrary-precision rationals. Floating point enters only when a
//! concrete integrand is evaluated.
//!
//! The crate is organised around the pipeline
//!
//! ```text
//! exact  ->  hermite  ->  params  ->  rule  ->  error
//!                                      ^
//!                                  functions
//! ```
//!
//! * [`exact`] — rational scalars and dense polynomial arithmetic.
//! * [`hermite`] — the two-point Hermite interpolant and its quadrature weights.
//! * [`params`] — free parameters of the integration-by-parts identity and the
//!   error kernel built from them.
//! * [`rule`] — a bundled quadrature rule (weights + parameters + kernel).
//! * [`functions`] — a registry of test integrands with analytic derivatives.
//! * [`error`] — floating-point error machinery: kernel norms, error integrals,
//!   sup-norm and midrange bounds, composite rules.

pub mod error;
pub mod exact;
pub mod functions;
pub mod hermite;
pub mod params;
pub mod rule;

pub use error::{ErrorReport, KernelNorms, QuadResult, DEFAULT_TOL};
pub use exact::{ExactScalar, Polynomial};
pub use functions::FunctionSpec;
pub use hermite::{EndpointData, WeightSet};
pub use params::{AlphaSet, Theta};
pub use rule::HermiteRule;

use std::fmt;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An operation that needs `n >= 1` received `n = 0`, or `n` exceeded a
    /// caller-imposed cap.
    InvalidOrder(String),
    /// The interval endpoints coincide.
    DegenerateInterval,
    /// Mismatched lengths between weights and endpoint data.
    DimensionMismatch { expected: usize, got: usize },
    /// Index outside the supported range (e.g. binomial with `j > k`).
    IndexOutOfRange(String),
    /// A string could not be parsed as an exact rational.
    ParseScalar(String),
    /// Root isolation was asked for the zero polynomial.
    ZeroPolynomial,
    /// Evaluation requested outside a function's declared domain.
    Domain { name: String, x: f64 },
    /// A derivative order beyond what the function declares.
    MissingDerivative { name: String, order: u32 },
    /// A sample or integrand value came back non-finite.
    NonFinite { what: String, x: f64 },
    /// Finite-difference validation of a declared derivative failed.
    DerivativeMismatch {
        name: String,
        order: u32,
        point: f64,
        rel_err: f64,
    },
    /// An adaptive integration could not reach the requested tolerance.
    Tolerance { requested: f64, achieved: f64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidOrder(msg) => write!(f, "invalid order: {msg}"),
            Error::DegenerateInterval => write!(f, "interval endpoints must be distinct"),
            Error::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            Error::IndexOutOfRange(msg) => write!(f, "index out of range: {msg}"),
            Error::ParseScalar(s) => write!(f, "cannot parse {s:?} as an exact rational"),
            Error::ZeroPolynomial => write!(f, "the zero polynomial has no isolated roots"),
            Error::Domain { name, x } => {
                write!(f, "{name} is not defined at x = {x}")
            }
            Error::MissingDerivative { name, order } => {
                write!(f, "{name} does not provide derivative order {order}")
            }
            Error::NonFinite { what, x } => {
                write!(f, "non-finite value of {what} at x = {x}")
            }
            Error::DerivativeMismatch {
                name,
                order,
                point,
                rel_err,
            } => write!(
                f,
                "derivative order {order} of {name} disagrees with finite differences \
                 at x = {point} (relative error {rel_err:.3e})"
            ),
            Error::Tolerance {
                requested,
                achieved,
            } => write!(
                f,
                "requested tolerance {requested:.3e} not met (achieved {achieved:.3e})"
            ),
        }
    }
}

impl std::error::Error for Error {}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
