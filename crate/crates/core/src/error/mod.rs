//! Floating-point error machinery.
//!
//! Everything exact stays upstream; this module turns kernels and integrands
//! into numbers: reference integrals, kernel error integrals, kernel norms
//! via exact root isolation, sup-norm and midrange bounds, and composite
//! rules for convergence studies.

mod bounds;
mod composite;
mod norms;
mod quad;
mod report;
mod roots;

pub use bounds::{
    bound_l2, bounds, bounds_from_range, derivative_extrema, extrema_estimate, midrange,
    DEFAULT_EXTREMUM_GRID, DEFAULT_TOL,
};
pub use composite::{apply_rule_f64, composite_rule};
pub use norms::{kernel_norms, KernelNorms};
pub use quad::{integrate, integrate_split, QuadResult};
pub use report::{error_report, kernel_error, reference_integral, ErrorReport};
pub use roots::kernel_roots;
