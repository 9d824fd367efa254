//! Full error report for one integrand and one rule.

use crate::error::bounds::{bound_l2, bounds_from_range, derivative_extrema};
use crate::error::composite::apply_rule_f64;
use crate::error::norms::{kernel_norms, KernelNorms};
use crate::error::quad::{integrate_split, QuadResult};
use crate::exact::{from_f64_exact, Polynomial};
use crate::functions::FunctionSpec;
use crate::rule::HermiteRule;
use crate::{Error, Result};

/// Everything one wants to know about applying the rule to a function:
/// the quadrature value, the error-kernel integral, the true error against
/// the reference oracle, and the sup-norm / midrange / L2 bounds.
#[derive(Debug, Clone, PartialEq)]
pub struct ErrorReport {
    pub n: u32,
    pub a: f64,
    pub b: f64,
    pub quadrature_value: f64,
    /// Error via the kernel representation `int (-1)^n f^(n) P dx`.
    pub kernel_error: f64,
    /// Reference value of the integral from the adaptive oracle.
    pub reference_value: f64,
    /// `reference_value - quadrature_value`.
    pub true_error: f64,
    pub bound_original: f64,
    pub bound_improved: f64,
    pub bound_l2: Option<f64>,
    /// Combined achieved error estimate of the numeric integrations.
    pub integration_error: f64,
    /// True when the function's top declared derivative order is exactly `n`,
    /// i.e. the classical `2n`-derivative error form is unavailable.
    pub reduced_regularity: bool,
}

/// Reference integral of `f` over `[a, b]` by adaptive quadrature, split at
/// the function's declared kinks.
pub fn reference_integral(f: &FunctionSpec, a: f64, b: f64, tol: f64) -> Result<QuadResult> {
    let eval = |x: f64| f.value(x);
    integrate_split(&eval, a, b, &f.kinks_in(a, b), tol)
}

/// The exact-representation error integral `int_a^b (-1)^n f^(n)(x) P(x) dx`,
/// evaluated numerically with splits at declared kinks.
pub fn kernel_error(
    f: &FunctionSpec,
    n: u32,
    kernel: &Polynomial,
    a: f64,
    b: f64,
    tol: f64,
) -> Result<QuadResult> {
    if !f.has_order(n) {
        return Err(Error::MissingDerivative {
            name: f.name().to_string(),
            order: n,
        });
    }
    let coeffs = kernel.coeffs_f64();
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
    let integrand = |x: f64| -> Result<f64> {
        let p = coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c);
        Ok(sign * f.derivative_value(n, x)? * p)
    };
    integrate_split(&integrand, a, b, &f.kinks_in(a, b), tol)
}

/// Build the full report for `f` with the order-`n` rule on `[a, b]`.
pub fn error_report(f: &FunctionSpec, n: u32, a: f64, b: f64, tol: f64) -> Result<ErrorReport> {
    if !f.has_order(n) {
        return Err(Error::MissingDerivative {
            name: f.name().to_string(),
            order: n,
        });
    }
    let rule = HermiteRule::new(n, &from_f64_exact(a)?, &from_f64_exact(b)?)?;
    let quadrature_value = apply_rule_f64(f, n, a, b)?;
    let kernel_term = kernel_error(f, n, rule.kernel(), a, b, tol)?;
    let reference = reference_integral(f, a, b, tol)?;

    let norms: KernelNorms = kernel_norms(rule.kernel(), a, b)?;
    let (inf, sup) = derivative_extrema(f, n, a, b)?;
    let (bound_original, bound_improved) = bounds_from_range(inf, sup, norms.l1);
    let l2 = bound_l2(f, n, a, b).ok();

    Ok(ErrorReport {
        n,
        a,
        b,
        quadrature_value,
        kernel_error: kernel_term.value,
        reference_value: reference.value,
        true_error: reference.value - quadrature_value,
        bound_original,
        bound_improved,
        bound_l2: l2,
        integration_error: kernel_term.abs_error + reference.abs_error,
        reduced_regularity: f.max_smooth_order() == Some(n),
    })
}
