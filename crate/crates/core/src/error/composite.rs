//! Floating-point rule application and composite rules.

use crate::exact::{from_f64_exact, to_f64};
use crate::functions::FunctionSpec;
use crate::hermite::hermite_weights;
use crate::{Error, Result};

/// Apply the order-`n` rule to `f` on `[a, b]` with endpoint derivatives
/// evaluated in floating point. `w_a` are the exact weights for this width,
/// rounded once; `w_b[j] = (-1)^j w_a[j]`.
fn apply_weights(f: &FunctionSpec, n: u32, a: f64, b: f64, w_a: &[f64]) -> Result<f64> {
    let mut acc = 0.0;
    for j in 0..n {
        let w = w_a[j as usize];
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        acc += w * f.derivative_value(j, a)? + sign * w * f.derivative_value(j, b)?;
    }
    Ok(acc)
}

/// Single-interval rule value for `f` on `[a, b]` in floating point.
pub fn apply_rule_f64(f: &FunctionSpec, n: u32, a: f64, b: f64) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidOrder("n must be at least 1".into()));
    }
    if !f.has_order(n.saturating_sub(1)) {
        return Err(Error::MissingDerivative {
            name: f.name().to_string(),
            order: n - 1,
        });
    }
    let w = hermite_weights(n, &from_f64_exact(a)?, &from_f64_exact(b)?)?;
    let w_a: Vec<f64> = w.w_a().iter().map(to_f64).collect();
    apply_weights(f, n, a, b, &w_a)
}

/// Composite rule: the order-`n` rule on `pieces` equal sub-intervals,
/// summed left to right.
///
/// The weights depend only on the sub-interval width, so they are computed
/// exactly once per call.
pub fn composite_rule(f: &FunctionSpec, n: u32, a: f64, b: f64, pieces: u32) -> Result<f64> {
    if n == 0 || pieces == 0 {
        return Err(Error::InvalidOrder(
            "order and piece count must be at least 1".into(),
        ));
    }
    if !f.has_order(n.saturating_sub(1)) {
        return Err(Error::MissingDerivative {
            name: f.name().to_string(),
            order: n - 1,
        });
    }
    let h = (b - a) / pieces as f64;
    let w = hermite_weights(n, &from_f64_exact(0.0)?, &from_f64_exact(h)?)?;
    let w_a: Vec<f64> = w.w_a().iter().map(to_f64).collect();

    let mut acc = 0.0;
    for i in 0..pieces {
        let lo = a + (b - a) * i as f64 / pieces as f64;
        let hi = if i + 1 == pieces {
            b
        } else {
            a + (b - a) * (i + 1) as f64 / pieces as f64
        };
        acc += apply_weights(f, n, lo, hi, &w_a)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functions::lookup;

    #[test]
    fn one_piece_equals_the_plain_rule() {
        let f = lookup("exp").unwrap();
        let single = apply_rule_f64(&f, 2, 0.0, 1.0).unwrap();
        let composite = composite_rule(&f, 2, 0.0, 1.0, 1).unwrap();
        assert_eq!(single, composite);
    }

    #[test]
    fn exact_on_low_degree_polynomials() {
        // degree 3 <= 2n - 1 for n = 2: error stays at rounding level
        let f = lookup("cubic").unwrap();
        for pieces in [1, 3, 7] {
            let value = composite_rule(&f, 2, 0.0, 1.0, pieces).unwrap();
            assert!((value - 0.25).abs() < 1e-14, "pieces = {pieces}");
        }
    }

    #[test]
    fn halving_the_step_gains_two_to_the_two_n() {
        let f = lookup("exp").unwrap();
        let exact = 1f64.exp() - 1.0;
        let e8 = (composite_rule(&f, 2, 0.0, 1.0, 8).unwrap() - exact).abs();
        let e16 = (composite_rule(&f, 2, 0.0, 1.0, 16).unwrap() - exact).abs();
        let order = (e8 / e16).log2();
        assert!((order - 4.0).abs() < 0.2, "observed order {order}");
    }

    #[test]
    fn missing_derivatives_are_rejected() {
        // the rule at n = 2 needs first derivatives; abs32 has them,
        // but n = 3 would need a second derivative it does not declare
        let f = lookup("abs32").unwrap();
        assert!(composite_rule(&f, 2, -1.0, 1.0, 4).is_ok());
        assert!(matches!(
            composite_rule(&f, 3, -1.0, 1.0, 4),
            Err(Error::MissingDerivative { .. })
        ));
    }
}
