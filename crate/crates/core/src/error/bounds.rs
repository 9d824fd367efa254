//! Sup-norm and midrange error bounds.
//!
//! The classical bound is `sup|f^(n)| * int|K_n|`. Because the kernel
//! integrates to zero against constants, any constant can be subtracted from
//! `f^(n)` for free; subtracting the midrange `(inf + sup)/2` is optimal for
//! the sup norm and gives the improved bound `(sup - inf)/2 * int|K_n|`,
//! never worse than the classical one. The same shift tightens the L2-norm
//! (Cauchy-Schwarz) bound.
//!
//! The kernel-orthogonality property that justifies the shift holds for every
//! order, so the midrange trick is applied for general `n` here, not just the
//! corrected-trapezoid case.

use crate::error::norms::kernel_norms;
use crate::error::quad::integrate_split;
use crate::exact::from_f64_exact;
use crate::functions::FunctionSpec;
use crate::params::{build_kernel, solve_theta};
use crate::{Error, Result};

/// Default number of samples when estimating derivative extrema.
pub const DEFAULT_EXTREMUM_GRID: usize = 4097;

/// Default absolute tolerance for numeric integrals.
pub const DEFAULT_TOL: f64 = 1e-12;

/// Golden-section minimisation of `g` on `[lo, hi]`; returns the smallest
/// value seen (endpoints included).
fn golden_min(g: &dyn Fn(f64) -> Result<f64>, mut lo: f64, mut hi: f64) -> Result<f64> {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut best = g(lo)?.min(g(hi)?);
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = g(x1)?;
    let mut f2 = g(x2)?;
    for _ in 0..80 {
        if hi - lo < 1e-13 * (1.0 + lo.abs() + hi.abs()) {
            break;
        }
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = g(x1)?;
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = g(x2)?;
        }
        best = best.min(f1.min(f2));
    }
    Ok(best)
}

/// Estimate `(inf, sup)` of `g` over `[a, b]`: dense sampling on `grid`
/// points followed by golden-section refinement around the extreme samples.
pub fn extrema_estimate(
    g: &dyn Fn(f64) -> Result<f64>,
    a: f64,
    b: f64,
    grid: usize,
) -> Result<(f64, f64)> {
    if grid < 2 {
        return Err(Error::InvalidOrder("extremum grid needs >= 2 points".into()));
    }
    let (a, b) = if a <= b { (a, b) } else { (b, a) };
    let step = (b - a) / (grid - 1) as f64;
    let mut min_val = f64::INFINITY;
    let mut max_val = f64::NEG_INFINITY;
    let mut min_idx = 0;
    let mut max_idx = 0;
    for i in 0..grid {
        let x = if i + 1 == grid { b } else { a + i as f64 * step };
        let y = g(x)?;
        if !y.is_finite() {
            return Err(Error::NonFinite {
                what: "extremum sample".into(),
                x,
            });
        }
        if y < min_val {
            min_val = y;
            min_idx = i;
        }
        if y > max_val {
            max_val = y;
            max_idx = i;
        }
    }

    let bracket = |i: usize| -> (f64, f64) {
        let lo = if i == 0 { a } else { a + (i - 1) as f64 * step };
        let hi = if i + 1 >= grid { b } else { a + (i + 1) as f64 * step };
        (lo.max(a), hi.min(b))
    };
    let (mlo, mhi) = bracket(min_idx);
    min_val = min_val.min(golden_min(g, mlo, mhi)?);
    let (xlo, xhi) = bracket(max_idx);
    let neg = |x: f64| g(x).map(|y| -y);
    max_val = max_val.max(-golden_min(&neg, xlo, xhi)?);
    Ok((min_val, max_val))
}

/// Midrange `(inf + sup)/2` of `g` over `[a, b]`.
pub fn midrange(g: &dyn Fn(f64) -> Result<f64>, a: f64, b: f64, grid: usize) -> Result<f64> {
    let (lo, hi) = extrema_estimate(g, a, b, grid)?;
    Ok(0.5 * (lo + hi))
}

/// `(inf, sup)` of `f^(n)` over `[a, b]`: declared analytic extrema when the
/// function ships them, dense sampling otherwise.
pub fn derivative_extrema(f: &FunctionSpec, n: u32, a: f64, b: f64) -> Result<(f64, f64)> {
    if !f.has_order(n) {
        return Err(Error::MissingDerivative {
            name: f.name().to_string(),
            order: n,
        });
    }
    if let Some(pair) = f.analytic_extrema(n, a, b) {
        return Ok(pair);
    }
    let g = |x: f64| f.derivative_value(n, x);
    extrema_estimate(&g, a, b, DEFAULT_EXTREMUM_GRID)
}

/// Classical and midrange-improved sup-norm bounds from the derivative range
/// and the kernel L1 norm.
pub fn bounds_from_range(inf: f64, sup: f64, l1: f64) -> (f64, f64) {
    let original = inf.abs().max(sup.abs()) * l1;
    let improved = 0.5 * (sup - inf) * l1;
    (original, improved)
}

/// `(bound_original, bound_improved)` for `f` with the order-`n` rule on
/// `[a, b]`.
pub fn bounds(f: &FunctionSpec, n: u32, a: f64, b: f64) -> Result<(f64, f64)> {
    let (inf, sup) = derivative_extrema(f, n, a, b)?;
    let kernel = build_kernel(&solve_theta(n, &from_f64_exact(a)?, &from_f64_exact(b)?)?);
    let norms = kernel_norms(&kernel, a, b)?;
    Ok(bounds_from_range(inf, sup, norms.l1))
}

/// L2 bound `||f^(n) - midrange||_2 * ||K_n||_2`.
pub fn bound_l2(f: &FunctionSpec, n: u32, a: f64, b: f64) -> Result<f64> {
    let (inf, sup) = derivative_extrema(f, n, a, b)?;
    let m = 0.5 * (inf + sup);
    let kernel = build_kernel(&solve_theta(n, &from_f64_exact(a)?, &from_f64_exact(b)?)?);
    let norms = kernel_norms(&kernel, a, b)?;
    let shifted_sq = |x: f64| {
        let d = f.derivative_value(n, x)? - m;
        Ok(d * d)
    };
    let integral = integrate_split(&shifted_sq, a, b, &f.kinks_in(a, b), DEFAULT_TOL)?;
    Ok(integral.value.max(0.0).sqrt() * norms.l2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functions::lookup;

    fn wrap(f: impl Fn(f64) -> f64) -> impl Fn(f64) -> Result<f64> {
        move |x| Ok(f(x))
    }

    #[test]
    fn midrange_of_a_constant() {
        let g = wrap(|_| 7.0);
        assert_eq!(midrange(&g, 0.0, 1.0, 64).unwrap(), 7.0);
    }

    #[test]
    fn midrange_of_identity() {
        let g = wrap(|x| x);
        assert!((midrange(&g, 0.0, 1.0, 101).unwrap() - 0.5).abs() < 1e-12);
    }

    #[test]
    fn midrange_of_cubic_second_derivative() {
        let g = wrap(|x| 6.0 * x);
        assert!((midrange(&g, 0.0, 1.0, 101).unwrap() - 3.0).abs() < 1e-12);
    }

    #[test]
    fn interior_extremum_is_refined() {
        // min of (x - 0.3)^2 is 0 at an off-grid point
        let g = wrap(|x| (x - 0.3) * (x - 0.3));
        let (lo, hi) = extrema_estimate(&g, 0.0, 1.0, 33).unwrap();
        assert!(lo.abs() < 1e-14);
        assert!((hi - 0.49).abs() < 1e-12);
    }

    #[test]
    fn grid_must_have_two_points() {
        let g = wrap(|x| x);
        assert!(extrema_estimate(&g, 0.0, 1.0, 1).is_err());
    }

    #[test]
    fn cubic_bounds_on_unit_interval() {
        let f = lookup("cubic").unwrap();
        let (original, improved) = bounds(&f, 2, 0.0, 1.0).unwrap();
        let l1 = 3f64.sqrt() / 54.0;
        assert!((original - 6.0 * l1).abs() < 1e-13);
        assert!((improved - 3.0 * l1).abs() < 1e-13);
        assert_eq!(improved / original, 0.5);
    }

    fn square() -> FunctionSpec {
        FunctionSpec::new(
            "x^2",
            "square",
            (f64::NEG_INFINITY, f64::INFINITY),
            None,
            vec![],
            Box::new(|k, x| match k {
                0 => x * x,
                1 => 2.0 * x,
                2 => 2.0,
                _ => 0.0,
            }),
            None,
        )
    }

    #[test]
    fn constant_second_derivative_gives_zero_improved_bound() {
        // f = x^2 has f'' = 2: the improved bound collapses to zero
        let (original, improved) = bounds(&square(), 2, 0.0, 1.0).unwrap();
        assert!(original > 0.0);
        assert!(improved.abs() < 1e-12 * original);
    }

    #[test]
    fn l2_bound_for_cubic() {
        // ||6x - 3||_2 over [0,1] is sqrt(3)
        let f = lookup("cubic").unwrap();
        let l2 = kernel_norms(
            &build_kernel(&solve_theta(2, &crate::exact::int(0), &crate::exact::int(1)).unwrap()),
            0.0,
            1.0,
        )
        .unwrap()
        .l2;
        let got = bound_l2(&f, 2, 0.0, 1.0).unwrap();
        assert!((got - 3f64.sqrt() * l2).abs() < 1e-10);
    }

    #[test]
    fn l2_bound_vanishes_for_constant_derivative() {
        assert!(bound_l2(&square(), 2, 0.0, 1.0).unwrap() < 1e-10);
    }
}
