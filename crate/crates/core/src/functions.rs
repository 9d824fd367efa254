//! Registry of test integrands with hand-coded analytic derivatives.
//!
//! Derivatives are explicit closures rather than automatic differentiation so
//! they stay independent of everything they are used to test. Each entry
//! declares an open domain, how many derivative orders it provides (`None`
//! means all orders), and any interior points where its top derivative is
//! not smooth.
//!
//! The limited-smoothness integrand `x^(3/2)` from the corpus is unusable as
//! written for negative arguments, so two readings are shipped: `abs32` is the
//! even extension `|x|^(3/2)` and `x32` is the zero extension
//! `max(x, 0)^(3/2)`. Both have one bounded derivative and a second derivative
//! that blows up at the origin.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::{Error, Result};

/// Points this close to a declared kink are rejected by derivative
/// validation; finite differences straddling a kink are meaningless.
pub const KINK_MARGIN: f64 = 1e-3;

/// Relative tolerance for finite-difference validation of declared
/// derivatives.
pub const VALIDATION_RTOL: f64 = 1e-6;

/// Evaluates derivative order `k` (0 = the function itself) at a point.
pub type DerivFn = Box<dyn Fn(u32, f64) -> f64 + Send + Sync>;
/// Analytic `(inf, sup)` of a derivative order over an interval, when known.
pub type ExtremaFn = Box<dyn Fn(u32, f64, f64) -> Option<(f64, f64)> + Send + Sync>;

/// A test integrand: evaluation, analytic derivatives up to a declared order,
/// a validity domain, and smoothness metadata.
pub struct FunctionSpec {
    name: &'static str,
    alias: &'static str,
    domain: (f64, f64),
    max_order: Option<u32>,
    kinks: Vec<f64>,
    deriv: DerivFn,
    extrema: Option<ExtremaFn>,
}

impl FunctionSpec {
    /// Define an integrand. `deriv(0, x)` must evaluate the function itself,
    /// `deriv(k, x)` its `k`-th derivative for `k` up to `max_order` (any
    /// order when `None`).
    pub fn new(
        name: &'static str,
        alias: &'static str,
        domain: (f64, f64),
        max_order: Option<u32>,
        kinks: Vec<f64>,
        deriv: DerivFn,
        extrema: Option<ExtremaFn>,
    ) -> Self {
        FunctionSpec {
            name,
            alias,
            domain,
            max_order,
            kinks,
            deriv,
            extrema,
        }
    }

    /// Display name, e.g. `"e^x"`.
    pub fn name(&self) -> &'static str {
        self.name
    }

    /// ASCII identifier accepted by the CLI, e.g. `"exp"`.
    pub fn alias(&self) -> &'static str {
        self.alias
    }

    /// Open interval on which evaluation is defined.
    pub fn domain(&self) -> (f64, f64) {
        self.domain
    }

    /// Highest derivative order provided; `None` means every order.
    pub fn max_smooth_order(&self) -> Option<u32> {
        self.max_order
    }

    /// Interior points where the top derivative loses smoothness.
    pub fn kinks(&self) -> &[f64] {
        &self.kinks
    }

    /// Kinks strictly inside `(a, b)`, ascending.
    pub fn kinks_in(&self, a: f64, b: f64) -> Vec<f64> {
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        let mut ks: Vec<f64> = self
            .kinks
            .iter()
            .copied()
            .filter(|&k| k > lo && k < hi)
            .collect();
        ks.sort_by(|x, y| x.partial_cmp(y).unwrap());
        ks
    }

    pub fn has_order(&self, order: u32) -> bool {
        self.max_order.is_none_or(|d| order <= d)
    }

    fn check_domain(&self, x: f64) -> Result<()> {
        if x > self.domain.0 && x < self.domain.1 {
            Ok(())
        } else {
            Err(Error::Domain {
                name: self.name.to_string(),
                x,
            })
        }
    }

    /// `f(x)`, guarded by the domain.
    pub fn value(&self, x: f64) -> Result<f64> {
        self.derivative_value(0, x)
    }

    /// `f^(order)(x)`, guarded by domain, declared order, and finiteness.
    pub fn derivative_value(&self, order: u32, x: f64) -> Result<f64> {
        if !self.has_order(order) {
            return Err(Error::MissingDerivative {
                name: self.name.to_string(),
                order,
            });
        }
        self.check_domain(x)?;
        let y = (self.deriv)(order, x);
        if y.is_finite() {
            Ok(y)
        } else {
            Err(Error::NonFinite {
                what: format!("{}^({})", self.name, order),
                x,
            })
        }
    }

    /// Analytic `(inf, sup)` of `f^(order)` over `[a, b]`, when declared.
    pub fn analytic_extrema(&self, order: u32, a: f64, b: f64) -> Option<(f64, f64)> {
        self.extrema.as_ref().and_then(|g| g(order, a, b))
    }
}

impl std::fmt::Debug for FunctionSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FunctionSpec")
            .field("name", &self.name)
            .field("alias", &self.alias)
            .field("domain", &self.domain)
            .field("max_order", &self.max_order)
            .field("kinks", &self.kinks)
            .finish()
    }
}

/// Margin keeping `log(x+1)` away from its singularity at `x = -1`.
const LOG_EPS: f64 = 1e-9;

fn f64_factorial(k: u32) -> f64 {
    (1..=k).fold(1.0, |acc, i| acc * i as f64)
}

fn cubic() -> FunctionSpec {
    FunctionSpec {
        name: "x^3",
        alias: "cubic",
        domain: (f64::NEG_INFINITY, f64::INFINITY),
        max_order: None,
        kinks: vec![],
        deriv: Box::new(|k, x| match k {
            0 => x * x * x,
            1 => 3.0 * x * x,
            2 => 6.0 * x,
            3 => 6.0,
            _ => 0.0,
        }),
        extrema: Some(Box::new(|k, a, b| {
            Some(match k {
                0 => (a * a * a, b * b * b),
                1 => {
                    let ends = (3.0 * a * a).max(3.0 * b * b);
                    if a < 0.0 && b > 0.0 {
                        (0.0, ends)
                    } else {
                        ((3.0 * a * a).min(3.0 * b * b), ends)
                    }
                }
                2 => (6.0 * a, 6.0 * b),
                3 => (6.0, 6.0),
                _ => (0.0, 0.0),
            })
        })),
    }
}

fn exp() -> FunctionSpec {
    FunctionSpec {
        name: "e^x",
        alias: "exp",
        domain: (f64::NEG_INFINITY, f64::INFINITY),
        max_order: None,
        kinks: vec![],
        deriv: Box::new(|_, x| x.exp()),
        extrema: Some(Box::new(|_, a, b| Some((a.exp(), b.exp())))),
    }
}

fn sin2pi() -> FunctionSpec {
    FunctionSpec {
        name: "sin(2*pi*x)",
        alias: "sin2pi",
        domain: (f64::NEG_INFINITY, f64::INFINITY),
        max_order: None,
        kinks: vec![],
        // d^k/dx^k sin(wx) = w^k sin(wx + k pi/2)
        deriv: Box::new(|k, x| {
            let w = 2.0 * PI;
            w.powi(k as i32) * (w * x + k as f64 * FRAC_PI_2).sin()
        }),
        extrema: None,
    }
}

fn log1p() -> FunctionSpec {
    FunctionSpec {
        name: "log(x+1)",
        alias: "log1p",
        domain: (-1.0 + LOG_EPS, f64::INFINITY),
        max_order: None,
        kinks: vec![],
        // d^k/dx^k log(1+x) = (-1)^(k-1) (k-1)! / (1+x)^k
        deriv: Box::new(|k, x| {
            if k == 0 {
                x.ln_1p()
            } else {
                let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
                sign * f64_factorial(k - 1) / (1.0 + x).powi(k as i32)
            }
        }),
        // every derivative is monotone on (-1, inf)
        extrema: Some(Box::new(|k, a, b| {
            let g = |x: f64| -> f64 {
                if k == 0 {
                    x.ln_1p()
                } else {
                    let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
                    sign * f64_factorial(k - 1) / (1.0 + x).powi(k as i32)
                }
            };
            let (ga, gb) = (g(a), g(b));
            Some((ga.min(gb), ga.max(gb)))
        })),
    }
}

fn quartic() -> FunctionSpec {
    FunctionSpec {
        name: "x^4-2x^3+x^2",
        alias: "quartic",
        domain: (f64::NEG_INFINITY, f64::INFINITY),
        max_order: None,
        kinks: vec![],
        deriv: Box::new(|k, x| match k {
            0 => ((x - 2.0) * x + 1.0) * x * x,
            1 => (4.0 * x - 6.0) * x * x + 2.0 * x,
            2 => (12.0 * x - 12.0) * x + 2.0,
            3 => 24.0 * x - 12.0,
            4 => 24.0,
            _ => 0.0,
        }),
        extrema: None,
    }
}

fn abs32() -> FunctionSpec {
    FunctionSpec {
        name: "|x|^(3/2)",
        alias: "abs32",
        domain: (f64::NEG_INFINITY, f64::INFINITY),
        max_order: Some(1),
        kinks: vec![0.0],
        deriv: Box::new(|k, x| match k {
            0 => x.abs().powf(1.5),
            // odd extension of 1.5 sqrt(x); zero at the origin
            _ => {
                if x >= 0.0 {
                    1.5 * x.sqrt()
                } else {
                    -1.5 * (-x).sqrt()
                }
            }
        }),
        extrema: None,
    }
}

fn x32() -> FunctionSpec {
    FunctionSpec {
        name: "x^(3/2)",
        alias: "x32",
        domain: (f64::NEG_INFINITY, f64::INFINITY),
        max_order: Some(1),
        kinks: vec![0.0],
        // zero extension: max(x, 0)^(3/2), still C^1 across the origin
        deriv: Box::new(|k, x| {
            let xp = x.max(0.0);
            match k {
                0 => xp.powf(1.5),
                _ => 1.5 * xp.sqrt(),
            }
        }),
        extrema: None,
    }
}

/// All registered integrands. The first five are the bound-comparison corpus;
/// the last two are the limited-smoothness entries.
pub fn registry() -> Vec<FunctionSpec> {
    vec![cubic(), exp(), sin2pi(), log1p(), quartic(), abs32(), x32()]
}

/// The five smooth integrands used for the bound-comparison figure.
pub fn figure_corpus() -> Vec<FunctionSpec> {
    vec![cubic(), exp(), sin2pi(), log1p(), quartic()]
}

/// Find a registered integrand by display name or ASCII alias.
pub fn lookup(ident: &str) -> Option<FunctionSpec> {
    registry()
        .into_iter()
        .find(|f| f.name == ident || f.alias == ident)
}

/// Worst observed point of a finite-difference derivative check.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivativeCheck {
    pub order: u32,
    pub points_checked: usize,
    pub worst_point: f64,
    pub worst_rel_err: f64,
}

/// Validate a declared derivative against central finite differences of the
/// previous order.
///
/// At each point the difference step is optimised over a geometric sweep and
/// the best agreement is kept; the check fails if even the best step leaves a
/// relative error above [`VALIDATION_RTOL`]. Points must be interior and at
/// least [`KINK_MARGIN`] away from every declared kink.
pub fn validate_derivatives(
    spec: &FunctionSpec,
    order: u32,
    points: &[f64],
) -> Result<DerivativeCheck> {
    if order == 0 {
        return Err(Error::InvalidOrder("validation needs order >= 1".into()));
    }
    if !spec.has_order(order) {
        return Err(Error::MissingDerivative {
            name: spec.name.to_string(),
            order,
        });
    }
    let mut worst_point = f64::NAN;
    let mut worst_rel = 0.0f64;
    for &x in points {
        for k in &spec.kinks {
            if (x - k).abs() < KINK_MARGIN {
                return Err(Error::Domain {
                    name: format!("{} (within kink margin)", spec.name),
                    x,
                });
            }
        }
        let analytic = spec.derivative_value(order, x)?;
        let scale = x.abs().max(1.0);
        let mut best = f64::INFINITY;
        for e in 3..=8 {
            let h = scale * 10f64.powi(-e);
            let hi = spec.derivative_value(order - 1, x + h)?;
            let lo = spec.derivative_value(order - 1, x - h)?;
            let fd = (hi - lo) / (2.0 * h);
            let rel = (fd - analytic).abs() / analytic.abs().max(1.0);
            best = best.min(rel);
        }
        if best > worst_rel {
            worst_rel = best;
            worst_point = x;
        }
    }
    if worst_rel > VALIDATION_RTOL {
        return Err(Error::DerivativeMismatch {
            name: spec.name.to_string(),
            order,
            point: worst_point,
            rel_err: worst_rel,
        });
    }
    Ok(DerivativeCheck {
        order,
        points_checked: points.len(),
        worst_point,
        worst_rel_err: worst_rel,
    })
}
