//! A fully assembled quadrature rule for one `(n, a, b)`.

use crate::exact::{ExactScalar, Polynomial};
use crate::hermite::{apply_rule, hermite_weights, EndpointData, WeightSet};
use crate::params::{build_kernel, solve_theta, Theta};
use crate::Result;

/// Weights, matched parameters, and error kernel for a given order and
/// interval. The central artifact of the crate: everything in it is exact.
#[derive(Debug, Clone, PartialEq)]
pub struct HermiteRule {
    n: u32,
    a: ExactScalar,
    b: ExactScalar,
    weights: WeightSet,
    theta: Theta,
    kernel: Polynomial,
}

impl HermiteRule {
    pub fn new(n: u32, a: &ExactScalar, b: &ExactScalar) -> Result<Self> {
        let weights = hermite_weights(n, a, b)?;
        let theta = solve_theta(n, a, b)?;
        let kernel = build_kernel(&theta);
        Ok(HermiteRule {
            n,
            a: a.clone(),
            b: b.clone(),
            weights,
            theta,
            kernel,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn a(&self) -> &ExactScalar {
        &self.a
    }

    pub fn b(&self) -> &ExactScalar {
        &self.b
    }

    pub fn weights(&self) -> &WeightSet {
        &self.weights
    }

    pub fn theta(&self) -> &Theta {
        &self.theta
    }

    /// The kernel polynomial `P(x, theta)`.
    pub fn kernel(&self) -> &Polynomial {
        &self.kernel
    }

    /// The signed kernel `K_n = (-1)^n P`, the polynomial that multiplies
    /// `f^(n)` in the exact error integral.
    pub fn signed_kernel(&self) -> Polynomial {
        if self.n % 2 == 0 {
            self.kernel.clone()
        } else {
            self.kernel.neg()
        }
    }

    /// Apply the rule to exact endpoint data.
    pub fn apply(&self, data: &EndpointData) -> Result<ExactScalar> {
        apply_rule(&self.weights, data)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    #[test]
    fn bundle_is_consistent() {
        let a = int(0);
        let b = int(1);
        let rule = HermiteRule::new(2, &a, &b).unwrap();
        assert_eq!(rule.weights().w_a(), &[rat(1, 2), rat(1, 12)]);
        assert_eq!(rule.theta().deltas(), &[rat(-1, 24)]);
        assert_eq!(rule.kernel().degree(), Some(2));
        // n even: signed kernel is the kernel itself
        assert_eq!(&rule.signed_kernel(), rule.kernel());

        let rule1 = HermiteRule::new(1, &a, &b).unwrap();
        assert_eq!(rule1.signed_kernel(), rule1.kernel().neg());
    }
}
