//! Dense univariate polynomials over exact rationals.
//!
//! Degrees stay small here (at most `2n - 1` for the interpolant, `n` for the
//! kernel), so a dense coefficient vector is the right representation. The
//! zero polynomial is the empty vector and its degree is `None`.

use num_traits::Zero;

use super::scalar::{int, to_f64, ExactScalar};

/// Dense polynomial: `coeffs[i]` is the coefficient of `x^i`, and the trailing
/// coefficient is nonzero unless the polynomial is zero (empty vector).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<ExactScalar>,
}

impl Polynomial {
    /// Build from coefficients (low degree first), trimming trailing zeros.
    pub fn new(mut coeffs: Vec<ExactScalar>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: ExactScalar) -> Self {
        Polynomial::new(vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(c: ExactScalar, k: usize) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![ExactScalar::zero(); k + 1];
        coeffs[k] = c;
        Polynomial { coeffs }
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Polynomial::monomial(int(1), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial, otherwise the index of the leading term.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^i` (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> ExactScalar {
        self.coeffs.get(i).cloned().unwrap_or_else(ExactScalar::zero)
    }

    pub fn coeffs(&self) -> &[ExactScalar] {
        &self.coeffs
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) + other.coeff(i)).collect();
        Polynomial::new(coeffs)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) - other.coeff(i)).collect();
        Polynomial::new(coeffs)
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn scale(&self, s: &ExactScalar) -> Polynomial {
        if s.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Convolution product. Over exact rationals the leading coefficients
    /// cannot cancel, so `deg(p*q) = deg(p) + deg(q)`.
    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs =
            vec![ExactScalar::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial { coeffs }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::constant(int(1));
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn derivative(&self) -> Polynomial {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * int(i as i64))
            .collect();
        Polynomial { coeffs }
    }

    /// `k`-th derivative.
    pub fn derivative_n(&self, k: u32) -> Polynomial {
        let mut p = self.clone();
        for _ in 0..k {
            p = p.derivative();
        }
        p
    }

    /// Antiderivative with zero constant term.
    pub fn antiderivative(&self) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(ExactScalar::zero());
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c / int(i as i64 + 1));
        }
        Polynomial { coeffs }
    }

    /// Horner evaluation, exact.
    pub fn eval(&self, x: &ExactScalar) -> ExactScalar {
        let mut acc = ExactScalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Horner evaluation after rounding each coefficient once to `f64`.
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + to_f64(c))
    }

    /// Coefficients rounded to `f64`, low degree first.
    pub fn coeffs_f64(&self) -> Vec<f64> {
        self.coeffs.iter().map(to_f64).collect()
    }

    /// Exact value of the definite integral over `[a, b]`.
    pub fn definite_integral(&self, a: &ExactScalar, b: &ExactScalar) -> ExactScalar {
        let anti = self.antiderivative();
        anti.eval(b) - anti.eval(a)
    }

    /// Exact composition with an affine map: returns `q(x) = p(alpha x + beta)`.
    pub fn compose_affine(&self, alpha: &ExactScalar, beta: &ExactScalar) -> Polynomial {
        let inner = Polynomial::new(vec![beta.clone(), alpha.clone()]);
        let mut acc = Polynomial::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&inner).add(&Polynomial::constant(c.clone()));
        }
        acc
    }
}

impl std::fmt::Display for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn poly(cs: &[i64]) -> Polynomial {
        Polynomial::new(cs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn zero_polynomial_has_no_degree() {
        assert_eq!(Polynomial::zero().degree(), None);
        assert_eq!(poly(&[0, 0, 0]).degree(), None);
        assert_eq!(poly(&[1]).degree(), Some(0));
    }

    #[test]
    fn derivative_of_x_squared() {
        assert_eq!(poly(&[0, 0, 1]).derivative(), poly(&[0, 2]));
    }

    #[test]
    fn product_of_conjugates() {
        // (x - 1)(x + 1) = x^2 - 1
        assert_eq!(poly(&[-1, 1]).mul(&poly(&[1, 1])), poly(&[-1, 0, 1]));
    }

    #[test]
    fn antiderivative_of_quadratic() {
        // 3x^2 -> x^3, constant term zero
        assert_eq!(poly(&[0, 0, 3]).antiderivative(), poly(&[0, 0, 0, 1]));
    }

    #[test]
    fn definite_integrals() {
        // x^2 over [0, 1] = 1/3
        assert_eq!(
            poly(&[0, 0, 1]).definite_integral(&int(0), &int(1)),
            rat(1, 3)
        );
        // degenerate interval
        assert_eq!(
            poly(&[4, 2, 7]).definite_integral(&rat(2, 3), &rat(2, 3)),
            int(0)
        );
        // odd function over symmetric interval: x^3 - x over [-1, 1]
        assert_eq!(
            poly(&[0, -1, 0, 1]).definite_integral(&int(-1), &int(1)),
            int(0)
        );
    }

    #[test]
    fn affine_composition() {
        // x^2 is even: p(-x) = p(x)
        assert_eq!(
            poly(&[0, 0, 1]).compose_affine(&int(-1), &int(0)),
            poly(&[0, 0, 1])
        );
        // x under x -> -x + 1 gives 1 - x
        assert_eq!(poly(&[0, 1]).compose_affine(&int(-1), &int(1)), poly(&[1, -1]));
        // (x^2 + x) under x -> 2x + 3 gives 4x^2 + 14x + 12, expanded by hand
        assert_eq!(
            poly(&[0, 1, 1]).compose_affine(&int(2), &int(3)),
            poly(&[12, 14, 4])
        );
    }

    #[test]
    fn eval_matches_f64_eval_on_rationals() {
        let p = Polynomial::new(vec![rat(1, 2), rat(-3, 4), int(2)]);
        let exact = p.eval(&rat(1, 4));
        let float = p.eval_f64(0.25);
        assert!((to_f64(&exact) - float).abs() < 1e-15);
    }
}
