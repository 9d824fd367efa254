//! The two-point Hermite interpolant and its quadrature weights.
//!
//! Given `f` and its first `n-1` derivatives at both endpoints of `[a, b]`,
//! the interpolant `H_n` is the unique polynomial of degree at most `2n - 1`
//! matching all of that data. Integrating `H_n` over the interval gives a
//! quadrature rule whose weights have the closed form
//!
//! ```text
//! w_j^a = (b - a)^(j+1) * n * sum_{k=j}^{n-1} C(k, j) (n+k-j-1)! / (n+k+1)!
//! w_j^b = (-1)^j w_j^a
//! ```
//!
//! Weights are computed from that finite sum directly; integrating the
//! interpolant symbolically is kept as an independent test oracle.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::exact::{
    binomial, factorial, int, pow_scalar, rising_factorial, ExactScalar, Polynomial,
};
use crate::{Error, Result};

/// Values of `f` and its first `n-1` derivatives at both endpoints.
#[derive(Debug, Clone, PartialEq)]
pub struct EndpointData {
    a: ExactScalar,
    b: ExactScalar,
    derivs_at_a: Vec<ExactScalar>,
    derivs_at_b: Vec<ExactScalar>,
}

impl EndpointData {
    /// Requires `a != b` and two derivative lists of equal length `n >= 1`.
    pub fn new(
        a: ExactScalar,
        b: ExactScalar,
        derivs_at_a: Vec<ExactScalar>,
        derivs_at_b: Vec<ExactScalar>,
    ) -> Result<Self> {
        if a == b {
            return Err(Error::DegenerateInterval);
        }
        if derivs_at_a.is_empty() {
            return Err(Error::InvalidOrder("need at least one derivative value".into()));
        }
        if derivs_at_a.len() != derivs_at_b.len() {
            return Err(Error::DimensionMismatch {
                expected: derivs_at_a.len(),
                got: derivs_at_b.len(),
            });
        }
        Ok(EndpointData {
            a,
            b,
            derivs_at_a,
            derivs_at_b,
        })
    }

    /// Endpoint data sampled exactly from a polynomial: `p^(j)(a)`, `p^(j)(b)`
    /// for `j = 0..n-1`.
    pub fn from_polynomial(
        p: &Polynomial,
        a: &ExactScalar,
        b: &ExactScalar,
        n: u32,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidOrder("n must be at least 1".into()));
        }
        let mut da = Vec::with_capacity(n as usize);
        let mut db = Vec::with_capacity(n as usize);
        let mut q = p.clone();
        for _ in 0..n {
            da.push(q.eval(a));
            db.push(q.eval(b));
            q = q.derivative();
        }
        EndpointData::new(a.clone(), b.clone(), da, db)
    }

    /// Number of matched derivative orders `n`.
    pub fn order(&self) -> usize {
        self.derivs_at_a.len()
    }

    pub fn a(&self) -> &ExactScalar {
        &self.a
    }

    pub fn b(&self) -> &ExactScalar {
        &self.b
    }

    pub fn derivs_at_a(&self) -> &[ExactScalar] {
        &self.derivs_at_a
    }

    pub fn derivs_at_b(&self) -> &[ExactScalar] {
        &self.derivs_at_b
    }
}

/// Quadrature weights for a given `(n, a, b)`.
///
/// By construction `w_b[j] = (-1)^j w_a[j]`, and telescoping of the weight sum
/// gives `w_a[0] = (b - a) / 2` for every `n`.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightSet {
    n: u32,
    a: ExactScalar,
    b: ExactScalar,
    w_a: Vec<ExactScalar>,
    w_b: Vec<ExactScalar>,
}

impl WeightSet {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn a(&self) -> &ExactScalar {
        &self.a
    }

    pub fn b(&self) -> &ExactScalar {
        &self.b
    }

    /// Weights multiplying `f^(j)(a)`.
    pub fn w_a(&self) -> &[ExactScalar] {
        &self.w_a
    }

    /// Weights multiplying `f^(j)(b)`.
    pub fn w_b(&self) -> &[ExactScalar] {
        &self.w_b
    }
}

/// Exact quadrature weights from the closed-form sum.
pub fn hermite_weights(n: u32, a: &ExactScalar, b: &ExactScalar) -> Result<WeightSet> {
    if n == 0 {
        return Err(Error::InvalidOrder("n must be at least 1".into()));
    }
    if a == b {
        return Err(Error::DegenerateInterval);
    }
    let width = b - a;
    let mut w_a = Vec::with_capacity(n as usize);
    let mut w_b = Vec::with_capacity(n as usize);
    for j in 0..n {
        let mut sum = ExactScalar::zero();
        for k in j..n {
            let num = binomial(k, j)? * factorial(n + k - j - 1);
            let den = factorial(n + k + 1);
            sum += ExactScalar::new(num, den);
        }
        let wj = pow_scalar(&width, j as i32 + 1) * int(n as i64) * sum;
        let sign = if j % 2 == 0 { 1 } else { -1 };
        w_b.push(&wj * int(sign));
        w_a.push(wj);
    }
    Ok(WeightSet {
        n,
        a: a.clone(),
        b: b.clone(),
        w_a,
        w_b,
    })
}

/// The two-point Hermite interpolating polynomial for the given endpoint data.
///
/// `H_n(x) = (x-a)^n sum_k B_k (x-b)^k / k!  +  (x-b)^n sum_k A_k (x-a)^k / k!`
///
/// The coefficients are derivatives of `f(x) (x-b)^-n` at `a` (resp.
/// `f(x) (x-a)^-n` at `b`). The general Leibniz rule turns each into a finite
/// sum over the supplied endpoint derivatives, using
/// `d^m/dx^m (x-b)^-n = (-1)^m n (n+1) ... (n+m-1) (x-b)^(-n-m)`,
/// so the whole construction stays rational.
pub fn hermite_interpolant(data: &EndpointData) -> Polynomial {
    let n = data.order() as u32;
    let a = data.a();
    let b = data.b();
    let a_minus_b = a - b;
    let b_minus_a = b - a;

    let leibniz = |derivs: &[ExactScalar], base: &ExactScalar, k: u32| -> ExactScalar {
        let mut acc = ExactScalar::zero();
        for m in 0..=k {
            let sign = if m % 2 == 0 { 1 } else { -1 };
            let coeff = ExactScalar::from_integer(
                binomial(k, m).expect("m <= k") * rising_factorial(n, m) * BigInt::from(sign),
            );
            acc += coeff * &derivs[(k - m) as usize] * pow_scalar(base, -((n + m) as i32));
        }
        acc
    };

    // x - a and x - b as polynomials
    let x_minus_a = Polynomial::new(vec![-a.clone(), int(1)]);
    let x_minus_b = Polynomial::new(vec![-b.clone(), int(1)]);

    let mut sum_a = Polynomial::zero(); // sum of A_k (x-a)^k / k!
    let mut sum_b = Polynomial::zero(); // sum of B_k (x-b)^k / k!
    for k in 0..n {
        let a_k = leibniz(data.derivs_at_a(), &a_minus_b, k);
        let b_k = leibniz(data.derivs_at_b(), &b_minus_a, k);
        let inv_kfact = ExactScalar::new(BigInt::from(1), factorial(k));
        sum_a = sum_a.add(&x_minus_a.pow(k).scale(&(a_k * &inv_kfact)));
        sum_b = sum_b.add(&x_minus_b.pow(k).scale(&(b_k * inv_kfact)));
    }

    x_minus_a
        .pow(n)
        .mul(&sum_b)
        .add(&x_minus_b.pow(n).mul(&sum_a))
}

/// Apply the rule: `sum_j w_a[j] f^(j)(a) + w_b[j] f^(j)(b)`, exact.
pub fn apply_rule(w: &WeightSet, data: &EndpointData) -> Result<ExactScalar> {
    if w.n as usize != data.order() {
        return Err(Error::DimensionMismatch {
            expected: w.n as usize,
            got: data.order(),
        });
    }
    if w.a() != data.a() || w.b() != data.b() {
        return Err(Error::DegenerateInterval);
    }
    let mut acc = ExactScalar::zero();
    for j in 0..data.order() {
        acc += &w.w_a[j] * &data.derivs_at_a()[j] + &w.w_b[j] * &data.derivs_at_b()[j];
    }
    Ok(acc)
}
