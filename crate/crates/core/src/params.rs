//! Free parameters of the repeated integration-by-parts identity and the
//! error kernel they induce.
//!
//! Integrating `int_a^b f` by parts `n` times leaves the identity
//!
//! ```text
//! int_a^b f = sum_j f^(j)(b) alpha_j^b + sum_j f^(j)(a) alpha_j^a
//!           + int_a^b (-1)^n f^(n)(x) P(x, theta) dx
//! ```
//!
//! valid for *arbitrary* parameters `theta = {c, delta_0, ..., delta_{n-2}}`,
//! where `P(x, theta) = (x+c)^n / n! + sum_i delta_i x^i / i!`. Choosing
//! `theta` so that the boundary coefficients match the Hermite quadrature
//! weights turns the integral term into an exact error representation that
//! needs only the `n`-th derivative of `f`.
//!
//! The matching system is triangular: the `j = 0` equation pins
//! `c = -(a+b)/2`, and each further equation is linear in one new delta,
//!
//! ```text
//! delta_{n-1-j} = (-1)^(j+1) w_j^a - (a+c)^(j+1)/(j+1)!
//!               - sum_{i=1}^{j-1} delta_{i+n-1-j} a^i / i!
//! ```
//!
//! Only the endpoint-`a` equations are ever solved; that the endpoint-`b`
//! equations then hold automatically is a theorem, and `alpha_coefficients`
//! exists so tests can verify it rather than assume it.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::exact::{factorial, int, pow_scalar, ExactScalar, Polynomial};
use crate::hermite::hermite_weights;
use crate::{Error, Result};

/// Free parameters `{c, delta_0, ..., delta_{n-2}}` for a given order `n`.
///
/// `deltas` is empty when `n = 1`. Arbitrary values are admitted — the
/// integration-by-parts identity holds for any of them; [`solve_theta`]
/// produces the matched set, for which `c = -(a+b)/2`.
#[derive(Debug, Clone, PartialEq)]
pub struct Theta {
    n: u32,
    c: ExactScalar,
    deltas: Vec<ExactScalar>,
}

impl Theta {
    /// Requires `deltas.len() == n - 1`.
    pub fn new(n: u32, c: ExactScalar, deltas: Vec<ExactScalar>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidOrder("n must be at least 1".into()));
        }
        if deltas.len() != n as usize - 1 {
            return Err(Error::DimensionMismatch {
                expected: n as usize - 1,
                got: deltas.len(),
            });
        }
        Ok(Theta { n, c, deltas })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn c(&self) -> &ExactScalar {
        &self.c
    }

    /// `deltas[i]` is `delta_i`.
    pub fn deltas(&self) -> &[ExactScalar] {
        &self.deltas
    }
}

/// Boundary coefficients of the integration-by-parts identity.
#[derive(Debug, Clone, PartialEq)]
pub struct AlphaSet {
    n: u32,
    alpha_a: Vec<ExactScalar>,
    alpha_b: Vec<ExactScalar>,
}

impl AlphaSet {
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Coefficients multiplying `f^(j)(a)`.
    pub fn alpha_a(&self) -> &[ExactScalar] {
        &self.alpha_a
    }

    /// Coefficients multiplying `f^(j)(b)`.
    pub fn alpha_b(&self) -> &[ExactScalar] {
        &self.alpha_b
    }
}

/// Solve the endpoint-`a` matching equations by back-substitution.
///
/// Step `j` of the recursion only uses deltas produced by earlier steps, so a
/// single forward pass over `j = 1..n-1` fills the whole vector. The empty
/// sum at `j = 1` contributes zero.
pub fn solve_theta(n: u32, a: &ExactScalar, b: &ExactScalar) -> Result<Theta> {
    if n == 0 {
        return Err(Error::InvalidOrder("n must be at least 1".into()));
    }
    if a == b {
        return Err(Error::DegenerateInterval);
    }
    let c = -(a + b) / int(2);
    let w = hermite_weights(n, a, b)?;
    let a_plus_c = a + &c;

    let mut deltas = vec![ExactScalar::zero(); n as usize - 1];
    for j in 1..n {
        let sign = if j % 2 == 0 { -1 } else { 1 }; // (-1)^(j+1)
        let mut value = &w.w_a()[j as usize] * int(sign)
            - pow_scalar(&a_plus_c, j as i32 + 1) / ExactScalar::from_integer(factorial(j + 1));
        for i in 1..j {
            let idx = (i + n - 1 - j) as usize;
            value -= &deltas[idx] * pow_scalar(a, i as i32)
                / ExactScalar::from_integer(factorial(i));
        }
        deltas[(n - 1 - j) as usize] = value;
    }
    Ok(Theta { n, c, deltas })
}

/// Which of the three closed-form deltas to evaluate.
///
/// The closed forms cover the top three delta indices; below `delta_{n-4}`
/// no simple expression is known and the recursion is the only route.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedFormDelta {
    /// `delta_{n-2} = -(b-a)^2 / (8(2n-1))`, valid for `n >= 2`.
    NMinus2,
    /// `delta_{n-3} = (a+b)(b-a)^2 / (16(2n-1))`, valid for `n >= 3`.
    NMinus3,
    /// `delta_{n-4} = (b-a)^2 ((b-a)^2 + (6-4n)(a+b)^2) / (128(2n-3)(2n-1))`,
    /// valid for `n >= 4`.
    NMinus4,
}

impl ClosedFormDelta {
    /// Offset below `n`: the formula targets `delta_{n - offset}`.
    pub fn offset(self) -> u32 {
        match self {
            ClosedFormDelta::NMinus2 => 2,
            ClosedFormDelta::NMinus3 => 3,
            ClosedFormDelta::NMinus4 => 4,
        }
    }
}

/// Evaluate one of the three closed-form deltas exactly.
pub fn closed_form_delta(
    n: u32,
    a: &ExactScalar,
    b: &ExactScalar,
    which: ClosedFormDelta,
) -> Result<ExactScalar> {
    if n < which.offset() {
        return Err(Error::IndexOutOfRange(format!(
            "closed form for delta_(n-{}) needs n >= {}, got n = {n}",
            which.offset(),
            which.offset()
        )));
    }
    let width2 = pow_scalar(&(b - a), 2);
    let sum = a + b;
    let two_n = int(2 * n as i64);
    Ok(match which {
        ClosedFormDelta::NMinus2 => -&width2 / (int(8) * (&two_n - int(1))),
        ClosedFormDelta::NMinus3 => &sum * &width2 / (int(16) * (&two_n - int(1))),
        ClosedFormDelta::NMinus4 => {
            let numer = &width2 * (&width2 + (int(6) - int(4 * n as i64)) * pow_scalar(&sum, 2));
            numer / (int(128) * (&two_n - int(3)) * (&two_n - int(1)))
        }
    })
}

/// Boundary coefficients for the given parameters and interval:
///
/// ```text
/// alpha_j^b = (-1)^j     [ (b+c)^(j+1)/(j+1)! + sum_{i=0}^{j-1} delta_{i+n-1-j} b^i / i! ]
/// alpha_j^a = (-1)^(j+1) [ (a+c)^(j+1)/(j+1)! + sum_{i=0}^{j-1} delta_{i+n-1-j} a^i / i! ]
/// ```
pub fn alpha_coefficients(theta: &Theta, a: &ExactScalar, b: &ExactScalar) -> AlphaSet {
    let n = theta.n;
    let bracket = |point: &ExactScalar, j: u32| -> ExactScalar {
        let mut acc = pow_scalar(&(point + &theta.c), j as i32 + 1)
            / ExactScalar::from_integer(factorial(j + 1));
        for i in 0..j {
            let idx = (i + n - 1 - j) as usize;
            acc += &theta.deltas[idx] * pow_scalar(point, i as i32)
                / ExactScalar::from_integer(factorial(i));
        }
        acc
    };
    let mut alpha_a = Vec::with_capacity(n as usize);
    let mut alpha_b = Vec::with_capacity(n as usize);
    for j in 0..n {
        let sign_b = if j % 2 == 0 { 1 } else { -1 };
        alpha_b.push(bracket(b, j) * int(sign_b));
        alpha_a.push(bracket(a, j) * int(-sign_b));
    }
    AlphaSet { n, alpha_a, alpha_b }
}

/// The kernel polynomial `P(x, theta) = (x+c)^n / n! + sum_i delta_i x^i / i!`.
///
/// Degree is exactly `n` with leading coefficient `1/n!`. The signed kernel
/// `K_n = (-1)^n P` differs only when `n` is odd.
pub fn build_kernel(theta: &Theta) -> Polynomial {
    let n = theta.n;
    let shift = Polynomial::new(vec![theta.c.clone(), int(1)]); // x + c
    let mut p = shift
        .pow(n)
        .scale(&ExactScalar::new(BigInt::from(1), factorial(n)));
    for (i, delta) in theta.deltas.iter().enumerate() {
        let coeff = delta / ExactScalar::from_integer(factorial(i as u32));
        p = p.add(&Polynomial::monomial(coeff, i));
    }
    p
}

/// True iff `int_a^b x^m P(x) dx == 0` exactly for every `m = 0..n-1`.
pub fn check_orthogonality(p: &Polynomial, n: u32, a: &ExactScalar, b: &ExactScalar) -> bool {
    (0..n).all(|m| {
        Polynomial::monomial(int(1), m as usize)
            .mul(p)
            .definite_integral(a, b)
            .is_zero()
    })
}

/// True iff `P(a+b-x) == (-1)^n P(x)` coefficient-wise.
pub fn check_symmetry(p: &Polynomial, n: u32, a: &ExactScalar, b: &ExactScalar) -> bool {
    let reflected = p.compose_affine(&int(-1), &(a + b));
    let expected = if n % 2 == 0 { p.clone() } else { p.neg() };
    reflected == expected
}

/// Check the full integration-by-parts identity for an exact polynomial `f`.
///
/// Both sides are evaluated exactly; the identity must hold for *any*
/// parameter values, solved or not.
pub fn verify_ribp_identity(
    theta: &Theta,
    f: &Polynomial,
    a: &ExactScalar,
    b: &ExactScalar,
) -> bool {
    let n = theta.n;
    let alphas = alpha_coefficients(theta, a, b);
    let kernel = build_kernel(theta);

    let lhs = f.definite_integral(a, b);

    let mut rhs = ExactScalar::zero();
    let mut df = f.clone();
    for j in 0..n as usize {
        rhs += df.eval(b) * &alphas.alpha_b[j] + df.eval(a) * &alphas.alpha_a[j];
        df = df.derivative();
    }
    // df is now f^(n)
    let sign = if n % 2 == 0 { 1 } else { -1 };
    rhs += df.mul(&kernel).definite_integral(a, b) * int(sign);

    lhs == rhs
}
