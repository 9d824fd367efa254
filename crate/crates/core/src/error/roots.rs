//! Exact real-root isolation for polynomials with rational coefficients.
//!
//! Roots of the error kernel delimit its sign changes, so the L1 norm of the
//! kernel can be assembled from exact antiderivative differences between
//! consecutive roots. Isolation runs entirely over rationals (Sturm chain +
//! bisection), and only the final refined root is rounded to `f64`.

use num_traits::{Signed, Zero};

use crate::exact::{from_f64_exact, int, to_f64, ExactScalar, Polynomial};
use crate::{Error, Result};

/// Relative width at which bisection stops; the midpoint then rounds to an
/// `f64` root with about 1e-14 relative accuracy.
const REFINE_REL: f64 = 1e-15;

fn leading(p: &Polynomial) -> ExactScalar {
    p.coeff(p.degree().expect("nonzero polynomial"))
}

/// Remainder of `p` divided by `d` (degrees are tiny; classic long division).
fn poly_rem(p: &Polynomial, d: &Polynomial) -> Polynomial {
    let dd = d.degree().expect("division by zero polynomial");
    let lead = leading(d);
    let mut r = p.clone();
    while let Some(rd) = r.degree() {
        if rd < dd {
            break;
        }
        let factor = r.coeff(rd) / &lead;
        r = r.sub(&d.mul(&Polynomial::monomial(factor, rd - dd)));
    }
    r
}

/// Quotient and remainder of `p / d`.
fn poly_divmod(p: &Polynomial, d: &Polynomial) -> (Polynomial, Polynomial) {
    let dd = d.degree().expect("division by zero polynomial");
    let lead = leading(d);
    let mut q = Polynomial::zero();
    let mut r = p.clone();
    while let Some(rd) = r.degree() {
        if rd < dd {
            break;
        }
        let term = Polynomial::monomial(r.coeff(rd) / &lead, rd - dd);
        r = r.sub(&d.mul(&term));
        q = q.add(&term);
    }
    (q, r)
}

fn poly_gcd(p: &Polynomial, q: &Polynomial) -> Polynomial {
    let mut a = p.clone();
    let mut b = q.clone();
    while !b.is_zero() {
        let r = poly_rem(&a, &b);
        a = b;
        b = r;
    }
    if a.is_zero() {
        a
    } else {
        let lead = leading(&a);
        a.scale(&lead.recip())
    }
}

/// `p` with repeated roots collapsed to simple ones: `p / gcd(p, p')`.
fn square_free_part(p: &Polynomial) -> Polynomial {
    let g = poly_gcd(p, &p.derivative());
    match g.degree() {
        None | Some(0) => p.clone(),
        _ => {
            let (q, r) = poly_divmod(p, &g);
            debug_assert!(r.is_zero());
            q
        }
    }
}

/// Sturm chain of a square-free polynomial. Elements are normalised by the
/// absolute value of their leading coefficient (a positive factor, so sign
/// variation counts are unchanged) to keep coefficients small.
fn sturm_chain(p: &Polynomial) -> Vec<Polynomial> {
    let normalize = |q: Polynomial| -> Polynomial {
        if q.is_zero() {
            q
        } else {
            let lead = leading(&q).abs();
            q.scale(&lead.recip())
        }
    };
    let mut chain = vec![normalize(p.clone())];
    let d = normalize(p.derivative());
    if d.is_zero() {
        return chain;
    }
    chain.push(d);
    loop {
        let len = chain.len();
        let r = poly_rem(&chain[len - 2], &chain[len - 1]);
        if r.is_zero() {
            return chain;
        }
        chain.push(normalize(r.neg()));
    }
}

/// Count sign changes of the chain at `x`, skipping exact zeros.
fn sign_variations(chain: &[Polynomial], x: &ExactScalar) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for p in chain {
        let v = p.eval(x);
        let s = if v.is_zero() {
            continue;
        } else if v.is_positive() {
            1i8
        } else {
            -1i8
        };
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Number of distinct roots of the (square-free) chain head in `(lo, hi]`.
fn roots_in(chain: &[Polynomial], lo: &ExactScalar, hi: &ExactScalar) -> usize {
    sign_variations(chain, lo) - sign_variations(chain, hi)
}

/// Bisect an isolating interval `(lo, hi]` with a single simple root down to
/// `REFINE_REL` relative width and return the root as `f64`.
fn refine(g: &Polynomial, mut lo: ExactScalar, mut hi: ExactScalar) -> f64 {
    if g.eval(&hi).is_zero() {
        return to_f64(&hi);
    }
    let scale = to_f64(&lo).abs().max(to_f64(&hi).abs()).max(1.0);
    let target = from_f64_exact(scale * REFINE_REL).expect("finite");
    let two = int(2);
    // If lo is itself a (different) root, the sign just right of it is the
    // sign of g' there; g is square-free so g'(lo) != 0 in that case.
    let at_lo = g.eval(&lo);
    let sign_lo = if at_lo.is_zero() {
        g.derivative().eval(&lo).is_positive()
    } else {
        at_lo.is_positive()
    };
    while (&hi - &lo) > target {
        let mid = (&lo + &hi) / &two;
        let v = g.eval(&mid);
        if v.is_zero() {
            return to_f64(&mid);
        }
        if v.is_positive() == sign_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    to_f64(&((&lo + &hi) / &two))
}

/// All real roots of `p` in `[a, b]`, ascending, each isolated exactly with a
/// Sturm chain over the rational coefficients and then refined by bisection.
/// Returns an empty list for constant-sign polynomials; rejects `p = 0`.
pub fn kernel_roots(p: &Polynomial, a: f64, b: f64) -> Result<Vec<f64>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (a, b) = if a <= b { (a, b) } else { (b, a) };
    let lo = from_f64_exact(a)?;
    let hi = from_f64_exact(b)?;
    if p.degree() == Some(0) {
        return Ok(Vec::new());
    }

    let g = square_free_part(p);
    let mut roots = Vec::new();
    if g.eval(&lo).is_zero() {
        roots.push(a);
    }
    if lo == hi {
        return Ok(roots);
    }

    let chain = sturm_chain(&g);
    // Depth-first, left-first walk keeps the output ascending.
    let mut stack = vec![(lo, hi)];
    while let Some((l, h)) = stack.pop() {
        let count = roots_in(&chain, &l, &h);
        match count {
            0 => {}
            1 => roots.push(refine(&g, l, h)),
            _ => {
                let mid = (&l + &h) / int(2);
                stack.push((mid.clone(), h));
                stack.push((l, mid));
            }
        }
    }
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn poly(cs: &[i64]) -> Polynomial {
        Polynomial::new(cs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn linear_root_at_midpoint() {
        // x - 1/2
        let p = Polynomial::new(vec![rat(-1, 2), int(1)]);
        let roots = kernel_roots(&p, 0.0, 1.0).unwrap();
        assert_eq!(roots, vec![0.5]);
    }

    #[test]
    fn quadratic_kernel_roots() {
        // (x - 1/2)^2 - 1/12 = x^2 - x + 1/6, roots 1/2 +- 1/(2 sqrt 3)
        let p = Polynomial::new(vec![rat(1, 6), int(-1), int(1)]);
        let roots = kernel_roots(&p, 0.0, 1.0).unwrap();
        assert_eq!(roots.len(), 2);
        let r0 = 0.5 - 0.5 / 3f64.sqrt();
        let r1 = 0.5 + 0.5 / 3f64.sqrt();
        assert!((roots[0] - r0).abs() < 1e-14);
        assert!((roots[1] - r1).abs() < 1e-14);
    }

    #[test]
    fn constant_sign_polynomial_has_no_roots() {
        let p = poly(&[1, 0, 1]); // x^2 + 1
        assert!(kernel_roots(&p, -10.0, 10.0).unwrap().is_empty());
    }

    #[test]
    fn zero_polynomial_is_rejected() {
        assert!(matches!(
            kernel_roots(&Polynomial::zero(), 0.0, 1.0),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn repeated_roots_are_reported_once() {
        // (x - 1)^2 (x + 2)
        let p = poly(&[-1, 1]).pow(2).mul(&poly(&[2, 1]));
        let roots = kernel_roots(&p, -3.0, 3.0).unwrap();
        assert_eq!(roots.len(), 2);
        assert!((roots[0] + 2.0).abs() < 1e-13);
        assert!((roots[1] - 1.0).abs() < 1e-13);
    }

    #[test]
    fn exact_rational_roots_and_interval_endpoints() {
        // x (x - 1) on [0, 1]: both endpoints are roots
        let p = poly(&[0, 1]).mul(&poly(&[-1, 1]));
        let roots = kernel_roots(&p, 0.0, 1.0).unwrap();
        assert_eq!(roots, vec![0.0, 1.0]);
    }

    #[test]
    fn root_at_left_endpoint_with_interior_root() {
        // x (1/3 - x): root at the closed left end plus one interior root,
        // with g positive immediately right of the endpoint root
        let p = poly(&[0, 1]).mul(&Polynomial::new(vec![rat(1, 3), int(-1)]));
        let roots = kernel_roots(&p, 0.0, 1.0).unwrap();
        assert_eq!(roots.len(), 2);
        assert_eq!(roots[0], 0.0);
        assert!((roots[1] - 1.0 / 3.0).abs() < 1e-14);
    }

    #[test]
    fn clustering_is_separated() {
        // roots at 1/4, 1/4 + 1/1024, 3/4
        let p = Polynomial::new(vec![rat(-1, 4), int(1)])
            .mul(&Polynomial::new(vec![rat(-257, 1024), int(1)]))
            .mul(&Polynomial::new(vec![rat(-3, 4), int(1)]));
        let roots = kernel_roots(&p, 0.0, 1.0).unwrap();
        assert_eq!(roots.len(), 3);
        assert!((roots[0] - 0.25).abs() < 1e-13);
        assert!((roots[1] - (0.25 + 1.0 / 1024.0)).abs() < 1e-13);
        assert!((roots[2] - 0.75).abs() < 1e-13);
    }

    #[test]
    fn degree_six_kernel_like_polynomial() {
        // Chebyshev-like wiggle: product of (x - k/7), k = 1..6
        let mut p = Polynomial::constant(int(1));
        for k in 1..=6 {
            p = p.mul(&Polynomial::new(vec![rat(-k, 7), int(1)]));
        }
        let roots = kernel_roots(&p, 0.0, 1.0).unwrap();
        assert_eq!(roots.len(), 6);
        for (i, r) in roots.iter().enumerate() {
            assert!((r - (i as f64 + 1.0) / 7.0).abs() < 1e-13);
        }
    }
}
