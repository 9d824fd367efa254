//! Kernel norms assembled from exact pieces.
//!
//! Between consecutive roots the kernel has constant sign, so its L1 norm is
//! the sum of |A(r_{i+1}) - A(r_i)| with A the exact antiderivative. Each
//! difference is computed in rational arithmetic at the (rationalised) root
//! approximations and rounded once at the end; since A'(r) = P(r) = 0 at a
//! true root, the refinement error enters only at second order and the norm
//! comes out accurate to a few ulps.

use crate::error::roots::kernel_roots;
use crate::exact::{from_f64_exact, to_f64, Polynomial};
use crate::Result;

/// L1 and L2 norms of a kernel over `[a, b]`, plus its real roots there.
#[derive(Debug, Clone, PartialEq)]
pub struct KernelNorms {
    pub l1: f64,
    pub l2: f64,
    pub roots: Vec<f64>,
}

/// Norms of the kernel polynomial over `[a, b]`.
pub fn kernel_norms(p: &Polynomial, a: f64, b: f64) -> Result<KernelNorms> {
    let (a, b) = if a <= b { (a, b) } else { (b, a) };
    let roots = kernel_roots(p, a, b)?;

    let anti = p.antiderivative();
    let mut breakpoints = Vec::with_capacity(roots.len() + 2);
    breakpoints.push(a);
    breakpoints.extend(roots.iter().copied().filter(|&r| r > a && r < b));
    breakpoints.push(b);

    let mut l1 = 0.0;
    let mut prev = anti.eval(&from_f64_exact(breakpoints[0])?);
    for &x in &breakpoints[1..] {
        let next = anti.eval(&from_f64_exact(x)?);
        l1 += to_f64(&(&next - &prev)).abs();
        prev = next;
    }

    let ra = from_f64_exact(a)?;
    let rb = from_f64_exact(b)?;
    let l2 = to_f64(&p.mul(p).definite_integral(&ra, &rb)).sqrt();

    Ok(KernelNorms { l1, l2, roots })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;
    use crate::params::{build_kernel, solve_theta};

    fn kernel(n: u32, a: i64, b: i64) -> Polynomial {
        build_kernel(&solve_theta(n, &int(a), &int(b)).unwrap())
    }

    #[test]
    fn order_one_kernel_is_two_triangles() {
        // |x - 1/2| over [0, 1]: two triangles of area 1/8
        let norms = kernel_norms(&kernel(1, 0, 1), 0.0, 1.0).unwrap();
        assert!((norms.l1 - 0.25).abs() < 1e-15);
        assert_eq!(norms.roots, vec![0.5]);
    }

    #[test]
    fn order_two_kernel_l1_constant() {
        let norms = kernel_norms(&kernel(2, 0, 1), 0.0, 1.0).unwrap();
        let expected = 3f64.sqrt() / 54.0;
        assert!((norms.l1 - expected).abs() < 1e-13 * expected);
        assert_eq!(norms.roots.len(), 2);
    }

    #[test]
    fn l1_scales_with_the_cube_of_the_width() {
        let unit = kernel_norms(&kernel(2, 0, 1), 0.0, 1.0).unwrap();
        let wide = kernel_norms(&kernel(2, 0, 2), 0.0, 2.0).unwrap();
        assert!((wide.l1 - 8.0 * unit.l1).abs() < 1e-13 * wide.l1);
    }

    #[test]
    fn l2_of_order_two_kernel() {
        // int_0^1 P^2 = int ((x-1/2)^2/2 - 1/24)^2 = 1/720 by direct expansion
        let norms = kernel_norms(&kernel(2, 0, 1), 0.0, 1.0).unwrap();
        assert!((norms.l2 - (1.0 / 720f64).sqrt()).abs() < 1e-15);
    }

    #[test]
    fn norms_are_positive_for_nondegenerate_intervals() {
        for n in 1..=6 {
            let norms = kernel_norms(&kernel(n, -1, 1), -1.0, 1.0).unwrap();
            assert!(norms.l1 > 0.0);
            assert!(norms.l2 > 0.0);
        }
    }
}
