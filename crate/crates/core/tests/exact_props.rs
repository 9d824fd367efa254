//! Property tests for the exact-arithmetic layer.

use hquad_core::exact::{ExactScalar, Polynomial};
use num_bigint::BigInt;
use proptest::prelude::*;

fn scalar() -> impl Strategy<Value = ExactScalar> {
    (-99i64..=99, 1i64..=40).prop_map(|(num, den)| {
        ExactScalar::new(BigInt::from(num), BigInt::from(den))
    })
}

fn polynomial(max_degree: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(scalar(), 0..=max_degree + 1).prop_map(Polynomial::new)
}

proptest! {
    #[test]
    fn integral_is_additive(p in polynomial(6), q in polynomial(6), a in scalar(), b in scalar()) {
        let lhs = p.add(&q).definite_integral(&a, &b);
        let rhs = p.definite_integral(&a, &b) + q.definite_integral(&a, &b);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn derivative_undoes_antiderivative(p in polynomial(8)) {
        prop_assert_eq!(p.antiderivative().derivative(), p);
    }

    #[test]
    fn reflection_is_an_involution(p in polynomial(8), a in scalar(), b in scalar()) {
        let sum = &a + &b;
        let once = p.compose_affine(&ExactScalar::from_integer(BigInt::from(-1)), &sum);
        let twice = once.compose_affine(&ExactScalar::from_integer(BigInt::from(-1)), &sum);
        prop_assert_eq!(twice, p);
    }

    #[test]
    fn product_degree_is_sum_of_degrees(p in polynomial(7), q in polynomial(7)) {
        let prod = p.mul(&q);
        match (p.degree(), q.degree()) {
            (Some(dp), Some(dq)) => prop_assert_eq!(prod.degree(), Some(dp + dq)),
            _ => prop_assert!(prod.is_zero()),
        }
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(p in polynomial(5), q in polynomial(5), x in scalar()) {
        prop_assert_eq!(p.mul(&q).eval(&x), p.eval(&x) * q.eval(&x));
        prop_assert_eq!(p.add(&q).eval(&x), p.eval(&x) + q.eval(&x));
    }

    #[test]
    fn scaling_commutes_with_integration(p in polynomial(6), s in scalar(), a in scalar(), b in scalar()) {
        let lhs = p.scale(&s).definite_integral(&a, &b);
        let rhs = s * p.definite_integral(&a, &b);
        prop_assert_eq!(lhs, rhs);
    }
}
