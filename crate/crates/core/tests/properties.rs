//! Algebraic invariants checked on random inputs.

use std::collections::BTreeMap;

use num_complex::Complex64;
use proptest::prelude::*;

use hermite2d::exact::Sign;
use hermite2d::hermite::{deformed_rodrigues, deformed_sum, sandwich_route};
use hermite2d::integrate::integrate_gaussian;
use hermite2d::{
    AffineMap, ExactScalar, GMatrix, GaussianRational, LinearForm, Monomial, SparsePoly, Variable,
};

use Variable::{U, V, X, Y, Z1, Z2};

fn gaussian() -> impl Strategy<Value = GaussianRational> {
    (-12i64..=12, 1i64..=7, -12i64..=12, 1i64..=7).prop_map(|(a, b, c, d)| {
        GaussianRational::new(
            num_rational::BigRational::new(a.into(), b.into()),
            num_rational::BigRational::new(c.into(), d.into()),
        )
    })
}

fn scalar() -> impl Strategy<Value = ExactScalar> {
    (gaussian(), gaussian()).prop_map(|(u, r)| ExactScalar::new(u, r))
}

fn real_scalar() -> impl Strategy<Value = ExactScalar> {
    (-40i64..=40, 1i64..=9, -40i64..=40, 1i64..=9).prop_map(|(a, b, c, d)| {
        &ExactScalar::ratio(a, b) + &(&ExactScalar::ratio(c, d) * &ExactScalar::sqrt2())
    })
}

/// Polynomials in z1, z2 of degree ≤ 3 per variable.
fn poly() -> impl Strategy<Value = SparsePoly> {
    prop::collection::vec((0u16..=3, 0u16..=3, scalar()), 0..5).prop_map(|terms| {
        SparsePoly::from_terms(
            terms
                .into_iter()
                .map(|(a, b, c)| (Monomial::one().with(Z1, a).with(Z2, b), c)),
        )
    })
}

fn small_g() -> impl Strategy<Value = GMatrix> {
    let entry = (-3i64..=3, -3i64..=3).prop_map(|(a, b)| ExactScalar::gaussian(a, b));
    (entry.clone(), entry.clone(), entry.clone(), entry)
        .prop_map(|(a, b, c, d)| GMatrix::new(a, b, c, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, ExactScalar::zero());
    }

    #[test]
    fn inverse_is_two_sided(a in scalar()) {
        prop_assume!(!a.is_zero());
        let inv = a.inv().unwrap();
        prop_assert!((&a * &inv).is_one());
        prop_assert_eq!(inv.inv().unwrap(), a);
    }

    #[test]
    fn conjugation_is_a_field_automorphism(a in scalar(), b in scalar()) {
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        prop_assert_eq!((&a + &b).conj(), &a.conj() + &b.conj());
        prop_assert!((&a * &a.conj()).is_real());
    }

    #[test]
    fn sign_agrees_with_floating_point(a in real_scalar()) {
        let f = a.to_complex().unwrap().re;
        let expected = if a.is_zero() {
            Sign::Zero
        } else if f > 0.0 {
            Sign::Positive
        } else {
            Sign::Negative
        };
        prop_assert_eq!(a.sign().unwrap(), expected);
    }

    #[test]
    fn rendering_round_trips(a in scalar()) {
        let text = a.to_string();
        prop_assert_eq!(text.parse::<ExactScalar>().unwrap(), a, "{}", text);
    }

    #[test]
    fn float_conversion_is_a_ring_map(a in scalar(), b in scalar()) {
        let exact = (&a * &b).to_complex().unwrap();
        let float = a.to_complex().unwrap() * b.to_complex().unwrap();
        prop_assert!((exact - float).norm() <= 1e-9 * (1.0 + float.norm()));
    }

    #[test]
    fn ring_axioms(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn partial_derivatives_commute(p in poly()) {
        prop_assert_eq!(
            p.partial_derivative(Z1).partial_derivative(Z2),
            p.partial_derivative(Z2).partial_derivative(Z1)
        );
    }

    #[test]
    fn leibniz_rule(p in poly(), q in poly()) {
        let lhs = (&p * &q).partial_derivative(Z1);
        let rhs = &(&p.partial_derivative(Z1) * &q) + &(&p * &q.partial_derivative(Z1));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn substitution_is_a_ring_homomorphism(p in poly(), q in poly(), a in scalar(), b in scalar()) {
        let map = AffineMap::new()
            .with(Z1, LinearForm::var(X).plus(Y, a.clone()).offset(b.clone()))
            .with(Z2, LinearForm::var(Z1).plus(X, b).offset(a));
        prop_assert_eq!((&p * &q).substitute(&map), &p.substitute(&map) * &q.substitute(&map));
        prop_assert_eq!((&p + &q).substitute(&map), &p.substitute(&map) + &q.substitute(&map));
    }

    #[test]
    fn mixed_exponential_operators_invert(p in poly(), c in scalar()) {
        let there = p.mixed_exp_operator(&c, Z1, Z2);
        prop_assert_eq!(there.mixed_exp_operator(&-&c, Z1, Z2), p);
    }

    #[test]
    fn series_exponential_turns_sums_into_products(a in scalar(), b in scalar()) {
        let f = &SparsePoly::var(U).scale(&a) + &SparsePoly::var(V).scale(&b);
        let g = &(&SparsePoly::var(U) * &SparsePoly::var(V)).scale(&b) + &SparsePoly::var(V);
        let svars = [U, V];
        let lhs = (&f + &g).series_exp(&svars, 5).unwrap();
        let rhs = f.series_exp(&svars, 5).unwrap()
            .series_mul(&g.series_exp(&svars, 5).unwrap(), &svars, 5);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn evaluation_matches_floating_point(p in poly(), z1 in gaussian(), z2 in gaussian()) {
        let exact_point: BTreeMap<_, _> =
            [(Z1, ExactScalar::from(z1.clone())), (Z2, ExactScalar::from(z2.clone()))].into();
        let float_point: BTreeMap<_, _> = [
            (Z1, ExactScalar::from(z1).to_complex().unwrap()),
            (Z2, ExactScalar::from(z2).to_complex().unwrap()),
        ].into();
        let exact = p.evaluate(&exact_point).unwrap().to_complex().unwrap();
        let float: Complex64 = p.evaluate_float(&float_point).unwrap();
        prop_assert!((exact - float).norm() <= 1e-8 * (1.0 + exact.norm()));
    }

    #[test]
    fn json_round_trips(p in poly()) {
        prop_assert_eq!(SparsePoly::from_json(&p.to_json()).unwrap(), p);
    }

    #[test]
    fn construction_routes_agree_for_random_g(g in small_g(), m in 0u32..=3, n in 0u32..=3) {
        let sum = deformed_sum(&g, m, n);
        prop_assert_eq!(&deformed_rodrigues(&g, m, n), &sum);
        prop_assert_eq!(&sandwich_route(&g, m, n), &sum);
    }

    #[test]
    fn gaussian_integration_is_linear(p in poly(), q in poly(), c in scalar()) {
        let diag = AffineMap::new()
            .with(Z1, LinearForm::var(X).plus(Y, ExactScalar::i()))
            .with(Z2, LinearForm::var(X).plus(Y, -ExactScalar::i()));
        let (p, q) = (p.substitute(&diag), q.substitute(&diag));
        let integral = |f: &SparsePoly| integrate_gaussian(f, &[X, Y], true).unwrap();
        let lhs = integral(&(&p + &q.scale(&c)));
        let rhs = integral(&p).coeff() + &(integral(&q).coeff() * &c);
        prop_assert_eq!(lhs.coeff(), &rhs);
    }
}
