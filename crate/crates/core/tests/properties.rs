use proptest::prelude::*;

use nsjack::combinatorics::eigenvalues;
use nsjack::ct::{CtWeight, CtWeightPoly};
use nsjack::jack::JackBasis;
use nsjack::kernels::kernel_a;
use nsjack::operators::OperatorContext;
use nsjack::poly::SparsePoly;
use nsjack::rational::{factorial, format_rational, parse_rational, rat, Rational};

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5).prop_map(|(p, q)| rat(p, q))
}

fn positive_alpha() -> impl Strategy<Value = Rational> {
    (1i64..=7, 1i64..=5).prop_map(|(p, q)| rat(p, q))
}

fn laurent(n: usize) -> impl Strategy<Value = SparsePoly> {
    prop::collection::vec((prop::collection::vec(-2i32..=3, n), rational()), 0..6)
        .prop_map(move |terms| SparsePoly::from_terms(n, terms).unwrap())
}

fn polynomial(n: usize, max_exp: i32) -> impl Strategy<Value = SparsePoly> {
    prop::collection::vec((prop::collection::vec(0..=max_exp, n), rational()), 0..5)
        .prop_map(move |terms| SparsePoly::from_terms(n, terms).unwrap())
}

fn composition(n: usize, max_part: u32) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0..=max_part, n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(p in laurent(3), q in laurent(3), r in laurent(3)) {
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert!((&p - &p).is_zero());
        prop_assert_eq!(&p * &SparsePoly::one(3), p.clone());
    }

    #[test]
    fn json_round_trip(p in laurent(2)) {
        prop_assert_eq!(SparsePoly::from_json(&p.to_json()).unwrap(), p);
    }

    #[test]
    fn rational_round_trip(r in rational()) {
        prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
    }

    #[test]
    fn constant_term_product_is_symmetric(f in polynomial(2, 2), g in polynomial(2, 2), k in 1u32..=2) {
        let w = CtWeightPoly::new(2, k, CtWeight::Single);
        prop_assert_eq!(w.inner(&f, &g), w.inner(&g, &f));
    }

    #[test]
    fn symmetrization_is_idempotent_up_to_order(p in polynomial(3, 3)) {
        let s = p.symmetrize(3);
        prop_assert!(s.is_symmetric(3));
        prop_assert_eq!(s.symmetrize(3), s.scale(&factorial(3)));
    }

    #[test]
    fn hecke_relation_on_random_polynomials(p in polynomial(3, 3), alpha in positive_alpha(), i in 0usize..2) {
        let ctx = OperatorContext::new(3, alpha);
        let lhs = ctx.apply_cherednik(&ctx.apply_swap(&p, i, i + 1), i)
            - ctx.apply_swap(&ctx.apply_cherednik(&p, i + 1), i, i + 1);
        prop_assert_eq!(lhs, p);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn jack_polynomials_are_cherednik_eigenfunctions(eta in composition(3, 2), alpha in positive_alpha()) {
        let basis = JackBasis::new(3, alpha.clone());
        let e = basis.get(&eta).unwrap();
        let ev = eigenvalues(&eta, &alpha);
        let ctx = basis.context();
        for (i, lambda) in ev.iter().enumerate() {
            prop_assert_eq!(ctx.apply_cherednik(&e, i), e.scale(lambda));
        }
    }

    #[test]
    fn exponential_kernel_is_block_symmetric(alpha in positive_alpha(), n in 1usize..=2) {
        let k = kernel_a(&JackBasis::new(n, alpha), 3).unwrap();
        prop_assert_eq!(k.swap_blocks(), k.poly().clone());
    }
}
