//! Hand-derived small cases, frozen. Closed forms in alpha are checked across
//! the default alpha set.

use std::sync::Arc;

use nsjack::combinatorics::{dominance_le, eigenvalues, generalized_factorial, hook_norm_j, precedes, EtaConstants};
use nsjack::ct::{
    ct_inner, ct_norm_formula, norm_relation_sides, selberg_ratio_sides, CtWeight, CtWeightPoly, PowerSumBasis,
};
use nsjack::hermite_laguerre::{
    harmonic_decomposition_a, hermite_from_harmonics, hermite_norm_ratio, laguerre_at_zero, laguerre_norm_ratio,
    pairing_h, reassemble, HermiteBasis, LaguerreBasis,
};
use nsjack::jack::{oracle, JackBasis};
use nsjack::kernels::{binomial_coeff, kernel_a};
use nsjack::numeric::{quad_inner_h, quad_transform_check, Transform};
use nsjack::operators::OperatorContext;
use nsjack::poly::SparsePoly;
use nsjack::rational::{int, rat, series_binomial, Rational};
use nsjack::verify::default_alphas;

fn poly(n: usize, terms: &[(&[i32], Rational)]) -> SparsePoly {
    SparsePoly::from_terms(n, terms.iter().map(|(e, c)| (e.to_vec(), c.clone()))).unwrap()
}

fn one() -> Rational {
    int(1)
}

#[test]
fn laurent_product_and_constant_term() {
    let a = poly(2, &[(&[0, 0], one()), (&[1, -1], int(-1))]);
    let b = poly(2, &[(&[0, 0], one()), (&[-1, 1], int(-1))]);
    let p = &a * &b;
    assert_eq!(p, poly(2, &[(&[0, 0], int(2)), (&[1, -1], int(-1)), (&[-1, 1], int(-1))]));
    assert_eq!(p.constant_term(), int(2));
    assert_eq!(series_binomial(&rat(1, 2), 2), vec![int(1), rat(1, 2), rat(3, 8)]);
}

#[test]
fn evaluation_and_division() {
    let p = poly(2, &[(&[1, 0], one()), (&[0, 1], rat(1, 2))]);
    assert_eq!(p.eval_ones(), rat(3, 2));
    let q = poly(2, &[(&[2, 1], one())]);
    assert_eq!(q.mul_monomial(&[-1, 0], &one()), poly(2, &[(&[1, 1], one())]));
}

#[test]
fn composition_constants() {
    assert!(dominance_le(&[0, 1], &[1, 0]));
    assert!(precedes(&[0, 1], &[1, 0]).unwrap());
    for alpha in default_alphas() {
        assert_eq!(eigenvalues(&[1, 0], &alpha), vec![alpha.clone(), int(-1)]);
        assert_eq!(eigenvalues(&[0, 1], &alpha), vec![int(-1), alpha.clone()]);
        let c = EtaConstants::new(&[1, 0], &alpha);
        assert_eq!((c.d_prime.clone(), c.d.clone(), c.e.clone()), (alpha.clone(), &alpha + int(1), &alpha + int(2)));
        assert_eq!(generalized_factorial(&rat(5, 3), &[1, 0], &alpha), rat(5, 3));
        assert_eq!(hook_norm_j(&[1], &alpha), alpha.clone());
        assert_eq!(hook_norm_j(&[1, 1], &alpha), int(2) * &alpha * (&alpha + int(1)));
    }
}

#[test]
fn dunkl_and_cherednik_on_low_degree() {
    for alpha in default_alphas() {
        let ctx = OperatorContext::new(2, alpha.clone());
        let x1 = SparsePoly::var(2, 0);
        let x2 = SparsePoly::var(2, 1);
        let inv = int(1) / &alpha;
        assert_eq!(ctx.apply_dunkl(&(&x1 * &x2), 0), x2);
        assert_eq!(ctx.apply_dunkl(&x1, 0), SparsePoly::constant(2, int(1) + &inv));
        assert_eq!(ctx.apply_cherednik(&x2, 0), x2.scale(&int(-1)));
        assert_eq!(ctx.apply_cherednik(&x1, 0), &x1.scale(&alpha) + &x2);
        assert_eq!(ctx.apply_laplacian(&(&x1 * &x2)), SparsePoly::constant(2, int(-2) / &alpha));
        assert_eq!(ctx.apply_phi_hat(&x2), SparsePoly::constant(2, int(1) + &inv));
        assert_eq!(ctx.apply_phi_hat_star(&SparsePoly::one(2)), x2.scale(&int(2)));
    }
}

#[test]
fn type_b_operators_on_first_jack() {
    for alpha in default_alphas() {
        for a in [int(0), rat(1, 2), int(1)] {
            let ctx = OperatorContext::new(2, alpha.clone()).with_a(a.clone());
            let p = poly(2, &[(&[1, 0], one()), (&[0, 1], int(1) / (&alpha + int(1)))]);
            assert!(ctx.apply_laguerre_b(&p, 1).is_zero());
            let expected = (&a + int(1) + int(1) / &alpha) * (&alpha + int(2)) / (&alpha + int(1));
            assert_eq!(ctx.apply_laguerre_b(&p, 0), SparsePoly::constant(2, expected));
            let lag = LaguerreBasis::new(Arc::new(JackBasis::new(2, alpha.clone())), a.clone());
            assert_eq!(ctx.apply_psi_hat_star(&SparsePoly::one(2)), *lag.get(&[0, 1]).unwrap());
        }
    }
}

#[test]
fn second_order_eigenvalue_spot_value() {
    let b = JackBasis::new(2, int(1));
    let e = b.get(&[1, 0]).unwrap();
    assert_eq!(b.context().apply_d_tilde2(&e), e.scale(&int(2)));
}

#[test]
fn first_jack_polynomials() {
    for alpha in default_alphas() {
        let b = JackBasis::new(2, alpha.clone());
        let e10 = poly(2, &[(&[1, 0], one()), (&[0, 1], int(1) / (&alpha + int(1)))]);
        assert_eq!(*b.get(&[0, 1]).unwrap(), SparsePoly::var(2, 1));
        assert_eq!(*b.get(&[1, 0]).unwrap(), e10);
        assert_eq!(oracle(2, &alpha, &[1, 0]).unwrap(), e10);
        assert_eq!(oracle(2, &alpha, &[0, 1]).unwrap(), SparsePoly::var(2, 1));
        assert_eq!(b.eval_ones(&[1, 0]).unwrap(), (&alpha + int(2)) / (&alpha + int(1)));
        let j1 = b.jack_j(&[1, 0]).unwrap();
        assert!(j1.is_symmetric(2));
    }
}

#[test]
fn first_hermite_and_laguerre_polynomials() {
    for alpha in default_alphas() {
        let jack = Arc::new(JackBasis::new(2, alpha.clone()));
        let h = HermiteBasis::new(jack.clone());
        let x1x2 = poly(2, &[(&[1, 1], one())]);
        assert_eq!(*h.get(&[1, 1]).unwrap(), &x1x2 + &SparsePoly::constant(2, int(1) / (int(2) * &alpha)));
        assert_eq!(hermite_norm_ratio(&[1, 0], &alpha), (&alpha + int(2)) / (int(2) * (&alpha + int(1))));
        let ctx = jack.context();
        let e = jack.get(&[1, 0]).unwrap();
        assert_eq!(pairing_h(&ctx, &e, &e), (&alpha + int(2)) / (&alpha + int(1)));
        for a in [int(0), rat(1, 2), int(1)] {
            let lag = LaguerreBasis::new(jack.clone(), a.clone());
            let q = int(1) + int(1) / &alpha;
            let c = (&a + &q) * (&alpha + int(2)) / (&alpha + int(1));
            let expected = poly(2, &[(&[1, 0], one()), (&[0, 1], int(1) / (&alpha + int(1))), (&[0, 0], -c.clone())]);
            assert_eq!(*lag.get(&[1, 0]).unwrap(), expected);
            assert_eq!(laguerre_at_zero(&[1, 0], &alpha, &a), -c.clone());
            assert_eq!(laguerre_norm_ratio(&[1, 0], &alpha, &a), c);
            let l11 = lag.get(&[1, 1]).unwrap();
            assert_eq!(l11.constant_coeff(), laguerre_at_zero(&[1, 1], &alpha, &a));
        }
    }
}

#[test]
fn harmonic_pieces_of_degree_two() {
    for alpha in default_alphas() {
        let jack = JackBasis::new(2, alpha.clone());
        let pieces = harmonic_decomposition_a(&jack, &[1, 1]).unwrap();
        let ms: Vec<u32> = pieces.iter().map(|p| p.m).collect();
        assert_eq!(ms, vec![0, 1]);
        assert_eq!(reassemble(&pieces, 2, false), *jack.get(&[1, 1]).unwrap());
        let h = HermiteBasis::new(Arc::new(JackBasis::new(2, alpha.clone())));
        assert_eq!(hermite_from_harmonics(&pieces, 2, &alpha), *h.get(&[1, 1]).unwrap());
    }
}

#[test]
fn kernel_and_binomial_values() {
    let one_var = JackBasis::new(1, int(1));
    let k = kernel_a(&one_var, 5).unwrap();
    let mut expected = SparsePoly::zero(2);
    let mut fact = int(1);
    for d in 0..=5 {
        if d > 0 {
            fact *= int(d);
        }
        expected.add_term(vec![d as i32, d as i32].into(), int(1) / &fact);
    }
    assert_eq!(*k.poly(), expected);
    for alpha in default_alphas() {
        let b2 = JackBasis::new(2, alpha.clone());
        let k = kernel_a(&b2, 1).unwrap();
        let mut slice = SparsePoly::zero(4);
        for eta in [[1u32, 0], [0, 1]] {
            let c = EtaConstants::new(&eta, &alpha);
            let e = b2.get(&eta).unwrap();
            let term = &e.embed(4, 0) * &e.embed(4, 2);
            slice = &slice + &term.scale(&(&alpha * &c.d / (&c.d_prime * &c.e)));
        }
        assert_eq!(k.slice(1), slice);
        assert_eq!(binomial_coeff(&b2, &[1, 1], &[1, 0]).unwrap(), (&alpha + int(2)) / (&alpha + int(1)));
        assert_eq!(binomial_coeff(&b2, &[1, 1], &[0, 1]).unwrap(), &alpha / (&alpha + int(1)));
        let b3 = JackBasis::new(3, alpha.clone());
        assert_eq!(
            binomial_coeff(&b2, &[1, 1], &[1, 0]).unwrap(),
            binomial_coeff(&b3, &[1, 1, 0], &[1, 0, 0]).unwrap()
        );
        let b4 = JackBasis::new(4, alpha.clone());
        assert_eq!(
            binomial_coeff(&b2, &[2, 0], &[1, 0]).unwrap(),
            binomial_coeff(&b4, &[2, 0, 0, 0], &[1, 0, 0, 0]).unwrap()
        );
    }
}

#[test]
fn constant_term_values() {
    let b = JackBasis::new(2, int(1));
    assert_eq!(ct_inner(&SparsePoly::one(2), &SparsePoly::one(2), 1), int(2));
    let e10 = b.get(&[1, 0]).unwrap();
    assert_eq!(ct_inner(&e10, &e10, 1), rat(3, 2));
    assert_eq!(ct_norm_formula(&[1, 0], 1), rat(3, 2));
    let e01 = b.get(&[0, 1]).unwrap();
    assert_eq!(ct_norm_formula(&[0, 1], 1), ct_inner(&e01, &e01, 1));
    let w = CtWeightPoly::new(2, 1, CtWeight::Single);
    let (lhs, rhs) = selberg_ratio_sides(&b, &w, &[1, 0], 1, 1).unwrap();
    assert_eq!(lhs, rhs);
    for eta in [[1u32, 0], [1, 1]] {
        let (lhs, rhs) = norm_relation_sides(&b, &w, &eta).unwrap();
        assert_eq!(lhs, rhs, "eta = {eta:?}");
    }
    let p = PowerSumBasis::new(1, &int(1), 4);
    for k in 0..=4u32 {
        assert_eq!(p.get(&[k]), poly(1, &[(&[k as i32], int(k as i64 + 1))]));
    }
}

#[test]
fn quadrature_spot_values() {
    let one = SparsePoly::one(1);
    let v = quad_inner_h(&one, &one, &int(1)).unwrap();
    assert!((v - std::f64::consts::PI.sqrt()).abs() < 1e-10);
    let jack = Arc::new(JackBasis::new(2, int(1)));
    let h = HermiteBasis::new(jack.clone());
    let (f, g) = (h.get(&[1, 0]).unwrap(), h.get(&[0, 1]).unwrap());
    let cross = quad_inner_h(&f, &g, &int(1)).unwrap();
    let scale = (quad_inner_h(&f, &f, &int(1)).unwrap() * quad_inner_h(&g, &g, &int(1)).unwrap()).sqrt();
    assert!(cross.abs() < 1e-8 * scale);
    let r = quad_transform_check(Transform::HermiteToJack, &jack, &int(0), &[1, 0], 6).unwrap();
    assert!(r.passed(), "{r:?}");
}
