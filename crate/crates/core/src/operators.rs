//! Exact Dunkl-type operators acting on [`SparsePoly`].
//!
//! An [`OperatorContext`] fixes `n`, `alpha`, the Laguerre parameter `a` and
//! the offset of its variable block inside the ambient polynomial, so the same
//! operators act on either half of a two-block kernel. Indices are 0-based.
//!
//! Type-B operators act on functions of `y_i = x_i^2`; in those variables the
//! type-B Dunkl operator squared to `4 B_i`, and the type-B Cherednik
//! operator is the type-A one written in `y`.

use std::fmt;
use std::sync::Arc;

use num::{One, Zero};

use crate::poly::SparsePoly;
use crate::rational::{int, rat, Rational};

/// A composable linear operator on polynomials.
#[derive(Clone)]
pub struct Op(Arc<dyn Fn(&SparsePoly) -> SparsePoly + Send + Sync>);

impl fmt::Debug for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Op(..)")
    }
}

impl Op {
    pub fn new(f: impl Fn(&SparsePoly) -> SparsePoly + Send + Sync + 'static) -> Self {
        Op(Arc::new(f))
    }

    pub fn apply(&self, p: &SparsePoly) -> SparsePoly {
        (self.0)(p)
    }

    pub fn identity() -> Self {
        Op::new(|p| p.clone())
    }

    pub fn zero() -> Self {
        Op::new(|p| SparsePoly::zero(p.n()))
    }

    pub fn scalar(c: Rational) -> Self {
        Op::new(move |p| p.scale(&c))
    }

    /// Operator product `self * rhs`: apply `rhs`, then `self`.
    pub fn mul(&self, rhs: &Op) -> Op {
        let (a, b) = (self.clone(), rhs.clone());
        Op::new(move |p| a.apply(&b.apply(p)))
    }

    pub fn add(&self, rhs: &Op) -> Op {
        let (a, b) = (self.clone(), rhs.clone());
        Op::new(move |p| a.apply(p) + b.apply(p))
    }

    pub fn sub(&self, rhs: &Op) -> Op {
        let (a, b) = (self.clone(), rhs.clone());
        Op::new(move |p| a.apply(p) - b.apply(p))
    }

    pub fn scale(&self, c: &Rational) -> Op {
        let (a, c) = (self.clone(), c.clone());
        Op::new(move |p| a.apply(p).scale(&c))
    }

    pub fn plus_scalar(&self, c: &Rational) -> Op {
        self.add(&Op::scalar(c.clone()))
    }

    pub fn pow(&self, k: u32) -> Op {
        (0..k).fold(Op::identity(), |acc, _| acc.mul(self))
    }

    pub fn sum(ops: impl IntoIterator<Item = Op>) -> Op {
        ops.into_iter().fold(Op::zero(), |acc, o| acc.add(&o))
    }
}

/// `[a, b] = ab - ba`.
pub fn commutator(a: &Op, b: &Op) -> Op {
    a.mul(b).sub(&b.mul(a))
}

#[derive(Debug, Clone, PartialEq)]
pub struct OperatorContext {
    pub n: usize,
    pub alpha: Rational,
    pub a: Rational,
    pub offset: usize,
}

impl OperatorContext {
    pub fn new(n: usize, alpha: Rational) -> Self {
        OperatorContext { n, alpha, a: Rational::zero(), offset: 0 }
    }

    pub fn with_a(mut self, a: Rational) -> Self {
        self.a = a;
        self
    }

    pub fn on_block(mut self, offset: usize) -> Self {
        self.offset = offset;
        self
    }

    fn v(&self, i: usize) -> usize {
        assert!(i < self.n, "index {i} out of range for n = {}", self.n);
        self.offset + i
    }

    pub fn apply_swap(&self, p: &SparsePoly, i: usize, j: usize) -> SparsePoly {
        p.swap_vars(self.v(i), self.v(j))
    }

    /// Type-A Dunkl operator `T_i = d_i + (1/alpha) sum_{p != i} (1 - s_ip)/(x_i - x_p)`.
    pub fn apply_dunkl(&self, p: &SparsePoly, i: usize) -> SparsePoly {
        let vi = self.v(i);
        let mut dd = SparsePoly::zero(p.n());
        for q in (0..self.n).filter(|&q| q != i) {
            dd += &p.divided_difference(vi, self.v(q));
        }
        p.derivative(vi) + dd.scale(&(Rational::one() / &self.alpha))
    }

    /// Cherednik operator in the form `alpha x_i T_i + 1 - n + sum_{p > i} s_ip`.
    pub fn apply_cherednik(&self, p: &SparsePoly, i: usize) -> SparsePoly {
        let mut out = self.apply_dunkl(p, i).mul_var(self.v(i)).scale(&self.alpha);
        out += &p.scale(&int(1 - self.n as i64));
        for q in i + 1..self.n {
            out += &self.apply_swap(p, i, q);
        }
        out
    }

    /// Cherednik operator written with explicit divided differences:
    /// `alpha x_i d_i + sum_{p<i} x_i D_ip + sum_{p>i} x_p D_ip - i` (0-based `i`).
    pub fn apply_cherednik_divided(&self, p: &SparsePoly, i: usize) -> SparsePoly {
        let vi = self.v(i);
        let mut out = p.derivative(vi).mul_var(vi).scale(&self.alpha);
        for q in 0..self.n {
            if q == i {
                continue;
            }
            let dd = p.divided_difference(vi, self.v(q));
            out += &dd.mul_var(if q < i { vi } else { self.v(q) });
        }
        out -= &p.scale(&int(i as i64));
        out
    }

    pub fn apply_laplacian(&self, p: &SparsePoly) -> SparsePoly {
        let mut out = SparsePoly::zero(p.n());
        for i in 0..self.n {
            out += &self.apply_dunkl(&self.apply_dunkl(p, i), i);
        }
        out
    }

    /// Raising operator `x_n s_{n-1} ... s_1` (`s_1` acts first).
    pub fn apply_phi(&self, p: &SparsePoly) -> SparsePoly {
        let mut q = p.clone();
        for i in 0..self.n - 1 {
            q = self.apply_swap(&q, i, i + 1);
        }
        q.mul_var(self.v(self.n - 1))
    }

    /// `s_1 s_2 ... s_{n-1}` with `s_{n-1}` acting first.
    fn cycle_down(&self, p: &SparsePoly) -> SparsePoly {
        let mut q = p.clone();
        for i in (0..self.n - 1).rev() {
            q = self.apply_swap(&q, i, i + 1);
        }
        q
    }

    /// `s_{n-1} ... s_1` with `s_1` acting first.
    fn cycle_up(&self, p: &SparsePoly) -> SparsePoly {
        let mut q = p.clone();
        for i in 0..self.n - 1 {
            q = self.apply_swap(&q, i, i + 1);
        }
        q
    }

    /// Lowering operator `T_1 s_1 ... s_{n-1}`.
    pub fn apply_phi_hat(&self, p: &SparsePoly) -> SparsePoly {
        self.apply_dunkl(&self.cycle_down(p), 0)
    }

    /// Hermite raising operator `2 Phi + (1/2)[Phi, Delta_A]`.
    pub fn apply_phi_hat_star(&self, p: &SparsePoly) -> SparsePoly {
        let phi_p = self.apply_phi(p);
        let comm = self.apply_phi(&self.apply_laplacian(p)) - self.apply_laplacian(&phi_p);
        phi_p.scale(&int(2)) + comm.scale(&rat(1, 2))
    }

    /// `h_i = xi_i - (alpha/2) T_i^2`.
    pub fn apply_hermite_h(&self, p: &SparsePoly, i: usize) -> SparsePoly {
        let tt = self.apply_dunkl(&self.apply_dunkl(p, i), i);
        self.apply_cherednik(p, i) - tt.scale(&(&self.alpha / int(2)))
    }

    /// `B_i = y_i T_i^2 + (a+1) T_i + (1/alpha) sum_{p != i} s_ip T_i`.
    pub fn apply_laguerre_b(&self, p: &SparsePoly, i: usize) -> SparsePoly {
        let t = self.apply_dunkl(p, i);
        let mut out = self.apply_dunkl(&t, i).mul_var(self.v(i));
        out += &t.scale(&(&self.a + Rational::one()));
        let mut sw = SparsePoly::zero(p.n());
        for q in (0..self.n).filter(|&q| q != i) {
            sw += &self.apply_swap(&t, i, q);
        }
        out + sw.scale(&(Rational::one() / &self.alpha))
    }

    pub fn apply_sum_b(&self, p: &SparsePoly) -> SparsePoly {
        let mut out = SparsePoly::zero(p.n());
        for i in 0..self.n {
            out += &self.apply_laguerre_b(p, i);
        }
        out
    }

    /// `l_i = xi_i - alpha B_i` in the `y` variables.
    pub fn apply_laguerre_l(&self, p: &SparsePoly, i: usize) -> SparsePoly {
        self.apply_cherednik(p, i) - self.apply_laguerre_b(p, i).scale(&self.alpha)
    }

    /// Laguerre lowering operator `B_1 s_1 ... s_{n-1}`.
    pub fn apply_psi_hat(&self, p: &SparsePoly) -> SparsePoly {
        self.apply_laguerre_b(&self.cycle_down(p), 0)
    }

    /// Laguerre raising operator `Psi + [Psi, sum_i B_i] + s_{n-1} ... s_1 B_1`.
    pub fn apply_psi_hat_star(&self, p: &SparsePoly) -> SparsePoly {
        let psi_p = self.apply_phi(p);
        let comm = self.apply_phi(&self.apply_sum_b(p)) - self.apply_sum_b(&psi_p);
        psi_p + comm + self.cycle_up(&self.apply_laguerre_b(p, 0))
    }

    /// `E_k = sum_i x_i^k d_i`.
    pub fn apply_euler(&self, p: &SparsePoly, k: i32) -> SparsePoly {
        let mut out = SparsePoly::zero(p.n());
        for i in 0..self.n {
            let mut e = vec![0; p.n()];
            e[self.v(i)] = k;
            out += &p.derivative(self.v(i)).mul_monomial(&e, &Rational::one());
        }
        out
    }

    /// Power sum `sum_i x_i^k` in this block.
    pub fn power_sum(&self, ambient: usize, k: i32) -> SparsePoly {
        let mut out = SparsePoly::zero(ambient);
        for i in 0..self.n {
            let mut e = vec![0; ambient];
            e[self.v(i)] = k;
            out += &SparsePoly::monomial(e.into(), Rational::one());
        }
        out
    }

    /// `sum_j x_j^2 d_j^2 + (2/alpha) sum_{j<k} N_jk / (x_j - x_k)` for a pair numerator `N_jk`.
    fn second_order(
        &self,
        p: &SparsePoly,
        diag_power: Option<i32>,
        numerator: impl Fn(&SparsePoly, usize, usize) -> SparsePoly,
    ) -> SparsePoly {
        let mut out = SparsePoly::zero(p.n());
        if let Some(k) = diag_power {
            for j in 0..self.n {
                let vj = self.v(j);
                let mut e = vec![0; p.n()];
                e[vj] = k;
                out += &p.derivative(vj).derivative(vj).mul_monomial(&e, &Rational::one());
            }
        }
        let c = int(2) / &self.alpha;
        for j in 0..self.n {
            for k in j + 1..self.n {
                let (vj, vk) = (self.v(j), self.v(k));
                let num = numerator(p, vj, vk);
                let q = num.div_by_difference(vj, vk).expect("pair numerator vanishes on the diagonal");
                out += &q.scale(&c);
            }
        }
        out
    }

    /// `D~_2 = D_2 - (1/alpha) sum_{j != k} x_j x_k/(x_j - x_k)^2 (1 - s_jk)`.
    pub fn apply_d_tilde2(&self, p: &SparsePoly) -> SparsePoly {
        self.second_order(p, Some(2), |p, j, k| {
            let dj = p.derivative(j).mul_monomial(&pow_vec(p.n(), j, 2), &Rational::one());
            let dk = p.derivative(k).mul_monomial(&pow_vec(p.n(), k, 2), &Rational::one());
            let dd = p.divided_difference(j, k).mul_var(j).mul_var(k);
            dj - dk - dd
        })
    }

    /// `D~_1 = D_1 - (1/alpha) sum_{j != k} x_j/(x_j - x_k)^2 (1 - s_jk)`.
    pub fn apply_d_tilde1(&self, p: &SparsePoly) -> SparsePoly {
        self.second_order(p, Some(1), |p, j, k| {
            let dj = p.derivative(j).mul_var(j);
            let dk = p.derivative(k).mul_var(k);
            let dd = p.divided_difference(j, k);
            let half = (dd.mul_var(j) + dd.mul_var(k)).scale(&rat(1, 2));
            dj - dk - half
        })
    }

    /// Calogero-type operator
    /// `sum_j x_j^2 d_j^2 + (2/alpha) sum_{j<k} x_j x_k/(x_j - x_k)[(d_j - d_k) - (1 - s_jk)/(x_j - x_k)]`.
    pub fn apply_calogero(&self, p: &SparsePoly) -> SparsePoly {
        self.second_order(p, Some(2), |p, j, k| {
            let diff = p.derivative(j) - p.derivative(k) - p.divided_difference(j, k);
            diff.mul_var(j).mul_var(k)
        })
    }

    /// `Delta_A - 2 E_1`; eigenvalue `-2|eta|` on the Hermite basis.
    pub fn apply_hermite_hamiltonian(&self, p: &SparsePoly) -> SparsePoly {
        self.apply_laplacian(p) - self.apply_euler(p, 1).scale(&int(2))
    }

    /// `Delta_B - 2 E_1(x)` written in `y`: `4 sum_i B_i - 4 E_1(y)`; eigenvalue `-4|eta|`.
    pub fn apply_laguerre_hamiltonian(&self, p: &SparsePoly) -> SparsePoly {
        (self.apply_sum_b(p) - self.apply_euler(p, 1)).scale(&int(4))
    }

    // Operator-valued wrappers.

    pub fn swap(&self, i: usize, j: usize) -> Op {
        let c = self.clone();
        Op::new(move |p| c.apply_swap(p, i, j))
    }

    pub fn mul_var(&self, i: usize) -> Op {
        let v = self.v(i);
        Op::new(move |p| p.mul_var(v))
    }

    pub fn dunkl(&self, i: usize) -> Op {
        let c = self.clone();
        Op::new(move |p| c.apply_dunkl(p, i))
    }

    pub fn cherednik(&self, i: usize) -> Op {
        let c = self.clone();
        Op::new(move |p| c.apply_cherednik(p, i))
    }

    pub fn cherednik_divided(&self, i: usize) -> Op {
        let c = self.clone();
        Op::new(move |p| c.apply_cherednik_divided(p, i))
    }

    pub fn laplacian(&self) -> Op {
        let c = self.clone();
        Op::new(move |p| c.apply_laplacian(p))
    }

    pub fn phi(&self) -> Op {
        let c = self.clone();
        Op::new(move |p| c.apply_phi(p))
    }

    pub fn phi_hat(&self) -> Op {
        let c = self.clone();
        Op::new(move |p| c.apply_phi_hat(p))
    }

    pub fn phi_hat_star(&self) -> Op {
        let c = self.clone();
        Op::new(move |p| c.apply_phi_hat_star(p))
    }

    pub fn hermite_h(&self, i: usize) -> Op {
        let c = self.clone();
        Op::new(move |p| c.apply_hermite_h(p, i))
    }

    pub fn laguerre_b(&self, i: usize) -> Op {
        let c = self.clone();
        Op::new(move |p| c.apply_laguerre_b(p, i))
    }

    pub fn sum_b(&self) -> Op {
        let c = self.clone();
        Op::new(move |p| c.apply_sum_b(p))
    }

    pub fn laguerre_l(&self, i: usize) -> Op {
        let c = self.clone();
        Op::new(move |p| c.apply_laguerre_l(p, i))
    }

    pub fn psi_hat(&self) -> Op {
        let c = self.clone();
        Op::new(move |p| c.apply_psi_hat(p))
    }

    pub fn psi_hat_star(&self) -> Op {
        let c = self.clone();
        Op::new(move |p| c.apply_psi_hat_star(p))
    }

    pub fn euler(&self, k: i32) -> Op {
        let c = self.clone();
        Op::new(move |p| c.apply_euler(p, k))
    }

    pub fn d_tilde1(&self) -> Op {
        let c = self.clone();
        Op::new(move |p| c.apply_d_tilde1(p))
    }

    pub fn d_tilde2(&self) -> Op {
        let c = self.clone();
        Op::new(move |p| c.apply_d_tilde2(p))
    }

    pub fn calogero(&self) -> Op {
        let c = self.clone();
        Op::new(move |p| c.apply_calogero(p))
    }

    pub fn hermite_hamiltonian(&self) -> Op {
        let c = self.clone();
        Op::new(move |p| c.apply_hermite_hamiltonian(p))
    }

    pub fn laguerre_hamiltonian(&self) -> Op {
        let c = self.clone();
        Op::new(move |p| c.apply_laguerre_hamiltonian(p))
    }
}

fn pow_vec(n: usize, i: usize, k: i32) -> Vec<i32> {
    let mut e = vec![0; n];
    e[i] = k;
    e
}

/// All monomials of total degree at most `max_degree` in `n` variables.
pub fn test_monomials(n: usize, max_degree: u32) -> Vec<SparsePoly> {
    crate::combinatorics::compositions_up_to(n, max_degree)
        .into_iter()
        .map(|e| SparsePoly::monomial(e.iter().map(|&x| x as i32).collect(), Rational::one()))
        .collect()
}

/// `Some(monomial)` on which `lhs` and `rhs` disagree, if any.
pub fn first_disagreement(lhs: &Op, rhs: &Op, probes: &[SparsePoly]) -> Option<SparsePoly> {
    probes.iter().find(|p| lhs.apply(p) != rhs.apply(p)).cloned()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, i: usize) -> SparsePoly {
        SparsePoly::var(n, i)
    }

    fn alphas() -> Vec<Rational> {
        vec![int(1), int(2), rat(1, 2), int(3), rat(7, 5)]
    }

    #[test]
    fn spec_values() {
        for a in alphas() {
            let c = OperatorContext::new(2, a.clone());
            assert_eq!(c.apply_dunkl(&x(2, 0), 0), SparsePoly::constant(2, int(1) + int(1) / &a));
            assert_eq!(c.apply_cherednik(&x(2, 1), 0), -x(2, 1));
            assert_eq!(c.apply_cherednik(&x(2, 0), 0), x(2, 0).scale(&a) + x(2, 1));
            assert_eq!(c.apply_laplacian(&(x(2, 0) * x(2, 1))), SparsePoly::constant(2, int(-2) / &a));
        }
    }

    #[test]
    fn laguerre_b_values() {
        for a in alphas() {
            for la in [int(0), rat(1, 2), int(1)] {
                let c = OperatorContext::new(2, a.clone()).with_a(la.clone());
                let f = x(2, 0) + x(2, 1).scale(&(int(1) / (&a + int(1))));
                let expected = (&la + int(1) + int(1) / &a) * (&a + int(2)) / (&a + int(1));
                assert_eq!(c.apply_laguerre_b(&f, 0), SparsePoly::constant(2, expected));
                assert!(c.apply_laguerre_b(&f, 1).is_zero());
            }
        }
    }

    #[test]
    fn cherednik_forms_agree() {
        for a in alphas() {
            for n in 1..=3 {
                let c = OperatorContext::new(n, a.clone());
                for m in test_monomials(n, 4) {
                    for i in 0..n {
                        assert_eq!(c.apply_cherednik(&m, i), c.apply_cherednik_divided(&m, i));
                    }
                }
            }
        }
    }

    #[test]
    fn block_offset_acts_on_second_block() {
        let c = OperatorContext::new(2, int(2)).on_block(2);
        let p = x(4, 2) * x(4, 0);
        assert_eq!(c.apply_dunkl(&p, 0), x(4, 0).scale(&rat(3, 2)));
    }

    #[test]
    fn d_tilde_relations() {
        for a in alphas() {
            let c = OperatorContext::new(3, a.clone());
            let d2 = c.d_tilde2();
            let rhs = c.calogero().add(&c.euler(1).scale(&(int(4) / &a)));
            let half_comm = commutator(&c.euler(0), &d2).scale(&rat(1, 2));
            for m in test_monomials(3, 4) {
                assert_eq!(d2.apply(&m), rhs.apply(&m));
                assert_eq!(c.apply_d_tilde1(&m), half_comm.apply(&m));
            }
        }
    }
}
