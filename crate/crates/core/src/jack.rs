//! Nonsymmetric Jack polynomials `E_eta`.
//!
//! [`JackBasis`] builds them by the raising/switching recursion and memoizes
//! per composition. [`oracle`] solves the Cherednik eigen-equations directly
//! on the monomial basis and shares no code path with the recursion beyond
//! the polynomial type.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use num::{One, Zero};

use crate::combinatorics::{
    compositions, delta, eigenvalues, eta_plus, hook_norm_j, order_key, phi_hat, precedes, rearrangements, weight,
    Composition, EtaConstants,
};
use crate::error::{Error, Result};
use crate::linalg::solve;
use crate::operators::OperatorContext;
use crate::poly::{Exponent, SparsePoly};
use crate::rational::{factorial, Rational};

/// Memoized `E_eta` for a fixed `(n, alpha)`; safe for concurrent readers.
#[derive(Debug)]
pub struct JackBasis {
    n: usize,
    alpha: Rational,
    cache: RwLock<HashMap<Composition, Arc<SparsePoly>>>,
}

impl JackBasis {
    pub fn new(n: usize, alpha: Rational) -> Self {
        JackBasis { n, alpha, cache: RwLock::new(HashMap::new()) }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }

    pub fn context(&self) -> OperatorContext {
        OperatorContext::new(self.n, self.alpha.clone())
    }

    pub fn cached(&self) -> Vec<(Composition, Arc<SparsePoly>)> {
        let g = self.cache.read().expect("cache lock");
        let mut v: Vec<_> = g.iter().map(|(k, v)| (k.clone(), v.clone())).collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v
    }

    pub fn preload(&self, entries: impl IntoIterator<Item = (Composition, SparsePoly)>) {
        let mut g = self.cache.write().expect("cache lock");
        for (k, v) in entries {
            g.insert(k, Arc::new(v));
        }
    }

    pub fn get(&self, eta: &[u32]) -> Result<Arc<SparsePoly>> {
        if eta.len() != self.n {
            return Err(Error::Dimension { expected: self.n, found: eta.len() });
        }
        if let Some(p) = self.cache.read().expect("cache lock").get(eta) {
            return Ok(p.clone());
        }
        let p = Arc::new(self.build(eta)?);
        self.cache.write().expect("cache lock").insert(eta.to_vec(), p.clone());
        Ok(p)
    }

    fn build(&self, eta: &[u32]) -> Result<SparsePoly> {
        let n = self.n;
        if eta.iter().all(|&x| x == 0) {
            return Ok(SparsePoly::one(n));
        }
        let ctx = self.context();
        if let Some(low) = phi_hat(eta) {
            return Ok(ctx.apply_phi(&*self.get(&low)?));
        }
        let i = (0..n - 1).rev().find(|&i| eta[i] > eta[i + 1]).expect("a descent exists when eta_n = 0");
        let nu = crate::combinatorics::swap(eta, i);
        let d = delta(&nu, i, &self.alpha);
        if d.is_zero() {
            return Err(Error::ParameterSingularity { eta: eta.to_vec(), reason: "delta vanishes".into() });
        }
        let e_nu = self.get(&nu)?;
        Ok(ctx.apply_swap(&e_nu, i, i + 1) - e_nu.scale(&(Rational::one() / d)))
    }

    pub fn eval_ones(&self, eta: &[u32]) -> Result<Rational> {
        Ok(self.get(eta)?.eval_ones())
    }

    /// Symmetric Jack polynomial `J_kappa = j_kappa sum_{eta+ = kappa} E_eta / d'_eta`.
    pub fn jack_j(&self, kappa: &[u32]) -> Result<SparsePoly> {
        let mut out = SparsePoly::zero(self.n);
        for eta in rearrangements(kappa) {
            let dp = EtaConstants::new(&eta, &self.alpha).d_prime;
            out += &self.get(&eta)?.scale(&(Rational::one() / dp));
        }
        Ok(out.scale(&hook_norm_j(kappa, &self.alpha)))
    }

    /// Expansion `p = sum_nu c_nu E_nu` by peeling off leading monomials.
    pub fn expand(&self, p: &SparsePoly) -> Result<BTreeMap<Composition, Rational>> {
        let mut rest = p.clone();
        let mut out = BTreeMap::new();
        while !rest.is_zero() {
            let (lead, c) = rest
                .terms()
                .max_by(|a, b| key(a.0).cmp(&key(b.0)))
                .map(|(e, c)| (e.clone(), c.clone()))
                .expect("nonzero");
            if lead.iter().any(|&x| x < 0) {
                return Err(Error::Residual(format!("Laurent monomial {lead:?} outside the Jack basis")));
            }
            let nu: Composition = lead.iter().map(|&x| x as u32).collect();
            rest -= &self.get(&nu)?.scale(&c);
            out.insert(nu, c);
        }
        Ok(out)
    }
}

fn key(e: &Exponent) -> (u32, Composition, Composition) {
    let c: Composition = e.iter().map(|&x| x.max(0) as u32).collect();
    order_key(&c)
}

/// Independent construction: impose `xi_i E = eta_bar_i E` on the span of
/// monomials `x^nu` with `nu` below `eta`, with the coefficient of `x^eta` fixed to 1.
pub fn oracle(n: usize, alpha: &Rational, eta: &[u32]) -> Result<SparsePoly> {
    let ctx = OperatorContext::new(n, alpha.clone());
    let ev = eigenvalues(eta, alpha);
    let lower: Vec<Composition> =
        compositions(n, weight(eta)).into_iter().filter(|nu| precedes(nu, eta).unwrap_or(false)).collect();
    let mono = |nu: &[u32]| SparsePoly::monomial(nu.iter().map(|&x| x as i32).collect(), Rational::one());
    let residual = |p: &SparsePoly, i: usize| ctx.apply_cherednik_divided(p, i) - p.scale(&ev[i]);

    let mut rows: BTreeMap<(usize, Exponent), usize> = BTreeMap::new();
    let mut columns: Vec<Vec<((usize, Exponent), Rational)>> = Vec::new();
    for nu in &lower {
        let mut col = Vec::new();
        for i in 0..n {
            for (e, c) in residual(&mono(nu), i).terms() {
                col.push(((i, e.clone()), c.clone()));
            }
        }
        columns.push(col);
    }
    let mut rhs_terms = Vec::new();
    for i in 0..n {
        for (e, c) in residual(&mono(eta), i).terms() {
            rhs_terms.push(((i, e.clone()), -c.clone()));
        }
    }
    for (k, _) in columns.iter().flatten().chain(rhs_terms.iter()) {
        let next = rows.len();
        rows.entry(k.clone()).or_insert(next);
    }
    let mut a = vec![vec![Rational::zero(); lower.len()]; rows.len()];
    for (j, col) in columns.iter().enumerate() {
        for (k, c) in col {
            a[rows[k]][j] += c;
        }
    }
    let mut b = vec![Rational::zero(); rows.len()];
    for (k, c) in &rhs_terms {
        b[rows[k]] += c;
    }
    let coeffs = if lower.is_empty() {
        if b.iter().any(|x| !x.is_zero()) {
            return Err(Error::Residual("leading monomial is not an eigenfunction".into()));
        }
        vec![]
    } else {
        solve(a, b)?
    };
    let mut out = mono(eta);
    for (nu, c) in lower.iter().zip(coeffs) {
        out += &mono(nu).scale(&c);
    }
    Ok(out)
}

/// `a_eta` in `Sym E_eta = a_eta J_{eta+}`: `n! e_eta / (d_eta J_kappa(1^n))`.
pub fn symmetrization_constant(eta: &[u32], alpha: &Rational) -> Rational {
    let n = eta.len();
    let c = EtaConstants::new(eta, alpha);
    let j1 = crate::combinatorics::jack_j_at_ones(&eta_plus(eta), n, alpha);
    factorial(n as u32) * &c.e / (&c.d * j1)
}

/// `E_eta(1^n) = e_eta / d_eta`.
pub fn value_at_ones(eta: &[u32], alpha: &Rational) -> Rational {
    let c = EtaConstants::new(eta, alpha);
    c.e / c.d
}

/// `(x_1 ... x_n)^m E_eta(1/x)` with `m = max eta`, and the composition
/// `(m - eta_n, ..., m - eta_1)` whose polynomial it equals after reversing variables.
pub fn reversal_pair(basis: &JackBasis, eta: &[u32]) -> Result<(SparsePoly, SparsePoly)> {
    let n = eta.len();
    let m = *eta.iter().max().unwrap_or(&0) as i32;
    let lhs = basis.get(eta)?.invert_vars(0..n).mul_monomial(&vec![m; n], &Rational::one());
    let rev: Composition = eta.iter().rev().map(|&x| m as u32 - x).collect();
    let perm: Vec<usize> = (0..n).rev().collect();
    let rhs = basis.get(&rev)?.permute_vars(&perm);
    Ok((lhs, rhs))
}

/// Right side of the switching relation for `s_i E_eta`.
pub fn switch_expected(basis: &JackBasis, eta: &[u32], i: usize) -> Result<SparsePoly> {
    switch_combination(eta, i, basis.alpha(), |c| basis.get(c))
}

/// `s_i P_eta` predicted from `P_eta` and `P_{s_i eta}` for any family with
/// the same switching relation as `E_eta`.
pub fn switch_combination(
    eta: &[u32],
    i: usize,
    alpha: &Rational,
    get: impl Fn(&[u32]) -> Result<Arc<SparsePoly>>,
) -> Result<SparsePoly> {
    let e = get(eta)?;
    if eta[i] == eta[i + 1] {
        return Ok((*e).clone());
    }
    let d = delta(eta, i, alpha);
    let inv = Rational::one() / &d;
    let other = get(&crate::combinatorics::swap(eta, i))?;
    let coeff = if eta[i] > eta[i + 1] { Rational::one() - &inv * &inv } else { Rational::one() };
    Ok(e.scale(&inv) + other.scale(&coeff))
}

pub fn all_coefficients_positive(p: &SparsePoly) -> bool {
    p.terms().all(|(_, c)| c > &Rational::zero())
}

/// Coefficients lie on monomials `x^nu` with `nu` below `eta`, and `x^eta` has coefficient 1.
pub fn is_triangular(p: &SparsePoly, eta: &[u32]) -> bool {
    let lead: Exponent = eta.iter().map(|&x| x as i32).collect();
    p.coeff(&lead).is_one()
        && p.terms().all(|(e, _)| {
            if *e == lead {
                return true;
            }
            if e.iter().any(|&x| x < 0) {
                return false;
            }
            let nu: Composition = e.iter().map(|&x| x as u32).collect();
            precedes(&nu, eta).unwrap_or(false)
        })
}

/// Coefficient of `x_1 ... x_k` in `J_kappa` for `|kappa| = k <= n`; the
/// standard normalization makes it `k!`.
pub fn jack_j_square_free_coeff(j: &SparsePoly, k: usize) -> Rational {
    let mut e = vec![0; j.n()];
    for x in e.iter_mut().take(k) {
        *x = 1;
    }
    j.coeff(&e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::compositions_up_to;
    use crate::rational::{int, rat};

    fn alphas() -> Vec<Rational> {
        vec![int(1), int(2), rat(1, 2), int(3), rat(7, 5)]
    }

    #[test]
    fn first_degree_example() {
        for a in alphas() {
            let b = JackBasis::new(2, a.clone());
            let expected = SparsePoly::var(2, 0) + SparsePoly::var(2, 1).scale(&(int(1) / (&a + int(1))));
            assert_eq!(*b.get(&[1, 0]).unwrap(), expected);
            assert_eq!(*b.get(&[0, 1]).unwrap(), SparsePoly::var(2, 1));
            assert_eq!(b.eval_ones(&[1, 0]).unwrap(), (&a + int(2)) / (&a + int(1)));
        }
    }

    #[test]
    fn recursion_matches_oracle() {
        for a in alphas() {
            for n in 1..=3 {
                let b = JackBasis::new(n, a.clone());
                for eta in compositions_up_to(n, 4) {
                    assert_eq!(*b.get(&eta).unwrap(), oracle(n, &a, &eta).unwrap(), "n={n} eta={eta:?}");
                }
            }
        }
    }

    #[test]
    fn expansion_round_trip() {
        let b = JackBasis::new(3, rat(7, 5));
        let p = b.get(&[2, 0, 1]).unwrap().scale(&int(3)) + (*b.get(&[0, 1, 0]).unwrap()).clone();
        let c = b.expand(&p).unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(c[&vec![2, 0, 1]], int(3));
        assert_eq!(c[&vec![0, 1, 0]], int(1));
    }

    #[test]
    fn j_normalization() {
        for a in alphas() {
            let b = JackBasis::new(2, a.clone());
            let j = b.jack_j(&[1, 1]).unwrap();
            assert_eq!(jack_j_square_free_coeff(&j, 2), int(2));
            assert_eq!(hook_norm_j(&[1, 1], &a), int(2) * &a * (&a + int(1)));
        }
    }
}
