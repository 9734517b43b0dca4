//! Constant-term inner products for `alpha = 1/k`, `k` a positive integer.
//!
//! `CT(P W)` is read off as `sum_m P_m W_{-m}`, so the weight
//! `prod_{i != j} (1 - x_i/x_j)^e` is expanded once and never multiplied out
//! against the integrand.

use std::collections::BTreeMap;

use num::{One, Zero};

use crate::combinatorics::{
    compositions, eigenvalues, eta_plus, generalized_factorial, generalized_pochhammer, weight, Composition,
    EtaConstants,
};
use crate::error::{Error, Result};
use crate::jack::JackBasis;
use crate::linalg::solve_in_span;
use crate::poly::{Exponent, SparsePoly};
use crate::rational::{binomial, int, positive_integer, pow, rising, series_binomial, sign_pow, Rational};

/// Which power of the pair product the weight uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CtWeight {
    /// `prod_{i != j} (1 - x_i/x_j)^k`, the weight of the Cherednik inner product.
    Single,
    /// `prod_{i != j} (1 - x_i/x_j)^{2k}`.
    Double,
}

/// Expanded Laurent weight for fixed `n` and exponent.
#[derive(Debug, Clone)]
pub struct CtWeightPoly {
    weight: SparsePoly,
}

impl CtWeightPoly {
    pub fn new(n: usize, k: u32, kind: CtWeight) -> Self {
        let e = match kind {
            CtWeight::Single => k,
            CtWeight::Double => 2 * k,
        };
        let mut w = SparsePoly::one(n);
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let mut factor = SparsePoly::zero(n);
                for t in 0..=e {
                    let mut exp = vec![0; n];
                    exp[i] = t as i32;
                    exp[j] = -(t as i32);
                    factor.add_term(exp.into(), sign_pow(t) * binomial(&int(e as i64), t));
                }
                w = &w * &factor;
            }
        }
        CtWeightPoly { weight: w }
    }

    pub fn poly(&self) -> &SparsePoly {
        &self.weight
    }

    /// `CT(p W)`.
    pub fn constant_term_of(&self, p: &SparsePoly) -> Rational {
        p.terms().fold(Rational::zero(), |acc, (e, c)| {
            let neg: Exponent = e.iter().map(|x| -x).collect();
            acc + c * self.weight.coeff(&neg)
        })
    }

    /// `CT(f(x) g(1/x) W)`.
    pub fn inner(&self, f: &SparsePoly, g: &SparsePoly) -> Rational {
        let n = f.n();
        self.constant_term_of(&(f * &g.invert_vars(0..n)))
    }
}

/// `k = 1/alpha`, or an error when it is not a positive integer.
pub fn k_of_alpha(alpha: &Rational) -> Result<u32> {
    positive_integer(&(Rational::one() / alpha))
        .ok_or_else(|| Error::UnsupportedParameter(format!("1/alpha must be a positive integer, alpha = {alpha}")))
}

pub fn ct_inner(f: &SparsePoly, g: &SparsePoly, k: u32) -> Rational {
    CtWeightPoly::new(f.n(), k, CtWeight::Single).inner(f, g)
}

/// Closed form of `<E_eta, E_eta>_C` at `alpha = 1/k`:
/// `prod_{i<j} prod_{p<k} ((k D + p)/(k D - p - 1))^{sign D}` with `D = eta_bar_j - eta_bar_i`.
pub fn ct_norm_formula(eta: &[u32], k: u32) -> Rational {
    let alpha = Rational::one() / int(k as i64);
    let ev = eigenvalues(eta, &alpha);
    let n = eta.len();
    let mut acc = Rational::one();
    for i in 0..n {
        for j in i + 1..n {
            let kd = (&ev[j] - &ev[i]) * int(k as i64);
            for p in 0..k {
                let p = int(p as i64);
                let ratio = (&kd + &p) / (&kd - &p - int(1));
                acc *= if kd > Rational::zero() { ratio } else { Rational::one() / ratio };
            }
        }
    }
    acc
}

/// Both sides of the Selberg-type constant term ratio
/// `CT(prod (1-x_i)^a (1-1/x_i)^b E_eta W) / CT(prod (1-x_i)^a (1-1/x_i)^b W)`
/// `= E_eta(1^n) [-b]_{eta+} / [1 + a + (n-1)/alpha]_{eta+}`.
pub fn selberg_ratio_sides(
    basis: &JackBasis,
    w: &CtWeightPoly,
    eta: &[u32],
    a: u32,
    b: u32,
) -> Result<(Rational, Rational)> {
    let n = basis.n();
    let alpha = basis.alpha();
    let mut factor = SparsePoly::one(n);
    for i in 0..n {
        let x = SparsePoly::var(n, i);
        let inv = x.invert_vars(0..n);
        let one = SparsePoly::one(n);
        factor = &factor * &(&one - &x).pow(a);
        factor = &factor * &(&one - &inv).pow(b);
    }
    let denom = w.constant_term_of(&factor);
    if denom.is_zero() {
        return Err(Error::Pole("vanishing normalization in the Selberg-type ratio".into()));
    }
    let lhs = w.constant_term_of(&(&factor * &*basis.get(eta)?)) / denom;
    let kappa = eta_plus(eta);
    let top = generalized_pochhammer(&-int(b as i64), &kappa, alpha);
    let bottom = generalized_pochhammer(&(int(1 + a as i64) + int(n as i64 - 1) / alpha), &kappa, alpha);
    let rhs = basis.eval_ones(eta)? * top / bottom;
    Ok((lhs, rhs))
}

/// `prod_j Gamma(1 + (j-1)/alpha) / Gamma(1 + (j-1)/alpha + eta+_{n+1-j})`, as an exact rational.
pub fn gamma_ratio_product(eta: &[u32], alpha: &Rational) -> Rational {
    let kappa = eta_plus(eta);
    let n = kappa.len();
    (0..n).fold(Rational::one(), |acc, j| {
        let base = Rational::one() + int(j as i64) / alpha;
        acc / rising(&base, kappa[n - 1 - j])
    })
}

/// Both sides of the norm relation
/// `alpha^{|eta|} (d_eta/f_eta) N_eta/N_0 = E_eta(1^n) prod_j Gamma(1+(j-1)/alpha)/Gamma(1+(j-1)/alpha+eta+_{n+1-j})`
/// with `N_eta = <E_eta, E_eta>_C`.
pub fn norm_relation_sides(basis: &JackBasis, w: &CtWeightPoly, eta: &[u32]) -> Result<(Rational, Rational)> {
    let alpha = basis.alpha();
    let n = basis.n();
    let e = basis.get(eta)?;
    let norm = w.inner(&e, &e);
    let norm0 = w.inner(&SparsePoly::one(n), &SparsePoly::one(n));
    let c = EtaConstants::new(eta, alpha);
    let lhs = pow(alpha, weight(eta) as i32) * &c.d / c.f() * norm / norm0;
    let rhs = basis.eval_ones(eta)? * gamma_ratio_product(eta, alpha);
    Ok((lhs, rhs))
}

/// Power-sum basis `p_eta` defined by
/// `prod_i (1 - x_i y_i)^{-1} prod_{i,j} (1 - x_i y_j)^{-1/alpha} = sum_eta p_eta(x) y^eta`.
#[derive(Debug, Clone)]
pub struct PowerSumBasis {
    n: usize,
    max_degree: u32,
    polys: BTreeMap<Composition, SparsePoly>,
}

impl PowerSumBasis {
    pub fn new(n: usize, alpha: &Rational, max_degree: u32) -> Self {
        let m = 2 * n;
        let keep = move |e: &[i32]| e[n..].iter().sum::<i32>() <= max_degree as i32;
        let mut gen = SparsePoly::one(m);
        let factor = |i: usize, j: usize, c: &Rational| {
            let coeffs = series_binomial(c, max_degree as usize);
            let mut f = SparsePoly::zero(m);
            for (t, ct) in coeffs.into_iter().enumerate() {
                let mut e = vec![0; m];
                e[i] += t as i32;
                e[n + j] += t as i32;
                f.add_term(e.into(), ct);
            }
            f
        };
        let inv_alpha = Rational::one() / alpha;
        for i in 0..n {
            gen = gen.mul_truncated(&factor(i, i, &Rational::one()), &keep);
            for j in 0..n {
                gen = gen.mul_truncated(&factor(i, j, &inv_alpha), &keep);
            }
        }
        let mut polys: BTreeMap<Composition, SparsePoly> = BTreeMap::new();
        for (e, c) in gen.terms() {
            let eta: Composition = e[n..].iter().map(|&x| x as u32).collect();
            let mut xe = Exponent::from_slice(&e[..n]);
            xe.truncate(n);
            polys.entry(eta).or_insert_with(|| SparsePoly::zero(n)).add_term(xe, c.clone());
        }
        PowerSumBasis { n, max_degree, polys }
    }

    pub fn get(&self, eta: &[u32]) -> SparsePoly {
        self.polys.get(eta).cloned().unwrap_or_else(|| SparsePoly::zero(self.n))
    }

    /// Coefficients of a homogeneous `g` in the `p_nu` of its degree.
    pub fn expand(&self, g: &SparsePoly) -> Result<BTreeMap<Composition, Rational>> {
        let d = g.homogeneous_degree().ok_or(Error::NonHomogeneous)?;
        if d as u32 > self.max_degree {
            return Err(Error::UnsupportedParameter(format!("degree {d} exceeds table degree {}", self.max_degree)));
        }
        let etas = compositions(self.n, d as u32);
        let basis: Vec<SparsePoly> = etas.iter().map(|e| self.get(e)).collect();
        let c = solve_in_span(g, &basis)?;
        Ok(etas.into_iter().zip(c).collect())
    }

    /// Power-sum duality pairing `<f, g>` with `<x^eta, p_nu> = delta`.
    pub fn inner(&self, f: &SparsePoly, g: &SparsePoly) -> Result<Rational> {
        let gc = self.expand(g)?;
        Ok(gc.iter().fold(Rational::zero(), |acc, (nu, c)| {
            let e: Vec<i32> = nu.iter().map(|&x| x as i32).collect();
            acc + f.coeff(&e) * c
        }))
    }
}

/// `[n/alpha + 1]_lambda`, the factor relating `[.,.]_H` and the power-sum duality pairing on a `lambda`-isotypic block.
pub fn pairing_block_factor(lambda: &[u32], alpha: &Rational) -> Rational {
    let c = int(lambda.len() as i64) / alpha + int(1);
    generalized_factorial(&c, &eta_plus(lambda), alpha)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn ground_state_and_first_norm() {
        let b = JackBasis::new(2, int(1));
        let w = CtWeightPoly::new(2, 1, CtWeight::Single);
        assert_eq!(w.inner(&SparsePoly::one(2), &SparsePoly::one(2)), int(2));
        let e = b.get(&[1, 0]).unwrap();
        assert_eq!(w.inner(&e, &e), rat(3, 2));
        assert_eq!(ct_norm_formula(&[1, 0], 1), rat(3, 2));
        assert_eq!(ct_norm_formula(&[0, 0], 1), int(2));
    }

    #[test]
    fn power_sums_one_variable() {
        let p = PowerSumBasis::new(1, &int(1), 4);
        for k in 0..=4u32 {
            let expected = SparsePoly::monomial(vec![k as i32].into(), int(k as i64 + 1));
            assert_eq!(p.get(&[k]), expected);
        }
    }

    #[test]
    fn rejects_non_integer_k() {
        assert!(k_of_alpha(&int(2)).is_err());
        assert_eq!(k_of_alpha(&rat(1, 2)).unwrap(), 2);
    }
}
