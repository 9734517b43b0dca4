//! Nonsymmetric Hermite polynomials `E^(H) = exp(-Delta_A/4) E` and
//! Laguerre polynomials `E^(L) = exp(-sum_i B_i) E` (in `y = x^2`), with
//! their norm ratios, pairings and harmonic decompositions.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use num::{One, Zero};

use crate::combinatorics::{generalized_factorial, phi_hat, weight, Composition, EtaConstants};
use crate::error::Result;
use crate::jack::JackBasis;
use crate::operators::OperatorContext;
use crate::poly::SparsePoly;
use crate::rational::{binomial, factorial, int, pow, rat, rising, sign_pow, Rational};

/// Applies `sum_m c^m L^m / m!` until `L^m p` vanishes.
fn exp_series(p: &SparsePoly, c: &Rational, op: impl Fn(&SparsePoly) -> SparsePoly) -> SparsePoly {
    let mut out = p.clone();
    let mut term = p.clone();
    let mut m = 0i64;
    loop {
        m += 1;
        term = op(&term).scale(&(c / int(m)));
        if term.is_zero() {
            return out;
        }
        out += &term;
    }
}

#[derive(Debug)]
pub struct HermiteBasis {
    jack: Arc<JackBasis>,
    cache: RwLock<HashMap<Composition, Arc<SparsePoly>>>,
}

impl HermiteBasis {
    pub fn new(jack: Arc<JackBasis>) -> Self {
        HermiteBasis { jack, cache: RwLock::new(HashMap::new()) }
    }

    pub fn jack(&self) -> &Arc<JackBasis> {
        &self.jack
    }

    pub fn get(&self, eta: &[u32]) -> Result<Arc<SparsePoly>> {
        if let Some(p) = self.cache.read().expect("cache lock").get(eta) {
            return Ok(p.clone());
        }
        let ctx = self.jack.context();
        let p = Arc::new(exp_series(&*self.jack.get(eta)?, &rat(-1, 4), |q| ctx.apply_laplacian(q)));
        self.cache.write().expect("cache lock").insert(eta.to_vec(), p.clone());
        Ok(p)
    }
}

#[derive(Debug)]
pub struct LaguerreBasis {
    jack: Arc<JackBasis>,
    a: Rational,
    cache: RwLock<HashMap<Composition, Arc<SparsePoly>>>,
}

impl LaguerreBasis {
    pub fn new(jack: Arc<JackBasis>, a: Rational) -> Self {
        LaguerreBasis { jack, a, cache: RwLock::new(HashMap::new()) }
    }

    pub fn jack(&self) -> &Arc<JackBasis> {
        &self.jack
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn context(&self) -> OperatorContext {
        self.jack.context().with_a(self.a.clone())
    }

    /// `q = 1 + (n-1)/alpha`.
    pub fn q(&self) -> Rational {
        q_param(self.jack.n(), self.jack.alpha())
    }

    /// `E^(L)_eta` as a polynomial in `y_i = x_i^2`.
    pub fn get(&self, eta: &[u32]) -> Result<Arc<SparsePoly>> {
        if let Some(p) = self.cache.read().expect("cache lock").get(eta) {
            return Ok(p.clone());
        }
        let ctx = self.context();
        let p = Arc::new(exp_series(&*self.jack.get(eta)?, &-Rational::one(), |q| ctx.apply_sum_b(q)));
        self.cache.write().expect("cache lock").insert(eta.to_vec(), p.clone());
        Ok(p)
    }

    /// `E^(L)_eta(x^2)` in the original variables.
    pub fn get_in_x(&self, eta: &[u32]) -> Result<SparsePoly> {
        let n = self.jack.n();
        let squares: Vec<SparsePoly> = (0..n).map(|i| SparsePoly::var(n, i).pow(2)).collect();
        Ok(self.get(eta)?.substitute(&squares))
    }
}

pub fn q_param(n: usize, alpha: &Rational) -> Rational {
    Rational::one() + int(n as i64 - 1) / alpha
}

/// `<E^(H)_eta, E^(H)_eta> / N_0 = (2 alpha)^{-|eta|} d'_eta e_eta / d_eta`.
pub fn hermite_norm_ratio(eta: &[u32], alpha: &Rational) -> Rational {
    let c = EtaConstants::new(eta, alpha);
    &c.d_prime * &c.e / &c.d / pow(&(alpha * int(2)), weight(eta) as i32)
}

/// `<E^(L)_eta, E^(L)_eta> / N_0 = [a+q]_eta alpha^{-|eta|} d'_eta e_eta / d_eta`.
pub fn laguerre_norm_ratio(eta: &[u32], alpha: &Rational, a: &Rational) -> Rational {
    let c = EtaConstants::new(eta, alpha);
    let aq = a + q_param(eta.len(), alpha);
    generalized_factorial(&aq, eta, alpha) * &c.d_prime * &c.e / &c.d / pow(alpha, weight(eta) as i32)
}

/// `E^(L)_eta(0) = (-1)^{|eta|} [a+q]_eta e_eta / d_eta`.
pub fn laguerre_at_zero(eta: &[u32], alpha: &Rational, a: &Rational) -> Rational {
    let c = EtaConstants::new(eta, alpha);
    let aq = a + q_param(eta.len(), alpha);
    sign_pow(weight(eta)) * generalized_factorial(&aq, eta, alpha) * c.e / c.d
}

/// Constant in `Phi-hat E_eta = c E_{Phi-hat eta}` (also for Hermite); zero when `eta_n = 0`.
pub fn lowering_constant(eta: &[u32], alpha: &Rational) -> Rational {
    match phi_hat(eta) {
        None => Rational::zero(),
        Some(low) => EtaConstants::new(eta, alpha).d_prime / EtaConstants::new(&low, alpha).d_prime / alpha,
    }
}

/// Constant in `Psi-hat E^(L)_eta = c E^(L)_{Phi-hat eta}`; zero when `eta_n = 0`.
pub fn laguerre_lowering_constant(eta: &[u32], alpha: &Rational, a: &Rational) -> Rational {
    match phi_hat(eta) {
        None => Rational::zero(),
        Some(low) => {
            let aq = a + q_param(eta.len(), alpha);
            lowering_constant(eta, alpha) * generalized_factorial(&aq, eta, alpha)
                / generalized_factorial(&aq, &low, alpha)
        }
    }
}

/// `[p, q]_H = p(T) q` at the origin.
pub fn pairing_h(ctx: &OperatorContext, p: &SparsePoly, q: &SparsePoly) -> Rational {
    apply_as_operator(p, q, |f, i| ctx.apply_dunkl(f, i))
}

/// `[p(x^2), q(x^2)]_L`, with `x_i^2` acting as `(T_i^(B))^2 = 4 B_i`; `p`, `q` given in `y`.
pub fn pairing_l(ctx: &OperatorContext, p: &SparsePoly, q: &SparsePoly) -> Rational {
    apply_as_operator(p, q, |f, i| ctx.apply_laguerre_b(f, i).scale(&int(4)))
}

fn apply_as_operator(p: &SparsePoly, q: &SparsePoly, act: impl Fn(&SparsePoly, usize) -> SparsePoly) -> Rational {
    let mut acc = Rational::zero();
    for (e, c) in p.terms() {
        let mut f = q.clone();
        for (i, &k) in e.iter().enumerate() {
            for _ in 0..k {
                f = act(&f, i);
            }
        }
        acc += c * f.constant_coeff();
    }
    acc
}

/// One harmonic component `r^{2m} Y` of a decomposition.
#[derive(Debug, Clone, PartialEq)]
pub struct HarmonicPiece {
    pub m: u32,
    pub degree: u32,
    pub harmonic: SparsePoly,
}

fn r_squared(n: usize, power: i32) -> SparsePoly {
    (0..n).fold(SparsePoly::zero(n), |acc, i| {
        let mut e = vec![0; n];
        e[i] = power;
        acc + SparsePoly::monomial(e.into(), Rational::one())
    })
}

/// `lambda = n/2 + n(n-1)/(2 alpha)`.
pub fn lambda_a(n: usize, alpha: &Rational) -> Rational {
    let n = int(n as i64);
    &n / int(2) + &n * (&n - int(1)) / (alpha * int(2))
}

/// `lambda_B = n(a+1) + n(n-1)/alpha`.
pub fn lambda_b(n: usize, alpha: &Rational, a: &Rational) -> Rational {
    let n = int(n as i64);
    &n * (a + int(1)) + &n * (&n - int(1)) / alpha
}

/// Harmonic projection `sum_j R^j / (4^j j! (-lambda - d + 2)_j) L^j f` of a degree-`d` form.
fn harmonic_projection(
    f: &SparsePoly,
    x_degree: u32,
    lambda: &Rational,
    r2: &SparsePoly,
    lap: &impl Fn(&SparsePoly) -> SparsePoly,
) -> SparsePoly {
    let base = -lambda - int(x_degree as i64) + int(2);
    let mut out = SparsePoly::zero(f.n());
    let mut lf = f.clone();
    let mut rj = SparsePoly::one(f.n());
    let mut j = 0u32;
    while !lf.is_zero() {
        let denom = pow(&int(4), j as i32) * factorial(j) * rising(&base, j);
        out += &(&rj * &lf).scale(&(Rational::one() / denom));
        lf = lap(&lf);
        rj = &rj * r2;
        j += 1;
    }
    out
}

/// `E_eta = sum_m r^{2m} Y_{|eta|-2m}` with `Delta_A Y = 0`.
pub fn harmonic_decomposition_a(jack: &JackBasis, eta: &[u32]) -> Result<Vec<HarmonicPiece>> {
    let n = jack.n();
    let ctx = jack.context();
    let lam = lambda_a(n, jack.alpha());
    let r2 = r_squared(n, 2);
    let lap = |f: &SparsePoly| ctx.apply_laplacian(f);
    let w = weight(eta);
    let mut lm = (*jack.get(eta)?).clone();
    let mut out = Vec::new();
    for m in 0..=w / 2 {
        let k = w - 2 * m;
        let denom = pow(&int(4), m as i32) * factorial(m) * rising(&(&lam + int(k as i64)), m);
        let y = harmonic_projection(&lm, k, &lam, &r2, &lap).scale(&(Rational::one() / denom));
        out.push(HarmonicPiece { m, degree: k, harmonic: y });
        lm = lap(&lm);
    }
    Ok(out)
}

/// `E_eta(y) = sum_m (sum y)^m Y^B_{|eta|-m}` with `sum_i B_i Y^B = 0`.
pub fn harmonic_decomposition_b(lag: &LaguerreBasis, eta: &[u32]) -> Result<Vec<HarmonicPiece>> {
    let jack = lag.jack();
    let n = jack.n();
    let ctx = lag.context();
    let lam = lambda_b(n, jack.alpha(), lag.a());
    let r2 = r_squared(n, 1);
    let lap = |f: &SparsePoly| ctx.apply_sum_b(f).scale(&int(4));
    let w = weight(eta);
    let mut lm = (*jack.get(eta)?).clone();
    let mut out = Vec::new();
    for m in 0..=w {
        let k = w - m;
        let denom = pow(&int(4), m as i32) * factorial(m) * rising(&(&lam + int(2 * k as i64)), m);
        let y = harmonic_projection(&lm, 2 * k, &lam, &r2, &lap).scale(&(Rational::one() / denom));
        out.push(HarmonicPiece { m, degree: k, harmonic: y });
        lm = lap(&lm);
    }
    Ok(out)
}

/// `sum_m r^{2m} Y_m` for a decomposition; `r^2 = sum x_i^2` (type A) or `sum y_i` (type B).
pub fn reassemble(pieces: &[HarmonicPiece], n: usize, type_b: bool) -> SparsePoly {
    let r2 = r_squared(n, if type_b { 1 } else { 2 });
    pieces.iter().fold(SparsePoly::zero(n), |acc, p| acc + &r2.pow(p.m) * &p.harmonic)
}

/// Generalized Laguerre polynomial `L_m^(c)` evaluated at the polynomial `x`.
pub fn laguerre_1d(m: u32, c: &Rational, x: &SparsePoly) -> SparsePoly {
    let mut out = SparsePoly::zero(x.n());
    let mut xk = SparsePoly::one(x.n());
    for k in 0..=m {
        let coeff = sign_pow(k) * binomial(&(c + int(m as i64)), m - k) / factorial(k);
        out += &xk.scale(&coeff);
        xk = &xk * x;
    }
    out
}

/// `sum_m (-1)^m m! L_m^{(|eta| - 2m + lambda - 1)}(r^2) Y_{|eta|-2m}`.
pub fn hermite_from_harmonics(pieces: &[HarmonicPiece], n: usize, alpha: &Rational) -> SparsePoly {
    let lam = lambda_a(n, alpha);
    let r2 = r_squared(n, 2);
    pieces.iter().fold(SparsePoly::zero(n), |acc, p| {
        let c = int(p.degree as i64) + &lam - int(1);
        let l = laguerre_1d(p.m, &c, &r2).scale(&(sign_pow(p.m) * factorial(p.m)));
        acc + &l * &p.harmonic
    })
}

/// `sum_m (-1)^m m! L_m^{(2k + lambda_B - 1)}(sum y) Y^B_k`, where `2k` is the degree of `Y^B_k` in `x`.
pub fn laguerre_from_harmonics(pieces: &[HarmonicPiece], n: usize, alpha: &Rational, a: &Rational) -> SparsePoly {
    let lam = lambda_b(n, alpha, a);
    let r2 = r_squared(n, 1);
    pieces.iter().fold(SparsePoly::zero(n), |acc, p| {
        let c = int(2 * p.degree as i64) + &lam - int(1);
        let l = laguerre_1d(p.m, &c, &r2).scale(&(sign_pow(p.m) * factorial(p.m)));
        acc + &l * &p.harmonic
    })
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
    fn hermite_example() {
        for a in alphas() {
            let h = HermiteBasis::new(Arc::new(JackBasis::new(2, a.clone())));
            let expected = x(2, 0) * x(2, 1) + SparsePoly::constant(2, int(1) / (int(2) * &a));
            assert_eq!(*h.get(&[1, 1]).unwrap(), expected);
        }
    }

    #[test]
    fn laguerre_example() {
        for a in alphas() {
            for la in [int(0), rat(1, 2), int(1)] {
                let l = LaguerreBasis::new(Arc::new(JackBasis::new(2, a.clone())), la.clone());
                let q = l.q();
                let expected = x(2, 0) + x(2, 1).scale(&(int(1) / (&a + int(1))))
                    - SparsePoly::constant(2, (&la + &q) * (&a + int(2)) / (&a + int(1)));
                assert_eq!(*l.get(&[1, 0]).unwrap(), expected);
                assert_eq!(l.get(&[1, 0]).unwrap().constant_coeff(), laguerre_at_zero(&[1, 0], &a, &la));
            }
        }
    }

    #[test]
    fn ratio_example() {
        for a in alphas() {
            assert_eq!(hermite_norm_ratio(&[1, 0], &a), (&a + int(2)) / (int(2) * (&a + int(1))));
        }
    }

    #[test]
    fn one_variable_laguerre() {
        // 2 L_2^a(y) = y^2 - 2(a+2) y + (a+1)(a+2)
        let a = rat(1, 2);
        let y = x(1, 0);
        let l2 = laguerre_1d(2, &a, &y).scale(&int(2));
        let expected =
            y.pow(2) - y.scale(&(int(2) * (&a + int(2)))) + SparsePoly::constant(1, (&a + int(1)) * (&a + int(2)));
        assert_eq!(l2, expected);
    }
}
