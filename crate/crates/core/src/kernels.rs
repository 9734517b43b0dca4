//! Degree-truncated kernels, hypergeometric series, generalized binomial
//! coefficients and the polynomial identities relating them.
//!
//! A kernel is one polynomial in `2n` variables: `x` occupies slots `0..n`
//! and the second argument occupies `n..2n`. Identity checks compare both
//! sides only on the bidegrees that the truncation leaves complete, and
//! return `None` on agreement or a description of the first failing bidegree.

use std::collections::BTreeMap;
use std::fmt;

use num::{One, Zero};

use crate::combinatorics::{
    compositions, compositions_up_to, d2_eigenvalue, eta_plus, generalized_factorial, hook_norm_j, is_partition,
    jack_j_at_ones, partitions, weight, Composition, EtaConstants,
};
use crate::error::{Error, Result};
use crate::hermite_laguerre::{hermite_norm_ratio, laguerre_norm_ratio, q_param, HermiteBasis, LaguerreBasis};
use crate::jack::JackBasis;
use crate::operators::commutator;
use crate::poly::SparsePoly;
use crate::rational::{factorial, format_rational, int, pow, rat, series_binomial, sign_pow, Rational};

/// `None` when an identity holds, otherwise where and how it fails.
pub type Mismatch = Option<String>;

pub fn x_degree(e: &[i32], n: usize) -> i32 {
    e[..n].iter().sum()
}

pub fn y_degree(e: &[i32], n: usize) -> i32 {
    e[n..].iter().sum()
}

/// `sum_eta c_eta E_eta(x) E_eta(y)` over `|eta| <= D`.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedKernel {
    n: usize,
    degree: u32,
    poly: SparsePoly,
}

impl TruncatedKernel {
    pub fn new(n: usize, degree: u32, poly: SparsePoly) -> Self {
        assert_eq!(poly.n(), 2 * n);
        TruncatedKernel { n, degree, poly }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn poly(&self) -> &SparsePoly {
        &self.poly
    }

    /// Bidegree `(d, d)` part.
    pub fn slice(&self, d: u32) -> SparsePoly {
        let n = self.n;
        self.poly.filter(|e| x_degree(e, n) == d as i32)
    }

    /// The kernel with its two argument blocks exchanged.
    pub fn swap_blocks(&self) -> SparsePoly {
        swap_blocks(&self.poly, self.n)
    }

    pub fn eval_f64(&self, x: &[f64], y: &[f64]) -> f64 {
        let point: Vec<f64> = x.iter().chain(y).copied().collect();
        self.poly.eval_num(&point)
    }
}

pub fn swap_blocks(p: &SparsePoly, n: usize) -> SparsePoly {
    let perm: Vec<usize> = (n..2 * n).chain(0..n).collect();
    p.permute_vars(&perm)
}

/// `E_eta(x) E_eta(y)` in `2n` variables.
fn pair_product(basis: &JackBasis, eta: &[u32]) -> Result<SparsePoly> {
    let n = basis.n();
    let e = basis.get(eta)?;
    Ok(&e.embed(2 * n, 0) * &e.embed(2 * n, n))
}

/// `alpha^{|eta|} d_eta / (d'_eta e_eta)`.
pub fn kernel_a_coefficient(eta: &[u32], alpha: &Rational) -> Rational {
    let c = EtaConstants::new(eta, alpha);
    pow(alpha, weight(eta) as i32) * c.d / (c.d_prime * c.e)
}

/// Type of the series: `A` uses the plain coefficient, `B` adds `1/[a+q]_eta`.
#[derive(Debug, Clone, PartialEq)]
pub enum SeriesVariant {
    A,
    B { a: Rational },
}

/// `alpha^{|eta|} d/(d' e) prod [up]_eta / prod [down]_eta`.
pub fn series_coefficient(eta: &[u32], alpha: &Rational, up: &[Rational], down: &[Rational]) -> Result<Rational> {
    let mut c = kernel_a_coefficient(eta, alpha);
    for u in up {
        c *= generalized_factorial(u, eta, alpha);
    }
    for l in down {
        let f = generalized_factorial(l, eta, alpha);
        if f.is_zero() {
            return Err(Error::ParameterSingularity {
                eta: eta.to_vec(),
                reason: format!("[{}]_eta vanishes", format_rational(l)),
            });
        }
        c /= f;
    }
    Ok(c)
}

fn build_series(
    basis: &JackBasis,
    degree: u32,
    coefficient: impl Fn(&[u32]) -> Result<Rational>,
) -> Result<TruncatedKernel> {
    let n = basis.n();
    let mut poly = SparsePoly::zero(2 * n);
    for eta in compositions_up_to(n, degree) {
        let c = coefficient(&eta)?;
        if !c.is_zero() {
            poly += &pair_product(basis, &eta)?.scale(&c);
        }
    }
    Ok(TruncatedKernel::new(n, degree, poly))
}

pub fn kernel_series(
    basis: &JackBasis,
    up: &[Rational],
    down: &[Rational],
    degree: u32,
    variant: &SeriesVariant,
) -> Result<TruncatedKernel> {
    let alpha = basis.alpha().clone();
    let mut down = down.to_vec();
    if let SeriesVariant::B { a } = variant {
        down.push(a + q_param(basis.n(), &alpha));
    }
    build_series(basis, degree, |eta| series_coefficient(eta, &alpha, up, &down))
}

pub fn kernel_a(basis: &JackBasis, degree: u32) -> Result<TruncatedKernel> {
    kernel_series(basis, &[], &[], degree, &SeriesVariant::A)
}

pub fn kernel_b(basis: &JackBasis, a: &Rational, degree: u32) -> Result<TruncatedKernel> {
    kernel_series(basis, &[], &[], degree, &SeriesVariant::B { a: a.clone() })
}

/// Symmetric series `sum_kappa alpha^{|kappa|} J_kappa(x) J_kappa(y) / (j_kappa J_kappa(1^n))`.
pub fn hypergeometric_0f0(basis: &JackBasis, degree: u32) -> Result<TruncatedKernel> {
    let n = basis.n();
    let alpha = basis.alpha();
    let mut poly = SparsePoly::zero(2 * n);
    for w in 0..=degree {
        for kappa in partitions(w, n) {
            let kappa = pad(&kappa, n);
            let j = basis.jack_j(&kappa)?;
            let c = pow(alpha, w as i32) / (hook_norm_j(&kappa, alpha) * jack_j_at_ones(&kappa, n, alpha));
            poly += &(&j.embed(2 * n, 0) * &j.embed(2 * n, n)).scale(&c);
        }
    }
    Ok(TruncatedKernel::new(n, degree, poly))
}

fn pad(kappa: &[u32], n: usize) -> Composition {
    let mut k = kappa.to_vec();
    k.resize(n, 0);
    k
}

/// Parameters a kernel family may require.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct KernelParams {
    pub a: Option<Rational>,
    pub b: Option<Rational>,
    pub c: Option<Rational>,
}

impl KernelParams {
    fn need(&self, which: char, family: &str) -> Result<Rational> {
        let v = match which {
            'a' => &self.a,
            'b' => &self.b,
            _ => &self.c,
        };
        v.clone().ok_or_else(|| Error::UnsupportedParameter(format!("kernel {family} needs parameter {which}")))
    }
}

/// A named kernel construction.
pub trait KernelFamily: Send + Sync + fmt::Debug {
    fn name(&self) -> &str;
    fn build(&self, basis: &JackBasis, degree: u32) -> Result<TruncatedKernel>;
}

#[derive(Debug)]
struct NonsymmetricSeries {
    name: &'static str,
    up: Vec<Rational>,
    down: Vec<Rational>,
    variant: SeriesVariant,
}

impl KernelFamily for NonsymmetricSeries {
    fn name(&self) -> &str {
        self.name
    }

    fn build(&self, basis: &JackBasis, degree: u32) -> Result<TruncatedKernel> {
        kernel_series(basis, &self.up, &self.down, degree, &self.variant)
    }
}

#[derive(Debug)]
struct SymmetricZeroFZero;

impl KernelFamily for SymmetricZeroFZero {
    fn name(&self) -> &str {
        "0F0"
    }

    fn build(&self, basis: &JackBasis, degree: u32) -> Result<TruncatedKernel> {
        hypergeometric_0f0(basis, degree)
    }
}

type FamilyConstructor = fn(&KernelParams) -> Result<Box<dyn KernelFamily>>;

fn series(name: &'static str, up: Vec<Rational>, down: Vec<Rational>, variant: SeriesVariant) -> Box<dyn KernelFamily> {
    Box::new(NonsymmetricSeries { name, up, down, variant })
}

/// Registered kernel families, by name.
pub const KERNEL_FAMILIES: &[(&str, FamilyConstructor)] = &[
    ("A", |_| Ok(series("A", vec![], vec![], SeriesVariant::A))),
    ("B", |p| Ok(series("B", vec![], vec![], SeriesVariant::B { a: p.need('a', "B")? }))),
    ("0F0", |_| Ok(Box::new(SymmetricZeroFZero))),
    ("1K1", |p| Ok(series("1K1", vec![p.need('a', "1K1")?], vec![p.need('c', "1K1")?], SeriesVariant::A))),
    ("2K1", |p| {
        let up = vec![p.need('a', "2K1")?, p.need('b', "2K1")?];
        Ok(series("2K1", up, vec![p.need('c', "2K1")?], SeriesVariant::A))
    }),
];

pub fn kernel_family(name: &str, params: &KernelParams) -> Result<Box<dyn KernelFamily>> {
    KERNEL_FAMILIES
        .iter()
        .find(|(n, _)| n.eq_ignore_ascii_case(name))
        .ok_or_else(|| Error::UnsupportedParameter(format!("unknown kernel family {name}")))
        .and_then(|(_, make)| make(params))
}

/// Coefficients `binom(eta, nu)` for all `nu`, from `E_eta(1 + z)/E_eta(1^n) = sum binom(eta, nu) E_nu(z)/E_nu(1^n)`.
pub fn binomial_row(basis: &JackBasis, eta: &[u32]) -> Result<BTreeMap<Composition, Rational>> {
    let n = basis.n();
    let e1 = basis.eval_ones(eta)?;
    let shifted = basis.get(eta)?.shift_by_one(0..n);
    let mut row = BTreeMap::new();
    for (nu, c) in basis.expand(&shifted)? {
        let v = c * basis.eval_ones(&nu)? / &e1;
        row.insert(nu, v);
    }
    Ok(row)
}

pub fn binomial_coeff(basis: &JackBasis, eta: &[u32], nu: &[u32]) -> Result<Rational> {
    if nu.len() != basis.n() {
        return Err(Error::Dimension { expected: basis.n(), found: nu.len() });
    }
    Ok(binomial_row(basis, eta)?.remove(nu).unwrap_or_else(Rational::zero))
}

/// `binom(eta, nu)` computed in `n1` and in `n2` variables, with trailing zeros appended.
pub fn binomial_n_independence(
    alpha: &Rational,
    eta: &[u32],
    nu: &[u32],
    n1: usize,
    n2: usize,
) -> Result<(Rational, Rational)> {
    let mut out = Vec::new();
    for n in [n1, n2] {
        let support = |c: &[u32]| c.iter().rposition(|&x| x != 0).map_or(0, |p| p + 1);
        if support(eta) > n || support(nu) > n {
            return Err(Error::Dimension { expected: n, found: support(eta).max(support(nu)) });
        }
        let pad_to = |c: &[u32]| {
            let mut v: Vec<u32> = c.iter().copied().take(n).collect();
            v.resize(n, 0);
            v
        };
        let basis = JackBasis::new(n, alpha.clone());
        out.push(binomial_coeff(&basis, &pad_to(eta), &pad_to(nu))?);
    }
    let second = out.pop().expect("two values");
    Ok((out.pop().expect("two values"), second))
}

/// All `binom(eta, nu)` with `|nu| <= |eta| <= D`.
#[derive(Debug, Clone)]
pub struct BinomialTable {
    n: usize,
    max_degree: u32,
    rows: BTreeMap<Composition, BTreeMap<Composition, Rational>>,
}

impl BinomialTable {
    pub fn new(basis: &JackBasis, max_degree: u32) -> Result<Self> {
        let mut rows = BTreeMap::new();
        for eta in compositions_up_to(basis.n(), max_degree) {
            let row = binomial_row(basis, &eta)?;
            rows.insert(eta, row);
        }
        Ok(BinomialTable { n: basis.n(), max_degree, rows })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn get(&self, eta: &[u32], nu: &[u32]) -> Rational {
        self.rows.get(eta).and_then(|r| r.get(nu)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn row(&self, eta: &[u32]) -> Option<&BTreeMap<Composition, Rational>> {
        self.rows.get(eta)
    }
}

/// Symmetric coefficients from `J_kappa(1 + z)/J_kappa(1^n) = sum binom(kappa, sigma) J_sigma(z)/J_sigma(1^n)`.
pub fn symmetric_binomial_row(basis: &JackBasis, kappa: &[u32]) -> Result<BTreeMap<Composition, Rational>> {
    let n = basis.n();
    let alpha = basis.alpha();
    let kappa = pad(&eta_plus(kappa), n);
    let jk1 = jack_j_at_ones(&kappa, n, alpha);
    let shifted = basis.jack_j(&kappa)?.shift_by_one(0..n);
    let mut row = BTreeMap::new();
    for (nu, c) in basis.expand(&shifted)? {
        if !is_partition(&nu) {
            continue;
        }
        let j_coeff = c * EtaConstants::new(&nu, alpha).d_prime / hook_norm_j(&nu, alpha);
        row.insert(nu.clone(), j_coeff * jack_j_at_ones(&nu, n, alpha) / &jk1);
    }
    Ok(row)
}

/// Smallest failing bidegree of `lhs - rhs` among the kept exponents.
pub fn compare_graded(lhs: &SparsePoly, rhs: &SparsePoly, n: usize, keep: impl Fn(i32, i32) -> bool) -> Mismatch {
    let diff = (lhs - rhs).filter(|e| keep(x_degree(e, n), y_degree(e, n)));
    let (dx, dy) = diff.terms().map(|(e, _)| (x_degree(e, n), y_degree(e, n))).min()?;
    let part = diff.filter(|e| x_degree(e, n) == dx && y_degree(e, n) == dy);
    Some(format!("bidegree ({dx},{dy}): lhs - rhs = {}", abbreviate(&part)))
}

/// Smallest failing total degree of `lhs - rhs` up to `max_degree`.
pub fn compare_by_degree(lhs: &SparsePoly, rhs: &SparsePoly, max_degree: i32) -> Mismatch {
    let n = lhs.n();
    let diff = (lhs - rhs).filter(|e| x_degree(e, n) <= max_degree);
    let d = diff.terms().map(|(e, _)| x_degree(e, n)).min()?;
    Some(format!("degree {d}: lhs - rhs = {}", abbreviate(&diff.filter(|e| x_degree(e, n) == d))))
}

fn abbreviate(p: &SparsePoly) -> String {
    const MAX_TERMS: usize = 4;
    let shown: Vec<String> =
        p.terms().take(MAX_TERMS).map(|(e, c)| format!("{}*x^{:?}", format_rational(c), e.as_slice())).collect();
    let more = p.len().saturating_sub(MAX_TERMS);
    if more > 0 {
        format!("{} + ({more} more terms)", shown.join(" + "))
    } else {
        shown.join(" + ")
    }
}

fn first_failure(checks: impl IntoIterator<Item = Result<Mismatch>>) -> Result<Mismatch> {
    for c in checks {
        if let Some(m) = c? {
            return Ok(Some(m));
        }
    }
    Ok(None)
}

fn label(prefix: &str, m: Mismatch) -> Mismatch {
    m.map(|s| format!("{prefix}: {s}"))
}

/// `exp(p)` truncated by `keep`; `p` must have no constant term in the graded variables.
pub fn exp_truncated(p: &SparsePoly, keep: &dyn Fn(&[i32]) -> bool) -> SparsePoly {
    let mut out = SparsePoly::one(p.n());
    let mut term = SparsePoly::one(p.n());
    let mut k = 0i64;
    loop {
        k += 1;
        term = term.mul_truncated(p, keep).scale(&(Rational::one() / int(k)));
        if term.is_zero() {
            return out.filter(keep);
        }
        out += &term;
    }
}

/// `prod_i (1 - z_i)^{-c}` over block `range`, truncated at block degree `max_degree`.
fn inverse_power_product(ambient: usize, range: std::ops::Range<usize>, c: &Rational, max_degree: u32) -> SparsePoly {
    let coeffs = series_binomial(c, max_degree as usize);
    let keep = |e: &[i32]| e[range.clone()].iter().sum::<i32>() <= max_degree as i32;
    let mut out = SparsePoly::one(ambient);
    for v in range.clone() {
        let mut f = SparsePoly::zero(ambient);
        for (k, ck) in coeffs.iter().enumerate() {
            let mut e = vec![0; ambient];
            e[v] = k as i32;
            f.add_term(e.into(), ck.clone());
        }
        out = out.mul_truncated(&f, &keep);
    }
    out
}

/// Reflection, Dunkl and raising/lowering properties of `K_A`:
/// `s_i^(y) K = s_i^(x) K`, `T_i^(y) K = x_i K` and `Phi-hat^(y) K = Phi^(x) K`.
pub fn check_kernel_a_properties(basis: &JackBasis, degree: u32) -> Result<Mismatch> {
    let n = basis.n();
    let k = kernel_a(basis, degree)?;
    let kp = k.poly();
    let cx = basis.context();
    let cy = basis.context().on_block(n);
    let d = degree as i32;
    let mut checks = Vec::new();
    for i in 0..n.saturating_sub(1) {
        let m = compare_graded(&cy.apply_swap(kp, i, i + 1), &cx.apply_swap(kp, i, i + 1), n, |_, _| true);
        checks.push(Ok(label(&format!("s_{i}"), m)));
    }
    for i in 0..n {
        let lhs = cy.apply_dunkl(kp, i);
        let rhs = kp.mul_var(i);
        checks.push(Ok(label(&format!("T_{i}"), compare_graded(&lhs, &rhs, n, |dx, _| dx <= d))));
    }
    let lhs = cy.apply_phi_hat(kp);
    let rhs = cx.apply_phi(kp);
    checks.push(Ok(label("Phi", compare_graded(&lhs, &rhs, n, |dx, _| dx <= d))));
    first_failure(checks)
}

/// `e^{p_1(x)} K_A(x; y) = K_A(x; y + 1)` on x-degrees `<= D`.
pub fn check_shift_identity(basis: &JackBasis, degree: u32) -> Result<Mismatch> {
    let n = basis.n();
    let d = degree as i32;
    let k = kernel_a(basis, degree)?;
    let keep = move |e: &[i32]| x_degree(e, n) <= d;
    let ep1 = exp_truncated(&basis.context().power_sum(2 * n, 1), &keep);
    let lhs = ep1.mul_truncated(k.poly(), &keep);
    let rhs = k.poly().shift_by_one(n..2 * n);
    Ok(compare_graded(&lhs, &rhs, n, |dx, _| dx <= d))
}

/// `sum (2 alpha)^{|eta|} d/(e d') E^(H)_eta(x) E_eta(z) = K_A(2x; z) e^{-p_2(z)}` on z-degrees `<= D`.
pub fn check_hermite_generating_function(hermite: &HermiteBasis, degree: u32) -> Result<Mismatch> {
    let basis = hermite.jack();
    let n = basis.n();
    let alpha = basis.alpha();
    let d = degree as i32;
    let mut lhs = SparsePoly::zero(2 * n);
    for eta in compositions_up_to(n, degree) {
        let c = kernel_a_coefficient(&eta, alpha) * pow(&int(2), weight(&eta) as i32);
        let term = &hermite.get(&eta)?.embed(2 * n, 0) * &basis.get(&eta)?.embed(2 * n, n);
        lhs += &term.scale(&c);
    }
    let keep = move |e: &[i32]| y_degree(e, n) <= d;
    let k2 = kernel_a(basis, degree)?.poly().scale_vars(0..n, &int(2));
    let gauss = exp_truncated(&-basis.context().on_block(n).power_sum(2 * n, 2), &keep);
    let rhs = k2.mul_truncated(&gauss, &keep);
    Ok(compare_graded(&lhs, &rhs, n, |_, dy| dy <= d))
}

/// `Sym^(x) K_A = n! 0F0`.
pub fn check_symmetrization(basis: &JackBasis, degree: u32) -> Result<Mismatch> {
    let n = basis.n();
    let lhs = kernel_a(basis, degree)?.poly().symmetrize(n);
    let rhs = hypergeometric_0f0(basis, degree)?.poly().scale(&factorial(n as u32));
    Ok(compare_graded(&lhs, &rhs, n, |_, _| true))
}

/// `e^{p_1} E_eta alpha^{|eta|}/d'_eta = sum_nu alpha^{|nu|}/d'_nu binom(nu, eta) E_nu` on degrees `<= D`.
pub fn check_shift_expansion(basis: &JackBasis, table: &BinomialTable) -> Result<Mismatch> {
    let n = basis.n();
    let alpha = basis.alpha();
    let d = table.max_degree();
    let keep = move |e: &[i32]| e.iter().sum::<i32>() <= d as i32;
    let ep1 = exp_truncated(&basis.context().power_sum(n, 1), &keep);
    let all = compositions_up_to(n, d);
    for eta in &all {
        let scale = pow(alpha, weight(eta) as i32) / EtaConstants::new(eta, alpha).d_prime;
        let lhs = ep1.mul_truncated(&*basis.get(eta)?, &keep).scale(&scale);
        let mut rhs = SparsePoly::zero(n);
        for nu in &all {
            let b = table.get(nu, eta);
            if !b.is_zero() {
                let c = pow(alpha, weight(nu) as i32) / EtaConstants::new(nu, alpha).d_prime * b;
                rhs += &basis.get(nu)?.scale(&c);
            }
        }
        if let Some(m) = compare_by_degree(&lhs, &rhs, d as i32) {
            return Ok(Some(format!("eta = {eta:?}, {m}")));
        }
    }
    Ok(None)
}

/// `p_1 E_eta = alpha d'_eta sum_{|nu| = |eta|+1} binom(nu, eta)/d'_nu E_nu` for `|eta| < D`.
pub fn check_p1_action(basis: &JackBasis, table: &BinomialTable) -> Result<Mismatch> {
    let n = basis.n();
    let alpha = basis.alpha();
    let p1 = basis.context().power_sum(n, 1);
    for eta in compositions_up_to(n, table.max_degree().saturating_sub(1)) {
        let lhs = &p1 * &*basis.get(&eta)?;
        let mut rhs = SparsePoly::zero(n);
        for nu in compositions(n, weight(&eta) + 1) {
            let b = table.get(&nu, &eta);
            if !b.is_zero() {
                rhs += &basis.get(&nu)?.scale(&(b / EtaConstants::new(&nu, alpha).d_prime));
            }
        }
        rhs = rhs.scale(&(alpha * EtaConstants::new(&eta, alpha).d_prime));
        if lhs != rhs {
            return Ok(Some(format!("eta = {eta:?}: {}", compare_by_degree(&lhs, &rhs, i32::MAX).unwrap_or_default())));
        }
    }
    Ok(None)
}

/// `D~_2 E_eta = eps_eta E_eta` and the actions of `E~_0`, `E~_2` and `D~_1` in terms of binomial coefficients.
pub fn check_operator_actions(basis: &JackBasis, table: &BinomialTable) -> Result<Mismatch> {
    let n = basis.n();
    let alpha = basis.alpha();
    let ctx = basis.context();
    let eps = |eta: &[u32]| d2_eigenvalue(eta, n, alpha);
    let shift = int(2) / alpha * int(n as i64 - 1);
    let d = table.max_degree();
    for eta in compositions_up_to(n, d) {
        let e = basis.get(&eta)?;
        let e1 = basis.eval_ones(&eta)?;
        let w = weight(&eta);
        if ctx.apply_d_tilde2(&e) != e.scale(&eps(&eta)) {
            return Ok(Some(format!("D~_2 eigenvalue, eta = {eta:?}")));
        }
        let mut lower = SparsePoly::zero(n);
        let mut lower_d1 = SparsePoly::zero(n);
        if w > 0 {
            for nu in compositions(n, w - 1) {
                let b = table.get(&eta, &nu);
                if b.is_zero() {
                    continue;
                }
                let en = basis.get(&nu)?.scale(&(Rational::one() / basis.eval_ones(&nu)?));
                lower += &en.scale(&b);
                lower_d1 += &en.scale(&(b * (eps(&eta) - eps(&nu)) / int(2)));
            }
        }
        let normalized = e.scale(&(Rational::one() / &e1));
        if ctx.apply_euler(&normalized, 0) != lower {
            return Ok(Some(format!("E~_0 action, eta = {eta:?}")));
        }
        if ctx.apply_d_tilde1(&normalized) != lower_d1 {
            return Ok(Some(format!("D~_1 action, eta = {eta:?}")));
        }
        if w < d {
            let mut raise = SparsePoly::zero(n);
            for nu in compositions(n, w + 1) {
                let b = table.get(&nu, &eta);
                if b.is_zero() {
                    continue;
                }
                let c = b / EtaConstants::new(&nu, alpha).d_prime * (eps(&nu) - eps(&eta) - &shift);
                raise += &basis.get(&nu)?.scale(&c);
            }
            raise = raise.scale(&(alpha / int(2) * EtaConstants::new(&eta, alpha).d_prime));
            if ctx.apply_euler(&e, 2) != raise {
                return Ok(Some(format!("E~_2 action, eta = {eta:?}")));
            }
        }
    }
    Ok(None)
}

/// The second-order equation satisfied by `2K1(a, b; c)`, on bidegrees `(d, d+1)` with `d < D`:
/// `D~_1^(x) F + (c - (n-1)/alpha) E~_0^(x) F - (a + b - (n-1)/alpha) E~_2^(y) F
///  - (1/2)[D~_2, E~_2]^(y) F = a b p_1(y) F`.
pub fn check_hypergeometric_pde(
    basis: &JackBasis,
    degree: u32,
    a: &Rational,
    b: &Rational,
    c: &Rational,
) -> Result<Mismatch> {
    let n = basis.n();
    let alpha = basis.alpha();
    let f = kernel_series(basis, &[a.clone(), b.clone()], std::slice::from_ref(c), degree, &SeriesVariant::A)?;
    let fp = f.poly();
    let cx = basis.context();
    let cy = basis.context().on_block(n);
    let shift = int(n as i64 - 1) / alpha;
    let mut lhs = cx.apply_d_tilde1(fp);
    lhs += &cx.apply_euler(fp, 0).scale(&(c - &shift));
    lhs -= &cy.apply_euler(fp, 2).scale(&(a + b - &shift));
    let bracket = commutator(&cy.d_tilde2(), &cy.euler(2)).apply(fp);
    lhs -= &bracket.scale(&rat(1, 2));
    let rhs = (&cy.power_sum(2 * n, 1) * fp).scale(&(a * b));
    let d = degree as i32;
    Ok(compare_graded(&lhs, &rhs, n, |dx, _| dx < d))
}

/// `sum (-alpha)^{|eta|}/[a+q]_eta d/(d' e) E^(L)_eta(x) E_eta(z) = K_B(x; -z) e^{p_1(z)}` on z-degrees `<= D`.
pub fn check_laguerre_generating_function(laguerre: &LaguerreBasis, degree: u32) -> Result<Mismatch> {
    let basis = laguerre.jack();
    let n = basis.n();
    let alpha = basis.alpha();
    let a = laguerre.a();
    let aq = a + laguerre.q();
    let d = degree as i32;
    let mut lhs = SparsePoly::zero(2 * n);
    for eta in compositions_up_to(n, degree) {
        let c = kernel_a_coefficient(&eta, alpha) * sign_pow(weight(&eta)) / generalized_factorial(&aq, &eta, alpha);
        lhs += &(&laguerre.get(&eta)?.embed(2 * n, 0) * &basis.get(&eta)?.embed(2 * n, n)).scale(&c);
    }
    let keep = move |e: &[i32]| y_degree(e, n) <= d;
    let kb = kernel_b(basis, a, degree)?.poly().scale_vars(n..2 * n, &-Rational::one());
    let ep1 = exp_truncated(&basis.context().on_block(n).power_sum(2 * n, 1), &keep);
    let rhs = kb.mul_truncated(&ep1, &keep);
    Ok(compare_graded(&lhs, &rhs, n, |_, dy| dy <= d))
}

/// `z_i -> z_i/(1 - z_i)` in the second block, truncated at block degree `D`.
fn substitute_geometric(p: &SparsePoly, n: usize, degree: u32) -> SparsePoly {
    let m = 2 * n;
    let keep = move |e: &[i32]| y_degree(e, n) <= degree as i32;
    let images: Vec<SparsePoly> = (0..m)
        .map(|v| {
            if v < n {
                return SparsePoly::var(m, v);
            }
            let mut s = SparsePoly::zero(m);
            for k in 1..=degree.max(1) {
                let mut e = vec![0; m];
                e[v] = k as i32;
                s.add_term(e.into(), Rational::one());
            }
            s
        })
        .collect();
    p.substitute_truncated(&images, &keep)
}

/// `prod (1 - z_i)^{-c-q} 1K1(c+q; a+q; -x; z/(1-z)) = sum (-alpha)^{|eta|} [c+q]_eta/[a+q]_eta d/(d' e) E^(L)_eta(x) E_eta(z)`,
/// and with `c = a` the `K_A` form, both on z-degrees `<= D`.
pub fn check_laguerre_series_generating_functions(
    laguerre: &LaguerreBasis,
    degree: u32,
    c: &Rational,
) -> Result<Mismatch> {
    let basis = laguerre.jack();
    let n = basis.n();
    let alpha = basis.alpha();
    let q = laguerre.q();
    let aq = laguerre.a() + &q;
    let cq = c + &q;
    let d = degree as i32;
    let keep = move |e: &[i32]| y_degree(e, n) <= d;
    let mut out = Vec::new();
    for (tag, up) in [("1K1", Some(cq.clone())), ("K_A", None)] {
        let (ups, downs, prefactor) = match &up {
            Some(u) => (vec![u.clone()], vec![aq.clone()], u.clone()),
            None => (vec![], vec![], aq.clone()),
        };
        let kern = kernel_series(basis, &ups, &downs, degree, &SeriesVariant::A)?;
        let reflected = kern.poly().scale_vars(0..n, &-Rational::one());
        let substituted = substitute_geometric(&reflected, n, degree);
        let rhs = inverse_power_product(2 * n, n..2 * n, &prefactor, degree).mul_truncated(&substituted, &keep);
        let mut lhs = SparsePoly::zero(2 * n);
        for eta in compositions_up_to(n, degree) {
            let mut coef = kernel_a_coefficient(&eta, alpha) * sign_pow(weight(&eta));
            if up.is_some() {
                coef = coef * generalized_factorial(&cq, &eta, alpha) / generalized_factorial(&aq, &eta, alpha);
            }
            lhs += &(&laguerre.get(&eta)?.embed(2 * n, 0) * &basis.get(&eta)?.embed(2 * n, n)).scale(&coef);
        }
        out.push(Ok(label(tag, compare_graded(&lhs, &rhs, n, |_, dy| dy <= d))));
    }
    first_failure(out)
}

/// Laguerre-to-Jack and Jack-to-Laguerre expansions through `binom(eta, nu)`.
pub fn check_laguerre_binomial_expansions(laguerre: &LaguerreBasis, table: &BinomialTable) -> Result<Mismatch> {
    let basis = laguerre.jack();
    let n = basis.n();
    let alpha = basis.alpha();
    let aq = laguerre.a() + laguerre.q();
    let ratio = |nu: &[u32]| {
        let c = EtaConstants::new(nu, alpha);
        generalized_factorial(&aq, nu, alpha) * c.e / c.d
    };
    for eta in compositions_up_to(n, table.max_degree()) {
        let Some(row) = table.row(&eta) else { continue };
        let mut to_jack = SparsePoly::zero(n);
        let mut to_laguerre = SparsePoly::zero(n);
        for (nu, b) in row {
            let r = ratio(nu);
            to_jack += &basis.get(nu)?.scale(&(sign_pow(weight(nu)) * b / &r));
            to_laguerre += &laguerre.get(nu)?.scale(&(b / &r));
        }
        let r = ratio(&eta);
        if *laguerre.get(&eta)? != to_jack.scale(&(sign_pow(weight(&eta)) * &r)) {
            return Ok(Some(format!("Laguerre in Jack basis, eta = {eta:?}")));
        }
        if *basis.get(&eta)? != to_laguerre.scale(&r) {
            return Ok(Some(format!("Jack in Laguerre basis, eta = {eta:?}")));
        }
    }
    Ok(None)
}

/// Binomial coefficient identities up to the table degree: the defining
/// expansion, `binom(eta, eta) = 1`, `binom(eta, 0) = 1`, vanishing for
/// other `|nu| = |eta|`, the sum rule
/// `sum_{nu+ = mu} binom(eta, nu) = binom(eta+, mu)` and the relation
/// `d'_eta j_mu J_kappa(1)/(j_kappa J_mu(1)) sum_{nu+ = mu} binom(nu, eta)/d'_nu = binom(mu, kappa)`.
pub fn check_binomial_identities(basis: &JackBasis, table: &BinomialTable) -> Result<Mismatch> {
    let n = basis.n();
    let d = table.max_degree();
    let zero = vec![0u32; n];
    let mut symmetric: BTreeMap<Composition, BTreeMap<Composition, Rational>> = BTreeMap::new();
    for w in 0..=d {
        for kappa in partitions(w, n) {
            let kappa = pad(&kappa, n);
            let row = symmetric_binomial_row(basis, &kappa)?;
            symmetric.insert(kappa, row);
        }
    }
    let sym = |k: &Composition, m: &Composition| symmetric[k].get(m).cloned().unwrap_or_else(Rational::zero);
    for eta in compositions_up_to(n, d) {
        let w = weight(&eta);
        let row = table.row(&eta).ok_or_else(|| Error::Residual(format!("missing binomial row {eta:?}")))?;
        let mut rebuilt = SparsePoly::zero(n);
        for (nu, b) in row {
            rebuilt += &basis.get(nu)?.scale(&(b / basis.eval_ones(nu)?));
        }
        let target = basis.get(&eta)?.shift_by_one(0..n).scale(&(Rational::one() / basis.eval_ones(&eta)?));
        if rebuilt != target {
            return Ok(Some(format!("defining expansion, eta = {eta:?}")));
        }
        if !table.get(&eta, &eta).is_one() || !table.get(&eta, &zero).is_one() {
            return Ok(Some(format!("binom(eta, eta) or binom(eta, 0) differs from 1, eta = {eta:?}")));
        }
        if compositions(n, w).iter().any(|nu| *nu != eta && !table.get(&eta, nu).is_zero()) {
            return Ok(Some(format!("nonzero binom(eta, nu) with |nu| = |eta|, eta = {eta:?}")));
        }
        let kappa = pad(&eta_plus(&eta), n);
        for mw in 0..=w {
            for mu in partitions(mw, n) {
                let mu = pad(&mu, n);
                let total = compositions(n, mw)
                    .into_iter()
                    .filter(|nu| eta_plus(nu) == mu)
                    .fold(Rational::zero(), |acc, nu| acc + table.get(&eta, &nu));
                if total != sym(&kappa, &mu) {
                    return Ok(Some(format!("sum rule, eta = {eta:?}, mu = {mu:?}")));
                }
            }
        }
        for mw in w..=d {
            for mu in partitions(mw, n) {
                let mu = pad(&mu, n);
                let (lhs, rhs) = symmetric_relation_sides(basis, table, &eta, &mu, true)?;
                if lhs != rhs {
                    return Ok(Some(format!("symmetric relation, eta = {eta:?}, mu = {mu:?}")));
                }
            }
        }
    }
    Ok(None)
}

/// Both sides of
/// `d'_eta j_mu J_kappa(1)/(j_kappa J_mu(1)) sum_{nu+ = mu} w_nu binom(nu, eta)/d'_nu = binom(mu, kappa)`
/// with `kappa = eta+`. `w_nu = E_nu(1^n)/E_eta(1^n)` when `weighted`, else `1`.
pub fn symmetric_relation_sides(
    basis: &JackBasis,
    table: &BinomialTable,
    eta: &[u32],
    mu: &[u32],
    weighted: bool,
) -> Result<(Rational, Rational)> {
    let n = basis.n();
    let alpha = basis.alpha();
    let kappa = pad(&eta_plus(eta), n);
    let mu = pad(&eta_plus(mu), n);
    let e_eta = basis.eval_ones(eta)?;
    let mut total = Rational::zero();
    for nu in compositions(n, weight(&mu)).into_iter().filter(|nu| eta_plus(nu) == mu) {
        let mut term = table.get(&nu, eta) / EtaConstants::new(&nu, alpha).d_prime;
        if weighted {
            term = term * basis.eval_ones(&nu)? / &e_eta;
        }
        total += term;
    }
    let scale = EtaConstants::new(eta, alpha).d_prime * hook_norm_j(&mu, alpha) * jack_j_at_ones(&kappa, n, alpha)
        / (hook_norm_j(&kappa, alpha) * jack_j_at_ones(&mu, n, alpha));
    let row = symmetric_binomial_row(basis, &mu)?;
    Ok((total * scale, row.get(&kappa).cloned().unwrap_or_else(Rational::zero)))
}

/// Formal power series in `t` with polynomial coefficients, truncated at `t^order`.
#[derive(Debug, Clone)]
struct TSeries(Vec<SparsePoly>);

impl TSeries {
    fn zero(ambient: usize, order: usize) -> Self {
        TSeries(vec![SparsePoly::zero(ambient); order + 1])
    }

    fn scalar_series(ambient: usize, coeffs: &[Rational]) -> Self {
        TSeries(coeffs.iter().map(|c| SparsePoly::constant(ambient, c.clone())).collect())
    }

    fn mul(&self, other: &TSeries) -> TSeries {
        let order = self.0.len() - 1;
        let ambient = self.0[0].n();
        let mut out = TSeries::zero(ambient, order);
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate().take(order + 1 - i) {
                if !a.is_zero() && !b.is_zero() {
                    out.0[i + j] += &(a * b);
                }
            }
        }
        out
    }

    /// `exp(self)` for a series with zero constant coefficient.
    fn exp(&self) -> TSeries {
        let order = self.0.len() - 1;
        let ambient = self.0[0].n();
        let mut out = TSeries::zero(ambient, order);
        out.0[0] = SparsePoly::one(ambient);
        let mut term = out.clone();
        for k in 1..=order {
            term = term.mul(self);
            for (o, t) in out.0.iter_mut().zip(&term.0) {
                *o += &t.scale(&(Rational::one() / factorial(k as u32)));
            }
        }
        out
    }
}

/// `(1 - t^step)^{-c}` to order `order`.
fn binomial_series_in(ambient: usize, c: &Rational, step: usize, order: usize) -> TSeries {
    let coeffs = series_binomial(c, order / step);
    let mut v = vec![Rational::zero(); order + 1];
    for (k, ck) in coeffs.into_iter().enumerate() {
        v[k * step] = ck;
    }
    TSeries::scalar_series(ambient, &v)
}

fn compare_series(lhs: &TSeries, rhs: &TSeries) -> Mismatch {
    for (m, (l, r)) in lhs.0.iter().zip(&rhs.0).enumerate() {
        if l != r {
            return Some(format!("t^{m}: lhs - rhs = {}", abbreviate(&(l - r))));
        }
    }
    None
}

/// Mehler-type sum `sum N_0/N_eta E^(H)_eta(w) E^(H)_eta(z) t^{|eta|}` against
/// `(1-t^2)^{-nq/2} exp(-t^2/(1-t^2)(p_2(z)+p_2(w))) K_A(2wt/(1-t^2)^{1/2}; z/(1-t^2)^{1/2})`
/// as series in `t` to `t^order`.
pub fn check_hermite_summation(hermite: &HermiteBasis, order: u32) -> Result<Mismatch> {
    let basis = hermite.jack();
    let n = basis.n();
    let m = 2 * n;
    let alpha = basis.alpha();
    let ord = order as usize;
    let mut lhs = TSeries::zero(m, ord);
    for eta in compositions_up_to(n, order) {
        let h = hermite.get(&eta)?;
        let term = (&h.embed(m, 0) * &h.embed(m, n)).scale(&(Rational::one() / hermite_norm_ratio(&eta, alpha)));
        lhs.0[weight(&eta) as usize] += &term;
    }
    let q = q_param(n, alpha);
    let prefactor = binomial_series_in(m, &(int(n as i64) * q / int(2)), 2, ord);
    let p2 = basis.context().power_sum(m, 2) + basis.context().on_block(n).power_sum(m, 2);
    let mut u = TSeries::zero(m, ord);
    for k in (2..=ord).step_by(2) {
        u.0[k] = -&p2;
    }
    let gauss = u.exp();
    let kern = kernel_a(basis, order)?;
    let mut kseries = TSeries::zero(m, ord);
    for d in 0..=order {
        let slice = kern.slice(d).scale(&pow(&int(2), d as i32));
        let geometric = binomial_series_in(m, &int(d as i64), 2, ord);
        for (k, g) in geometric.0.iter().enumerate() {
            if d as usize + k <= ord {
                kseries.0[d as usize + k] += &(&slice * g);
            }
        }
    }
    let rhs = prefactor.mul(&gauss).mul(&kseries);
    Ok(compare_series(&lhs, &rhs))
}

/// Laguerre analogue: `sum N_0/N_eta E^(L)_eta(x) E^(L)_eta(y) t^{|eta|}` against
/// `(1-t)^{-n(a+q)} exp(-t/(1-t)(p_1(x)+p_1(y))) K_B(y/(1-t); tx/(1-t))`.
pub fn check_laguerre_summation(laguerre: &LaguerreBasis, order: u32) -> Result<Mismatch> {
    let basis = laguerre.jack();
    let n = basis.n();
    let m = 2 * n;
    let alpha = basis.alpha();
    let a = laguerre.a();
    let ord = order as usize;
    let mut lhs = TSeries::zero(m, ord);
    for eta in compositions_up_to(n, order) {
        let l = laguerre.get(&eta)?;
        let term = (&l.embed(m, 0) * &l.embed(m, n)).scale(&(Rational::one() / laguerre_norm_ratio(&eta, alpha, a)));
        lhs.0[weight(&eta) as usize] += &term;
    }
    let prefactor = binomial_series_in(m, &(int(n as i64) * (a + laguerre.q())), 1, ord);
    let p1 = basis.context().power_sum(m, 1) + basis.context().on_block(n).power_sum(m, 1);
    let mut u = TSeries::zero(m, ord);
    for k in 1..=ord {
        u.0[k] = -&p1;
    }
    let damping = u.exp();
    let kern = kernel_b(basis, a, order)?;
    let mut kseries = TSeries::zero(m, ord);
    for d in 0..=order {
        let slice = swap_blocks(&kern.slice(d), n);
        let geometric = binomial_series_in(m, &int(2 * d as i64), 1, ord);
        for (k, g) in geometric.0.iter().enumerate() {
            if d as usize + k <= ord {
                kseries.0[d as usize + k] += &(&slice * g);
            }
        }
    }
    let rhs = prefactor.mul(&damping).mul(&kseries);
    Ok(compare_series(&lhs, &rhs))
}

/// Largest `|K_A(x;y)| - e^{n X Y}` over the given points, where `X`, `Y` are the max-norms.
pub fn kernel_bound_excess(kernel: &TruncatedKernel, points: &[(Vec<f64>, Vec<f64>)]) -> f64 {
    let n = kernel.n() as f64;
    points
        .iter()
        .map(|(x, y)| {
            let xm = x.iter().fold(0.0f64, |m, v| m.max(v.abs()));
            let ym = y.iter().fold(0.0f64, |m, v| m.max(v.abs()));
            kernel.eval_f64(x, y).abs() - (n * xm * ym).exp()
        })
        .fold(f64::NEG_INFINITY, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_variable_kernel_is_exponential() {
        let b = JackBasis::new(1, rat(1, 2));
        let k = kernel_a(&b, 3).unwrap();
        for d in 0..=3 {
            let expected = SparsePoly::monomial(vec![d, d].into(), Rational::one() / factorial(d as u32));
            assert_eq!(k.slice(d as u32), expected);
        }
    }

    #[test]
    fn degree_zero_kernel_is_one() {
        let b = JackBasis::new(2, int(1));
        assert_eq!(*kernel_a(&b, 0).unwrap().poly(), SparsePoly::one(4));
    }

    #[test]
    fn binomial_examples() {
        for alpha in [int(1), int(2), rat(1, 2), rat(7, 5)] {
            let b = JackBasis::new(2, alpha.clone());
            let one = Rational::one();
            assert_eq!(binomial_coeff(&b, &[1, 1], &[1, 0]).unwrap(), (&alpha + int(2)) / (&alpha + &one));
            assert_eq!(binomial_coeff(&b, &[1, 1], &[0, 1]).unwrap(), &alpha / (&alpha + &one));
            assert_eq!(binomial_coeff(&b, &[2, 1], &[2, 1]).unwrap(), one);
        }
    }

    #[test]
    fn n_independence_examples() {
        let alpha = rat(1, 2);
        let (x, y) = binomial_n_independence(&alpha, &[1, 1], &[1, 0], 2, 3).unwrap();
        assert_eq!(x, y);
        let (x, y) = binomial_n_independence(&alpha, &[2, 0], &[1, 0], 2, 4).unwrap();
        assert_eq!(x, y);
    }

    #[test]
    fn singular_down_parameter_is_reported() {
        let b = JackBasis::new(2, int(1));
        let err = kernel_series(&b, &[], &[int(0)], 1, &SeriesVariant::A).unwrap_err();
        assert!(matches!(err, Error::ParameterSingularity { .. }));
    }

    #[test]
    fn registry_resolves_names() {
        for (name, _) in KERNEL_FAMILIES {
            let params = KernelParams { a: Some(rat(1, 2)), b: Some(rat(1, 3)), c: Some(rat(13, 7)) };
            assert_eq!(kernel_family(name, &params).unwrap().name(), *name);
        }
        assert!(kernel_family("B", &KernelParams::default()).is_err());
        assert!(kernel_family("X", &KernelParams::default()).is_err());
    }
}
