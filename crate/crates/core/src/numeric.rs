//! Floating-point quadrature for the Hermite and Laguerre measures with `n <= 2`.
//!
//! The interaction factor `|x_1 - x_2|^{2/alpha}` is absorbed into the Gauss
//! weight after folding the domain across the diagonal, so each panel
//! integrand is smooth and polynomial integrands are integrated exactly.
//!
//! Hermite, `n = 2`: rotate to `u = (x_1 - x_2)/sqrt 2`, `v = (x_1 + x_2)/sqrt 2`,
//! fold `u -> |u|`, put `s = u^2` (Gauss-Laguerre with parameter `(beta-1)/2`)
//! and use Gauss-Hermite in `v`.
//!
//! Laguerre, `n = 2`: `y_1 = r(1+u)/2`, `y_2 = r(1-u)/2`; Gauss-Laguerre with
//! parameter `2a + beta + 1` in `r`, and after folding `u` and putting
//! `w = u^2 = (1+v)/2`, Gauss-Jacobi `(a, (beta-1)/2)` in `v`.

use std::f64::consts::PI;

use num::complex::Complex64;
use serde::Serialize;
use statrs::function::gamma::{gamma, ln_gamma};

use crate::combinatorics::{compositions_up_to, generalized_factorial, weight, Composition};
use crate::error::{Error, Result};
use crate::hermite_laguerre::{q_param, HermiteBasis, LaguerreBasis};
use crate::jack::JackBasis;
use crate::kernels::{kernel_a_coefficient, series_coefficient};
use crate::poly::SparsePoly;
use crate::rational::{format_rational, to_f64, Rational};

/// Nodes and weights of a one-dimensional Gauss rule.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

/// Gauss rule from the Jacobi matrix of a three-term recurrence.
///
/// Implicit QL with Wilkinson shifts on the tridiagonal matrix, tracking only
/// the first component of each eigenvector.
pub fn golub_welsch(diag: &[f64], offdiag: &[f64], mu0: f64) -> GaussRule {
    let m = diag.len();
    let mut d = diag.to_vec();
    let mut e: Vec<f64> = offdiag.iter().copied().chain(std::iter::repeat(0.0)).take(m).collect();
    let mut z = vec![0.0; m];
    if m > 0 {
        z[0] = 1.0;
    }
    for l in 0..m {
        let mut iter = 0;
        loop {
            let mut k = l;
            while k + 1 < m {
                let dd = d[k].abs() + d[k + 1].abs();
                if e[k].abs() <= f64::EPSILON * dd {
                    break;
                }
                k += 1;
            }
            if k == l {
                break;
            }
            iter += 1;
            assert!(iter <= 100, "QL iteration did not converge");
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[k] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut deflated = false;
            for i in (l..k).rev() {
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[k] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                let f = z[i + 1];
                z[i + 1] = s * z[i] + c * f;
                z[i] = c * z[i] - s * f;
            }
            if deflated {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[k] = 0.0;
        }
    }
    let mut pairs: Vec<(f64, f64)> = d.into_iter().zip(z).map(|(x, v)| (x, mu0 * v * v)).collect();
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
    GaussRule { nodes: pairs.iter().map(|p| p.0).collect(), weights: pairs.iter().map(|p| p.1).collect() }
}

/// Weight `e^{-x^2}` on the real line.
pub fn gauss_hermite(m: usize) -> GaussRule {
    let off: Vec<f64> = (1..m).map(|k| (k as f64 / 2.0).sqrt()).collect();
    golub_welsch(&vec![0.0; m], &off, PI.sqrt())
}

/// Weight `x^beta e^{-x}` on `[0, inf)`.
pub fn gauss_laguerre(m: usize, beta: f64) -> GaussRule {
    let diag: Vec<f64> = (0..m).map(|k| 2.0 * k as f64 + beta + 1.0).collect();
    let off: Vec<f64> = (1..m).map(|k| (k as f64 * (k as f64 + beta)).sqrt()).collect();
    golub_welsch(&diag, &off, gamma(beta + 1.0))
}

/// Weight `(1-x)^a (1+x)^b` on `[-1, 1]`.
pub fn gauss_jacobi(m: usize, a: f64, b: f64) -> GaussRule {
    let ab = a + b;
    let diag: Vec<f64> = (0..m)
        .map(|k| {
            let s = 2.0 * k as f64 + ab;
            if k == 0 {
                (b - a) / (ab + 2.0)
            } else {
                (b * b - a * a) / (s * (s + 2.0))
            }
        })
        .collect();
    let off: Vec<f64> = (0..m.saturating_sub(1))
        .map(|k| {
            let k1 = k as f64 + 1.0;
            let s = 2.0 * k as f64 + ab;
            (4.0 * k1 * (k1 + a) * (k1 + b) * (k1 + ab) / ((s + 1.0) * (s + 2.0).powi(2) * (s + 3.0))).sqrt()
        })
        .collect();
    let mu0 = ((ab + 1.0) * 2f64.ln() + ln_gamma(a + 1.0) + ln_gamma(b + 1.0) - ln_gamma(ab + 2.0)).exp();
    golub_welsch(&diag, &off, mu0)
}

pub fn gauss_legendre(m: usize) -> GaussRule {
    gauss_jacobi(m, 0.0, 0.0)
}

/// Which weight a grid integrates against.
#[derive(Debug, Clone, PartialEq)]
pub enum Measure {
    /// `prod e^{-x_j^2} prod |x_j - x_k|^{2/alpha}`.
    Hermite,
    /// `prod y_j^a e^{-y_j} prod |y_j - y_k|^{2/alpha}` on `[0, inf)^n`.
    Laguerre { a: f64 },
}

/// Tensor-product grid for one measure, `n <= 2`.
#[derive(Debug, Clone)]
pub struct QuadratureGrid {
    pub measure: Measure,
    pub n: usize,
    pub points_per_axis: usize,
    pub nodes: Vec<Vec<f64>>,
    pub weights: Vec<f64>,
}

impl QuadratureGrid {
    pub fn new(measure: Measure, n: usize, alpha: f64, points_per_axis: usize) -> Result<Self> {
        let beta = 2.0 / alpha;
        let m = points_per_axis;
        let mut nodes = Vec::new();
        let mut weights = Vec::new();
        match (n, &measure) {
            (1, Measure::Hermite) => {
                let r = gauss_hermite(m);
                nodes = r.nodes.iter().map(|&x| vec![x]).collect();
                weights = r.weights;
            }
            (1, Measure::Laguerre { a }) => {
                let r = gauss_laguerre(m, *a);
                nodes = r.nodes.iter().map(|&x| vec![x]).collect();
                weights = r.weights;
            }
            (2, Measure::Hermite) => {
                let rs = gauss_laguerre(m, (beta - 1.0) / 2.0);
                let rv = gauss_hermite(m);
                let scale = 2f64.powf(beta / 2.0) * 0.5;
                for (s, ws) in rs.nodes.iter().zip(&rs.weights) {
                    for (v, wv) in rv.nodes.iter().zip(&rv.weights) {
                        for sign in [1.0, -1.0] {
                            let u = sign * s.sqrt();
                            nodes.push(vec![(v + u) / 2f64.sqrt(), (v - u) / 2f64.sqrt()]);
                            weights.push(scale * ws * wv);
                        }
                    }
                }
            }
            (2, Measure::Laguerre { a }) => {
                let rr = gauss_laguerre(m, 2.0 * a + beta + 1.0);
                let rv = gauss_jacobi(m, *a, (beta - 1.0) / 2.0);
                let scale = 2f64.powf(-1.0 - 2.0 * a) * 2f64.powf(-a - (beta - 1.0) / 2.0 - 2.0);
                for (r, wr) in rr.nodes.iter().zip(&rr.weights) {
                    for (v, wv) in rv.nodes.iter().zip(&rv.weights) {
                        let w = (1.0 + v) / 2.0;
                        for sign in [1.0, -1.0] {
                            let u = sign * w.sqrt();
                            nodes.push(vec![r * (1.0 + u) / 2.0, r * (1.0 - u) / 2.0]);
                            weights.push(scale * wr * wv);
                        }
                    }
                }
            }
            _ => return Err(Error::UnsupportedParameter(format!("quadrature needs n in {{1, 2}}, got {n}"))),
        }
        Ok(QuadratureGrid { measure, n, points_per_axis, nodes, weights })
    }

    pub fn integrate(&self, f: impl Fn(&[f64]) -> f64) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(x, w)| w * f(x)).sum()
    }

    pub fn integrate_complex(&self, f: impl Fn(&[f64]) -> Complex64) -> Complex64 {
        self.nodes.iter().zip(&self.weights).map(|(x, w)| f(x) * *w).sum()
    }
}

/// Polynomial with `f64` coefficients, for repeated evaluation at quadrature nodes.
#[derive(Debug, Clone, PartialEq)]
pub struct FloatPoly {
    terms: Vec<(Vec<i32>, f64)>,
}

impl FloatPoly {
    pub fn from_exact(p: &SparsePoly) -> Self {
        FloatPoly { terms: p.terms().map(|(e, c)| (e.to_vec(), to_f64(c))).collect() }
    }

    pub fn eval(&self, x: &[f64]) -> f64 {
        self.terms.iter().map(|(e, c)| c * e.iter().zip(x).map(|(&k, &v)| v.powi(k)).product::<f64>()).sum()
    }

    pub fn eval_complex(&self, x: &[Complex64]) -> Complex64 {
        self.terms.iter().map(|(e, c)| e.iter().zip(x).map(|(&k, v)| v.powi(k)).product::<Complex64>() * *c).sum()
    }
}

fn check_n(n: usize) -> Result<()> {
    if (1..=2).contains(&n) {
        Ok(())
    } else {
        Err(Error::UnsupportedParameter(format!("quadrature needs n in {{1, 2}}, got {n}")))
    }
}

type Integrand = Box<dyn Fn(&[f64]) -> Complex64>;

/// Default points per axis; polynomial integrands of degree below `2m` are exact.
pub const DEFAULT_POINTS: usize = 40;

/// Rule sizes for the refinement diagnostic.
pub const REFINEMENT_LEVELS: [usize; 4] = [24, 32, DEFAULT_POINTS, 48];

fn refined_integral(measure: Measure, n: usize, alpha: f64, f: impl Fn(&[f64]) -> f64) -> Result<f64> {
    let values =
        refine(&REFINEMENT_LEVELS, 1e-10, |m| Ok(QuadratureGrid::new(measure.clone(), n, alpha, m)?.integrate(&f)))?;
    Ok(values[2])
}

/// `<f, g>_H` by quadrature.
pub fn quad_inner_h(f: &SparsePoly, g: &SparsePoly, alpha: &Rational) -> Result<f64> {
    check_n(f.n())?;
    let (ff, gf) = (FloatPoly::from_exact(f), FloatPoly::from_exact(g));
    refined_integral(Measure::Hermite, f.n(), to_f64(alpha), |x| ff.eval(x) * gf.eval(x))
}

/// `<f, g>_L = 2^n int f g dmu^(L)` with `f`, `g` in the squared variables.
pub fn quad_inner_l(f: &SparsePoly, g: &SparsePoly, alpha: &Rational, a: &Rational) -> Result<f64> {
    check_n(f.n())?;
    let (ff, gf) = (FloatPoly::from_exact(f), FloatPoly::from_exact(g));
    let v = refined_integral(Measure::Laguerre { a: to_f64(a) }, f.n(), to_f64(alpha), |x| ff.eval(x) * gf.eval(x))?;
    Ok(2f64.powi(f.n() as i32) * v)
}

/// `<1, 1>_H = 2^{-n(n-1)/(2 alpha)} pi^{n/2} prod_{j<n} Gamma(1+(j+1)/alpha)/Gamma(1+1/alpha)`.
pub fn hermite_ground_norm(n: usize, alpha: f64) -> f64 {
    let g = 1.0 / alpha;
    let log = -((n * (n - 1)) as f64) / 2.0 * g * 2f64.ln()
        + n as f64 / 2.0 * PI.ln()
        + (0..n).map(|j| ln_gamma(1.0 + (j as f64 + 1.0) * g) - ln_gamma(1.0 + g)).sum::<f64>();
    log.exp()
}

/// Total mass of `dmu^(L)`: `prod_{j<n} Gamma(a+1+j/alpha) Gamma(1+(j+1)/alpha)/Gamma(1+1/alpha)`.
pub fn laguerre_measure_mass(n: usize, alpha: f64, a: f64) -> f64 {
    let g = 1.0 / alpha;
    (0..n)
        .map(|j| ln_gamma(a + 1.0 + j as f64 * g) + ln_gamma(1.0 + (j as f64 + 1.0) * g) - ln_gamma(1.0 + g))
        .sum::<f64>()
        .exp()
}

/// `<1, 1>_L = 2^n` times the mass of `dmu^(L)`.
pub fn laguerre_ground_norm(n: usize, alpha: f64, a: f64) -> f64 {
    2f64.powi(n as i32) * laguerre_measure_mass(n, alpha, a)
}

/// The ground-state constant as printed next to the Laguerre norm formula:
/// `alpha^{1-n-(n-1)^2/alpha}` times the mass, without the `2^n`.
pub fn laguerre_ground_norm_printed(n: usize, alpha: f64, a: f64) -> f64 {
    let nf = n as f64;
    alpha.powf(1.0 - nf - (nf - 1.0).powi(2) / alpha) * laguerre_measure_mass(n, alpha, a)
}

/// One numeric comparison.
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct NumericReport {
    pub check: String,
    pub n: usize,
    pub alpha: String,
    pub a: Option<String>,
    #[serde(rename = "D")]
    pub degree: Option<u32>,
    pub lhs: f64,
    pub rhs: f64,
    pub abs_err: f64,
    pub rel_err: f64,
    pub tolerance: f64,
    pub status: String,
    /// Reported for comparison only; never counted as a failure.
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub informational: bool,
}

impl NumericReport {
    /// Passes when `abs_err <= tolerance`; `tolerance` is absolute.
    pub fn new(check: impl Into<String>, n: usize, alpha: &Rational, lhs: f64, rhs: f64, tolerance: f64) -> Self {
        Self::with_error(check, n, alpha, lhs, rhs, (lhs - rhs).abs(), tolerance)
    }

    /// As `new`, with an error that also counts parts not visible in `lhs`, such as an imaginary part.
    pub fn with_error(
        check: impl Into<String>,
        n: usize,
        alpha: &Rational,
        lhs: f64,
        rhs: f64,
        abs_err: f64,
        tolerance: f64,
    ) -> Self {
        let rel_err = if rhs == 0.0 { abs_err } else { abs_err / rhs.abs() };
        let status = if abs_err <= tolerance { "pass" } else { "fail" };
        NumericReport {
            check: check.into(),
            n,
            alpha: format_rational(alpha),
            a: None,
            degree: None,
            lhs,
            rhs,
            abs_err,
            rel_err,
            tolerance,
            status: status.into(),
            informational: false,
        }
    }

    pub fn with_a(mut self, a: &Rational) -> Self {
        self.a = Some(format_rational(a));
        self
    }

    pub fn with_degree(mut self, d: u32) -> Self {
        self.degree = Some(d);
        self
    }

    pub fn passed(&self) -> bool {
        self.status == "pass"
    }

    pub fn informational(mut self) -> Self {
        self.informational = true;
        self
    }
}

/// Truncated kernel with its second argument frozen at a point, as slices in the first argument.
struct FrozenKernel {
    /// `(|eta|, c_eta E_eta(point), E_eta)`
    terms: Vec<(u32, Complex64, FloatPoly)>,
}

impl FrozenKernel {
    fn new(
        basis: &JackBasis,
        max_degree: u32,
        point: &[Complex64],
        coefficient: impl Fn(&[u32]) -> Result<Rational>,
    ) -> Result<Self> {
        let mut terms = Vec::new();
        for eta in compositions_up_to(basis.n(), max_degree) {
            let e = basis.get(&eta)?;
            let fp = FloatPoly::from_exact(&e);
            let c = to_f64(&coefficient(&eta)?);
            terms.push((weight(&eta), fp.eval_complex(point) * c, fp));
        }
        Ok(FrozenKernel { terms })
    }

    /// Sum of slices `lo..=hi` at `x`.
    fn eval(&self, x: &[Complex64], lo: u32, hi: u32) -> Complex64 {
        self.terms.iter().filter(|(w, _, _)| (lo..=hi).contains(w)).map(|(_, c, p)| c * p.eval_complex(x)).sum()
    }
}

fn real_point(x: &[f64]) -> Vec<Complex64> {
    x.iter().map(|&v| Complex64::new(v, 0.0)).collect()
}

/// Which integral formula to test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Transform {
    /// `int K_A(2y; z) E^(H)_eta(y) dmu^(H) = N_0^(H) e^{p_2(z)} E_eta(z)`.
    HermiteToJack,
    /// `int K_A(2y; -iz) E_eta(iy) dmu^(H) = N_0^(H) e^{-p_2(z)} E^(H)_eta(z)`.
    JackToHermite,
    /// `int K_B(x; -z) E_eta(-x) dmu^(L) = M e^{-p_1(z)} E^(L)_eta(z)`, `M` the mass of `dmu^(L)`.
    LaguerreKernel,
    /// Laplace transform of `prod x^a E_eta`: `[a+q]_eta M prod t^{-(a+q)} E_eta(1/t)`.
    LaplaceJack,
    /// Laplace transform of `prod x^a E^(L)_eta`: `[a+q]_eta M prod t^{-(a+q)} E_eta(1/t - 1)`.
    LaplaceLaguerre,
}

impl Transform {
    pub const ALL: [Transform; 5] = [
        Transform::HermiteToJack,
        Transform::JackToHermite,
        Transform::LaguerreKernel,
        Transform::LaplaceJack,
        Transform::LaplaceLaguerre,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Transform::HermiteToJack => "int.h-1b",
            Transform::JackToHermite => "int.h-1c",
            Transform::LaguerreKernel => "int.l",
            Transform::LaplaceJack => "laplace-l.e",
            Transform::LaplaceLaguerre => "laplace-l.el",
        }
    }

    pub fn from_name(s: &str) -> Option<Transform> {
        Transform::ALL.into_iter().find(|t| t.name() == s)
    }

    fn is_laguerre(&self) -> bool {
        !matches!(self, Transform::HermiteToJack | Transform::JackToHermite)
    }
}

/// Evaluation point for the second kernel argument.
pub fn default_point(t: Transform, n: usize) -> Vec<f64> {
    let base: &[f64] = match t {
        Transform::HermiteToJack | Transform::JackToHermite => &[0.3, -0.2],
        Transform::LaguerreKernel => &[0.5, 0.2],
        Transform::LaplaceJack | Transform::LaplaceLaguerre => &[0.9, 0.8],
    };
    base[..n].to_vec()
}

/// Numeric left side, exact right side and truncation budget of a transform
/// formula with the kernel truncated at degree `D`. The budget is the
/// integral of the absolute value of the next two omitted slices.
#[derive(Debug, Clone, PartialEq)]
pub struct TransformValues {
    pub lhs: f64,
    pub lhs_imag: f64,
    pub rhs: f64,
    pub budget: f64,
}

pub fn transform_values(
    which: Transform,
    jack: &std::sync::Arc<JackBasis>,
    a: &Rational,
    eta: &[u32],
    point: &[f64],
    degree: u32,
    points_per_axis: usize,
) -> Result<TransformValues> {
    let n = jack.n();
    check_n(n)?;
    let alpha = jack.alpha();
    let af = to_f64(a);
    let measure = if which.is_laguerre() { Measure::Laguerre { a: af } } else { Measure::Hermite };
    let grid = QuadratureGrid::new(measure, n, to_f64(alpha), points_per_axis)?;
    let zr = real_point(point);
    let i = Complex64::i();
    let e = FloatPoly::from_exact(&*jack.get(eta)?);
    let e_at = |z: &[f64]| e.eval(z);
    let q = q_param(n, alpha);
    let aq = a + &q;
    let hi = degree + 2;
    let kernel_a_coef = |eta: &[u32]| Ok(kernel_a_coefficient(eta, alpha));
    let (kernel, scale_x, integrand, rhs): (FrozenKernel, Complex64, Integrand, f64) = match which {
        Transform::HermiteToJack => {
            let h = FloatPoly::from_exact(&*HermiteBasis::new(jack.clone()).get(eta)?);
            let p2: f64 = point.iter().map(|z| z * z).sum();
            let rhs = hermite_ground_norm(n, to_f64(alpha)) * p2.exp() * e_at(point);
            let k = FrozenKernel::new(jack, hi, &zr, kernel_a_coef)?;
            (k, Complex64::new(2.0, 0.0), Box::new(move |y: &[f64]| Complex64::new(h.eval(y), 0.0)), rhs)
        }
        Transform::JackToHermite => {
            let h = FloatPoly::from_exact(&*HermiteBasis::new(jack.clone()).get(eta)?);
            let p2: f64 = point.iter().map(|z| z * z).sum();
            let rhs = hermite_ground_norm(n, to_f64(alpha)) * (-p2).exp() * h.eval(point);
            let zi: Vec<Complex64> = zr.iter().map(|z| -i * z).collect();
            let k = FrozenKernel::new(jack, hi, &zi, kernel_a_coef)?;
            let ee = e.clone();
            let f = move |y: &[f64]| {
                let iy: Vec<Complex64> = y.iter().map(|v| i * v).collect();
                ee.eval_complex(&iy)
            };
            (k, Complex64::new(2.0, 0.0), Box::new(f), rhs)
        }
        Transform::LaguerreKernel => {
            let l = FloatPoly::from_exact(&*LaguerreBasis::new(jack.clone(), a.clone()).get(eta)?);
            let p1: f64 = point.iter().sum();
            let rhs = laguerre_measure_mass(n, to_f64(alpha), af) * (-p1).exp() * l.eval(point);
            let zneg: Vec<Complex64> = zr.iter().map(|z| -z).collect();
            let down = vec![aq.clone()];
            let k = FrozenKernel::new(jack, hi, &zneg, |eta| series_coefficient(eta, alpha, &[], &down))?;
            let ee = e.clone();
            let f = move |x: &[f64]| {
                let neg: Vec<f64> = x.iter().map(|v| -v).collect();
                Complex64::new(ee.eval(&neg), 0.0)
            };
            (k, Complex64::new(1.0, 0.0), Box::new(f), rhs)
        }
        Transform::LaplaceJack | Transform::LaplaceLaguerre => {
            let shifted: Vec<Complex64> = point.iter().map(|t| Complex64::new(1.0 - t, 0.0)).collect();
            let k = FrozenKernel::new(jack, hi, &shifted, kernel_a_coef)?;
            let prefactor = to_f64(&generalized_factorial(&aq, eta, alpha))
                * laguerre_measure_mass(n, to_f64(alpha), af)
                * point.iter().map(|t| t.powf(-to_f64(&aq))).product::<f64>();
            let inv: Vec<f64> = point.iter().map(|t| 1.0 / t).collect();
            let (rhs, f): (f64, Integrand) = if which == Transform::LaplaceJack {
                let ee = e.clone();
                (prefactor * e_at(&inv), Box::new(move |x: &[f64]| Complex64::new(ee.eval(x), 0.0)))
            } else {
                let l = FloatPoly::from_exact(&*LaguerreBasis::new(jack.clone(), a.clone()).get(eta)?);
                let inv_minus: Vec<f64> = inv.iter().map(|v| v - 1.0).collect();
                (prefactor * e_at(&inv_minus), Box::new(move |x: &[f64]| Complex64::new(l.eval(x), 0.0)))
            };
            (k, Complex64::new(1.0, 0.0), f, rhs)
        }
    };
    let scaled = |x: &[f64]| -> Vec<Complex64> { x.iter().map(|v| scale_x * v).collect() };
    let lhs = grid.integrate_complex(|x| kernel.eval(&scaled(x), 0, degree) * integrand(x));
    let budget = grid.integrate(|x| (kernel.eval(&scaled(x), degree + 1, hi) * integrand(x)).norm());
    Ok(TransformValues { lhs: lhs.re, lhs_imag: lhs.im, rhs, budget })
}

/// Right side of a Laplace formula in its printed form: `E^(L)_eta(1/t)` in
/// place of `E_eta(1/t)`, and `E_eta(1 - 1/t)` in place of `E_eta(1/t - 1)`.
pub fn printed_laplace_rhs(
    which: Transform,
    jack: &std::sync::Arc<JackBasis>,
    a: &Rational,
    eta: &[u32],
    point: &[f64],
) -> Result<f64> {
    let n = jack.n();
    let alpha = jack.alpha();
    let aq = a + q_param(n, alpha);
    let prefactor = to_f64(&generalized_factorial(&aq, eta, alpha))
        * laguerre_measure_mass(n, to_f64(alpha), to_f64(a))
        * point.iter().map(|t| t.powf(-to_f64(&aq))).product::<f64>();
    let inv: Vec<f64> = point.iter().map(|t| 1.0 / t).collect();
    match which {
        Transform::LaplaceJack => {
            let l = FloatPoly::from_exact(&*LaguerreBasis::new(jack.clone(), a.clone()).get(eta)?);
            Ok(prefactor * l.eval(&inv))
        }
        Transform::LaplaceLaguerre => {
            let e = FloatPoly::from_exact(&*jack.get(eta)?);
            let arg: Vec<f64> = inv.iter().map(|v| 1.0 - v).collect();
            Ok(prefactor * e.eval(&arg))
        }
        _ => Err(Error::UnsupportedParameter(format!("{} has no printed variant", which.name()))),
    }
}

/// Transform check at tolerance `max(1e-6, 10 x budget)`.
pub fn quad_transform_check(
    which: Transform,
    jack: &std::sync::Arc<JackBasis>,
    a: &Rational,
    eta: &[u32],
    degree: u32,
) -> Result<NumericReport> {
    let point = default_point(which, jack.n());
    let v = transform_values(which, jack, a, eta, &point, degree, DEFAULT_POINTS)?;
    let tol = 1e-6_f64.max(10.0 * v.budget);
    let err = (v.lhs - v.rhs).hypot(v.lhs_imag);
    let name = format!("{} eta={eta:?}", which.name());
    let mut r = NumericReport::with_error(name, jack.n(), jack.alpha(), v.lhs, v.rhs, err, tol).with_degree(degree);
    if which.is_laguerre() {
        r = r.with_a(a);
    }
    Ok(r)
}

/// Values of `f` at increasing rule sizes; errors unless successive changes shrink to `tol`.
pub fn refine(levels: &[usize], tol: f64, f: impl Fn(usize) -> Result<f64>) -> Result<Vec<f64>> {
    let values = levels.iter().map(|&m| f(m)).collect::<Result<Vec<f64>>>()?;
    let changes: Vec<f64> = values.windows(2).map(|w| (w[1] - w[0]).abs()).collect();
    let last = *changes.last().unwrap_or(&0.0);
    let scale = values.last().map(|v| v.abs().max(1.0)).unwrap_or(1.0);
    if last > tol * scale {
        return Err(Error::Precision(format!("refinement changes {changes:?} exceed {tol}")));
    }
    Ok(values)
}

/// `n = 1` reductions with closed-form kernels; the quadrature is exact, so
/// agreement is to rounding error. Returns `(name, lhs, rhs)` per case.
pub fn classical_reductions(alpha: &Rational, a: &Rational, max_k: u32) -> Result<Vec<(String, f64, f64)>> {
    let jack = std::sync::Arc::new(JackBasis::new(1, alpha.clone()));
    let herm = HermiteBasis::new(jack.clone());
    let lag = LaguerreBasis::new(jack.clone(), a.clone());
    let af = to_f64(a);
    let gh = gauss_hermite(DEFAULT_POINTS);
    let gl = gauss_laguerre(DEFAULT_POINTS, af);
    let z = 0.4f64;
    let t = 1.7f64;
    let mut out = Vec::new();
    for k in 0..=max_k {
        let eta: Composition = vec![k];
        let e = FloatPoly::from_exact(&*jack.get(&eta)?);
        let h = FloatPoly::from_exact(&*herm.get(&eta)?);
        let l = FloatPoly::from_exact(&*lag.get(&eta)?);
        // int e^{-y^2} e^{2yz} H(y) dy = e^{z^2} int e^{-w^2} H(w + z) dw
        let lhs: f64 =
            gh.nodes.iter().zip(&gh.weights).map(|(w, wt)| wt * h.eval(&[w + z])).sum::<f64>() * (z * z).exp();
        out.push((format!("int.h-1b k={k}"), lhs, PI.sqrt() * (z * z).exp() * e.eval(&[z])));
        // int e^{-y^2} e^{-2iyz} E(iy) dy = e^{-z^2} int e^{-w^2} E(i(w - iz)) dw
        let lhs: Complex64 = gh
            .nodes
            .iter()
            .zip(&gh.weights)
            .map(|(w, wt)| e.eval_complex(&[Complex64::i() * Complex64::new(*w, -z)]) * *wt)
            .sum::<Complex64>()
            * (-z * z).exp();
        out.push((format!("int.h-1c k={k}"), lhs.re, PI.sqrt() * (-z * z).exp() * h.eval(&[z])));
        // int x^a e^{-tx} p(x) dx = t^{-a-1} int u^a e^{-u} p(u/t) du
        let laplace = |p: &FloatPoly| -> f64 {
            gl.nodes.iter().zip(&gl.weights).map(|(u, wt)| wt * p.eval(&[u / t])).sum::<f64>() * t.powf(-af - 1.0)
        };
        let aq = a + q_param(1, alpha);
        let pref = to_f64(&generalized_factorial(&aq, &eta, alpha)) * gamma(af + 1.0) * t.powf(-to_f64(&aq));
        out.push((format!("laplace-l.e k={k}"), laplace(&e), pref * e.eval(&[1.0 / t])));
        out.push((format!("laplace-l.el k={k}"), laplace(&l), pref * e.eval(&[1.0 / t - 1.0])));
        let classical = gamma(af + k as f64 + 1.0) / t.powf(af + k as f64 + 1.0);
        out.push((format!("laplace x^k k={k}"), laplace(&e), classical));
    }
    Ok(out)
}

/// `<E_eta, E_nu>` by quadrature for all `|eta|, |nu| <= max_weight`, with each
/// off-diagonal entry divided by `sqrt(N_eta N_nu)`.
pub fn orthogonality_table(
    polys: &[(Composition, SparsePoly)],
    inner: impl Fn(&SparsePoly, &SparsePoly) -> Result<f64>,
) -> Result<Vec<(Composition, Composition, f64)>> {
    let norms = polys.iter().map(|(_, p)| inner(p, p)).collect::<Result<Vec<f64>>>()?;
    let mut out = Vec::new();
    for (i, (eta, p)) in polys.iter().enumerate() {
        for (j, (nu, q)) in polys.iter().enumerate().skip(i + 1) {
            let v = inner(p, q)?;
            out.push((eta.clone(), nu.clone(), v.abs() / (norms[i] * norms[j]).sqrt()));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn hermite_rule_moments() {
        let r = gauss_hermite(20);
        let m2: f64 = r.nodes.iter().zip(&r.weights).map(|(x, w)| w * x * x).sum();
        assert!((m2 - PI.sqrt() / 2.0).abs() < 1e-13);
    }

    #[test]
    fn laguerre_and_jacobi_rules_integrate_monomials() {
        let r = gauss_laguerre(15, 0.5);
        let m3: f64 = r.nodes.iter().zip(&r.weights).map(|(x, w)| w * x.powi(3)).sum();
        assert!((m3 / gamma(4.5) - 1.0).abs() < 1e-12);
        let j = gauss_jacobi(12, 1.0, 0.5);
        let total: f64 = j.weights.iter().sum();
        let exact = 2f64.powf(2.5) * gamma(2.0) * gamma(1.5) / gamma(3.5);
        assert!((total / exact - 1.0).abs() < 1e-12);
    }

    #[test]
    fn one_variable_ground_norms() {
        let one = SparsePoly::one(1);
        let h = quad_inner_h(&one, &one, &int(1)).unwrap();
        assert!((h - PI.sqrt()).abs() < 1e-12);
        let l = quad_inner_l(&one, &one, &int(1), &rat(1, 2)).unwrap();
        assert!((l / laguerre_ground_norm(1, 1.0, 0.5) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn two_variable_ground_norms() {
        let one = SparsePoly::one(2);
        for alpha in [int(1), int(2), rat(1, 2), rat(7, 5)] {
            let af = to_f64(&alpha);
            let h = quad_inner_h(&one, &one, &alpha).unwrap();
            assert!((h / hermite_ground_norm(2, af) - 1.0).abs() < 1e-10, "alpha {alpha}: {h}");
            let l = quad_inner_l(&one, &one, &alpha, &rat(1, 2)).unwrap();
            assert!((l / laguerre_ground_norm(2, af, 0.5) - 1.0).abs() < 1e-10, "alpha {alpha}: {l}");
        }
    }

    #[test]
    fn rejects_three_variables() {
        let one = SparsePoly::one(3);
        assert!(quad_inner_h(&one, &one, &int(1)).is_err());
    }
}
