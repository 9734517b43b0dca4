//! Named identity checks grouped into suites, held in a registry of trait objects.
//!
//! Every check enumerates its cases from a [`VerifyConfig`] and returns one
//! report per `(n, alpha[, a])`, carrying the number of cases tested and the
//! first failing case. Bases are shared between checks through a [`Workspace`].

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, Mutex};

use num::{One, Zero};
use serde::Serialize;

use crate::combinatorics::{
    compositions, compositions_up_to, eigenvalues, eta_plus, partitions, phi, phi_hat, swap, weight, Composition,
    EtaConstants,
};
use crate::ct::{
    ct_norm_formula, gamma_ratio_product, norm_relation_sides, pairing_block_factor, selberg_ratio_sides, CtWeight,
    CtWeightPoly, PowerSumBasis,
};
use crate::error::Result;
use crate::hermite_laguerre::{
    harmonic_decomposition_a, harmonic_decomposition_b, hermite_from_harmonics, hermite_norm_ratio, laguerre_1d,
    laguerre_at_zero, laguerre_from_harmonics, laguerre_lowering_constant, laguerre_norm_ratio, lambda_b,
    lowering_constant, pairing_h, pairing_l, reassemble, HermiteBasis, LaguerreBasis,
};
use crate::jack::{
    all_coefficients_positive, is_triangular, oracle, reversal_pair, switch_combination, symmetrization_constant,
    value_at_ones, JackBasis,
};
use crate::kernels::{
    check_binomial_identities, check_hermite_generating_function, check_hermite_summation, check_hypergeometric_pde,
    check_kernel_a_properties, check_laguerre_binomial_expansions, check_laguerre_generating_function,
    check_laguerre_series_generating_functions, check_laguerre_summation, check_operator_actions, check_p1_action,
    check_shift_expansion, check_shift_identity, check_symmetrization, kernel_a, kernel_bound_excess,
    symmetric_relation_sides, BinomialTable, Mismatch,
};
use crate::numeric::{
    classical_reductions, default_point, hermite_ground_norm, laguerre_ground_norm, laguerre_ground_norm_printed,
    orthogonality_table, printed_laplace_rhs, quad_inner_h, quad_inner_l, quad_transform_check, transform_values,
    NumericReport, Transform, DEFAULT_POINTS,
};
use crate::operators::{commutator, first_disagreement, test_monomials, Op, OperatorContext};
use crate::poly::SparsePoly;
use crate::rational::{format_rational, int, pow, rat, to_f64, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Operators,
    Jack,
    Hermite,
    Laguerre,
    Kernels,
    Ct,
    Numeric,
}

impl Suite {
    pub const ALL: [Suite; 7] =
        [Suite::Operators, Suite::Jack, Suite::Hermite, Suite::Laguerre, Suite::Kernels, Suite::Ct, Suite::Numeric];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Operators => "operators",
            Suite::Jack => "jack",
            Suite::Hermite => "hermite",
            Suite::Laguerre => "laguerre",
            Suite::Kernels => "kernels",
            Suite::Ct => "ct",
            Suite::Numeric => "numeric",
        }
    }

    /// A suite name or `all`.
    pub fn parse_selection(s: &str) -> Option<Vec<Suite>> {
        if s.eq_ignore_ascii_case("all") {
            return Some(Suite::ALL.to_vec());
        }
        Suite::ALL.into_iter().find(|x| x.name().eq_ignore_ascii_case(s)).map(|x| vec![x])
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Parameter ranges for a verification run.
#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub alphas: Vec<Rational>,
    pub max_weight: u32,
    pub max_n: usize,
    pub laguerre_a: Vec<Rational>,
    /// `k = 1/alpha` values for the constant-term suite.
    pub ct_k: Vec<u32>,
    pub ct_max_weight: u32,
    /// Largest exponent `a`, `b` in the constant-term ratio.
    pub ct_max_exponent: u32,
    /// Degree of the monomials on which operator identities are compared.
    pub operator_degree: u32,
    /// Order in `t` of the summation formulas.
    pub series_order: u32,
    /// Kernel truncation degree in the quadrature transforms.
    pub transform_degree: u32,
    pub quadrature_max_weight: u32,
    /// Laguerre parameter and upper/lower parameters for the hypergeometric PDE.
    pub pde_params: (Rational, Rational, Rational),
    pub series_c: Rational,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            alphas: default_alphas(),
            max_weight: 4,
            max_n: 3,
            laguerre_a: vec![int(0), rat(1, 2), int(1)],
            ct_k: vec![1, 2],
            ct_max_weight: 3,
            ct_max_exponent: 2,
            operator_degree: 5,
            series_order: 4,
            transform_degree: 16,
            quadrature_max_weight: 3,
            pde_params: (rat(1, 2), rat(2, 3), rat(13, 7)),
            series_c: rat(5, 3),
        }
    }
}

pub fn default_alphas() -> Vec<Rational> {
    vec![int(1), int(2), rat(1, 2), int(3), rat(7, 5)]
}

impl VerifyConfig {
    /// Defaults with the weight and variable-count limits replaced; derived
    /// limits never exceed their defaults.
    pub fn with_limits(alphas: Vec<Rational>, max_weight: u32, max_n: usize) -> Self {
        let d = VerifyConfig::default();
        VerifyConfig {
            alphas,
            max_weight,
            max_n,
            ct_max_weight: d.ct_max_weight.min(max_weight),
            quadrature_max_weight: d.quadrature_max_weight.min(max_weight),
            operator_degree: d.operator_degree.min(max_weight + 1),
            ..d
        }
    }

    /// Kernel truncation degree: `max_weight + 1` for `n <= 2`, `max_weight` above.
    pub fn kernel_degree(&self, n: usize) -> u32 {
        if n <= 2 {
            self.max_weight + 1
        } else {
            self.max_weight
        }
    }

    fn grid(&self) -> Vec<(usize, Rational)> {
        (1..=self.max_n).flat_map(|n| self.alphas.iter().map(move |a| (n, a.clone()))).collect()
    }
}

/// Result of one exact identity over a family of cases.
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct IdentityReport {
    pub identity: String,
    pub n: usize,
    pub alpha: String,
    #[serde(rename = "D")]
    pub degree: Option<u32>,
    pub params: BTreeMap<String, String>,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<String>,
    pub cases: usize,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub informational: bool,
}

#[derive(Debug, Clone, Serialize, PartialEq)]
#[serde(untagged)]
pub enum Report {
    Identity(IdentityReport),
    Numeric(NumericReport),
}

impl Report {
    pub fn name(&self) -> &str {
        match self {
            Report::Identity(r) => &r.identity,
            Report::Numeric(r) => &r.check,
        }
    }

    pub fn passed(&self) -> bool {
        match self {
            Report::Identity(r) => r.status == "pass",
            Report::Numeric(r) => r.passed(),
        }
    }

    pub fn informational(&self) -> bool {
        match self {
            Report::Identity(r) => r.informational,
            Report::Numeric(r) => r.informational,
        }
    }

    /// Passed, or informational.
    pub fn acceptable(&self) -> bool {
        self.informational() || self.passed()
    }

    fn mark_informational(&mut self) {
        match self {
            Report::Identity(r) => r.informational = true,
            Report::Numeric(r) => r.informational = true,
        }
    }

    /// One-line summary.
    pub fn summary(&self) -> String {
        let tag = if self.informational() { " (informational)" } else { "" };
        match self {
            Report::Identity(r) => {
                let mut s = format!("{} {} n={} alpha={}", r.status, r.identity, r.n, r.alpha);
                if let Some(d) = r.degree {
                    s.push_str(&format!(" D={d}"));
                }
                for (k, v) in &r.params {
                    s.push_str(&format!(" {k}={v}"));
                }
                s.push_str(&format!(" cases={}", r.cases));
                if let Some(f) = &r.first_failure {
                    s.push_str(&format!(" first_failure: {f}"));
                }
                s + tag
            }
            Report::Numeric(r) => format!(
                "{} {} n={} alpha={}{} lhs={:.12e} rhs={:.12e} abs_err={:.2e} tol={:.2e}{tag}",
                r.status,
                r.check,
                r.n,
                r.alpha,
                r.a.as_ref().map(|a| format!(" a={a}")).unwrap_or_default(),
                r.lhs,
                r.rhs,
                r.abs_err,
                r.tolerance
            ),
        }
    }

    /// Flat row for CSV output: kind, check, n, alpha, params, D, status, detail.
    pub fn csv_row(&self) -> [String; 8] {
        match self {
            Report::Identity(r) => [
                "identity".into(),
                r.identity.clone(),
                r.n.to_string(),
                r.alpha.clone(),
                r.params.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(";"),
                r.degree.map(|d| d.to_string()).unwrap_or_default(),
                r.status.clone(),
                r.first_failure.clone().unwrap_or_else(|| format!("cases={}", r.cases)),
            ],
            Report::Numeric(r) => [
                "numeric".into(),
                r.check.clone(),
                r.n.to_string(),
                r.alpha.clone(),
                r.a.as_ref().map(|a| format!("a={a}")).unwrap_or_default(),
                r.degree.map(|d| d.to_string()).unwrap_or_default(),
                r.status.clone(),
                format!("lhs={:e};rhs={:e};abs_err={:e};tolerance={:e}", r.lhs, r.rhs, r.abs_err, r.tolerance),
            ],
        }
    }
}

pub const CSV_HEADER: [&str; 8] = ["kind", "check", "n", "alpha", "params", "D", "status", "detail"];

/// Cached bases shared by all checks of a run.
#[derive(Default)]
pub struct Workspace {
    jack: Mutex<HashMap<(usize, Rational), Arc<JackBasis>>>,
    hermite: Mutex<HashMap<(usize, Rational), Arc<HermiteBasis>>>,
    laguerre: Mutex<HashMap<(usize, Rational, Rational), Arc<LaguerreBasis>>>,
    binomials: Mutex<HashMap<(usize, Rational, u32), Arc<BinomialTable>>>,
}

impl Workspace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn jack(&self, n: usize, alpha: &Rational) -> Arc<JackBasis> {
        let mut m = self.jack.lock().expect("jack cache poisoned");
        m.entry((n, alpha.clone())).or_insert_with(|| Arc::new(JackBasis::new(n, alpha.clone()))).clone()
    }

    pub fn hermite(&self, n: usize, alpha: &Rational) -> Arc<HermiteBasis> {
        let jack = self.jack(n, alpha);
        let mut m = self.hermite.lock().expect("hermite cache poisoned");
        m.entry((n, alpha.clone())).or_insert_with(|| Arc::new(HermiteBasis::new(jack))).clone()
    }

    pub fn laguerre(&self, n: usize, alpha: &Rational, a: &Rational) -> Arc<LaguerreBasis> {
        let jack = self.jack(n, alpha);
        let mut m = self.laguerre.lock().expect("laguerre cache poisoned");
        m.entry((n, alpha.clone(), a.clone())).or_insert_with(|| Arc::new(LaguerreBasis::new(jack, a.clone()))).clone()
    }

    pub fn binomials(&self, n: usize, alpha: &Rational, degree: u32) -> Result<Arc<BinomialTable>> {
        let key = (n, alpha.clone(), degree);
        if let Some(t) = self.binomials.lock().expect("binomial cache poisoned").get(&key) {
            return Ok(t.clone());
        }
        let table = Arc::new(BinomialTable::new(&self.jack(n, alpha), degree)?);
        self.binomials.lock().expect("binomial cache poisoned").insert(key, table.clone());
        Ok(table)
    }

    /// Every Jack basis created so far, in a fixed order.
    pub fn jack_bases(&self) -> Vec<Arc<JackBasis>> {
        let m = self.jack.lock().expect("jack cache poisoned");
        let mut v: Vec<_> = m.iter().map(|(k, b)| (k.clone(), b.clone())).collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v.into_iter().map(|(_, b)| b).collect()
    }
}

/// A named verification strategy.
pub trait Check: Send + Sync {
    fn name(&self) -> &str;
    fn suite(&self) -> Suite;
    /// Acceptance criteria (1-based) this check contributes to.
    fn criteria(&self) -> &[u8];
    /// Informational checks report a printed variant and never fail a run.
    fn informational(&self) -> bool {
        false
    }
    fn run(&self, ws: &Workspace, cfg: &VerifyConfig) -> Vec<Report>;
}

type CheckFn = fn(&Workspace, &VerifyConfig) -> Result<Vec<Report>>;

/// A check backed by a plain function.
pub struct FnCheck {
    pub name: &'static str,
    pub suite: Suite,
    pub criteria: &'static [u8],
    pub informational: bool,
    pub run: CheckFn,
}

impl Check for FnCheck {
    fn name(&self) -> &str {
        self.name
    }

    fn suite(&self) -> Suite {
        self.suite
    }

    fn criteria(&self) -> &[u8] {
        self.criteria
    }

    fn informational(&self) -> bool {
        self.informational
    }

    fn run(&self, ws: &Workspace, cfg: &VerifyConfig) -> Vec<Report> {
        let mut reports = (self.run)(ws, cfg).unwrap_or_else(|e| {
            vec![Report::Identity(IdentityReport {
                identity: self.name.into(),
                n: 0,
                alpha: String::new(),
                degree: None,
                params: BTreeMap::new(),
                status: "fail".into(),
                first_failure: Some(format!("error: {e}")),
                cases: 0,
                informational: false,
            })]
        });
        if self.informational {
            reports.iter_mut().for_each(Report::mark_informational);
        }
        reports
    }
}

/// Output of one check.
pub struct CheckOutcome {
    pub name: String,
    pub suite: Suite,
    pub criteria: Vec<u8>,
    pub reports: Vec<Report>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.reports.iter().all(Report::acceptable)
    }
}

/// Ordered collection of checks.
#[derive(Default)]
pub struct Registry {
    checks: Vec<Box<dyn Check>>,
}

impl Registry {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn register(&mut self, check: Box<dyn Check>) {
        self.checks.push(check);
    }

    /// Every built-in check.
    pub fn standard() -> Self {
        let mut r = Registry::new();
        for c in builtin_checks() {
            r.register(Box::new(c));
        }
        r
    }

    pub fn checks(&self) -> impl Iterator<Item = &dyn Check> {
        self.checks.iter().map(|c| c.as_ref())
    }

    pub fn get(&self, name: &str) -> Option<&dyn Check> {
        self.checks().find(|c| c.name() == name)
    }

    /// Runs the selected checks on all available cores. Outcomes come back in
    /// registration order regardless of completion order.
    pub fn run(&self, ws: &Workspace, cfg: &VerifyConfig, select: impl Fn(&dyn Check) -> bool) -> Vec<CheckOutcome> {
        let chosen: Vec<&dyn Check> = self.checks().filter(|c| select(*c)).collect();
        let slots: Vec<Mutex<Option<Vec<Report>>>> = chosen.iter().map(|_| Mutex::new(None)).collect();
        let next = AtomicUsize::new(0);
        let workers = std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1).min(chosen.len().max(1));
        std::thread::scope(|s| {
            for _ in 0..workers {
                s.spawn(|| loop {
                    let i = next.fetch_add(1, Ordering::SeqCst);
                    if i >= chosen.len() {
                        break;
                    }
                    let reports = chosen[i].run(ws, cfg);
                    *slots[i].lock().expect("result slot poisoned") = Some(reports);
                });
            }
        });
        chosen
            .iter()
            .zip(slots)
            .map(|(c, slot)| CheckOutcome {
                name: c.name().to_string(),
                suite: c.suite(),
                criteria: c.criteria().to_vec(),
                reports: slot.into_inner().expect("result slot poisoned").unwrap_or_default(),
            })
            .collect()
    }

    pub fn run_suites(&self, ws: &Workspace, cfg: &VerifyConfig, suites: &[Suite]) -> Vec<CheckOutcome> {
        self.run(ws, cfg, |c| suites.contains(&c.suite()))
    }
}

/// Accumulates cases of one identity for one parameter point.
struct Tally {
    report: IdentityReport,
}

impl Tally {
    fn new(identity: &str, n: usize, alpha: &Rational) -> Self {
        Tally {
            report: IdentityReport {
                identity: identity.into(),
                n,
                alpha: format_rational(alpha),
                degree: None,
                params: BTreeMap::new(),
                status: "pass".into(),
                first_failure: None,
                cases: 0,
                informational: false,
            },
        }
    }

    fn degree(mut self, d: u32) -> Self {
        self.report.degree = Some(d);
        self
    }

    fn param(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.report.params.insert(key.into(), value.to_string());
        self
    }

    fn case(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.report.cases += 1;
        if !ok && self.report.first_failure.is_none() {
            self.report.status = "fail".into();
            self.report.first_failure = Some(what());
        }
    }

    fn mismatch(&mut self, m: Mismatch) {
        let ok = m.is_none();
        self.case(ok, || m.unwrap_or_default());
    }

    fn op_eq(&mut self, lhs: &Op, rhs: &Op, probes: &[SparsePoly], what: impl FnOnce() -> String) {
        let bad = first_disagreement(lhs, rhs, probes);
        let ok = bad.is_none();
        self.case(ok, || format!("{} on {:?}", what(), bad.map(|p| p.json_terms())));
    }

    fn done(self) -> Report {
        Report::Identity(self.report)
    }
}

fn ratio_param(r: &Rational) -> String {
    format_rational(r)
}

/// `s_{n-1} ... s_1` with `s_1` applied first.
fn cycle_up(ctx: &OperatorContext) -> Op {
    (0..ctx.n.saturating_sub(1)).fold(Op::identity(), |acc, i| ctx.swap(i, i + 1).mul(&acc))
}

// Operator suite.

fn check_dunkl_relations(_: &Workspace, cfg: &VerifyConfig) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for (n, alpha) in cfg.grid() {
        let ctx = OperatorContext::new(n, alpha.clone());
        let probes = test_monomials(n, cfg.operator_degree);
        let inv = Rational::one() / &alpha;
        let mut t = Tally::new("dunkl-commutation-relations", n, &alpha).degree(cfg.operator_degree);
        for i in 0..n {
            for j in 0..n {
                let lhs = commutator(&ctx.dunkl(i), &ctx.mul_var(j));
                let rhs = if i == j {
                    Op::sum((0..n).filter(|&p| p != i).map(|p| ctx.swap(i, p))).scale(&inv).plus_scalar(&int(1))
                } else {
                    ctx.swap(i, j).scale(&-&inv)
                };
                t.op_eq(&lhs, &rhs, &probes, || format!("[T_{i}, x_{j}]"));
                if i != j {
                    let lhs = ctx.dunkl(i).mul(&ctx.swap(i, j));
                    let rhs = ctx.swap(i, j).mul(&ctx.dunkl(j));
                    t.op_eq(&lhs, &rhs, &probes, || format!("T_{i} s_{i}{j} = s_{i}{j} T_{j}"));
                }
                for p in j + 1..n {
                    if i != j && i != p {
                        let c = commutator(&ctx.dunkl(i), &ctx.swap(j, p));
                        t.op_eq(&c, &Op::zero(), &probes, || format!("[T_{i}, s_{j}{p}]"));
                    }
                }
            }
        }
        out.push(t.done());
    }
    Ok(out)
}

fn check_commutativity(_: &Workspace, cfg: &VerifyConfig) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for (n, alpha) in cfg.grid() {
        let ctx = OperatorContext::new(n, alpha.clone());
        let probes = test_monomials(n, cfg.operator_degree);
        let mut t = Tally::new("operator-commutativity", n, &alpha).degree(cfg.operator_degree);
        let mut families: Vec<(String, Vec<Op>)> = vec![
            ("T".into(), (0..n).map(|i| ctx.dunkl(i)).collect()),
            ("xi".into(), (0..n).map(|i| ctx.cherednik(i)).collect()),
            ("h".into(), (0..n).map(|i| ctx.hermite_h(i)).collect()),
        ];
        for a in &cfg.laguerre_a {
            let c = ctx.clone().with_a(a.clone());
            families.push((format!("l(a={})", ratio_param(a)), (0..n).map(|i| c.laguerre_l(i)).collect()));
        }
        for (name, ops) in &families {
            for i in 0..n {
                for j in i + 1..n {
                    let c = commutator(&ops[i], &ops[j]);
                    t.op_eq(&c, &Op::zero(), &probes, || format!("[{name}_{i}, {name}_{j}]"));
                }
            }
        }
        out.push(t.done());
    }
    Ok(out)
}

fn check_hecke_relations(_: &Workspace, cfg: &VerifyConfig) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for (n, alpha) in cfg.grid() {
        let ctx = OperatorContext::new(n, alpha.clone());
        let probes = test_monomials(n, cfg.operator_degree);
        let mut t = Tally::new("hecke-relations", n, &alpha).degree(cfg.operator_degree);
        let mut families: Vec<(String, Vec<Op>)> = vec![
            ("xi".into(), (0..n).map(|i| ctx.cherednik(i)).collect()),
            ("h".into(), (0..n).map(|i| ctx.hermite_h(i)).collect()),
        ];
        for a in &cfg.laguerre_a {
            let c = ctx.clone().with_a(a.clone());
            families.push((format!("l(a={})", ratio_param(a)), (0..n).map(|i| c.laguerre_l(i)).collect()));
        }
        let one = Op::identity();
        for (name, x) in &families {
            for i in 0..n.saturating_sub(1) {
                let s = ctx.swap(i, i + 1);
                let lhs = x[i].mul(&s).sub(&s.mul(&x[i + 1]));
                t.op_eq(&lhs, &one, &probes, || format!("{name}_{i} s_{i} - s_{i} {name}_{}", i + 1));
                let lhs = x[i + 1].mul(&s).sub(&s.mul(&x[i]));
                t.op_eq(&lhs, &one.scale(&int(-1)), &probes, || format!("{name}_{} s_{i} - s_{i} {name}_{i}", i + 1));
            }
            for i in 0..n {
                for j in (0..n.saturating_sub(1)).filter(|&j| j != i && j + 1 != i) {
                    let c = commutator(&x[i], &ctx.swap(j, j + 1));
                    t.op_eq(&c, &Op::zero(), &probes, || format!("[{name}_{i}, s_{j}]"));
                }
            }
        }
        out.push(t.done());
    }
    Ok(out)
}

/// `[X_j, Y_i]` for a Cherednik-type `X` and Dunkl-type `Y` (`T` or `B`).
fn cherednik_commutators(
    t: &mut Tally,
    ctx: &OperatorContext,
    y: &dyn Fn(usize) -> Op,
    label: &str,
    probes: &[SparsePoly],
) {
    let n = ctx.n;
    for j in 0..n {
        for i in 0..n {
            let lhs = commutator(&ctx.cherednik(j), &y(i));
            let rhs = if i < j {
                y(i).mul(&ctx.swap(i, j))
            } else if i > j {
                y(j).mul(&ctx.swap(i, j))
            } else {
                let mut r = y(j).scale(&-&ctx.alpha);
                for p in 0..j {
                    r = r.sub(&ctx.swap(j, p).mul(&y(j)));
                }
                for p in j + 1..n {
                    r = r.sub(&y(j).mul(&ctx.swap(j, p)));
                }
                r
            };
            t.op_eq(&lhs, &rhs, probes, || format!("[xi_{j}, {label}_{i}]"));
        }
    }
}

fn check_cherednik_dunkl_commutators(_: &Workspace, cfg: &VerifyConfig) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for (n, alpha) in cfg.grid() {
        let ctx = OperatorContext::new(n, alpha.clone());
        let probes = test_monomials(n, cfg.operator_degree);
        let mut t = Tally::new("cherednik-dunkl-commutators", n, &alpha).degree(cfg.operator_degree);
        cherednik_commutators(&mut t, &ctx, &|i| ctx.dunkl(i), "T", &probes);
        for a in &cfg.laguerre_a {
            let c = ctx.clone().with_a(a.clone());
            cherednik_commutators(&mut t, &c, &|i| c.laguerre_b(i), &format!("B(a={})", ratio_param(a)), &probes);
        }
        out.push(t.done());
    }
    Ok(out)
}

/// `X_j L = L X_{j+shift}` away from the wrap-around index and
/// `X_w L = L (X_w' + c)` at it.
#[allow(clippy::too_many_arguments)]
fn intertwining(
    t: &mut Tally,
    x: &dyn Fn(usize) -> Op,
    l: &Op,
    n: usize,
    raising: bool,
    alpha: &Rational,
    label: &str,
    probes: &[SparsePoly],
) {
    for j in 0..n {
        let (target, shift) = if raising {
            if j + 1 < n {
                (j + 1, Rational::zero())
            } else {
                (0, alpha.clone())
            }
        } else if j > 0 {
            (j - 1, Rational::zero())
        } else {
            (n - 1, -alpha)
        };
        let lhs = x(j).mul(l);
        let rhs = l.mul(&x(target).plus_scalar(&shift));
        t.op_eq(&lhs, &rhs, probes, || format!("{label}: index {j}"));
    }
}

fn check_raising_lowering_intertwining(_: &Workspace, cfg: &VerifyConfig) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for (n, alpha) in cfg.grid() {
        let ctx = OperatorContext::new(n, alpha.clone());
        let probes = test_monomials(n, cfg.operator_degree);
        let mut t = Tally::new("raising-lowering-intertwining", n, &alpha).degree(cfg.operator_degree);
        let xi = |i| ctx.cherednik(i);
        let h = |i| ctx.hermite_h(i);
        intertwining(&mut t, &xi, &ctx.phi(), n, true, &alpha, "xi Phi", &probes);
        intertwining(&mut t, &xi, &ctx.phi_hat(), n, false, &alpha, "xi Phi-hat", &probes);
        intertwining(&mut t, &h, &ctx.phi_hat_star(), n, true, &alpha, "h Phi-hat*", &probes);
        intertwining(&mut t, &h, &ctx.phi_hat(), n, false, &alpha, "h Phi-hat", &probes);
        for a in &cfg.laguerre_a {
            let c = ctx.clone().with_a(a.clone());
            let l = |i| c.laguerre_l(i);
            let tag = ratio_param(a);
            intertwining(&mut t, &xi, &c.psi_hat(), n, false, &alpha, &format!("xi Psi-hat a={tag}"), &probes);
            intertwining(&mut t, &l, &c.psi_hat_star(), n, true, &alpha, &format!("l Psi-hat* a={tag}"), &probes);
            intertwining(&mut t, &l, &c.psi_hat(), n, false, &alpha, &format!("l Psi-hat a={tag}"), &probes);
        }
        out.push(t.done());
    }
    Ok(out)
}

fn check_laplacian_commutators(_: &Workspace, cfg: &VerifyConfig) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for (n, alpha) in cfg.grid() {
        let ctx = OperatorContext::new(n, alpha.clone());
        let probes = test_monomials(n, cfg.operator_degree);
        let mut t = Tally::new("laplacian-commutators", n, &alpha).degree(cfg.operator_degree);
        let lap = ctx.laplacian();
        for i in 0..n {
            let lhs = commutator(&ctx.cherednik(i), &lap);
            let rhs = ctx.dunkl(i).pow(2).scale(&(&alpha * int(-2)));
            t.op_eq(&lhs, &rhs, &probes, || format!("[xi_{i}, Delta]"));
            let lhs = commutator(&ctx.mul_var(i), &lap);
            t.op_eq(&lhs, &ctx.dunkl(i).scale(&int(-2)), &probes, || format!("[x_{i}, Delta]"));
        }
        let up = cycle_up(&ctx);
        let lhs = commutator(&ctx.phi(), &lap);
        t.op_eq(&lhs, &up.mul(&ctx.dunkl(0)).scale(&int(-2)), &probes, || "[Phi, Delta]".into());
        let direct = up.mul(&ctx.mul_var(0).scale(&int(2)).sub(&ctx.dunkl(0)));
        t.op_eq(&ctx.phi_hat_star(), &direct, &probes, || "Phi-hat* two forms".into());
        for a in &cfg.laguerre_a {
            let c = ctx.clone().with_a(a.clone());
            for i in 0..n {
                let lhs = commutator(&c.cherednik(i), &c.sum_b());
                let rhs = c.laguerre_b(i).scale(&-&alpha);
                t.op_eq(&lhs, &rhs, &probes, || format!("[xi_{i}, sum B] a={}", ratio_param(a)));
            }
        }
        out.push(t.done());
    }
    Ok(out)
}

fn check_second_order_operators(_: &Workspace, cfg: &VerifyConfig) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for (n, alpha) in cfg.grid() {
        let ctx = OperatorContext::new(n, alpha.clone());
        let probes = test_monomials(n, cfg.operator_degree);
        let mut t = Tally::new("second-order-operators", n, &alpha).degree(cfg.operator_degree);
        let d2 = ctx.d_tilde2();
        let half = commutator(&ctx.euler(0), &d2).scale(&rat(1, 2));
        t.op_eq(&ctx.d_tilde1(), &half, &probes, || "D1 = [E0, D2]/2".into());
        let shift = int(2) * int(n as i64 - 1) / &alpha;
        let rhs = ctx.calogero().add(&ctx.euler(1).scale(&shift));
        t.op_eq(&d2, &rhs, &probes, || "D2 = H + (2/alpha)(n-1) E1".into());
        for i in 0..n {
            t.op_eq(&ctx.cherednik(i), &ctx.cherednik_divided(i), &probes, || format!("xi_{i} two forms"));
        }
        out.push(t.done());
    }
    Ok(out)
}

// Jack suite.

fn jack_cases(cfg: &VerifyConfig, n: usize) -> Vec<Composition> {
    compositions_up_to(n, cfg.max_weight)
}

fn check_jack_eigenvalues(ws: &Workspace, cfg: &VerifyConfig) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for (n, alpha) in cfg.grid() {
        let jack = ws.jack(n, &alpha);
        let ctx = jack.context();
        let mut t = Tally::new("jack-cherednik-eigenvalues", n, &alpha).param("max_weight", cfg.max_weight);
        for eta in jack_cases(cfg, n) {
            let e = jack.get(&eta)?;
            let ev = eigenvalues(&eta, &alpha);
            for i in 0..n {
                t.case(ctx.apply_cherednik(&e, i) == e.scale(&ev[i]), || format!("eta = {eta:?}, i = {i}"));
            }
        }
        out.push(t.done());
    }
    Ok(out)
}

fn check_jack_oracle(ws: &Workspace, cfg: &VerifyConfig) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for (n, alpha) in cfg.grid() {
        let jack = ws.jack(n, &alpha);
        let mut t = Tally::new("jack-oracle-equivalence", n, &alpha).param("max_weight", cfg.max_weight);
        for eta in jack_cases(cfg, n) {
            t.case(*jack.get(&eta)? == oracle(n, &alpha, &eta)?, || format!("eta = {eta:?}"));
        }
        out.push(t.done());
    }
    Ok(out)
}

fn check_jack_structure(ws: &Workspace, cfg: &VerifyConfig) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for (n, alpha) in cfg.grid() {
        let jack = ws.jack(n, &alpha);
        let mut t = Tally::new("jack-triangularity-positivity", n, &alpha).param("max_weight", cfg.max_weight);
        for eta in jack_cases(cfg, n) {
            let e = jack.get(&eta)?;
            t.case(is_triangular(&e, &eta), || format!("triangularity, eta = {eta:?}"));
            t.case(all_coefficients_positive(&e), || format!("positivity, eta = {eta:?}"));
        }
        out.push(t.done());
    }
    Ok(out)
}

fn check_jack_evaluation(ws: &Workspace, cfg: &VerifyConfig) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for (n, alpha) in cfg.grid() {
        let jack = ws.jack(n, &alpha);
        let mut t = Tally::new("jack-evaluation-at-ones", n, &alpha).param("max_weight", cfg.max_weight);
        for eta in jack_cases(cfg, n) {
            t.case(jack.get(&eta)?.eval_ones() == value_at_ones(&eta, &alpha), || format!("eta = {eta:?}"));
        }
        out.push(t.done());
    }
    Ok(out)
}

fn check_jack_shift_and_reversal(ws: &Workspace, cfg: &VerifyConfig) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for (n, alpha) in cfg.grid() {
        let jack = ws.jack(n, &alpha);
        let mut t = Tally::new("jack-product-shift-and-reversal", n, &alpha).param("max_weight", cfg.max_weight);
        for eta in jack_cases(cfg, n) {
            let e = jack.get(&eta)?;
            for p in 1..=2u32 {
                let shifted: Composition = eta.iter().map(|x| x + p).collect();
                let lhs = e.mul_monomial(&vec![p as i32; n], &Rational::one());
                t.case(lhs == *jack.get(&shifted)?, || format!("x^{p} E_eta, eta = {eta:?}"));
            }
            let (lhs, rhs) = reversal_pair(&jack, &eta)?;
            t.case(lhs == rhs, || format!("reversal, eta = {eta:?}"));
        }
        out.push(t.done());
    }
    Ok(out)
}

fn check_jack_switching(ws: &Workspace, cfg: &VerifyConfig) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for (n, alpha) in cfg.grid() {
        let jack = ws.jack(n, &alpha);
        let ctx = jack.context();
        let mut t = Tally::new("jack-switching-relation", n, &alpha).param("max_weight", cfg.max_weight);
        for eta in jack_cases(cfg, n) {
            for i in 0..n.saturating_sub(1) {
                let lhs = ctx.apply_swap(&*jack.get(&eta)?, i, i + 1);
                let rhs = switch_combination(&eta, i, &alpha, |c| jack.get(c))?;
                t.case(lhs == rhs, || format!("eta = {eta:?}, i = {i}"));
            }
        }
        out.push(t.done());
    }
    Ok(out)
}

fn check_jack_raising_lowering(ws: &Workspace, cfg: &VerifyConfig) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for (n, alpha) in cfg.grid() {
        let jack = ws.jack(n, &alpha);
        let ctx = jack.context();
        let mut t = Tally::new("jack-raising-lowering", n, &alpha).param("max_weight", cfg.max_weight);
        for eta in jack_cases(cfg, n) {
            let e = jack.get(&eta)?;
            if weight(&eta) < cfg.max_weight {
                t.case(ctx.apply_phi(&e) == *jack.get(&phi(&eta))?, || format!("Phi, eta = {eta:?}"));
            }
            let low = ctx.apply_phi_hat(&e);
            let expected = match phi_hat(&eta) {
                Some(m) => jack.get(&m)?.scale(&lowering_constant(&eta, &alpha)),
                None => SparsePoly::zero(n),
            };
            t.case(low == expected, || format!("Phi-hat, eta = {eta:?}"));
        }
        out.push(t.done());
    }
    Ok(out)
}

fn check_jack_symmetric_normalization(ws: &Workspace, cfg: &VerifyConfig) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for (n, alpha) in cfg.grid() {
        let jack = ws.jack(n, &alpha);
        let mut t = Tally::new("jack-symmetric-normalization", n, &alpha).param("max_weight", cfg.max_weight);
        let n_fact = crate::rational::factorial(n as u32);
        for w in 0..=cfg.max_weight {
            for kappa in partitions(w, n) {
                let mut kappa = kappa;
                kappa.resize(n, 0);
                let j = jack.jack_j(&kappa)?;
                t.case(j.symmetrize(n) == j.scale(&n_fact), || format!("Sym J, kappa = {kappa:?}"));
                let hook = crate::combinatorics::hook_norm_j(&kappa, &alpha);
                let lead: Vec<i32> = kappa.iter().map(|&x| x as i32).collect();
                let expected = Rational::one() / EtaConstants::new(&kappa, &alpha).d_prime;
                t.case(j.coeff(&lead) / &hook == expected, || format!("leading coefficient, kappa = {kappa:?}"));
            }
        }
        for eta in jack_cases(cfg, n) {
            let sym = jack.get(&eta)?.symmetrize(n);
            let expected = jack.jack_j(&eta_plus(&eta))?.scale(&symmetrization_constant(&eta, &alpha));
            t.case(sym == expected, || format!("Sym E, eta = {eta:?}"));
        }
        out.push(t.done());
    }
    Ok(out)
}

// Hermite suite.

fn check_hermite_eigen(ws: &Workspace, cfg: &VerifyConfig) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for (n, alpha) in cfg.grid() {
        let herm = ws.hermite(n, &alpha);
        let ctx = OperatorContext::new(n, alpha.clone());
        let mut t = Tally::new("hermite-eigenvalues", n, &alpha).param("max_weight", cfg.max_weight);
        for eta in jack_cases(cfg, n) {
            let h = herm.get(&eta)?;
            let ev = eigenvalues(&eta, &alpha);
            for i in 0..n {
                t.case(ctx.apply_hermite_h(&h, i) == h.scale(&ev[i]), || format!("h_{i}, eta = {eta:?}"));
            }
            let energy = int(-2 * weight(&eta) as i64);
            t.case(ctx.apply_hermite_hamiltonian(&h) == h.scale(&energy), || format!("hamiltonian, eta = {eta:?}"));
        }
        out.push(t.done());
    }
    Ok(out)
}

fn check_hermite_switching(ws: &Workspace, cfg: &VerifyConfig) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for (n, alpha) in cfg.grid() {
        let herm = ws.hermite(n, &alpha);
        let ctx = OperatorContext::new(n, alpha.clone());
        let mut t = Tally::new("hermite-switching-relation", n, &alpha).param("max_weight", cfg.max_weight);
        for eta in jack_cases(cfg, n) {
            for i in 0..n.saturating_sub(1) {
                let lhs = ctx.apply_swap(&*herm.get(&eta)?, i, i + 1);
                let rhs = switch_combination(&eta, i, &alpha, |c| herm.get(c))?;
                t.case(lhs == rhs, || format!("eta = {eta:?}, i = {i}"));
            }
        }
        out.push(t.done());
    }
    Ok(out)
}

fn check_hermite_raising_lowering(ws: &Workspace, cfg: &VerifyConfig) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for (n, alpha) in cfg.grid() {
        let herm = ws.hermite(n, &alpha);
        let ctx = OperatorContext::new(n, alpha.clone());
        let mut t = Tally::new("hermite-raising-lowering", n, &alpha).param("max_weight", cfg.max_weight);
        for eta in jack_cases(cfg, n) {
            let h = herm.get(&eta)?;
            let expected = match phi_hat(&eta) {
                Some(m) => herm.get(&m)?.scale(&lowering_constant(&eta, &alpha)),
                None => SparsePoly::zero(n),
            };
            t.case(ctx.apply_phi_hat(&h) == expected, || format!("Phi-hat, eta = {eta:?}"));
            if weight(&eta) < cfg.max_weight {
                let up = herm.get(&phi(&eta))?.scale(&int(2));
                t.case(ctx.apply_phi_hat_star(&h) == up, || format!("Phi-hat*, eta = {eta:?}"));
            }
            let step = hermite_norm_ratio(&phi(&eta), &alpha) / hermite_norm_ratio(&eta, &alpha);
            let dp = |c: &[u32]| EtaConstants::new(c, &alpha).d_prime;
            t.case(step == dp(&phi(&eta)) / (int(2) * &alpha * dp(&eta)), || format!("norm step Phi, eta = {eta:?}"));
            for i in 0..n.saturating_sub(1) {
                if eta[i] < eta[i + 1] {
                    let d = crate::combinatorics::delta(&eta, i, &alpha);
                    let lhs = hermite_norm_ratio(&swap(&eta, i), &alpha);
                    let rhs = (Rational::one() - Rational::one() / (&d * &d)) * hermite_norm_ratio(&eta, &alpha);
                    t.case(lhs == rhs, || format!("norm step s_{i}, eta = {eta:?}"));
                }
            }
        }
        out.push(t.done());
    }
    Ok(out)
}

fn check_hermite_pairing(ws: &Workspace, cfg: &VerifyConfig) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for (n, alpha) in cfg.grid() {
        let jack = ws.jack(n, &alpha);
        let ctx = jack.context();
        let mut t = Tally::new("hermite-pairing", n, &alpha).param("max_weight", cfg.max_weight);
        for w in 0..=cfg.max_weight {
            let etas = compositions(n, w);
            for eta in &etas {
                let expected = pow(&int(2), w as i32) * hermite_norm_ratio(eta, &alpha);
                for nu in &etas {
                    let v = pairing_h(&ctx, &*jack.get(nu)?, &*jack.get(eta)?);
                    let target = if nu == eta { expected.clone() } else { Rational::zero() };
                    t.case(v == target, || format!("[E_{nu:?}, E_{eta:?}]"));
                }
            }
        }
        out.push(t.done());
    }
    Ok(out)
}

fn check_power_sum_pairing(ws: &Workspace, cfg: &VerifyConfig) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    let max_w = cfg.ct_max_weight;
    for (n, alpha) in cfg.grid() {
        let jack = ws.jack(n, &alpha);
        let ctx = jack.context();
        let ps = PowerSumBasis::new(n, &alpha, max_w);
        let mut t = Tally::new("pairing-power-sum-proportionality", n, &alpha).param("max_weight", max_w);
        for w in 0..=max_w {
            for lambda in partitions(w, n) {
                let mut lambda = lambda;
                lambda.resize(n, 0);
                let block: Vec<Composition> =
                    compositions(n, w).into_iter().filter(|c| eta_plus(c) == lambda).collect();
                let factor = pairing_block_factor(&lambda, &alpha);
                for eta in &block {
                    for nu in &block {
                        let (f, g) = (jack.get(nu)?, jack.get(eta)?);
                        let dual = ps.inner(&f, &g)?;
                        t.case(pairing_h(&ctx, &f, &g) == &factor * &dual, || {
                            format!("block {lambda:?}, {nu:?}, {eta:?}")
                        });
                        let c = EtaConstants::new(eta, &alpha);
                        let target = if nu == eta { &c.d_prime / &c.d } else { Rational::zero() };
                        t.case(dual == target, || format!("power-sum norm {nu:?}, {eta:?}"));
                    }
                }
            }
        }
        out.push(t.done());
    }
    Ok(out)
}

fn check_hermite_harmonics(ws: &Workspace, cfg: &VerifyConfig) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for (n, alpha) in cfg.grid() {
        let jack = ws.jack(n, &alpha);
        let herm = ws.hermite(n, &alpha);
        let ctx = jack.context();
        let mut t = Tally::new("hermite-harmonic-decomposition", n, &alpha).param("max_weight", cfg.max_weight);
        for eta in jack_cases(cfg, n) {
            let pieces = harmonic_decomposition_a(&jack, &eta)?;
            for p in &pieces {
                t.case(ctx.apply_laplacian(&p.harmonic).is_zero(), || format!("Delta Y, eta = {eta:?}, m = {}", p.m));
            }
            t.case(reassemble(&pieces, n, false) == *jack.get(&eta)?, || format!("reassembly, eta = {eta:?}"));
            let h = hermite_from_harmonics(&pieces, n, &alpha);
            t.case(h == *herm.get(&eta)?, || format!("Laguerre form of E^(H), eta = {eta:?}"));
        }
        out.push(t.done());
    }
    Ok(out)
}

// Laguerre suite.

fn laguerre_grid(cfg: &VerifyConfig) -> Vec<(usize, Rational, Rational)> {
    cfg.grid().into_iter().flat_map(|(n, al)| cfg.laguerre_a.iter().map(move |a| (n, al.clone(), a.clone()))).collect()
}

fn check_laguerre_eigen(ws: &Workspace, cfg: &VerifyConfig) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for (n, alpha, a) in laguerre_grid(cfg) {
        let lag = ws.laguerre(n, &alpha, &a);
        let ctx = lag.context();
        let mut t = Tally::new("laguerre-eigenvalues", n, &alpha).param("a", ratio_param(&a));
        for eta in jack_cases(cfg, n) {
            let l = lag.get(&eta)?;
            let ev = eigenvalues(&eta, &alpha);
            for i in 0..n {
                t.case(ctx.apply_laguerre_l(&l, i) == l.scale(&ev[i]), || format!("l_{i}, eta = {eta:?}"));
            }
            let energy = int(-4 * weight(&eta) as i64);
            t.case(ctx.apply_laguerre_hamiltonian(&l) == l.scale(&energy), || format!("hamiltonian, eta = {eta:?}"));
        }
        out.push(t.done());
    }
    Ok(out)
}

fn check_laguerre_switching_and_origin(ws: &Workspace, cfg: &VerifyConfig) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for (n, alpha, a) in laguerre_grid(cfg) {
        let lag = ws.laguerre(n, &alpha, &a);
        let ctx = lag.context();
        let mut t = Tally::new("laguerre-switching-and-origin", n, &alpha).param("a", ratio_param(&a));
        for eta in jack_cases(cfg, n) {
            for i in 0..n.saturating_sub(1) {
                let lhs = ctx.apply_swap(&*lag.get(&eta)?, i, i + 1);
                let rhs = switch_combination(&eta, i, &alpha, |c| lag.get(c))?;
                t.case(lhs == rhs, || format!("switching, eta = {eta:?}, i = {i}"));
            }
            let at0 = lag.get(&eta)?.constant_coeff();
            t.case(at0 == laguerre_at_zero(&eta, &alpha, &a), || format!("value at 0, eta = {eta:?}"));
        }
        out.push(t.done());
    }
    Ok(out)
}

fn check_laguerre_raising_lowering(ws: &Workspace, cfg: &VerifyConfig) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for (n, alpha, a) in laguerre_grid(cfg) {
        let lag = ws.laguerre(n, &alpha, &a);
        let jack = lag.jack().clone();
        let ctx = lag.context();
        let mut t = Tally::new("laguerre-raising-lowering", n, &alpha).param("a", ratio_param(&a));
        for eta in jack_cases(cfg, n) {
            let c = laguerre_lowering_constant(&eta, &alpha, &a);
            let (low_j, low_l) = match phi_hat(&eta) {
                Some(m) => (jack.get(&m)?.scale(&c), lag.get(&m)?.scale(&c)),
                None => (SparsePoly::zero(n), SparsePoly::zero(n)),
            };
            t.case(ctx.apply_psi_hat(&*jack.get(&eta)?) == low_j, || format!("Psi-hat on E, eta = {eta:?}"));
            let l = lag.get(&eta)?;
            t.case(ctx.apply_psi_hat(&l) == low_l, || format!("Psi-hat on E^(L), eta = {eta:?}"));
            if weight(&eta) < cfg.max_weight {
                let up = lag.get(&phi(&eta))?;
                t.case(ctx.apply_psi_hat_star(&l) == *up, || format!("Psi-hat*, eta = {eta:?}"));
            }
            let step = laguerre_norm_ratio(&phi(&eta), &alpha, &a) / laguerre_norm_ratio(&eta, &alpha, &a);
            let low = laguerre_lowering_constant(&phi(&eta), &alpha, &a);
            t.case(step == low, || format!("norm step Phi, eta = {eta:?}"));
        }
        out.push(t.done());
    }
    Ok(out)
}

fn check_laguerre_pairing(ws: &Workspace, cfg: &VerifyConfig) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for (n, alpha, a) in laguerre_grid(cfg) {
        let lag = ws.laguerre(n, &alpha, &a);
        let jack = lag.jack().clone();
        let ctx = lag.context();
        let mut t = Tally::new("laguerre-pairing", n, &alpha).param("a", ratio_param(&a));
        for w in 0..=cfg.max_weight {
            let etas = compositions(n, w);
            for eta in &etas {
                let expected = pow(&int(4), w as i32) * laguerre_norm_ratio(eta, &alpha, &a);
                for nu in &etas {
                    let v = pairing_l(&ctx, &*jack.get(nu)?, &*jack.get(eta)?);
                    let target = if nu == eta { expected.clone() } else { Rational::zero() };
                    t.case(v == target, || format!("[E_{nu:?}, E_{eta:?}]"));
                }
            }
        }
        out.push(t.done());
    }
    Ok(out)
}

/// Rebuilds `E^(L)` from harmonic components with the Laguerre index `index(k) + lambda_B - 1`.
fn laguerre_from_harmonics_with(
    pieces: &[crate::hermite_laguerre::HarmonicPiece],
    n: usize,
    alpha: &Rational,
    a: &Rational,
    index: impl Fn(u32) -> i64,
) -> SparsePoly {
    let lam = lambda_b(n, alpha, a);
    let r2 = (0..n).fold(SparsePoly::zero(n), |acc, i| acc + SparsePoly::var(n, i));
    pieces.iter().fold(SparsePoly::zero(n), |acc, p| {
        let c = int(index(p.degree)) + &lam - int(1);
        let sign = if p.m % 2 == 0 { int(1) } else { int(-1) };
        let l = laguerre_1d(p.m, &c, &r2).scale(&(sign * crate::rational::factorial(p.m)));
        acc + &l * &p.harmonic
    })
}

fn check_laguerre_harmonics(ws: &Workspace, cfg: &VerifyConfig) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for (n, alpha, a) in laguerre_grid(cfg) {
        let lag = ws.laguerre(n, &alpha, &a);
        let jack = lag.jack().clone();
        let ctx = lag.context();
        let mut t = Tally::new("laguerre-harmonic-decomposition", n, &alpha).param("a", ratio_param(&a));
        for eta in jack_cases(cfg, n) {
            let pieces = harmonic_decomposition_b(&lag, &eta)?;
            for p in &pieces {
                t.case(ctx.apply_sum_b(&p.harmonic).is_zero(), || format!("sum B Y, eta = {eta:?}, m = {}", p.m));
            }
            t.case(reassemble(&pieces, n, true) == *jack.get(&eta)?, || format!("reassembly, eta = {eta:?}"));
            let l = laguerre_from_harmonics(&pieces, n, &alpha, &a);
            t.case(l == *lag.get(&eta)?, || format!("Laguerre form of E^(L), eta = {eta:?}"));
        }
        out.push(t.done());
    }
    Ok(out)
}

/// The Laguerre index printed as `|eta| - m + ...` in place of `2(|eta| - m) + ...`.
fn check_laguerre_harmonics_printed(ws: &Workspace, cfg: &VerifyConfig) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for (n, alpha, a) in laguerre_grid(cfg) {
        let lag = ws.laguerre(n, &alpha, &a);
        let mut t = Tally::new("laguerre-harmonic-index-as-printed", n, &alpha).param("a", ratio_param(&a));
        for eta in jack_cases(cfg, n) {
            let pieces = harmonic_decomposition_b(&lag, &eta)?;
            let l = laguerre_from_harmonics_with(&pieces, n, &alpha, &a, |k| k as i64);
            t.case(l == *lag.get(&eta)?, || format!("eta = {eta:?}"));
        }
        out.push(t.done());
    }
    Ok(out)
}

// Constant-term suite.

fn ct_grid(cfg: &VerifyConfig) -> Vec<(usize, u32)> {
    (1..=cfg.max_n).flat_map(|n| cfg.ct_k.iter().map(move |&k| (n, k))).collect()
}

fn ct_alpha(k: u32) -> Rational {
    Rational::one() / int(k as i64)
}

fn check_ct_norms(ws: &Workspace, cfg: &VerifyConfig) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for (n, k) in ct_grid(cfg) {
        let alpha = ct_alpha(k);
        let jack = ws.jack(n, &alpha);
        let w = CtWeightPoly::new(n, k, CtWeight::Single);
        let mut t = Tally::new("ct-norms", n, &alpha).param("k", k).param("max_weight", cfg.ct_max_weight);
        for eta in compositions_up_to(n, cfg.ct_max_weight) {
            let e = jack.get(&eta)?;
            let v = w.inner(&e, &e);
            t.case(v == ct_norm_formula(&eta, k), || format!("eta = {eta:?}"));
            if n == 2 && k == 1 && eta == [1, 0] {
                t.case(v == rat(3, 2), || "spot value <E_(1,0), E_(1,0)> = 3/2".into());
            }
        }
        out.push(t.done());
    }
    Ok(out)
}

fn check_ct_orthogonality(ws: &Workspace, cfg: &VerifyConfig) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for (n, k) in ct_grid(cfg) {
        let alpha = ct_alpha(k);
        let jack = ws.jack(n, &alpha);
        let w = CtWeightPoly::new(n, k, CtWeight::Single);
        let mut t = Tally::new("ct-orthogonality", n, &alpha).param("k", k).param("max_weight", cfg.ct_max_weight);
        for d in 0..=cfg.ct_max_weight {
            let etas = compositions(n, d);
            for (i, eta) in etas.iter().enumerate() {
                for nu in &etas[i + 1..] {
                    let v = w.inner(&*jack.get(eta)?, &*jack.get(nu)?);
                    t.case(v.is_zero(), || format!("<E_{eta:?}, E_{nu:?}> = {v}"));
                }
            }
        }
        out.push(t.done());
    }
    Ok(out)
}

fn check_ct_recursions(ws: &Workspace, cfg: &VerifyConfig) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for (n, k) in ct_grid(cfg) {
        let alpha = ct_alpha(k);
        let jack = ws.jack(n, &alpha);
        let ctx = jack.context();
        let w = CtWeightPoly::new(n, k, CtWeight::Single);
        let mut t = Tally::new("ct-norm-recursions", n, &alpha).param("k", k).param("max_weight", cfg.ct_max_weight);
        for eta in compositions_up_to(n, cfg.ct_max_weight.saturating_sub(1)) {
            let e = jack.get(&eta)?;
            let norm = w.inner(&e, &e);
            let raised = ctx.apply_phi(&e);
            t.case(w.inner(&raised, &raised) == norm, || format!("Phi isometry, eta = {eta:?}"));
        }
        for eta in compositions_up_to(n, cfg.ct_max_weight) {
            for i in 0..n.saturating_sub(1) {
                if eta[i] < eta[i + 1] {
                    let d = crate::combinatorics::delta(&eta, i, &alpha);
                    let e = jack.get(&eta)?;
                    let s = jack.get(&swap(&eta, i))?;
                    let rhs = (Rational::one() - Rational::one() / (&d * &d)) * w.inner(&e, &e);
                    t.case(w.inner(&s, &s) == rhs, || format!("s_{i} step, eta = {eta:?}"));
                }
            }
        }
        out.push(t.done());
    }
    Ok(out)
}

fn check_ct_ratio(ws: &Workspace, cfg: &VerifyConfig) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for (n, k) in ct_grid(cfg).into_iter().filter(|(n, _)| *n >= 2) {
        let alpha = ct_alpha(k);
        let jack = ws.jack(n, &alpha);
        let w = CtWeightPoly::new(n, k, CtWeight::Single);
        let mut t = Tally::new("ct-selberg-type-ratio", n, &alpha).param("k", k).param("max_ab", cfg.ct_max_exponent);
        for eta in compositions_up_to(n, cfg.ct_max_weight) {
            for a in 0..=cfg.ct_max_exponent {
                for b in 0..=cfg.ct_max_exponent {
                    let (lhs, rhs) = selberg_ratio_sides(&jack, &w, &eta, a, b)?;
                    t.case(lhs == rhs, || format!("eta = {eta:?}, a = {a}, b = {b}: {lhs} vs {rhs}"));
                }
            }
        }
        out.push(t.done());
    }
    Ok(out)
}

fn check_ct_norm_relation(ws: &Workspace, cfg: &VerifyConfig) -> Result<Vec<Report>> {
    ct_norm_relation(ws, cfg, false)
}

fn check_ct_norm_relation_printed(ws: &Workspace, cfg: &VerifyConfig) -> Result<Vec<Report>> {
    ct_norm_relation(ws, cfg, true)
}

/// The printed form carries an outer inverse on the gamma product.
fn ct_norm_relation(ws: &Workspace, cfg: &VerifyConfig, printed: bool) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    let name = if printed { "ct-norm-relation-as-printed" } else { "ct-norm-relation" };
    for (n, k) in ct_grid(cfg).into_iter().filter(|(n, _)| *n >= 2) {
        let alpha = ct_alpha(k);
        let jack = ws.jack(n, &alpha);
        let w = CtWeightPoly::new(n, k, CtWeight::Single);
        let mut t = Tally::new(name, n, &alpha).param("k", k);
        for eta in compositions_up_to(n, cfg.ct_max_weight) {
            let (lhs, rhs) = norm_relation_sides(&jack, &w, &eta)?;
            let rhs = if printed { jack.eval_ones(&eta)? / gamma_ratio_product(&eta, &alpha) } else { rhs };
            t.case(lhs == rhs, || format!("eta = {eta:?}: {lhs} vs {rhs}"));
        }
        out.push(t.done());
    }
    Ok(out)
}

// Kernel suite.

fn kernel_check(
    ws: &Workspace,
    cfg: &VerifyConfig,
    name: &str,
    run: impl Fn(&Arc<JackBasis>, u32) -> Result<Mismatch>,
) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for (n, alpha) in cfg.grid() {
        let d = cfg.kernel_degree(n);
        let mut t = Tally::new(name, n, &alpha).degree(d);
        t.mismatch(run(&ws.jack(n, &alpha), d)?);
        out.push(t.done());
    }
    Ok(out)
}

fn laguerre_kernel_check(
    ws: &Workspace,
    cfg: &VerifyConfig,
    name: &str,
    run: impl Fn(&LaguerreBasis, u32) -> Result<Mismatch>,
) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for (n, alpha, a) in laguerre_grid(cfg) {
        let d = cfg.kernel_degree(n);
        let mut t = Tally::new(name, n, &alpha).degree(d).param("a", ratio_param(&a));
        t.mismatch(run(&ws.laguerre(n, &alpha, &a), d)?);
        out.push(t.done());
    }
    Ok(out)
}

fn k_a(ws: &Workspace, cfg: &VerifyConfig) -> Result<Vec<Report>> {
    kernel_check(ws, cfg, "kernel-a-exchange-properties", |b, d| check_kernel_a_properties(b, d))
}

fn k_b(ws: &Workspace, cfg: &VerifyConfig) -> Result<Vec<Report>> {
    kernel_check(ws, cfg, "kernel-a-shift-identity", |b, d| check_shift_identity(b, d))
}

fn k_c(ws: &Workspace, cfg: &VerifyConfig) -> Result<Vec<Report>> {
    kernel_check(ws, cfg, "hermite-generating-function", |b, d| {
        check_hermite_generating_function(&HermiteBasis::new(b.clone()), d)
    })
}

fn k_d(ws: &Workspace, cfg: &VerifyConfig) -> Result<Vec<Report>> {
    kernel_check(ws, cfg, "kernel-a-symmetrization", |b, d| check_symmetrization(b, d))
}

fn k_e(ws: &Workspace, cfg: &VerifyConfig) -> Result<Vec<Report>> {
    kernel_check(ws, cfg, "exponential-shift-expansion", |b, d| {
        check_shift_expansion(b, &*ws.binomials(b.n(), b.alpha(), d)?)
    })
}

fn k_f(ws: &Workspace, cfg: &VerifyConfig) -> Result<Vec<Report>> {
    kernel_check(ws, cfg, "power-sum-multiplication", |b, d| check_p1_action(b, &*ws.binomials(b.n(), b.alpha(), d)?))
}

fn k_g(ws: &Workspace, cfg: &VerifyConfig) -> Result<Vec<Report>> {
    kernel_check(ws, cfg, "euler-and-second-order-actions", |b, d| {
        check_operator_actions(b, &*ws.binomials(b.n(), b.alpha(), d)?)
    })
}

fn k_h(ws: &Workspace, cfg: &VerifyConfig) -> Result<Vec<Report>> {
    let (a, b, c) = cfg.pde_params.clone();
    let mut reports =
        kernel_check(ws, cfg, "hypergeometric-2k1-pde", |basis, d| check_hypergeometric_pde(basis, d, &a, &b, &c))?;
    for r in &mut reports {
        if let Report::Identity(r) = r {
            r.params.insert("abc".into(), format!("{},{},{}", ratio_param(&a), ratio_param(&b), ratio_param(&c)));
        }
    }
    Ok(reports)
}

fn k_i(ws: &Workspace, cfg: &VerifyConfig) -> Result<Vec<Report>> {
    laguerre_kernel_check(ws, cfg, "laguerre-generating-function", check_laguerre_generating_function)
}

fn k_j(ws: &Workspace, cfg: &VerifyConfig) -> Result<Vec<Report>> {
    let c = cfg.series_c.clone();
    laguerre_kernel_check(ws, cfg, "laguerre-series-generating-functions", |l, d| {
        check_laguerre_series_generating_functions(l, d, &c)
    })
}

fn k_k(ws: &Workspace, cfg: &VerifyConfig) -> Result<Vec<Report>> {
    laguerre_kernel_check(ws, cfg, "laguerre-binomial-expansions", |l, d| {
        let jack = l.jack();
        check_laguerre_binomial_expansions(l, &*ws.binomials(jack.n(), jack.alpha(), d)?)
    })
}

fn k_l(ws: &Workspace, cfg: &VerifyConfig) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for (n, alpha) in cfg.grid() {
        let d = cfg.max_weight;
        let mut t = Tally::new("binomial-identities", n, &alpha).degree(d);
        t.mismatch(check_binomial_identities(&ws.jack(n, &alpha), &*ws.binomials(n, &alpha, d)?)?);
        out.push(t.done());
    }
    Ok(out)
}

/// The symmetric binomial relation without the `E_nu(1^n)/E_eta(1^n)` weight.
fn k_l_printed(ws: &Workspace, cfg: &VerifyConfig) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for (n, alpha) in cfg.grid() {
        let d = cfg.max_weight;
        let jack = ws.jack(n, &alpha);
        let table = ws.binomials(n, &alpha, d)?;
        let mut t = Tally::new("binomial-symmetric-relation-as-printed", n, &alpha).degree(d);
        for eta in compositions_up_to(n, d) {
            for mw in weight(&eta)..=d {
                for mu in partitions(mw, n) {
                    let mut mu = mu;
                    mu.resize(n, 0);
                    let (lhs, rhs) = symmetric_relation_sides(&jack, &table, &eta, &mu, false)?;
                    t.case(lhs == rhs, || format!("eta = {eta:?}, mu = {mu:?}: {lhs} vs {rhs}"));
                }
            }
        }
        out.push(t.done());
    }
    Ok(out)
}

fn k_n_independence(ws: &Workspace, cfg: &VerifyConfig) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for (n, alpha) in cfg.grid().into_iter().filter(|(n, _)| *n < cfg.max_n) {
        let d = cfg.max_weight;
        let small = ws.binomials(n, &alpha, d)?;
        let large = ws.binomials(n + 1, &alpha, d)?;
        let pad = |c: &[u32]| c.iter().copied().chain(std::iter::once(0)).collect::<Composition>();
        let mut t = Tally::new("binomial-n-independence", n, &alpha).degree(d).param("n2", n + 1);
        for eta in compositions_up_to(n, d) {
            for nu in compositions_up_to(n, weight(&eta)) {
                let (x, y) = (small.get(&eta, &nu), large.get(&pad(&eta), &pad(&nu)));
                t.case(x == y, || format!("binom({eta:?}, {nu:?}): {x} vs {y}"));
            }
        }
        out.push(t.done());
    }
    Ok(out)
}

fn k_m(ws: &Workspace, cfg: &VerifyConfig) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for (n, alpha) in cfg.grid().into_iter().filter(|(n, _)| *n <= 2) {
        let mut t = Tally::new("hermite-summation-formula", n, &alpha).param("t_order", cfg.series_order);
        t.mismatch(check_hermite_summation(&ws.hermite(n, &alpha), cfg.series_order)?);
        out.push(t.done());
    }
    for (n, alpha, a) in laguerre_grid(cfg).into_iter().filter(|(n, _, _)| *n <= 2) {
        let mut t = Tally::new("laguerre-summation-formula", n, &alpha)
            .param("a", ratio_param(&a))
            .param("t_order", cfg.series_order);
        t.mismatch(check_laguerre_summation(&ws.laguerre(n, &alpha, &a), cfg.series_order)?);
        out.push(t.done());
    }
    Ok(out)
}

fn k_symmetry_and_bound(ws: &Workspace, cfg: &VerifyConfig) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for (n, alpha) in cfg.grid() {
        let d = cfg.kernel_degree(n);
        let k = kernel_a(&ws.jack(n, &alpha), d)?;
        let mut t = Tally::new("kernel-a-symmetry-and-bound", n, &alpha).degree(d);
        t.case(k.swap_blocks() == *k.poly(), || "block swap".into());
        let points: Vec<(Vec<f64>, Vec<f64>)> = (0..16)
            .map(|s| {
                let f = |i: usize| ((s * 7 + i * 3) % 11) as f64 / 10.0;
                ((0..n).map(f).collect(), (n..2 * n).map(f).collect())
            })
            .collect();
        let excess = kernel_bound_excess(&k, &points);
        t.case(excess <= 1e-12, || format!("bound exceeded by {excess:e}"));
        out.push(t.done());
    }
    Ok(out)
}

// Numeric suite.

fn numeric_grid(cfg: &VerifyConfig) -> Vec<(usize, Rational)> {
    cfg.grid().into_iter().filter(|(n, _)| *n <= 2).collect()
}

const NORM_TOLERANCE: f64 = 1e-8;
const RATIO_TOLERANCE: f64 = 1e-7;

fn relative(report_rhs: f64, tol: f64) -> f64 {
    tol * report_rhs.abs()
}

fn n_ground_norms(_: &Workspace, cfg: &VerifyConfig) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for (n, alpha) in numeric_grid(cfg) {
        let one = SparsePoly::one(n);
        let af = to_f64(&alpha);
        let h = quad_inner_h(&one, &one, &alpha)?;
        let rhs = hermite_ground_norm(n, af);
        out.push(Report::Numeric(NumericReport::new(
            "ground-norm-hermite",
            n,
            &alpha,
            h,
            rhs,
            relative(rhs, NORM_TOLERANCE),
        )));
        for a in &cfg.laguerre_a {
            let l = quad_inner_l(&one, &one, &alpha, a)?;
            let rhs = laguerre_ground_norm(n, af, to_f64(a));
            out.push(Report::Numeric(
                NumericReport::new("ground-norm-laguerre", n, &alpha, l, rhs, relative(rhs, NORM_TOLERANCE)).with_a(a),
            ));
        }
    }
    Ok(out)
}

fn n_ground_norm_printed(_: &Workspace, cfg: &VerifyConfig) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for (n, alpha) in numeric_grid(cfg) {
        let one = SparsePoly::one(n);
        for a in &cfg.laguerre_a {
            let l = quad_inner_l(&one, &one, &alpha, a)?;
            let rhs = laguerre_ground_norm_printed(n, to_f64(&alpha), to_f64(a));
            let r =
                NumericReport::new("ground-norm-laguerre-as-printed", n, &alpha, l, rhs, relative(rhs, NORM_TOLERANCE));
            out.push(Report::Numeric(r.with_a(a)));
        }
    }
    Ok(out)
}

fn n_orthogonality(ws: &Workspace, cfg: &VerifyConfig) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for (n, alpha) in numeric_grid(cfg) {
        let herm = ws.hermite(n, &alpha);
        let etas = compositions_up_to(n, cfg.quadrature_max_weight);
        let polys = etas.iter().map(|e| Ok((e.clone(), (*herm.get(e)?).clone()))).collect::<Result<Vec<_>>>()?;
        let table = orthogonality_table(&polys, |f, g| quad_inner_h(f, g, &alpha))?;
        let worst = table.iter().map(|r| r.2).fold(0.0, f64::max);
        out.push(Report::Numeric(NumericReport::new("orthogonality-hermite", n, &alpha, worst, 0.0, NORM_TOLERANCE)));
        for a in &cfg.laguerre_a {
            let lag = ws.laguerre(n, &alpha, a);
            let polys = etas.iter().map(|e| Ok((e.clone(), (*lag.get(e)?).clone()))).collect::<Result<Vec<_>>>()?;
            let table = orthogonality_table(&polys, |f, g| quad_inner_l(f, g, &alpha, a))?;
            let worst = table.iter().map(|r| r.2).fold(0.0, f64::max);
            let r = NumericReport::new("orthogonality-laguerre", n, &alpha, worst, 0.0, NORM_TOLERANCE).with_a(a);
            out.push(Report::Numeric(r));
        }
    }
    Ok(out)
}

fn n_norm_ratios(ws: &Workspace, cfg: &VerifyConfig) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for (n, alpha) in numeric_grid(cfg) {
        let herm = ws.hermite(n, &alpha);
        let one = SparsePoly::one(n);
        let h0 = quad_inner_h(&one, &one, &alpha)?;
        for eta in compositions_up_to(n, cfg.quadrature_max_weight) {
            let h = herm.get(&eta)?;
            let lhs = quad_inner_h(&h, &h, &alpha)? / h0;
            let rhs = to_f64(&hermite_norm_ratio(&eta, &alpha));
            let name = format!("norm-ratio-hermite eta={eta:?}");
            out.push(Report::Numeric(NumericReport::new(name, n, &alpha, lhs, rhs, relative(rhs, RATIO_TOLERANCE))));
        }
        for a in &cfg.laguerre_a {
            let lag = ws.laguerre(n, &alpha, a);
            let l0 = quad_inner_l(&one, &one, &alpha, a)?;
            for eta in compositions_up_to(n, cfg.quadrature_max_weight) {
                let l = lag.get(&eta)?;
                let lhs = quad_inner_l(&l, &l, &alpha, a)? / l0;
                let rhs = to_f64(&laguerre_norm_ratio(&eta, &alpha, a));
                let name = format!("norm-ratio-laguerre eta={eta:?}");
                let r = NumericReport::new(name, n, &alpha, lhs, rhs, relative(rhs, RATIO_TOLERANCE)).with_a(a);
                out.push(Report::Numeric(r));
            }
        }
    }
    Ok(out)
}

fn transform_etas(n: usize) -> Vec<Composition> {
    compositions_up_to(n, 2)
}

fn n_transforms(ws: &Workspace, cfg: &VerifyConfig) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for (n, alpha) in numeric_grid(cfg) {
        let jack = ws.jack(n, &alpha);
        for which in Transform::ALL {
            let a_values: Vec<Rational> = if matches!(which, Transform::HermiteToJack | Transform::JackToHermite) {
                vec![int(0)]
            } else {
                cfg.laguerre_a.clone()
            };
            for a in &a_values {
                for eta in transform_etas(n) {
                    out.push(Report::Numeric(quad_transform_check(which, &jack, a, &eta, cfg.transform_degree)?));
                }
            }
        }
    }
    Ok(out)
}

fn n_transforms_printed(ws: &Workspace, cfg: &VerifyConfig) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for (n, alpha) in numeric_grid(cfg) {
        let jack = ws.jack(n, &alpha);
        for which in [Transform::LaplaceJack, Transform::LaplaceLaguerre] {
            for a in &cfg.laguerre_a {
                for eta in transform_etas(n).into_iter().filter(|e| weight(e) > 0) {
                    let point = default_point(which, n);
                    let v = transform_values(which, &jack, a, &eta, &point, cfg.transform_degree, DEFAULT_POINTS)?;
                    let rhs = printed_laplace_rhs(which, &jack, a, &eta, &point)?;
                    let tol = 1e-6_f64.max(10.0 * v.budget);
                    let name = format!("{}-as-printed eta={eta:?}", which.name());
                    let r = NumericReport::new(name, n, &alpha, v.lhs, rhs, tol)
                        .with_a(a)
                        .with_degree(cfg.transform_degree);
                    out.push(Report::Numeric(r));
                }
            }
        }
    }
    Ok(out)
}

fn n_classical(_: &Workspace, cfg: &VerifyConfig) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    if cfg.max_n < 1 {
        return Ok(out);
    }
    for alpha in &cfg.alphas {
        for a in &cfg.laguerre_a {
            for (name, lhs, rhs) in classical_reductions(alpha, a, 3)? {
                let tol = 1e-12 * rhs.abs().max(1.0);
                out.push(Report::Numeric(
                    NumericReport::new(format!("classical {name}"), 1, alpha, lhs, rhs, tol).with_a(a),
                ));
            }
        }
    }
    Ok(out)
}

macro_rules! check {
    ($name:expr, $suite:ident, $crit:expr, $f:expr) => {
        FnCheck { name: $name, suite: Suite::$suite, criteria: $crit, informational: false, run: $f }
    };
    ($name:expr, $suite:ident, $crit:expr, $f:expr, info) => {
        FnCheck { name: $name, suite: Suite::$suite, criteria: $crit, informational: true, run: $f }
    };
}

/// The built-in checks in execution order.
pub fn builtin_checks() -> Vec<FnCheck> {
    vec![
        check!("dunkl-commutation-relations", Operators, &[], check_dunkl_relations),
        check!("operator-commutativity", Operators, &[], check_commutativity),
        check!("hecke-relations", Operators, &[], check_hecke_relations),
        check!("cherednik-dunkl-commutators", Operators, &[], check_cherednik_dunkl_commutators),
        check!("raising-lowering-intertwining", Operators, &[], check_raising_lowering_intertwining),
        check!("laplacian-commutators", Operators, &[], check_laplacian_commutators),
        check!("second-order-operators", Operators, &[], check_second_order_operators),
        check!("jack-cherednik-eigenvalues", Jack, &[1], check_jack_eigenvalues),
        check!("jack-oracle-equivalence", Jack, &[2], check_jack_oracle),
        check!("jack-evaluation-at-ones", Jack, &[3], check_jack_evaluation),
        check!("jack-triangularity-positivity", Jack, &[], check_jack_structure),
        check!("jack-product-shift-and-reversal", Jack, &[], check_jack_shift_and_reversal),
        check!("jack-switching-relation", Jack, &[], check_jack_switching),
        check!("jack-raising-lowering", Jack, &[6], check_jack_raising_lowering),
        check!("jack-symmetric-normalization", Jack, &[], check_jack_symmetric_normalization),
        check!("hermite-eigenvalues", Hermite, &[1], check_hermite_eigen),
        check!("hermite-switching-relation", Hermite, &[], check_hermite_switching),
        check!("hermite-raising-lowering", Hermite, &[6], check_hermite_raising_lowering),
        check!("hermite-pairing", Hermite, &[7], check_hermite_pairing),
        check!("pairing-power-sum-proportionality", Hermite, &[7], check_power_sum_pairing),
        check!("hermite-harmonic-decomposition", Hermite, &[10], check_hermite_harmonics),
        check!("laguerre-eigenvalues", Laguerre, &[1], check_laguerre_eigen),
        check!("laguerre-switching-and-origin", Laguerre, &[3], check_laguerre_switching_and_origin),
        check!("laguerre-raising-lowering", Laguerre, &[6], check_laguerre_raising_lowering),
        check!("laguerre-pairing", Laguerre, &[7], check_laguerre_pairing),
        check!("laguerre-harmonic-decomposition", Laguerre, &[10], check_laguerre_harmonics),
        check!("laguerre-harmonic-index-as-printed", Laguerre, &[10], check_laguerre_harmonics_printed, info),
        check!("kernel-a-exchange-properties", Kernels, &[8], k_a),
        check!("kernel-a-shift-identity", Kernels, &[8], k_b),
        check!("hermite-generating-function", Kernels, &[8], k_c),
        check!("kernel-a-symmetrization", Kernels, &[8], k_d),
        check!("exponential-shift-expansion", Kernels, &[8], k_e),
        check!("power-sum-multiplication", Kernels, &[8], k_f),
        check!("euler-and-second-order-actions", Kernels, &[8], k_g),
        check!("hypergeometric-2k1-pde", Kernels, &[8], k_h),
        check!("laguerre-generating-function", Kernels, &[8], k_i),
        check!("laguerre-series-generating-functions", Kernels, &[8], k_j),
        check!("laguerre-binomial-expansions", Kernels, &[8], k_k),
        check!("binomial-identities", Kernels, &[8, 9], k_l),
        check!("binomial-symmetric-relation-as-printed", Kernels, &[9], k_l_printed, info),
        check!("binomial-n-independence", Kernels, &[9], k_n_independence),
        check!("summation-formulas", Kernels, &[8], k_m),
        check!("kernel-a-symmetry-and-bound", Kernels, &[], k_symmetry_and_bound),
        check!("ct-norms", Ct, &[4], check_ct_norms),
        check!("ct-orthogonality", Ct, &[], check_ct_orthogonality),
        check!("ct-norm-recursions", Ct, &[], check_ct_recursions),
        check!("ct-selberg-type-ratio", Ct, &[5], check_ct_ratio),
        check!("ct-norm-relation", Ct, &[5], check_ct_norm_relation),
        check!("ct-norm-relation-as-printed", Ct, &[5], check_ct_norm_relation_printed, info),
        check!("ground-state-norms", Numeric, &[11], n_ground_norms),
        check!("ground-norm-laguerre-as-printed", Numeric, &[11], n_ground_norm_printed, info),
        check!("quadrature-orthogonality", Numeric, &[11], n_orthogonality),
        check!("quadrature-norm-ratios", Numeric, &[], n_norm_ratios),
        check!("integral-transforms", Numeric, &[11], n_transforms),
        check!("laplace-transforms-as-printed", Numeric, &[11], n_transforms_printed, info),
        check!("classical-reductions", Numeric, &[11], n_classical),
    ]
}

/// Shorthand for running suites with a fresh workspace.
pub fn run_suites(cfg: &VerifyConfig, suites: &[Suite]) -> Vec<CheckOutcome> {
    Registry::standard().run_suites(&Workspace::new(), cfg, suites)
}

/// True when every non-informational report passed.
pub fn all_passed(outcomes: &[CheckOutcome]) -> bool {
    outcomes.iter().all(CheckOutcome::passed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_names_are_unique() {
        let r = Registry::standard();
        let mut names: Vec<&str> = r.checks().map(|c| c.name()).collect();
        let total = names.len();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), total);
    }

    #[test]
    fn suite_selection() {
        assert_eq!(Suite::parse_selection("all").unwrap().len(), 7);
        assert_eq!(Suite::parse_selection("ct").unwrap(), vec![Suite::Ct]);
        assert!(Suite::parse_selection("bogus").is_none());
    }

    #[test]
    fn small_operator_suite_passes() {
        let cfg = VerifyConfig::with_limits(vec![int(1), rat(1, 2)], 2, 2);
        let outcomes = run_suites(&cfg, &[Suite::Operators]);
        for o in &outcomes {
            for r in &o.reports {
                assert!(r.acceptable(), "{}", r.summary());
            }
        }
    }
}
