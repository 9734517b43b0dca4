use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use nsjack::combinatorics::Composition;
use nsjack::ct::{ct_norm_formula, k_of_alpha};
use nsjack::hermite_laguerre::{hermite_norm_ratio, laguerre_norm_ratio, HermiteBasis, LaguerreBasis};
use nsjack::jack::JackBasis;
use nsjack::kernels::{binomial_coeff, kernel_family, KernelParams};
use nsjack::poly::SparsePoly;
use nsjack::rational::{format_rational, parse_rational, Rational};
use nsjack::verify::{default_alphas, Registry, Suite, VerifyConfig, Workspace, CSV_HEADER};

const CACHE_ENV: &str = "NSJACK_CACHE_DIR";

#[derive(Parser)]
#[command(name = "nsjack", version, about = "Exact nonsymmetric Jack, Hermite and Laguerre polynomials")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Write output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Nonsymmetric Jack polynomial E_eta.
    Jack(BasisArgs),
    /// Nonsymmetric Hermite polynomial.
    Hermite(BasisArgs),
    /// Nonsymmetric Laguerre polynomial.
    Laguerre {
        #[command(flatten)]
        basis: BasisArgs,
        #[arg(long, value_parser = parse_param)]
        a: Rational,
        /// Emit the polynomial in y_i = x_i^2.
        #[arg(long)]
        squared_variables: bool,
    },
    /// E_eta(1, ..., 1).
    EvalOnes(BasisArgs),
    /// Exact norm of E_eta for one inner product.
    Norm {
        #[command(flatten)]
        basis: BasisArgs,
        #[arg(long, value_enum)]
        family: NormFamily,
        /// Laguerre parameter.
        #[arg(long, value_parser = parse_param)]
        a: Option<Rational>,
    },
    /// Generalized binomial coefficient binom(eta, nu).
    Binomial {
        #[command(flatten)]
        basis: BasisArgs,
        #[arg(long, value_parser = parse_composition)]
        nu: Composition,
    },
    /// Truncated kernel series in x_1..x_n, y_1..y_n.
    Kernel {
        #[arg(long)]
        family: String,
        #[arg(long)]
        degree: u32,
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_alpha)]
        alpha: Rational,
        #[arg(long, value_parser = parse_param)]
        a: Option<Rational>,
        #[arg(long, value_parser = parse_param)]
        b: Option<Rational>,
        #[arg(long, value_parser = parse_param)]
        c: Option<Rational>,
    },
    /// Run verification suites.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct BasisArgs {
    #[arg(long, value_parser = parse_composition)]
    eta: Composition,
    /// Number of variables; defaults to the length of eta, which is padded with zeros.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, value_parser = parse_alpha)]
    alpha: Rational,
}

#[derive(Clone, Copy, ValueEnum)]
enum NormFamily {
    Ct,
    Hermite,
    Laguerre,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value = "all", value_parser = parse_suite)]
    suite: SuiteSelection,
    /// Run only the named check.
    #[arg(long)]
    check: Option<String>,
    #[arg(long, value_delimiter = ',', value_parser = parse_alpha)]
    alpha_set: Option<Vec<Rational>>,
    #[arg(long, default_value_t = 4)]
    max_weight: u32,
    #[arg(long, default_value_t = 3)]
    max_n: usize,
}

fn parse_alpha(s: &str) -> Result<Rational, String> {
    let a = parse_rational(s).map_err(|e| e.to_string())?;
    if a <= Rational::from_integer(0.into()) {
        return Err(format!("alpha must be positive, got {s}"));
    }
    Ok(a)
}

fn parse_param(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn parse_composition(s: &str) -> Result<Composition, String> {
    s.split(',').map(|p| p.trim().parse::<u32>().map_err(|_| format!("malformed composition {s:?}"))).collect()
}

#[derive(Clone)]
struct SuiteSelection(Vec<Suite>);

fn parse_suite(s: &str) -> Result<SuiteSelection, String> {
    Suite::parse_selection(s).map(SuiteSelection).ok_or_else(|| {
        let names: Vec<_> = Suite::ALL.iter().map(|x| x.name()).collect();
        format!("unknown suite {s:?}; expected one of {} or all", names.join(", "))
    })
}

enum Failure {
    Usage(String),
    Runtime(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Runtime(e)
    }
}

impl From<nsjack::error::Error> for Failure {
    fn from(e: nsjack::error::Error) -> Self {
        Failure::Runtime(e.into())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

impl BasisArgs {
    fn eta(&self) -> Result<Composition, Failure> {
        let mut eta = self.eta.clone();
        let n = self.n.unwrap_or(eta.len());
        if n < eta.len() {
            return Err(Failure::Usage(format!("composition {:?} has more than n = {n} parts", self.eta)));
        }
        eta.resize(n, 0);
        Ok(eta)
    }
}

/// Output and overall verdict of one subcommand.
enum Output {
    Poly(SparsePoly),
    Scalar(Rational),
    Verify { rows: Vec<nsjack::verify::Report>, passed: bool },
}

fn run(cli: &Cli) -> Result<bool, Failure> {
    let output = match &cli.command {
        Command::Jack(b) => {
            let eta = b.eta()?;
            let jack = cached_jack(eta.len(), &b.alpha)?;
            let p = (*jack.get(&eta)?).clone();
            store_cache(&jack)?;
            Output::Poly(p)
        }
        Command::Hermite(b) => {
            let eta = b.eta()?;
            let jack = cached_jack(eta.len(), &b.alpha)?;
            let p = (*HermiteBasis::new(jack.clone()).get(&eta)?).clone();
            store_cache(&jack)?;
            Output::Poly(p)
        }
        Command::Laguerre { basis, a, squared_variables } => {
            let eta = basis.eta()?;
            let jack = cached_jack(eta.len(), &basis.alpha)?;
            let lag = LaguerreBasis::new(jack.clone(), a.clone());
            let p = if *squared_variables { (*lag.get(&eta)?).clone() } else { lag.get_in_x(&eta)? };
            store_cache(&jack)?;
            Output::Poly(p)
        }
        Command::EvalOnes(b) => {
            let eta = b.eta()?;
            let jack = cached_jack(eta.len(), &b.alpha)?;
            let v = jack.eval_ones(&eta)?;
            store_cache(&jack)?;
            Output::Scalar(v)
        }
        Command::Norm { basis, family, a } => {
            let eta = basis.eta()?;
            let alpha = &basis.alpha;
            let v = match family {
                NormFamily::Ct => {
                    let k = k_of_alpha(alpha).map_err(|e| Failure::Usage(e.to_string()))?;
                    ct_norm_formula(&eta, k)
                }
                NormFamily::Hermite => hermite_norm_ratio(&eta, alpha),
                NormFamily::Laguerre => {
                    let a = a.as_ref().ok_or_else(|| Failure::Usage("--family laguerre needs --a".into()))?;
                    laguerre_norm_ratio(&eta, alpha, a)
                }
            };
            Output::Scalar(v)
        }
        Command::Binomial { basis, nu } => {
            let eta = basis.eta()?;
            let mut nu = nu.clone();
            if nu.len() > eta.len() {
                return Err(Failure::Usage(format!("nu {nu:?} has more parts than eta")));
            }
            nu.resize(eta.len(), 0);
            let jack = cached_jack(eta.len(), &basis.alpha)?;
            let v = binomial_coeff(&jack, &eta, &nu)?;
            store_cache(&jack)?;
            Output::Scalar(v)
        }
        Command::Kernel { family, degree, n, alpha, a, b, c } => {
            let params = KernelParams { a: a.clone(), b: b.clone(), c: c.clone() };
            let fam = kernel_family(family, &params).map_err(|e| Failure::Usage(e.to_string()))?;
            let jack = cached_jack(*n, alpha)?;
            let k = fam.build(&jack, *degree)?;
            store_cache(&jack)?;
            Output::Poly(k.poly().clone())
        }
        Command::Verify(v) => run_verify(v)?,
    };
    let passed = !matches!(output, Output::Verify { passed: false, .. });
    let text = render(&output, cli.format)?;
    match &cli.out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display()))?,
        None => io::stdout().write_all(text.as_bytes()).context("writing stdout")?,
    }
    Ok(passed)
}

fn run_verify(v: &VerifyArgs) -> Result<Output, Failure> {
    let suites = &v.suite.0;
    let alphas = v.alpha_set.clone().unwrap_or_else(default_alphas);
    let cfg = VerifyConfig::with_limits(alphas, v.max_weight, v.max_n);
    let registry = Registry::standard();
    if let Some(name) = &v.check {
        if registry.get(name).is_none() {
            return Err(Failure::Usage(format!("unknown check {name:?}")));
        }
    }
    let ws = Workspace::new();
    let outcomes =
        registry.run(&ws, &cfg, |c| suites.contains(&c.suite()) && v.check.as_deref().is_none_or(|n| n == c.name()));
    for o in &outcomes {
        for r in &o.reports {
            if !r.acceptable() {
                eprintln!("{}", r.summary());
            }
        }
    }
    let passed = outcomes.iter().all(|o| o.passed());
    let rows = outcomes.into_iter().flat_map(|o| o.reports).collect();
    Ok(Output::Verify { rows, passed })
}

fn render(output: &Output, format: Format) -> anyhow::Result<String> {
    match format {
        Format::Json => {
            let v = match output {
                Output::Poly(p) => p.to_json(),
                Output::Scalar(r) => Value::String(format_rational(r)),
                Output::Verify { rows, passed } => json!({ "passed": passed, "reports": rows }),
            };
            Ok(serde_json::to_string(&v)? + "\n")
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            match output {
                Output::Poly(p) => {
                    let mut header: Vec<String> = (1..=p.n()).map(|i| format!("e{i}")).collect();
                    header.extend(["numerator".into(), "denominator".into()]);
                    w.write_record(&header)?;
                    for (e, num, den) in p.json_terms() {
                        let mut row: Vec<String> = e.iter().map(|x| x.to_string()).collect();
                        row.extend([num, den]);
                        w.write_record(&row)?;
                    }
                }
                Output::Scalar(r) => {
                    w.write_record(["value"])?;
                    w.write_record([format_rational(r)])?;
                }
                Output::Verify { rows, .. } => {
                    w.write_record(CSV_HEADER)?;
                    for r in rows {
                        w.write_record(r.csv_row())?;
                    }
                }
            }
            Ok(String::from_utf8(w.into_inner()?)?)
        }
    }
}

fn cache_file(dir: &Path, n: usize, alpha: &Rational) -> PathBuf {
    dir.join(format!("jack-n{n}-alpha{}.json", format_rational(alpha).replace('/', "_")))
}

fn cache_dir() -> Option<PathBuf> {
    std::env::var_os(CACHE_ENV).filter(|v| !v.is_empty()).map(PathBuf::from)
}

/// A Jack basis preloaded from the cache directory when one is configured.
fn cached_jack(n: usize, alpha: &Rational) -> anyhow::Result<Arc<JackBasis>> {
    let jack = Arc::new(JackBasis::new(n, alpha.clone()));
    if let Some(dir) = cache_dir() {
        let path = cache_file(&dir, n, alpha);
        if path.exists() {
            let text = fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
            let entries: Vec<(Composition, Value)> =
                serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
            let mut polys = Vec::with_capacity(entries.len());
            for (eta, v) in entries {
                if eta.len() != n {
                    bail!("cache entry {eta:?} in {} has the wrong length", path.display());
                }
                polys.push((eta, SparsePoly::from_json(&v)?));
            }
            jack.preload(polys);
        }
    }
    Ok(jack)
}

fn store_cache(jack: &JackBasis) -> anyhow::Result<()> {
    let Some(dir) = cache_dir() else { return Ok(()) };
    fs::create_dir_all(&dir).with_context(|| format!("creating {}", dir.display()))?;
    let entries: Vec<(Composition, Value)> = jack.cached().into_iter().map(|(eta, p)| (eta, p.to_json())).collect();
    let path = cache_file(&dir, jack.n(), jack.alpha());
    fs::write(&path, serde_json::to_string(&entries)?).with_context(|| format!("writing {}", path.display()))
}
