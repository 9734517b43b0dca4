//! Runs every acceptance criterion at its stated range and tolerance and
//! prints one verdict line per criterion.

use std::collections::BTreeMap;

use nsjack::verify::{CheckOutcome, Registry, VerifyConfig, Workspace};

const CRITERIA: [(u8, &str); 11] = [
    (1, "eigenfunctions of xi, h and l"),
    (2, "recursive Jack basis equals the defining oracle"),
    (3, "evaluation at 1^n and Laguerre value at 0"),
    (4, "constant-term norms and spot value 3/2"),
    (5, "Selberg-type ratio and norm relation"),
    (6, "raising and lowering constants"),
    (7, "Hermite and Laguerre pairings, power-sum proportionality"),
    (8, "kernel identity suite at n=2 D=5, n=3 D=4"),
    (9, "binomial coefficients"),
    (10, "harmonic decompositions"),
    (11, "quadrature norms, orthogonality, transforms, classical reductions"),
];

fn main() {
    let cfg = VerifyConfig::default();
    let outcomes = Registry::standard().run(&Workspace::new(), &cfg, |c| !c.criteria().is_empty());

    let mut by_criterion: BTreeMap<u8, Vec<&CheckOutcome>> = BTreeMap::new();
    for o in &outcomes {
        for &c in &o.criteria {
            by_criterion.entry(c).or_default().push(o);
        }
    }

    let mut failed = Vec::new();
    for (id, title) in CRITERIA {
        let checks = by_criterion.get(&id).map(Vec::as_slice).unwrap_or_default();
        let binding: Vec<_> = checks.iter().flat_map(|o| &o.reports).filter(|r| !r.informational()).collect();
        let bad: Vec<_> = binding.iter().filter(|r| !r.passed()).collect();
        let ok = !binding.is_empty() && bad.is_empty();
        println!(
            "criterion {id:>2} {}: {title} ({} reports from {} checks)",
            if ok { "PASS" } else { "FAIL" },
            binding.len(),
            checks.len()
        );
        for r in bad.iter().take(5) {
            println!("    {}", r.summary());
        }
        for o in checks {
            let info: Vec<_> = o.reports.iter().filter(|r| r.informational()).collect();
            if !info.is_empty() {
                let held = info.iter().filter(|r| r.passed()).count();
                println!("    informational {}: printed form holds in {held} of {} reports", o.name, info.len());
            }
        }
        if !ok {
            failed.push(id);
        }
    }
    if !failed.is_empty() {
        eprintln!("failing criteria: {failed:?}");
        std::process::exit(1);
    }
}
