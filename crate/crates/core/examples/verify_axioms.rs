//! Runs the full Hopf-axiom suite on one H(p, s) and prints a summary.
//!
//! cargo run --release --example verify_axioms -- 5 2

use std::env;

use bookhopf::checks::{run_all, CheckOptions, Coverage};
use bookhopf::BookAlgebra;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<u32> = env::args()
        .skip(1)
        .map(|a| a.parse())
        .collect::<Result<_, _>>()?;
    let (p, s) = match args[..] {
        [p, s] => (p, s),
        _ => (5, 2),
    };
    let h = BookAlgebra::new(p, s, s == 0)?;
    let report = run_all(&h, &CheckOptions::default());
    println!("H({p}, {s}), dim {}", h.dim());
    for r in &report.axioms {
        let coverage = match r.coverage {
            Coverage::Exhaustive => "exhaustive".to_string(),
            Coverage::Sampled { samples, seed } => format!("{samples} samples, seed {seed:#x}"),
        };
        println!(
            "  {:<17} {:?}  {:>9} identities ({coverage}), {} violations, {} ms",
            r.axiom.name(),
            r.status,
            r.checked,
            r.violation_count,
            r.elapsed_ms
        );
        for v in r.violations.iter().take(3) {
            println!("      at {}: {}  ≠  {}", v.at, v.lhs, v.rhs);
        }
    }
    if s == 0 {
        println!(
            "matches the predicted s = 0 failure: {}",
            report.is_expected_negative_control()
        );
    }
    Ok(())
}
