//! The untwisted algebra H(p, 0): everything holds except Δ(y)^p = 0.
//!
//! cargo run --release --example negative_control -- 3

use bookhopf::checks::{check_relations, run_all, CheckOptions};
use bookhopf::{BookAlgebra, Generator};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p: u32 = std::env::args()
        .nth(1)
        .map(|a| a.parse())
        .transpose()?
        .unwrap_or(3);
    if let Err(e) = BookAlgebra::new(p, 0, false) {
        println!("strict mode: {e}");
    }
    let h = BookAlgebra::new(p, 0, true)?;
    let dy = h.coproduct_generator(Generator::Y);
    println!("Δ(y)   = {dy}");
    println!("Δ(y)^{p} = {}", h.pbw().pow(dy, p));

    let relations = check_relations(&h);
    for v in &relations.violations {
        println!("relation {} fails", v.at);
    }
    let suite = run_all(&h, &CheckOptions::default());
    for r in &suite.axioms {
        println!(
            "  {:<17} {} violations ({} involve y-degree ≥ p)",
            r.axiom.name(),
            r.violation_count,
            r.y_overflow_violations
        );
    }
    println!(
        "matches prediction: {}",
        suite.is_expected_negative_control()
    );
    Ok(())
}
