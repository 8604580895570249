//! Finds every modular pair in involution of H(p, s) by brute force.
//!
//! cargo run --release --example classify_mpi -- 7

use std::env;
use std::time::Instant;

use bookhopf::mpi::classify;
use bookhopf::BookAlgebra;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p: u32 = env::args()
        .nth(1)
        .map(|a| a.parse())
        .transpose()?
        .unwrap_or(5);
    for s in 1..p {
        let started = Instant::now();
        let h = BookAlgebra::new(p, s, false)?;
        let c = classify(&h)?;
        let fmt = |v: &[bookhopf::mpi::PairIndex]| {
            v.iter()
                .map(|x| format!("(g^{}, β(g)=q^{})", x.i, x.j))
                .collect::<Vec<_>>()
                .join(", ")
        };
        println!(
            "H({p}, {s}): implements S² at [{}]; modular pairs in involution: [{}]  ({} ms)",
            fmt(&c.implements),
            fmt(&c.mpi),
            started.elapsed().as_millis()
        );
    }
    Ok(())
}
