//! The twist T for every pair (g^i, β_j) of one H(p, s), next to S².
//!
//! cargo run --release --example twist_and_pairs -- 7 3

use bookhopf::mpi::{implements_s_squared, is_stable, twist, Character, GroupLike};
use bookhopf::{BookAlgebra, Generator};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<u32> = std::env::args()
        .skip(1)
        .map(|a| a.parse())
        .collect::<Result<_, _>>()?;
    let (p, s) = match args[..] {
        [p, s] => (p, s),
        _ => (7, 3),
    };
    let h = BookAlgebra::new(p, s, false)?;
    let x = h.generator(Generator::X);
    let y = h.generator(Generator::Y);
    println!(
        "H({p}, {s}): S²(x) = {}, S²(y) = {}",
        h.s_squared(&x),
        h.s_squared(&y)
    );
    for i in 0..p {
        for j in 0..p {
            let (l, beta) = (GroupLike { i }, Character { j });
            let implements = implements_s_squared(&h, l, beta);
            let (stable, beta_l) = is_stable(&h, l, beta);
            let mark = match (implements, stable) {
                (true, true) => "  ← MPI",
                (true, false) => "  ← T = S², β(l) ≠ 1",
                _ => "",
            };
            println!(
                "  i={i} j={j}  T(x) = {:<36} T(y) = {:<36} β(l) = {beta_l}{mark}",
                twist(&h, l, beta, &x).to_string(),
                twist(&h, l, beta, &y).to_string(),
            );
        }
    }
    Ok(())
}
