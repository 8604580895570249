//! Coproduct, counit, antipode and S² on generators and small monomials.
//!
//! cargo run --example structure_maps -- 5 2

use bookhopf::{BookAlgebra, Generator, Monomial};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<u32> = std::env::args()
        .skip(1)
        .map(|a| a.parse())
        .collect::<Result<_, _>>()?;
    let (p, s) = match args[..] {
        [p, s] => (p, s),
        _ => (5, 2),
    };
    let h = BookAlgebra::new(p, s, false)?;
    println!("H({p}, {s})");
    for gen in Generator::ALL {
        let u = h.generator(gen);
        let name = gen.symbol();
        println!("  Δ({name})  = {}", h.coproduct(&u));
        println!("  ε({name})  = {}", h.counit(&u));
        println!("  S({name})  = {}", h.antipode(&u));
        println!("  S²({name}) = {}", h.s_squared(&u));
    }
    let x2 = Monomial::new(2, 0, 0);
    println!("  Δ({x2}) = {}", h.coproduct_mono(x2));
    println!("  Δ²(x) = {}", h.delta2(&h.generator(Generator::X)));
    let xg = Monomial::new(1, 0, 1);
    println!("  S({xg}) = {}", h.antipode_mono(xg));
    Ok(())
}
