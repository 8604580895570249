//! Normal-form products in the PBW basis x^b y^c g^a.
//!
//! cargo run --example pbw_products -- 5 2

use bookhopf::{BookAlgebra, Element, Generator, Monomial};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<u32> = std::env::args()
        .skip(1)
        .map(|a| a.parse())
        .collect::<Result<_, _>>()?;
    let (p, s) = match args[..] {
        [p, s] => (p, s),
        _ => (5, 2),
    };
    let h = BookAlgebra::new(p, s, s == 0)?;
    let [g, x, y] = Generator::ALL.map(|gen| h.generator(gen));
    let show = |label: &str, u: &Element| println!("  {label:<10} = {u}");

    println!("H({p}, {s}), dim {}", h.dim());
    show("g·x", &h.mul(&g, &x));
    show("g·y", &h.mul(&g, &y));
    show("y·x", &h.mul(&y, &x));
    show("x^p", &h.pbw().pow(&x, p));
    show("g^p", &h.pbw().pow(&g, p));
    show("(x + y)^2", &h.pbw().pow(&(&x + &y), 2));

    let (m1, m2) = (Monomial::new(1, 1, 2), Monomial::new(2, 1, 1));
    match h.pbw().mono_mul(m1, m2) {
        Some((e, m)) => println!("  ({m1})·({m2}) = q^{e}·{m}"),
        None => println!("  ({m1})·({m2}) = 0"),
    }
    Ok(())
}
