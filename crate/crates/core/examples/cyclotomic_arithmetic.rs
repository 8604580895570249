//! Exact arithmetic in Q(ζ_p): reduction, inverses, parsing.
//!
//! cargo run --example cyclotomic_arithmetic -- 5

use bookhopf::CyclotomicField;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p: u32 = std::env::args()
        .nth(1)
        .map(|a| a.parse())
        .transpose()?
        .unwrap_or(5);
    let k = CyclotomicField::new(p)?;
    println!("Q(ζ_{p}), degree {}, q = ζ", k.degree());

    for j in 0..=p as i64 {
        println!("  q^{j} = {}", k.root_power(j));
    }
    let sum = (1..p as i64).fold(k.zero(), |acc, j| acc + k.root_power(j));
    println!("  q + … + q^{} = {sum}", p - 1);

    let u = k.parse("1 + q")?;
    let v = u.inv()?;
    println!("  (1 + q)^-1 = {v}");
    println!("  check: (1 + q)·(1 + q)^-1 = {}", &u * &v);

    let w = k.parse("(1/2) - 3q^2")?;
    println!("  ((1/2) - 3q^2)^{p} = {}", w.pow(p as u64));
    println!("  0^-1 → {}", k.zero().inv().unwrap_err());
    Ok(())
}
