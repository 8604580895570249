//! Drives the command-line front end in-process and parses its JSON.
//!
//! cargo run --release --example cli_table -- 7

use bookhopf::cli::{run, TableReport};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p = std::env::args().nth(1).unwrap_or_else(|| "7".into());
    let text = run(["bookhopf", "table", "--p", &p]);
    print!("{}{}", text.stdout, text.stderr);

    let json = run(["bookhopf", "table", "--p", &p, "--format", "json"]);
    if json.code != 0 {
        return Err(json.stderr.into());
    }
    let table: TableReport = serde_json::from_str(&json.stdout)?;
    let with_mpi: Vec<u32> = table
        .rows
        .iter()
        .filter(|r| r.mpi_exists)
        .map(|r| r.s)
        .collect();
    println!("s with an MPI: {with_mpi:?}");
    Ok(())
}
