//! Print the Hasse diagram of the degeneration order as Graphviz.
//!
//!     cargo run --example hasse_diagram -- 3 | dot -Tsvg > n3.svg

use borel_orbits::degeneration::poset;

fn main() -> borel_orbits::Result<()> {
    let n = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let p = poset(n)?;
    eprintln!("{} orbits, {} covers", p.patterns().len(), p.covers().len());
    print!("{}", p.to_dot());
    Ok(())
}
