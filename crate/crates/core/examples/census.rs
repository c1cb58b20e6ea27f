//! Brute-force orbit census over a small prime field.
//!
//!     cargo run --release --example census -- 4 2

use borel_orbits::fforacle::{census, invariance_check};

fn main() -> borel_orbits::Result<()> {
    let mut args = std::env::args().skip(1).map(|s| s.parse().ok());
    let n = args.next().flatten().unwrap_or(3) as usize;
    let q = args.next().flatten().unwrap_or(2) as u32;

    let c = census(n, q)?;
    println!(
        "n = {n}, q = {q}: {} 2-nilpotent matrices, {} orbits, |B| = {}",
        c.nilpotent_count, c.orbit_count, c.group_order
    );
    for orbit in &c.orbits {
        let label = if orbit.pattern.arrows().is_empty() { "(none)".to_string() } else { orbit.pattern.label() };
        println!("  {label:<12} size {:>4}", orbit.size);
    }
    let report = invariance_check(n, q)?;
    println!("profile violations: {}", report.violations.len());
    Ok(())
}
