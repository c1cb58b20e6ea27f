//! The representation-theoretic side: Hom dimensions between
//! indecomposables, Krull-Schmidt decomposition of a flag representation,
//! and the Hom criterion for degenerations compared with the counting one.

use borel_orbits::degeneration::leq_deg;
use borel_orbits::olp::{enumerate, OrientedLinkPattern};
use borel_orbits::quiver::{
    hom_dim, indecomposable, krull_schmidt, orbit_dimension, rep_of_pattern, zwara_leq, IndecomposableId,
};

fn main() -> borel_orbits::Result<()> {
    let n = 3;
    let ids = IndecomposableId::injective_chain(n);
    println!("dim Hom(row, column) for n = {n}:");
    print!("{:>8}", "");
    for b in &ids {
        print!("{:>8}", b.to_string());
    }
    println!();
    for a in &ids {
        print!("{:>8}", a.to_string());
        for b in &ids {
            print!("{:>8}", hom_dim(&indecomposable(*a, n)?, &indecomposable(*b, n)?)?);
        }
        println!();
    }

    let p = OrientedLinkPattern::from_pairs(4, &[(1, 4), (3, 2)])?;
    let d = krull_schmidt(&rep_of_pattern(&p))?;
    println!("\n{p} decomposes as:");
    for (id, m) in d.summands() {
        println!("  {id} x{m}");
    }
    println!("orbit dimension {}", orbit_dimension(&p));

    let all = enumerate(4)?;
    let mut agree = 0;
    for a in &all {
        for b in &all {
            agree += usize::from(leq_deg(a, b)? == zwara_leq(a, b)?);
        }
    }
    println!("\ncounting and Hom criteria agree on {agree} of {} pairs at n = 4", all.len() * all.len());
    Ok(())
}
