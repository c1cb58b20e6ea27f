//! Parabolic classification: coarsen the flag into blocks and read off an
//! enhanced pattern, where a block may carry several arrow ends or loops.

use borel_orbits::classify::classify_parabolic;
use borel_orbits::linalg::Matrix;
use borel_orbits::olp::OrientedLinkPattern;

fn main() -> borel_orbits::Result<()> {
    let pattern = OrientedLinkPattern::from_pairs(4, &[(1, 2), (4, 3)])?;
    let a: Matrix = pattern.to_multiplicity_matrix();
    println!("pattern {pattern}");
    for blocks in [vec![1, 1, 1, 1], vec![2, 2], vec![1, 3], vec![4]] {
        let e = classify_parabolic(&a, &blocks)?;
        let arrows: Vec<String> = e.arrows().iter().map(|(arrow, m)| format!("{arrow} x{m}")).collect();
        let free: Vec<usize> = (1..=e.k()).map(|i| e.free_slots(i)).collect();
        println!("  blocks {blocks:?}: arrows [{}], free slots {free:?}", arrows.join(", "));
    }
    Ok(())
}
