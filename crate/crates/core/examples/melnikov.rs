//! Upper-triangular case: rank matrices of involutions and their order,
//! next to the general degeneration order.

use borel_orbits::degeneration::leq_deg;
use borel_orbits::melnikov::{edge_count_matrix, melnikov_leq, n_sigma, rank_matrix};
use borel_orbits::olp::{Involution, OrientedLinkPattern};

fn main() -> borel_orbits::Result<()> {
    let sigma = Involution::from_cycles(5, &[(1, 2), (3, 5)])?;
    let r = rank_matrix(&n_sigma(&sigma))?;
    println!("rank matrix of (1,2)(3,5):");
    for row in r.rows() {
        println!("  {row:?}");
    }
    println!("matches edge counts: {}", r == edge_count_matrix(&sigma));

    let all = Involution::all(4)?;
    let mut relations = 0;
    for a in &all {
        for b in &all {
            let mel = melnikov_leq(a, b)?;
            let deg = leq_deg(&OrientedLinkPattern::from_involution(b), &OrientedLinkPattern::from_involution(a))?;
            assert_eq!(mel, deg);
            relations += usize::from(mel);
        }
    }
    println!("{} involutions on 4 letters, {relations} order relations, both orders agree", all.len());
    Ok(())
}
