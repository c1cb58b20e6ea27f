//! Classify a 2-nilpotent matrix, then check that a random Borel conjugate
//! lands on the same oriented link pattern.

use borel_orbits::classify::{classify, profile_of};
use borel_orbits::linalg::Matrix;
use borel_orbits::olp::OrientedLinkPattern;
use borel_orbits::sampling;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> borel_orbits::Result<()> {
    // arrows 2 -> 1 and 5 -> 3
    let pattern = OrientedLinkPattern::from_pairs(5, &[(2, 1), (5, 3)])?;
    let a: Matrix = pattern.to_multiplicity_matrix();
    println!("A =\n{a}");
    println!("pattern: {}", classify(&a)?);

    let profile = profile_of(&a)?;
    println!("intersection profile d[i][j]:");
    for row in profile.grid() {
        println!("  {row:?}");
    }

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let g = sampling::upper_triangular(5, &mut rng);
    let conj = &(&g * &a) * &g.inverse()?.expect("invertible");
    println!("g A g^-1 =\n{conj}");
    println!("pattern of the conjugate: {}", classify(&conj)?);
    Ok(())
}
