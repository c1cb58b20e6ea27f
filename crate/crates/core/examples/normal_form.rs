//! Generic normal form of a nilpotent matrix and its stability under
//! Borel conjugation.

use borel_orbits::normalform::{genericity, normal_form};
use borel_orbits::sampling;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> borel_orbits::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let n = 4;
    let a = loop {
        let a = sampling::nilpotent(n, &mut rng);
        if genericity(&a)?.generic {
            break a;
        }
    };
    let report = genericity(&a)?;
    let minors: Vec<String> = report.minors.iter().map(|m| m.0.to_string()).collect();
    println!("A =\n{a}corner minors: {}", minors.join(", "));

    let nf = normal_form(&a)?;
    println!("H =\n{}g =\n{}", nf.h, nf.g);

    let b = sampling::upper_triangular(n, &mut rng);
    let moved = &(&b * &a) * &b.inverse()?.expect("invertible");
    println!("normal form of a conjugate agrees: {}", normal_form(&moved)?.h == nf.h);
    Ok(())
}
