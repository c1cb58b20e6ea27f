//! Determinantal semiinvariants: the character identity under conjugation,
//! entry recovery on a normal form, and the one-parameter family in
//! dimension three.

use borel_orbits::linalg::{parse_rational, Matrix, Rational};
use borel_orbits::normalform::{character, entry_datum, semiinvariant, weight, SemiinvariantDatum};
use borel_orbits::sampling;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> borel_orbits::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let n = 4;
    let a = sampling::nilpotent(n, &mut rng);
    let g = sampling::upper_triangular(n, &mut rng);
    let p = sampling::datum(n, &mut rng);
    let w = weight(&p, n)?;
    let conj = &(&g * &a) * &g.inverse()?.expect("invertible");
    println!("datum a = {:?}, b = {:?}, weight {w:?}", p.a(), p.b());
    println!("D(gAg^-1)      = {}", semiinvariant(&conj, &p)?);
    println!("chi(g) * D(A)  = {}", character(&g, &w)? * semiinvariant(&a, &p)?);

    let h = sampling::normal_form_matrix(5, &mut rng);
    println!("\nH =\n{h}");
    for (i, j) in [(3, 1), (5, 1), (5, 3)] {
        println!("D at ({i},{j}) = {}", semiinvariant(&h, &entry_datum(i, j, 5)?)?);
    }

    let x = vec![Rational::from_integer(0.into()), Rational::from_integer(1.into())];
    let first = SemiinvariantDatum::new(vec![1], vec![1], vec![vec![x.clone()]])?;
    let second = SemiinvariantDatum::new(vec![2], vec![2], vec![vec![x]])?;
    println!();
    for text in ["0", "1", "-1", "2", "7/3"] {
        let mut a: Matrix = Matrix::from_i64_rows(&[[0, 0, 0], [1, 0, 0], [0, 1, 0]])?;
        a[(2, 0)] = parse_rational(text).expect("literal");
        println!("lambda = {text:>4}: ({} : {})", semiinvariant(&a, &first)?, semiinvariant(&a, &second)?);
    }
    Ok(())
}
