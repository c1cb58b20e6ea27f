//! Seeded random inputs for experiments and property checks.
//!
//! Entries are small integers (or small fractions on diagonals) so exact
//! arithmetic stays cheap.

use rand::Rng;

use crate::linalg::{Matrix, Rational};
use crate::normalform::SemiinvariantDatum;

fn small(rng: &mut impl Rng, bound: i64) -> Rational {
    Rational::from_integer(rng.random_range(-bound..=bound).into())
}

fn nonzero_fraction(rng: &mut impl Rng) -> Rational {
    let num = rng.random_range(1..=4i64) * if rng.random_bool(0.5) { 1 } else { -1 };
    Rational::new(num.into(), rng.random_range(1..=3i64).into())
}

/// Invertible upper-triangular: nonzero fractions on the diagonal.
pub fn upper_triangular(n: usize, rng: &mut impl Rng) -> Matrix {
    Matrix::from_fn(n, n, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Greater => Rational::from_integer(0.into()),
        std::cmp::Ordering::Equal => nonzero_fraction(rng),
        std::cmp::Ordering::Less => small(rng, 3),
    })
}

/// Upper-triangular with unit diagonal.
pub fn unipotent(n: usize, rng: &mut impl Rng) -> Matrix {
    Matrix::from_fn(n, n, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Greater => Rational::from_integer(0.into()),
        std::cmp::Ordering::Equal => Rational::from_integer(1.into()),
        std::cmp::Ordering::Less => small(rng, 2),
    })
}

/// Strictly lower-triangular with entries in `-2..=2`.
pub fn strictly_lower(n: usize, rng: &mut impl Rng) -> Matrix {
    Matrix::from_fn(n, n, |i, j| if i > j { small(rng, 2) } else { Rational::from_integer(0.into()) })
}

/// `T · N · T⁻¹` with `N` strictly lower triangular and `T` unipotent
/// upper triangular; exactly nilpotent, sometimes non-generic.
pub fn nilpotent(n: usize, rng: &mut impl Rng) -> Matrix {
    let t = unipotent(n, rng);
    let nn = strictly_lower(n, rng);
    let t_inv = t.inverse().expect("square").expect("unipotent is invertible");
    &(&t * &nn) * &t_inv
}

/// A random normal form: strictly lower triangular, unit subdiagonal.
pub fn normal_form_matrix(n: usize, rng: &mut impl Rng) -> Matrix {
    let mut h = strictly_lower(n, rng);
    for i in 1..n {
        h[(i, i - 1)] = Rational::from_integer(1.into());
    }
    h
}

/// `k` split into `parts` nonnegative summands.
fn composition(k: usize, parts: usize, rng: &mut impl Rng) -> Vec<usize> {
    let mut out = vec![0; parts];
    for _ in 0..k {
        out[rng.random_range(0..parts)] += 1;
    }
    out
}

/// A datum with one to three row and column blocks, each block at most
/// `n`, and polynomials of degree below `n`.
pub fn datum(n: usize, rng: &mut impl Rng) -> SemiinvariantDatum {
    let s = rng.random_range(1..=3usize);
    let t = rng.random_range(1..=3usize);
    let (a, b) = loop {
        let k = rng.random_range(0..=n);
        let a = composition(k, s, rng);
        let b = composition(k, t, rng);
        if a.iter().chain(&b).all(|&x| x <= n) {
            break (a, b);
        }
    };
    let p = (0..s)
        .map(|_| {
            (0..t)
                .map(|_| {
                    let deg = rng.random_range(0..n.max(1));
                    (0..=deg).map(|_| small(rng, 2)).collect()
                })
                .collect()
        })
        .collect();
    SemiinvariantDatum::new(a, b, p).expect("block sums agree")
}
