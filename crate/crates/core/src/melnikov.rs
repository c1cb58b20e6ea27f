//! Rank matrices of strictly upper-triangular 2-nilpotent matrices and the
//! induced order on involutions.

use serde::{Deserialize, Serialize};

use crate::classify::require_two_nilpotent;
use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix, Rational};
use crate::olp::Involution;

/// `R[i][j]` for one-based `i < j`; zero elsewhere.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RankMatrix {
    n: usize,
    r: Vec<Vec<usize>>,
}

impl RankMatrix {
    fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Self {
        let r = (1..=n)
            .map(|i| (1..=n).map(|j| if i < j { f(i, j) } else { 0 }).collect())
            .collect();
        RankMatrix { n, r }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry at one-based `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.r[i - 1][j - 1]
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.r
    }

    /// Entrywise comparison.
    pub fn is_below(&self, other: &RankMatrix) -> bool {
        self.n == other.n
            && self.r.iter().flatten().zip(other.r.iter().flatten()).all(|(a, b)| a <= b)
    }
}

/// `N_sigma`: ones at `(i, sigma(i))` for `i < sigma(i)`.
pub fn n_sigma<T: Field>(sigma: &Involution) -> Matrix<T> {
    let mut m = Matrix::zeros(sigma.n(), sigma.n());
    for (i, j) in sigma.two_cycles() {
        m[(i - 1, j - 1)] = T::one();
    }
    m
}

/// Ranks of the middle square submatrices (rows and columns `i..=j`).
pub fn rank_matrix(u: &Matrix<Rational>) -> Result<RankMatrix> {
    require_two_nilpotent(u)?;
    if !u.is_strictly_upper_triangular() {
        return Err(Error::NotStrictlyUpperTriangular);
    }
    let n = u.rows();
    Ok(RankMatrix::from_fn(n, |i, j| {
        u.block(i - 1, j, i - 1, j).expect("indices within range").rank()
    }))
}

/// Number of 2-cycles of `sigma` with both ends inside `[i, j]`.
pub fn edge_count_matrix(sigma: &Involution) -> RankMatrix {
    RankMatrix::from_fn(sigma.n(), |i, j| {
        sigma.two_cycles().filter(|&(a, b)| i <= a && b <= j).count()
    })
}

/// `sigma' ≼ sigma`: the rank matrix of `sigma'` is entrywise below that of
/// `sigma`, i.e. the orbit of `sigma'` lies in the closure of the orbit of `sigma`.
pub fn melnikov_leq(sigma_prime: &Involution, sigma: &Involution) -> Result<bool> {
    if sigma_prime.n() != sigma.n() {
        return Err(Error::mismatch(
            "melnikov_leq",
            format!("{} vs {} letters", sigma_prime.n(), sigma.n()),
        ));
    }
    let lower = rank_matrix(&n_sigma(sigma_prime))?;
    let upper = rank_matrix(&n_sigma(sigma))?;
    Ok(lower.is_below(&upper))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    fn inv(n: usize, cycles: &[(usize, usize)]) -> Involution {
        Involution::from_cycles(n, cycles).unwrap()
    }

    #[test]
    fn rank_matrix_examples() {
        let zero = Matrix::<Rational>::zeros(4, 4);
        assert!(rank_matrix(&zero).unwrap().rows().iter().flatten().all(|&x| x == 0));

        let r = rank_matrix(&n_sigma(&inv(5, &[(1, 2), (3, 5)]))).unwrap();
        assert_eq!((r.get(1, 5), r.get(1, 2), r.get(3, 5), r.get(2, 4)), (2, 1, 1, 0));

        let r = rank_matrix(&Matrix::unit(2, 1, 2)).unwrap();
        assert_eq!(r.get(1, 2), 1);
    }

    #[test]
    fn rank_matrix_rejects_bad_input() {
        assert!(matches!(rank_matrix(&Matrix::unit(2, 2, 1)), Err(Error::NotStrictlyUpperTriangular)));
        let mut u = Matrix::<Rational>::zeros(3, 3);
        u[(0, 1)] = rat(1);
        u[(1, 2)] = rat(1);
        assert!(matches!(rank_matrix(&u), Err(Error::NotTwoNilpotent)));
    }

    #[test]
    fn edge_count_examples() {
        assert_eq!(edge_count_matrix(&inv(5, &[(1, 2), (3, 5)])).get(1, 5), 2);
        assert!(edge_count_matrix(&Involution::identity(4)).rows().iter().flatten().all(|&x| x == 0));
        let e = edge_count_matrix(&inv(5, &[(2, 4)]));
        assert_eq!((e.get(1, 3), e.get(2, 4)), (0, 1));
    }

    #[test]
    fn leq_examples() {
        let s = inv(3, &[(1, 3)]);
        let s12 = inv(3, &[(1, 2)]);
        assert!(melnikov_leq(&s, &s).unwrap());
        assert!(melnikov_leq(&Involution::identity(3), &s).unwrap());
        assert!(melnikov_leq(&s, &s12).unwrap());
        assert!(!melnikov_leq(&s12, &s).unwrap());
        assert!(melnikov_leq(&Involution::identity(2), &s).is_err());
    }

    #[test]
    fn rank_matrix_equals_edge_count() {
        for n in 0..=6 {
            for s in Involution::all(n).unwrap() {
                assert_eq!(rank_matrix(&n_sigma(&s)).unwrap(), edge_count_matrix(&s));
            }
        }
    }

    #[test]
    fn rank_matrix_is_invariant_under_unipotent_conjugation() {
        // a strictly upper-triangular 2-nilpotent u conjugated by an upper
        // triangular b stays strictly upper triangular
        let s = inv(5, &[(1, 4), (2, 3)]);
        let u: Matrix = n_sigma(&s);
        let b = Matrix::from_fn(5, 5, |i, j| {
            if i > j { rat(0) } else if i == j { rat(i as i64 + 1) } else { rat((i + 2 * j) as i64 % 3 - 1) }
        });
        let conj = &(&b * &u) * &b.inverse().unwrap().unwrap();
        assert!(conj.is_strictly_upper_triangular());
        assert_eq!(rank_matrix(&conj).unwrap(), rank_matrix(&u).unwrap());
    }
}
