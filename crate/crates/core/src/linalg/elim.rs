//! Elimination kernels.
//!
//! Rank and determinant over the rationals go through fraction-free
//! (Bareiss) elimination on an integer-scaled copy; the remaining routines
//! use Gauss-Jordan reduction over an arbitrary [`Field`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::field::{Field, Rational};
use super::matrix::Matrix;

/// Rows scaled to integers by the lcm of their denominators; returns the
/// integer grid and the product of the scale factors.
fn integer_rows(m: &Matrix<Rational>) -> (Vec<Vec<BigInt>>, BigInt) {
    let mut scale_product = BigInt::one();
    let rows = (0..m.rows())
        .map(|i| {
            let row = m.row(i);
            let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            scale_product *= &lcm;
            row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
        })
        .collect();
    (rows, scale_product)
}

/// Fraction-free forward elimination. Returns (rank, signed last pivot);
/// the second component is the determinant when the grid is square and of
/// full rank.
fn bareiss(mut a: Vec<Vec<BigInt>>, cols: usize) -> (usize, BigInt) {
    let rows = a.len();
    let mut prev = BigInt::one();
    let mut rank = 0;
    let mut negate = false;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        if p != rank {
            a.swap(p, rank);
            negate = !negate;
        }
        let (top, rest) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let pivot = &pivot_row[col];
        for row in rest.iter_mut() {
            let factor = row[col].clone();
            for j in col + 1..cols {
                let v = pivot * &row[j] - &factor * &pivot_row[j];
                row[j] = v / &prev;
            }
            row[col] = BigInt::zero();
        }
        prev = pivot.clone();
        rank += 1;
    }
    if negate {
        prev = -prev;
    }
    (rank, prev)
}

pub(crate) fn bareiss_rank(m: &Matrix<Rational>) -> usize {
    let (grid, _) = integer_rows(m);
    bareiss(grid, m.cols()).0
}

pub(crate) fn bareiss_det(m: &Matrix<Rational>) -> Rational {
    let n = m.rows();
    if n == 0 {
        return <Rational as One>::one();
    }
    let (grid, scale) = integer_rows(m);
    let (rank, last) = bareiss(grid, n);
    if rank < n {
        return <Rational as Zero>::zero();
    }
    Rational::new(last, scale)
}

/// Row-reduced echelon form in place; returns pivot columns.
fn rref<T: Field>(a: &mut Matrix<T>) -> Vec<usize> {
    let (rows, cols) = (a.rows(), a.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                let tmp = a[(p, j)].clone();
                a[(p, j)] = a[(r, j)].clone();
                a[(r, j)] = tmp;
            }
        }
        let inv = a[(r, c)].inverse().expect("nonzero pivot");
        for j in c..cols {
            a[(r, j)] = a[(r, j)].times(&inv);
        }
        for i in 0..rows {
            if i == r || a[(i, c)].is_zero() {
                continue;
            }
            let f = a[(i, c)].clone();
            for j in c..cols {
                let v = a[(i, j)].minus(&f.times(&a[(r, j)]));
                a[(i, j)] = v;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub(crate) fn gauss_rank<T: Field>(m: &Matrix<T>) -> usize {
    let mut a = m.clone();
    rref(&mut a).len()
}

pub(crate) fn gauss_det<T: Field>(m: &Matrix<T>) -> T {
    let n = m.rows();
    let mut a = m.clone();
    let mut det = T::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[(i, c)].is_zero()) else {
            return T::zero();
        };
        if p != c {
            for j in 0..n {
                let tmp = a[(p, j)].clone();
                a[(p, j)] = a[(c, j)].clone();
                a[(c, j)] = tmp;
            }
            det = det.negated();
        }
        let pivot = a[(c, c)].clone();
        det = det.times(&pivot);
        let inv = pivot.inverse().expect("nonzero pivot");
        for i in c + 1..n {
            if a[(i, c)].is_zero() {
                continue;
            }
            let f = a[(i, c)].times(&inv);
            for j in c..n {
                let v = a[(i, j)].minus(&f.times(&a[(c, j)]));
                a[(i, j)] = v;
            }
        }
    }
    det
}

pub(crate) fn kernel_basis<T: Field>(m: &Matrix<T>) -> Matrix<T> {
    let mut a = m.clone();
    let pivots = rref(&mut a);
    let cols = m.cols();
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Matrix::zeros(cols, free.len());
    for (k, &f) in free.iter().enumerate() {
        basis[(f, k)] = T::one();
        for (r, &p) in pivots.iter().enumerate() {
            basis[(p, k)] = a[(r, f)].negated();
        }
    }
    basis
}

pub(crate) fn solve_unique<T: Field>(a: &Matrix<T>, b: &Matrix<T>) -> Option<Matrix<T>> {
    let n = a.cols();
    let mut aug = a.hcat(b).expect("row counts checked by caller");
    let pivots = rref(&mut aug);
    if pivots.iter().any(|&p| p >= n) || pivots.len() != n {
        return None;
    }
    Some(Matrix::from_fn(n, b.cols(), |i, j| aug[(i, n + j)].clone()))
}

pub(crate) fn inverse<T: Field>(a: &Matrix<T>) -> Option<Matrix<T>> {
    solve_unique(a, &Matrix::identity(a.rows()))
}
