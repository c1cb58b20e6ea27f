//! Classification of 2-nilpotent matrices up to Borel conjugation.
//!
//! The invariant is the intersection profile
//! `d[i][j] = dim(U_i ∩ A·U_j)` for the coordinate flag
//! `U_i = span(e_1, …, e_i)`; its second differences are the multiplicity
//! matrix of the orbit's oriented link pattern.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{intersection_dim, Field, Matrix};
use crate::olp::{Arrow, EnhancedOlp, OrientedLinkPattern};

/// `d[i][j]` for `0 ≤ i, j ≤ n`, zero on the first row and column.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntersectionProfile {
    n: usize,
    d: Vec<Vec<usize>>,
}

impl IntersectionProfile {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> usize {
        self.d[i][j]
    }

    pub fn grid(&self) -> &[Vec<usize>] {
        &self.d
    }

    fn second_difference(&self, i0: usize, i1: usize, j0: usize, j1: usize) -> i64 {
        let d = |i: usize, j: usize| self.d[i][j] as i64;
        d(i1, j1) - d(i0, j1) - d(i1, j0) + d(i0, j0)
    }
}

pub(crate) fn require_two_nilpotent<T: Field>(a: &Matrix<T>) -> Result<()> {
    if !a.is_square() {
        return Err(Error::NotSquare { rows: a.rows(), cols: a.cols() });
    }
    if !(a * a).is_zero() {
        return Err(Error::NotTwoNilpotent);
    }
    Ok(())
}

/// The intersection profile of a 2-nilpotent matrix.
pub fn profile_of<T: Field>(a: &Matrix<T>) -> Result<IntersectionProfile> {
    require_two_nilpotent(a)?;
    let n = a.rows();
    let identity = Matrix::<T>::identity(n);
    let mut d = vec![vec![0; n + 1]; n + 1];
    for j in 1..=n {
        let image = a.block(0, n, 0, j)?;
        for i in 1..=n {
            let flag = identity.block(0, n, 0, i)?;
            d[i][j] = intersection_dim(&flag, &image)?;
        }
    }
    Ok(IntersectionProfile { n, d })
}

/// The oriented link pattern labelling the Borel orbit of `a`.
pub fn classify<T: Field>(a: &Matrix<T>) -> Result<OrientedLinkPattern> {
    let profile = profile_of(a)?;
    pattern_from_profile(&profile)
}

pub fn pattern_from_profile(profile: &IntersectionProfile) -> Result<OrientedLinkPattern> {
    let n = profile.n;
    let mut arrows = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            match profile.second_difference(i - 1, i, j - 1, j) {
                0 => {}
                1 => arrows.push(Arrow::new(j, i)),
                m => {
                    return Err(Error::Internal(format!("second difference m[{i}][{j}] = {m}")));
                }
            }
        }
    }
    OrientedLinkPattern::new(n, arrows).map_err(|e| Error::Internal(e.to_string()))
}

pub(crate) fn check_blocks(blocks: &[usize], n: usize) -> Result<()> {
    if blocks.iter().any(|&b| b == 0) {
        return Err(Error::InvalidBlocks("block sizes must be positive".into()));
    }
    let total: usize = blocks.iter().sum();
    if total != n {
        return Err(Error::InvalidBlocks(format!("block sizes sum to {total}, matrix size is {n}")));
    }
    Ok(())
}

/// Classification up to the parabolic subgroup with diagonal blocks of the
/// given sizes: second differences of the profile taken at the cumulative
/// block boundaries.
pub fn classify_parabolic<T: Field>(a: &Matrix<T>, blocks: &[usize]) -> Result<EnhancedOlp> {
    let profile = profile_of(a)?;
    check_blocks(blocks, profile.n)?;
    let mut corners = vec![0];
    for b in blocks {
        corners.push(corners.last().unwrap() + b);
    }
    let k = blocks.len();
    let mut mult = vec![vec![0; k]; k];
    for i in 1..=k {
        for j in 1..=k {
            let m = profile.second_difference(corners[i - 1], corners[i], corners[j - 1], corners[j]);
            mult[i - 1][j - 1] = usize::try_from(m)
                .map_err(|_| Error::Internal(format!("negative block multiplicity at ({i}, {j})")))?;
        }
    }
    EnhancedOlp::new(blocks.to_vec(), mult).map_err(|e| Error::Internal(e.to_string()))
}
