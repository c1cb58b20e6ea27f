//! Representations of the quiver `1 → 2 → … → n ⟲` with the relation
//! `α² = 0` on the loop at vertex `n`.
//!
//! A pair (complete flag, 2-nilpotent matrix) is a representation with
//! injective chain maps and dimension vector `(1, 2, …, n)`; Borel orbits
//! correspond to isomorphism classes. This module computes Hom spaces by
//! solving the intertwiner equations directly, so it serves as an oracle
//! independent of the combinatorial formulas in [`crate::degeneration`].

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::classify::require_two_nilpotent;
use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix, Rational};
use crate::olp::{OrientedLinkPattern, Arrow};

/// Dimensions of the spaces at vertices `1, …, n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DimensionVector(pub Vec<usize>);

impl DimensionVector {
    /// `(1, 2, …, n)`.
    pub fn flag(n: usize) -> Self {
        DimensionVector((1..=n).collect())
    }

    /// `(b_1, b_1 + b_2, …)` for parabolic block sizes.
    pub fn cumulative(blocks: &[usize]) -> Self {
        let mut acc = 0;
        DimensionVector(blocks.iter().map(|b| {
            acc += b;
            acc
        }).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// Successive differences `(d_1, d_2 - d_1, …)`.
    pub fn delta(&self) -> Vec<i64> {
        let mut prev = 0i64;
        self.0
            .iter()
            .map(|&d| {
                let out = d as i64 - prev;
                prev = d as i64;
                out
            })
            .collect()
    }
}

/// A representation bound by `α² = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RepRepr", into = "RepRepr")]
pub struct BoundQuiverRep {
    dims: DimensionVector,
    /// `chain[v]` maps vertex `v+1` to `v+2` (one-based vertices).
    chain: Vec<Matrix>,
    loop_map: Matrix,
}

#[derive(Serialize, Deserialize)]
struct RepRepr {
    dims: DimensionVector,
    chain: Vec<Matrix>,
    #[serde(rename = "loop")]
    loop_map: Matrix,
}

impl TryFrom<RepRepr> for BoundQuiverRep {
    type Error = Error;
    fn try_from(r: RepRepr) -> Result<Self> {
        BoundQuiverRep::new(r.dims, r.chain, r.loop_map)
    }
}

impl From<BoundQuiverRep> for RepRepr {
    fn from(r: BoundQuiverRep) -> Self {
        RepRepr { dims: r.dims, chain: r.chain, loop_map: r.loop_map }
    }
}

impl BoundQuiverRep {
    pub fn new(dims: DimensionVector, chain: Vec<Matrix>, loop_map: Matrix) -> Result<Self> {
        let n = dims.len();
        if n == 0 {
            return Err(Error::InvalidRepresentation("quiver needs at least one vertex".into()));
        }
        if chain.len() != n - 1 {
            return Err(Error::InvalidRepresentation(format!(
                "{} chain maps for {n} vertices",
                chain.len()
            )));
        }
        for (v, m) in chain.iter().enumerate() {
            if m.cols() != dims.0[v] || m.rows() != dims.0[v + 1] {
                return Err(Error::InvalidRepresentation(format!(
                    "chain map {} is {}x{}, expected {}x{}",
                    v + 1,
                    m.rows(),
                    m.cols(),
                    dims.0[v + 1],
                    dims.0[v]
                )));
            }
        }
        let top = dims.0[n - 1];
        if loop_map.rows() != top || loop_map.cols() != top {
            return Err(Error::InvalidRepresentation(format!("loop must be {top}x{top}")));
        }
        if !(&loop_map * &loop_map).is_zero() {
            return Err(Error::InvalidRepresentation("loop does not square to zero".into()));
        }
        Ok(BoundQuiverRep { dims, chain, loop_map })
    }

    pub fn n(&self) -> usize {
        self.dims.len()
    }

    pub fn dims(&self) -> &DimensionVector {
        &self.dims
    }

    pub fn chain(&self) -> &[Matrix] {
        &self.chain
    }

    pub fn loop_map(&self) -> &Matrix {
        &self.loop_map
    }

    pub fn has_injective_chain(&self) -> bool {
        self.chain.iter().all(|m| m.rank() == m.cols())
    }

    /// Block-diagonal direct sum.
    pub fn direct_sum(&self, other: &BoundQuiverRep) -> Result<BoundQuiverRep> {
        if self.n() != other.n() {
            return Err(Error::mismatch("direct_sum", format!("{} vs {} vertices", self.n(), other.n())));
        }
        let dims = DimensionVector(self.dims.0.iter().zip(&other.dims.0).map(|(a, b)| a + b).collect());
        let chain = self.chain.iter().zip(&other.chain).map(|(a, b)| block_diag(a, b)).collect();
        BoundQuiverRep::new(dims, chain, block_diag(&self.loop_map, &other.loop_map))
    }
}

fn block_diag(a: &Matrix, b: &Matrix) -> Matrix {
    Matrix::from_fn(a.rows() + b.rows(), a.cols() + b.cols(), |i, j| {
        if i < a.rows() && j < a.cols() {
            a.get(i, j).clone()
        } else if i >= a.rows() && j >= a.cols() {
            b.get(i - a.rows(), j - a.cols()).clone()
        } else {
            Rational::zero()
        }
    })
}

/// Embedding `k^d → k^d'` onto the first `d` coordinates.
fn canonical_embedding(from: usize, to: usize) -> Matrix {
    Matrix::from_fn(to, from, |i, j| if i == j { Rational::one() } else { Rational::zero() })
}

/// The flag representation of a 2-nilpotent `a`: canonical coordinate
/// embeddings along the chain, `a` on the loop.
pub fn rep_of_matrix(a: &Matrix, dims: &DimensionVector) -> Result<BoundQuiverRep> {
    require_two_nilpotent(a)?;
    let d = &dims.0;
    if d.is_empty() || d[0] == 0 || d.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidRepresentation(format!(
            "dimension vector {d:?} must be positive and strictly increasing"
        )));
    }
    if *d.last().unwrap() != a.rows() {
        return Err(Error::mismatch(
            "rep_of_matrix",
            format!("top dimension {} vs matrix size {}", d.last().unwrap(), a.rows()),
        ));
    }
    let chain = d.windows(2).map(|w| canonical_embedding(w[0], w[1])).collect();
    BoundQuiverRep::new(dims.clone(), chain, a.clone())
}

/// The flag representation of a pattern's multiplicity matrix.
pub fn rep_of_pattern(p: &OrientedLinkPattern) -> BoundQuiverRep {
    rep_of_matrix(&p.to_multiplicity_matrix(), &DimensionVector::flag(p.n()))
        .expect("multiplicity matrices are 2-nilpotent")
}

/// Names of the indecomposable representations (one-based indices).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum IndecomposableId {
    /// Two-dimensional tail: a vector from vertex `j` mapped by the loop to
    /// a vector from vertex `i`. Corresponds to the arrow `j → i`.
    U { i: usize, j: usize },
    /// One-dimensional tail from vertex `i`, zero loop.
    V { i: usize },
    /// One-dimensional window on vertices `i..=j`, `j < n`.
    W { i: usize, j: usize },
}

impl IndecomposableId {
    pub fn validate(&self, n: usize) -> Result<()> {
        let ok = match *self {
            IndecomposableId::U { i, j } => (1..=n).contains(&i) && (1..=n).contains(&j),
            IndecomposableId::V { i } => (1..=n).contains(&i),
            IndecomposableId::W { i, j } => 1 <= i && i <= j && j < n,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidIndecomposable(format!("{self} for n = {n}")))
        }
    }

    pub fn dimension_vector(&self, n: usize) -> DimensionVector {
        DimensionVector(
            (1..=n)
                .map(|v| match *self {
                    IndecomposableId::U { i, j } => usize::from(v >= i) + usize::from(v >= j),
                    IndecomposableId::V { i } => usize::from(v >= i),
                    IndecomposableId::W { i, j } => usize::from(i <= v && v <= j),
                })
                .collect(),
        )
    }

    fn kind_rank(&self) -> u8 {
        match self {
            IndecomposableId::U { .. } => 0,
            IndecomposableId::V { .. } => 1,
            IndecomposableId::W { .. } => 2,
        }
    }

    /// Every indecomposable for `n` vertices, ordered by total dimension,
    /// kind, then indices.
    pub fn all(n: usize) -> Vec<IndecomposableId> {
        let mut out = Vec::new();
        for i in 1..=n {
            for j in 1..=n {
                out.push(IndecomposableId::U { i, j });
            }
        }
        out.extend((1..=n).map(|i| IndecomposableId::V { i }));
        for i in 1..n {
            for j in i..n {
                out.push(IndecomposableId::W { i, j });
            }
        }
        out.sort_by_key(|id| (id.dimension_vector(n).total(), id.kind_rank(), *id));
        out
    }

    /// The indecomposables occurring in flag representations.
    pub fn injective_chain(n: usize) -> Vec<IndecomposableId> {
        Self::all(n).into_iter().filter(|id| !matches!(id, IndecomposableId::W { .. })).collect()
    }
}

impl fmt::Display for IndecomposableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndecomposableId::U { i, j } => write!(f, "U[{i},{j}]"),
            IndecomposableId::V { i } => write!(f, "V[{i}]"),
            IndecomposableId::W { i, j } => write!(f, "W[{i},{j}]"),
        }
    }
}

/// The explicit representation named by `id`.
pub fn indecomposable(id: IndecomposableId, n: usize) -> Result<BoundQuiverRep> {
    id.validate(n)?;
    let dims = id.dimension_vector(n);
    let d = &dims.0;
    let chain = (1..n)
        .map(|v| {
            let (from, to) = (d[v - 1], d[v]);
            match (from, to) {
                (1, 2) => {
                    // the vector already present is x (from j) when j < i,
                    // otherwise y (from i); x is the first basis vector
                    let IndecomposableId::U { i, j } = id else { unreachable!() };
                    let row = if j < i { 0 } else { 1 };
                    Matrix::from_fn(2, 1, |r, _| if r == row { Rational::one() } else { Rational::zero() })
                }
                _ if from == to => Matrix::identity(from),
                _ => Matrix::zeros(to, from),
            }
        })
        .collect();
    let top = d[n - 1];
    let loop_map = if matches!(id, IndecomposableId::U { .. }) {
        Matrix::unit(2, 2, 1)
    } else {
        Matrix::zeros(top, top)
    };
    BoundQuiverRep::new(dims, chain, loop_map)
}

/// Coefficient matrix of the intertwiner equations for `Hom(x, y)`.
fn intertwiner_system(x: &BoundQuiverRep, y: &BoundQuiverRep) -> Matrix {
    let n = x.n();
    let dx = &x.dims.0;
    let dy = &y.dims.0;
    // unknown f_v[r][c] lives at offset[v] + r * dx[v] + c
    let mut offset = vec![0; n + 1];
    for v in 0..n {
        offset[v + 1] = offset[v] + dy[v] * dx[v];
    }
    let unknowns = offset[n];
    let idx = |v: usize, r: usize, c: usize| offset[v] + r * dx[v] + c;
    let mut rows: Vec<Vec<Rational>> = Vec::new();

    // f_{v+1} X_v - Y_v f_v = 0
    for v in 0..n.saturating_sub(1) {
        let (xm, ym) = (&x.chain[v], &y.chain[v]);
        for r in 0..dy[v + 1] {
            for c in 0..dx[v] {
                let mut eq = vec![Rational::zero(); unknowns];
                for t in 0..dx[v + 1] {
                    let coef = xm.get(t, c);
                    if !coef.is_zero() {
                        eq[idx(v + 1, r, t)] += coef;
                    }
                }
                for s in 0..dy[v] {
                    let coef = ym.get(r, s);
                    if !coef.is_zero() {
                        eq[idx(v, s, c)] -= coef;
                    }
                }
                rows.push(eq);
            }
        }
    }
    // f_n X_loop - Y_loop f_n = 0
    let v = n - 1;
    for r in 0..dy[v] {
        for c in 0..dx[v] {
            let mut eq = vec![Rational::zero(); unknowns];
            for t in 0..dx[v] {
                let coef = x.loop_map.get(t, c);
                if !coef.is_zero() {
                    eq[idx(v, r, t)] += coef;
                }
            }
            for s in 0..dy[v] {
                let coef = y.loop_map.get(r, s);
                if !coef.is_zero() {
                    eq[idx(v, s, c)] -= coef;
                }
            }
            rows.push(eq);
        }
    }
    rows.retain(|eq| eq.iter().any(|c| !c.is_zero()));
    if rows.is_empty() {
        return Matrix::zeros(0, unknowns);
    }
    Matrix::from_rows(rows).expect("equal-length equations")
}

/// `dim Hom(x, y)`.
pub fn hom_dim(x: &BoundQuiverRep, y: &BoundQuiverRep) -> Result<usize> {
    if x.n() != y.n() {
        return Err(Error::mismatch("hom_dim", format!("{} vs {} vertices", x.n(), y.n())));
    }
    Ok(intertwiner_system(x, y).kernel_dim())
}

pub fn endo_dim(x: &BoundQuiverRep) -> usize {
    intertwiner_system(x, x).kernel_dim()
}

/// Closed-form `dim Hom(a, b)` for indecomposables of kinds U and V.
pub fn hom_dim_closed_form(a: IndecomposableId, b: IndecomposableId) -> Result<usize> {
    use IndecomposableId::*;
    let le = |x: usize, y: usize| usize::from(x <= y);
    match (a, b) {
        (V { i: k }, V { i }) => Ok(le(i, k)),
        (V { i: k }, U { i, .. }) => Ok(le(i, k)),
        (U { j: l, .. }, V { i }) => Ok(le(i, l)),
        (U { i: k, j: l }, U { i, j }) => Ok(le(i, l) + le(j, l) * le(i, k)),
        _ => Err(Error::InvalidIndecomposable(format!(
            "no closed form for ({a}, {b}); W kinds need hom_dim"
        ))),
    }
}

/// Dimension of the Borel orbit of the pattern's multiplicity matrix:
/// `dim B_n` minus the dimension of its stabiliser, which is the
/// endomorphism space of the flag representation.
pub fn orbit_dimension(p: &OrientedLinkPattern) -> usize {
    let n = p.n();
    n * (n + 1) / 2 - endo_dim(&rep_of_pattern(p))
}

/// Krull–Schmidt multiplicities of a representation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Decomposition {
    n: usize,
    /// `u[i-1][j-1]` is the multiplicity of `U_{i,j}`.
    u: Vec<Vec<usize>>,
    v: Vec<usize>,
    /// `w[i-1][j-1]`, meaningful for `i ≤ j < n`.
    w: Vec<Vec<usize>>,
}

impl Decomposition {
    fn empty(n: usize) -> Self {
        Decomposition { n, u: vec![vec![0; n]; n], v: vec![0; n], w: vec![vec![0; n]; n] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn multiplicity(&self, id: IndecomposableId) -> usize {
        match id {
            IndecomposableId::U { i, j } => self.u[i - 1][j - 1],
            IndecomposableId::V { i } => self.v[i - 1],
            IndecomposableId::W { i, j } => self.w[i - 1][j - 1],
        }
    }

    fn set(&mut self, id: IndecomposableId, m: usize) {
        match id {
            IndecomposableId::U { i, j } => self.u[i - 1][j - 1] = m,
            IndecomposableId::V { i } => self.v[i - 1] = m,
            IndecomposableId::W { i, j } => self.w[i - 1][j - 1] = m,
        }
    }

    /// Nonzero summands with multiplicities, in catalogue order.
    pub fn summands(&self) -> Vec<(IndecomposableId, usize)> {
        IndecomposableId::all(self.n)
            .into_iter()
            .map(|id| (id, self.multiplicity(id)))
            .filter(|&(_, m)| m > 0)
            .collect()
    }

    pub fn dimension_vector(&self) -> DimensionVector {
        let mut d = vec![0; self.n];
        for (id, m) in self.summands() {
            for (acc, x) in d.iter_mut().zip(id.dimension_vector(self.n).0) {
                *acc += m * x;
            }
        }
        DimensionVector(d)
    }

    pub fn has_w_summands(&self) -> bool {
        self.w.iter().flatten().any(|&m| m > 0)
    }

    /// The oriented link pattern whose arrows `j → i` are the `U_{i,j}`
    /// summands, when this decomposes a flag representation.
    pub fn to_pattern(&self) -> Option<OrientedLinkPattern> {
        if self.has_w_summands() || self.dimension_vector() != DimensionVector::flag(self.n) {
            return None;
        }
        let mut arrows = Vec::new();
        for i in 1..=self.n {
            for j in 1..=self.n {
                match self.u[i - 1][j - 1] {
                    0 => {}
                    1 => arrows.push(Arrow::new(j, i)),
                    _ => return None,
                }
            }
        }
        OrientedLinkPattern::new(self.n, arrows).ok()
    }
}

/// All indecomposables for a fixed vertex count with their pairwise Hom
/// dimensions, used to decompose representations.
#[derive(Clone, Debug)]
pub struct IndecomposableCatalog {
    n: usize,
    ids: Vec<IndecomposableId>,
    reps: Vec<BoundQuiverRep>,
    /// `hom[a][b] = dim Hom(ids[a], ids[b])`.
    hom: Matrix,
}

impl IndecomposableCatalog {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidRepresentation("quiver needs at least one vertex".into()));
        }
        let ids = IndecomposableId::all(n);
        let reps: Vec<_> = ids.iter().map(|&id| indecomposable(id, n)).collect::<Result<_>>()?;
        let mut hom = Matrix::zeros(ids.len(), ids.len());
        for (a, x) in reps.iter().enumerate() {
            for (b, y) in reps.iter().enumerate() {
                hom[(a, b)] = Rational::from_i64(hom_dim(x, y)? as i64);
            }
        }
        // Hom vectors of pairwise non-isomorphic indecomposables are
        // linearly independent for a representation-finite algebra
        if hom.rank() != ids.len() {
            return Err(Error::Internal("indecomposable Hom table is singular".into()));
        }
        Ok(IndecomposableCatalog { n, ids, reps, hom })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ids(&self) -> &[IndecomposableId] {
        &self.ids
    }

    pub fn rep(&self, id: IndecomposableId) -> Option<&BoundQuiverRep> {
        self.ids.iter().position(|&x| x == id).map(|k| &self.reps[k])
    }

    /// `dim Hom(ids[a], ids[b])`.
    pub fn hom_table(&self) -> &Matrix {
        &self.hom
    }

    /// `dim Hom(X, m)` for every catalogued `X`.
    pub fn hom_vector(&self, m: &BoundQuiverRep) -> Result<Vec<usize>> {
        self.reps.iter().map(|x| hom_dim(x, m)).collect()
    }

    /// Solve `hom(X, m) = Σ_Y mult(Y) · hom(X, Y)` for the multiplicities.
    pub fn decompose(&self, m: &BoundQuiverRep) -> Result<Decomposition> {
        if m.n() != self.n {
            return Err(Error::mismatch("decompose", format!("{} vs {} vertices", m.n(), self.n)));
        }
        let rhs = Matrix::from_fn(self.ids.len(), 1, |a, _| {
            Rational::from_i64(hom_dim(&self.reps[a], m).expect("same vertex count") as i64)
        });
        let solution = self
            .hom
            .solve_unique(&rhs)?
            .ok_or_else(|| Error::InconsistentDecomposition("no solution".into()))?;
        let mut out = Decomposition::empty(self.n);
        for (k, &id) in self.ids.iter().enumerate() {
            let x = solution.get(k, 0);
            if !x.is_integer() || x < &Rational::zero() {
                return Err(Error::InconsistentDecomposition(format!("multiplicity of {id} is {x}")));
            }
            let mult = x.to_integer().try_into().map_err(|_| {
                Error::InconsistentDecomposition(format!("multiplicity of {id} too large"))
            })?;
            out.set(id, mult);
        }
        if out.dimension_vector() != *m.dims() {
            return Err(Error::InconsistentDecomposition(format!(
                "summands have dimension {:?}, representation has {:?}",
                out.dimension_vector().0,
                m.dims().0
            )));
        }
        Ok(out)
    }
}

/// Krull–Schmidt decomposition of `m` (builds a fresh catalogue; reuse an
/// [`IndecomposableCatalog`] when decomposing many representations).
pub fn krull_schmidt(m: &BoundQuiverRep) -> Result<Decomposition> {
    IndecomposableCatalog::new(m.n())?.decompose(m)
}

/// Hom dimensions from every U/V indecomposable into the flag
/// representation of `p`, in [`IndecomposableId::injective_chain`] order.
pub fn hom_profile(p: &OrientedLinkPattern) -> Result<Vec<usize>> {
    let n = p.n();
    let m = rep_of_pattern(p);
    IndecomposableId::injective_chain(n)
        .into_iter()
        .map(|id| hom_dim(&indecomposable(id, n)?, &m))
        .collect()
}

/// Degeneration via Hom dimensions: `p ≤ q` iff `dim Hom(X, p) ≤ dim Hom(X, q)`
/// for every indecomposable `X` of kind U or V.
pub fn zwara_leq(p: &OrientedLinkPattern, q: &OrientedLinkPattern) -> Result<bool> {
    if p.n() != q.n() {
        return Err(Error::mismatch("zwara_leq", format!("{} vs {} vertices", p.n(), q.n())));
    }
    let (hp, hq) = (hom_profile(p)?, hom_profile(q)?);
    Ok(hp.iter().zip(&hq).all(|(a, b)| a <= b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;
    use crate::olp::enumerate;
    use IndecomposableId::*;

    fn pat(n: usize, pairs: &[(usize, usize)]) -> OrientedLinkPattern {
        OrientedLinkPattern::from_pairs(n, pairs).unwrap()
    }

    #[test]
    fn rep_of_matrix_examples() {
        let r = rep_of_matrix(&Matrix::zeros(3, 3), &DimensionVector::flag(3)).unwrap();
        assert_eq!(r.chain()[0], canonical_embedding(1, 2));
        assert_eq!(r.chain()[1], canonical_embedding(2, 3));
        assert!(r.loop_map().is_zero());
        let e21 = Matrix::unit(2, 2, 1);
        assert_eq!(*rep_of_matrix(&e21, &DimensionVector::flag(2)).unwrap().loop_map(), e21);
        let r = rep_of_matrix(&Matrix::zeros(5, 5), &DimensionVector::cumulative(&[2, 1, 2])).unwrap();
        assert_eq!(r.dims().0, vec![2, 3, 5]);
        assert!(r.has_injective_chain());
        assert!(rep_of_matrix(&Matrix::zeros(3, 3), &DimensionVector(vec![1, 1, 3])).is_err());
        assert!(rep_of_matrix(&Matrix::zeros(3, 3), &DimensionVector(vec![1, 2])).is_err());
        let not_nil = &Matrix::unit(2, 1, 2) + &Matrix::unit(2, 2, 1);
        assert!(matches!(rep_of_matrix(&not_nil, &DimensionVector::flag(2)), Err(Error::NotTwoNilpotent)));
    }

    #[test]
    fn indecomposable_examples() {
        let v = indecomposable(V { i: 3 }, 3).unwrap();
        assert_eq!(v.dims().0, vec![0, 0, 1]);
        assert!(v.loop_map().is_zero());

        let u = indecomposable(U { i: 2, j: 1 }, 2).unwrap();
        assert_eq!(u.dims().0, vec![1, 2]);
        assert_eq!(u.chain()[0], Matrix::from_i64_rows(&[[1], [0]]).unwrap());
        assert_eq!(*u.loop_map(), Matrix::unit(2, 2, 1));

        let u = indecomposable(U { i: 1, j: 2 }, 2).unwrap();
        assert_eq!(u.chain()[0], Matrix::from_i64_rows(&[[0], [1]]).unwrap());

        let w = indecomposable(W { i: 1, j: 1 }, 2).unwrap();
        assert_eq!(w.dims().0, vec![1, 0]);
        assert_eq!(w.loop_map().rows(), 0);

        assert!(indecomposable(W { i: 1, j: 2 }, 2).is_err());
        assert!(indecomposable(U { i: 0, j: 1 }, 2).is_err());
        assert_eq!(IndecomposableId::all(5).len(), 25 + 5 + 10);
    }

    #[test]
    fn endomorphism_dimensions() {
        assert_eq!(endo_dim(&indecomposable(U { i: 2, j: 1 }, 2).unwrap()), 1);
        assert_eq!(endo_dim(&indecomposable(U { i: 1, j: 2 }, 2).unwrap()), 2);
        for n in 1..=4 {
            for id in IndecomposableId::all(n) {
                let expected = match id {
                    U { i, j } if i <= j => 2,
                    _ => 1,
                };
                assert_eq!(endo_dim(&indecomposable(id, n).unwrap()), expected, "{id}");
            }
        }
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(hom_dim_closed_form(V { i: 3 }, V { i: 1 }).unwrap(), 1);
        assert_eq!(hom_dim_closed_form(V { i: 1 }, V { i: 3 }).unwrap(), 0);
        assert_eq!(hom_dim_closed_form(U { i: 2, j: 2 }, V { i: 1 }).unwrap(), 1);
        assert_eq!(hom_dim_closed_form(U { i: 1, j: 2 }, U { i: 1, j: 2 }).unwrap(), 2);
        assert!(hom_dim_closed_form(W { i: 1, j: 1 }, V { i: 1 }).is_err());
    }

    #[test]
    fn hom_matches_closed_form_small() {
        for n in 1..=3 {
            for a in IndecomposableId::injective_chain(n) {
                for b in IndecomposableId::injective_chain(n) {
                    let x = indecomposable(a, n).unwrap();
                    let y = indecomposable(b, n).unwrap();
                    assert_eq!(hom_dim(&x, &y).unwrap(), hom_dim_closed_form(a, b).unwrap(), "[{a}, {b}]");
                }
            }
        }
    }

    #[test]
    fn hom_is_additive() {
        let n = 3;
        let ids = IndecomposableId::all(n);
        for (k, &a) in ids.iter().enumerate() {
            let y = indecomposable(ids[(k * 7 + 3) % ids.len()], n).unwrap();
            let z = indecomposable(ids[(k * 5 + 1) % ids.len()], n).unwrap();
            let x = indecomposable(a, n).unwrap();
            let sum = y.direct_sum(&z).unwrap();
            assert_eq!(
                hom_dim(&x, &sum).unwrap(),
                hom_dim(&x, &y).unwrap() + hom_dim(&x, &z).unwrap()
            );
            assert_eq!(
                hom_dim(&sum, &x).unwrap(),
                hom_dim(&y, &x).unwrap() + hom_dim(&z, &x).unwrap()
            );
        }
    }

    #[test]
    fn orbit_dimension_examples() {
        assert_eq!(orbit_dimension(&pat(2, &[(1, 2)])), 2);
        assert_eq!(orbit_dimension(&pat(2, &[(2, 1)])), 1);
        assert_eq!(orbit_dimension(&pat(2, &[])), 0);
    }

    #[test]
    fn krull_schmidt_examples() {
        let m = rep_of_matrix(&Matrix::zeros(3, 3), &DimensionVector::flag(3)).unwrap();
        let d = krull_schmidt(&m).unwrap();
        assert_eq!(d.summands(), vec![(V { i: 3 }, 1), (V { i: 2 }, 1), (V { i: 1 }, 1)]);

        let m = rep_of_matrix(&Matrix::unit(2, 2, 1), &DimensionVector::flag(2)).unwrap();
        assert_eq!(krull_schmidt(&m).unwrap().summands(), vec![(U { i: 2, j: 1 }, 1)]);

        let m = indecomposable(U { i: 1, j: 2 }, 3).unwrap();
        assert_eq!(krull_schmidt(&m).unwrap().summands(), vec![(U { i: 1, j: 2 }, 1)]);
    }

    #[test]
    fn krull_schmidt_handles_w_summands() {
        let n = 3;
        let m = indecomposable(W { i: 1, j: 2 }, n)
            .unwrap()
            .direct_sum(&indecomposable(U { i: 3, j: 1 }, n).unwrap())
            .unwrap()
            .direct_sum(&indecomposable(W { i: 2, j: 2 }, n).unwrap())
            .unwrap();
        let d = krull_schmidt(&m).unwrap();
        assert_eq!(d.multiplicity(W { i: 1, j: 2 }), 1);
        assert_eq!(d.multiplicity(W { i: 2, j: 2 }), 1);
        assert_eq!(d.multiplicity(U { i: 3, j: 1 }), 1);
        assert!(d.has_w_summands());
        assert!(d.to_pattern().is_none());
    }

    #[test]
    fn krull_schmidt_recovers_patterns_n4() {
        let catalog = IndecomposableCatalog::new(4).unwrap();
        for p in enumerate(4).unwrap() {
            let d = catalog.decompose(&rep_of_pattern(&p)).unwrap();
            assert_eq!(d.to_pattern().unwrap(), p);
            let delta = d.dimension_vector().delta();
            assert!(delta.iter().all(|&x| x == 1));
        }
    }

    #[test]
    fn zwara_examples() {
        let dense = pat(2, &[(1, 2)]);
        let mid = pat(2, &[(2, 1)]);
        let zero = pat(2, &[]);
        assert!(zwara_leq(&dense, &dense).unwrap());
        assert!(zwara_leq(&dense, &mid).unwrap());
        assert!(zwara_leq(&mid, &zero).unwrap());
        assert!(!zwara_leq(&mid, &dense).unwrap());
        assert!(!zwara_leq(&zero, &mid).unwrap());
        assert!(zwara_leq(&dense, &pat(3, &[])).is_err());
    }

    #[test]
    fn json_shapes() {
        let id: IndecomposableId = serde_json::from_str(r#"{"kind":"U","i":2,"j":1}"#).unwrap();
        assert_eq!(id, U { i: 2, j: 1 });
        let rep = indecomposable(id, 2).unwrap();
        let text = serde_json::to_string(&rep).unwrap();
        assert!(text.contains(r#""loop""#));
        assert_eq!(serde_json::from_str::<BoundQuiverRep>(&text).unwrap(), rep);
        let bad = r#"{"dims":[1],"chain":[],"loop":{"rows":1,"cols":1,"entries":[["1"]]}}"#;
        assert!(serde_json::from_str::<BoundQuiverRep>(bad).is_err());
        let _ = rat(0);
    }
}
