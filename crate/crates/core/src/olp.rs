//! Oriented link patterns: oriented graphs on `{1, …, n}` in which every
//! vertex meets at most one arrow. They label the Borel orbits on 2-nilpotent
//! matrices.
//!
//! Vertices are one-based throughout, including in JSON. An arrow `j → i`
//! corresponds to the multiplicity-matrix entry `m[i][j] = 1`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix};

/// Largest `n` accepted by [`enumerate`].
pub const MAX_ENUMERATION_N: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Arrow {
    pub source: usize,
    pub target: usize,
}

impl Arrow {
    pub fn new(source: usize, target: usize) -> Self {
        Arrow { source, target }
    }

    fn touches(&self, v: usize) -> bool {
        self.source == v || self.target == v
    }
}

impl fmt::Display for Arrow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}>{}", self.source, self.target)
    }
}

/// Why a candidate arrow set is not an oriented link pattern.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternViolation {
    pub vertex: usize,
    pub reason: String,
}

impl From<PatternViolation> for Error {
    fn from(v: PatternViolation) -> Self {
        Error::InvalidPattern { vertex: v.vertex, reason: v.reason }
    }
}

/// Check the pattern axioms for `arrows` on `n` vertices.
pub fn validate(n: usize, arrows: &[Arrow]) -> std::result::Result<(), PatternViolation> {
    let mut incident = vec![false; n + 1];
    for a in arrows {
        for v in [a.source, a.target] {
            if v == 0 || v > n {
                return Err(PatternViolation { vertex: v, reason: format!("vertex outside 1..={n}") });
            }
        }
        if a.source == a.target {
            return Err(PatternViolation { vertex: a.source, reason: "loop".into() });
        }
    }
    // report the smallest offending vertex
    let mut worst: Option<usize> = None;
    for a in arrows {
        for v in [a.source, a.target] {
            if incident[v] {
                worst = Some(worst.map_or(v, |w| w.min(v)));
            }
            incident[v] = true;
        }
    }
    match worst {
        Some(v) => Err(PatternViolation { vertex: v, reason: "incident with more than one arrow".into() }),
        None => Ok(()),
    }
}

/// A validated oriented link pattern with canonically sorted arrows.
///
/// Patterns are ordered by vertex count, then arrow count, then
/// lexicographically by their sorted `(source, target)` lists.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawPattern")]
pub struct OrientedLinkPattern {
    n: usize,
    arrows: Vec<Arrow>,
}

#[derive(Deserialize)]
struct RawPattern {
    n: usize,
    arrows: Vec<Arrow>,
}

impl TryFrom<RawPattern> for OrientedLinkPattern {
    type Error = Error;
    fn try_from(raw: RawPattern) -> Result<Self> {
        OrientedLinkPattern::new(raw.n, raw.arrows)
    }
}

impl OrientedLinkPattern {
    pub fn new(n: usize, mut arrows: Vec<Arrow>) -> Result<Self> {
        validate(n, &arrows)?;
        arrows.sort();
        Ok(OrientedLinkPattern { n, arrows })
    }

    /// Convenience constructor from `(source, target)` pairs.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        Self::new(n, pairs.iter().map(|&(s, t)| Arrow::new(s, t)).collect())
    }

    pub fn empty(n: usize) -> Self {
        OrientedLinkPattern { n, arrows: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    /// The arrow incident with `v`, if any.
    pub fn arrow_at(&self, v: usize) -> Option<Arrow> {
        self.arrows.iter().copied().find(|a| a.touches(v))
    }

    pub fn is_free(&self, v: usize) -> bool {
        self.arrow_at(v).is_none()
    }

    pub fn free_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.n).filter(|&v| self.is_free(v))
    }

    /// `m[i][j]` for one-based `i, j`: one iff the arrow `j → i` is present.
    pub fn multiplicity(&self, i: usize, j: usize) -> usize {
        usize::from(self.arrows.contains(&Arrow::new(j, i)))
    }

    /// The 0/1 matrix with entry `(i, j) = 1` iff `j → i` is an arrow.
    pub fn to_multiplicity_matrix<T: Field>(&self) -> Matrix<T> {
        let mut m = Matrix::zeros(self.n, self.n);
        for a in &self.arrows {
            m[(a.target - 1, a.source - 1)] = T::one();
        }
        m
    }

    /// Inverse of [`Self::to_multiplicity_matrix`].
    pub fn from_multiplicity_matrix<T: Field>(m: &Matrix<T>) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
        }
        let n = m.rows();
        let mut arrows = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let x = m.get(i, j);
                if x.is_zero() {
                    continue;
                }
                if !x.is_one() {
                    return Err(Error::InvalidPattern {
                        vertex: i + 1,
                        reason: format!("entry ({}, {}) = {x} is not 0 or 1", i + 1, j + 1),
                    });
                }
                arrows.push(Arrow::new(j + 1, i + 1));
            }
        }
        Self::new(n, arrows)
    }

    /// Orient each 2-cycle `(i, j)`, `i < j`, of an involution as `j → i`.
    pub fn from_involution(sigma: &Involution) -> Self {
        let arrows = sigma.two_cycles().map(|(i, j)| Arrow::new(j, i)).collect();
        OrientedLinkPattern::new(sigma.n(), arrows).expect("2-cycles are disjoint")
    }

    /// Canonical label such as `1>2,5>3`; free vertices are omitted.
    pub fn label(&self) -> String {
        self.arrows.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
    }
}

impl Ord for OrientedLinkPattern {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.n, self.arrows.len(), &self.arrows).cmp(&(other.n, other.arrows.len(), &other.arrows))
    }
}

impl PartialOrd for OrientedLinkPattern {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for OrientedLinkPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} {{{}}}", self.n, self.label())
    }
}

pub(crate) fn check_enumeration_guard(n: usize) -> Result<()> {
    if n > MAX_ENUMERATION_N {
        return Err(Error::SizeGuard { what: "n", value: n, max: MAX_ENUMERATION_N });
    }
    Ok(())
}

/// All oriented link patterns on `n ≤ 8` vertices, in canonical order.
pub fn enumerate(n: usize) -> Result<Vec<OrientedLinkPattern>> {
    check_enumeration_guard(n)?;
    let mut out = Vec::new();
    let mut used = vec![false; n + 1];
    let mut arrows = Vec::new();
    extend_patterns(n, 1, &mut used, &mut arrows, &mut out);
    out.sort();
    Ok(out)
}

fn extend_patterns(
    n: usize,
    v: usize,
    used: &mut [bool],
    arrows: &mut Vec<Arrow>,
    out: &mut Vec<OrientedLinkPattern>,
) {
    if v > n {
        let mut sorted = arrows.clone();
        sorted.sort();
        out.push(OrientedLinkPattern { n, arrows: sorted });
        return;
    }
    if used[v] {
        extend_patterns(n, v + 1, used, arrows, out);
        return;
    }
    // v stays free
    extend_patterns(n, v + 1, used, arrows, out);
    // v is matched with a later vertex w, in either orientation
    for w in v + 1..=n {
        if used[w] {
            continue;
        }
        used[v] = true;
        used[w] = true;
        for a in [Arrow::new(v, w), Arrow::new(w, v)] {
            arrows.push(a);
            extend_patterns(n, v + 1, used, arrows, out);
            arrows.pop();
        }
        used[v] = false;
        used[w] = false;
    }
}

/// Number of oriented link patterns on `n` vertices:
/// `sum_k n! / (k! (n - 2k)!)`.
pub fn count(n: usize) -> BigUint {
    let fact = |m: usize| (1..=m).fold(BigUint::one(), |acc, x| acc * x);
    let nf = fact(n);
    (0..=n / 2).map(|k| &nf / (fact(k) * fact(n - 2 * k))).sum()
}

/// An involution of `{1, …, n}` stored by its one-based images.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "CycleList", into = "CycleList")]
pub struct Involution {
    images: Vec<usize>,
}

/// JSON form `{"n": 5, "cycles": [[1, 2], [3, 5]]}`.
#[derive(Serialize, Deserialize)]
struct CycleList {
    n: usize,
    cycles: Vec<[usize; 2]>,
}

impl TryFrom<CycleList> for Involution {
    type Error = Error;
    fn try_from(c: CycleList) -> Result<Self> {
        Involution::from_cycles(c.n, &c.cycles.iter().map(|&[a, b]| (a, b)).collect::<Vec<_>>())
    }
}

impl From<Involution> for CycleList {
    fn from(s: Involution) -> Self {
        CycleList { n: s.n(), cycles: s.two_cycles().map(|(a, b)| [a, b]).collect() }
    }
}

impl Involution {
    pub fn identity(n: usize) -> Self {
        Involution { images: (1..=n).collect() }
    }

    /// From one-based images `sigma(1), …, sigma(n)`.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        for (i, &s) in images.iter().enumerate() {
            if s == 0 || s > n {
                return Err(Error::InvalidInvolution(format!("sigma({}) = {s} outside 1..={n}", i + 1)));
            }
            if images[s - 1] != i + 1 {
                return Err(Error::InvalidInvolution(format!(
                    "sigma(sigma({})) = {} != {}",
                    i + 1,
                    images[s - 1],
                    i + 1
                )));
            }
        }
        Ok(Involution { images })
    }

    pub fn from_cycles(n: usize, cycles: &[(usize, usize)]) -> Result<Self> {
        let mut images: Vec<usize> = (1..=n).collect();
        for &(a, b) in cycles {
            if a == 0 || b == 0 || a > n || b > n || a == b {
                return Err(Error::InvalidInvolution(format!("bad 2-cycle ({a}, {b}) for n = {n}")));
            }
            if images[a - 1] != a || images[b - 1] != b {
                return Err(Error::InvalidInvolution(format!("2-cycle ({a}, {b}) overlaps another")));
            }
            images[a - 1] = b;
            images[b - 1] = a;
        }
        Ok(Involution { images })
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    /// Pairs `(i, sigma(i))` with `i < sigma(i)`, increasing in `i`.
    pub fn two_cycles(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.images.iter().enumerate().map(|(i, &s)| (i + 1, s)).filter(|&(i, s)| i < s)
    }

    /// Every involution on `n` letters, ordered like their patterns.
    pub fn all(n: usize) -> Result<Vec<Involution>> {
        Ok(enumerate(n)?
            .into_iter()
            .filter(|p| p.arrows().iter().all(|a| a.source > a.target))
            .map(|p| {
                let cycles: Vec<_> = p.arrows().iter().map(|a| (a.target, a.source)).collect();
                Involution::from_cycles(n, &cycles).expect("pattern arrows are disjoint")
            })
            .collect())
    }
}

/// Enhanced oriented link pattern for a parabolic block structure
/// `(b_1, …, b_k)`: a multigraph on `{1, …, k}` (loops allowed) where block
/// `i` meets at most `b_i` arrow ends, a loop counting twice.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EnhancedOlp {
    blocks: Vec<usize>,
    /// `mult[i][j]` (zero-based) counts arrows `j+1 → i+1`.
    mult: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct EnhancedRepr {
    n: usize,
    blocks: Vec<usize>,
    arrows: Vec<CountedArrow>,
}

#[derive(Serialize, Deserialize)]
struct CountedArrow {
    source: usize,
    target: usize,
    count: usize,
}

impl EnhancedOlp {
    /// `mult[i][j]` counts arrows from block `j+1` to block `i+1`.
    pub fn new(blocks: Vec<usize>, mult: Vec<Vec<usize>>) -> Result<Self> {
        let k = blocks.len();
        if blocks.iter().any(|&b| b == 0) {
            return Err(Error::InvalidBlocks("block sizes must be positive".into()));
        }
        if mult.len() != k || mult.iter().any(|r| r.len() != k) {
            return Err(Error::mismatch("EnhancedOlp::new", format!("multiplicities must be {k}x{k}")));
        }
        let p = EnhancedOlp { blocks, mult };
        for i in 1..=k {
            let inc = p.incidence(i);
            if inc > p.blocks[i - 1] {
                return Err(Error::InvalidPattern {
                    vertex: i,
                    reason: format!("{inc} arrow ends exceed block size {}", p.blocks[i - 1]),
                });
            }
        }
        Ok(p)
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    pub fn k(&self) -> usize {
        self.blocks.len()
    }

    /// Number of arrows from block `j` to block `i` (one-based).
    pub fn multiplicity(&self, i: usize, j: usize) -> usize {
        self.mult[i - 1][j - 1]
    }

    /// Arrow ends at block `i` (one-based); a loop contributes two.
    pub fn incidence(&self, i: usize) -> usize {
        let r = i - 1;
        self.mult[r].iter().sum::<usize>() + self.mult.iter().map(|row| row[r]).sum::<usize>()
    }

    /// Free slots `b_i - incidence(i)`.
    pub fn free_slots(&self, i: usize) -> usize {
        self.blocks[i - 1] - self.incidence(i)
    }

    /// Distinct arrows with their multiplicities, canonically sorted.
    pub fn arrows(&self) -> Vec<(Arrow, usize)> {
        let mut out = Vec::new();
        for (i, row) in self.mult.iter().enumerate() {
            for (j, &c) in row.iter().enumerate() {
                if c > 0 {
                    out.push((Arrow::new(j + 1, i + 1), c));
                }
            }
        }
        out.sort();
        out
    }

    /// The ordinary pattern when every block has size one.
    pub fn to_pattern(&self) -> Option<OrientedLinkPattern> {
        if self.blocks.iter().any(|&b| b != 1) {
            return None;
        }
        let arrows = self.arrows().into_iter().map(|(a, _)| a).collect();
        OrientedLinkPattern::new(self.k(), arrows).ok()
    }
}

impl Serialize for EnhancedOlp {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        EnhancedRepr {
            n: self.k(),
            blocks: self.blocks.clone(),
            arrows: self
                .arrows()
                .into_iter()
                .map(|(a, count)| CountedArrow { source: a.source, target: a.target, count })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for EnhancedOlp {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = EnhancedRepr::deserialize(d)?;
        let k = repr.blocks.len();
        if repr.n != k {
            return Err(D::Error::custom(format!("n = {} but {} blocks", repr.n, k)));
        }
        let mut mult = vec![vec![0; k]; k];
        for a in repr.arrows {
            if a.source == 0 || a.target == 0 || a.source > k || a.target > k {
                return Err(D::Error::custom(format!("arrow {}>{} outside 1..={k}", a.source, a.target)));
            }
            mult[a.target - 1][a.source - 1] += a.count;
        }
        EnhancedOlp::new(repr.blocks, mult).map_err(D::Error::custom)
    }
}
