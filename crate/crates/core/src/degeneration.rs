//! The degeneration order on oriented link patterns.
//!
//! `leq_deg(m, m2)` holds when the orbit labelled `m2` lies in the closure
//! of the orbit labelled `m`. It is decided by comparing the counting
//! statistics `p_k` and `q_{k,l}`; covers come from a transitive reduction,
//! and the local move table is validated against them.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::olp::{check_enumeration_guard, enumerate, validate, Arrow, OrientedLinkPattern};
use crate::quiver::orbit_dimension;

/// Largest `n` accepted by [`covers`], [`poset`] and [`move_closure`].
pub const MAX_COVER_N: usize = 6;

/// `p[k-1] = p_k`, `q[k-1][l-1] = q_{k,l}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InvariantProfile {
    n: usize,
    p: Vec<usize>,
    q: Vec<Vec<usize>>,
}

impl InvariantProfile {
    pub fn n(&self) -> usize {
        self.n
    }

    /// One-based `p_k`.
    pub fn p(&self, k: usize) -> usize {
        self.p[k - 1]
    }

    /// One-based `q_{k,l}`.
    pub fn q(&self, k: usize, l: usize) -> usize {
        self.q[k - 1][l - 1]
    }

    pub fn p_values(&self) -> &[usize] {
        &self.p
    }

    pub fn q_values(&self) -> &[Vec<usize>] {
        &self.q
    }

    /// Componentwise comparison of both statistics.
    pub fn is_below(&self, other: &InvariantProfile) -> bool {
        self.n == other.n
            && self.p.iter().zip(&other.p).all(|(a, b)| a <= b)
            && self.q.iter().flatten().zip(other.q.iter().flatten()).all(|(a, b)| a <= b)
    }
}

/// `p_k` counts arrows with target `≤ k` plus free vertices `≤ k`;
/// `q_{k,l} = p_l` plus the arrows with target `≤ k` and source `≤ l`.
pub fn profile(pattern: &OrientedLinkPattern) -> InvariantProfile {
    let n = pattern.n();
    let p: Vec<usize> = (1..=n)
        .map(|k| {
            pattern.arrows().iter().filter(|a| a.target <= k).count()
                + pattern.free_vertices().filter(|&v| v <= k).count()
        })
        .collect();
    let q = (1..=n)
        .map(|k| {
            (1..=n)
                .map(|l| {
                    p[l - 1]
                        + pattern.arrows().iter().filter(|a| a.target <= k && a.source <= l).count()
                })
                .collect()
        })
        .collect();
    InvariantProfile { n, p, q }
}

fn same_size(op: &'static str, a: &OrientedLinkPattern, b: &OrientedLinkPattern) -> Result<()> {
    if a.n() != b.n() {
        return Err(Error::mismatch(op, format!("{} vs {} vertices", a.n(), b.n())));
    }
    Ok(())
}

/// Whether the orbit of `lower` lies in the closure of the orbit of `upper`.
pub fn leq_deg(upper: &OrientedLinkPattern, lower: &OrientedLinkPattern) -> Result<bool> {
    same_size("leq_deg", upper, lower)?;
    Ok(profile(upper).is_below(&profile(lower)))
}

/// Every pattern in the orbit closure of `p`, `p` included, in canonical order.
pub fn closure_set(p: &OrientedLinkPattern) -> Result<Vec<OrientedLinkPattern>> {
    let top = profile(p);
    Ok(enumerate(p.n())?.into_iter().filter(|q| top.is_below(&profile(q))).collect())
}

/// The Hasse diagram of the degeneration order on all patterns of size `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegenerationPoset {
    n: usize,
    patterns: Vec<OrientedLinkPattern>,
    /// Index pairs `(upper, lower)` into `patterns`.
    covers: Vec<(usize, usize)>,
}

fn check_cover_guard(n: usize) -> Result<()> {
    if n > MAX_COVER_N {
        return Err(Error::SizeGuard { what: "n", value: n, max: MAX_COVER_N });
    }
    Ok(())
}

pub fn poset(n: usize) -> Result<DegenerationPoset> {
    check_cover_guard(n)?;
    let patterns = enumerate(n)?;
    let profiles: Vec<_> = patterns.iter().map(profile).collect();
    let size = patterns.len();
    let below: Vec<Vec<bool>> = (0..size)
        .map(|a| (0..size).map(|b| a != b && profiles[a].is_below(&profiles[b])).collect())
        .collect();
    let mut covers = Vec::new();
    for a in 0..size {
        for b in 0..size {
            if below[a][b] && !(0..size).any(|r| below[a][r] && below[r][b]) {
                covers.push((a, b));
            }
        }
    }
    Ok(DegenerationPoset { n, patterns, covers })
}

/// Covering pairs `(upper, lower)` of the degeneration order, `n ≤ 6`.
pub fn covers(n: usize) -> Result<Vec<(OrientedLinkPattern, OrientedLinkPattern)>> {
    Ok(poset(n)?.cover_pairs().map(|(a, b)| (a.clone(), b.clone())).collect())
}

impl DegenerationPoset {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn patterns(&self) -> &[OrientedLinkPattern] {
        &self.patterns
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn cover_pairs(&self) -> impl Iterator<Item = (&OrientedLinkPattern, &OrientedLinkPattern)> {
        self.covers.iter().map(|&(a, b)| (&self.patterns[a], &self.patterns[b]))
    }

    /// Graphviz rendering; edges run from the dominating orbit to the
    /// degenerate one, and the pattern without arrows is drawn as `∅`.
    pub fn to_dot(&self) -> String {
        let mut out = format!("digraph degeneration_n{} {{\n  rankdir=TB;\n", self.n);
        for (k, p) in self.patterns.iter().enumerate() {
            let label = if p.arrows().is_empty() { "∅".to_string() } else { p.label() };
            writeln!(out, "  p{k} [label=\"{label}\"];").unwrap();
        }
        for (a, b) in &self.covers {
            writeln!(out, "  p{a} -> p{b};").unwrap();
        }
        out.push_str("}\n");
        out
    }

    /// `dim O(upper) - dim O(lower)` for every cover, in cover order.
    pub fn cover_codimensions(&self) -> Vec<usize> {
        let dims: Vec<usize> = self.patterns.iter().map(orbit_dimension).collect();
        self.covers.iter().map(|&(a, b)| dims[a].saturating_sub(dims[b])).collect()
    }
}

/// One local move on `vertices` abstract ordered points.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Move {
    vertices: usize,
    before: Vec<Arrow>,
    after: Vec<Arrow>,
}

impl Move {
    pub fn new(vertices: usize, before: Vec<Arrow>, after: Vec<Arrow>) -> Result<Self> {
        for side in [&before, &after] {
            validate(vertices, side)?;
        }
        let mut m = Move { vertices, before, after };
        m.before.sort();
        m.after.sort();
        Ok(m)
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn before(&self) -> OrientedLinkPattern {
        OrientedLinkPattern::new(self.vertices, self.before.clone()).expect("validated")
    }

    pub fn after(&self) -> OrientedLinkPattern {
        OrientedLinkPattern::new(self.vertices, self.after.clone()).expect("validated")
    }

    /// Apply the move on the concrete vertices `place` (increasing, one per
    /// abstract vertex) if `p` matches the fragment exactly there.
    fn instantiate(&self, p: &OrientedLinkPattern, place: &[usize]) -> Option<OrientedLinkPattern> {
        let lift = |a: &Arrow| Arrow::new(place[a.source - 1], place[a.target - 1]);
        let touches = |a: &Arrow| place.contains(&a.source) || place.contains(&a.target);
        let mut local: Vec<Arrow> = p.arrows().iter().filter(|a| touches(a)).copied().collect();
        local.sort();
        let mut expected: Vec<Arrow> = self.before.iter().map(lift).collect();
        expected.sort();
        if local != expected {
            return None;
        }
        let arrows = p
            .arrows()
            .iter()
            .filter(|a| !touches(a))
            .copied()
            .chain(self.after.iter().map(lift))
            .collect();
        OrientedLinkPattern::new(p.n(), arrows).ok()
    }
}

/// The minimal-degeneration moves on two, three and four vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveTable {
    moves: Vec<Move>,
}

const MOVES_SOURCE: &str = include_str!("../data/moves.txt");

fn parse_fragment(text: &str, vertices: usize, line: usize) -> Result<Vec<Arrow>> {
    let text = text.trim();
    if text == "." {
        return Ok(Vec::new());
    }
    let vertex = |s: &str| -> Result<usize> {
        let mut chars = s.trim().chars();
        match (chars.next(), chars.next()) {
            (Some(c @ 'a'..='z'), None) if ((c as u8 - b'a') as usize) < vertices => Ok((c as u8 - b'a') as usize + 1),
            _ => Err(Error::Parse(format!("move table line {line}: bad vertex {s:?}"))),
        }
    };
    text.split(',')
        .map(|arrow| {
            let (s, t) = arrow
                .split_once('>')
                .ok_or_else(|| Error::Parse(format!("move table line {line}: bad arrow {arrow:?}")))?;
            Ok(Arrow::new(vertex(s)?, vertex(t)?))
        })
        .collect()
}

impl MoveTable {
    /// Parse the `[k]` sections and `before -> after` lines of a move file.
    pub fn parse(source: &str) -> Result<Self> {
        let mut vertices = None;
        let mut moves = Vec::new();
        for (k, raw) in source.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            if let Some(size) = line.strip_prefix('[').and_then(|s| s.strip_suffix(']')) {
                vertices = Some(size.parse().map_err(|_| Error::Parse(format!("move table line {}: {line}", k + 1)))?);
                continue;
            }
            let v = vertices.ok_or_else(|| Error::Parse(format!("move table line {}: no section", k + 1)))?;
            let (before, after) = line
                .split_once("->")
                .ok_or_else(|| Error::Parse(format!("move table line {}: missing ->", k + 1)))?;
            moves.push(Move::new(v, parse_fragment(before, v, k + 1)?, parse_fragment(after, v, k + 1)?)?);
        }
        Ok(MoveTable { moves })
    }

    /// The bundled table.
    pub fn standard() -> &'static MoveTable {
        static TABLE: OnceLock<MoveTable> = OnceLock::new();
        TABLE.get_or_init(|| MoveTable::parse(MOVES_SOURCE).expect("bundled move table parses"))
    }

    pub fn moves(&self) -> &[Move] {
        &self.moves
    }

    /// Every pattern reachable from `p` by one move, in canonical order.
    pub fn apply(&self, p: &OrientedLinkPattern) -> Vec<OrientedLinkPattern> {
        let mut out = BTreeSet::new();
        let mut by_size: HashMap<usize, Vec<Vec<usize>>> = HashMap::new();
        for m in &self.moves {
            let places = by_size.entry(m.vertices).or_insert_with(|| subsets(p.n(), m.vertices));
            for place in places.iter() {
                if let Some(q) = m.instantiate(p, place) {
                    out.insert(q);
                }
            }
        }
        out.into_iter().collect()
    }

    /// Reflexive-transitive closure of [`MoveTable::apply`] from `p`.
    pub fn closure(&self, p: &OrientedLinkPattern) -> Result<Vec<OrientedLinkPattern>> {
        check_enumeration_guard(p.n())?;
        check_cover_guard(p.n())?;
        let mut seen = BTreeSet::from([p.clone()]);
        let mut frontier = vec![p.clone()];
        while let Some(q) = frontier.pop() {
            for r in self.apply(&q) {
                if seen.insert(r.clone()) {
                    frontier.push(r);
                }
            }
        }
        Ok(seen.into_iter().collect())
    }
}

/// Increasing `k`-subsets of `1..=n`.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..=n {
            cur.push(v);
            go(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n, k, &mut Vec::new(), &mut out);
    out
}

/// One move step from `p` using the bundled table.
pub fn apply_moves(p: &OrientedLinkPattern) -> Vec<OrientedLinkPattern> {
    MoveTable::standard().apply(p)
}

/// All patterns reachable from `p` by repeated moves, `n ≤ 6`.
pub fn move_closure(p: &OrientedLinkPattern) -> Result<Vec<OrientedLinkPattern>> {
    MoveTable::standard().closure(p)
}
