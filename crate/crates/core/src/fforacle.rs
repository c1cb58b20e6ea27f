//! Exhaustive orbit census over `F_2` and `F_3`.
//!
//! Every 2-nilpotent `n × n` matrix over `F_q` is visited, orbits of the
//! upper-triangular group are found by closing under a generating set
//! (one diagonal generator per coordinate and the transvections
//! `I + E_ij`, `i < j`), and each orbit is labelled by the finite-field
//! classifier. The count must equal the number of oriented link patterns.

use std::collections::{BTreeMap, HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::classify::{classify, profile_of, IntersectionProfile};
use crate::error::{Error, Result};
use crate::linalg::{Field, Fp, Matrix, Rational};
use crate::olp::{enumerate, OrientedLinkPattern};

pub const MAX_CENSUS_N: usize = 4;

/// One orbit: its smallest member in base-`q` order, size and label.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitRecord {
    pub representative: Matrix,
    pub size: u64,
    pub pattern: OrientedLinkPattern,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitCensus {
    pub n: usize,
    pub q: u32,
    pub orbit_count: usize,
    /// Number of `A` over `F_q` with `A² = 0`.
    pub nilpotent_count: u64,
    /// `(q-1)^n q^{n(n-1)/2}`.
    pub group_order: u64,
    /// Sorted by pattern.
    pub orbits: Vec<OrbitRecord>,
}

fn check_guard(n: usize, q: u32) -> Result<()> {
    if n > MAX_CENSUS_N {
        return Err(Error::SizeGuard { what: "n", value: n, max: MAX_CENSUS_N });
    }
    if q != 2 && q != 3 {
        return Err(Error::UnsupportedField(q));
    }
    Ok(())
}

/// Dense `n × n` matrices over `F_q` with entries `0..q`, row-major.
#[derive(Clone, Copy)]
struct Codec {
    n: usize,
    q: u64,
}

impl Codec {
    fn encode(&self, m: &[u8]) -> u64 {
        m.iter().rev().fold(0, |acc, &x| acc * self.q + u64::from(x))
    }

    fn decode(&self, mut code: u64) -> Vec<u8> {
        (0..self.n * self.n)
            .map(|_| {
                let d = (code % self.q) as u8;
                code /= self.q;
                d
            })
            .collect()
    }

    fn mul(&self, a: &[u8], b: &[u8]) -> Vec<u8> {
        let n = self.n;
        let mut out = vec![0u8; n * n];
        for i in 0..n {
            for j in 0..n {
                let s: u64 = (0..n).map(|k| u64::from(a[i * n + k]) * u64::from(b[k * n + j])).sum();
                out[i * n + j] = (s % self.q) as u8;
            }
        }
        out
    }

    fn to_field<const Q: u32>(&self, m: &[u8]) -> Matrix<Fp<Q>> {
        Matrix::from_fn(self.n, self.n, |i, j| Fp::new(u32::from(m[i * self.n + j])))
    }

    fn to_rational(&self, m: &[u8]) -> Matrix {
        Matrix::from_fn(self.n, self.n, |i, j| Rational::from_i64(i64::from(m[i * self.n + j])))
    }
}

/// Generator pairs `(g, g⁻¹)` of the upper-triangular group over `F_q`.
fn generators(c: Codec) -> Vec<(Vec<u8>, Vec<u8>)> {
    let n = c.n;
    let q = c.q as u8;
    let identity: Vec<u8> = (0..n * n).map(|k| u8::from(k / n == k % n)).collect();
    let mut out = Vec::new();
    if q == 3 {
        // 2 generates F_3^* and is its own inverse
        for i in 0..n {
            let mut g = identity.clone();
            g[i * n + i] = 2;
            out.push((g.clone(), g));
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            let mut g = identity.clone();
            let mut g_inv = identity.clone();
            g[i * n + j] = 1;
            g_inv[i * n + j] = q - 1;
            out.push((g, g_inv));
        }
    }
    out
}

struct RawOrbit {
    members: Vec<u64>,
}

fn orbits(c: Codec) -> (Vec<RawOrbit>, u64) {
    let cells = c.n * c.n;
    let total = c.q.pow(cells as u32);
    let gens = generators(c);
    let mut seen: HashSet<u64> = HashSet::new();
    let mut out = Vec::new();
    let mut nilpotent = 0;
    for code in 0..total {
        let m = c.decode(code);
        if c.mul(&m, &m).iter().any(|&x| x != 0) {
            continue;
        }
        nilpotent += 1;
        if seen.contains(&code) {
            continue;
        }
        // codes are visited in increasing order, so `code` is the orbit minimum
        seen.insert(code);
        let mut members = vec![code];
        let mut k = 0;
        while k < members.len() {
            let a = c.decode(members[k]);
            for (g, g_inv) in &gens {
                let next = c.encode(&c.mul(&c.mul(g, &a), g_inv));
                if seen.insert(next) {
                    members.push(next);
                }
            }
            k += 1;
        }
        out.push(RawOrbit { members });
    }
    (out, nilpotent)
}

fn census_in<const Q: u32>(n: usize) -> Result<OrbitCensus> {
    let c = Codec { n, q: u64::from(Q) };
    let (raw, nilpotent_count) = orbits(c);
    let group_order = (u64::from(Q) - 1).pow(n as u32) * u64::from(Q).pow((n * n.saturating_sub(1) / 2) as u32);
    let mut by_pattern: BTreeMap<OrientedLinkPattern, OrbitRecord> = BTreeMap::new();
    for orbit in &raw {
        let rep = c.decode(orbit.members[0]);
        let pattern = classify(&c.to_field::<Q>(&rep))?;
        let record = OrbitRecord { representative: c.to_rational(&rep), size: orbit.members.len() as u64, pattern: pattern.clone() };
        if let Some(prev) = by_pattern.insert(pattern.clone(), record) {
            return Err(Error::ClassificationCollision(format!(
                "orbits of {:?} and {:?} both classify as {pattern}",
                prev.representative.entries().map(|x| x.to_string()).collect::<Vec<_>>(),
                c.to_rational(&rep).entries().map(|x| x.to_string()).collect::<Vec<_>>(),
            )));
        }
    }
    let total: u64 = by_pattern.values().map(|r| r.size).sum();
    if total != nilpotent_count {
        return Err(Error::Internal(format!("orbit sizes sum to {total}, expected {nilpotent_count}")));
    }
    if let Some(r) = by_pattern.values().find(|r| group_order % r.size != 0) {
        return Err(Error::Internal(format!("orbit size {} does not divide {group_order}", r.size)));
    }
    let expected = enumerate(n)?;
    if by_pattern.len() != expected.len() || !expected.iter().all(|p| by_pattern.contains_key(p)) {
        return Err(Error::Internal(format!(
            "{} orbits found, {} patterns expected",
            by_pattern.len(),
            expected.len()
        )));
    }
    Ok(OrbitCensus {
        n,
        q: Q,
        orbit_count: by_pattern.len(),
        nilpotent_count,
        group_order,
        orbits: by_pattern.into_values().collect(),
    })
}

/// Orbit census for `n ≤ 4`, `q ∈ {2, 3}`.
pub fn census(n: usize, q: u32) -> Result<OrbitCensus> {
    check_guard(n, q)?;
    match q {
        2 => census_in::<2>(n),
        _ => census_in::<3>(n),
    }
}

/// Result of checking the intersection profile on every orbit member.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvarianceReport {
    pub n: usize,
    pub q: u32,
    pub orbit_count: usize,
    pub matrices_checked: u64,
    pub violations: Vec<String>,
}

fn invariance_in<const Q: u32>(n: usize) -> Result<InvarianceReport> {
    let c = Codec { n, q: u64::from(Q) };
    let (raw, _) = orbits(c);
    let mut violations = Vec::new();
    let mut owners: HashMap<IntersectionProfile, usize> = HashMap::new();
    let mut checked = 0;
    for (k, orbit) in raw.iter().enumerate() {
        let reference = profile_of(&c.to_field::<Q>(&c.decode(orbit.members[0])))?;
        for &code in &orbit.members[1..] {
            checked += 1;
            if profile_of(&c.to_field::<Q>(&c.decode(code)))? != reference {
                violations.push(format!("orbit {k}: member {code} has a different profile"));
            }
        }
        checked += 1;
        if let Some(other) = owners.insert(reference, k) {
            violations.push(format!("orbits {other} and {k} share a profile"));
        }
    }
    Ok(InvarianceReport { n, q: Q, orbit_count: raw.len(), matrices_checked: checked, violations })
}

/// Checks that the profile is constant on orbits and separates them.
pub fn invariance_check(n: usize, q: u32) -> Result<InvarianceReport> {
    check_guard(n, q)?;
    match q {
        2 => invariance_in::<2>(n),
        _ => invariance_in::<3>(n),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::olp::count;

    #[test]
    fn census_counts() {
        for (n, expected) in [(1, 1), (2, 3), (3, 7)] {
            let c = census(n, 2).unwrap();
            assert_eq!(c.orbit_count, expected);
            assert_eq!(count(n), expected.into());
        }
        assert_eq!(census(2, 3).unwrap().orbit_count, 3);
    }

    #[test]
    fn census_n2_details() {
        let c = census(2, 2).unwrap();
        // over F_2: zero, E12, and the orbit {E21, all-ones}
        assert_eq!(c.nilpotent_count, 4);
        assert_eq!(c.group_order, 2);
        let sizes: Vec<u64> = c.orbits.iter().map(|o| o.size).collect();
        assert_eq!(sizes.iter().sum::<u64>(), 4);
        assert_eq!(c.orbits[0].pattern, OrientedLinkPattern::empty(2));
    }

    #[test]
    fn guards() {
        assert!(matches!(census(5, 2), Err(Error::SizeGuard { .. })));
        assert!(matches!(census(2, 5), Err(Error::UnsupportedField(5))));
        assert!(matches!(invariance_check(2, 4), Err(Error::UnsupportedField(4))));
    }

    #[test]
    fn invariance_small() {
        for (n, q) in [(2, 2), (3, 2), (2, 3)] {
            let r = invariance_check(n, q).unwrap();
            assert!(r.violations.is_empty(), "{:?}", r.violations);
        }
    }

    #[test]
    fn json_shape() {
        let text = serde_json::to_string(&census(2, 2).unwrap()).unwrap();
        assert!(text.contains(r#""orbit_count":3"#));
        assert!(text.contains(r#""representative""#));
    }
}
