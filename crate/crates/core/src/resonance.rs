//! Resonant decompositions `S = S0 u S1` of a semigroup.
//!
//! A pair resonates when the parts cover the semigroup and close as
//! `S0*S0 in S0`, `S0*S1 in S1`, `S1*S0 in S1`, `S1*S1 in S0` — the
//! semigroup shadow of a Z2-graded algebra. Parts may overlap (a shared
//! zero element is the typical case).

use std::fmt;

use crate::cayley::CayleyTable;
use crate::error::{Error, Result};

/// A sorted, duplicate-free subset of the labels `1..=n`.
///
/// Possibly empty in general; resonant pairs and graded splits require
/// nonempty parts and check that themselves.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subset {
    n: usize,
    members: Vec<u8>,
}

impl Subset {
    /// Sorts and deduplicates; rejects out-of-range members.
    pub fn new(n: usize, members: &[usize]) -> Result<Self> {
        let mut sorted: Vec<u8> = members
            .iter()
            .map(|&v| {
                if v < 1 || v > n {
                    Err(Error::MemberOutOfRange { value: v, n })
                } else {
                    Ok(v as u8)
                }
            })
            .collect::<Result<_>>()?;
        sorted.sort_unstable();
        sorted.dedup();
        Ok(Subset { n, members: sorted })
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&(v as u8)).is_ok()
    }

    pub fn members(&self) -> Vec<usize> {
        self.members.iter().map(|&v| v as usize).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().map(|&v| v as usize)
    }

    /// Elementwise image under a relabeling, re-sorted.
    pub fn map(&self, f: impl Fn(usize) -> usize) -> Result<Subset> {
        let mapped: Vec<usize> = self.iter().map(f).collect();
        Subset::new(self.n, &mapped)
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.members.iter().map(u8::to_string).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// An ordered pair of subsets covering the semigroup, candidate for a
/// resonant decomposition. Overlap is permitted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ResonantPair {
    pub s0: Subset,
    pub s1: Subset,
}

impl ResonantPair {
    pub fn new(s0: Subset, s1: Subset) -> Result<Self> {
        if s0.ambient() != s1.ambient() {
            return Err(Error::OrderMismatch {
                left: s0.ambient(),
                right: s1.ambient(),
            });
        }
        if s0.is_empty() || s1.is_empty() {
            return Err(Error::EmptySubset);
        }
        Ok(ResonantPair { s0, s1 })
    }

    pub fn ambient(&self) -> usize {
        self.s0.ambient()
    }
}

/// All `C(n, k)` size-`k` subsets of `1..=n` in lexicographic order
/// (the one empty subset at `k = 0`, nothing at `k > n`).
pub fn subsets(n: usize, k: usize) -> Vec<Subset> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut current: Vec<usize> = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<Subset>) {
        if current.len() == k {
            out.push(Subset::new(n, current).expect("members validated"));
            return;
        }
        for v in start..=n {
            current.push(v);
            rec(n, k, v + 1, current, out);
            current.pop();
        }
    }
    rec(n, k, 1, &mut current, &mut out);
    out
}

/// True iff `s0 u s1 = {1..n}`.
pub fn fills_space(p: &ResonantPair) -> bool {
    (1..=p.ambient()).all(|v| p.s0.contains(v) || p.s1.contains(v))
}

/// True iff the pair covers the semigroup and the four products close:
/// `S0*S0 in S0`, `S0*S1 in S1`, `S1*S0 in S1`, `S1*S1 in S0`.
pub fn is_resonant(t: &CayleyTable, p: &ResonantPair) -> Result<bool> {
    if t.order() != p.ambient() {
        return Err(Error::OrderMismatch {
            left: t.order(),
            right: p.ambient(),
        });
    }
    if !fills_space(p) {
        return Ok(false);
    }
    let closed = |xs: &Subset, ys: &Subset, target: &Subset| {
        xs.iter()
            .all(|x| ys.iter().all(|y| target.contains(t.get(x, y))))
    };
    Ok(closed(&p.s0, &p.s0, &p.s0)
        && closed(&p.s0, &p.s1, &p.s1)
        && closed(&p.s1, &p.s0, &p.s1)
        && closed(&p.s1, &p.s1, &p.s0))
}

/// All resonant pairs with `|S0| = k0`, `|S1| = k1`, in lexicographic order.
/// Part sizes are restricted to `1..=n-1`: neither part may be the whole
/// semigroup, which is what the published census counts assume.
pub fn find_resonances(t: &CayleyTable, k0: usize, k1: usize) -> Result<Vec<ResonantPair>> {
    let n = t.order();
    if k0 < 1 || k0 > n.saturating_sub(1) || k1 < 1 || k1 > n.saturating_sub(1) {
        return Err(Error::SubsetSizeOutOfRange {
            k: if k0 < 1 || k0 > n.saturating_sub(1) {
                k0
            } else {
                k1
            },
            lo: 1,
            hi: n.saturating_sub(1),
        });
    }
    let mut out = Vec::new();
    for s0 in subsets(n, k0) {
        for s1 in subsets(n, k1) {
            let pair = ResonantPair::new(s0.clone(), s1)?;
            if is_resonant(t, &pair)? {
                out.push(pair);
            }
        }
    }
    Ok(out)
}

/// Every resonant pair of `t` over all part sizes in `1..=n-1`, ordered by
/// `(|S0|, |S1|)` and then lexicographically. Distinct as ordered set pairs
/// by construction.
pub fn find_all_resonances(t: &CayleyTable) -> Vec<ResonantPair> {
    let n = t.order();
    let mut out = Vec::new();
    for k0 in 1..n {
        for k1 in 1..n {
            out.extend(find_resonances(t, k0, k1).expect("sizes in range"));
        }
    }
    out
}
