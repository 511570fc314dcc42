//! Permutations and (anti-)isomorphism search on multiplication tables.
//!
//! A relabeling `s` acts on a table by `b[a][b] = s(t[s^-1(a)][s^-1(b)])`;
//! anti-isomorphisms compose the action with transposition. The canonical
//! form of a table is the lexicographically minimal image under the action,
//! which makes equivalence classes comparable by plain equality.

use std::fmt;

use crate::cayley::CayleyTable;
use crate::error::{Error, Result};

/// Largest degree for factorial searches (`n! = 40320` at the cap).
pub const MAX_PERMUTATION_DEGREE: usize = 8;

/// A bijection on labels `1..=n`, stored as its image array
/// `image[a-1] = s(a)` and printed in `(a1 a2 ... an)` notation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    image: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (1..=n as u8).collect(),
        }
    }

    pub fn from_image(image: &[usize]) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &v in image {
            if v < 1 || v > n || seen[v - 1] {
                return Err(Error::NotABijection {
                    n,
                    image: image.to_vec(),
                });
            }
            seen[v - 1] = true;
        }
        Ok(Permutation {
            image: image.iter().map(|&v| v as u8).collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.image.len()
    }

    /// `s(a)`, 1-based.
    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.image[a - 1] as usize
    }

    pub fn image(&self) -> Vec<usize> {
        self.image.iter().map(|&v| v as usize).collect()
    }

    pub fn inverse(&self) -> Permutation {
        let n = self.n();
        let mut image = vec![0u8; n];
        for a in 1..=n {
            image[self.apply(a) - 1] = a as u8;
        }
        Permutation { image }
    }

    pub fn is_identity(&self) -> bool {
        self.image
            .iter()
            .enumerate()
            .all(|(i, &v)| v as usize == i + 1)
    }

    /// `self` after `other`: `(self * other)(a) = self(other(a))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.n(), other.n());
        let image = (1..=self.n())
            .map(|a| self.apply(other.apply(a)) as u8)
            .collect();
        Permutation { image }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.image.iter().map(u8::to_string).collect();
        write!(f, "({})", parts.join(" "))
    }
}

/// All `n!` permutations in lexicographic order of their image arrays.
///
/// Position `i` in this list is the permutation `P#i` of the worked
/// examples, counting from zero.
pub fn all_permutations(n: usize) -> Result<Vec<Permutation>> {
    if !(1..=MAX_PERMUTATION_DEGREE).contains(&n) {
        return Err(Error::DegreeOutOfRange {
            n,
            max: MAX_PERMUTATION_DEGREE,
        });
    }
    let mut out = Vec::new();
    let mut image = Vec::with_capacity(n);
    let mut used = vec![false; n + 1];
    fn rec(n: usize, image: &mut Vec<u8>, used: &mut [bool], out: &mut Vec<Permutation>) {
        if image.len() == n {
            out.push(Permutation {
                image: image.clone(),
            });
            return;
        }
        for v in 1..=n {
            if !used[v] {
                used[v] = true;
                image.push(v as u8);
                rec(n, image, used, out);
                image.pop();
                used[v] = false;
            }
        }
    }
    rec(n, &mut image, &mut used, &mut out);
    Ok(out)
}

/// Applies the relabeling `s` to `t`: result `b` with
/// `b[a][b] = s(t[s^-1(a)][s^-1(b)])`.
pub fn permute_table(t: &CayleyTable, s: &Permutation) -> Result<CayleyTable> {
    let n = t.order();
    if s.n() != n {
        return Err(Error::OrderMismatch {
            left: n,
            right: s.n(),
        });
    }
    let inv = s.inverse();
    CayleyTable::from_fn(n, |a, b| s.apply(t.get(inv.apply(a), inv.apply(b))))
}

/// The lexicographically first `s` with `permute_table(a, s) = b`, if any.
pub fn find_isomorphism(a: &CayleyTable, b: &CayleyTable) -> Option<Permutation> {
    search_isomorphisms(a, b, true).into_iter().next()
}

/// Every `s` with `permute_table(a, s) = b`, in lexicographic order.
pub fn find_isomorphisms(a: &CayleyTable, b: &CayleyTable) -> Vec<Permutation> {
    search_isomorphisms(a, b, false)
}

/// The lexicographically first `s` carrying `transpose(a)` onto `b`, i.e. an
/// anti-isomorphism witness `b[x][y] = s(a[s^-1(y)][s^-1(x)])`.
pub fn find_anti_isomorphism(a: &CayleyTable, b: &CayleyTable) -> Option<Permutation> {
    find_isomorphism(&a.transpose(), b)
}

pub fn find_anti_isomorphisms(a: &CayleyTable, b: &CayleyTable) -> Vec<Permutation> {
    find_isomorphisms(&a.transpose(), b)
}

/// Backtracking over partial images with prefix pruning: as soon as every
/// argument of a source cell is assigned, its image cell is forced, so a
/// mismatch rejects the whole branch. Assigning candidate images in
/// increasing order yields witnesses lexicographically first.
fn search_isomorphisms(a: &CayleyTable, b: &CayleyTable, first_only: bool) -> Vec<Permutation> {
    let n = a.order();
    if n != b.order() {
        return vec![];
    }
    let mut image = vec![0u8; n + 1]; // image[x] = s(x), 0 = unassigned
    let mut used = vec![false; n + 1];
    let mut found = Vec::new();

    fn consistent(a: &CayleyTable, b: &CayleyTable, image: &[u8], k: usize) -> bool {
        // check all source cells whose row, column and value are assigned,
        // touching the newly assigned point k
        let n = a.order();
        for x in 1..=n {
            if image[x] == 0 {
                continue;
            }
            for y in 1..=n {
                if image[y] == 0 {
                    continue;
                }
                if x != k && y != k && a.get(x, y) != k {
                    continue;
                }
                let v = a.get(x, y);
                if image[v] == 0 {
                    continue;
                }
                if b.get(image[x] as usize, image[y] as usize) != image[v] as usize {
                    return false;
                }
            }
        }
        true
    }

    fn rec(
        a: &CayleyTable,
        b: &CayleyTable,
        image: &mut Vec<u8>,
        used: &mut Vec<bool>,
        depth: usize,
        first_only: bool,
        found: &mut Vec<Permutation>,
    ) -> bool {
        let n = a.order();
        if depth > n {
            let img: Vec<usize> = (1..=n).map(|x| image[x] as usize).collect();
            found.push(Permutation::from_image(&img).expect("assignment is a bijection"));
            return first_only;
        }
        for v in 1..=n {
            if used[v] {
                continue;
            }
            image[depth] = v as u8;
            used[v] = true;
            if consistent(a, b, image, depth)
                && rec(a, b, image, used, depth + 1, first_only, found)
            {
                return true;
            }
            image[depth] = 0;
            used[v] = false;
        }
        false
    }

    rec(a, b, &mut image, &mut used, 1, first_only, &mut found);
    found
}

/// The lexicographically minimal table over all relabelings of `t`, and
/// additionally over relabelings of its transpose when `include_anti` is
/// set. Constant on equivalence classes; a fixpoint of itself.
pub fn canonical_form(t: &CayleyTable, include_anti: bool) -> Result<CayleyTable> {
    let n = t.order();
    let perms = all_permutations(n)?;
    let mut best: Option<CayleyTable> = None;
    let mut consider = |cand: CayleyTable| match &best {
        Some(b) if *b <= cand => {}
        _ => best = Some(cand),
    };
    let tt = t.transpose();
    for s in &perms {
        consider(permute_table(t, s).expect("degree matches"));
        if include_anti {
            consider(permute_table(&tt, s).expect("degree matches"));
        }
    }
    Ok(best.expect("n >= 1 so at least one candidate"))
}
