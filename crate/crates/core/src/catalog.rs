//! Exhaustive catalogs of non-equivalent semigroups of a given order.
//!
//! Tables are enumerated by a depth-first, cell-by-cell fill in row-major
//! order. Two prunings keep the search tractable:
//!
//! * incremental associativity — each time a cell is set, every product
//!   triple whose four lookups just became determined is checked, so a
//!   contradiction is found at the earliest possible cell;
//! * orderly generation — for every relabeling (and transposed relabeling,
//!   when anti-isomorphisms are quotiented) a comparator lazily compares the
//!   relabeled table against the original in row-major order. The moment a
//!   relabeled image is decided lexicographically smaller, the whole subtree
//!   is abandoned; a leaf is reached only by tables equal to their canonical
//!   form, so each equivalence class is emitted exactly once.
//!
//! Comparators sleep in buckets keyed by the cell they need next, so a fill
//! touches only the comparators that can actually make progress on it.

use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;
use std::sync::Arc;

use rayon::prelude::*;

use crate::cayley::CayleyTable;
use crate::error::{Error, Result};
use crate::iso::{
    all_permutations, canonical_form, find_anti_isomorphism, find_isomorphism, Permutation,
};

/// Largest order the catalog enumerator accepts.
pub const MAX_ENUM_ORDER: usize = 6;

/// Which relabelings identify two tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Equivalence {
    IsoOnly,
    IsoAndAnti,
}

impl Equivalence {
    pub fn as_str(&self) -> &'static str {
        match self {
            Equivalence::IsoOnly => "iso",
            Equivalence::IsoAndAnti => "iso-anti",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "iso" => Some(Equivalence::IsoOnly),
            "iso-anti" => Some(Equivalence::IsoAndAnti),
            _ => None,
        }
    }
}

/// A list of pairwise non-equivalent semigroup tables, each equal to its own
/// canonical form, with ids assigned in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Catalog {
    order: usize,
    equivalence: Equivalence,
    tables: Vec<CayleyTable>,
}

/// A catalog hit: the entry id plus a witness relabeling carrying the
/// catalog table onto the queried one. `anti` marks witnesses that go
/// through the transpose.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LookupMatch {
    pub id: u32,
    pub witness: Permutation,
    pub anti: bool,
}

/// Enumerates all non-equivalent semigroups of the given order.
pub fn enumerate(order: usize, equivalence: Equivalence) -> Result<Catalog> {
    if !(1..=MAX_ENUM_ORDER).contains(&order) {
        return Err(Error::EnumerationOrderOutOfRange {
            order,
            max: MAX_ENUM_ORDER,
        });
    }
    let mut tables = if order == 1 {
        vec![CayleyTable::from_rows(&[vec![1]]).expect("valid")]
    } else {
        let shared = Arc::new(Comparators::build(order, equivalence));
        if order >= 4 {
            // split the search at the end of the first row and farm the
            // subtrees out; results are merged and sorted, so the outcome
            // does not depend on the schedule
            let prefixes = {
                let mut e = Enumerator::new(order, Arc::clone(&shared));
                e.collect_prefixes(order)
            };
            prefixes
                .par_iter()
                .map_init(
                    || Enumerator::new(order, Arc::clone(&shared)),
                    |e, prefix| e.run_prefix(prefix),
                )
                .reduce(Vec::new, |mut acc, mut chunk| {
                    acc.append(&mut chunk);
                    acc
                })
        } else {
            let mut e = Enumerator::new(order, shared);
            e.run_prefix(&[])
        }
    };
    tables.sort_unstable();
    for (i, t) in tables.iter_mut().enumerate() {
        t.id = Some(i as u32 + 1);
    }
    Ok(Catalog {
        order,
        equivalence,
        tables,
    })
}

impl Catalog {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn equivalence(&self) -> Equivalence {
        self.equivalence
    }

    pub fn len(&self) -> usize {
        self.tables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tables.is_empty()
    }

    pub fn tables(&self) -> &[CayleyTable] {
        &self.tables
    }

    pub fn iter(&self) -> impl Iterator<Item = &CayleyTable> {
        self.tables.iter()
    }

    pub fn get_by_id(&self, id: u32) -> Result<&CayleyTable> {
        self.tables
            .iter()
            .find(|t| t.id == Some(id))
            .ok_or(Error::UnknownId { id })
    }

    /// The subcatalog of entries satisfying `keep`, original ids preserved.
    pub fn subset(&self, keep: impl Fn(&CayleyTable) -> bool) -> Catalog {
        Catalog {
            order: self.order,
            equivalence: self.equivalence,
            tables: self.tables.iter().filter(|t| keep(t)).cloned().collect(),
        }
    }

    /// The subcatalog of commutative tables, original ids preserved.
    pub fn filter_commutative(&self) -> Catalog {
        self.subset(CayleyTable::is_commutative)
    }

    /// Finds the unique entry equivalent to `t` together with a witness.
    ///
    /// Complete catalogs always hit for associative input of the right
    /// order; filtered subcatalogs may return `None`.
    pub fn lookup(&self, t: &CayleyTable) -> Result<Option<LookupMatch>> {
        if t.order() != self.order {
            return Err(Error::OrderMismatch {
                left: self.order,
                right: t.order(),
            });
        }
        if !t.is_associative() {
            return Err(Error::NotAssociative);
        }
        let include_anti = self.equivalence == Equivalence::IsoAndAnti;
        let canon = canonical_form(t, include_anti)?;
        let Some(entry) = self.tables.iter().find(|e| **e == canon) else {
            return Ok(None);
        };
        let id = entry.id.expect("catalog entries carry ids");
        if let Some(witness) = find_isomorphism(entry, t) {
            return Ok(Some(LookupMatch {
                id,
                witness,
                anti: false,
            }));
        }
        let witness =
            find_anti_isomorphism(entry, t).expect("canonical forms agree, so a witness exists");
        Ok(Some(LookupMatch {
            id,
            witness,
            anti: true,
        }))
    }

    /// Writes the catalog text format.
    pub fn write_to(&self, mut w: impl Write) -> std::io::Result<()> {
        writeln!(w, "semigroup-catalog v1")?;
        writeln!(
            w,
            "order {} count {} equivalence {}",
            self.order,
            self.tables.len(),
            self.equivalence.as_str()
        )?;
        for t in &self.tables {
            writeln!(w, "id {}", t.id.expect("catalog entries carry ids"))?;
            for a in 1..=self.order {
                let row: Vec<String> = t.row(a).iter().map(usize::to_string).collect();
                writeln!(w, "{}", row.join(" "))?;
            }
            writeln!(w)?;
        }
        Ok(())
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let file = std::fs::File::create(path).map_err(|e| Error::io(path, e))?;
        let mut w = BufWriter::new(file);
        self.write_to(&mut w).map_err(|e| Error::io(path, e))?;
        w.flush().map_err(|e| Error::io(path, e))
    }

    pub fn read_from(r: impl BufRead, path: &str) -> Result<Catalog> {
        let mut lines = r.lines().enumerate();
        let mut next_line = |expect: &str, lno_hint: usize| -> Result<(usize, String)> {
            for (lno, line) in lines.by_ref() {
                let line = line.map_err(|e| Error::parse(path, lno + 1, e.to_string()))?;
                if !line.trim().is_empty() {
                    return Ok((lno + 1, line));
                }
            }
            Err(Error::parse(
                path,
                lno_hint,
                format!("unexpected end of file, expected {expect}"),
            ))
        };

        let (l1, magic) = next_line("header", 1)?;
        if magic.trim() != "semigroup-catalog v1" {
            return Err(Error::parse(path, l1, "expected `semigroup-catalog v1`"));
        }
        let (l2, meta) = next_line("metadata", l1)?;
        let words: Vec<&str> = meta.split_whitespace().collect();
        let (order, count, equivalence) = match words.as_slice() {
            ["order", o, "count", c, "equivalence", e] => {
                let order: usize = o.parse().map_err(|_| Error::parse(path, l2, "bad order"))?;
                let count: usize = c.parse().map_err(|_| Error::parse(path, l2, "bad count"))?;
                let eq = Equivalence::parse(e)
                    .ok_or_else(|| Error::parse(path, l2, format!("bad equivalence `{e}`")))?;
                (order, count, eq)
            }
            _ => {
                return Err(Error::parse(
                    path,
                    l2,
                    "expected `order <n> count <Q> equivalence <iso|iso-anti>`",
                ))
            }
        };

        let mut tables = Vec::with_capacity(count);
        let mut last_line = l2;
        for rec in 0..count {
            let (lid, idline) = next_line("record", last_line)?;
            let id: u32 = idline
                .trim()
                .strip_prefix("id")
                .map(str::trim)
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| {
                    Error::parse(path, lid, format!("record {}: expected `id <a>`", rec + 1))
                })?;
            let mut rows = Vec::with_capacity(order);
            let mut lrow = lid;
            for _ in 0..order {
                let (lno, line) = next_line("table row", lrow)?;
                lrow = lno;
                let row: Vec<usize> = line
                    .split_whitespace()
                    .map(|w| {
                        w.parse::<usize>()
                            .map_err(|_| Error::parse(path, lno, format!("bad label `{w}`")))
                    })
                    .collect::<Result<_>>()?;
                rows.push(row);
            }
            last_line = lrow;
            let mut t = CayleyTable::from_rows(&rows)
                .map_err(|e| Error::parse(path, lid, e.to_string()))?;
            if t.order() != order {
                return Err(Error::parse(path, lid, "record order differs from header"));
            }
            if let Some(prev) = tables.last().and_then(|p: &CayleyTable| p.id) {
                if id <= prev {
                    return Err(Error::parse(
                        path,
                        lid,
                        format!("id {id} is not above the previous id {prev}"),
                    ));
                }
            }
            t.id = Some(id);
            tables.push(t);
        }
        Ok(Catalog {
            order,
            equivalence,
            tables,
        })
    }

    pub fn load(path: &Path) -> Result<Catalog> {
        let file = std::fs::File::open(path).map_err(|e| Error::io(path, e))?;
        Self::read_from(BufReader::new(file), &path.display().to_string())
    }
}

const MAXN: usize = MAX_ENUM_ORDER;
const MAXCELLS: usize = MAXN * MAXN;

/// One relabeling (optionally through the transpose), preprocessed for the
/// incremental lexicographic comparison.
struct Comparator {
    /// source flat cell feeding image position q
    src: [u16; MAXCELLS],
    /// the fill position at which image position q becomes comparable:
    /// `max(q, src[q])`
    wait: [u16; MAXCELLS],
    /// value relabeling, 1-based
    val: [u8; MAXN + 1],
}

struct Comparators {
    comps: Vec<Comparator>,
}

impl Comparators {
    fn build(n: usize, equivalence: Equivalence) -> Self {
        let perms = all_permutations(n).expect("order within permutation guard");
        let mut comps = Vec::new();
        for p in &perms {
            let inv = p.inverse();
            for transposed in [false, true] {
                if transposed && equivalence == Equivalence::IsoOnly {
                    continue;
                }
                if !transposed && p.is_identity() {
                    continue; // compares the table with itself
                }
                let mut src = [0u16; MAXCELLS];
                let mut wait = [0u16; MAXCELLS];
                let mut val = [0u8; MAXN + 1];
                for (v, slot) in val.iter_mut().enumerate().take(n + 1).skip(1) {
                    *slot = p.apply(v) as u8;
                }
                for q in 0..n * n {
                    let alpha = q / n + 1;
                    let beta = q % n + 1;
                    let (sr, sc) = if transposed {
                        (inv.apply(beta), inv.apply(alpha))
                    } else {
                        (inv.apply(alpha), inv.apply(beta))
                    };
                    let s = ((sr - 1) * n + (sc - 1)) as u16;
                    src[q] = s;
                    wait[q] = s.max(q as u16);
                }
                comps.push(Comparator { src, wait, val });
            }
        }
        Comparators { comps }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum CompState {
    /// registered in the bucket of its wait position
    Waiting,
    /// image already strictly larger than the table; harmless below here
    Dominated,
    /// image equal on all cells (an automorphism)
    Exhausted,
}

struct UndoRec {
    cid: u32,
    old_ptr: u16,
    pushed_to: Option<u16>,
}

struct Enumerator {
    n: usize,
    ncells: usize,
    shared: Arc<Comparators>,
    table: [u8; MAXCELLS],
    occ: [Vec<u16>; MAXN],
    ptr: Vec<u16>,
    state: Vec<CompState>,
    buckets: Vec<Vec<u32>>,
    saved: [Vec<u32>; MAXCELLS],
    undo: Vec<UndoRec>,
    undo_mark: [usize; MAXCELLS],
    out: Vec<CayleyTable>,
}

enum Fill {
    NotAssociative,
    Pruned,
    Ok,
}

impl Enumerator {
    fn new(n: usize, shared: Arc<Comparators>) -> Self {
        let ncomps = shared.comps.len();
        let mut e = Enumerator {
            n,
            ncells: n * n,
            shared,
            table: [0; MAXCELLS],
            occ: std::array::from_fn(|_| Vec::new()),
            ptr: vec![0; ncomps],
            state: vec![CompState::Waiting; ncomps],
            buckets: vec![Vec::new(); n * n],
            saved: std::array::from_fn(|_| Vec::new()),
            undo: Vec::new(),
            undo_mark: [0; MAXCELLS],
            out: Vec::new(),
        };
        e.reset();
        e
    }

    fn reset(&mut self) {
        self.table = [0; MAXCELLS];
        for v in &mut self.occ {
            v.clear();
        }
        for b in &mut self.buckets {
            b.clear();
        }
        self.undo.clear();
        self.out.clear();
        for cid in 0..self.shared.comps.len() {
            self.ptr[cid] = 0;
            self.state[cid] = CompState::Waiting;
            let w = self.shared.comps[cid].wait[0] as usize;
            self.buckets[w].push(cid as u32);
        }
    }

    /// Collects every surviving prefix of the first `depth` cells.
    fn collect_prefixes(&mut self, depth: usize) -> Vec<Vec<u8>> {
        self.reset();
        let mut prefixes = Vec::new();
        self.dfs_prefix(0, depth, &mut prefixes);
        prefixes
    }

    fn dfs_prefix(&mut self, pos: usize, depth: usize, prefixes: &mut Vec<Vec<u8>>) {
        if pos == depth {
            prefixes.push(self.table[..depth].to_vec());
            return;
        }
        let vmax = if pos == 0 { 1 } else { self.n };
        for v in 1..=vmax {
            if let Fill::Ok = self.fill(pos, v as u8) {
                self.dfs_prefix(pos + 1, depth, prefixes);
                self.unfill(pos);
            }
        }
    }

    /// Replays a prefix and enumerates the subtree below it.
    fn run_prefix(&mut self, prefix: &[u8]) -> Vec<CayleyTable> {
        self.reset();
        for (pos, &v) in prefix.iter().enumerate() {
            match self.fill(pos, v) {
                Fill::Ok => {}
                _ => unreachable!("prefixes are collected from surviving branches"),
            }
        }
        self.dfs(prefix.len());
        std::mem::take(&mut self.out)
    }

    fn dfs(&mut self, pos: usize) {
        if pos == self.ncells {
            let t = CayleyTable::from_flat(self.n, self.table[..self.ncells].to_vec());
            debug_assert!(t.is_associative());
            self.out.push(t);
            return;
        }
        let vmax = if pos == 0 { 1 } else { self.n };
        for v in 1..=vmax {
            if let Fill::Ok = self.fill(pos, v as u8) {
                self.dfs(pos + 1);
                self.unfill(pos);
            }
        }
    }

    fn fill(&mut self, pos: usize, v: u8) -> Fill {
        self.table[pos] = v;
        self.occ[(v - 1) as usize].push(pos as u16);
        if !self.assoc_ok(pos) {
            self.occ[(v - 1) as usize].pop();
            self.table[pos] = 0;
            return Fill::NotAssociative;
        }
        self.undo_mark[pos] = self.undo.len();
        self.saved[pos] = std::mem::take(&mut self.buckets[pos]);
        for idx in 0..self.saved[pos].len() {
            let cid = self.saved[pos][idx];
            if self.advance(cid, pos) {
                self.rollback(pos);
                self.occ[(v - 1) as usize].pop();
                self.table[pos] = 0;
                return Fill::Pruned;
            }
        }
        Fill::Ok
    }

    fn unfill(&mut self, pos: usize) {
        self.rollback(pos);
        let v = self.table[pos];
        self.occ[(v - 1) as usize].pop();
        self.table[pos] = 0;
    }

    /// Restores comparator state recorded since the fill at `pos`.
    fn rollback(&mut self, pos: usize) {
        while self.undo.len() > self.undo_mark[pos] {
            let rec = self.undo.pop().expect("len checked");
            if let Some(b) = rec.pushed_to {
                let popped = self.buckets[b as usize].pop();
                debug_assert_eq!(popped, Some(rec.cid));
            }
            self.ptr[rec.cid as usize] = rec.old_ptr;
            self.state[rec.cid as usize] = CompState::Waiting;
        }
        self.buckets[pos] = std::mem::take(&mut self.saved[pos]);
    }

    /// Advances one comparator as far as the filled cells allow. Returns
    /// true when the relabeled image is decided strictly smaller, which
    /// kills the branch.
    fn advance(&mut self, cid: u32, pos: usize) -> bool {
        let comp = &self.shared.comps[cid as usize];
        let old_ptr = self.ptr[cid as usize];
        let mut q = old_ptr as usize;
        loop {
            if q == self.ncells {
                self.undo.push(UndoRec {
                    cid,
                    old_ptr,
                    pushed_to: None,
                });
                self.ptr[cid as usize] = q as u16;
                self.state[cid as usize] = CompState::Exhausted;
                return false;
            }
            let w = comp.wait[q] as usize;
            if w > pos {
                self.undo.push(UndoRec {
                    cid,
                    old_ptr,
                    pushed_to: Some(w as u16),
                });
                self.ptr[cid as usize] = q as u16;
                self.buckets[w].push(cid);
                return false;
            }
            let img = comp.val[self.table[comp.src[q] as usize] as usize];
            let orig = self.table[q];
            if img < orig {
                self.undo.push(UndoRec {
                    cid,
                    old_ptr,
                    pushed_to: None,
                });
                self.ptr[cid as usize] = q as u16;
                return true;
            }
            if img > orig {
                self.undo.push(UndoRec {
                    cid,
                    old_ptr,
                    pushed_to: None,
                });
                self.ptr[cid as usize] = q as u16;
                self.state[cid as usize] = CompState::Dominated;
                return false;
            }
            q += 1;
        }
    }

    /// Checks every associativity triple whose four lookups became fully
    /// determined by the cell at `pos`. Patterns: the new cell as one of
    /// the two inner products, or as one of the two outer products (the
    /// occurrence lists find triples keyed by the new cell's row/column
    /// appearing as a product value).
    fn assoc_ok(&self, pos: usize) -> bool {
        let n = self.n;
        let r = pos / n;
        let col = pos % n;
        let v = self.table[pos] as usize;
        let t = |x: usize, y: usize| self.table[x * n + y] as usize;

        for z in 0..n {
            // (r, col, z): (r*col)*z vs r*(col*z)
            let a = t(col, z);
            if a != 0 {
                let lhs = t(v - 1, z);
                let rhs = t(r, a - 1);
                if lhs != 0 && rhs != 0 && lhs != rhs {
                    return false;
                }
            }
            // (z, r, col): (z*r)*col vs z*(r*col)
            let b = t(z, r);
            if b != 0 {
                let lhs = t(b - 1, col);
                let rhs = t(z, v - 1);
                if lhs != 0 && rhs != 0 && lhs != rhs {
                    return false;
                }
            }
        }
        // (x, y, col) with x*y = r+1: the new cell is the left outer product
        for &p in &self.occ[r] {
            let x = p as usize / n;
            let y = p as usize % n;
            let yz = t(y, col);
            if yz != 0 {
                let rhs = t(x, yz - 1);
                if rhs != 0 && rhs != v {
                    return false;
                }
            }
        }
        // (r, y, z) with y*z = col+1: the new cell is the right outer product
        for &p in &self.occ[col] {
            let y = p as usize / n;
            let z = p as usize % n;
            let xy = t(r, y);
            if xy != 0 {
                let lhs = t(xy - 1, z);
                if lhs != 0 && lhs != v {
                    return false;
                }
            }
        }
        true
    }
}
