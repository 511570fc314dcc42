//! Batch censuses over semigroup catalogs: zero elements, resonances, and
//! which expansions preserve semisimplicity or compactness.
//!
//! Rows are independent work items; the scan runs them in parallel and
//! merges in catalog order, so reports are reproducible bit for bit.
//! Per-row construction failures never abort a census — they are collected
//! next to the rows (the CSV schema has no failure column).

use std::io::{BufRead, Write};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;

use crate::catalog::Catalog;
use crate::cayley::CayleyTable;
use crate::error::{Error, Result};
use crate::expansion::{expand, ExpandedAlgebra, Mode};
use crate::liealg::{StructureConstants, SubspaceDecomposition};
use crate::matrix::{EigenSignature, DEFAULT_EIGEN_TOLERANCE};
use crate::resonance::{find_all_resonances, ResonantPair};

/// One expansion record of a census.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurveyRow {
    pub id: u32,
    pub mode: Mode,
    /// 1-based position in the semigroup's resonance list; `None` for
    /// non-resonant modes.
    pub resonance_index: Option<u32>,
    pub dim: usize,
    pub det: BigRational,
    pub sig: EigenSignature,
    pub semisimple: bool,
    pub compact: bool,
    pub abelian: bool,
    pub solvable: bool,
    pub nilpotent: bool,
}

/// A row that could not be constructed; the census carries on.
#[derive(Debug, Clone)]
pub struct RowFailure {
    pub id: u32,
    pub mode: Mode,
    pub resonance_index: Option<u32>,
    pub message: String,
}

/// Census output: rows sorted by `(id, mode, resonance index)` plus
/// catalog-level counters.
#[derive(Debug, Clone)]
pub struct SurveyReport {
    pub algebra: String,
    pub order: usize,
    pub semigroups: usize,
    pub with_zero: usize,
    pub with_resonance: usize,
    pub resonances: usize,
    pub rows: Vec<SurveyRow>,
    pub failures: Vec<RowFailure>,
}

impl SurveyReport {
    /// Number of semigroups preserving semisimplicity in the given mode,
    /// under the published census convention: for resonant modes only each
    /// semigroup's first resonance (in enumeration order) is consulted.
    ///
    /// The reference census tables were produced that way — semigroups
    /// whose first resonance degenerates but a later one does not (e.g.
    /// order-4 #64) are not counted there, so this is what reproduces the
    /// printed numbers. [`SurveyReport::pss_any`] counts every resonance.
    pub fn pss(&self, mode: Mode) -> usize {
        let mut ids: Vec<u32> = self
            .rows
            .iter()
            .filter(|r| {
                r.mode == mode && r.semisimple && matches!(r.resonance_index, None | Some(1))
            })
            .map(|r| r.id)
            .collect();
        ids.dedup();
        ids.len()
    }

    /// Number of distinct semigroups with at least one semisimple row in
    /// the given mode, whichever resonance produces it.
    pub fn pss_any(&self, mode: Mode) -> usize {
        let mut ids: Vec<u32> = self
            .rows
            .iter()
            .filter(|r| r.mode == mode && r.semisimple)
            .map(|r| r.id)
            .collect();
        ids.dedup();
        ids.len()
    }

    pub fn rows_in_mode(&self, mode: Mode) -> impl Iterator<Item = &SurveyRow> {
        self.rows.iter().filter(move |r| r.mode == mode)
    }

    /// Distinct ids appearing in rows of a mode.
    pub fn ids_in_mode(&self, mode: Mode) -> Vec<u32> {
        let mut ids: Vec<u32> = self.rows_in_mode(mode).map(|r| r.id).collect();
        ids.dedup();
        ids
    }

    pub fn summary(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("algebra: {}\n", self.algebra));
        out.push_str(&format!("order: {}\n", self.order));
        out.push_str(&format!("semigroups: {}\n", self.semigroups));
        out.push_str(&format!("with zero: {}\n", self.with_zero));
        out.push_str(&format!("with resonance: {}\n", self.with_resonance));
        out.push_str(&format!("resonances: {}\n", self.resonances));
        for mode in Mode::ALL {
            if self.rows.iter().any(|r| r.mode == mode) {
                out.push_str(&format!("pss {}: {}\n", mode.as_str(), self.pss(mode)));
            }
        }
        if !self.failures.is_empty() {
            out.push_str(&format!("failed rows: {}\n", self.failures.len()));
        }
        out
    }
}

/// Ids with a zero element, plus the element.
pub fn scan_zero(catalog: &Catalog) -> Vec<(u32, usize)> {
    catalog
        .iter()
        .filter_map(|t| t.find_zero().map(|z| (t.id.unwrap_or(0), z)))
        .collect()
}

/// Per-id resonance lists, ids without resonances omitted.
pub fn scan_resonances(catalog: &Catalog) -> Vec<(u32, Vec<ResonantPair>)> {
    let mut out: Vec<(u32, Vec<ResonantPair>)> = catalog
        .tables()
        .par_iter()
        .map(|t| (t.id.unwrap_or(0), find_all_resonances(t)))
        .collect();
    out.retain(|(_, rs)| !rs.is_empty());
    out
}

/// Ids holding both a zero element and at least one resonance.
pub fn scan_zero_and_resonance(catalog: &Catalog) -> Vec<(u32, usize, Vec<ResonantPair>)> {
    scan_resonances(catalog)
        .into_iter()
        .filter_map(|(id, rs)| {
            let t = catalog.get_by_id(id).ok()?;
            t.find_zero().map(|z| (id, z, rs))
        })
        .collect()
}

/// Eigen signature of the semigroup metric of every catalog entry.
pub fn compactness_profile(catalog: &Catalog) -> Result<Vec<(u32, EigenSignature)>> {
    catalog
        .iter()
        .map(|t| {
            let sig = t
                .semigroup_metric()?
                .eigen_signature(DEFAULT_EIGEN_TOLERANCE);
            Ok((t.id.unwrap_or(0), sig))
        })
        .collect()
}

fn row_from_expansion(e: &ExpandedAlgebra, id: u32, ridx: Option<u32>) -> Result<SurveyRow> {
    let eff = e.effective_constants();
    let kc = e.kc_metric()?;
    let det = kc.determinant();
    let sig = kc.eigen_signature(DEFAULT_EIGEN_TOLERANCE);
    let semisimple = !det.is_zero();
    let dim = e.dim();
    Ok(SurveyRow {
        id,
        mode: e.mode(),
        resonance_index: ridx,
        dim,
        det,
        sig,
        semisimple,
        compact: semisimple && sig.n_neg == dim,
        abelian: eff.is_abelian(),
        solvable: eff.is_solvable()?,
        nilpotent: eff.is_nilpotent()?,
    })
}

fn census_one(
    algebra: &StructureConstants,
    d: Option<&SubspaceDecomposition>,
    t: &CayleyTable,
    modes: &[Mode],
) -> (Vec<SurveyRow>, Vec<RowFailure>) {
    let id = t.id.unwrap_or(0);
    let mut rows = Vec::new();
    let mut failures = Vec::new();
    let fail = |mode: Mode, ridx: Option<u32>, e: Error, failures: &mut Vec<RowFailure>| {
        failures.push(RowFailure {
            id,
            mode,
            resonance_index: ridx,
            message: e.to_string(),
        });
    };

    let full = match expand(algebra, t) {
        Ok(e) => e,
        Err(e) => {
            let message = e.to_string();
            for &mode in modes {
                failures.push(RowFailure {
                    id,
                    mode,
                    resonance_index: None,
                    message: message.clone(),
                });
            }
            return (rows, failures);
        }
    };
    let zero = t.find_zero();
    let needs_resonances =
        modes.contains(&Mode::Resonant) || modes.contains(&Mode::ResonantReduced);
    let resonances = if needs_resonances {
        find_all_resonances(t)
    } else {
        Vec::new()
    };

    for &mode in modes {
        match mode {
            Mode::Full => match row_from_expansion(&full, id, None) {
                Ok(r) => rows.push(r),
                Err(e) => fail(mode, None, e, &mut failures),
            },
            Mode::Reduced => {
                if zero.is_some() {
                    match full
                        .zero_reduce()
                        .and_then(|r| row_from_expansion(&r, id, None))
                    {
                        Ok(r) => rows.push(r),
                        Err(e) => fail(mode, None, e, &mut failures),
                    }
                }
            }
            Mode::Resonant => {
                let Some(d) = d else { continue };
                for (k, p) in resonances.iter().enumerate() {
                    let ridx = Some(k as u32 + 1);
                    match full
                        .resonant_subalgebra(p, d)
                        .and_then(|r| row_from_expansion(&r, id, ridx))
                    {
                        Ok(r) => rows.push(r),
                        Err(e) => fail(mode, ridx, e, &mut failures),
                    }
                }
            }
            Mode::ResonantReduced => {
                let Some(d) = d else { continue };
                if zero.is_none() {
                    continue;
                }
                for (k, p) in resonances.iter().enumerate() {
                    let ridx = Some(k as u32 + 1);
                    match full
                        .resonant_subalgebra(p, d)
                        .and_then(|r| r.zero_reduce())
                        .and_then(|r| row_from_expansion(&r, id, ridx))
                    {
                        Ok(r) => rows.push(r),
                        Err(e) => fail(mode, ridx, e, &mut failures),
                    }
                }
            }
        }
    }
    (rows, failures)
}

/// Expands the source algebra by every semigroup of the (commutative)
/// catalog in the requested modes and records dimension, exact determinant,
/// eigen signature and classification flags per row.
pub fn census(
    algebra: &StructureConstants,
    algebra_label: &str,
    decomposition: Option<&SubspaceDecomposition>,
    catalog: &Catalog,
    modes: &[Mode],
) -> Result<SurveyReport> {
    let needs_d = modes.contains(&Mode::Resonant) || modes.contains(&Mode::ResonantReduced);
    if needs_d {
        let d = decomposition.ok_or(Error::NotGraded)?;
        if d.ambient() != algebra.dim() || !algebra.check_subspace_structure(d) {
            return Err(Error::NotGraded);
        }
    }
    let mut modes = modes.to_vec();
    modes.sort_unstable();
    modes.dedup();

    let per_table: Vec<(Vec<SurveyRow>, Vec<RowFailure>)> = catalog
        .tables()
        .par_iter()
        .map(|t| census_one(algebra, decomposition, t, &modes))
        .collect();

    let mut rows = Vec::new();
    let mut failures = Vec::new();
    for (mut r, mut f) in per_table {
        rows.append(&mut r);
        failures.append(&mut f);
    }
    rows.sort_by_key(|r| (r.id, r.mode, r.resonance_index));

    let with_zero = scan_zero(catalog).len();
    let resonance_lists = scan_resonances(catalog);
    Ok(SurveyReport {
        algebra: algebra_label.to_string(),
        order: catalog.order(),
        semigroups: catalog.len(),
        with_zero,
        with_resonance: resonance_lists.len(),
        resonances: resonance_lists.iter().map(|(_, rs)| rs.len()).sum(),
        rows,
        failures,
    })
}

pub const CSV_HEADER: &str = "id,mode,resonance_index,dim,det_num,det_den,n_pos,n_neg,n_zero,semisimple,compact,abelian,solvable,nilpotent";

pub fn write_csv_header(w: &mut impl Write) -> std::io::Result<()> {
    writeln!(w, "{CSV_HEADER}")
}

pub fn write_csv_row(w: &mut impl Write, r: &SurveyRow) -> std::io::Result<()> {
    writeln!(
        w,
        "{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
        r.id,
        r.mode.as_str(),
        r.resonance_index.map(|k| k.to_string()).unwrap_or_default(),
        r.dim,
        r.det.numer(),
        r.det.denom(),
        r.sig.n_pos,
        r.sig.n_neg,
        r.sig.n_zero,
        r.semisimple,
        r.compact,
        r.abelian,
        r.solvable,
        r.nilpotent,
    )
}

/// Reads rows back from the CSV format, tolerating a missing header.
pub fn read_csv_rows(r: impl BufRead, path: &str) -> Result<Vec<SurveyRow>> {
    let mut rows = Vec::new();
    for (lno, line) in r.lines().enumerate() {
        let line = line.map_err(|e| Error::parse(path, lno + 1, e.to_string()))?;
        let line = line.trim();
        if line.is_empty() || line == CSV_HEADER {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 14 {
            return Err(Error::parse(path, lno + 1, "expected 14 fields"));
        }
        let bad = |what: &str| Error::parse(path, lno + 1, format!("bad {what}"));
        let id: u32 = fields[0].parse().map_err(|_| bad("id"))?;
        let mode = Mode::parse(fields[1]).ok_or_else(|| bad("mode"))?;
        let resonance_index = if fields[2].is_empty() {
            None
        } else {
            Some(fields[2].parse().map_err(|_| bad("resonance_index"))?)
        };
        let dim: usize = fields[3].parse().map_err(|_| bad("dim"))?;
        let num: BigInt = fields[4].parse().map_err(|_| bad("det_num"))?;
        let den: BigInt = fields[5].parse().map_err(|_| bad("det_den"))?;
        if den.is_zero() {
            return Err(bad("det_den"));
        }
        let parse_bool = |s: &str, what: &str| match s {
            "true" => Ok(true),
            "false" => Ok(false),
            _ => Err(bad(what)),
        };
        rows.push(SurveyRow {
            id,
            mode,
            resonance_index,
            dim,
            det: BigRational::new(num, den),
            sig: EigenSignature {
                n_pos: fields[6].parse().map_err(|_| bad("n_pos"))?,
                n_neg: fields[7].parse().map_err(|_| bad("n_neg"))?,
                n_zero: fields[8].parse().map_err(|_| bad("n_zero"))?,
            },
            semisimple: parse_bool(fields[9], "semisimple")?,
            compact: parse_bool(fields[10], "compact")?,
            abelian: parse_bool(fields[11], "abelian")?,
            solvable: parse_bool(fields[12], "solvable")?,
            nilpotent: parse_bool(fields[13], "nilpotent")?,
        });
    }
    Ok(rows)
}
