//! S-expanded algebras and their resonant / reduced sectors.
//!
//! Expanding an algebra `g` by a finite abelian semigroup `S` produces the
//! algebra on pairs `X_(i,a)` with brackets
//! `[X_(i,a), X_(j,b)] = C_ij^k X_(k, a*b)`. Three smaller algebras are
//! carved out of it: the resonant subalgebra `(S0 x V0) + (S1 x V1)`, the
//! reduction that removes the zero-element sector, and the reduction of the
//! resonant subalgebra. Every constructor re-indexes the retained pairs into
//! a dense generator set and verifies closure while doing so.

use std::fmt::Write as _;

use num_traits::Zero;

use crate::cayley::CayleyTable;
use crate::error::{Error, Result};
use crate::liealg::{StructureConstants, SubspaceDecomposition};
use crate::matrix::{format_rational, MetricMatrix};
use crate::resonance::{is_resonant, ResonantPair};

/// Which sector of the expansion is retained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Mode {
    Full,
    Resonant,
    Reduced,
    ResonantReduced,
}

impl Mode {
    pub fn as_str(&self) -> &'static str {
        match self {
            Mode::Full => "full",
            Mode::Resonant => "resonant",
            Mode::Reduced => "reduced",
            Mode::ResonantReduced => "resonant-reduced",
        }
    }

    /// Accepts both the full names and the CLI short forms.
    pub fn parse(s: &str) -> Option<Mode> {
        match s {
            "full" => Some(Mode::Full),
            "resonant" | "res" => Some(Mode::Resonant),
            "reduced" | "red" => Some(Mode::Reduced),
            "resonant-reduced" | "resonant_reduced" | "resred" => Some(Mode::ResonantReduced),
            _ => None,
        }
    }

    pub const ALL: [Mode; 4] = [
        Mode::Full,
        Mode::Resonant,
        Mode::Reduced,
        Mode::ResonantReduced,
    ];
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// What [`ExpandedAlgebra::render`] prints.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderWhat {
    Commutators,
    Constants,
    AdjointBoxes,
}

/// An expansion of `source` by `table`, restricted to `retained` generator
/// pairs `(i, a)`.
///
/// Pairs are kept sorted by the flattened index `p = (i-1)*m + a`, which is
/// the printed `Y_p` numbering. The effective structure constants over the
/// retained generators are built and closure-checked at construction.
#[derive(Debug, Clone)]
pub struct ExpandedAlgebra {
    source: StructureConstants,
    table: CayleyTable,
    retained: Vec<(usize, usize)>,
    mode: Mode,
    resonance: Option<(ResonantPair, SubspaceDecomposition)>,
    zero: Option<usize>,
    effective: StructureConstants,
}

/// The full S-expanded algebra `S (x) g` of dimension `dim(g) * order(S)`.
///
/// The semigroup must be associative and commutative and the source must be
/// a Lie algebra; all three are checked.
pub fn expand(g: &StructureConstants, t: &CayleyTable) -> Result<ExpandedAlgebra> {
    if !t.is_associative() {
        return Err(Error::NotAssociative);
    }
    if !t.is_commutative() {
        return Err(Error::NotCommutative);
    }
    if !g.is_lie() {
        return Err(Error::NotLie);
    }
    let n = g.dim();
    let m = t.order();
    let mut retained = Vec::with_capacity(n * m);
    for i in 1..=n {
        for a in 1..=m {
            retained.push((i, a));
        }
    }
    let effective = build_effective(g, t, &retained, None)?;
    Ok(ExpandedAlgebra {
        source: g.clone(),
        table: t.clone(),
        retained,
        mode: Mode::Full,
        resonance: None,
        zero: None,
        effective,
    })
}

impl ExpandedAlgebra {
    pub fn base_dim(&self) -> usize {
        self.source.dim()
    }

    pub fn sg_order(&self) -> usize {
        self.table.order()
    }

    pub fn dim(&self) -> usize {
        self.retained.len()
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn source(&self) -> &StructureConstants {
        &self.source
    }

    pub fn table(&self) -> &CayleyTable {
        &self.table
    }

    pub fn zero(&self) -> Option<usize> {
        self.zero
    }

    pub fn resonance(&self) -> Option<&(ResonantPair, SubspaceDecomposition)> {
        self.resonance.as_ref()
    }

    /// Retained pairs `(i, a)`, sorted by `p = (i-1)*m + a`.
    pub fn retained(&self) -> &[(usize, usize)] {
        &self.retained
    }

    /// The `Y_p` label of a retained pair.
    pub fn flat_index(&self, i: usize, a: usize) -> usize {
        (i - 1) * self.sg_order() + a
    }

    /// The resonant subalgebra `(S0 x V0) + (S1 x V1)`.
    ///
    /// Requires the full expansion, a resonant pair for the table and a
    /// graded decomposition of the source. Closure is verified while the
    /// effective constants are built, even though it is guaranteed.
    pub fn resonant_subalgebra(
        &self,
        p: &ResonantPair,
        d: &SubspaceDecomposition,
    ) -> Result<ExpandedAlgebra> {
        if self.mode != Mode::Full {
            return Err(Error::WrongMode);
        }
        if !is_resonant(&self.table, p)? {
            return Err(Error::NotResonant);
        }
        if d.ambient() != self.base_dim() || !self.source.check_subspace_structure(d) {
            return Err(Error::NotGraded);
        }
        let mut retained = Vec::new();
        for &(i, a) in &self.retained {
            let keep = (p.s0.contains(a) && d.in_v0(i)) || (p.s1.contains(a) && !d.in_v0(i));
            if keep {
                retained.push((i, a));
            }
        }
        if retained.is_empty() {
            return Err(Error::EmptyRetained);
        }
        let effective = build_effective(&self.source, &self.table, &retained, None)?;
        Ok(ExpandedAlgebra {
            source: self.source.clone(),
            table: self.table.clone(),
            retained,
            mode: Mode::Resonant,
            resonance: Some((p.clone(), d.clone())),
            zero: None,
            effective,
        })
    }

    /// Removes the zero-element sector `0_S (x) g`.
    ///
    /// Brackets landing in the removed sector are set to zero; the result is
    /// a Lie algebra but not a subalgebra of the expansion.
    pub fn zero_reduce(&self) -> Result<ExpandedAlgebra> {
        let mode = match self.mode {
            Mode::Full => Mode::Reduced,
            Mode::Resonant => Mode::ResonantReduced,
            _ => return Err(Error::WrongMode),
        };
        let z = self.table.find_zero().ok_or(Error::NoZeroElement)?;
        let retained: Vec<(usize, usize)> = self
            .retained
            .iter()
            .copied()
            .filter(|&(_, a)| a != z)
            .collect();
        if retained.is_empty() {
            return Err(Error::EmptyRetained);
        }
        let effective = build_effective(&self.source, &self.table, &retained, Some(z))?;
        Ok(ExpandedAlgebra {
            source: self.source.clone(),
            table: self.table.clone(),
            retained,
            mode,
            resonance: self.resonance.clone(),
            zero: Some(z),
            effective,
        })
    }

    /// The re-indexed structure constants over the retained generators.
    pub fn effective_constants(&self) -> &StructureConstants {
        &self.effective
    }

    /// Intrinsic Killing-Cartan metric of the retained algebra (adjoint
    /// trace over retained generators only). For the full expansion this
    /// equals the Kronecker product of the source Killing metric and the
    /// semigroup metric.
    pub fn kc_metric(&self) -> Result<MetricMatrix> {
        self.effective.killing_metric()
    }

    fn pair_label(&self, q: usize) -> String {
        let (i, a) = self.retained[q];
        format!("({i},{a})")
    }

    fn gen_label(&self, q: usize) -> String {
        let (i, a) = self.retained[q];
        format!("X_{{{i},{a}}}")
    }

    /// Printable listings of the retained algebra.
    pub fn render(&self, what: RenderWhat) -> String {
        let mut out = String::new();
        match what {
            RenderWhat::Commutators => {
                let _ = writeln!(
                    out,
                    "n = {} , dimension of the original Lie algebra.",
                    self.base_dim()
                );
                let _ = writeln!(out, "m = {} , order of the semigroup.", self.sg_order());
                out.push('\n');
                let _ = writeln!(out, "Generators (Y_p = X_{{i,a}} with p = (i-1)m + a):");
                for (q, &(i, a)) in self.retained.iter().enumerate() {
                    let _ = writeln!(
                        out,
                        " Y_{{{}}} = {}",
                        self.flat_index(i, a),
                        self.gen_label(q)
                    );
                }
                out.push('\n');
                let _ = writeln!(out, "Non vanishing commutators:");
                for (q1, q2, q3, v) in self.effective.nonzero_brackets() {
                    let _ = writeln!(
                        out,
                        " [ {} , {} ] = {} {}",
                        self.gen_label(q1 - 1),
                        self.gen_label(q2 - 1),
                        format_rational(&v),
                        self.gen_label(q3 - 1),
                    );
                }
            }
            RenderWhat::Constants => {
                let _ = writeln!(out, "Non vanishing structure constants:");
                for (q1, q2, q3, v) in self.effective.nonzero_brackets() {
                    let _ = writeln!(
                        out,
                        " C_{{{}{}}}^{{{}}} = {}",
                        self.pair_label(q1 - 1),
                        self.pair_label(q2 - 1),
                        self.pair_label(q3 - 1),
                        format_rational(&v),
                    );
                }
            }
            RenderWhat::AdjointBoxes => {
                let labels: Vec<String> = (0..self.dim()).map(|q| self.pair_label(q)).collect();
                let _ = writeln!(out, "Double indices take the values:");
                let _ = writeln!(out, "A,B = {}", labels.join(", "));
                for q in 0..self.dim() {
                    out.push_str("******\n");
                    let _ = writeln!(out, "C_{{{} (j,b)}}^{{(k,c)}}", labels[q]);
                    for j in 1..=self.dim() {
                        let row: Vec<String> = (1..=self.dim())
                            .map(|k| format_rational(self.effective.coeff(q + 1, j, k)))
                            .collect();
                        let width = row.iter().map(String::len).max().unwrap_or(1);
                        let cells: Vec<String> =
                            row.iter().map(|c| format!("{c:>width$}")).collect();
                        let _ = writeln!(out, " {}", cells.join(" "));
                    }
                }
            }
        }
        out
    }
}

/// Builds the dense antisymmetric constants over the retained pairs.
///
/// A bracket target `(k, a*b)` outside the retained set is dropped when its
/// semigroup part is the removed zero element, and is a closure violation
/// otherwise.
fn build_effective(
    source: &StructureConstants,
    table: &CayleyTable,
    retained: &[(usize, usize)],
    dropped_zero: Option<usize>,
) -> Result<StructureConstants> {
    let n = source.dim();
    let m = table.order();
    let mut index = vec![usize::MAX; n * m];
    for (q, &(i, a)) in retained.iter().enumerate() {
        index[(i - 1) * m + (a - 1)] = q;
    }
    let mut eff = StructureConstants::new(retained.len());
    for q1 in 0..retained.len() {
        let (i1, a1) = retained[q1];
        for q2 in (q1 + 1)..retained.len() {
            let (i2, a2) = retained[q2];
            let c = table.get(a1, a2);
            for k in 1..=n {
                let v = source.coeff(i1, i2, k);
                if v.is_zero() {
                    continue;
                }
                let q3 = index[(k - 1) * m + (c - 1)];
                if q3 != usize::MAX {
                    eff.set_bracket(q1 + 1, q2 + 1, q3 + 1, v.clone())
                        .expect("indices are in range and q1 != q2");
                } else if dropped_zero != Some(c) {
                    return Err(Error::ClosureViolation {
                        i0: i1,
                        a0: a1,
                        i1: i2,
                        a1: a2,
                    });
                }
            }
        }
    }
    Ok(eff)
}
