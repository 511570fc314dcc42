//! S-expansions of Lie algebras by finite abelian semigroups.
//!
//! The crate covers the full toolchain:
//!
//! * [`cayley`] — multiplication tables, associativity/commutativity
//!   predicates, zero elements, selectors and the semigroup metric;
//! * [`iso`] — permutations, isomorphism and anti-isomorphism search,
//!   canonical forms;
//! * [`resonance`] — resonant decompositions `S = S0 u S1`;
//! * [`catalog`] — orderly enumeration of all non-equivalent semigroups up
//!   to order 6, with lookup and a text storage format;
//! * [`liealg`] — Lie algebras as exact structure constants, Killing-Cartan
//!   metrics and classification predicates;
//! * [`expansion`] — S-expanded algebras, resonant subalgebras and
//!   zero-element reductions, with intrinsic Killing-Cartan metrics;
//! * [`survey`] — batch censuses over catalogs (zero elements, resonances,
//!   semisimplicity preservation, compactness profiles).
//!
//! All algebraic decisions are made in exact arithmetic; floating point is
//! confined to eigenvalue signatures behind an explicit tolerance.

#![forbid(unsafe_code)]

pub mod catalog;
pub mod cayley;
pub mod error;
pub mod expansion;
pub mod iso;
pub mod liealg;
pub mod matrix;
pub mod resonance;
pub mod survey;

pub use catalog::{enumerate, Catalog, Equivalence, LookupMatch};
pub use cayley::{CayleyTable, Selector};
pub use error::{Error, Result};
pub use expansion::{expand, ExpandedAlgebra, Mode, RenderWhat};
pub use iso::{
    all_permutations, canonical_form, find_anti_isomorphism, find_anti_isomorphisms,
    find_isomorphism, find_isomorphisms, permute_table, Permutation,
};
pub use liealg::{StructureConstants, SubspaceDecomposition};
pub use matrix::{format_rational, EigenSignature, MetricMatrix, DEFAULT_EIGEN_TOLERANCE};
pub use resonance::{
    fills_space, find_all_resonances, find_resonances, is_resonant, subsets, ResonantPair, Subset,
};
pub use survey::{
    census, compactness_profile, scan_resonances, scan_zero, scan_zero_and_resonance, SurveyReport,
    SurveyRow,
};

#[cfg(test)]
pub(crate) mod testutil;
