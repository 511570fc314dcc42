//! Multiplication tables of finite magmas and semigroups.
//!
//! A [`CayleyTable`] is an order-`n` table over element labels `1..=n` with
//! `t.get(a, b) = a * b`. Nothing is assumed about the product at
//! construction; associativity and commutativity are predicates. The
//! [`Selector`] is the 0/1 indicator form of the product, whose boxes are the
//! adjoint representation of the semigroup, and the semigroup metric built
//! from it governs semisimplicity preservation of expansions.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::matrix::MetricMatrix;

/// Hard cap on table order; labels are stored as `u8`.
pub const MAX_ORDER: usize = 255;

/// An `n x n` multiplication table over element labels `1..=n`.
///
/// `id` is an optional catalog identifier carried as metadata; it does not
/// take part in equality or ordering.
#[derive(Debug, Clone)]
pub struct CayleyTable {
    order: usize,
    entries: Vec<u8>,
    pub id: Option<u32>,
}

impl PartialEq for CayleyTable {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.entries == other.entries
    }
}

impl Eq for CayleyTable {}

impl PartialOrd for CayleyTable {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CayleyTable {
    /// Row-major lexicographic order on the flattened entries; shorter
    /// orders sort first.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.order
            .cmp(&other.order)
            .then_with(|| self.entries.cmp(&other.entries))
    }
}

impl std::hash::Hash for CayleyTable {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.order.hash(state);
        self.entries.hash(state);
    }
}

impl CayleyTable {
    /// Builds a table from rows of 1-based labels.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let order = rows.len();
        if order == 0 {
            return Err(Error::EmptyTable);
        }
        if order > MAX_ORDER {
            return Err(Error::OrderTooLarge {
                order,
                max: MAX_ORDER,
            });
        }
        let mut entries = Vec::with_capacity(order * order);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(Error::RaggedRow {
                    row: r + 1,
                    len: row.len(),
                    order,
                });
            }
            for (c, &value) in row.iter().enumerate() {
                if value < 1 || value > order {
                    return Err(Error::EntryOutOfRange {
                        row: r + 1,
                        col: c + 1,
                        value,
                        order,
                    });
                }
                entries.push(value as u8);
            }
        }
        Ok(CayleyTable {
            order,
            entries,
            id: None,
        })
    }

    /// Builds a table of the given order from a product function on labels.
    pub fn from_fn(order: usize, product: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let rows: Vec<Vec<usize>> = (1..=order)
            .map(|a| (1..=order).map(|b| product(a, b)).collect())
            .collect();
        Self::from_rows(&rows)
    }

    pub(crate) fn from_flat(order: usize, entries: Vec<u8>) -> Self {
        debug_assert_eq!(entries.len(), order * order);
        CayleyTable {
            order,
            entries,
            id: None,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Product of labels `a * b`; both arguments and the result are 1-based.
    #[inline]
    pub fn get(&self, a: usize, b: usize) -> usize {
        debug_assert!(a >= 1 && a <= self.order && b >= 1 && b <= self.order);
        self.entries[(a - 1) * self.order + (b - 1)] as usize
    }

    /// Row-major flattened entries, for lexicographic comparison.
    pub fn flat(&self) -> &[u8] {
        &self.entries
    }

    pub fn row(&self, a: usize) -> Vec<usize> {
        (1..=self.order).map(|b| self.get(a, b)).collect()
    }

    pub fn transpose(&self) -> CayleyTable {
        let n = self.order;
        let mut entries = vec![0u8; n * n];
        for a in 0..n {
            for b in 0..n {
                entries[b * n + a] = self.entries[a * n + b];
            }
        }
        CayleyTable {
            order: n,
            entries,
            id: None,
        }
    }

    /// True iff `(a*b)*c = a*(b*c)` for all labels.
    pub fn is_associative(&self) -> bool {
        let n = self.order;
        for a in 1..=n {
            for b in 1..=n {
                let ab = self.get(a, b);
                for c in 1..=n {
                    if self.get(ab, c) != self.get(a, self.get(b, c)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// True iff the table is symmetric.
    pub fn is_commutative(&self) -> bool {
        let n = self.order;
        for a in 1..=n {
            for b in (a + 1)..=n {
                if self.get(a, b) != self.get(b, a) {
                    return false;
                }
            }
        }
        true
    }

    /// The unique two-sided zero element, if any: `a*z = z*a = z` for all `a`.
    ///
    /// Two-sidedness is checked even for noncommutative tables; for
    /// commutative ones this coincides with the one-sided condition.
    pub fn find_zero(&self) -> Option<usize> {
        let n = self.order;
        (1..=n).find(|&z| (1..=n).all(|a| self.get(a, z) == z && self.get(z, a) == z))
    }

    /// The selector `K_ab^c = [a*b = c]`.
    pub fn selector(&self) -> Selector {
        let n = self.order;
        let mut data = vec![0u8; n * n * n];
        for a in 1..=n {
            for b in 1..=n {
                let c = self.get(a, b);
                data[(a - 1) * n * n + (b - 1) * n + (c - 1)] = 1;
            }
        }
        Selector { order: n, data }
    }

    /// The semigroup metric `g^S_ab = sum_{g,l} K_ag^l K_bl^g`.
    ///
    /// Only meaningful for semigroups; non-associative input is rejected.
    pub fn semigroup_metric(&self) -> Result<MetricMatrix> {
        if !self.is_associative() {
            return Err(Error::NotAssociative);
        }
        let n = self.order;
        let sel = self.selector();
        MetricMatrix::from_fn(n, |a, b| {
            let mut sum = 0i64;
            for g in 1..=n {
                for l in 1..=n {
                    sum += (sel.get(a, g, l) && sel.get(b, l, g)) as i64;
                }
            }
            BigRational::from(BigInt::from(sum))
        })
    }

    /// The family member `S_E^(N)`: order `N+2` on labels for
    /// `lambda_0..lambda_{N+1}`, with `lambda_a lambda_b = lambda_{min(a+b, N+1)}`.
    pub fn se_family(n: usize) -> Result<Self> {
        let order = n + 2;
        Self::from_fn(order, |a, b| {
            // labels 1..=order stand for lambda_0..lambda_{N+1}
            let sum = (a - 1) + (b - 1);
            sum.min(n + 1) + 1
        })
    }

    /// The family member `S_M^(N)`: order `N+1` on labels for
    /// `lambda_0..lambda_N`, with `lambda_a lambda_b = lambda_{a+b}` when
    /// `a+b <= N` and `lambda_{a+b-N}` otherwise.
    pub fn sm_family(n: usize) -> Result<Self> {
        let order = n + 1;
        Self::from_fn(order, |a, b| {
            let sum = (a - 1) + (b - 1);
            if sum <= n {
                sum + 1
            } else {
                sum - n + 1
            }
        })
    }

    /// Parses the single-table text format: a line `order <n>` followed by
    /// `n` rows of `n` space-separated labels.
    pub fn parse(text: &str) -> Result<Self> {
        Self::parse_named(text, "<table>")
    }

    pub fn parse_named(text: &str, path: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate();
        let (lno, header) = lines
            .by_ref()
            .find(|(_, l)| !l.trim().is_empty())
            .ok_or_else(|| Error::parse(path, 1, "empty input"))?;
        let order: usize = header
            .trim()
            .strip_prefix("order")
            .map(str::trim)
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::parse(path, lno + 1, "expected header `order <n>`"))?;
        let mut rows = Vec::with_capacity(order);
        for _ in 0..order {
            let (lno, line) = lines
                .by_ref()
                .find(|(_, l)| !l.trim().is_empty())
                .ok_or_else(|| Error::parse(path, lno + 1, format!("expected {order} rows")))?;
            let row: Vec<usize> = line
                .split_whitespace()
                .map(|w| {
                    w.parse::<usize>()
                        .map_err(|_| Error::parse(path, lno + 1, format!("bad label `{w}`")))
                })
                .collect::<Result<_>>()?;
            rows.push(row);
        }
        Self::from_rows(&rows)
    }
}

impl fmt::Display for CayleyTable {
    /// The single-table text format accepted by [`CayleyTable::parse`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "order {}", self.order)?;
        for a in 1..=self.order {
            let row: Vec<String> = self.row(a).iter().map(usize::to_string).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// The 0/1 selector array `K_ab^c` of a table.
///
/// For every `(a, b)` exactly one `c` has `K_ab^c = 1` (the product is
/// functional), and box `a` — the matrix `(K_ab^c)_{b,c}` — is the adjoint
/// matrix of element `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Selector {
    order: usize,
    data: Vec<u8>,
}

impl Selector {
    pub fn order(&self) -> usize {
        self.order
    }

    /// `K_ab^c` as a boolean; all indices 1-based.
    #[inline]
    pub fn get(&self, a: usize, b: usize, c: usize) -> bool {
        let n = self.order;
        self.data[(a - 1) * n * n + (b - 1) * n + (c - 1)] == 1
    }

    /// Box `a` as a 0/1 matrix: rows indexed by `b`, columns by `c`.
    pub fn adjoint_box(&self, a: usize) -> Vec<Vec<u8>> {
        let n = self.order;
        (1..=n)
            .map(|b| (1..=n).map(|c| self.get(a, b, c) as u8).collect())
            .collect()
    }

    /// Boxed rendering: one `n x n` box per element.
    pub fn show(&self) -> String {
        let mut out = String::new();
        for a in 1..=self.order {
            out.push_str("*********\n");
            out.push_str(&format!("Adj [lambda_{{{a}}}] = ( K_{{{a},b}}^{{c}} ) =\n"));
            for row in self.adjoint_box(a) {
                let cells: Vec<String> = row.iter().map(u8::to_string).collect();
                out.push_str(&format!(" {}\n", cells.join(" ")));
            }
        }
        out
    }
}
