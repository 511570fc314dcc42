//! Finite-dimensional Lie algebras as structure-constant arrays.
//!
//! Brackets are `[X_i, X_j] = C_ij^k X_k` with exact rational `C_ij^k`,
//! antisymmetric in `(i, j)` at every write. Semisimplicity is decided on
//! the exact determinant of the Killing-Cartan metric; solvability and
//! nilpotency on exact ranks of bracket spans. Floating point enters only
//! through the eigenvalue signature.

use std::fmt::Write as _;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::{format_rational, MetricMatrix, DEFAULT_EIGEN_TOLERANCE};
use crate::resonance::Subset;

pub(crate) fn rat(n: i64) -> BigRational {
    BigRational::from(BigInt::from(n))
}

/// Structure constants of an algebra on generators `X_1..X_n`.
#[derive(Debug, Clone)]
pub struct StructureConstants {
    dim: usize,
    c: Vec<BigRational>,
    jacobi: OnceLock<bool>,
}

impl PartialEq for StructureConstants {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.c == other.c
    }
}

impl Eq for StructureConstants {}

impl StructureConstants {
    /// The abelian algebra of the given dimension (all brackets zero).
    pub fn new(dim: usize) -> Self {
        StructureConstants {
            dim,
            c: vec![BigRational::zero(); dim * dim * dim],
            jacobi: OnceLock::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i - 1) * self.dim * self.dim + (j - 1) * self.dim + (k - 1)
    }

    /// `C_ij^k`; all indices 1-based.
    #[inline]
    pub fn coeff(&self, i: usize, j: usize, k: usize) -> &BigRational {
        &self.c[self.idx(i, j, k)]
    }

    /// Sets `C_ij^k = value` and `C_ji^k = -value`.
    pub fn set_bracket(&mut self, i: usize, j: usize, k: usize, value: BigRational) -> Result<()> {
        for index in [i, j, k] {
            if index < 1 || index > self.dim {
                return Err(Error::GeneratorOutOfRange {
                    index,
                    dim: self.dim,
                });
            }
        }
        if i == j {
            if !value.is_zero() {
                return Err(Error::DiagonalBracket { i });
            }
            return Ok(());
        }
        let neg = -&value;
        let a = self.idx(i, j, k);
        let b = self.idx(j, i, k);
        self.c[a] = value;
        self.c[b] = neg;
        self.jacobi = OnceLock::new();
        Ok(())
    }

    pub fn set_bracket_i64(&mut self, i: usize, j: usize, k: usize, value: i64) -> Result<()> {
        self.set_bracket(i, j, k, rat(value))
    }

    /// Coordinates of `[u, v]` for coordinate vectors `u`, `v`.
    pub fn bracket(&self, u: &[BigRational], v: &[BigRational]) -> Vec<BigRational> {
        let n = self.dim;
        let mut out = vec![BigRational::zero(); n];
        for i in 1..=n {
            if u[i - 1].is_zero() {
                continue;
            }
            for j in 1..=n {
                if v[j - 1].is_zero() {
                    continue;
                }
                let uv = &u[i - 1] * &v[j - 1];
                for k in 1..=n {
                    let c = self.coeff(i, j, k);
                    if !c.is_zero() {
                        out[k - 1] += &uv * c;
                    }
                }
            }
        }
        out
    }

    /// Largest absolute value of the Jacobi expression
    /// `sum_l (C_ij^l C_lk^m + C_jk^l C_li^m + C_ki^l C_lj^m)`
    /// over all index choices; zero exactly when the constants define a Lie
    /// algebra. Antisymmetry makes the expression vanish unless `i < j < k`
    /// up to permutation, so only those triples are scanned.
    pub fn jacobi_defect(&self) -> BigRational {
        let n = self.dim;
        let mut worst = BigRational::zero();
        for i in 1..=n {
            for j in (i + 1)..=n {
                for k in (j + 1)..=n {
                    for m in 1..=n {
                        let mut sum = BigRational::zero();
                        for l in 1..=n {
                            let t1 = self.coeff(i, j, l);
                            if !t1.is_zero() {
                                sum += t1 * self.coeff(l, k, m);
                            }
                            let t2 = self.coeff(j, k, l);
                            if !t2.is_zero() {
                                sum += t2 * self.coeff(l, i, m);
                            }
                            let t3 = self.coeff(k, i, l);
                            if !t3.is_zero() {
                                sum += t3 * self.coeff(l, j, m);
                            }
                        }
                        let mag = sum.abs();
                        if mag > worst {
                            worst = mag;
                        }
                    }
                }
            }
        }
        worst
    }

    /// Cached Jacobi test.
    pub fn is_lie(&self) -> bool {
        *self.jacobi.get_or_init(|| self.jacobi_defect().is_zero())
    }

    /// The Killing-Cartan metric `g_ij = sum_{k,l} C_ik^l C_jl^k`.
    pub fn killing_metric(&self) -> Result<MetricMatrix> {
        if !self.is_lie() {
            return Err(Error::NotLie);
        }
        let n = self.dim;
        MetricMatrix::from_fn(n, |i, j| {
            let mut sum = BigRational::zero();
            for k in 1..=n {
                for l in 1..=n {
                    let a = self.coeff(i, k, l);
                    if !a.is_zero() {
                        sum += a * self.coeff(j, l, k);
                    }
                }
            }
            sum
        })
    }

    pub fn is_abelian(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    /// Derived series `D_0 = g`, `D_{t+1} = [D_t, D_t]` reaches zero.
    pub fn is_solvable(&self) -> Result<bool> {
        if !self.is_lie() {
            return Err(Error::NotLie);
        }
        let mut basis = identity_basis(self.dim);
        loop {
            let next = self.bracket_span(&basis, &basis);
            if next.is_empty() {
                return Ok(true);
            }
            if next.len() >= basis.len() {
                return Ok(false);
            }
            basis = next;
        }
    }

    /// Lower central series `L_0 = g`, `L_{t+1} = [L_t, g]` reaches zero.
    pub fn is_nilpotent(&self) -> Result<bool> {
        if !self.is_lie() {
            return Err(Error::NotLie);
        }
        let full = identity_basis(self.dim);
        let mut basis = full.clone();
        loop {
            let next = self.bracket_span(&basis, &full);
            if next.is_empty() {
                return Ok(true);
            }
            if next.len() >= basis.len() {
                return Ok(false);
            }
            basis = next;
        }
    }

    /// Nondegeneracy of the Killing-Cartan metric, decided exactly.
    pub fn is_semisimple(&self) -> Result<bool> {
        Ok(!self.killing_metric()?.determinant().is_zero())
    }

    /// Semisimple with negative-definite Killing-Cartan metric.
    pub fn is_compact(&self) -> Result<bool> {
        if !self.is_semisimple()? {
            return Ok(false);
        }
        let sig = self
            .killing_metric()?
            .eigen_signature(DEFAULT_EIGEN_TOLERANCE);
        Ok(sig.n_neg == self.dim)
    }

    /// True iff the brackets respect `[V0,V0] in V0`, `[V0,V1] in V1`,
    /// `[V1,V1] in V0` at the structure-constant level.
    pub fn check_subspace_structure(&self, d: &SubspaceDecomposition) -> bool {
        let n = self.dim;
        if d.ambient() != n {
            return false;
        }
        for i in 1..=n {
            for j in 1..=n {
                for k in 1..=n {
                    if self.coeff(i, j, k).is_zero() {
                        continue;
                    }
                    let target_in_v0 = d.in_v0(i) == d.in_v0(j);
                    let ok = if target_in_v0 {
                        d.in_v0(k)
                    } else {
                        !d.in_v0(k)
                    };
                    if !ok {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Adjoint boxes: for each generator `i` the matrix `(C_ij^k)_{j,k}`.
    pub fn show_adjoint(&self) -> String {
        let n = self.dim;
        let mut out = String::new();
        for i in 1..=n {
            out.push_str("*********\n");
            let _ = writeln!(out, "Adj [ X_{{{i}}} ] = ( C_{{{i},j}}^{{k}} ) =");
            for j in 1..=n {
                let row: Vec<String> = (1..=n)
                    .map(|k| format_rational(self.coeff(i, j, k)))
                    .collect();
                let width = row.iter().map(String::len).max().unwrap_or(1);
                let padded: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
                let _ = writeln!(out, " {}", padded.join(" "));
            }
        }
        out
    }

    /// Nonzero independent brackets `(i, j, k, C_ij^k)` with `i < j`.
    pub fn nonzero_brackets(&self) -> Vec<(usize, usize, usize, BigRational)> {
        let n = self.dim;
        let mut out = Vec::new();
        for i in 1..=n {
            for j in (i + 1)..=n {
                for k in 1..=n {
                    let c = self.coeff(i, j, k);
                    if !c.is_zero() {
                        out.push((i, j, k, c.clone()));
                    }
                }
            }
        }
        out
    }

    /// `sl(2)` in the basis with `[X1,X2] = -2 X3`, `[X1,X3] = 2 X2`,
    /// `[X2,X3] = 2 X1`.
    pub fn sl2() -> Self {
        let mut g = Self::new(3);
        g.set_bracket_i64(1, 2, 3, -2).unwrap();
        g.set_bracket_i64(1, 3, 2, 2).unwrap();
        g.set_bracket_i64(2, 3, 1, 2).unwrap();
        g
    }

    /// `sl(2)` in the Cartan-Weyl basis `{h, e, f}`: `[h,e] = 2e`,
    /// `[h,f] = -2f`, `[e,f] = h`.
    pub fn sl2_cartan_weyl() -> Self {
        let mut g = Self::new(3);
        g.set_bracket_i64(1, 2, 2, 2).unwrap();
        g.set_bracket_i64(1, 3, 3, -2).unwrap();
        g.set_bracket_i64(2, 3, 1, 1).unwrap();
        g
    }

    /// The 2-dimensional solvable algebra `[X1,X2] = X1`.
    pub fn solv2() -> Self {
        let mut g = Self::new(2);
        g.set_bracket_i64(1, 2, 1, 1).unwrap();
        g
    }

    /// `so(3)`: `C_ij^k` the Levi-Civita symbol.
    pub fn so3() -> Self {
        let mut g = Self::new(3);
        g.set_bracket_i64(1, 2, 3, 1).unwrap();
        g.set_bracket_i64(2, 3, 1, 1).unwrap();
        g.set_bracket_i64(3, 1, 2, 1).unwrap();
        g
    }

    pub fn abelian(dim: usize) -> Self {
        Self::new(dim)
    }

    /// Resolves a built-in algebra by CLI name.
    pub fn builtin(name: &str) -> Option<Self> {
        match name {
            "sl2" => Some(Self::sl2()),
            "sl2cw" => Some(Self::sl2_cartan_weyl()),
            "solv2" => Some(Self::solv2()),
            "so3" => Some(Self::so3()),
            _ => name
                .strip_prefix("abelian")
                .and_then(|d| d.parse::<usize>().ok())
                .map(Self::abelian),
        }
    }

    /// Parses the algebra text format: `dim <n>` then one line
    /// `i j k value` per independent nonzero constant with `i < j`.
    pub fn parse(text: &str) -> Result<Self> {
        Self::parse_named(text, "<algebra>")
    }

    pub fn parse_named(text: &str, path: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty());
        let (lno, header) = lines
            .next()
            .ok_or_else(|| Error::parse(path, 1, "empty input"))?;
        let dim: usize = header
            .trim()
            .strip_prefix("dim")
            .map(str::trim)
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::parse(path, lno + 1, "expected header `dim <n>`"))?;
        let mut g = Self::new(dim);
        for (lno, line) in lines {
            let parts: Vec<&str> = line.split_whitespace().collect();
            if parts.len() != 4 {
                return Err(Error::parse(path, lno + 1, "expected `i j k value`"));
            }
            let nums: Vec<usize> = parts[..3]
                .iter()
                .map(|w| {
                    w.parse()
                        .map_err(|_| Error::parse(path, lno + 1, format!("bad index `{w}`")))
                })
                .collect::<Result<_>>()?;
            let (i, j, k) = (nums[0], nums[1], nums[2]);
            if i >= j {
                return Err(Error::parse(path, lno + 1, "indices must satisfy i < j"));
            }
            let value: BigRational = parts[3]
                .parse()
                .map_err(|_| Error::parse(path, lno + 1, format!("bad value `{}`", parts[3])))?;
            g.set_bracket(i, j, k, value)
                .map_err(|e| Error::parse(path, lno + 1, e.to_string()))?;
        }
        Ok(g)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("dim {}\n", self.dim);
        for (i, j, k, v) in self.nonzero_brackets() {
            let _ = writeln!(out, "{i} {j} {k} {}", format_rational(&v));
        }
        out
    }

    fn bracket_span(
        &self,
        left: &[Vec<BigRational>],
        right: &[Vec<BigRational>],
    ) -> Vec<Vec<BigRational>> {
        let mut vectors = Vec::new();
        for u in left {
            for v in right {
                let w = self.bracket(u, v);
                if !w.iter().all(Zero::is_zero) {
                    vectors.push(w);
                }
            }
        }
        reduce_to_basis(vectors)
    }
}

fn identity_basis(n: usize) -> Vec<Vec<BigRational>> {
    (0..n)
        .map(|i| {
            let mut v = vec![BigRational::zero(); n];
            v[i] = BigRational::from(BigInt::from(1));
            v
        })
        .collect()
}

/// Row-reduces the vectors over the rationals and returns a basis of their
/// span (exact Gaussian elimination).
fn reduce_to_basis(mut rows: Vec<Vec<BigRational>>) -> Vec<Vec<BigRational>> {
    let mut basis: Vec<Vec<BigRational>> = Vec::new();
    for row in rows.iter_mut() {
        let mut r = std::mem::take(row);
        for b in &basis {
            let pivot_col = b
                .iter()
                .position(|x| !x.is_zero())
                .expect("basis rows nonzero");
            if !r[pivot_col].is_zero() {
                let factor = &r[pivot_col] / &b[pivot_col];
                for (x, y) in r.iter_mut().zip(b.iter()) {
                    *x -= &factor * y;
                }
            }
        }
        if !r.iter().all(Zero::is_zero) {
            basis.push(r);
            basis.sort_by_key(|v| v.iter().position(|x| !x.is_zero()).unwrap());
        }
    }
    basis
}

/// A disjoint cover `{1..n} = V0 u V1` of generator indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubspaceDecomposition {
    v0: Subset,
    v1: Subset,
}

impl SubspaceDecomposition {
    pub fn new(v0: Subset, v1: Subset) -> Result<Self> {
        let n = v0.ambient();
        if v1.ambient() != n {
            return Err(Error::OrderMismatch {
                left: n,
                right: v1.ambient(),
            });
        }
        let disjoint = v0.iter().all(|x| !v1.contains(x));
        let covers = (1..=n).all(|x| v0.contains(x) || v1.contains(x));
        if !disjoint || !covers {
            return Err(Error::NotADisjointCover { n });
        }
        Ok(SubspaceDecomposition { v0, v1 })
    }

    pub fn from_members(n: usize, v0: &[usize], v1: &[usize]) -> Result<Self> {
        Self::new(Subset::new(n, v0)?, Subset::new(n, v1)?)
    }

    /// The `V0 = {X1}`, `V1 = {X2, X3}` grading used for `sl(2)` examples.
    pub fn sl2_default() -> Self {
        Self::from_members(3, &[1], &[2, 3]).unwrap()
    }

    /// A grading of the 2-dimensional solvable algebra: `V0 = {X2}`.
    pub fn solv2_default() -> Self {
        Self::from_members(2, &[2], &[1]).unwrap()
    }

    pub fn ambient(&self) -> usize {
        self.v0.ambient()
    }

    #[inline]
    pub fn in_v0(&self, index: usize) -> bool {
        self.v0.contains(index)
    }

    pub fn v0(&self) -> &Subset {
        &self.v0
    }

    pub fn v1(&self) -> &Subset {
        &self.v1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent double-sum oracle for the Killing metric.
    fn killing_oracle(g: &StructureConstants) -> Vec<Vec<BigRational>> {
        let n = g.dim();
        (1..=n)
            .map(|i| {
                (1..=n)
                    .map(|j| {
                        let mut sum = BigRational::zero();
                        for k in 1..=n {
                            for l in 1..=n {
                                sum += g.coeff(i, k, l) * g.coeff(j, l, k);
                            }
                        }
                        sum
                    })
                    .collect()
            })
            .collect()
    }

    #[test]
    fn set_bracket_antisymmetry() {
        let mut g = StructureConstants::new(3);
        g.set_bracket_i64(1, 2, 3, -2).unwrap();
        assert_eq!(*g.coeff(2, 1, 3), rat(2));
        assert_eq!(*g.coeff(1, 2, 3), rat(-2));
        assert!(matches!(
            g.set_bracket_i64(1, 1, 2, 1),
            Err(Error::DiagonalBracket { i: 1 })
        ));
        assert!(g.set_bracket_i64(1, 1, 2, 0).is_ok());
        assert!(g.set_bracket_i64(4, 1, 2, 1).is_err());
    }

    #[test]
    fn jacobi_defect_of_known_algebras() {
        assert!(StructureConstants::sl2().jacobi_defect().is_zero());
        assert!(StructureConstants::abelian(4).jacobi_defect().is_zero());
        assert!(StructureConstants::solv2().jacobi_defect().is_zero());
        assert!(StructureConstants::sl2_cartan_weyl()
            .jacobi_defect()
            .is_zero());

        // [X1,X2]=X3, [X1,X3]=X1 violates Jacobi
        let mut bad = StructureConstants::new(3);
        bad.set_bracket_i64(1, 2, 3, 1).unwrap();
        bad.set_bracket_i64(1, 3, 1, 1).unwrap();
        assert!(!bad.jacobi_defect().is_zero());
        assert!(bad.killing_metric().is_err());
    }

    #[test]
    fn killing_metric_of_sl2() {
        let m = StructureConstants::sl2().killing_metric().unwrap();
        assert_eq!(m.get_i64(1, 1), Some(-8));
        assert_eq!(m.get_i64(2, 2), Some(8));
        assert_eq!(m.get_i64(3, 3), Some(8));
        assert!(m.is_diagonal());
        assert_eq!(m.determinant(), rat(-512));
    }

    #[test]
    fn killing_metric_matches_oracle() {
        for g in [
            StructureConstants::sl2(),
            StructureConstants::solv2(),
            StructureConstants::so3(),
            StructureConstants::sl2_cartan_weyl(),
        ] {
            let m = g.killing_metric().unwrap();
            let oracle = killing_oracle(&g);
            for i in 1..=g.dim() {
                for j in 1..=g.dim() {
                    assert_eq!(*m.get(i, j), oracle[i - 1][j - 1]);
                }
            }
        }
    }

    #[test]
    fn killing_metric_of_solv2_and_abelian() {
        let m = StructureConstants::solv2().killing_metric().unwrap();
        assert_eq!(m.get_i64(1, 1), Some(0));
        assert_eq!(m.get_i64(1, 2), Some(0));
        assert_eq!(m.get_i64(2, 2), Some(1));

        let z = StructureConstants::abelian(3).killing_metric().unwrap();
        assert_eq!(z, MetricMatrix::zero(3));
    }

    #[test]
    fn killing_metric_is_ad_invariant() {
        for g in [
            StructureConstants::sl2(),
            StructureConstants::so3(),
            StructureConstants::solv2(),
        ] {
            let n = g.dim();
            let m = g.killing_metric().unwrap();
            for i in 1..=n {
                for j in 1..=n {
                    for k in 1..=n {
                        let mut sum = BigRational::zero();
                        for l in 1..=n {
                            sum += g.coeff(i, j, l) * m.get(l, k);
                            sum += g.coeff(i, k, l) * m.get(j, l);
                        }
                        assert!(sum.is_zero(), "ad-invariance fails at ({i},{j},{k})");
                    }
                }
            }
        }
    }

    #[test]
    fn classification_predicates() {
        let sl2 = StructureConstants::sl2();
        assert!(sl2.is_semisimple().unwrap());
        assert!(!sl2.is_compact().unwrap());
        assert!(!sl2.is_abelian());
        assert!(!sl2.is_solvable().unwrap());
        assert!(!sl2.is_nilpotent().unwrap());

        let so3 = StructureConstants::so3();
        assert!(so3.is_semisimple().unwrap());
        assert!(so3.is_compact().unwrap());
        let m = so3.killing_metric().unwrap();
        assert_eq!(m.get_i64(1, 1), Some(-2));
        assert!(m.is_diagonal());

        let solv2 = StructureConstants::solv2();
        assert!(!solv2.is_abelian());
        assert!(solv2.is_solvable().unwrap());
        assert!(!solv2.is_nilpotent().unwrap());
        assert!(!solv2.is_semisimple().unwrap());

        let ab = StructureConstants::abelian(3);
        assert!(ab.is_abelian());
        assert!(ab.is_solvable().unwrap());
        assert!(ab.is_nilpotent().unwrap());
        assert!(!ab.is_semisimple().unwrap());

        // heisenberg: [X1,X2] = X3 is nilpotent and solvable, not abelian
        let mut h = StructureConstants::new(3);
        h.set_bracket_i64(1, 2, 3, 1).unwrap();
        assert!(!h.is_abelian());
        assert!(h.is_nilpotent().unwrap());
        assert!(h.is_solvable().unwrap());
    }

    #[test]
    fn subspace_structure_checks() {
        let sl2 = StructureConstants::sl2();
        assert!(sl2.check_subspace_structure(&SubspaceDecomposition::sl2_default()));
        // every single-generator V0 grades sl(2) in this basis
        assert!(sl2.check_subspace_structure(
            &SubspaceDecomposition::from_members(3, &[2], &[1, 3]).unwrap()
        ));
        assert!(sl2.check_subspace_structure(
            &SubspaceDecomposition::from_members(3, &[3], &[1, 2]).unwrap()
        ));
        // V0 = {1,2} fails: [X1,X2] = -2 X3 leaves V0
        assert!(!sl2.check_subspace_structure(
            &SubspaceDecomposition::from_members(3, &[1, 2], &[3]).unwrap()
        ));

        let ab = StructureConstants::abelian(4);
        assert!(ab.check_subspace_structure(
            &SubspaceDecomposition::from_members(4, &[1, 3], &[2, 4]).unwrap()
        ));

        assert!(SubspaceDecomposition::from_members(3, &[1, 2], &[2, 3]).is_err());
        assert!(SubspaceDecomposition::from_members(3, &[1], &[3]).is_err());
    }

    #[test]
    fn solvable_grading_of_solv2() {
        let g = StructureConstants::solv2();
        assert!(g.check_subspace_structure(&SubspaceDecomposition::solv2_default()));
    }

    #[test]
    fn adjoint_boxes_of_sl2() {
        let text = StructureConstants::sl2().show_adjoint();
        assert!(text.contains("Adj [ X_{1} ] = ( C_{1,j}^{k} ) ="));
        let box1: Vec<&str> = text.lines().skip(2).take(3).collect();
        assert_eq!(
            box1[0].split_whitespace().collect::<Vec<_>>(),
            vec!["0", "0", "0"]
        );
        assert_eq!(
            box1[1].split_whitespace().collect::<Vec<_>>(),
            vec!["0", "0", "-2"]
        );
        assert_eq!(
            box1[2].split_whitespace().collect::<Vec<_>>(),
            vec!["0", "2", "0"]
        );
        assert_eq!(text.matches("Adj [").count(), 3);

        let all_zero = StructureConstants::abelian(2).show_adjoint();
        for line in all_zero.lines().filter(|l| l.starts_with(' ')) {
            assert!(line.split_whitespace().all(|c| c == "0"));
        }
    }

    #[test]
    fn parse_round_trip_and_errors() {
        let sl2 = StructureConstants::sl2();
        let text = sl2.to_text();
        assert_eq!(StructureConstants::parse(&text).unwrap(), sl2);

        assert!(StructureConstants::parse("dim 2\n2 1 1 1\n").is_err()); // i >= j
        assert!(StructureConstants::parse("dim 2\n1 2 1\n").is_err()); // missing value
        let half = StructureConstants::parse("dim 2\n1 2 1 1/2\n").unwrap();
        assert_eq!(
            *half.coeff(1, 2, 1),
            BigRational::new(BigInt::from(1), BigInt::from(2))
        );
    }

    #[test]
    fn builtin_lookup() {
        assert_eq!(
            StructureConstants::builtin("sl2").unwrap(),
            StructureConstants::sl2()
        );
        assert_eq!(
            StructureConstants::builtin("solv2").unwrap(),
            StructureConstants::solv2()
        );
        assert_eq!(
            StructureConstants::builtin("abelian3").unwrap(),
            StructureConstants::abelian(3)
        );
        assert!(StructureConstants::builtin("nope").is_none());
    }
}
