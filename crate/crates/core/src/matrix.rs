//! Exact symmetric matrices backing the semigroup and Killing-Cartan metrics.
//!
//! Entries are arbitrary-precision rationals so degeneracy questions
//! (semisimplicity) are decided exactly; floating point appears only in the
//! eigenvalue signature, behind an explicit tolerance.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Counts of eigenvalues of a symmetric matrix by sign, at tolerance `tau`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EigenSignature {
    pub n_pos: usize,
    pub n_neg: usize,
    pub n_zero: usize,
}

impl fmt::Display for EigenSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}+, {}-, {}0)", self.n_pos, self.n_neg, self.n_zero)
    }
}

/// Default relative tolerance for eigenvalue sign classification.
pub const DEFAULT_EIGEN_TOLERANCE: f64 = 1e-9;

/// A symmetric matrix with exact rational entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MetricMatrix {
    dim: usize,
    entries: Vec<BigRational>,
}

impl MetricMatrix {
    /// Builds the matrix from an entry function on 1-based indices and
    /// checks symmetry.
    pub fn from_fn(dim: usize, f: impl Fn(usize, usize) -> BigRational) -> Result<Self> {
        let mut entries = vec![BigRational::zero(); dim * dim];
        for i in 1..=dim {
            for j in 1..=dim {
                entries[(i - 1) * dim + (j - 1)] = f(i, j);
            }
        }
        let m = MetricMatrix { dim, entries };
        for i in 1..=dim {
            for j in (i + 1)..=dim {
                if m.get(i, j) != m.get(j, i) {
                    return Err(Error::AsymmetricMetric { i, j });
                }
            }
        }
        Ok(m)
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let dim = rows.len();
        Self::from_fn(dim, |i, j| {
            BigRational::from(BigInt::from(rows[i - 1][j - 1]))
        })
    }

    pub fn zero(dim: usize) -> Self {
        MetricMatrix {
            dim,
            entries: vec![BigRational::zero(); dim * dim],
        }
    }

    pub fn diagonal(values: &[i64]) -> Self {
        let dim = values.len();
        let mut m = Self::zero(dim);
        for (i, &v) in values.iter().enumerate() {
            m.entries[i * dim + i] = BigRational::from(BigInt::from(v));
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Entry at 1-based `(i, j)`.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[(i - 1) * self.dim + (j - 1)]
    }

    /// Entry as `i64` when it is an integer in range.
    pub fn get_i64(&self, i: usize, j: usize) -> Option<i64> {
        let e = self.get(i, j);
        if e.denom().is_one() {
            e.numer().to_i64()
        } else {
            None
        }
    }

    pub fn is_diagonal(&self) -> bool {
        (1..=self.dim).all(|i| (1..=self.dim).all(|j| i == j || self.get(i, j).is_zero()))
    }

    /// Exact determinant.
    ///
    /// The matrix is scaled by the common denominator and the determinant of
    /// the resulting integer matrix is computed by fraction-free Bareiss
    /// elimination, so no rounding occurs at any point.
    pub fn determinant(&self) -> BigRational {
        let n = self.dim;
        if n == 0 {
            return BigRational::one();
        }
        let mut scale = BigInt::one();
        for e in &self.entries {
            scale = scale.lcm(e.denom());
        }
        let mut a: Vec<BigInt> = self
            .entries
            .iter()
            .map(|e| e.numer() * (&scale / e.denom()))
            .collect();

        let mut sign = 1i32;
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[k * n + k].is_zero() {
                match (k + 1..n).find(|&r| !a[r * n + k].is_zero()) {
                    Some(r) => {
                        for c in 0..n {
                            a.swap(k * n + c, r * n + c);
                        }
                        sign = -sign;
                    }
                    None => return BigRational::zero(),
                }
            }
            for i in (k + 1)..n {
                for j in (k + 1)..n {
                    let num = &a[i * n + j] * &a[k * n + k] - &a[i * n + k] * &a[k * n + j];
                    a[i * n + j] = num / &prev; // exact division (Bareiss)
                }
            }
            for i in (k + 1)..n {
                a[i * n + k] = BigInt::zero();
            }
            prev = a[k * n + k].clone();
        }
        let det_int = a[(n - 1) * n + (n - 1)].clone() * BigInt::from(sign);
        let mut denom = BigInt::one();
        for _ in 0..n {
            denom *= &scale;
        }
        BigRational::new(det_int, denom)
    }

    /// Sign counts of the real spectrum; eigenvalues with
    /// `|lambda| <= tau * max|entry|` count as zero.
    pub fn eigen_signature(&self, tau: f64) -> EigenSignature {
        let eigs = self.eigenvalues();
        let max_abs = self
            .entries
            .iter()
            .map(|e| e.abs())
            .max()
            .unwrap_or_else(BigRational::zero);
        let threshold = tau * max_abs.to_f64().unwrap_or(0.0);
        let mut sig = EigenSignature {
            n_pos: 0,
            n_neg: 0,
            n_zero: 0,
        };
        for l in eigs {
            if l.abs() <= threshold {
                sig.n_zero += 1;
            } else if l > 0.0 {
                sig.n_pos += 1;
            } else {
                sig.n_neg += 1;
            }
        }
        sig
    }

    /// Real eigenvalues by cyclic Jacobi rotations, ascending.
    ///
    /// Accuracy contract: off-diagonal norm is driven below
    /// `1e-14 * max|entry| * dim`, far tighter than the default signature
    /// tolerance.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let n = self.dim;
        let mut a: Vec<f64> = self
            .entries
            .iter()
            .map(|e| e.to_f64().unwrap_or(0.0))
            .collect();
        let idx = |i: usize, j: usize| i * n + j;
        let max_abs = a.iter().fold(0.0f64, |m, &x| m.max(x.abs()));
        if n == 0 {
            return vec![];
        }
        if max_abs > 0.0 {
            let target = 1e-14 * max_abs * n as f64;
            for _sweep in 0..100 {
                let mut off = 0.0f64;
                for i in 0..n {
                    for j in (i + 1)..n {
                        off += a[idx(i, j)].abs();
                    }
                }
                if off <= target {
                    break;
                }
                for p in 0..n {
                    for q in (p + 1)..n {
                        let apq = a[idx(p, q)];
                        if apq.abs() <= target / (n * n) as f64 {
                            continue;
                        }
                        let app = a[idx(p, p)];
                        let aqq = a[idx(q, q)];
                        let theta = (aqq - app) / (2.0 * apq);
                        let t = if theta >= 0.0 {
                            1.0 / (theta + (1.0 + theta * theta).sqrt())
                        } else {
                            1.0 / (theta - (1.0 + theta * theta).sqrt())
                        };
                        let c = 1.0 / (1.0 + t * t).sqrt();
                        let s = t * c;
                        for k in 0..n {
                            let akp = a[idx(k, p)];
                            let akq = a[idx(k, q)];
                            a[idx(k, p)] = c * akp - s * akq;
                            a[idx(k, q)] = s * akp + c * akq;
                        }
                        for k in 0..n {
                            let apk = a[idx(p, k)];
                            let aqk = a[idx(q, k)];
                            a[idx(p, k)] = c * apk - s * aqk;
                            a[idx(q, k)] = s * apk + c * aqk;
                        }
                    }
                }
            }
        }
        let mut eigs: Vec<f64> = (0..n).map(|i| a[idx(i, i)]).collect();
        eigs.sort_by(|x, y| x.partial_cmp(y).unwrap());
        eigs
    }

    /// Kronecker product `self (x) other`: entry at the pair index
    /// `((i-1)*d + k, (j-1)*d + l)` is `self[i,j] * other[k,l]`.
    pub fn kronecker(&self, other: &MetricMatrix) -> MetricMatrix {
        let n = self.dim;
        let d = other.dim;
        let dim = n * d;
        let mut entries = vec![BigRational::zero(); dim * dim];
        for i in 1..=n {
            for j in 1..=n {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 1..=d {
                    for l in 1..=d {
                        let v = a * other.get(k, l);
                        entries[((i - 1) * d + k - 1) * dim + ((j - 1) * d + l - 1)] = v;
                    }
                }
            }
        }
        MetricMatrix { dim, entries }
    }

    /// Rows rendered as exact numbers (integers without a decimal point).
    pub fn show(&self) -> String {
        let cells: Vec<Vec<String>> = (1..=self.dim)
            .map(|i| {
                (1..=self.dim)
                    .map(|j| format_rational(self.get(i, j)))
                    .collect()
            })
            .collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        let mut out = String::new();
        for row in cells {
            let padded: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            out.push_str(&format!(" {}\n", padded.join(" ")));
        }
        out
    }
}

/// `-2` rather than `-2/1`; nontrivial denominators print as `a/b`.
pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
