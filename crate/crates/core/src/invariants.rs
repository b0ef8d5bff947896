//! Abelianization and mod-2 screens.
//!
//! The exponent matrix of a balanced presentation changes under every move by
//! a unimodular row or column operation (or a direct sum with `[1]`), so its
//! absolute determinant is an invariant of the whole extended move set. Over
//! the two-element field the row space is preserved by the stable moves, up to
//! the coordinate added by stabilization.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::presentation::Presentation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("matrix is {rows}x{cols}, not square")]
    NotSquare { rows: usize, cols: usize },
}

/// Row `i` is the exponent-sum vector of relator `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExponentMatrix {
    pub n_cols: usize,
    pub rows: Vec<Vec<i64>>,
}

impl ExponentMatrix {
    pub fn new(n_cols: usize, rows: Vec<Vec<i64>>) -> ExponentMatrix {
        assert!(
            rows.iter().all(|r| r.len() == n_cols),
            "ragged exponent matrix"
        );
        ExponentMatrix { n_cols, rows }
    }

    pub fn identity(n: usize) -> ExponentMatrix {
        let rows = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        ExponentMatrix { n_cols: n, rows }
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn is_square(&self) -> bool {
        self.rows.len() == self.n_cols
    }
}

pub fn exponent_matrix(p: &Presentation) -> ExponentMatrix {
    let n = p.n_generators();
    let rows = p
        .relators()
        .iter()
        .map(|w| {
            w.exponent_vector(n)
                .expect("presentation invariant: letters in range")
        })
        .collect();
    ExponentMatrix { n_cols: n, rows }
}

/// Exact `|det|` by fraction-free (Bareiss) elimination.
pub fn abs_det(m: &ExponentMatrix) -> Result<BigUint, InvariantError> {
    if !m.is_square() {
        return Err(InvariantError::NotSquare {
            rows: m.n_rows(),
            cols: m.n_cols,
        });
    }
    let n = m.n_cols;
    if n == 0 {
        return Ok(BigUint::from(1u32));
    }
    let mut a: Vec<Vec<BigInt>> = m
        .rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut prev = BigInt::from(1);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                // row swaps only flip the sign
                Some(r) => a.swap(k, r),
                None => return Ok(BigUint::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    Ok(a[n - 1][n - 1]
        .abs()
        .to_biguint()
        .expect("absolute value is nonnegative"))
}

/// Reduced row-echelon basis of a row space over the two-element field.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Mod2RowSpace {
    pub n_cols: usize,
    pub basis: Vec<Vec<bool>>,
}

impl Mod2RowSpace {
    pub fn from_rows(n_cols: usize, rows: impl IntoIterator<Item = Vec<bool>>) -> Mod2RowSpace {
        let mut rows: Vec<Vec<bool>> = rows.into_iter().collect();
        let mut pivot_row = 0;
        for col in 0..n_cols {
            let Some(r) = (pivot_row..rows.len()).find(|&r| rows[r][col]) else {
                continue;
            };
            rows.swap(pivot_row, r);
            let pivot = rows[pivot_row].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != pivot_row && row[col] {
                    for (x, &p) in row.iter_mut().zip(&pivot) {
                        *x ^= p;
                    }
                }
            }
            pivot_row += 1;
        }
        rows.truncate(pivot_row);
        Mod2RowSpace {
            n_cols,
            basis: rows,
        }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Appends `extra` coordinates, each with its unit vector added to the span.
    pub fn padded(&self, extra: usize) -> Mod2RowSpace {
        let n = self.n_cols + extra;
        let mut rows: Vec<Vec<bool>> = self
            .basis
            .iter()
            .map(|r| {
                let mut v = r.clone();
                v.resize(n, false);
                v
            })
            .collect();
        for k in self.n_cols..n {
            let mut e = vec![false; n];
            e[k] = true;
            rows.push(e);
        }
        Mod2RowSpace::from_rows(n, rows)
    }

    /// Whether `v` lies in the span.
    pub fn contains(&self, v: &[bool]) -> bool {
        let mut v = v.to_vec();
        for row in &self.basis {
            let pivot = row.iter().position(|&b| b).expect("basis rows are nonzero");
            if v[pivot] {
                for (x, &p) in v.iter_mut().zip(row) {
                    *x ^= p;
                }
            }
        }
        v.iter().all(|&b| !b)
    }

    /// Number of span elements of each Hamming weight; `None` when the rank is too large to enumerate.
    pub fn weight_distribution(&self) -> Option<Vec<u64>> {
        if self.rank() > 20 {
            return None;
        }
        let mut counts = vec![0u64; self.n_cols + 1];
        for mask in 0u32..(1u32 << self.rank()) {
            let mut v = vec![false; self.n_cols];
            for (i, row) in self.basis.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    for (x, &p) in v.iter_mut().zip(row) {
                        *x ^= p;
                    }
                }
            }
            counts[v.iter().filter(|&&b| b).count()] += 1;
        }
        Some(counts)
    }

    fn permuted(&self, perm: &[usize]) -> Mod2RowSpace {
        let rows = self.basis.iter().map(|r| {
            let mut v = vec![false; self.n_cols];
            for (old, &b) in r.iter().enumerate() {
                v[perm[old]] = b;
            }
            v
        });
        Mod2RowSpace::from_rows(self.n_cols, rows)
    }

    pub fn bitstrings(&self) -> Vec<String> {
        self.basis
            .iter()
            .map(|r| r.iter().map(|&b| if b { '1' } else { '0' }).collect())
            .collect()
    }
}

impl fmt::Display for Mod2RowSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.bitstrings().join(", "))
    }
}

pub fn mod2_row_space(m: &ExponentMatrix) -> Mod2RowSpace {
    Mod2RowSpace::from_rows(
        m.n_cols,
        m.rows
            .iter()
            .map(|r| r.iter().map(|&x| x.rem_euclid(2) == 1).collect()),
    )
}

pub fn presentation_mod2(p: &Presentation) -> Mod2RowSpace {
    mod2_row_space(&exponent_matrix(p))
}

/// Largest padded dimension for which coordinate permutations are searched exhaustively.
const PERMUTATION_SEARCH_LIMIT: usize = 8;

/// Mod-2 screen for stable equivalence.
///
/// Both row spaces are padded with unit vectors (the effect of stabilization)
/// to a common dimension and compared up to a permutation of coordinates, which
/// accounts for generator renaming and the reindexing done by destabilization.
/// `false` certifies the presentations are not stably equivalent; `true` is
/// inconclusive. Above the permutation-search limit only rank and weight
/// distribution are compared.
pub fn sac_compatible(p1: &Presentation, p2: &Presentation) -> bool {
    row_spaces_compatible(&presentation_mod2(p1), &presentation_mod2(p2))
}

pub fn row_spaces_compatible(s1: &Mod2RowSpace, s2: &Mod2RowSpace) -> bool {
    let n = s1.n_cols.max(s2.n_cols);
    let a = s1.padded(n - s1.n_cols);
    let b = s2.padded(n - s2.n_cols);
    if a.rank() != b.rank() {
        return false;
    }
    if a == b {
        return true;
    }
    if let (Some(wa), Some(wb)) = (a.weight_distribution(), b.weight_distribution()) {
        if wa != wb {
            return false;
        }
    }
    if n > PERMUTATION_SEARCH_LIMIT {
        return true;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    any_permutation(&mut perm, 0, &mut |p| a.permuted(p) == b)
}

fn any_permutation(perm: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
    if k == perm.len() {
        return f(perm);
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        if any_permutation(perm, k + 1, f) {
            perm.swap(k, i);
            return true;
        }
        perm.swap(k, i);
    }
    false
}
