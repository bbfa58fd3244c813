//! Minimal nonnegative solutions of homogeneous linear Diophantine systems,
//! cancellable pairs, and the norm bound that certifies search completeness.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::budget::Budget;
use crate::error::Error;
use crate::linalg::{columns_to_rows, norm_1_inf, rank, IntVec};
use crate::Result;

/// `(1 + norm1inf)^r`, the 1-norm bound on minimal solutions.
pub fn pottier_bound(norm1inf: u64, r: u32) -> BigUint {
    (BigUint::one() + BigUint::from(norm1inf)).pow(r)
}

fn dominates(x: &[u64], y: &[u64]) -> bool {
    x.iter().zip(y).all(|(a, b)| a >= b)
}

/// All componentwise-minimal nonzero `x ∈ ℕ^m` with `M·x = 0`, found by
/// graded enumeration up to the completeness radius `pottier_bound` with
/// dominated candidates filtered out. Test-oracle scale only.
pub fn hilbert_basis_bruteforce(rows: &[Vec<i64>]) -> Result<Vec<Vec<u64>>> {
    let m = rows.first().map_or(0, Vec::len);
    if rows.len() > 3 || m > 4 {
        return Err(Error::ParamRange("bruteforce basis limited to 3x4 matrices".into()));
    }
    if rows.iter().flatten().any(|&x| x.abs() > 3) {
        return Err(Error::ParamRange("bruteforce basis entries limited to [-3,3]".into()));
    }
    hilbert_basis(rows, &Budget::default())
}

/// Minimal solutions of `M·x = 0` over ℕ, by the incremental frontier search:
/// grow candidates one unit at a time, only in directions that move the
/// residue toward zero, and drop anything dominated by a found solution.
/// Every minimal solution has 1-norm within `pottier_bound(‖M‖_{1,∞}, rank M)`,
/// so stopping at that radius is exhaustive.
pub fn hilbert_basis(rows: &[Vec<i64>], budget: &Budget) -> Result<Vec<Vec<u64>>> {
    let m = rows.first().map_or(0, Vec::len);
    if m == 0 {
        return Ok(Vec::new());
    }
    let radius = pottier_bound(norm_1_inf(rows), rank(rows) as u32);
    let radius = radius.to_u64().unwrap_or(u64::MAX);
    let residue = |x: &[u64]| -> Vec<i64> {
        rows.iter()
            .map(|r| r.iter().zip(x).map(|(&a, &v)| a * v as i64).sum())
            .collect()
    };
    let col_residue: Vec<Vec<i64>> = (0..m)
        .map(|j| rows.iter().map(|r| r[j]).collect())
        .collect();
    let mut basis: Vec<Vec<u64>> = Vec::new();
    let mut frontier: BTreeSet<Vec<u64>> = (0..m)
        .map(|j| {
            let mut e = vec![0u64; m];
            e[j] = 1;
            e
        })
        .collect();
    let mut level = 1u64;
    let mut visited = 0usize;
    while !frontier.is_empty() {
        if level > radius {
            break; // nothing minimal lives beyond the radius
        }
        let mut next: BTreeSet<Vec<u64>> = BTreeSet::new();
        for x in &frontier {
            visited += 1;
            if visited > budget.word_cap {
                return Err(Error::resource("hilbert basis search cap"));
            }
            let r = residue(x);
            if r.iter().all(|&v| v == 0) {
                if !basis.iter().any(|b| dominates(x, b)) {
                    basis.push(x.clone());
                }
                continue;
            }
            for j in 0..m {
                // move toward zero: ⟨residue, column_j⟩ < 0
                let dot: i64 = r.iter().zip(&col_residue[j]).map(|(&a, &b)| a * b).sum();
                if dot < 0 {
                    let mut y = x.clone();
                    y[j] += 1;
                    if !basis.iter().any(|b| dominates(&y, b)) {
                        next.insert(y);
                    }
                }
            }
        }
        frontier = next;
        level += 1;
    }
    basis.sort();
    Ok(basis)
}

/// A pair of finite vector sets; `s` carries strictly positive multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CancellablePair {
    pub s: BTreeSet<IntVec>,
    pub t: BTreeSet<IntVec>,
}

impl CancellablePair {
    pub fn new(
        s: impl IntoIterator<Item = IntVec>,
        t: impl IntoIterator<Item = IntVec>,
    ) -> Result<CancellablePair> {
        let s: BTreeSet<IntVec> = s.into_iter().collect();
        let t: BTreeSet<IntVec> = t.into_iter().collect();
        let mut dims = s.iter().chain(&t).map(Vec::len);
        if let Some(d) = dims.next() {
            if dims.any(|d2| d2 != d) {
                return Err(Error::invalid("dimension mismatch in cancellable pair"));
            }
        }
        Ok(CancellablePair { s, t })
    }
}

/// Decides whether some `Σ x_i s_i + Σ y_j t_j = 0` exists with `x_i ≥ 1`,
/// `y_j ≥ 0`, all integers.
///
/// Every witness decomposes into minimal solutions of the kernel system, and
/// picking one minimal solution per `s`-column with positive entry reassembles
/// a witness. So the pair cancels iff every `s`-column is positive in some
/// minimal solution, which keeps the search inside the completeness radius.
pub fn is_cancellable(p: &CancellablePair) -> Result<bool> {
    is_cancellable_with(p, &Budget::default())
}

pub fn is_cancellable_with(p: &CancellablePair, budget: &Budget) -> Result<bool> {
    if p.s.is_empty() {
        return Ok(true);
    }
    let dim = p.s.iter().next().map_or(0, Vec::len);
    if dim == 0 {
        // zero-dimensional effects: the zero-sum condition is vacuous
        return Ok(true);
    }
    // columns: s first (t entries already in s need no separate column)
    let s_cols: Vec<IntVec> = p.s.iter().cloned().collect();
    let t_cols: Vec<IntVec> = p.t.iter().filter(|v| !p.s.contains(*v)).cloned().collect();
    let mut cols = s_cols.clone();
    cols.extend(t_cols);
    let rows = columns_to_rows(&cols, dim);
    let basis = hilbert_basis(&rows, budget)?;
    let covered = (0..s_cols.len()).all(|i| basis.iter().any(|b| b[i] > 0));
    Ok(covered)
}
