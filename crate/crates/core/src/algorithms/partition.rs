//! Partitioning an `n x n` monotone matrix around a query value.
//!
//! The same corner walk as [`matrix_search`](super::matrix::matrix_search),
//! but instead of stopping at a miss it classifies every cell: `S` holds
//! the cells strictly below the query, `L` the cells strictly above. The
//! split is stored compactly as per-column thresholds `u` and per-row
//! thresholds `v`:
//!
//! * `(i1, i2)` is in `S` iff `i1 <= u[i2]` iff `i2 <= v[i1]`,
//! * `(i1, i2)` is in `L` iff `i1 > u[i2]` iff `i2 > v[i1]`.
//!
//! A cell equal to the query can never be classified, so the walk is
//! guaranteed to hit it and exit early whenever the value is present.

use std::cmp::Ordering;

use crate::array::{IndexTuple, MonotoneArray};
use crate::comparator::CountingComparator;

use super::slab::MatrixSlab;

/// Threshold description of the `S`/`L` split of an `n x n` matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition2D {
    n: usize,
    u: Vec<usize>,
    v: Vec<usize>,
}

impl Partition2D {
    pub fn side(&self) -> usize {
        self.n
    }

    /// Largest row index whose entry in 1-based column `col` is below the
    /// query (`0` if none).
    pub fn u(&self, col: usize) -> usize {
        self.u[col - 1]
    }

    /// Largest column index whose entry in 1-based row `row` is below the
    /// query (`0` if none).
    pub fn v(&self, row: usize) -> usize {
        self.v[row - 1]
    }

    /// Column thresholds for columns `1..=n`, in order.
    pub fn u_thresholds(&self) -> &[usize] {
        &self.u
    }

    /// Row thresholds for rows `1..=n`, in order.
    pub fn v_thresholds(&self) -> &[usize] {
        &self.v
    }

    pub fn in_s(&self, row: usize, col: usize) -> bool {
        row <= self.u(col)
    }

    pub fn in_l(&self, row: usize, col: usize) -> bool {
        !self.in_s(row, col)
    }

    pub fn s_len(&self) -> usize {
        self.u.iter().sum()
    }

    pub fn l_len(&self) -> usize {
        self.n * self.n - self.s_len()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum PartitionOutcome {
    /// An entry equal to the query was hit; its 1-based index.
    Found(IndexTuple),
    Partitioned(Partition2D),
}

/// Partitions a square monotone matrix around the comparator's query using
/// at most `2n - 1` comparisons, or reports a matching entry immediately.
pub fn partition_2d(a: &MonotoneArray, cmp: &mut CountingComparator) -> PartitionOutcome {
    assert_eq!(a.dims(), 2, "partition_2d requires a 2-dimensional array");
    assert_eq!(a.shape()[0], a.shape()[1], "partition_2d requires a square matrix");
    assert!(a.shape()[0] >= 1, "partition_2d requires n >= 1");
    match partition_slab(&MatrixSlab::full(a), cmp) {
        SlabSplit::Found(index) => PartitionOutcome::Found(index),
        SlabSplit::Split { u, v } => {
            PartitionOutcome::Partitioned(Partition2D { n: a.shape()[0], u, v })
        }
    }
}

pub(crate) enum SlabSplit {
    Found(IndexTuple),
    /// Thresholds in local window coordinates: `u[c]` rows of column `c + 1`
    /// are below the query, `v[r]` columns of row `r + 1` are.
    Split { u: Vec<usize>, v: Vec<usize> },
}

/// Corner walk that classifies every cell of a square window.
pub(crate) fn partition_slab(slab: &MatrixSlab<'_>, cmp: &mut CountingComparator) -> SlabSplit {
    let n = slab.rows();
    debug_assert_eq!(n, slab.cols());
    let mut u = vec![0usize; n];
    let mut v = vec![0usize; n];
    let mut top = 0; // rows 0..top discarded into S
    let mut right = n; // columns right..n discarded into L
    while top < n && right > 0 {
        let c = right - 1;
        match cmp.compare(slab.value(top, c), || slab.index(top, c)) {
            Ordering::Equal => return SlabSplit::Found(slab.index(top, c)),
            Ordering::Greater => {
                // Row `top` joins S over the still-active columns.
                v[top] = right;
                top += 1;
            }
            Ordering::Less => {
                // Column `c` joins L; `top` rows of it were already in S.
                right -= 1;
                u[right] = top;
            }
        }
    }
    // Columns still active when the rows ran out are fully below the query.
    for uc in u.iter_mut().take(right) {
        *uc = top;
    }
    SlabSplit::Split { u, v }
}
