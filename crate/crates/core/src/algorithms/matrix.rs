//! Corner-elimination search of a monotone matrix.

use std::cmp::Ordering;

use crate::array::{IndexTuple, MonotoneArray};
use crate::comparator::{CountingComparator, SearchOutcome};

use super::slab::MatrixSlab;

/// Searches an `m x n` monotone matrix with at most `m + n - 1`
/// comparisons (`0` when the matrix is empty).
///
/// Repeatedly compares the query against the top-right corner of the
/// remaining window: a greater query discards the first row, a smaller
/// query discards the last column, equality is a match.
pub fn matrix_search(m: &MonotoneArray, cmp: &mut CountingComparator) -> SearchOutcome {
    assert_eq!(m.dims(), 2, "matrix_search requires a 2-dimensional array");
    let found = if m.is_empty() {
        None
    } else {
        search_slab(&MatrixSlab::full(m), cmp)
    };
    SearchOutcome::from_parts(found, cmp)
}

/// `m + n - 1`, or `0` for an empty window.
pub fn matrix_budget(rows: usize, cols: usize) -> u64 {
    if rows == 0 || cols == 0 {
        0
    } else {
        (rows + cols - 1) as u64
    }
}

/// Corner walk over an arbitrary window. Shared by every higher-dimensional
/// routine; the window may be empty.
pub(crate) fn search_slab(slab: &MatrixSlab<'_>, cmp: &mut CountingComparator) -> Option<IndexTuple> {
    let rows = slab.rows();
    let mut top = 0;
    let mut right = slab.cols();
    while top < rows && right > 0 {
        let c = right - 1;
        match cmp.compare(slab.value(top, c), || slab.index(top, c)) {
            Ordering::Equal => return Some(slab.index(top, c)),
            Ordering::Greater => top += 1,
            Ordering::Less => right -= 1,
        }
    }
    None
}
