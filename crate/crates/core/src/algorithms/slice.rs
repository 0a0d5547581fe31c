//! Baseline search that peels one dimension at a time.

use crate::array::{IndexTuple, MonotoneArray};
use crate::comparator::{CountingComparator, SearchOutcome};

use super::matrix::search_slab;
use super::slab::MatrixSlab;

/// Fixes the first subscript to `1..=n` in turn and searches each
/// `(d-1)`-dimensional slice, bottoming out at the matrix walk for `d = 2`.
/// Uses at most `(2n - 1) * n^(d-2)` comparisons on a cubic array, and
/// `m + n - 1` for an `m x n` matrix.
pub fn slice_search(a: &MonotoneArray, cmp: &mut CountingComparator) -> SearchOutcome {
    assert!(a.dims() >= 2, "slice_search requires d >= 2");
    let found = if a.is_empty() {
        None
    } else {
        let mut pinned = Vec::with_capacity(a.dims() - 2);
        slice_recurse(a, &mut pinned, cmp)
    };
    SearchOutcome::from_parts(found, cmp)
}

fn slice_recurse(
    a: &MonotoneArray,
    pinned: &mut Vec<(usize, usize)>,
    cmp: &mut CountingComparator,
) -> Option<IndexTuple> {
    let depth = pinned.len();
    let d = a.dims();
    if d - depth == 2 {
        let slab = MatrixSlab::new(
            a,
            pinned,
            d - 2,
            0,
            a.shape()[d - 2],
            d - 1,
            0,
            a.shape()[d - 1],
        );
        return search_slab(&slab, cmp);
    }
    for coord in 0..a.shape()[depth] {
        pinned.push((depth, coord));
        let found = slice_recurse(a, pinned, cmp);
        pinned.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}

/// `(2n - 1) * n^(d-2)` for cubic `d >= 2`; equals `2n - 1` for a square
/// matrix.
pub fn slice_budget(d: usize, n: usize) -> u128 {
    if n == 0 {
        return 0;
    }
    (2 * n as u128 - 1) * (n as u128).pow(d as u32 - 2)
}
