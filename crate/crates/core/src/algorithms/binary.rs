//! Three-way binary search over a 1-dimensional array.

use std::cmp::Ordering;

use crate::array::MonotoneArray;
use crate::comparator::{CountingComparator, SearchOutcome};

/// Membership search in a sorted sequence using at most
/// `ceil(log2(n + 1))` comparisons; an empty sequence costs none.
pub fn binary_search(seq: &MonotoneArray, cmp: &mut CountingComparator) -> SearchOutcome {
    assert_eq!(seq.dims(), 1, "binary_search requires a 1-dimensional array");
    let mut lo = 0;
    let mut hi = seq.len();
    let mut found = None;
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        match cmp.compare(seq.value_at_flat(mid), || vec![mid + 1]) {
            Ordering::Equal => {
                found = Some(vec![mid + 1]);
                break;
            }
            Ordering::Less => hi = mid,
            Ordering::Greater => lo = mid + 1,
        }
    }
    SearchOutcome::from_parts(found, cmp)
}

/// `ceil(log2(n + 1))`: the binary-search comparison budget.
pub fn binary_budget(n: usize) -> u64 {
    (usize::BITS - n.leading_zeros()) as u64
}
