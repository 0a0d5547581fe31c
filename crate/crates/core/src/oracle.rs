//! Ground-truth membership by linear scan.

use std::cmp::Ordering;

use crate::array::MonotoneArray;
use crate::comparator::{CountingComparator, SearchOutcome};

/// Scans every entry in row-major order (= lexicographic index order) and
/// reports the lexicographically smallest match. Each scanned entry costs
/// one comparison; a miss costs exactly `a.len()`.
///
/// This is the testing oracle the search algorithms are checked against and
/// makes no use of monotonicity.
pub fn contains_oracle(a: &MonotoneArray, x: f64) -> SearchOutcome {
    let mut cmp = CountingComparator::new(x);
    let mut found = None;
    for flat in 0..a.len() {
        if cmp.compare(a.value_at_flat(flat), || a.unflatten(flat)) == Ordering::Equal {
            found = Some(a.unflatten(flat));
            break;
        }
    }
    SearchOutcome::from_parts(found, &cmp)
}
