//! Membership search procedures, from the 1-dimensional base case to the
//! surface-peeling search for `d >= 4`, plus the dispatcher that picks the
//! right one for an array's dimension.

mod binary;
mod matrix;
mod partition;
mod slab;
mod slice;
mod surface;

pub use binary::{binary_budget, binary_search};
pub use matrix::{matrix_budget, matrix_search};
pub use partition::{partition_2d, Partition2D, PartitionOutcome};
pub use slice::{slice_budget, slice_search};
pub use surface::{
    cyclic_axis, partition_face, search_4d, search_nd, surface_face, Boundary, PartitionFace,
    SurfaceFace,
};

use thiserror::Error;

use crate::array::{validate_monotone, MonotoneArray, MonotoneReport, ShapeError};
use crate::comparator::{CountingComparator, SearchOutcome};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SearchError {
    #[error(transparent)]
    Shape(ShapeError),
    #[error("array is not monotone: entry {lower:?} > entry {upper:?}")]
    NotMonotone {
        lower: crate::array::IndexTuple,
        upper: crate::array::IndexTuple,
    },
}

/// Validates the array and dispatches on its dimension: binary search for
/// `d = 1`, the matrix walk for `d = 2`, the slice baseline for `d = 3`,
/// and the surface-peeling search for `d >= 4`. Runs a fresh comparator
/// and reports its final count.
pub fn search(a: &MonotoneArray, x: f64) -> Result<SearchOutcome, SearchError> {
    match validate_monotone(a) {
        Ok(MonotoneReport::Monotone) => {}
        Ok(MonotoneReport::Violation { lower, upper }) => {
            return Err(SearchError::NotMonotone { lower, upper })
        }
        Err(e) => return Err(SearchError::Shape(e)),
    }
    let mut cmp = CountingComparator::new(x);
    Ok(search_validated(a, &mut cmp))
}

/// Dispatcher for arrays the caller has already validated.
pub fn search_validated(a: &MonotoneArray, cmp: &mut CountingComparator) -> SearchOutcome {
    match a.dims() {
        1 => binary_search(a, cmp),
        2 => matrix_search(a, cmp),
        3 => slice_search(a, cmp),
        _ => search_nd(a, cmp),
    }
}
