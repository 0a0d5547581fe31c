//! Membership search in monotone multi-dimensional arrays, with every
//! comparison counted.
//!
//! An array of side `n` and dimension `d`, nondecreasing along each axis,
//! can be searched with far fewer than `n^d` three-way comparisons. This
//! crate implements the classical routines for `d <= 2`, a dimension
//! peeling baseline, and a surface-peeling search for `d >= 4` whose count
//! stays within `d/(d-1) * n^(d-1)` plus lower-order terms, close to the
//! antichain floor of the problem. Everything is instrumented:
//!
//! * [`CountingComparator`] records the comparisons a search performs;
//! * [`bounds`] evaluates the exact recurrence ceiling and the exact
//!   middle-level lower bounds, in 128-bit arithmetic;
//! * [`harness`] sweeps generated instances, checks every call against a
//!   linear-scan oracle and its certified budget, and emits CSV;
//! * [`oracle::contains_oracle`] is the ground truth the fast paths are
//!   tested against.
//!
//! ```
//! use monotone_search::{gen_monotone, search, GenStyle};
//!
//! let a = gen_monotone(&[6, 6, 6, 6], 7, GenStyle::Strict).unwrap();
//! let x = a.get(&[2, 5, 3, 4]);
//! let outcome = search(&a, x).unwrap();
//! assert!(outcome.result.is_found());
//! assert!(outcome.comparisons <= 488); // recurrence ceiling for n=6, d=4
//! ```
//!
//! With the default `parallel` feature the harness runs its independent
//! searches on a rayon pool; disable it for a fully sequential build. The
//! results, CSV bytes included, are identical either way.

pub mod algorithms;
pub mod array;
pub mod bounds;
pub mod comparator;
pub mod generate;
pub mod harness;
pub mod oracle;

pub use algorithms::{
    binary_search, matrix_search, partition_2d, search, search_4d, search_nd, slice_search,
    Partition2D, PartitionOutcome, SearchError,
};
pub use array::{validate_monotone, IndexTuple, MonotoneArray, MonotoneReport, ShapeError};
pub use comparator::{CountingComparator, SearchOutcome, SearchResult};
pub use generate::{gen_monotone, GenStyle};
pub use oracle::contains_oracle;
