//! Two-dimensional views into a multi-dimensional array.
//!
//! The partition and matrix-search routines operate on an `m x n` window
//! whose row and column directions may be any two distinct axes of the
//! underlying array, with every other coordinate pinned. Views translate
//! indices instead of copying values.

use crate::array::{IndexTuple, MonotoneArray};

pub(crate) struct MatrixSlab<'a> {
    arr: &'a MonotoneArray,
    /// Flat offset of local (0, 0).
    base_flat: usize,
    row_stride: usize,
    col_stride: usize,
    rows: usize,
    cols: usize,
    /// 0-based axis ids and global coordinates of local (0, 0), kept to
    /// reconstruct full index tuples.
    row_axis: usize,
    col_axis: usize,
    row_base: usize,
    col_base: usize,
    /// Global 0-based coordinates of the pinned axes (row/col slots unused).
    pinned: Vec<usize>,
}

impl<'a> MatrixSlab<'a> {
    /// View spanning a whole 2-dimensional array.
    pub fn full(arr: &'a MonotoneArray) -> Self {
        assert_eq!(arr.dims(), 2, "full slab requires a 2-dimensional array");
        Self::new(arr, &[], 0, 0, arr.shape()[0], 1, 0, arr.shape()[1])
    }

    /// General window: `pinned` lists `(axis, coordinate)` pairs (0-based)
    /// for every axis other than `row_axis` and `col_axis`; local row `r`
    /// maps to global coordinate `row_base + r`, likewise for columns.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        arr: &'a MonotoneArray,
        pinned: &[(usize, usize)],
        row_axis: usize,
        row_base: usize,
        rows: usize,
        col_axis: usize,
        col_base: usize,
        cols: usize,
    ) -> Self {
        debug_assert_ne!(row_axis, col_axis);
        debug_assert_eq!(pinned.len() + 2, arr.dims());
        let strides = arr.strides();
        let mut coords = vec![0usize; arr.dims()];
        for &(axis, coord) in pinned {
            coords[axis] = coord;
        }
        coords[row_axis] = row_base;
        coords[col_axis] = col_base;
        let base_flat = coords
            .iter()
            .zip(strides)
            .map(|(&c, &s)| c * s)
            .sum::<usize>();
        Self {
            arr,
            base_flat,
            row_stride: strides[row_axis],
            col_stride: strides[col_axis],
            rows,
            cols,
            row_axis,
            col_axis,
            row_base,
            col_base,
            pinned: coords,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Value at local 0-based (row, col).
    pub fn value(&self, r: usize, c: usize) -> f64 {
        debug_assert!(r < self.rows && c < self.cols);
        self.arr
            .value_at_flat(self.base_flat + r * self.row_stride + c * self.col_stride)
    }

    /// Global 1-based index tuple of local (row, col).
    pub fn index(&self, r: usize, c: usize) -> IndexTuple {
        let mut index: IndexTuple = self.pinned.iter().map(|&c0| c0 + 1).collect();
        index[self.row_axis] = self.row_base + r + 1;
        index[self.col_axis] = self.col_base + c + 1;
        index
    }
}
