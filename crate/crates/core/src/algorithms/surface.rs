//! Surface-peeling search for monotone cubic arrays of dimension `d >= 4`.
//!
//! One round works on the current `n^d` window:
//!
//! 1. For each `k` in `1..=d`, partition the two `(d-2)`-dimensional faces
//!    obtained by pinning axis `k-2` and axis `k-1` (cyclically) to opposite
//!    boundaries. Each partition classifies its face into cells below and
//!    above the query and is stored as `(d-3)`-dimensional threshold
//!    tables. Cost: at most `2d * n^(d-4) * (2n-1)` comparisons.
//! 2. Search the `2d` boundary surfaces (axis `k` pinned to `1` or `n`).
//!    On each surface the step-1 thresholds confine a possible match to an
//!    `(n-u) x (n-v)` corner of every 2-dimensional fiber, so the whole
//!    sweep costs at most `2d * n^(d-2)` comparisons.
//!
//! The two steps cover every cell with a boundary coordinate, leaving the
//! `(n-2)^d` interior for the next round. Any comparison that hits the
//! query value returns immediately, which only lowers the count, so the
//! total stays within the recurrence evaluated by
//! [`upper_bound_recurrence`](crate::bounds::upper_bound_recurrence).

use crate::array::{IndexTuple, MonotoneArray};
use crate::comparator::{CountingComparator, SearchOutcome};

use super::matrix::search_slab;
use super::partition::{partition_slab, SlabSplit};
use super::slab::MatrixSlab;

/// Folds an axis label into `1..=d`, with residue `0` mapping to `d`.
pub fn cyclic_axis(d: usize, j: i64) -> usize {
    let r = j.rem_euclid(d as i64) as usize;
    if r == 0 {
        d
    } else {
        r
    }
}

/// Which end of an axis a face is pinned to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Boundary {
    /// Coordinate 1.
    Low,
    /// Coordinate `n`.
    High,
}

/// A `(d-2)`-dimensional face to partition in step 1, plus the roles its
/// free axes play. The plain face pins axis `k-2` low and axis `k-1` high;
/// the starred face swaps the two boundaries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionFace {
    pub k: usize,
    pub star: bool,
    /// The two pinned axes, listed as (axis `k-2`, axis `k-1`).
    pub fixed: [(usize, Boundary); 2],
    /// Axis `k`: the coordinate bounded by the `u` thresholds.
    pub row_axis: usize,
    /// Axis `k+d-3`: the coordinate bounded by the `v` thresholds.
    pub col_axis: usize,
    /// Axes `k+1 ..= k+d-4`, pinned one assignment at a time while
    /// partitioning.
    pub mid_axes: Vec<usize>,
}

pub fn partition_face(d: usize, k: usize, star: bool) -> PartitionFace {
    assert!(d >= 4, "partition faces are defined for d >= 4");
    assert!((1..=d).contains(&k));
    let ik = k as i64;
    let di = d as i64;
    let lo = cyclic_axis(d, ik - 2);
    let hi = cyclic_axis(d, ik - 1);
    let fixed = if star {
        [(lo, Boundary::High), (hi, Boundary::Low)]
    } else {
        [(lo, Boundary::Low), (hi, Boundary::High)]
    };
    PartitionFace {
        k,
        star,
        fixed,
        row_axis: cyclic_axis(d, ik),
        col_axis: cyclic_axis(d, ik + di - 3),
        mid_axes: (1..=di - 4).map(|j| cyclic_axis(d, ik + j)).collect(),
    }
}

/// A `(d-1)`-dimensional boundary surface searched in step 2: axis `k`
/// pinned low (`Q_k`) or high (starred, `Q*_k`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceFace {
    pub k: usize,
    pub star: bool,
    pub fixed: (usize, Boundary),
    /// Axis `k+1`; its range is cut by the `u` thresholds of face `k+1`.
    pub row_axis: usize,
    /// Axis `k-1`; its range is cut by the `v` thresholds of face `k+2`.
    pub col_axis: usize,
    /// Axes `k+2 ..= k+d-2`: the fiber coordinates, which are also the key
    /// into both threshold tables.
    pub mid_axes: Vec<usize>,
}

pub fn surface_face(d: usize, k: usize, star: bool) -> SurfaceFace {
    assert!(d >= 4, "boundary surfaces are defined for d >= 4");
    assert!((1..=d).contains(&k));
    let ik = k as i64;
    let di = d as i64;
    SurfaceFace {
        k,
        star,
        fixed: (k, if star { Boundary::High } else { Boundary::Low }),
        row_axis: cyclic_axis(d, ik + 1),
        col_axis: cyclic_axis(d, ik - 1),
        mid_axes: (2..=di - 2).map(|j| cyclic_axis(d, ik + j)).collect(),
    }
}

/// Dense `(d-3)`-dimensional table of partition thresholds.
///
/// Keys are 1-based coordinate tuples in the face's documented order:
/// `u` tables are keyed by `(i_{k+1}, ..., i_{k+d-3})` and `v` tables by
/// `(i_k, ..., i_{k+d-4})`. [`flat`](Self::flat) is the single source of
/// truth for the layout: row-major with the first key coordinate slowest.
struct ThresholdTable {
    n: usize,
    data: Vec<usize>,
}

impl ThresholdTable {
    fn new(n: usize, dims: usize) -> Self {
        Self {
            n,
            data: vec![0; n.pow(dims as u32)],
        }
    }

    fn flat(&self, key: &[usize]) -> usize {
        let mut f = 0;
        for &c in key {
            debug_assert!((1..=self.n).contains(&c));
            f = f * self.n + (c - 1);
        }
        f
    }

    fn get(&self, key: &[usize]) -> usize {
        self.data[self.flat(key)]
    }

    fn set(&mut self, key: &[usize], value: usize) {
        let f = self.flat(key);
        self.data[f] = value;
    }
}

/// Enumerates `{1..=n}^k` in row-major order; `k = 0` yields one empty
/// tuple.
struct TupleIter {
    n: usize,
    next: Option<Vec<usize>>,
}

impl TupleIter {
    fn new(n: usize, k: usize) -> Self {
        Self {
            n,
            next: Some(vec![1; k]),
        }
    }
}

impl Iterator for TupleIter {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        for pos in (0..succ.len()).rev() {
            if succ[pos] < self.n {
                succ[pos] += 1;
                self.next = Some(succ);
                return Some(current);
            }
            succ[pos] = 1;
        }
        Some(current)
    }
}

/// The cubic window `{off+1 ..= off+side}^d` in 0-based offsets.
#[derive(Clone, Copy)]
struct CubeView {
    off: usize,
    side: usize,
}

impl CubeView {
    fn coord0(&self, b: Boundary) -> usize {
        match b {
            Boundary::Low => self.off,
            Boundary::High => self.off + self.side - 1,
        }
    }
}

/// Searches a monotone cubic array of dimension `d >= 4`.
pub fn search_nd(a: &MonotoneArray, cmp: &mut CountingComparator) -> SearchOutcome {
    let d = a.dims();
    assert!(d >= 4, "search_nd requires d >= 4; the dispatcher owns d <= 3");
    let n = a.side();
    let before = cmp.count();
    let found = search_cube(a, CubeView { off: 0, side: n }, cmp);
    if n >= 1 {
        debug_assert!(
            (cmp.count() - before) as u128 <= crate::bounds::upper_bound_recurrence(n, d),
            "comparison budget exceeded for n={n}, d={d}"
        );
    }
    SearchOutcome::from_parts(found, cmp)
}

/// The 4-dimensional case; same engine as [`search_nd`].
pub fn search_4d(a: &MonotoneArray, cmp: &mut CountingComparator) -> SearchOutcome {
    assert_eq!(a.dims(), 4, "search_4d requires d = 4");
    search_nd(a, cmp)
}

fn search_cube(
    a: &MonotoneArray,
    view: CubeView,
    cmp: &mut CountingComparator,
) -> Option<IndexTuple> {
    let d = a.dims();
    let n = view.side;
    if n == 0 {
        return None;
    }
    if n <= 2 {
        return exhaustive(a, view, cmp);
    }

    // Step 1: partition the 2d pinned faces, recording thresholds.
    let mut tables: Vec<(ThresholdTable, ThresholdTable)> = Vec::with_capacity(2 * d);
    for k in 1..=d {
        for star in [false, true] {
            let face = partition_face(d, k, star);
            let mut u = ThresholdTable::new(n, d - 3);
            let mut v = ThresholdTable::new(n, d - 3);
            let mut u_key = vec![0usize; d - 3];
            let mut v_key = vec![0usize; d - 3];
            for mid in TupleIter::new(n, d - 4) {
                let mut pinned: Vec<(usize, usize)> = Vec::with_capacity(d - 2);
                for &(axis, b) in &face.fixed {
                    pinned.push((axis - 1, view.coord0(b)));
                }
                for (pos, &axis) in face.mid_axes.iter().enumerate() {
                    pinned.push((axis - 1, view.off + mid[pos] - 1));
                }
                let slab = MatrixSlab::new(
                    a,
                    &pinned,
                    face.row_axis - 1,
                    view.off,
                    n,
                    face.col_axis - 1,
                    view.off,
                    n,
                );
                match partition_slab(&slab, cmp) {
                    SlabSplit::Found(index) => return Some(index),
                    SlabSplit::Split { u: pu, v: pv } => {
                        u_key[..d - 4].copy_from_slice(&mid);
                        for col in 1..=n {
                            u_key[d - 4] = col;
                            u.set(&u_key, pu[col - 1]);
                        }
                        v_key[1..].copy_from_slice(&mid);
                        for row in 1..=n {
                            v_key[0] = row;
                            v.set(&v_key, pv[row - 1]);
                        }
                    }
                }
            }
            tables.push((u, v));
        }
    }
    let table = |k: usize, star: bool| &tables[(k - 1) * 2 + usize::from(star)];

    // Step 2: sweep the 2d boundary surfaces through their cut fibers.
    for k in 1..=d {
        for star in [false, true] {
            let face = surface_face(d, k, star);
            let k1 = cyclic_axis(d, k as i64 + 1);
            let k2 = cyclic_axis(d, k as i64 + 2);
            for mid in TupleIter::new(n, d - 3) {
                // A match on Q_k lies above both thresholds of the opposite
                // faces; on Q*_k it lies at or below the same-side ones.
                let (rows_from, rows, cols_from, cols) = if star {
                    let u = table(k1, false).0.get(&mid);
                    let v = table(k2, true).1.get(&mid);
                    (0, u, 0, v)
                } else {
                    let u = table(k1, true).0.get(&mid);
                    let v = table(k2, false).1.get(&mid);
                    (u, n - u, v, n - v)
                };
                if rows == 0 || cols == 0 {
                    continue;
                }
                let mut pinned = Vec::with_capacity(d - 2);
                pinned.push((face.fixed.0 - 1, view.coord0(face.fixed.1)));
                for (pos, &axis) in face.mid_axes.iter().enumerate() {
                    pinned.push((axis - 1, view.off + mid[pos] - 1));
                }
                let slab = MatrixSlab::new(
                    a,
                    &pinned,
                    face.row_axis - 1,
                    view.off + rows_from,
                    rows,
                    face.col_axis - 1,
                    view.off + cols_from,
                    cols,
                );
                if let Some(index) = search_slab(&slab, cmp) {
                    return Some(index);
                }
            }
        }
    }

    search_cube(
        a,
        CubeView {
            off: view.off + 1,
            side: n - 2,
        },
        cmp,
    )
}

/// Compares every cell of the window in lexicographic order (`n <= 2`).
fn exhaustive(a: &MonotoneArray, view: CubeView, cmp: &mut CountingComparator) -> Option<IndexTuple> {
    let d = a.dims();
    let strides = a.strides();
    let mut coords = vec![view.off; d];
    'cells: loop {
        let flat: usize = coords.iter().zip(strides).map(|(&c, &s)| c * s).sum();
        let index = || coords.iter().map(|&c| c + 1).collect::<IndexTuple>();
        if cmp.compare(a.value_at_flat(flat), index) == std::cmp::Ordering::Equal {
            return Some(coords.iter().map(|&c| c + 1).collect());
        }
        for axis in (0..d).rev() {
            coords[axis] += 1;
            if coords[axis] < view.off + view.side {
                continue 'cells;
            }
            coords[axis] = view.off;
        }
        return None;
    }
}
