//! Dense monotone multi-dimensional arrays.
//!
//! A [`MonotoneArray`] stores real values in row-major order (the last
//! subscript varies fastest) and is meant to be nondecreasing along every
//! axis. All external interfaces use 1-based index tuples; the flat layout
//! is an internal detail.
//!
//! For `d != 2` every extent must be equal (a cubic array); `d = 2` admits
//! rectangular `m x n` matrices. Extents of zero are representable so that
//! empty matrices can be searched, but [`validate_monotone`] reports them
//! as structural defects.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// A 1-based index into a [`MonotoneArray`], one coordinate per axis.
pub type IndexTuple = Vec<usize>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShapeError {
    #[error("shape must have at least one axis")]
    NoAxes,
    #[error("axis {axis} has extent 0")]
    EmptyAxis { axis: usize },
    #[error("shape {shape:?} requires {expected} values, got {actual}")]
    ValueCount {
        shape: Vec<usize>,
        expected: usize,
        actual: usize,
    },
    #[error("extents of a {d}-dimensional array must all be equal, got {shape:?}")]
    NotCubic { d: usize, shape: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq)]
pub struct MonotoneArray {
    shape: Vec<usize>,
    strides: Vec<usize>,
    values: Vec<f64>,
}

impl MonotoneArray {
    /// Builds an array from a shape and a row-major value buffer.
    ///
    /// Checks structure only (axis count, cubic shape for `d != 2`, value
    /// count); monotonicity is checked separately by [`validate_monotone`].
    pub fn new(shape: Vec<usize>, values: Vec<f64>) -> Result<Self, ShapeError> {
        if shape.is_empty() {
            return Err(ShapeError::NoAxes);
        }
        let d = shape.len();
        if d != 2 && shape.iter().any(|&e| e != shape[0]) {
            return Err(ShapeError::NotCubic { d, shape });
        }
        let expected: usize = shape.iter().product();
        if values.len() != expected {
            return Err(ShapeError::ValueCount {
                shape,
                expected,
                actual: values.len(),
            });
        }
        let strides = row_major_strides(&shape);
        Ok(Self {
            shape,
            strides,
            values,
        })
    }

    pub fn dims(&self) -> usize {
        self.shape.len()
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    /// Extent shared by every axis. Meaningful for cubic arrays (`d != 2`
    /// always, `d = 2` only when square).
    pub fn side(&self) -> usize {
        self.shape[0]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub(crate) fn strides(&self) -> &[usize] {
        &self.strides
    }

    pub(crate) fn value_at_flat(&self, flat: usize) -> f64 {
        self.values[flat]
    }

    /// Value at a 1-based index tuple.
    pub fn get(&self, index: &[usize]) -> f64 {
        assert_eq!(index.len(), self.dims(), "index rank mismatch");
        let mut flat = 0;
        for (axis, (&i, &stride)) in index.iter().zip(&self.strides).enumerate() {
            assert!(
                i >= 1 && i <= self.shape[axis],
                "index {i} out of range 1..={} on axis {}",
                self.shape[axis],
                axis + 1
            );
            flat += (i - 1) * stride;
        }
        self.values[flat]
    }

    /// Decodes a flat position into a 1-based index tuple.
    pub(crate) fn unflatten(&self, mut flat: usize) -> IndexTuple {
        let mut index = vec![0; self.dims()];
        for (axis, &stride) in self.strides.iter().enumerate() {
            index[axis] = flat / stride + 1;
            flat %= stride;
        }
        index
    }

    /// Serializes to the array text format: a header line `d e1 e2 ... ed`
    /// followed by whitespace-separated values in row-major order.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("{}", self.dims()));
        for e in &self.shape {
            out.push_str(&format!(" {e}"));
        }
        out.push('\n');
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                out.push(if i % 16 == 0 { '\n' } else { ' ' });
            }
            out.push_str(&format!("{v}"));
        }
        if !self.values.is_empty() {
            out.push('\n');
        }
        out
    }
}

impl FromStr for MonotoneArray {
    type Err = TextFormatError;

    fn from_str(text: &str) -> Result<Self, TextFormatError> {
        let mut tokens = text.split_whitespace();
        let d: usize = tokens
            .next()
            .ok_or(TextFormatError::Empty)?
            .parse()
            .map_err(|_| TextFormatError::BadHeader)?;
        if d == 0 {
            return Err(TextFormatError::BadHeader);
        }
        let mut shape = Vec::with_capacity(d);
        for _ in 0..d {
            let e: usize = tokens
                .next()
                .ok_or(TextFormatError::BadHeader)?
                .parse()
                .map_err(|_| TextFormatError::BadHeader)?;
            shape.push(e);
        }
        let mut values = Vec::new();
        for tok in tokens {
            let v: f64 = tok
                .parse()
                .map_err(|_| TextFormatError::BadValue(tok.to_string()))?;
            values.push(v);
        }
        MonotoneArray::new(shape, values).map_err(TextFormatError::Shape)
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TextFormatError {
    #[error("empty input")]
    Empty,
    #[error("malformed header; expected `d e1 e2 ... ed`")]
    BadHeader,
    #[error("unparseable value `{0}`")]
    BadValue(String),
    #[error(transparent)]
    Shape(ShapeError),
}

/// Outcome of a monotonicity check.
#[derive(Debug, Clone, PartialEq)]
pub enum MonotoneReport {
    Monotone,
    /// First violating axis-neighbor pair, in scan order: entries are visited
    /// in row-major order and compared against their predecessor along each
    /// axis, fastest-varying axis first. `lower < upper` componentwise.
    Violation { lower: IndexTuple, upper: IndexTuple },
}

impl MonotoneReport {
    pub fn is_monotone(&self) -> bool {
        matches!(self, MonotoneReport::Monotone)
    }
}

/// Checks that an array is nondecreasing along every axis.
///
/// Structural defects (zero extents, a short value buffer) are reported as
/// errors, distinct from monotonicity violations. The neighbor check is
/// sufficient: transitivity extends it to the full componentwise order.
pub fn validate_monotone(a: &MonotoneArray) -> Result<MonotoneReport, ShapeError> {
    if a.shape.is_empty() {
        return Err(ShapeError::NoAxes);
    }
    if let Some(axis) = a.shape.iter().position(|&e| e == 0) {
        return Err(ShapeError::EmptyAxis { axis: axis + 1 });
    }
    let expected: usize = a.shape.iter().product();
    if a.values.len() != expected {
        return Err(ShapeError::ValueCount {
            shape: a.shape.clone(),
            expected,
            actual: a.values.len(),
        });
    }
    // Walk entries in row-major order; compare each with its predecessor
    // along every axis (fastest stride first, i.e. axis d down to 1).
    for flat in 0..a.values.len() {
        for axis in (0..a.dims()).rev() {
            let stride = a.strides[axis];
            let coord = flat / stride % a.shape[axis];
            if coord == 0 {
                continue;
            }
            if a.values[flat - stride] > a.values[flat] {
                return Ok(MonotoneReport::Violation {
                    lower: a.unflatten(flat - stride),
                    upper: a.unflatten(flat),
                });
            }
        }
    }
    Ok(MonotoneReport::Monotone)
}

pub(crate) fn row_major_strides(shape: &[usize]) -> Vec<usize> {
    let mut strides = vec![1; shape.len()];
    for axis in (0..shape.len().saturating_sub(1)).rev() {
        strides[axis] = strides[axis + 1] * shape[axis + 1];
    }
    strides
}

impl fmt::Display for MonotoneArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}
