//! Deterministic generation of monotone test instances.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::array::{MonotoneArray, ShapeError};

/// Value pattern of a generated instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenStyle {
    /// Positive increments, cumulative prefix sums along every axis:
    /// strictly increasing along each axis.
    Strict,
    /// Increments drawn from {0, 1}: nondecreasing with ties.
    Plateau,
    /// All entries zero.
    Constant,
}

impl GenStyle {
    pub const ALL: [GenStyle; 3] = [GenStyle::Strict, GenStyle::Plateau, GenStyle::Constant];

    pub fn name(self) -> &'static str {
        match self {
            GenStyle::Strict => "strict",
            GenStyle::Plateau => "plateau",
            GenStyle::Constant => "constant",
        }
    }
}

impl fmt::Display for GenStyle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GenStyle {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "strict" => Ok(GenStyle::Strict),
            "plateau" => Ok(GenStyle::Plateau),
            "constant" => Ok(GenStyle::Constant),
            other => Err(format!(
                "unknown style `{other}` (expected strict|plateau|constant)"
            )),
        }
    }
}

/// Generates a monotone array, deterministically in `(shape, seed, style)`.
///
/// Increments are drawn entry by entry in row-major order, then a 1-D
/// cumulative prefix sum is applied along each axis in turn. Positive
/// increments stay positive under summation, so the strict style is
/// strictly increasing along every axis; every style passes
/// [`validate_monotone`](crate::array::validate_monotone).
pub fn gen_monotone(shape: &[usize], seed: u64, style: GenStyle) -> Result<MonotoneArray, ShapeError> {
    if shape.is_empty() {
        return Err(ShapeError::NoAxes);
    }
    if let Some(axis) = shape.iter().position(|&e| e == 0) {
        return Err(ShapeError::EmptyAxis { axis: axis + 1 });
    }
    let len: usize = shape.iter().product();
    let mut values = match style {
        GenStyle::Constant => vec![0.0; len],
        GenStyle::Strict => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..len).map(|_| 0.5 + rng.random::<f64>()).collect()
        }
        GenStyle::Plateau => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..len)
                .map(|_| if rng.random_bool(0.5) { 1.0 } else { 0.0 })
                .collect()
        }
    };
    if style != GenStyle::Constant {
        prefix_sum_all_axes(shape, &mut values);
    }
    MonotoneArray::new(shape.to_vec(), values)
}

fn prefix_sum_all_axes(shape: &[usize], values: &mut [f64]) {
    let strides = crate::array::row_major_strides(shape);
    for (axis, &stride) in strides.iter().enumerate() {
        let extent = shape[axis];
        // Flat ascending order visits the axis-predecessor of each entry
        // before the entry itself.
        for flat in 0..values.len() {
            if flat / stride % extent > 0 {
                values[flat] += values[flat - stride];
            }
        }
    }
}
