//! Result rows and CSV emission.
//!
//! Output is byte-deterministic for a fixed configuration and seed: all
//! aggregation happens over integer comparison counts collected in a fixed
//! order, so parallel and sequential runs print identical bytes.

use std::fmt::Write as _;

/// Measured comparison statistics for one `(d, n, algorithm)` cell,
/// alongside the certified bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub d: usize,
    pub n: usize,
    pub algorithm: String,
    pub style: String,
    pub trials: usize,
    /// Total measured calls (trials x queries).
    pub queries: u64,
    pub max_cmp: u64,
    pub total_cmp: u128,
    /// Certified per-call ceiling for this algorithm and shape.
    pub upper_bound: u128,
    /// Antichain lower bound; present for d = 4 and d = 5 only.
    pub lower_bound: Option<u128>,
}

impl BoundReport {
    pub fn mean_cmp(&self) -> f64 {
        if self.queries == 0 {
            0.0
        } else {
            self.total_cmp as f64 / self.queries as f64
        }
    }
}

pub const BENCH_CSV_HEADER: &str =
    "d,n,algo,style,trials,queries,max_cmp,mean_cmp,upper_bound,lower_bound";

pub fn bench_csv(rows: &[BoundReport]) -> String {
    let mut out = String::from(BENCH_CSV_HEADER);
    out.push('\n');
    for r in rows {
        let lower = r
            .lower_bound
            .map(|l| l.to_string())
            .unwrap_or_default();
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{:.3},{},{}",
            r.d,
            r.n,
            r.algorithm,
            r.style,
            r.trials,
            r.queries,
            r.max_cmp,
            r.mean_cmp(),
            r.upper_bound,
            lower
        );
    }
    out
}

/// One row of the lower/upper bound table for `d` in {4, 5}.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundsRow {
    pub d: usize,
    pub n: usize,
    pub lower_bound: u128,
    pub upper_bound: u128,
    /// `upper_bound / n^(d-1)`.
    pub asymptotic_ratio: f64,
    /// `asymptotic_ratio` divided by the limit `d / (d-1)`.
    pub ratio_to_limit: f64,
}

pub const BOUNDS_CSV_HEADER: &str =
    "d,n,lower_bound,upper_bound,asymptotic_ratio,ratio_to_limit";

pub fn bounds_csv(rows: &[BoundsRow]) -> String {
    let mut out = String::from(BOUNDS_CSV_HEADER);
    out.push('\n');
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{:.6},{:.6}",
            r.d, r.n, r.lower_bound, r.upper_bound, r.asymptotic_ratio, r.ratio_to_limit
        );
    }
    out
}
