//! Executes verification sweeps and benchmark sweeps.
//!
//! Calls within a sweep are independent, so with the `parallel` feature
//! they run on a rayon pool. Results are collected in spec order and all
//! statistics are folded from integer counts, so parallel and sequential
//! runs produce identical output; `*_seq` variants are kept callable for
//! direct comparison.

use std::fmt;

use thiserror::Error;

use crate::algorithms::{
    binary_budget, matrix_budget, search_nd, search_validated, slice_budget, slice_search,
};
use crate::array::{validate_monotone, MonotoneArray, MonotoneReport};
use crate::bounds::{asymptotic_ratio, d4_lower_bound, d5_lower_bound, upper_bound_recurrence};
use crate::comparator::{CountingComparator, SearchOutcome, SearchResult};
use crate::generate::gen_monotone;
use crate::oracle::contains_oracle;

use super::config::{
    Algorithm, ConfigError, ExperimentConfig, NRange, QueryClasses, VERIFY_MAX_D, VERIFY_MAX_N,
};
use super::queries::query_set;
use super::report::{BoundReport, BoundsRow};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum ExecMode {
    Parallel,
    Sequential,
}

/// Identifies one measured call for reproduction.
#[derive(Debug, Clone, PartialEq)]
pub struct CallRepro {
    pub d: usize,
    pub n: usize,
    pub seed: u64,
    pub style: String,
    pub query: f64,
}

impl fmt::Display for CallRepro {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "d={} n={} seed={} style={} query={}",
            self.d, self.n, self.seed, self.style, self.query
        )
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum HarnessError {
    #[error("configuration error: {0}")]
    Config(#[from] ConfigError),
    #[error("instance rejected (d={d} n={n} seed={seed} style={style}): {reason}")]
    InvalidInstance {
        d: usize,
        n: usize,
        seed: u64,
        style: String,
        reason: String,
    },
    #[error("{algorithm} disagrees with the oracle ({repro}): got {got}, oracle says {expected}")]
    Mismatch {
        algorithm: String,
        repro: CallRepro,
        got: &'static str,
        expected: &'static str,
    },
    #[error("{algorithm} exceeded its comparison budget ({repro}): used {used}, budget {budget}")]
    BudgetExceeded {
        algorithm: String,
        repro: CallRepro,
        used: u64,
        budget: u128,
    },
}

/// Derives the per-instance generator seed from the sweep seed; a
/// SplitMix64 finalizer over the mixed-in coordinates.
pub fn instance_seed(base: u64, d: usize, n: usize, trial: usize) -> u64 {
    let mut z = base
        ^ (d as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)
        ^ (n as u64).wrapping_mul(0xBF58_476D_1CE4_E5B9)
        ^ (trial as u64).wrapping_mul(0x94D0_49BB_1331_11EB);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Certified per-call comparison ceiling for an algorithm on a shape.
pub fn per_call_budget(algorithm: Algorithm, shape: &[usize]) -> u128 {
    let d = shape.len();
    let n = shape[0];
    match algorithm {
        Algorithm::Auto => match d {
            1 => binary_budget(n) as u128,
            2 => matrix_budget(shape[0], shape[1]) as u128,
            3 => slice_budget(3, n),
            _ => upper_bound_recurrence(n, d),
        },
        Algorithm::Slice => {
            if d == 2 {
                matrix_budget(shape[0], shape[1]) as u128
            } else {
                slice_budget(d, n)
            }
        }
        Algorithm::Surface => upper_bound_recurrence(n, d),
    }
}

fn run_algorithm(algorithm: Algorithm, a: &MonotoneArray, x: f64) -> SearchOutcome {
    let mut cmp = CountingComparator::new(x);
    match algorithm {
        Algorithm::Auto => search_validated(a, &mut cmp),
        Algorithm::Slice => slice_search(a, &mut cmp),
        Algorithm::Surface => search_nd(a, &mut cmp),
    }
}

fn map_ordered<S, T, F>(items: &[S], mode: ExecMode, f: F) -> Vec<T>
where
    S: Sync,
    T: Send,
    F: Fn(&S) -> T + Sync,
{
    #[cfg(feature = "parallel")]
    if mode == ExecMode::Parallel {
        use rayon::prelude::*;
        return items.par_iter().map(&f).collect();
    }
    let _ = mode;
    items.iter().map(f).collect()
}

struct PreparedInstance {
    seed: u64,
    array: MonotoneArray,
    queries: Vec<f64>,
}

fn prepare_instances(
    cfg: &ExperimentConfig,
    n: usize,
    mode: ExecMode,
) -> Result<Vec<PreparedInstance>, HarnessError> {
    let shape = vec![n; cfg.d];
    let seeds: Vec<u64> = (0..cfg.trials)
        .map(|t| instance_seed(cfg.seed, cfg.d, n, t))
        .collect();
    let prepared = map_ordered(&seeds, mode, |&seed| {
        let invalid = |reason: String| HarnessError::InvalidInstance {
            d: cfg.d,
            n,
            seed,
            style: cfg.style.name().to_string(),
            reason,
        };
        let array = gen_monotone(&shape, seed, cfg.style).map_err(|e| invalid(e.to_string()))?;
        match validate_monotone(&array).map_err(|e| invalid(e.to_string()))? {
            MonotoneReport::Monotone => {}
            MonotoneReport::Violation { lower, upper } => {
                return Err(invalid(format!(
                    "monotonicity violated between {lower:?} and {upper:?}"
                )))
            }
        }
        let queries = query_set(&array, cfg.queries, cfg.sample_cap);
        Ok(PreparedInstance {
            seed,
            array,
            queries,
        })
    });
    prepared.into_iter().collect()
}

/// Per-`n` line of a verification run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyLine {
    pub n: usize,
    pub instances: usize,
    pub calls: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifySummary {
    pub d: usize,
    pub algorithm: Algorithm,
    pub style: String,
    pub lines: Vec<VerifyLine>,
    pub total_calls: u64,
}

impl fmt::Display for VerifySummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "verify d={} algo={} style={}",
            self.d, self.algorithm, self.style
        )?;
        for line in &self.lines {
            writeln!(
                f,
                "  n={}: instances={} calls={} ok",
                line.n, line.instances, line.calls
            )?;
        }
        write!(
            f,
            "all {} calls matched the oracle within budget",
            self.total_calls
        )
    }
}

/// Runs every configured call against the linear-scan oracle and the
/// per-call budget; the first discrepancy (in spec order) is returned as an
/// error carrying a reproduction line.
pub fn run_verify(cfg: &ExperimentConfig) -> Result<VerifySummary, HarnessError> {
    run_verify_mode(cfg, ExecMode::Parallel)
}

/// Sequential variant of [`run_verify`]; same results, bytes included.
pub fn run_verify_seq(cfg: &ExperimentConfig) -> Result<VerifySummary, HarnessError> {
    run_verify_mode(cfg, ExecMode::Sequential)
}

fn run_verify_mode(cfg: &ExperimentConfig, mode: ExecMode) -> Result<VerifySummary, HarnessError> {
    cfg.validate()?;
    if !cfg.allow_large && (cfg.d > VERIFY_MAX_D || cfg.n_range.hi > VERIFY_MAX_N) {
        return Err(ConfigError::new(format!(
            "verify is capped at d <= {VERIFY_MAX_D}, n <= {VERIFY_MAX_N} by default \
             (exhaustive query sets are quadratic in the entry count); lift with allow_large"
        ))
        .into());
    }
    let mut lines = Vec::new();
    let mut total_calls = 0;
    for n in cfg.n_range.values() {
        let instances = prepare_instances(cfg, n, mode)?;
        let budget = per_call_budget(cfg.algorithm, &vec![n; cfg.d]);
        let specs: Vec<(usize, usize)> = instances
            .iter()
            .enumerate()
            .flat_map(|(i, inst)| (0..inst.queries.len()).map(move |q| (i, q)))
            .collect();
        let results = map_ordered(&specs, mode, |&(i, q)| {
            let inst = &instances[i];
            let x = inst.queries[q];
            let repro = || CallRepro {
                d: cfg.d,
                n,
                seed: inst.seed,
                style: cfg.style.name().to_string(),
                query: x,
            };
            let out = run_algorithm(cfg.algorithm, &inst.array, x);
            let expected = contains_oracle(&inst.array, x);
            let status = |found: bool| if found { "found" } else { "not found" };
            if out.result.is_found() != expected.result.is_found() {
                return Err(HarnessError::Mismatch {
                    algorithm: cfg.algorithm.name().to_string(),
                    repro: repro(),
                    got: status(out.result.is_found()),
                    expected: status(expected.result.is_found()),
                });
            }
            if let SearchResult::Found(index) = &out.result {
                if inst.array.get(index) != x {
                    return Err(HarnessError::Mismatch {
                        algorithm: cfg.algorithm.name().to_string(),
                        repro: repro(),
                        got: "an index holding a different value",
                        expected: "an index holding the query",
                    });
                }
            }
            if out.comparisons as u128 > budget {
                return Err(HarnessError::BudgetExceeded {
                    algorithm: cfg.algorithm.name().to_string(),
                    repro: repro(),
                    used: out.comparisons,
                    budget,
                });
            }
            Ok(())
        });
        for r in results {
            r?;
        }
        total_calls += specs.len() as u64;
        lines.push(VerifyLine {
            n,
            instances: instances.len(),
            calls: specs.len() as u64,
        });
    }
    Ok(VerifySummary {
        d: cfg.d,
        algorithm: cfg.algorithm,
        style: cfg.style.name().to_string(),
        lines,
        total_calls,
    })
}

/// Measures comparison counts over the configured sweep, asserting the
/// per-call ceiling on every call. One [`BoundReport`] per side length.
pub fn run_bench(cfg: &ExperimentConfig) -> Result<Vec<BoundReport>, HarnessError> {
    run_bench_mode(cfg, ExecMode::Parallel)
}

/// Sequential variant of [`run_bench`]; same results, bytes included.
pub fn run_bench_seq(cfg: &ExperimentConfig) -> Result<Vec<BoundReport>, HarnessError> {
    run_bench_mode(cfg, ExecMode::Sequential)
}

fn run_bench_mode(
    cfg: &ExperimentConfig,
    mode: ExecMode,
) -> Result<Vec<BoundReport>, HarnessError> {
    cfg.validate()?;
    let mut reports = Vec::new();
    for n in cfg.n_range.values() {
        let instances = prepare_instances(cfg, n, mode)?;
        let budget = per_call_budget(cfg.algorithm, &vec![n; cfg.d]);
        let specs: Vec<(usize, usize)> = instances
            .iter()
            .enumerate()
            .flat_map(|(i, inst)| (0..inst.queries.len()).map(move |q| (i, q)))
            .collect();
        let counts = map_ordered(&specs, mode, |&(i, q)| {
            let inst = &instances[i];
            let x = inst.queries[q];
            let out = run_algorithm(cfg.algorithm, &inst.array, x);
            if out.comparisons as u128 > budget {
                return Err(HarnessError::BudgetExceeded {
                    algorithm: cfg.algorithm.name().to_string(),
                    repro: CallRepro {
                        d: cfg.d,
                        n,
                        seed: inst.seed,
                        style: cfg.style.name().to_string(),
                        query: x,
                    },
                    used: out.comparisons,
                    budget,
                });
            }
            Ok(out.comparisons)
        });
        let mut max_cmp = 0u64;
        let mut total_cmp = 0u128;
        for c in &counts {
            let c = *c.as_ref().map_err(|e| e.clone())?;
            max_cmp = max_cmp.max(c);
            total_cmp += c as u128;
        }
        reports.push(BoundReport {
            d: cfg.d,
            n,
            algorithm: cfg.algorithm.name().to_string(),
            style: cfg.style.name().to_string(),
            trials: cfg.trials,
            queries: counts.len() as u64,
            max_cmp,
            total_cmp,
            upper_bound: budget,
            lower_bound: problem_lower_bound(cfg.d, n),
        });
    }
    Ok(reports)
}

/// The antichain lower bound, defined here for d = 4 and d = 5.
pub fn problem_lower_bound(d: usize, n: usize) -> Option<u128> {
    match d {
        4 => Some(d4_lower_bound(n)),
        5 => Some(d5_lower_bound(n)),
        _ => None,
    }
}

/// Verifies one explicit array (for example one loaded from a file)
/// against the oracle over its query set.
pub fn verify_array(
    a: &MonotoneArray,
    algorithm: Algorithm,
    queries: QueryClasses,
    sample_cap: Option<usize>,
) -> Result<u64, HarnessError> {
    let (d, n) = check_array(a, algorithm)?;
    let budget = per_call_budget(algorithm, a.shape());
    let qs = query_set(a, queries, sample_cap);
    for &x in &qs {
        let out = run_algorithm(algorithm, a, x);
        let expected = contains_oracle(a, x);
        let repro = CallRepro {
            d,
            n,
            seed: 0,
            style: "file".to_string(),
            query: x,
        };
        if out.result.is_found() != expected.result.is_found() {
            let status = |found: bool| if found { "found" } else { "not found" };
            return Err(HarnessError::Mismatch {
                algorithm: algorithm.name().to_string(),
                repro,
                got: status(out.result.is_found()),
                expected: status(expected.result.is_found()),
            });
        }
        if out.comparisons as u128 > budget {
            return Err(HarnessError::BudgetExceeded {
                algorithm: algorithm.name().to_string(),
                repro,
                used: out.comparisons,
                budget,
            });
        }
    }
    Ok(qs.len() as u64)
}

/// Benchmarks one explicit array; style column reads `file`.
pub fn bench_array(
    a: &MonotoneArray,
    algorithm: Algorithm,
    queries: QueryClasses,
    sample_cap: Option<usize>,
) -> Result<BoundReport, HarnessError> {
    let (d, n) = check_array(a, algorithm)?;
    let budget = per_call_budget(algorithm, a.shape());
    let qs = query_set(a, queries, sample_cap);
    let mut max_cmp = 0u64;
    let mut total_cmp = 0u128;
    for &x in &qs {
        let out = run_algorithm(algorithm, a, x);
        if out.comparisons as u128 > budget {
            return Err(HarnessError::BudgetExceeded {
                algorithm: algorithm.name().to_string(),
                repro: CallRepro {
                    d,
                    n,
                    seed: 0,
                    style: "file".to_string(),
                    query: x,
                },
                used: out.comparisons,
                budget,
            });
        }
        max_cmp = max_cmp.max(out.comparisons);
        total_cmp += out.comparisons as u128;
    }
    Ok(BoundReport {
        d,
        n,
        algorithm: algorithm.name().to_string(),
        style: "file".to_string(),
        trials: 1,
        queries: qs.len() as u64,
        max_cmp,
        total_cmp,
        upper_bound: budget,
        lower_bound: if a.shape().iter().all(|&e| e == n) {
            problem_lower_bound(d, n)
        } else {
            None
        },
    })
}

fn check_array(a: &MonotoneArray, algorithm: Algorithm) -> Result<(usize, usize), HarnessError> {
    let d = a.dims();
    match algorithm {
        Algorithm::Surface if d < 4 => {
            return Err(ConfigError::new(format!(
                "algorithm `surface` requires d >= 4, got d={d}"
            ))
            .into())
        }
        Algorithm::Slice if d < 2 => {
            return Err(ConfigError::new("algorithm `slice` requires d >= 2").into())
        }
        _ => {}
    }
    let invalid = |reason: String| HarnessError::InvalidInstance {
        d,
        n: a.shape()[0],
        seed: 0,
        style: "file".to_string(),
        reason,
    };
    match validate_monotone(a).map_err(|e| invalid(e.to_string()))? {
        MonotoneReport::Monotone => {}
        MonotoneReport::Violation { lower, upper } => {
            return Err(invalid(format!(
                "monotonicity violated between {lower:?} and {upper:?}"
            )))
        }
    }
    Ok((d, a.shape()[0]))
}

/// Lower bound, recurrence upper bound and ratio columns for `d` in {4, 5}.
pub fn bounds_rows(d: usize, n_range: NRange) -> Result<Vec<BoundsRow>, HarnessError> {
    if d != 4 && d != 5 {
        return Err(ConfigError::new(format!(
            "the bounds table is defined for d in {{4, 5}}, got d={d}"
        ))
        .into());
    }
    if n_range.is_empty() || n_range.lo < 1 {
        return Err(ConfigError::new(format!("bad n-range {n_range}")).into());
    }
    let limit = d as f64 / (d as f64 - 1.0);
    Ok(n_range
        .values()
        .map(|n| {
            let lower = problem_lower_bound(d, n).expect("d is 4 or 5");
            let upper = upper_bound_recurrence(n, d);
            let ratio = asymptotic_ratio(n, d);
            BoundsRow {
                d,
                n,
                lower_bound: lower,
                upper_bound: upper,
                asymptotic_ratio: ratio,
                ratio_to_limit: ratio / limit,
            }
        })
        .collect())
}
