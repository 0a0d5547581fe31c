//! Experiment harness: configuration, query generation, sweep runners and
//! CSV reporting.

pub mod config;
pub mod queries;
pub mod report;
pub mod runner;

pub use config::{
    Algorithm, ConfigError, ExperimentConfig, NRange, QueryClasses, DEFAULT_MAX_ENTRIES,
    VERIFY_MAX_D, VERIFY_MAX_N,
};
pub use queries::query_set;
pub use report::{bench_csv, bounds_csv, BoundReport, BoundsRow, BENCH_CSV_HEADER, BOUNDS_CSV_HEADER};
pub use runner::{
    bench_array, bounds_rows, instance_seed, per_call_budget, problem_lower_bound, run_bench,
    run_bench_seq, run_verify, run_verify_seq, verify_array, CallRepro, HarnessError,
    VerifyLine, VerifySummary,
};
