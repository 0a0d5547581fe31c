//! Command-line harness around the `monotone-search` library.
//!
//! Exit status: 0 on success, 1 when an assertion fails (oracle mismatch,
//! budget violation, invalid input array), 2 on configuration errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use monotone_search::harness::{
    bench_array, bench_csv, bounds_csv, bounds_rows, run_bench, run_verify, verify_array,
    Algorithm, ExperimentConfig, HarnessError, NRange, QueryClasses,
};
use monotone_search::{gen_monotone, GenStyle, MonotoneArray};

#[derive(Parser)]
#[command(
    name = "monotone-search",
    version,
    about = "Search monotone multi-dimensional arrays with counted comparisons"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run an algorithm against the linear-scan oracle and its comparison
    /// budget over generated instances (or one array file)
    Verify(SweepArgs),
    /// Measure comparison counts over a sweep and emit CSV with the
    /// certified bounds attached
    Bench(SweepArgs),
    /// Emit the exact lower/upper bound table for d = 4 or d = 5
    Bounds(BoundsArgs),
    /// Generate a monotone array and write it in the array text format
    Gen(GenArgs),
}

#[derive(Args)]
struct SweepArgs {
    /// Dimension of generated instances
    #[arg(long, default_value_t = 4)]
    d: usize,
    /// Side length: `n`, `lo..hi`, or `lo..hi:step` (inclusive)
    #[arg(long, default_value = "1..4")]
    n: NRange,
    /// Instances (seeds) per side length
    #[arg(long, default_value_t = 5)]
    trials: usize,
    /// Base seed; per-instance seeds derive from it
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Instance value pattern
    #[arg(long, default_value = "strict")]
    style: GenStyle,
    /// Search procedure
    #[arg(long, default_value = "auto")]
    algo: Algorithm,
    /// Comma-separated query classes
    #[arg(long, default_value = "members,midpoints,below-min,above-max")]
    queries: QueryClasses,
    /// Cap member/midpoint queries per instance, evenly sampled
    /// (0 = exhaustive; large sweeps want a cap)
    #[arg(long, default_value_t = 0)]
    sample: usize,
    /// Write output here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Run on this array file instead of generated instances
    #[arg(long)]
    array_file: Option<PathBuf>,
    /// Lift the instance-size safety caps
    #[arg(long)]
    allow_large: bool,
}

impl SweepArgs {
    fn config(&self) -> ExperimentConfig {
        let mut cfg = ExperimentConfig::new(self.d, self.n);
        cfg.algorithm = self.algo;
        cfg.trials = self.trials;
        cfg.style = self.style;
        cfg.queries = self.queries;
        cfg.seed = self.seed;
        cfg.sample_cap = self.sample_cap();
        cfg.allow_large = self.allow_large;
        cfg
    }

    fn sample_cap(&self) -> Option<usize> {
        (self.sample > 0).then_some(self.sample)
    }
}

#[derive(Args)]
struct BoundsArgs {
    /// Dimension (4 or 5)
    #[arg(long, default_value_t = 4)]
    d: usize,
    /// Side lengths to tabulate
    #[arg(long, default_value = "1..30")]
    n: NRange,
    /// Write CSV here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GenArgs {
    /// Dimension
    #[arg(long, default_value_t = 4)]
    d: usize,
    /// Side length
    #[arg(long, default_value_t = 4)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Instance value pattern
    #[arg(long, default_value = "strict")]
    style: GenStyle,
    /// Write the array text here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

enum AppError {
    /// Bad flags, bad file syntax: exit 2.
    Config(String),
    /// A checked property failed: exit 1.
    Assertion(String),
}

impl From<HarnessError> for AppError {
    fn from(e: HarnessError) -> Self {
        match e {
            HarnessError::Config(_) => AppError::Config(e.to_string()),
            _ => AppError::Assertion(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify(args) => verify(&args),
        Command::Bench(args) => bench(&args),
        Command::Bounds(args) => bounds(&args),
        Command::Gen(args) => gen(&args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(AppError::Assertion(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(AppError::Config(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn verify(args: &SweepArgs) -> Result<(), AppError> {
    let text = match &args.array_file {
        Some(path) => {
            let a = load_array(path)?;
            let calls = verify_array(&a, args.algo, args.queries, args.sample_cap())?;
            format!(
                "verify {} algo={}: all {} calls matched the oracle within budget\n",
                path.display(),
                args.algo,
                calls
            )
        }
        None => format!("{}\n", run_verify(&args.config())?),
    };
    emit(args.out.as_deref(), &text)
}

fn bench(args: &SweepArgs) -> Result<(), AppError> {
    let rows = match &args.array_file {
        Some(path) => {
            let a = load_array(path)?;
            vec![bench_array(&a, args.algo, args.queries, args.sample_cap())?]
        }
        None => run_bench(&args.config())?,
    };
    emit(args.out.as_deref(), &bench_csv(&rows))
}

fn bounds(args: &BoundsArgs) -> Result<(), AppError> {
    let rows = bounds_rows(args.d, args.n)?;
    emit(args.out.as_deref(), &bounds_csv(&rows))
}

fn gen(args: &GenArgs) -> Result<(), AppError> {
    let shape = vec![args.n; args.d.max(1)];
    if args.d < 1 {
        return Err(AppError::Config("d must be at least 1".into()));
    }
    let entries: u128 = shape.iter().map(|&e| e as u128).product();
    if entries > monotone_search::harness::DEFAULT_MAX_ENTRIES as u128 {
        return Err(AppError::Config(format!(
            "refusing to generate {entries} entries (cap {})",
            monotone_search::harness::DEFAULT_MAX_ENTRIES
        )));
    }
    let a = gen_monotone(&shape, args.seed, args.style)
        .map_err(|e| AppError::Config(e.to_string()))?;
    emit(args.out.as_deref(), &a.to_text())
}

fn load_array(path: &Path) -> Result<MonotoneArray, AppError> {
    let text = fs::read_to_string(path)
        .map_err(|e| AppError::Config(format!("cannot read {}: {e}", path.display())))?;
    text.parse()
        .map_err(|e| AppError::Config(format!("{}: {e}", path.display())))
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), AppError> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| AppError::Config(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
