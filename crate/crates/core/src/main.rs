use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use binv::harness::{self, Cache, CacheKey, Inputs, Suite, SuiteConfig, Target, DEFAULT_BUDGET_BYTES};
use binv::{Budget, Error};

#[derive(Parser)]
#[command(name = "binv", version, about = "Exact binary invariants of hyperelliptic branch points")]
struct Cli {
    /// Cache directory (defaults to .binv-cache)
    #[arg(long, global = true, env = harness::CACHE_ENV)]
    cache_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum TargetArg {
    #[value(name = "H")]
    H,
    #[value(name = "K")]
    K,
    #[value(name = "Gt")]
    Gt,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Construct,
    Ansatz,
    Grushevsky,
    Morozov,
    Theta,
    Stretch,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a polynomial, store it in the cache and print its hash.
    Compute {
        #[arg(long, value_enum)]
        target: TargetArg,
        #[arg(long)]
        genus: usize,
        /// Subspace dimension, for Gt only.
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_BUDGET_BYTES)]
        budget: u64,
    },
    /// Run a verification suite; exit 0 on pass, 1 on failure, 2 when a
    /// budget is exhausted.
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        #[arg(long)]
        genus: usize,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET_BYTES)]
        budget: u64,
    },
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("binv: {msg}");
    ExitCode::from(2)
}

fn failure(e: Error) -> ExitCode {
    eprintln!("binv: {e}");
    match e {
        Error::ResourceBudgetExceeded { .. } => ExitCode::from(2),
        _ => ExitCode::from(1),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cache = cli.cache_dir.map(Cache::new).unwrap_or_else(Cache::from_env);
    match cli.command {
        Command::Compute { target, genus, dim, out, budget } => {
            if genus == 0 {
                return usage("genus must be at least 1");
            }
            let target = match target {
                TargetArg::H => Target::H,
                TargetArg::K => Target::K,
                TargetArg::Gt => Target::GTilde,
            };
            if (target == Target::GTilde) != dim.is_some() {
                return usage("--dim is required for Gt and accepted only there");
            }
            let key = CacheKey::new(target, genus, dim);
            match harness::cmd_compute(&key, &cache, &Budget::from_bytes(budget), out.as_ref()) {
                Ok(o) => {
                    println!("{}  {}", o.hash, o.path.display());
                    ExitCode::SUCCESS
                }
                Err(e) => failure(e),
            }
        }
        Command::Verify { suite, genus, threads, budget } => {
            let suite = match suite {
                SuiteArg::Construct => Suite::Construct,
                SuiteArg::Ansatz => Suite::Ansatz,
                SuiteArg::Grushevsky => Suite::Grushevsky,
                SuiteArg::Morozov => Suite::Morozov,
                SuiteArg::Theta => Suite::Theta,
                SuiteArg::Stretch => Suite::Stretch,
            };
            let config = SuiteConfig {
                genus,
                threads,
                budget_bytes: budget,
                cache_dir: cache.dir().to_path_buf(),
                suites: vec![suite],
            };
            if let Err(e) = config.validate() {
                return usage(e);
            }
            let pool = match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
                Ok(p) => p,
                Err(e) => return usage(e),
            };
            let inputs = Inputs::new(Some(cache), config.budget());
            let report = match pool.install(|| harness::run_suite(suite, genus, &inputs)) {
                Ok(r) => r,
                Err(e) => return failure(e),
            };
            print!("{}", report.to_text());
            for r in &report.records {
                if let Some(d) = r.detail.as_ref().filter(|_| r.status != harness::Status::Pass) {
                    eprintln!("{}: {d}", r.name);
                }
            }
            ExitCode::from(report.exit_code() as u8)
        }
    }
}
