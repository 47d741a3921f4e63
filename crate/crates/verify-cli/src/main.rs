use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use verify_cli::{run, Options};

#[derive(Parser, Debug)]
#[command(name = "desmic-verify", about = "Run the verification suites")]
struct Args {
    /// Suite name, or "all". Repeatable.
    #[arg(long = "suite", default_value = "all")]
    suites: Vec<String>,
    /// Primes for the finite-field scans. Repeatable.
    #[arg(long = "prime")]
    primes: Vec<u64>,
    /// Write the JSON report here ("-" for stdout).
    #[arg(long)]
    json: Option<PathBuf>,
    #[arg(long)]
    threads: Option<usize>,
    #[arg(long, default_value = "data")]
    data_dir: PathBuf,
    /// Time budget for the symmetry search.
    #[arg(long, default_value_t = 600)]
    budget_seconds: u64,
    /// Include per-check elapsed times (makes reports non-reproducible).
    #[arg(long)]
    timings: bool,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let mut opts = Options { data_dir: args.data_dir, budget_seconds: args.budget_seconds, timings: args.timings, ..Options::default() };
    if !args.primes.is_empty() {
        opts.primes = args.primes;
    }
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(n) = args.threads {
        pool = pool.num_threads(n);
    }
    let pool = match pool.build() {
        Ok(p) => p,
        Err(err) => {
            eprintln!("error: {err}");
            return ExitCode::from(2);
        }
    };
    let report = match pool.install(|| run(&args.suites, &opts)) {
        Ok(r) => r,
        Err(err) => {
            eprintln!("error: {err}");
            return ExitCode::from(2);
        }
    };
    match &args.json {
        Some(p) if p.as_os_str() == "-" => print!("{}", report.to_json()),
        Some(p) => {
            if let Err(err) = std::fs::write(p, report.to_json()) {
                eprintln!("error: cannot write {}: {err}", p.display());
                return ExitCode::from(2);
            }
            print!("{}", report.render_text());
        }
        None => print!("{}", report.render_text()),
    }
    if report.failed > 0 {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
