mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Count, construct and search for isosceles right triangles in planar point sets.
#[derive(Parser, Debug)]
#[command(name = "irt-lab", version)]
struct Cli {
    /// Worker threads for parallel loops (default: one per core).
    #[arg(long, global = true, env = "IRT_LAB_THREADS")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count the IRTs of a point file (`-` reads standard input).
    Count(CountArgs),
    /// Print a lattice construction as a point file.
    Construct(ConstructArgs),
    /// Evaluate or maximise the two-disk coefficient.
    Coefficient(CoefficientArgs),
    /// Greedy, exhaustive or table searches for sets with many IRTs.
    #[command(subcommand)]
    Search(SearchCommand),
    /// Check the diameter-pair invariants and upper bounds on random sets.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct CountArgs {
    file: String,
    /// Also run the brute-force counter (at most 60 points) and compare.
    #[arg(long)]
    oracle: bool,
    /// Print per-point degrees.
    #[arg(long)]
    degrees: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct ConstructArgs {
    #[command(subcommand)]
    kind: ConstructKind,
    /// Append the IRT count as a trailing comment line.
    #[arg(long, global = true)]
    count: bool,
}

#[derive(Subcommand, Debug)]
enum ConstructKind {
    /// The k × k integer grid.
    Grid {
        #[arg(long)]
        k: usize,
    },
    /// The n lattice points nearest the origin.
    Disk {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = LatticeArg::Integer)]
        lattice: LatticeArg,
    },
    /// An integer disk and a half-shifted disk with size ratio x.
    TwoDisk {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum LatticeArg {
    Integer,
    Half,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct CoefficientArgs {
    #[arg(long, allow_negative_numbers = true)]
    x: Option<f64>,
    /// CSV samples: MIN MAX STEPS.
    #[arg(long, num_args = 3, value_names = ["MIN", "MAX", "STEPS"], allow_negative_numbers = true)]
    curve: Option<Vec<String>>,
    #[arg(long)]
    optimize: bool,
}

#[derive(Subcommand, Debug)]
enum SearchCommand {
    /// Grow seed sets one best point at a time; one JSON record per size.
    Greedy {
        #[arg(long)]
        n: usize,
        /// irt, square, grid<k> or disk<n>; repeatable.
        #[arg(long = "seed", default_value = "irt")]
        seeds: Vec<String>,
    },
    /// Exact maximum over all n-subsets of a w × w window.
    Exhaustive {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        window: Option<usize>,
        /// Node budget before giving up (exit 4).
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Greedy results for n = 10..25 against reference lower bounds, as CSV.
    Table1 {
        /// Also write the per-n records as JSON lines.
        #[arg(long)]
        records: Option<std::path::PathBuf>,
        /// Override the default seed list; repeatable.
        #[arg(long = "seed")]
        seeds: Vec<String>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Suite {
    Lemmas,
    Bounds,
    All,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(value_enum)]
    suite: Suite,
    #[arg(long, default_value_t = 500)]
    sets: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            eprintln!("error: cannot start {threads} threads: {e}");
            return ExitCode::from(2);
        }
    }
    match commands::run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
