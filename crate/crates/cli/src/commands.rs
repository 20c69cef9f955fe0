use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::{self, Read, Write};

use irt_lab::bounds::{
    deg45_pair_bounds, measure_diameter, pair_deg90_bound, theorem3_upper, trivial_upper,
};
use irt_lab::coefficient::{coefficient_c, curve_samples, optimize_c};
use irt_lab::counting::DEFAULT_ORACLE_CAP;
use irt_lab::lattice::{disk_lattice, square_grid, two_disk, LatticeKind, TwoDiskParams};
use irt_lab::sampling::mixed_sets;
use irt_lab::search::{
    default_seeds, default_window, exhaustive_max_with, greedy_build, named_seed, table1_run,
    ExhaustiveOptions, DEFAULT_BUDGET,
};
use irt_lab::{
    count_irt, count_irt_oracle, degree_profile, point_file, Error, Exec, Point, PointSet,
};
use serde_json::json;

use crate::{
    CoefficientArgs, Command, ConstructArgs, ConstructKind, CountArgs, LatticeArg, SearchCommand,
    Suite, VerifyArgs,
};

pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    fn input(message: impl Into<String>) -> Self {
        CliError {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BudgetExceeded { .. } => 4,
            Error::Verification(_) => 5,
            _ => 2,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::input(e.to_string())
    }
}

type CliResult = Result<(), CliError>;

fn emit(text: &str) -> CliResult {
    let mut out = io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        // a closed pipe downstream is not an error of ours
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
        other => Ok(other?),
    }
}

pub fn run(command: Command) -> CliResult {
    match command {
        Command::Count(args) => count(args),
        Command::Construct(args) => construct(args),
        Command::Coefficient(args) => coefficient(args),
        Command::Search(cmd) => search(cmd),
        Command::Verify(args) => verify(args),
    }
}

fn read_points(path: &str) -> Result<PointSet, CliError> {
    let text = if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::input(format!("{path}: {e}")))?
    };
    point_file::parse(&text).map_err(|e| CliError::input(format!("{path}: {e}")))
}

fn count(args: CountArgs) -> CliResult {
    let set = read_points(&args.file)?;
    let c = count_irt(&set);
    if args.oracle {
        if set.len() > DEFAULT_ORACLE_CAP {
            return Err(CliError::input(format!(
                "--oracle supports at most {DEFAULT_ORACLE_CAP} points, file has {}",
                set.len()
            )));
        }
        let o = count_irt_oracle(&set)?;
        if o != c {
            return Err(CliError {
                code: 3,
                message: format!("oracle mismatch: fast count {c}, brute force {o}"),
            });
        }
    }
    let profile = args.degrees.then(|| degree_profile(&set));
    let mut out = String::new();
    if args.json {
        let mut obj = json!({ "n": set.len(), "count": c });
        if let Some(p) = &profile {
            obj["degrees"] = p
                .entries
                .iter()
                .map(|d| {
                    json!({
                        "point": [d.point.x.to_fraction_string(), d.point.y.to_fraction_string()],
                        "deg90": d.deg90,
                        "deg45_plus": d.deg45_plus,
                        "deg45_minus": d.deg45_minus,
                    })
                })
                .collect();
        }
        writeln!(out, "{obj}").unwrap();
    } else {
        writeln!(out, "{c}").unwrap();
        if let Some(p) = &profile {
            writeln!(out, "x,y,deg90,deg45_plus,deg45_minus").unwrap();
            for d in &p.entries {
                writeln!(
                    out,
                    "{},{},{},{},{}",
                    d.point.x, d.point.y, d.deg90, d.deg45_plus, d.deg45_minus
                )
                .unwrap();
            }
        }
    }
    emit(&out)
}

fn construct(args: ConstructArgs) -> CliResult {
    let set = match args.kind {
        ConstructKind::Grid { k } => {
            if k == 0 {
                return Err(CliError::input("--k must be positive"));
            }
            square_grid(k)
        }
        ConstructKind::Disk { n, lattice } => {
            if n == 0 {
                return Err(CliError::input("--n must be positive"));
            }
            let kind = match lattice {
                LatticeArg::Integer => LatticeKind::Integer,
                LatticeArg::Half => LatticeKind::HalfShifted,
            };
            disk_lattice(n, kind, &Point::origin())
        }
        ConstructKind::TwoDisk { n, x } => {
            let (a, b) = two_disk(&TwoDiskParams::new(n, x)?)?;
            a.union(&b)
        }
    };
    let mut out = point_file::format(&set);
    if args.count {
        writeln!(out, "# count: {}", count_irt(&set)).unwrap();
    }
    emit(&out)
}

fn parse_num<T: std::str::FromStr>(s: &str, what: &str) -> Result<T, CliError> {
    s.parse()
        .map_err(|_| CliError::input(format!("invalid {what}: {s:?}")))
}

fn coefficient(args: CoefficientArgs) -> CliResult {
    let mut out = String::new();
    if let Some(x) = args.x {
        let r = coefficient_c(x)?;
        writeln!(out, "x {}", r.x).unwrap();
        writeln!(out, "c {:.12}", r.value).unwrap();
        writeln!(out, "branch {}", r.branch.as_str()).unwrap();
        writeln!(out, "outer_only {:.12}", r.cases.outer_only).unwrap();
        writeln!(out, "inner_only {:.12}", r.cases.inner_only).unwrap();
        writeln!(out, "apex_inner {:.12}", r.cases.apex_inner).unwrap();
        writeln!(out, "apex_outer {:.12}", r.cases.apex_outer).unwrap();
    } else if let Some(curve) = args.curve {
        let lo: f64 = parse_num(&curve[0], "curve minimum")?;
        let hi: f64 = parse_num(&curve[1], "curve maximum")?;
        let steps: usize = parse_num(&curve[2], "step count")?;
        writeln!(out, "x,c,branch").unwrap();
        for r in curve_samples(lo, hi, steps)? {
            writeln!(out, "{},{:.12},{}", r.x, r.value, r.branch.as_str()).unwrap();
        }
    } else {
        let o = optimize_c();
        writeln!(out, "x_star {:.10}", o.x_star).unwrap();
        writeln!(out, "c_star {:.12}", o.c_star).unwrap();
    }
    emit(&out)
}

fn seed_list(names: &[String]) -> Result<Vec<(String, PointSet)>, CliError> {
    names
        .iter()
        .map(|s| {
            named_seed(s).map(|set| (s.clone(), set)).ok_or_else(|| {
                CliError::input(format!(
                    "unknown seed {s:?} (irt, square, grid<k>, disk<n>)"
                ))
            })
        })
        .collect()
}

fn search(cmd: SearchCommand) -> CliResult {
    let mut out = String::new();
    match cmd {
        SearchCommand::Greedy { n, seeds } => {
            for (name, seed) in seed_list(&seeds)? {
                for rec in greedy_build(&seed, n, &name)?
                    .iter()
                    .filter(|r| r.n > seed.len())
                {
                    writeln!(out, "{}", rec.to_json()).unwrap();
                }
            }
        }
        SearchCommand::Exhaustive { n, window, budget } => {
            let opts = ExhaustiveOptions {
                budget: budget.unwrap_or(DEFAULT_BUDGET),
                ..Default::default()
            };
            let rec = exhaustive_max_with(n, window.unwrap_or_else(|| default_window(n)), opts)?;
            writeln!(out, "{}", rec.to_json()).unwrap();
        }
        SearchCommand::Table1 { records, seeds } => {
            let seeds = if seeds.is_empty() {
                default_seeds()
            } else {
                seed_list(&seeds)?
            };
            let rows = table1_run(&seeds, Exec::Parallel)?;
            writeln!(out, "n,achieved,table1_value,theorem3_upper").unwrap();
            for r in &rows {
                writeln!(
                    out,
                    "{},{},{},{}",
                    r.n, r.achieved, r.reference, r.theorem3_upper
                )
                .unwrap();
            }
            if let Some(path) = records {
                let lines: String = rows.iter().map(|r| r.record.to_json() + "\n").collect();
                std::fs::write(&path, lines)
                    .map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
            }
        }
    }
    emit(&out)
}

#[derive(Default)]
struct Tally {
    failures: usize,
    first: Option<String>,
}

fn verify(args: VerifyArgs) -> CliResult {
    if args.sets == 0 {
        return Err(CliError::input("--sets must be positive"));
    }
    let sets = mixed_sets(args.seed, args.sets, 5, 40);
    let mut tallies: BTreeMap<String, Tally> = BTreeMap::new();
    let mut note = |name: &str, holds: bool, detail: &dyn Fn() -> String| {
        let t = tallies.entry(name.to_string()).or_default();
        if !holds {
            t.failures += 1;
            t.first.get_or_insert_with(detail);
        }
    };
    if matches!(args.suite, Suite::Lemmas | Suite::All) {
        let reports = Exec::Parallel.map(sets.len(), |i| measure_diameter(&sets[i]));
        for r in reports {
            for c in r?.checks() {
                note(c.name, c.holds, &|| c.detail.clone());
            }
        }
    }
    if matches!(args.suite, Suite::Bounds | Suite::All) {
        let counts = Exec::Parallel.map(sets.len(), |i| count_irt(&sets[i]));
        for (set, c) in sets.iter().zip(counts) {
            let n = set.len() as u64;
            let upper = theorem3_upper(n)?;
            note("count <= theorem3_upper", c <= upper, &|| {
                format!("n = {n}: {c} > {upper}")
            });
            note(
                "theorem3_upper <= n^2 - n",
                upper <= trivial_upper(n),
                &|| format!("n = {n}"),
            );
            let pair = deg45_pair_bounds(set);
            note("45-degree pair sums <= n-1", pair.is_ok(), &|| {
                pair.as_ref()
                    .err()
                    .map(|e| e.to_string())
                    .unwrap_or_default()
            });
            let r = measure_diameter(set)?;
            let cap = pair_deg90_bound(n);
            note(
                "deg90 pair sum <= ceil(2(n-2)/3)",
                r.deg90_sum_xy <= cap,
                &|| format!("n = {n}: {} > {cap}", r.deg90_sum_xy),
            );
        }
    }
    let mut out = String::new();
    let mut failed = 0;
    for (name, t) in &tallies {
        if t.failures == 0 {
            writeln!(out, "PASS {name} ({} sets)", sets.len()).unwrap();
        } else {
            failed += 1;
            writeln!(
                out,
                "FAIL {name}: {} of {} sets, first: {}",
                t.failures,
                sets.len(),
                t.first.as_deref().unwrap_or("")
            )
            .unwrap();
        }
    }
    emit(&out)?;
    if failed > 0 {
        return Err(CliError {
            code: 5,
            message: format!("{failed} invariant(s) failed"),
        });
    }
    Ok(())
}
