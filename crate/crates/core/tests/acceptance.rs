//! End-to-end acceptance checks. Runs without the libtest harness so that
//! every criterion prints exactly one PASS/FAIL line.

use std::f64::consts::{PI, SQRT_2};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use irt_lab::bounds::{averaging_upper, diameter_report, theorem3_upper};
use irt_lab::coefficient::{
    branch_values, f_numeric, f_shape, integral_I, integrate_f, optimize_c, ShapeKind,
    DISK_COEFFICIENT, SQUARE_COEFFICIENT,
};
use irt_lab::lattice::{disk_lattice, square_grid, two_disk, LatticeKind, TwoDiskParams};
use irt_lab::sampling::{mixed_sets, rng};
use irt_lab::search::{
    default_seeds, default_window, exhaustive_max, exhaustive_max_with, greedy_build, named_seed,
    table1_run, ExhaustiveOptions, TABLE1_RANGE,
};
use irt_lab::{count_irt, count_irt_oracle, degree_profile, Error, Exec, Point, PointSet};
use rand::Rng;

type Outcome = Result<String, String>;
type Check = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, started: Instant) -> Result<(), String> {
    ensure(started.elapsed() <= limit, || {
        format!("took {:?}, limit {limit:?}", started.elapsed())
    })
}

fn c1_oracle() -> Outcome {
    let t = Instant::now();
    let sets = mixed_sets(2024, 500, 3, 40);
    let bad = sets
        .iter()
        .filter(|s| Ok(count_irt(s)) != count_irt_oracle(s))
        .count();
    ensure(bad == 0, || format!("{bad} mismatches"))?;
    within(Duration::from_secs(30), t)?;
    let total: u64 = sets.iter().map(count_irt).sum();
    Ok(format!("500 sets agree, {total} IRTs in total"))
}

fn c2_small_cases() -> Outcome {
    let mut parts = Vec::new();
    for (n, want) in [(3, 1), (4, 4), (5, 8), (6, 11), (7, 15)] {
        let t = Instant::now();
        let got = exhaustive_max(n, 5).map_err(|e| e.to_string())?.best_count;
        ensure(got == want, || format!("n = {n}: {got} != {want}"))?;
        within(Duration::from_secs(60), t)?;
        parts.push(format!("{n}:{got}"));
    }
    for (n, want) in [(8, 20), (9, 28)] {
        let t = Instant::now();
        let w = default_window(n);
        match exhaustive_max_with(n, w, ExhaustiveOptions::default()) {
            Ok(rec) => {
                ensure(rec.best_count == want, || {
                    format!("n = {n}: {} != {want}", rec.best_count)
                })?;
                within(Duration::from_secs(15 * 60), t)?;
                parts.push(format!(
                    "{n}:{} ({w}x{w}, {:.1}s)",
                    rec.best_count,
                    rec.runtime.as_secs_f64()
                ));
            }
            Err(Error::BudgetExceeded { .. }) => {
                let seed = if n == 8 { "square" } else { "grid3" };
                let recs =
                    greedy_build(&named_seed(seed).unwrap(), n, seed).map_err(|e| e.to_string())?;
                let got = recs.last().unwrap().best_count;
                ensure(got >= want, || format!("fallback n = {n}: {got} < {want}"))?;
                ensure(theorem3_upper(9).unwrap() == 41, || {
                    "theorem3_upper(9) != 41".into()
                })?;
                parts.push(format!("{n}:>={got} (budget fallback)"));
            }
            Err(e) => return Err(e.to_string()),
        }
    }
    Ok(parts.join(" "))
}

fn ratio(set: &PointSet) -> f64 {
    count_irt(set) as f64 / (set.len() as f64).powi(2)
}

fn c3_square() -> Outcome {
    let t = Instant::now();
    let (r70, r30) = (ratio(&square_grid(70)), ratio(&square_grid(30)));
    let (e70, e30) = (
        (r70 - SQUARE_COEFFICIENT).abs(),
        (r30 - SQUARE_COEFFICIENT).abs(),
    );
    ensure(e70 <= 0.02, || format!("k = 70 ratio {r70}"))?;
    ensure(e70 < e30, || {
        format!("error did not shrink: {e30} -> {e70}")
    })?;
    within(Duration::from_secs(60), t)?;
    Ok(format!("k=70 {r70:.5} (err {e70:.5}), k=30 err {e30:.5}"))
}

fn c4_disk() -> Outcome {
    let t = Instant::now();
    let r = ratio(&disk_lattice(5000, LatticeKind::Integer, &Point::origin()));
    ensure((r - 0.43169).abs() <= 0.02, || format!("ratio {r}"))?;
    within(Duration::from_secs(120), t)?;
    Ok(format!("n=5000 ratio {r:.5}"))
}

fn c5_two_disk() -> Outcome {
    let p = TwoDiskParams::new(5000, 0.0356067).map_err(|e| e.to_string())?;
    let (a, b) = two_disk(&p).map_err(|e| e.to_string())?;
    let two = ratio(&a.union(&b));
    let one = ratio(&disk_lattice(5000, LatticeKind::Integer, &Point::origin()));
    ensure(two > one, || format!("two-disk {two} <= disk {one}"))?;
    ensure((two - 0.433064).abs() <= 0.02, || format!("ratio {two}"))?;
    Ok(format!(
        "two-disk {two:.6} > disk {one:.6} (m1={}, m2={})",
        p.m1, p.m2
    ))
}

fn c6_closed_forms() -> Outcome {
    let q = integrate_f(ShapeKind::UnitSquare, 2048);
    ensure((q - 5.0 / 12.0).abs() <= 1e-4, || {
        format!("square quadrature {q}")
    })?;
    let i1 = integral_I(1.0).map_err(|e| e.to_string())?;
    ensure((i1 - (0.75 - 1.0 / PI)).abs() <= 1e-9, || {
        format!("I(1) = {i1}")
    })?;
    let i2 = integral_I(SQRT_2).map_err(|e| e.to_string())?;
    ensure((i2 - 0.5).abs() <= 1e-9, || format!("I(√2) = {i2}"))?;
    let mut g = rng(6);
    let mut worst: f64 = 0.0;
    for shape in [ShapeKind::UnitSquare, ShapeKind::UnitDisk] {
        let mut done = 0;
        while done < 100 {
            let h = shape.half_width();
            let (x, y) = (g.gen_range(-h..h), g.gen_range(-h..h));
            if !shape.contains(x, y) {
                continue;
            }
            let d = (f_numeric(shape, x, y, 2048).map_err(|e| e.to_string())?
                - f_shape(shape, x, y))
            .abs();
            worst = worst.max(d);
            done += 1;
        }
    }
    ensure(worst <= 5e-3, || format!("f mismatch {worst}"))?;
    let (lo, hi) = branch_values(0.5);
    ensure((lo - hi).abs() <= 1e-12, || {
        format!("branches {lo} vs {hi}")
    })?;
    Ok(format!(
        "∫f = {q:.6}, max |f_shape - f_numeric| = {worst:.2e}, jump at 1/2 = {:.1e}",
        (lo - hi).abs()
    ))
}

fn c7_optimizer() -> Outcome {
    let o = optimize_c();
    ensure((o.x_star - 0.0356067).abs() <= 1e-5, || {
        format!("x* = {}", o.x_star)
    })?;
    ensure((o.c_star - 0.433064).abs() <= 5e-6, || {
        format!("c* = {}", o.c_star)
    })?;
    ensure(o.c_star > DISK_COEFFICIENT, || {
        "c* not above the disk coefficient".into()
    })?;
    Ok(format!("x* = {:.7}, c* = {:.8}", o.x_star, o.c_star))
}

fn c8_bounds() -> Outcome {
    let got = [
        theorem3_upper(3),
        averaging_upper(5, 4, 1),
        averaging_upper(6, 5, 4),
        averaging_upper(7, 6, 8),
    ]
    .map(|r| r.map_err(|e| e.to_string()));
    let got: Vec<u64> = got.into_iter().collect::<Result<_, _>>()?;
    ensure(got == [1, 2, 8, 14], || format!("{got:?}"))?;
    Ok(format!("{got:?}"))
}

fn c9_diameter_invariants() -> Outcome {
    let t = Instant::now();
    let sets = mixed_sets(9, 500, 5, 40);
    let failures: Vec<String> = Exec::Parallel
        .map(sets.len(), |i| {
            diameter_report(&sets[i]).err().map(|e| e.to_string())
        })
        .into_iter()
        .flatten()
        .collect();
    ensure(failures.is_empty(), || failures.join("; "))?;
    within(Duration::from_secs(60), t)?;
    Ok("500 sets, zero failures".into())
}

fn c10_degree_sums() -> Outcome {
    let mut sets = mixed_sets(10, 500, 3, 40);
    sets.extend((2..=12).map(square_grid));
    sets.extend([50, 200, 700].map(|n| disk_lattice(n, LatticeKind::Integer, &Point::origin())));
    let p = TwoDiskParams::new(400, 0.3).unwrap();
    let (a, b) = two_disk(&p).unwrap();
    sets.push(a.union(&b));
    for s in &sets {
        let prof = degree_profile(s);
        let c = count_irt(s);
        ensure(
            prof.sum90() == c && prof.sum45_plus() == c && prof.sum45_minus() == c,
            || {
                format!(
                    "sums {} {} {} vs {c} on {} points",
                    prof.sum90(),
                    prof.sum45_plus(),
                    prof.sum45_minus(),
                    s.len()
                )
            },
        )?;
    }
    Ok(format!("{} sets", sets.len()))
}

fn c11_reference_table() -> Outcome {
    let rows = table1_run(&default_seeds(), Exec::Parallel).map_err(|e| e.to_string())?;
    ensure(rows.len() == TABLE1_RANGE.count(), || {
        format!("{} rows", rows.len())
    })?;
    let mut matched = 0;
    let mut cmp = Vec::new();
    for r in &rows {
        ensure(r.achieved >= r.disk_baseline, || {
            format!("n = {}: {} < disk {}", r.n, r.achieved, r.disk_baseline)
        })?;
        ensure(r.achieved <= r.theorem3_upper, || {
            format!("n = {}: above upper bound", r.n)
        })?;
        matched += usize::from(r.achieved >= r.reference);
        cmp.push(format!("{}:{}/{}", r.n, r.achieved, r.reference));
    }
    Ok(format!("{matched}/16 match the reference values; {}", cmp.join(" ")))
}

fn main() -> ExitCode {
    let criteria: [Check; 11] = [
        ("oracle equivalence", c1_oracle),
        ("small-case exact values", c2_small_cases),
        ("square-lattice coefficient", c3_square),
        ("disk-lattice coefficient", c4_disk),
        ("two-disk beats disk", c5_two_disk),
        ("closed forms", c6_closed_forms),
        ("optimizer", c7_optimizer),
        ("bound formulas", c8_bounds),
        ("diameter invariants", c9_diameter_invariants),
        ("degree-sum identity", c10_degree_sums),
        ("reference table comparison", c11_reference_table),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = run();
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS {name} [{secs:.1}s]: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name} [{secs:.1}s]: {detail}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
