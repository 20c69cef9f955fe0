//! Leading-coefficient analysis for lattice sections.
//!
//! `f_K(z)` is the area of `K ∩ rot90(z, K)` for a unit-area body `K`; its
//! integral over `K` is the `n²` coefficient of the IRT count of `n`
//! lattice points in a copy of `K`. For two concentric disks (integer
//! lattice outside, half-shifted lattice inside, size ratio `x`) the
//! coefficient is the piecewise function [`coefficient_c`].

use std::f64::consts::{PI, SQRT_2};

use serde::Serialize;

use crate::error::{Error, Result, VerificationFailure};
use crate::exec::Exec;

/// `3/4 - 1/π`, the coefficient of the disk section.
pub const DISK_COEFFICIENT: f64 = 0.75 - 1.0 / PI;
/// Coefficient of the square grid.
pub const SQUARE_COEFFICIENT: f64 = 5.0 / 12.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ShapeKind {
    /// `[-1/2, 1/2]²`.
    UnitSquare,
    /// Disk of radius `1/√π` about the origin.
    UnitDisk,
}

impl ShapeKind {
    pub fn contains(self, x: f64, y: f64) -> bool {
        match self {
            ShapeKind::UnitSquare => x.abs() <= 0.5 && y.abs() <= 0.5,
            ShapeKind::UnitDisk => x * x + y * y <= 1.0 / PI,
        }
    }

    /// Half-width of the axis-aligned bounding box.
    pub fn half_width(self) -> f64 {
        match self {
            ShapeKind::UnitSquare => 0.5,
            ShapeKind::UnitDisk => 1.0 / PI.sqrt(),
        }
    }
}

/// Closed form of `Area(K ∩ rot90(z, K))`.
pub fn f_shape(shape: ShapeKind, x: f64, y: f64) -> f64 {
    match shape {
        ShapeKind::UnitSquare => {
            let (a, b) = (x.abs(), y.abs());
            let first = 1.0 - a - b;
            if first <= 0.0 {
                0.0
            } else {
                first * (1.0 - (a - b).abs())
            }
        }
        ShapeKind::UnitDisk => f_disk_radial(x.hypot(y)),
    }
}

/// `f` for the unit disk as a function of `|z|`.
pub fn f_disk_radial(r: f64) -> f64 {
    let support = (2.0 / PI).sqrt();
    if r >= support {
        return 0.0;
    }
    let arg = ((2.0 * PI).sqrt() / 2.0 * r).min(1.0);
    (2.0 / PI) * arg.acos() - r * (2.0 / PI - r * r).max(0.0).sqrt()
}

/// Midpoint-grid measurement of `Area(K ∩ rot90(z, K))` with
/// `resolution` samples per axis over the bounding box of `K`. Does not
/// use the closed form.
pub fn f_numeric(shape: ShapeKind, x: f64, y: f64, resolution: usize) -> Result<f64> {
    f_numeric_with(shape, x, y, resolution, Exec::default())
}

pub fn f_numeric_with(
    shape: ShapeKind,
    x: f64,
    y: f64,
    resolution: usize,
    exec: Exec,
) -> Result<f64> {
    if resolution < 64 {
        return Err(Error::Domain(format!("resolution {resolution} < 64")));
    }
    let h = 2.0 * shape.half_width() / resolution as f64;
    let lo = -shape.half_width() + 0.5 * h;
    let hits = exec.sum(resolution, |i| {
        let wx = lo + i as f64 * h;
        (0..resolution)
            .filter(|&j| {
                let wy = lo + j as f64 * h;
                // w ∈ rot90(z, K) iff its quarter-turn preimage about z is in K
                let (px, py) = (x + (wy - y), y - (wx - x));
                shape.contains(wx, wy) && shape.contains(px, py)
            })
            .count() as u64
    });
    Ok(hits as f64 * h * h)
}

/// Midpoint-rule integral of the closed-form `f` over `K`.
pub fn integrate_f(shape: ShapeKind, resolution: usize) -> f64 {
    let h = 2.0 * shape.half_width() / resolution as f64;
    let lo = -shape.half_width() + 0.5 * h;
    let rows = Exec::default().map(resolution, |i| {
        let zx = lo + i as f64 * h;
        (0..resolution)
            .map(|j| lo + j as f64 * h)
            .filter(|&zy| shape.contains(zx, zy))
            .map(|zy| f_shape(shape, zx, zy))
            .sum::<f64>()
    });
    rows.iter().sum::<f64>() * h * h
}

/// `∫_{tK} f_K` for the unit disk, `0 ≤ t ≤ √2`.
#[allow(non_snake_case)]
pub fn integral_I(t: f64) -> Result<f64> {
    if !(0.0..=SQRT_2 + 1e-12).contains(&t) {
        return Err(Error::Domain(format!("t = {t} outside [0, √2]")));
    }
    let u = (t / SQRT_2).min(1.0);
    let tail = (2.0 - t * t).max(0.0).sqrt();
    Ok((4.0 * t * t * u.acos() + 2.0 * u.asin() - t * (t * t + 1.0) * tail) / (2.0 * PI))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    /// `0 < x ≤ 1/2`: the outer disk covers the whole support of the inner one.
    Low,
    /// `1/2 < x < 1`.
    High,
}

impl Branch {
    pub fn of(x: f64) -> Branch {
        if x <= 0.5 {
            Branch::Low
        } else {
            Branch::High
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Branch::Low => "low",
            Branch::High => "high",
        }
    }
}

/// Contributions of the four vertex-placement cases to the `n²`
/// coefficient of the two-disk construction.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct CaseBreakdown {
    /// All three vertices in the outer (integer) disk.
    pub outer_only: f64,
    /// All three vertices in the inner (half-shifted) disk.
    pub inner_only: f64,
    /// Right angle inside, both 45° vertices outside.
    pub apex_inner: f64,
    /// Right angle outside, both 45° vertices inside.
    pub apex_outer: f64,
}

impl CaseBreakdown {
    pub fn total(&self) -> f64 {
        self.outer_only + self.inner_only + self.apex_inner + self.apex_outer
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct CoefficientResult {
    pub x: f64,
    pub value: f64,
    pub branch: Branch,
    pub cases: CaseBreakdown,
}

fn low_formula(x: f64) -> f64 {
    let a = (x / 2.0).sqrt();
    (8.0 * x * a.acos() + 4.0 * a.asin() + (5.0 * PI - 4.0) * x * x + (3.0 * PI - 4.0)
        - 2.0 * (x + 1.0) * (2.0 * x - x * x).sqrt())
        / (4.0 * PI * (x + 1.0).powi(2))
}

fn high_formula(x: f64) -> f64 {
    let a = (x / 2.0).sqrt();
    let b = (1.0 / (2.0 * x)).sqrt().min(1.0);
    (8.0 * x * (a.acos() + b.acos())
        + 4.0 * a.asin()
        + 4.0 * x * x * b.asin()
        + (3.0 * PI - 4.0) * (x * x + 1.0)
        - 2.0 * (x + 1.0) * ((2.0 * x - x * x).sqrt() + (2.0 * x - 1.0).max(0.0).sqrt()))
        / (4.0 * PI * (x + 1.0).powi(2))
}

/// The combined closed form on the branch containing `x`.
fn piecewise_c(x: f64) -> f64 {
    match Branch::of(x) {
        Branch::Low => low_formula(x),
        Branch::High => high_formula(x),
    }
}

fn case_breakdown(x: f64) -> Result<CaseBreakdown> {
    let w = 1.0 / (1.0 + x).powi(2);
    let apex_outer = match Branch::of(x) {
        // the inner disk's whole overlap support sits inside the outer disk
        Branch::Low => integral_I(SQRT_2)? * x * x * w,
        Branch::High => integral_I(1.0 / x.sqrt())? * x * x * w,
    };
    Ok(CaseBreakdown {
        outer_only: DISK_COEFFICIENT * w,
        inner_only: DISK_COEFFICIENT * x * x * w,
        apex_inner: integral_I(x.sqrt())? * w,
        apex_outer,
    })
}

/// The `n²` coefficient of the two-disk construction at size ratio `x`.
/// The four case contributions are recomputed from [`integral_I`] and
/// must sum to the closed form within `1e-12`.
pub fn coefficient_c(x: f64) -> Result<CoefficientResult> {
    if !(x > 0.0 && x < 1.0) {
        return Err(Error::Domain(format!("x = {x} outside (0, 1)")));
    }
    let value = piecewise_c(x);
    let cases = case_breakdown(x)?;
    if (cases.total() - value).abs() > 1e-12 {
        return Err(VerificationFailure {
            property: "case breakdown sums to the piecewise coefficient",
            detail: format!("x = {x}: cases {} vs closed form {value}", cases.total()),
        }
        .into());
    }
    Ok(CoefficientResult {
        x,
        value,
        branch: Branch::of(x),
        cases,
    })
}

/// Both branch formulas evaluated at the same `x`, ignoring which branch
/// `x` belongs to. Used to check continuity at `x = 1/2`.
pub fn branch_values(x: f64) -> (f64, f64) {
    (low_formula(x), high_formula(x))
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Optimum {
    pub x_star: f64,
    pub c_star: f64,
}

pub const SCAN_STEP: f64 = 1e-4;
pub const GOLDEN_TOL: f64 = 1e-10;

/// Maximises `c` on `(0, 1)`: a scan with step [`SCAN_STEP`], then golden
/// section on the neighbourhood of the best sample, clipped to its branch.
pub fn optimize_c() -> Optimum {
    let steps = (1.0 / SCAN_STEP).round() as usize;
    let (best_k, _) = (1..steps)
        .map(|k| (k, piecewise_c(k as f64 * SCAN_STEP)))
        .fold(
            (0, f64::NEG_INFINITY),
            |acc, s| if s.1 > acc.1 { s } else { acc },
        );
    let centre = best_k as f64 * SCAN_STEP;
    let (lo, hi) = match Branch::of(centre) {
        Branch::Low => (
            (centre - SCAN_STEP).max(f64::MIN_POSITIVE),
            (centre + SCAN_STEP).min(0.5),
        ),
        Branch::High => (
            (centre - SCAN_STEP).max(0.5 + f64::EPSILON),
            (centre + SCAN_STEP).min(1.0 - f64::EPSILON),
        ),
    };
    let (x_star, c_star) = golden_section_max(piecewise_c, lo, hi, GOLDEN_TOL);
    Optimum { x_star, c_star }
}

/// Golden-section search for a maximum of a unimodal `f` on `[a, b]`,
/// stopping once the bracket is narrower than `tol`.
pub fn golden_section_max<F: Fn(f64) -> f64>(f: F, mut a: f64, mut b: f64, tol: f64) -> (f64, f64) {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    while b - a >= tol {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    let x = 0.5 * (a + b);
    (x, f(x))
}

/// `steps` evenly spaced evaluations of `c` on `[x_min, x_max]`.
pub fn curve_samples(x_min: f64, x_max: f64, steps: usize) -> Result<Vec<CoefficientResult>> {
    if !(x_min > 0.0 && x_min < x_max && x_max < 1.0) || steps < 2 {
        return Err(Error::Domain(format!(
            "need 0 < x_min < x_max < 1 and steps >= 2, got ({x_min}, {x_max}, {steps})"
        )));
    }
    let dx = (x_max - x_min) / (steps - 1) as f64;
    (0..steps)
        .map(|i| {
            coefficient_c(if i + 1 == steps {
                x_max
            } else {
                x_min + i as f64 * dx
            })
        })
        .collect()
}
