//! Exact maximum of the IRT count over all `n`-subsets of a `w × w`
//! integer window.
//!
//! The window stands for `Λ ∪ Λ̄` scaled by two. Subsets are enumerated
//! depth-first in lexicographic index order while two arrays are kept up
//! to date: the running count, and for every window point the number of
//! chosen pairs it would complete to an IRT (`gain`). Adding `p` raises
//! the count by `gain[p]` and bumps `gain` at the completions of each new
//! pair `(p, q)`.
//!
//! A branch with `s` chosen points and `r = n - s` still to choose is cut
//! when `count + (r largest remaining gains) + C(r, 2) · min(6, s + r - 2)`
//! cannot beat the incumbent. The last term covers IRTs with two or three
//! new vertices: each new pair lies in at most six IRTs, and at most
//! `s + r - 2` choices remain for the third vertex.

use std::sync::atomic::{AtomicBool, AtomicU32, AtomicU64, Ordering};
use std::time::Instant;

use crate::counting::count_irt;
use crate::error::{Error, Result, VerificationFailure};
use crate::exec::Exec;
use crate::geometry::Point;
use crate::point_set::PointSet;

use super::{Method, SearchRecord};

pub const MAX_WINDOW: usize = 7;
pub const DEFAULT_BUDGET: u64 = 50_000_000_000;
const FLUSH_EVERY: u64 = 1 << 12;

/// 5×5 up to seven points, 7×7 beyond.
pub fn default_window(n: usize) -> usize {
    if n <= 7 {
        5
    } else {
        7
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ExhaustiveOptions {
    pub prune: bool,
    /// Maximum number of search nodes before giving up.
    pub budget: u64,
    pub exec: Exec,
}

impl Default for ExhaustiveOptions {
    fn default() -> Self {
        ExhaustiveOptions {
            prune: true,
            budget: DEFAULT_BUDGET,
            exec: Exec::default(),
        }
    }
}

struct Window {
    w: usize,
    size: usize,
    /// Completions of the pair `(p, q)` inside the window, at `p * size + q`.
    completions: Vec<Vec<u8>>,
}

impl Window {
    fn new(w: usize) -> Window {
        let size = w * w;
        let inside = |x: i64, y: i64| -> Option<u8> {
            (0..w as i64)
                .contains(&x)
                .then_some(())
                .filter(|_| (0..w as i64).contains(&y))
                .map(|_| (x * w as i64 + y) as u8)
        };
        let mut completions = vec![Vec::new(); size * size];
        for p in 0..size {
            for q in 0..size {
                if p == q {
                    continue;
                }
                let (px, py) = ((p / w) as i64, (p % w) as i64);
                let (qx, qy) = ((q / w) as i64, (q % w) as i64);
                // i·(q - p)
                let (dx, dy) = (-(qy - py), qx - px);
                let mut c = vec![
                    inside(px + dx, py + dy),
                    inside(px - dx, py - dy),
                    inside(qx + dx, qy + dy),
                    inside(qx - dx, qy - dy),
                ];
                // (p + q ± i(q - p)) / 2 when integral
                for sign in [1, -1] {
                    let (nx, ny) = (px + qx + sign * dx, py + qy + sign * dy);
                    if nx % 2 == 0 && ny % 2 == 0 {
                        c.push(inside(nx / 2, ny / 2));
                    }
                }
                completions[p * size + q] = c.into_iter().flatten().collect();
            }
        }
        Window {
            w,
            size,
            completions,
        }
    }

    fn point(&self, idx: u8) -> Point {
        let idx = idx as usize;
        Point::int((idx / self.w) as i64, (idx % self.w) as i64)
    }
}

struct Shared {
    best: AtomicU32,
    nodes: AtomicU64,
    abort: AtomicBool,
    budget: u64,
}

struct Dfs<'a> {
    win: &'a Window,
    shared: &'a Shared,
    n: usize,
    prune: bool,
    gain: Vec<u8>,
    chosen: Vec<u8>,
    count: u32,
    best: Option<(u32, Vec<u8>)>,
    nodes: u64,
}

impl<'a> Dfs<'a> {
    fn new(win: &'a Window, shared: &'a Shared, n: usize, prune: bool) -> Self {
        Dfs {
            win,
            shared,
            n,
            prune,
            gain: vec![0; win.size],
            chosen: Vec::with_capacity(n),
            count: 0,
            best: None,
            nodes: 0,
        }
    }

    fn push(&mut self, p: u8) {
        self.count += self.gain[p as usize] as u32;
        let row = p as usize * self.win.size;
        for &q in &self.chosen {
            for &z in &self.win.completions[row + q as usize] {
                self.gain[z as usize] += 1;
            }
        }
        self.chosen.push(p);
    }

    fn pop(&mut self) {
        let p = self.chosen.pop().expect("non-empty");
        let row = p as usize * self.win.size;
        for &q in &self.chosen {
            for &z in &self.win.completions[row + q as usize] {
                self.gain[z as usize] -= 1;
            }
        }
        self.count -= self.gain[p as usize] as u32;
    }

    /// Whether a subtree whose best possible count is `bound` can still
    /// yield a record.
    fn worth(&self, bound: u32) -> bool {
        bound >= self.shared.best.load(Ordering::Relaxed)
            && self.best.as_ref().is_none_or(|(b, _)| bound > *b)
    }

    fn offer(&mut self, count: u32, last: Option<u8>) {
        if self.best.as_ref().is_none_or(|(b, _)| count > *b) {
            let mut w = self.chosen.clone();
            w.extend(last);
            self.best = Some((count, w));
            self.shared.best.fetch_max(count, Ordering::Relaxed);
        }
    }

    fn top_gains(&self, start: usize, r: usize) -> u32 {
        let mut hist = [0u32; 256];
        for &g in &self.gain[start..] {
            hist[g as usize] += 1;
        }
        let (mut left, mut sum) = (r as u32, 0u32);
        for g in (1..256).rev() {
            if left == 0 {
                break;
            }
            let take = hist[g].min(left);
            sum += take * g as u32;
            left -= take;
        }
        sum
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes.is_multiple_of(FLUSH_EVERY) {
            let total = self.shared.nodes.fetch_add(FLUSH_EVERY, Ordering::Relaxed) + FLUSH_EVERY;
            if total > self.shared.budget {
                self.shared.abort.store(true, Ordering::Relaxed);
            }
        }
        !self.shared.abort.load(Ordering::Relaxed)
    }

    fn run(&mut self, start: usize) {
        if !self.tick() {
            return;
        }
        let s = self.chosen.len();
        let r = self.n - s;
        if r == 0 {
            self.offer(self.count, None);
            return;
        }
        let size = self.win.size;
        if start + r > size {
            return;
        }
        if self.prune {
            let pairs = (r * (r - 1) / 2) as u32;
            let third = (s + r).saturating_sub(2).min(6) as u32;
            let bound = self.count + self.top_gains(start, r) + pairs * third;
            if !self.worth(bound) {
                return;
            }
        }
        if r == 1 {
            // first maximiser = lexicographically least completion
            let (idx, g) =
                (start..size)
                    .map(|i| (i, self.gain[i]))
                    .fold(
                        (start, 0u8),
                        |acc, cur| if cur.1 > acc.1 { cur } else { acc },
                    );
            let total = self.count + g as u32;
            if !self.prune || self.worth(total) {
                self.offer(total, Some(idx as u8));
            }
            return;
        }
        for p in start..=size - r {
            self.push(p as u8);
            self.run(p + 1);
            self.pop();
        }
    }
}

pub fn exhaustive_max(n: usize, w: usize) -> Result<SearchRecord> {
    exhaustive_max_with(n, w, ExhaustiveOptions::default())
}

/// Maximum IRT count over `n`-subsets of `{0..w}²`, with the
/// lexicographically least maximising subset as witness.
pub fn exhaustive_max_with(n: usize, w: usize, opts: ExhaustiveOptions) -> Result<SearchRecord> {
    if !(3..=9).contains(&n) || !(1..=MAX_WINDOW).contains(&w) || n > w * w {
        return Err(Error::InvalidParams(format!(
            "exhaustive search needs 3 <= n <= 9, 1 <= w <= {MAX_WINDOW}, n <= w², got n = {n}, w = {w}"
        )));
    }
    let started = Instant::now();
    let win = Window::new(w);
    let shared = Shared {
        best: AtomicU32::new(0),
        nodes: AtomicU64::new(0),
        abort: AtomicBool::new(false),
        budget: opts.budget,
    };
    // Split on the first two chosen points; tasks are in lexicographic order.
    let roots: Vec<(u8, u8)> = (0..win.size)
        .flat_map(|a| (a + 1..win.size).map(move |b| (a as u8, b as u8)))
        .filter(|&(_, b)| b as usize + (n - 2) < win.size || n == 2)
        .collect();
    let results = opts.exec.map(roots.len(), |i| {
        let (a, b) = roots[i];
        let mut dfs = Dfs::new(&win, &shared, n, opts.prune);
        dfs.push(a);
        dfs.push(b);
        dfs.run(b as usize + 1);
        let rest = dfs.nodes % FLUSH_EVERY;
        if shared.nodes.fetch_add(rest, Ordering::Relaxed) + rest > shared.budget {
            shared.abort.store(true, Ordering::Relaxed);
        }
        dfs.best
    });
    if shared.abort.load(Ordering::Relaxed) {
        return Err(Error::BudgetExceeded {
            nodes: shared.nodes.load(Ordering::Relaxed),
            budget: opts.budget,
        });
    }
    let (best_count, idx) = results
        .into_iter()
        .flatten()
        .fold(None::<(u32, Vec<u8>)>, |acc, cur| match acc {
            Some(a) if a.0 >= cur.0 => Some(a),
            _ => Some(cur),
        })
        .expect("window holds at least n points");
    let witness: PointSet = idx.iter().map(|&i| win.point(i)).collect();
    let check = count_irt(&witness);
    if check != best_count as u64 {
        return Err(VerificationFailure {
            property: "incremental search count equals direct count",
            detail: format!("search {best_count}, direct {check}"),
        }
        .into());
    }
    Ok(SearchRecord {
        n,
        best_count: check,
        witness,
        method: Method::Exhaustive,
        window: format!("{w}x{w} integer grid (doubled half-integer lattice)"),
        runtime: started.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Plain enumeration of all n-subsets in lexicographic order, counting
    /// each with the hash-based counter.
    fn naive(n: usize, w: usize) -> (u64, Vec<Point>) {
        let pts: Vec<Point> = (0..w as i64)
            .flat_map(|x| (0..w as i64).map(move |y| Point::int(x, y)))
            .collect();
        let mut best: (u64, Vec<Point>) = (0, Vec::new());
        let mut idx: Vec<usize> = (0..n).collect();
        loop {
            let set: PointSet = idx.iter().map(|&i| pts[i].clone()).collect();
            let c = count_irt(&set);
            if best.1.is_empty() || c > best.0 {
                best = (c, idx.iter().map(|&i| pts[i].clone()).collect());
            }
            let mut k = n;
            while k > 0 && idx[k - 1] == pts.len() - n + k - 1 {
                k -= 1;
            }
            if k == 0 {
                return best;
            }
            idx[k - 1] += 1;
            for j in k..n {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }

    #[test]
    fn window_completions_are_irts() {
        let win = Window::new(4);
        for p in 0..16u8 {
            for q in 0..16u8 {
                if p == q {
                    continue;
                }
                for &z in &win.completions[p as usize * 16 + q as usize] {
                    let c =
                        crate::geometry::classify_irt(&win.point(p), &win.point(q), &win.point(z));
                    assert!(c.is_irt());
                }
            }
        }
    }

    #[test]
    fn pruned_unpruned_and_naive_agree() {
        for n in 3..=5 {
            let naive = naive(n, 4);
            for prune in [true, false] {
                for exec in [Exec::Sequential, Exec::Parallel] {
                    let opts = ExhaustiveOptions {
                        prune,
                        exec,
                        ..Default::default()
                    };
                    let rec = exhaustive_max_with(n, 4, opts).unwrap();
                    assert_eq!(rec.best_count, naive.0, "n = {n}");
                    assert_eq!(rec.witness.sorted(), naive.1, "n = {n}, prune = {prune}");
                }
            }
        }
    }

    #[test]
    fn small_exact_values() {
        assert_eq!(exhaustive_max(3, 5).unwrap().best_count, 1);
        assert_eq!(exhaustive_max(4, 5).unwrap().best_count, 4);
        assert_eq!(exhaustive_max(5, 5).unwrap().best_count, 8);
    }

    #[test]
    fn budget_and_params() {
        let opts = ExhaustiveOptions {
            budget: 10,
            ..Default::default()
        };
        assert!(matches!(
            exhaustive_max_with(6, 5, opts),
            Err(Error::BudgetExceeded { .. })
        ));
        assert!(exhaustive_max(2, 5).is_err());
        assert!(exhaustive_max(10, 5).is_err());
        assert!(exhaustive_max(5, 8).is_err());
        assert!(exhaustive_max(5, 2).is_err());
    }
}
