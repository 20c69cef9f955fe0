//! Seeded random point sets for property checks and the verification suite.
//!
//! Purely random rational points almost never contain IRTs, so most sets
//! are random subsets of a small grid pushed through a random rational
//! similarity, optionally mixed with a few free points.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::geometry::Point;
use crate::point_set::PointSet;
use crate::rational::Rational;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_rational<R: Rng>(rng: &mut R, max_num: i64, max_den: i64) -> Rational {
    let num = rng.gen_range(-max_num..=max_num);
    let den = rng.gen_range(1..=max_den);
    Rational::new(num, den).expect("non-zero denominator")
}

fn free_point<R: Rng>(rng: &mut R) -> Point {
    Point::new(random_rational(rng, 12, 4), random_rational(rng, 12, 4))
}

/// `n` distinct points with small random rational coordinates.
pub fn random_rational_set<R: Rng>(rng: &mut R, n: usize) -> PointSet {
    let mut set = PointSet::new();
    while set.len() < n {
        set.insert(free_point(rng));
    }
    set
}

/// `n` points of a random grid subset mapped by `z ↦ a·z + b` with
/// random non-zero complex rational `a`, plus up to `n / 4` free points.
pub fn structured_set<R: Rng>(rng: &mut R, n: usize) -> PointSet {
    let free = rng.gen_range(0..=n / 4);
    let from_grid = n - free;
    let side = (1..)
        .find(|k| k * k >= from_grid.max(1) * 3 / 2)
        .unwrap()
        .max(2) as i64;
    let mut cells: Vec<(i64, i64)> = (0..side)
        .flat_map(|x| (0..side).map(move |y| (x, y)))
        .collect();
    cells.shuffle(rng);
    let (u, v) = loop {
        let u = random_rational(rng, 3, 2);
        let v = random_rational(rng, 3, 2);
        if !(u.is_zero() && v.is_zero()) {
            break (u, v);
        }
    };
    let shift = free_point(rng);
    let mut set = PointSet::new();
    for &(x, y) in cells.iter().take(from_grid) {
        let (x, y) = (Rational::from_int(x), Rational::from_int(y));
        let p = Point::new(&u * &x - &v * &y, &u * &y + &v * &x);
        set.insert(p.add(&shift));
    }
    while set.len() < n {
        set.insert(free_point(rng));
    }
    set
}

/// Structured three times out of four, otherwise free points; size
/// uniform in `min_n..=max_n`.
pub fn mixed_set<R: Rng>(rng: &mut R, min_n: usize, max_n: usize) -> PointSet {
    let n = rng.gen_range(min_n..=max_n);
    if rng.gen_bool(0.75) {
        structured_set(rng, n)
    } else {
        random_rational_set(rng, n)
    }
}

/// `count` sets from a generator seeded with `seed`.
pub fn mixed_sets(seed: u64, count: usize, min_n: usize, max_n: usize) -> Vec<PointSet> {
    let mut rng = rng(seed);
    (0..count)
        .map(|_| mixed_set(&mut rng, min_n, max_n))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes_and_determinism() {
        let a = mixed_sets(7, 50, 3, 40);
        let b = mixed_sets(7, 50, 3, 40);
        assert_eq!(a, b);
        assert!(a.iter().all(|s| (3..=40).contains(&s.len())));
        assert_ne!(a, mixed_sets(8, 50, 3, 40));
    }

    #[test]
    fn structured_sets_contain_irts() {
        let mut r = rng(3);
        let hits = (0..40)
            .filter(|_| crate::count_irt(&structured_set(&mut r, 12)) > 0)
            .count();
        assert!(hits > 20, "{hits}");
    }
}
