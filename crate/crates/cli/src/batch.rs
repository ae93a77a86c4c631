//! Randomized batch harness.
//!
//! Triangle generation uses a self-contained SplitMix64 generator so that
//! a `(count, seed, bound)` triple reproduces the same triangle sequence
//! on every platform and in every build of this tool.

use std::time::{Duration, Instant};

use lawcos_core::verify::{run_all, RunOptions};
use lawcos_core::{signed_area, Point};

/// SplitMix64: 64 bits of state, fixed constants, stable output forever.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Unbiased draw from `[0, n)` by rejection.
    fn below(&mut self, n: u64) -> u64 {
        debug_assert!(n > 0);
        let limit = u64::MAX - u64::MAX % n;
        loop {
            let value = self.next_u64();
            if value < limit {
                return value % n;
            }
        }
    }

    /// Uniform integer in the inclusive range `[lo, hi]`.
    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        debug_assert!(lo <= hi);
        let span = (hi - lo) as u64 + 1;
        lo + self.below(span) as i64
    }
}

/// One failing instance: which triangle, and which checks failed.
#[derive(Debug, Clone)]
pub struct BatchFailure {
    pub index: u64,
    pub points: [Point; 3],
    pub failed_checks: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct BatchSummary {
    pub count: u64,
    pub seed: u64,
    pub bound: i64,
    pub failures: Vec<BatchFailure>,
    pub elapsed: Duration,
}

/// Draws the next nondegenerate triangle with integer coordinates in
/// `[-bound, bound]`, discarding collinear draws.
pub fn next_triangle(rng: &mut SplitMix64, bound: i64) -> [Point; 3] {
    loop {
        let mut coords = [0i64; 6];
        for c in &mut coords {
            *c = rng.int_in(-bound, bound);
        }
        let points = [
            Point::from_ints(coords[0], coords[1]),
            Point::from_ints(coords[2], coords[3]),
            Point::from_ints(coords[4], coords[5]),
        ];
        if !signed_area(&points[0], &points[1], &points[2]).is_zero() {
            return points;
        }
    }
}

/// Runs the full check suite on `count` random triangles.
pub fn batch_random(count: u64, seed: u64, bound: i64) -> BatchSummary {
    assert!(count >= 1, "count must be at least 1");
    assert!(bound >= 2, "bound must be at least 2");
    let start = Instant::now();
    let mut rng = SplitMix64::new(seed);
    let options = RunOptions::default();
    let mut failures = Vec::new();
    for index in 0..count {
        let points = next_triangle(&mut rng, bound);
        let report = run_all(
            points[0].clone(),
            points[1].clone(),
            points[2].clone(),
            &options,
        )
        .expect("generated triangles are nondegenerate");
        if !report.all_pass {
            failures.push(BatchFailure {
                index,
                points,
                failed_checks: report.failed_check_names(),
            });
        }
    }
    BatchSummary { count, seed, bound, failures, elapsed: start.elapsed() }
}
