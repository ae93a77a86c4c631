//! Triangle placement from three side lengths.
//!
//! Places `B = (0,0)`, `C = (a,0)` and solves for `A = (p, q)` with
//! `p = (a^2 + c^2 - b^2) / (2a)` exact. The height `q = sqrt(c^2 - p^2)`
//! is rational only for special triangles; otherwise it is replaced by the
//! best rational approximation with denominator at most `denominator_bound`
//! and the perturbation is reported. Everything downstream verifies the
//! perturbed triangle exactly.

use lawcos_core::{Point, Scalar};
use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SidesError {
    #[error("side lengths must be positive")]
    NonPositive,
    #[error("triangle inequality violated: each side must be shorter than the other two combined")]
    TriangleInequality,
    #[error("denominator bound must be at least 1")]
    ZeroBound,
}

/// Result of placing a triangle from side lengths `a = BC`, `b = CA`,
/// `c = AB`.
#[derive(Debug, Clone)]
pub struct SidesPlacement {
    /// `[A, B, C]`.
    pub points: [Point; 3],
    /// Whether the requested sides were realized exactly.
    pub exact: bool,
    /// Realized squared side lengths `[BC^2, CA^2, AB^2]` of the placed
    /// triangle; these are what the verifier actually sees.
    pub realized_squared: [Scalar; 3],
    /// Human-readable description of any perturbation.
    pub note: String,
}

pub fn triangle_from_sides(
    a: &Scalar,
    b: &Scalar,
    c: &Scalar,
    denominator_bound: u64,
) -> Result<SidesPlacement, SidesError> {
    if denominator_bound == 0 {
        return Err(SidesError::ZeroBound);
    }
    if !a.is_positive() || !b.is_positive() || !c.is_positive() {
        return Err(SidesError::NonPositive);
    }
    if !(&(a + b) > c && &(b + c) > a && &(c + a) > b) {
        return Err(SidesError::TriangleInequality);
    }

    let two_a = &Scalar::from_int(2) * a;
    let p = &(&(&(a * a) + &(c * c)) - &(b * b)) / &two_a;
    // Strict triangle inequalities make this positive.
    let height_squared = &(c * c) - &(&p * &p);
    debug_assert!(height_squared.is_positive());

    let (q, exact) = match height_squared.exact_sqrt() {
        Some(root) => (root, true),
        None => (best_sqrt_approximation(&height_squared, denominator_bound), false),
    };

    let big_a = Point::new(p.clone(), q.clone());
    let big_b = Point::from_ints(0, 0);
    let big_c = Point::new(a.clone(), Scalar::zero());
    let realized_squared = [
        a * a,
        lawcos_core::squared_distance(&big_c, &big_a),
        lawcos_core::squared_distance(&big_a, &big_b),
    ];
    let note = if exact {
        format!("sides ({a}, {b}, {c}) realized exactly at A = {big_a}")
    } else {
        format!(
            "height sqrt({height_squared}) is irrational; perturbed to q = {q} \
             (denominator bound {denominator_bound}); realized squared sides \
             BC^2 = {}, CA^2 = {}, AB^2 = {} - verification is exact for the \
             perturbed triangle",
            realized_squared[0], realized_squared[1], realized_squared[2],
        )
    };
    Ok(SidesPlacement {
        points: [big_a, big_b, big_c],
        exact,
        realized_squared,
        note,
    })
}

/// Best rational approximation to `sqrt(t)` (for non-square rational
/// `t > 0`) among all fractions with denominator at most `bound`, found by
/// walking the Stern-Brocot tree with exact comparisons of squares.
fn best_sqrt_approximation(t: &Scalar, bound: u64) -> Scalar {
    let n = t.numer().clone();
    let d = t.denom().clone();
    let bound = BigInt::from(bound);

    // floor(sqrt(n/d)) = isqrt(n div d).
    let a0 = (&n / &d).sqrt();
    let (mut lo_n, mut lo_d) = (a0.clone(), BigInt::from(1));
    let (mut hi_n, mut hi_d) = (&a0 + 1u32, BigInt::from(1));

    // m/k < sqrt(n/d) iff m^2 d < n k^2 (everything non-negative).
    let below = |m: &BigInt, k: &BigInt| m * m * &d < &n * (k * k);

    loop {
        let mut advanced = false;

        // Largest s <= cap with lo + s*hi still below sqrt(t).
        let cap = (&bound - &lo_d) / &hi_d;
        if cap >= BigInt::from(1) {
            let step = |s: &BigInt| (&lo_n + s * &hi_n, &lo_d + s * &hi_d);
            if let Some(s) = max_satisfying(&cap, |s| {
                let (m, k) = step(s);
                below(&m, &k)
            }) {
                (lo_n, lo_d) = step(&s);
                advanced = true;
            }
        }

        // Largest s <= cap with hi + s*lo still above sqrt(t).
        let cap = (&bound - &hi_d) / &lo_d;
        if cap >= BigInt::from(1) {
            let step = |s: &BigInt| (&hi_n + s * &lo_n, &hi_d + s * &lo_d);
            if let Some(s) = max_satisfying(&cap, |s| {
                let (m, k) = step(s);
                !below(&m, &k)
            }) {
                (hi_n, hi_d) = step(&s);
                advanced = true;
            }
        }

        if !advanced {
            break;
        }
    }

    // The best approximation is the closer of the two enclosing fractions:
    // lo is closer iff sqrt(t) < (lo + hi) / 2.
    let mid_n = &lo_n * &hi_d + &hi_n * &lo_d;
    let mid_d = 2u32 * &lo_d * &hi_d;
    if &n * (&mid_d * &mid_d) < &mid_n * &mid_n * &d {
        Scalar::from_big(lo_n, lo_d)
    } else {
        Scalar::from_big(hi_n, hi_d)
    }
}

/// Largest `s` in `[1, cap]` satisfying a monotone-decreasing predicate,
/// by binary search; `None` when even `s = 1` fails.
fn max_satisfying(cap: &BigInt, predicate: impl Fn(&BigInt) -> bool) -> Option<BigInt> {
    let one = BigInt::from(1);
    if !predicate(&one) {
        return None;
    }
    let (mut good, mut unknown_hi) = (one, cap.clone());
    while good < unknown_hi {
        // Round up so the loop always makes progress.
        let mid = (&good + &unknown_hi + 1u32) / 2u32;
        if predicate(&mid) {
            good = mid;
        } else {
            unknown_hi = mid - 1u32;
        }
    }
    Some(good)
}
