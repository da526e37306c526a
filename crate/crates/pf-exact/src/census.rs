use std::collections::BTreeMap;

use num_bigint::BigUint;
use pf_core::{cycle_stats_with, is_parking_prefs, is_prime_parking_prefs, CycleScratch, Variant};
use rayon::prelude::*;

use crate::counts::{CyclicPointCensus, ExactError};

const BRUTE_FORCE_MAX: usize = 7;
const BRUTE_FORCE_MAX_LARGE: usize = 8;

/// Exhaustive census: iterate all of `[n]^n`, keep the sequences passing the
/// variant predicate, and classify them by number of cyclic points.
///
/// This is the independent oracle for the closed-form counts. `n <= 7` by
/// default (about 8e5 sequences); `n = 8` (about 1.7e7) behind `allow_large`.
/// Parallelized over the first coordinate.
pub fn census_oracle_bruteforce(
    n: usize,
    variant: Variant,
    allow_large: bool,
) -> Result<CyclicPointCensus, ExactError> {
    assert!(n >= 1, "n must be at least 1");
    let max = if allow_large {
        BRUTE_FORCE_MAX_LARGE
    } else {
        BRUTE_FORCE_MAX
    };
    if n > max {
        return Err(ExactError::BruteForceTooLarge { n, max });
    }

    let lambda_counts = (1..=n as u32)
        .into_par_iter()
        .map(|first| {
            let mut counts = vec![0u64; n + 1];
            let mut digits = vec![1u32; n];
            digits[0] = first;
            let mut scratch = CycleScratch::default();
            loop {
                let ok = match variant {
                    Variant::Classical => is_parking_prefs(&digits),
                    Variant::Prime => is_prime_parking_prefs(&digits),
                };
                if ok {
                    let stats = cycle_stats_with(&digits, &mut scratch);
                    counts[stats.cyclic_points() as usize] += 1;
                }
                // odometer over the trailing n-1 coordinates
                let mut pos = 1;
                while pos < n {
                    if digits[pos] < n as u32 {
                        digits[pos] += 1;
                        break;
                    }
                    digits[pos] = 1;
                    pos += 1;
                }
                if pos == n {
                    break;
                }
            }
            counts
        })
        .reduce(
            || vec![0u64; n + 1],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        );

    let mut counts = BTreeMap::new();
    for (k, &c) in lambda_counts.iter().enumerate().skip(1) {
        if c > 0 {
            counts.insert(k, BigUint::from(c));
        }
    }
    Ok(CyclicPointCensus::from_counts(n, variant, counts))
}
