use rand::distr::{Distribution, Uniform};

use crate::rng::RngStream;

/// Scratch space for the prime rotation sampler.
#[derive(Debug, Default)]
pub(crate) struct PrimeScratch {
    pub(crate) draws: Vec<u32>,
    counts: Vec<i64>,
    pub(crate) prefs: Vec<u32>,
}

pub(crate) fn sample_prime_into<'a>(
    n: usize,
    stream: &mut RngStream,
    scratch: &'a mut PrimeScratch,
) -> &'a [u32] {
    if n == 1 {
        scratch.prefs.clear();
        scratch.prefs.push(1);
        return &scratch.prefs;
    }
    let m = n - 1;
    let dist = Uniform::new_inclusive(1u32, m as u32).expect("valid range");
    scratch.draws.clear();
    scratch
        .draws
        .extend((0..n).map(|_| dist.sample(stream)));
    let draws = std::mem::take(&mut scratch.draws);
    prime_from_draws(&draws, scratch);
    scratch.draws = draws;
    &scratch.prefs
}

/// Maps `u in {1..n-1}^n` to the unique cyclic value shift of `u` that is a
/// prime parking function.
///
/// The shift is located in O(n) instead of by testing all `n - 1` shifts:
/// with `w_p = #\{i : u_i = p\} - 1` the shifted sequence is prime exactly
/// when every prefix sum of the rotated `w` is >= 1, and since the `w_p` sum
/// to 1 over the circle, the cycle lemma puts the unique valid rotation start
/// right after the last minimum of the running sums. The exhaustive shift
/// audit certifies the equivalence with per-shift predicate testing for all
/// sequences up to n = 6, and every output is re-checked here.
pub(crate) fn prime_from_draws(u: &[u32], scratch: &mut PrimeScratch) {
    let n = u.len();
    let m = n - 1;
    debug_assert!(m >= 1);

    let counts = &mut scratch.counts;
    counts.clear();
    counts.resize(m + 1, 0);
    for &ui in u {
        counts[ui as usize] += 1;
    }

    // Last argmin of T_s = sum_{p<=s} (counts[p] - 1) over s = 0..m-1.
    let mut running = 0i64;
    let mut best = i64::MAX;
    let mut best_s = 0usize;
    for s in 0..m {
        if running <= best {
            // `<=` keeps the last minimum
            best = running;
            best_s = s;
        }
        running += counts[s + 1] - 1;
    }
    let shift = ((m - best_s) % m) as u32;

    let prefs = &mut scratch.prefs;
    prefs.clear();
    prefs.extend(
        u.iter()
            .map(|&ui| (ui + shift - 1) % m as u32 + 1),
    );
    assert!(
        pf_core::is_prime_parking_prefs(prefs),
        "rotation construction produced a non-prime sequence (bug)"
    );
}
