use rand::distr::{Distribution, Uniform};

use crate::rng::RngStream;

/// Scratch space for the classical circular sampler.
#[derive(Debug, Default)]
pub(crate) struct ClassicalScratch {
    pub(crate) draws: Vec<u32>,
    next_free: Vec<u32>,
    pub(crate) prefs: Vec<u32>,
}

/// Draws `u` uniformly from `{0..n}^n` and runs the circular parking
/// construction on it.
pub(crate) fn sample_classical_into<'a>(
    n: usize,
    stream: &mut RngStream,
    scratch: &'a mut ClassicalScratch,
) -> &'a [u32] {
    let dist = Uniform::new_inclusive(0u32, n as u32).expect("valid range");
    scratch.draws.clear();
    scratch
        .draws
        .extend((0..n).map(|_| dist.sample(stream)));
    let draws = std::mem::take(&mut scratch.draws);
    classical_from_draws(&draws, scratch);
    scratch.draws = draws;
    &scratch.prefs
}

/// Parks the cars of `u in {0..n}^n` on a circle of `n + 1` spots (car `i`
/// takes the first free spot clockwise from `u[i]`), finds the one empty spot
/// `e`, and relabels so the street starts just after `e`:
/// `pref[i] = ((u[i] - e - 1) mod (n+1)) + 1`.
///
/// Exactly one spot stays empty and no car ever prefers it, so the output is
/// in `{1..n}^n`; by the rotation argument it is a parking function, and the
/// orbit structure makes the output uniform when `u` is uniform.
pub(crate) fn classical_from_draws(u: &[u32], scratch: &mut ClassicalScratch) {
    let n = u.len();
    let m = n + 1;
    let next_free = &mut scratch.next_free;
    next_free.clear();
    next_free.extend(0..m as u32);

    // Next-free-spot structure with path halving; at least one spot is always
    // free, so the walk terminates.
    let mut occupied_sum = 0u64;
    for &start in u {
        let mut s = start as usize;
        loop {
            let t = next_free[s] as usize;
            if t == s {
                break;
            }
            let t2 = next_free[t] as usize;
            next_free[s] = t2 as u32;
            s = t2;
        }
        occupied_sum += s as u64;
        next_free[s] = ((s + 1) % m) as u32;
    }
    let total: u64 = (m as u64) * (m as u64 - 1) / 2;
    let empty = (total - occupied_sum) as u32;

    let prefs = &mut scratch.prefs;
    prefs.clear();
    prefs.extend(u.iter().map(|&ui| {
        debug_assert_ne!(ui, empty, "no car may prefer the empty spot");
        (ui + n as u32 - empty) % m as u32 + 1
    }));
    assert!(
        pf_core::is_parking_prefs(prefs),
        "circular construction produced a non-parking function (bug)"
    );
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n1_is_always_the_single_sequence() {
        let mut scratch = ClassicalScratch::default();
        for stream in 0..20 {
            let mut rng = RngStream::new(9, stream);
            let prefs = sample_classical_into(1, &mut rng, &mut scratch);
            assert_eq!(prefs, &[1]);
        }
    }

    #[test]
    fn all_draw_vectors_of_length_two_map_to_parking_functions() {
        // Exhaustive over {0,1,2}^2: every draw vector must produce a valid
        // parking function of length 2.
        let mut scratch = ClassicalScratch::default();
        for a in 0..3u32 {
            for b in 0..3u32 {
                classical_from_draws(&[a, b], &mut scratch);
                assert!(pf_core::is_parking_prefs(&scratch.prefs));
            }
        }
    }
}
