use pf_core::{is_parking_prefs, ParkingFunction, PrefSequence};
use rand::distr::{Distribution, Uniform};
use thiserror::Error;

use crate::rng::RngStream;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("no parking function found in {tries} tries (n = {n})")]
pub struct RejectionExhausted {
    pub n: usize,
    pub tries: u64,
}

/// Draws uniformly from `[n]^n` until a parking function appears.
///
/// This is the trivially-correct uniformity oracle for the circular sampler.
/// The acceptance probability is `(n+1)^{n-1} / n^n`, about `e/n`, so keep
/// `n` small. Returns the function together with the number of tries used.
pub fn rejection_sample_pf(
    n: usize,
    stream: &mut RngStream,
    max_tries: u64,
) -> Result<(ParkingFunction, u64), RejectionExhausted> {
    assert!(n >= 1, "n must be at least 1");
    assert!(max_tries >= 1, "max_tries must be at least 1");
    let dist = Uniform::new_inclusive(1u32, n as u32).expect("valid range");
    let mut prefs = vec![0u32; n];
    for tries in 1..=max_tries {
        for p in prefs.iter_mut() {
            *p = dist.sample(stream);
        }
        if is_parking_prefs(&prefs) {
            let seq = PrefSequence::new(prefs).expect("entries are in range");
            let pf = ParkingFunction::classical(seq).expect("predicate just passed");
            return Ok((pf, tries));
        }
    }
    Err(RejectionExhausted { n, tries: max_tries })
}
