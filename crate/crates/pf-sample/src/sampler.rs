use pf_core::{ParkingFunction, PrefSequence, Variant};

use crate::classical::{sample_classical_into, ClassicalScratch};
use crate::prime::{sample_prime_into, PrimeScratch};
use crate::rng::RngStream;

/// A reusable exact-uniform sampler for one `(n, variant)` pair.
///
/// Holds scratch buffers so tight loops do not allocate per sample; use
/// [`sample_prefs`](Self::sample_prefs) to borrow the raw preferences or
/// [`sample`](Self::sample) for an owned, predicate-tagged value.
#[derive(Debug)]
pub struct UniformSampler {
    n: usize,
    variant: Variant,
    classical: ClassicalScratch,
    prime: PrimeScratch,
}

impl UniformSampler {
    pub fn new(n: usize, variant: Variant) -> Self {
        assert!(n >= 1, "n must be at least 1");
        Self {
            n,
            variant,
            classical: ClassicalScratch::default(),
            prime: PrimeScratch::default(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    /// Draws one uniform parking function and returns its preferences
    /// (1-indexed). The output has already passed the variant predicate.
    pub fn sample_prefs(&mut self, stream: &mut RngStream) -> &[u32] {
        match self.variant {
            Variant::Classical => sample_classical_into(self.n, stream, &mut self.classical),
            Variant::Prime => sample_prime_into(self.n, stream, &mut self.prime),
        }
    }

    pub fn sample(&mut self, stream: &mut RngStream) -> ParkingFunction {
        let variant = self.variant;
        let prefs = self.sample_prefs(stream).to_vec();
        let seq = PrefSequence::new(prefs).expect("sampler output is a valid sequence");
        ParkingFunction::new(seq, variant).expect("sampler output passed the predicate")
    }
}

/// One uniform classical parking function of length `n`.
pub fn sample_pf(n: usize, stream: &mut RngStream) -> ParkingFunction {
    UniformSampler::new(n, Variant::Classical).sample(stream)
}

/// One uniform prime parking function of length `n`.
pub fn sample_ppf(n: usize, stream: &mut RngStream) -> ParkingFunction {
    UniformSampler::new(n, Variant::Prime).sample(stream)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn outputs_pass_their_predicates() {
        for stream in 0..50 {
            let mut rng = RngStream::new(11, stream);
            let pf = sample_pf(20, &mut rng);
            assert_eq!(pf.variant(), Variant::Classical);
            let mut rng = RngStream::new(11, stream);
            let ppf = sample_ppf(20, &mut rng);
            assert_eq!(ppf.variant(), Variant::Prime);
        }
    }

    #[test]
    fn reusable_sampler_matches_one_shot() {
        let mut sampler = UniformSampler::new(12, Variant::Classical);
        for stream in 0..10 {
            let a = sampler.sample(&mut RngStream::new(5, stream));
            let b = sample_pf(12, &mut RngStream::new(5, stream));
            assert_eq!(a, b);
        }
    }
}
