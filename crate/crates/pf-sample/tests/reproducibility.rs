use pf_core::Variant;
use pf_sample::{RngStream, UniformSampler};

#[test]
fn identical_keys_give_identical_samples() {
    for variant in [Variant::Classical, Variant::Prime] {
        let mut a = UniformSampler::new(50, variant);
        let mut b = UniformSampler::new(50, variant);
        for i in 0..200 {
            let x = a.sample_prefs(&mut RngStream::new(42, i)).to_vec();
            let y = b.sample_prefs(&mut RngStream::new(42, i)).to_vec();
            assert_eq!(x, y);
        }
    }
}

/// Pins the byte-level output of the generator stack. If this test starts
/// failing after a dependency bump, the sampled sequences (and every seeded
/// experiment result) have silently changed.
#[test]
fn golden_first_samples() {
    let mut sampler = UniformSampler::new(8, Variant::Classical);
    let got: Vec<Vec<u32>> = (0..3)
        .map(|i| sampler.sample_prefs(&mut RngStream::new(42, i)).to_vec())
        .collect();
    let mut prime_sampler = UniformSampler::new(8, Variant::Prime);
    let got_prime: Vec<Vec<u32>> = (0..3)
        .map(|i| prime_sampler.sample_prefs(&mut RngStream::new(42, i)).to_vec())
        .collect();

    // Frozen from the first run of this implementation; the distributional
    // tests in uniformity.rs are what certify correctness.
    let expected: Vec<Vec<u32>> = vec![
        vec![2, 6, 1, 8, 6, 3, 3, 5],
        vec![1, 3, 2, 7, 6, 1, 1, 4],
        vec![1, 2, 3, 3, 6, 5, 2, 2],
    ];
    let expected_prime: Vec<Vec<u32>> = vec![
        vec![1, 4, 1, 6, 5, 2, 2, 4],
        vec![1, 3, 2, 6, 5, 1, 1, 3],
        vec![1, 2, 3, 3, 5, 4, 2, 1],
    ];
    assert_eq!(got, expected);
    assert_eq!(got_prime, expected_prime);
}
