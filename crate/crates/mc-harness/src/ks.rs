use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("KS distance needs at least one sample")]
pub struct KsError;

/// Standard normal CDF via the complementary error function.
pub fn standard_normal_cdf(x: f64) -> f64 {
    0.5 * libm::erfc(-x / std::f64::consts::SQRT_2)
}

/// Sup-norm distance between the empirical CDF of `samples` and a reference
/// CDF. Sorts a copy; O(N log N).
pub fn ks_distance(samples: &[f64], cdf: impl Fn(f64) -> f64) -> Result<f64, KsError> {
    let mut sorted = samples.to_vec();
    sorted.sort_unstable_by(|a, b| a.total_cmp(b));
    ks_distance_sorted(&sorted, cdf)
}

/// Same as [`ks_distance`] for already-sorted samples.
///
/// At each sample the empirical CDF jumps, so both the left and right limits
/// are compared against the reference.
pub fn ks_distance_sorted(sorted: &[f64], cdf: impl Fn(f64) -> f64) -> Result<f64, KsError> {
    if sorted.is_empty() {
        return Err(KsError);
    }
    let n = sorted.len() as f64;
    let mut sup = 0.0f64;
    for (i, &x) in sorted.iter().enumerate() {
        let f = cdf(x);
        sup = sup.max((f - i as f64 / n).abs());
        sup = sup.max((f - (i + 1) as f64 / n).abs());
    }
    Ok(sup)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_is_rejected() {
        assert_eq!(ks_distance(&[], |x| x), Err(KsError));
    }

    #[test]
    fn single_sample_at_median_gives_half() {
        // CDF value 1/2 at the only sample: sup(|1/2 - 0|, |1/2 - 1|) = 1/2
        let d = ks_distance(&[0.0], standard_normal_cdf).unwrap();
        assert!((d - 0.5).abs() < 1e-12);
    }

    #[test]
    fn constant_samples_vs_continuous_cdf() {
        let samples = vec![0.3; 1000];
        let d = ks_distance(&samples, |x| x.clamp(0.0, 1.0)).unwrap();
        assert!(d >= 0.5, "{d}");
    }

    #[test]
    fn uniform_grid_against_uniform_cdf_is_small() {
        // deterministic stand-in for the Glivenko-Cantelli sanity check
        let n = 100_000;
        let samples: Vec<f64> = (0..n).map(|i| (i as f64 + 0.5) / n as f64).collect();
        let d = ks_distance_sorted(&samples, |x| x.clamp(0.0, 1.0)).unwrap();
        assert!(d < 1.0 / n as f64, "{d}");
    }

    #[test]
    fn normal_cdf_reference_points() {
        assert!((standard_normal_cdf(0.0) - 0.5).abs() < 1e-15);
        assert!((standard_normal_cdf(1.959963984540054) - 0.975).abs() < 1e-9);
        assert!((standard_normal_cdf(-8.0) - 6.22096e-16).abs() < 1e-17);
    }
}
