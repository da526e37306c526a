use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use pf_core::Variant;

use crate::counts::census_closed_form;

/// Largest `n` for which [`kn_mean_var`] uses exact rational arithmetic.
/// Above this the harmonic-number denominators get expensive and the float
/// path is used instead.
pub const EXACT_MOMENT_LIMIT: usize = 1000;

fn inv(n: usize) -> BigRational {
    BigRational::new(BigInt::from(1), BigInt::from(n))
}

/// Exact mean and variance of the number of cycles of a uniform permutation
/// of `m` symbols: `H_m` and `sum (1/k - 1/k^2)`.
pub fn permutation_cycle_moments(m: usize) -> (BigRational, BigRational) {
    assert!(m >= 1, "m must be at least 1");
    let mut mean = BigRational::zero();
    let mut var = BigRational::zero();
    for k in 1..=m {
        mean += inv(k);
        var += inv(k) - inv(k) * inv(k);
    }
    (mean, var)
}

/// Exact mean and variance of the cycle count of a uniform parking function,
/// by conditioning on the number of cyclic points: given `lambda = k` the
/// cycle count is distributed as the cycle count of a uniform permutation of
/// `k` symbols, so the mean is `E[H_lambda]` and the variance decomposes as
/// `E[Var(K|lambda)] + Var[E(K|lambda)]`.
///
/// Cost grows quickly with `n` (harmonic denominators); see
/// [`EXACT_MOMENT_LIMIT`] and [`kn_mean_var`].
pub fn kn_mean_var_exact(n: usize, variant: Variant) -> (BigRational, BigRational) {
    let census = census_closed_form(n, variant);
    let total = BigRational::from_integer(BigInt::from(census.total()));

    let mut h = BigRational::zero(); // H_k
    let mut v = BigRational::zero(); // sum (1/j - 1/j^2)
    let mut prev = 0usize;
    let mut e_h = BigRational::zero();
    let mut e_h2 = BigRational::zero();
    let mut e_v = BigRational::zero();
    for (k, count) in census.iter() {
        for j in prev + 1..=k {
            h += inv(j);
            v += inv(j) - inv(j) * inv(j);
        }
        prev = k;
        let c = BigRational::from_integer(BigInt::from(count.clone()));
        e_h += &c * &h;
        e_h2 += &c * &h * &h;
        e_v += &c * &v;
    }
    let mean = e_h / &total;
    let var = e_v / &total + e_h2 / &total - &mean * &mean;
    assert!(!var.is_negative());
    (mean, var)
}

/// `P(lambda_n = k)` as floats, indexed by `k` (index 0 unused). Computed by
/// the stable ratio recurrence; entries far in the tail underflow to zero.
pub fn lambda_pmf(n: usize, variant: Variant) -> Vec<f64> {
    assert!(n >= 1, "n must be at least 1");
    if n == 1 {
        return vec![0.0, 1.0];
    }
    match variant {
        Variant::Classical => {
            let m = (n + 1) as f64;
            let mut p = vec![0.0; n + 1];
            p[1] = 1.0 / m;
            for k in 1..n - 1 {
                let kf = k as f64;
                p[k + 1] = p[k] * ((kf + 1.0) / kf) * ((m - kf) / m);
            }
            // k = n is the permutation case n!/(n+1)^(n-1), which has its own
            // ratio against k = n-1.
            if n >= 2 {
                p[n] = p[n - 1] * 2.0 / (n as f64 - 1.0);
            }
            p
        }
        Variant::Prime => {
            let m = (n - 1) as f64;
            let mut p = vec![0.0; n];
            p[1] = 1.0 / m;
            for k in 1..n - 1 {
                let kf = k as f64;
                p[k + 1] = p[k] * ((kf + 1.0) / kf) * ((m - kf) / m);
            }
            p
        }
    }
}

fn kn_mean_var_f64(n: usize, variant: Variant) -> (f64, f64) {
    let p = lambda_pmf(n, variant);
    let mut h = 0.0f64;
    let mut v = 0.0f64;
    let mut e_h = 0.0f64;
    let mut e_h2 = 0.0f64;
    let mut e_v = 0.0f64;
    for (k, &pk) in p.iter().enumerate().skip(1) {
        let kf = k as f64;
        h += 1.0 / kf;
        v += 1.0 / kf - 1.0 / (kf * kf);
        e_h += pk * h;
        e_h2 += pk * h * h;
        e_v += pk * v;
    }
    (e_h, e_v + e_h2 - e_h * e_h)
}

/// Converts a big rational to `f64` without overflowing on huge numerators
/// and denominators.
pub(crate) fn ratio_to_f64(r: &BigRational) -> f64 {
    if r.is_zero() {
        return 0.0;
    }
    let num = r.numer().magnitude();
    let den = r.denom().magnitude();
    let k = den.bits() as i64 + 64 - num.bits() as i64;
    let scaled = if k >= 0 {
        (num << k as u64) / den
    } else {
        num / (den << (-k) as u64)
    };
    let q = scaled.to_f64().unwrap_or(f64::MAX);
    let v = q * 2.0f64.powi(-(k.clamp(-1060, 1060)) as i32);
    if r.is_negative() {
        -v
    } else {
        v
    }
}

/// Mean and variance of the cycle count as floats: exact rationals up to
/// [`EXACT_MOMENT_LIMIT`], the O(n) float recurrence above.
pub fn kn_mean_var(n: usize, variant: Variant) -> (f64, f64) {
    if n <= EXACT_MOMENT_LIMIT {
        let (mean, var) = kn_mean_var_exact(n, variant);
        (ratio_to_f64(&mean), ratio_to_f64(&var))
    } else {
        kn_mean_var_f64(n, variant)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(num: i64, den: i64) -> BigRational {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    #[test]
    fn permutation_moments_small() {
        assert_eq!(permutation_cycle_moments(1), (rat(1, 1), rat(0, 1)));
        assert_eq!(permutation_cycle_moments(2), (rat(3, 2), rat(1, 4)));
        // Brute force over S_3: cycle counts are 3,2,2,2,1,1, so the mean is
        // 11/6 and the variance 23/6 - (11/6)^2 = 17/36, matching the
        // formula sum(1/k - 1/k^2) = 1/4 + 2/9.
        assert_eq!(permutation_cycle_moments(3), (rat(11, 6), rat(17, 36)));
    }

    #[test]
    fn kn_moments_small() {
        let (mean, var) = kn_mean_var_exact(1, Variant::Classical);
        assert_eq!((mean, var), (rat(1, 1), rat(0, 1)));

        // n = 3 classical: (4/16)*1 + (6/16)*(3/2) + (6/16)*(11/6) = 3/2
        let (mean, _) = kn_mean_var_exact(3, Variant::Classical);
        assert_eq!(mean, rat(3, 2));

        // prime n = 1: the single sequence (1) has one cycle
        let (mean, var) = kn_mean_var_exact(1, Variant::Prime);
        assert_eq!((mean, var), (rat(1, 1), rat(0, 1)));
    }

    #[test]
    fn lambda_pmf_matches_exact_small() {
        let p = lambda_pmf(3, Variant::Classical);
        assert!((p[1] - 0.25).abs() < 1e-15);
        assert!((p[2] - 0.375).abs() < 1e-15);
        assert!((p[3] - 0.375).abs() < 1e-15);
        let p = lambda_pmf(3, Variant::Prime);
        assert!((p[1] - 0.5).abs() < 1e-15);
        assert!((p[2] - 0.5).abs() < 1e-15);
    }

    #[test]
    fn lambda_pmf_sums_to_one() {
        for variant in [Variant::Classical, Variant::Prime] {
            for n in [2usize, 10, 1000, 20000] {
                let s: f64 = lambda_pmf(n, variant).iter().sum();
                assert!((s - 1.0).abs() < 1e-12, "{variant} n={n}: sum={s}");
            }
        }
    }

    #[test]
    fn float_path_agrees_with_exact_path() {
        for variant in [Variant::Classical, Variant::Prime] {
            for n in [50usize, 500, 1000] {
                let (em, ev) = kn_mean_var(n, variant);
                let (fm, fv) = kn_mean_var_f64(n, variant);
                assert!((em - fm).abs() < 1e-10, "{variant} n={n} mean");
                assert!((ev - fv).abs() < 1e-10, "{variant} n={n} var");
            }
        }
    }

    #[test]
    fn large_n_matches_asymptotic_mean() {
        // 0.5 (log(2n) + gamma) at n = 1e4 is about 5.2398
        let (mean, _) = kn_mean_var(10_000, Variant::Classical);
        let target = 0.5 * ((2.0f64 * 1e4).ln() + 0.5772156649015329);
        assert!((mean - target).abs() < 0.05, "mean {mean} vs {target}");
    }

    #[test]
    fn ratio_to_f64_handles_huge_terms() {
        let huge = BigRational::new(
            BigInt::from(7) * BigInt::from(10u8).pow(500),
            BigInt::from(2) * BigInt::from(10u8).pow(500),
        );
        assert!((ratio_to_f64(&huge) - 3.5).abs() < 1e-12);
        assert_eq!(ratio_to_f64(&BigRational::zero()), 0.0);
        let neg = BigRational::new(BigInt::from(-1), BigInt::from(3));
        assert!((ratio_to_f64(&neg) + 1.0 / 3.0).abs() < 1e-15);
    }
}
