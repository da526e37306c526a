use crate::constants::{EULER_MASCHERONI, PI_SQUARED_OVER_8};

/// Asymptotic mean of the cycle count of a random parking function:
/// `(1/2)(ln(2n) + gamma)`.
pub fn kn_asymptotic_mean(n: u64) -> f64 {
    assert!(n >= 1);
    0.5 * ((2.0 * n as f64).ln() + EULER_MASCHERONI)
}

/// Asymptotic variance: `(1/2)(ln(2n) + gamma) - pi^2/8`.
pub fn kn_asymptotic_var(n: u64) -> f64 {
    kn_asymptotic_mean(n) - PI_SQUARED_OVER_8
}
