//! Named constants appearing in the limit laws, stored well past f64
//! precision so the literals themselves are the reference.

/// Euler-Mascheroni constant
/// gamma = 0.577215664901532860606512090082402431042...
pub const EULER_MASCHERONI: f64 = 0.577215664901532860606512090082402431;

/// pi^2 / 8 = 1.233700550136169827354311374984518891914...
pub const PI_SQUARED_OVER_8: f64 = 1.233700550136169827354311374984518892;

/// sqrt(pi / 2) = 1.253314137315500251207882642405522626503...
pub const SQRT_PI_OVER_2: f64 = 1.253314137315500251207882642405522627;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constants_satisfy_defining_relations() {
        assert!((PI_SQUARED_OVER_8 - std::f64::consts::PI.powi(2) / 8.0).abs() < 1e-15);
        assert!((SQRT_PI_OVER_2 - (std::f64::consts::PI / 2.0).sqrt()).abs() < 1e-15);
        // gamma = lim (H_n - ln n); at n = 2^24 with the 1/(2n) correction
        // the difference is far below 1e-8.
        let n = 1 << 24;
        let h: f64 = (1..=n).map(|k| 1.0 / k as f64).sum();
        let approx = h - (n as f64).ln() - 1.0 / (2.0 * n as f64);
        assert!((EULER_MASCHERONI - approx).abs() < 1e-8);
    }
}
