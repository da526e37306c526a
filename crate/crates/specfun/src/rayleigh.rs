use crate::constants::SQRT_PI_OVER_2;
use crate::result::DomainError;

/// Rayleigh(1) density `x exp(-x^2/2)` on `x >= 0`.
pub fn rayleigh_pdf(x: f64) -> Result<f64, DomainError> {
    if !(x >= 0.0) {
        return Err(DomainError::OutOfDomain {
            func: "rayleigh_pdf",
            arg: "x",
            value: x,
            domain: "x >= 0",
        });
    }
    Ok(x * (-x * x / 2.0).exp())
}

/// Rayleigh(1) distribution function `1 - exp(-x^2/2)` on `x >= 0`.
pub fn rayleigh_cdf(x: f64) -> Result<f64, DomainError> {
    if !(x >= 0.0) {
        return Err(DomainError::OutOfDomain {
            func: "rayleigh_cdf",
            arg: "x",
            value: x,
            domain: "x >= 0",
        });
    }
    Ok(-(-x * x / 2.0).exp_m1())
}

/// `p`-th moment of Rayleigh(1): `2^(p/2) Gamma(1 + p/2)`, which is `p!!`
/// for even `p` and `sqrt(pi/2) p!!` for odd `p`.
pub fn rayleigh_moment(p: u32) -> f64 {
    assert!(p >= 1, "moment order must be at least 1");
    let mut double_fact = 1.0f64;
    let mut k = p;
    while k > 1 {
        double_fact *= k as f64;
        k -= 2;
    }
    if p % 2 == 0 {
        double_fact
    } else {
        SQRT_PI_OVER_2 * double_fact
    }
}
