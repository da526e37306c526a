use crate::constants::EULER_MASCHERONI;
use crate::result::{DomainError, SpecFunResult};

/// The exponential integral `E1(x) = int_x^inf t^-1 e^-t dt` for `x > 0`.
///
/// Power series for `x <= 1`, modified-Lentz continued fraction beyond; both
/// converge to a few ulps, comfortably inside the documented bound
/// `max(1e-12, 1e-12 |value|)`.
pub fn exp_integral_e1(x: f64) -> Result<SpecFunResult, DomainError> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(DomainError::OutOfDomain {
            func: "exp_integral_e1",
            arg: "x",
            value: x,
            domain: "x > 0",
        });
    }
    if x <= 1.0 {
        // E1(x) = -gamma - ln x + sum_{k>=1} (-1)^(k+1) x^k / (k k!)
        let mut term = x;
        let mut sum = x;
        let mut k = 1.0f64;
        loop {
            k += 1.0;
            term *= -x * (k - 1.0) / (k * k);
            sum += term;
            if term.abs() < 1e-18 {
                break;
            }
        }
        let value = -EULER_MASCHERONI - x.ln() + sum;
        Ok(SpecFunResult::new(
            value,
            1e-18 + 4.0 * f64::EPSILON * (EULER_MASCHERONI + x.ln().abs() + sum.abs()),
        ))
    } else {
        // E1(x) = e^-x / (x + 1 - 1/(x + 3 - 4/(x + 5 - 9/(...))))
        const FPMIN: f64 = 1e-300;
        let mut b = x + 1.0;
        let mut c = 1.0 / FPMIN;
        let mut d = 1.0 / b;
        let mut h = d;
        for i in 1..200 {
            let a = -((i * i) as f64);
            b += 2.0;
            d = 1.0 / (a * d + b);
            c = b + a / c;
            let del = c * d;
            h *= del;
            if (del - 1.0).abs() < 1e-16 {
                break;
            }
        }
        let value = h * (-x).exp();
        Ok(SpecFunResult::new(value, 8.0 * f64::EPSILON * value + 1e-300))
    }
}
