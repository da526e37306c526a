use crate::dickman::shared_table;
use crate::result::DomainError;

fn check_positive(
    func: &'static str,
    arg: &'static str,
    value: f64,
) -> Result<(), DomainError> {
    if !(value > 0.0) || !value.is_finite() {
        return Err(DomainError::OutOfDomain {
            func,
            arg,
            value,
            domain: "> 0",
        });
    }
    Ok(())
}

fn check_rank(func: &'static str, r: usize) -> Result<(), DomainError> {
    if r < 1 || r > shared_table().r_max() {
        return Err(DomainError::RankOutOfRange {
            func,
            r,
            domain: "1 <= r <= 24",
        });
    }
    Ok(())
}

/// Limiting joint density of `(lambda_n/sqrt(n), L_r(pi_n)/sqrt(n))`:
///
/// `f(x, y) = (x/y) exp(-x^2/2) (rho_r((x-y)/y) - rho_(r-1)((x-y)/y))`
///
/// for `x > y`, and 0 for `0 < x <= y` (the r-th longest cycle cannot exceed
/// the number of cyclic points).
pub fn joint_limit_density(r: usize, x: f64, y: f64) -> Result<f64, DomainError> {
    check_rank("joint_limit_density", r)?;
    check_positive("joint_limit_density", "x", x)?;
    check_positive("joint_limit_density", "y", y)?;
    if x <= y {
        return Ok(0.0);
    }
    let table = shared_table();
    let u = (x - y) / y;
    let diff = table.eval(r, u) - table.eval(r - 1, u);
    Ok((x / y) * (-x * x / 2.0).exp() * diff)
}

/// The limiting joint CDF factor `x exp(-x^2/2) rho_r(x/y)` from the joint
/// law `P(lambda_n = k, L_r <= l) ~ n^(-1/2) x e^(-x^2/2) rho_r(x/y)`.
pub fn joint_limit_cdf_factor(r: usize, x: f64, y: f64) -> Result<f64, DomainError> {
    check_rank("joint_limit_cdf_factor", r)?;
    check_positive("joint_limit_cdf_factor", "x", x)?;
    check_positive("joint_limit_cdf_factor", "y", y)?;
    let table = shared_table();
    Ok(x * (-x * x / 2.0).exp() * table.eval(r, x / y))
}
