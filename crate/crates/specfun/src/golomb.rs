use std::sync::OnceLock;

use crate::constants::SQRT_PI_OVER_2;
use crate::dickman::DickmanTable;
use crate::e1::exp_integral_e1;
use crate::quad::adaptive_gauss_kronrod;
use crate::result::{DomainError, SpecFunResult};

const X_MAX: f64 = 45.0;
const MAX_RANK: usize = 64;

fn ln_gamma_int(r: usize) -> f64 {
    // ln((r-1)!)
    (2..r).map(|i| (i as f64).ln()).sum()
}

/// The Shepp-Lloyd constant
/// `G_r = (1/Gamma(r)) int_0^inf E1(x)^(r-1) exp(-E1(x) - x) dx`,
/// the limit of `E[L_r(sigma_n)] / n` for uniform random permutations.
/// `G_1` is the Golomb-Dickman constant, about 0.6243.
///
/// The integrand's mass sits near `x ~ e^(-r)` for larger `r` (where
/// `E1(x) ~ r - 1`), so the piece on `(0, 1]` is integrated in `s = ln x`,
/// where it becomes a smooth bump; `[1, X_MAX]` is integrated directly. Both
/// truncation tails are bounded analytically and added to the error estimate.
pub fn golomb_dickman_g(r: usize) -> Result<SpecFunResult, DomainError> {
    if r < 1 || r > MAX_RANK {
        return Err(DomainError::RankOutOfRange {
            func: "golomb_dickman_g",
            r,
            domain: "1 <= r <= 64",
        });
    }
    let lg = ln_gamma_int(r);
    let log_f = |x: f64| -> f64 {
        let e1 = exp_integral_e1(x).expect("x > 0").value;
        if e1 <= 0.0 {
            return f64::NEG_INFINITY;
        }
        (r as f64 - 1.0) * e1.ln() - e1 - x - lg
    };

    // x in (0, 1] via x = e^s: integrand becomes exp(log_f(e^s) + s).
    // As s -> -inf, E1(e^s) ~ -gamma - s and the integrand decays like
    // (-s)^(r-1) e^(2s); sixty e-foldings below the bump's center is far
    // below f64 resolution of the total.
    let s_min = -((r as f64 - 1.0) / 2.0) - 60.0;
    let lower = adaptive_gauss_kronrod(|s| (log_f(s.exp()) + s).exp(), s_min, 0.0, 1e-12);
    let upper = adaptive_gauss_kronrod(|x| log_f(x).exp(), 1.0, X_MAX, 1e-12);

    // int_{-inf}^{s_min} ~ g(s_min) / 2 for an e^{2s} envelope; the upper
    // tail is below E1(X_MAX)^(r-1) e^(-X_MAX) / Gamma(r).
    let lower_tail = (log_f(s_min.exp()) + s_min).exp();
    let e1_top = exp_integral_e1(X_MAX).expect("positive").value;
    let upper_tail = ((r as f64 - 1.0) * e1_top.ln() - X_MAX - lg).exp();

    Ok(SpecFunResult::new(
        lower.value + upper.value,
        lower.abs_error + upper.abs_error + lower_tail + upper_tail,
    ))
}

/// Wide, coarse Dickman grid for the CDF route. Unlike `rho_1`, the higher
/// rows decay only like `1/u` (the r-th longest cycle is small with real
/// probability), so the integral below needs `rho_r` far out: truncating at
/// u = 50 already costs ~6e-4 at r = 2.
fn wide_table() -> &'static DickmanTable {
    static WIDE: OnceLock<DickmanTable> = OnceLock::new();
    WIDE.get_or_init(|| DickmanTable::build(8, 4000, 50))
}

/// `G_r` by the second route: integrating the limiting CDF of the scaled
/// `r`-th longest cycle of a random permutation,
/// `P(L_r/n <= y) -> rho_r(1/y)`, so
/// `G_r = int_0^1 y dF(y) = int_0^1 (1 - rho_r(1/y)) dy`.
///
/// Entirely independent of the `E1` integral above; agreement of the two
/// routes checks both the quadrature and the Dickman solver. The piece below
/// `y = 1/u_max` is bracketed by monotonicity: `rho_r(1/y)` there lies in
/// `[0, rho_r(u_max)]`, so the midpoint is taken and half the bracket goes
/// into the error estimate.
pub fn golomb_dickman_g_via_cycle_cdf(r: usize) -> Result<SpecFunResult, DomainError> {
    let table = wide_table();
    if r < 1 || r > table.r_max() {
        return Err(DomainError::RankOutOfRange {
            func: "golomb_dickman_g_via_cycle_cdf",
            r,
            domain: "1 <= r <= 8",
        });
    }
    let y0 = 1.0 / table.x_max();
    let q = adaptive_gauss_kronrod(|y| 1.0 - table.eval(r, 1.0 / y), y0, 1.0, 1e-9);
    let tail = table.tail_bound(r);
    let value = q.value + y0 * (1.0 - 0.5 * tail);
    let err = q.abs_error + 0.5 * y0 * tail + 2e-6;
    Ok(SpecFunResult::new(value, err))
}

/// `sqrt(pi/2) * G_r`: the limit of `E[L_r(pi_n)] / sqrt(n)` for uniform
/// parking functions; about 0.7825 at r = 1.
pub fn longest_cycle_limit_mean(r: usize) -> Result<SpecFunResult, DomainError> {
    let g = golomb_dickman_g(r)?;
    Ok(SpecFunResult::new(
        SQRT_PI_OVER_2 * g.value,
        SQRT_PI_OVER_2 * g.abs_error_estimate + 4.0 * f64::EPSILON,
    ))
}
