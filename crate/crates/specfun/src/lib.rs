//! Special functions and limit-law objects for the cycle structure of random
//! parking functions: the exponential integral `E1`, the generalized Dickman
//! functions `rho_r`, the Shepp-Lloyd constants `G_r`, the Rayleigh law, the
//! asymptotic cycle-count moments, the large-deviation rate function, and the
//! joint limit density of (cyclic points, r-th longest cycle).
//!
//! Every quadrature or delay-equation evaluation returns a [`SpecFunResult`]
//! carrying an absolute error estimate next to the value.

mod asymptotic;
mod constants;
mod dickman;
mod e1;
mod golomb;
mod joint;
mod quad;
mod rate;
mod rayleigh;
mod result;

pub use asymptotic::{kn_asymptotic_mean, kn_asymptotic_var};
pub use constants::{EULER_MASCHERONI, PI_SQUARED_OVER_8, SQRT_PI_OVER_2};
pub use dickman::{dickman_rho, DickmanTable};
pub use e1::exp_integral_e1;
pub use golomb::{golomb_dickman_g, golomb_dickman_g_via_cycle_cdf, longest_cycle_limit_mean};
pub use joint::{joint_limit_cdf_factor, joint_limit_density};
pub use quad::{adaptive_gauss_kronrod, QuadResult};
pub use rate::{ldp_rate, ldp_rate_legendre_numeric};
pub use rayleigh::{rayleigh_cdf, rayleigh_moment, rayleigh_pdf};
pub use result::{DomainError, SpecFunResult};
