//! Pinned thresholds for the experiment checks and the acceptance suite.
//!
//! The limit theorems come with no convergence rates, so the Monte Carlo
//! tolerances are empirical: set from pilot-run standard errors (about three
//! sigma at the stated n and sample counts), with the tolerance kept fixed
//! here rather than recalibrated per run.

/// KS(lambda/sqrt(n), Rayleigh(1)) at n = 1e4, N = 1e5. The exact law is
/// within 0.005 of Rayleigh there; sampling adds ~0.004.
pub const RAYLEIGH_KS_TOL: f64 = 0.02;

/// Relative error of mean(lambda/sqrt(n)) against sqrt(pi/2).
pub const RAYLEIGH_MEAN_REL_TOL: f64 = 0.02;

/// Relative error of the second moment of lambda/sqrt(n) against 2.
pub const RAYLEIGH_M2_REL_TOL: f64 = 0.02;

/// Mean cycle count against (1/2)(ln(2n) + gamma) at n = 1e5, N = 1e5.
pub const CYCLE_COUNT_MEAN_TOL: f64 = 0.05;

/// Variance of the cycle count against the asymptotic variance; wider than
/// the mean tolerance because the variance estimator is noisier (~0.023
/// standard error at N = 1e5).
pub const CYCLE_COUNT_VAR_TOL: f64 = 0.1;

/// KS of the standardized cycle count against the standard normal.
/// Unreachable at desk scale: the cycle count sits on the integer lattice
/// with spacing ~0.42 standard deviations at n = 1e5, which alone forces a
/// KS distance of about 0.09, and the un-centered (1/2) ln n standardization
/// adds a ~0.26-sigma mean offset, for a true distance near 0.17. Kept at
/// its nominal value; the check reports an honest failure.
pub const CLT_KS_TOL: f64 = 0.05;

/// Thresholds for the law-of-large-numbers tail table.
pub const LLN_EPSILONS: [f64; 3] = [0.1, 0.2, 0.5];

/// Bound on P(|K/((1/2) ln n) - 1| > 0.5) at n = 1e5. Also unreachable: the
/// exact probability there is about 0.20 (the window [0.5, 1.5] of the ratio
/// spans only ~1.7 standard deviations of K). Kept nominal; reported red.
pub const LLN_FINAL_TOL: f64 = 0.05;

/// |(1/ln n) ln E[e^{tK}] - (e^t-1)/2| at n = 1e6 for |t| <= 1. The
/// correction term is ln(E[Lambda^(e^t-1)] / Gamma(e^t)) / ln n; at t = -1
/// it equals 0.834/ln n = 0.060 at n = 1e6, so that single grid point fails
/// by design of the constant.
pub const MGF_TOL: f64 = 0.05;

/// Pointwise agreement of the rate function with its numeric Legendre
/// transform.
pub const LDP_LEGENDRE_TOL: f64 = 1e-8;

/// Reported limit of E[L_1]/sqrt(n), and the relative tolerance at
/// n = 1e5, N = 1e5.
pub const LONGEST_L1_LIMIT: f64 = 0.7825;
pub const LONGEST_L1_REL_TOL: f64 = 0.02;

/// Relative tolerance for E[L_r]/sqrt(n) against sqrt(pi/2) G_r, r >= 2.
pub const LONGEST_REL_TOL: f64 = 0.05;

/// Relative tolerance for E[C_k] against 1/k at n = 1e4, N = 1e5.
pub const SMALL_CYCLE_MEAN_REL_TOL: f64 = 0.05;

/// Total-variation distance between the empirical law of C_1 and Poisson(1).
pub const SMALL_CYCLE_TV_TOL: f64 = 0.03;
