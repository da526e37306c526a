//! Exact enumeration and distribution theory for cycle statistics of parking
//! functions.
//!
//! Counts and probability masses are arbitrary-precision (`BigUint` /
//! `BigRational`); the closed forms are cross-checked by two independent
//! oracles, a brute-force sweep over `[n]^n` and a literal evaluation of the
//! inclusion-exclusion partition sum. Conditional moments and the moment
//! generating function of the cycle count use the fact that, given `k` cyclic
//! points, the cycle structure is that of a uniform permutation of `k`
//! symbols.

mod census;
mod counts;
mod mgf;
mod moments;
mod partition_sum;

pub use census::census_oracle_bruteforce;
pub use counts::{
    census_closed_form, count_cyclic, count_pf, count_pf_cyclic, count_ppf, count_ppf_cyclic,
    pmf_cyclic, CyclicPointCensus, ExactError,
};
pub use mgf::{kn_log_mgf, kn_mgf, kn_pmf};
pub use moments::{
    kn_mean_var, kn_mean_var_exact, lambda_pmf, permutation_cycle_moments, EXACT_MOMENT_LIMIT,
};
pub use partition_sum::census_oracle_partition_sum;

pub use num_bigint::BigUint;
pub use num_rational::BigRational;
