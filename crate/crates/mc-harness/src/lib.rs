//! Monte Carlo experiments for the cycle-structure limit laws of random
//! parking functions.
//!
//! Experiments are reproducible down to the byte: each sample index gets its
//! own counter-based RNG stream, samples are processed in fixed-size chunks,
//! and everything carried across chunk merges is integer-valued (raw
//! statistics, histogram counts), so the merged result is independent of
//! worker count and merge order. All floating-point summary quantities are
//! derived once, from sorted data, after the merge.

mod config;
mod engine;
mod experiments;
mod ks;
mod mgf_table;
mod summary;
pub mod tolerances;

pub use config::{ConfigError, ExperimentConfig, Statistic};
pub use engine::run_experiment;
pub use experiments::{
    run_cycle_count_experiment, run_cyclic_points_experiment, run_longest_cycle_experiment,
    run_small_cycle_experiment,
};
pub use ks::{ks_distance, ks_distance_sorted, standard_normal_cdf, KsError};
pub use mgf_table::{run_mgf_scaling_experiment, MgfRow, MgfTable};
pub use summary::{
    Check, ExperimentSummary, Histogram, JointHistogram, KsReport, LlnTail, Moments, PmfEntry,
};
