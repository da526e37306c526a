use pf_core::Variant;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Which cycle statistic an experiment samples.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Statistic {
    /// Number of cyclic points, scaled by sqrt(n); Rayleigh(1) limit.
    CyclicPoints,
    /// Number of cycles; normal limit after standardization by (1/2) ln n.
    CycleCount,
    /// Length of the r-th longest cycle, scaled by sqrt(n).
    LongestCycle { r: u32 },
    /// Number of k-cycles; Poisson(1/k) limit.
    SmallCycles { k: u32 },
}

/// Everything that determines an experiment's result. Identical configs give
/// byte-identical summaries regardless of worker count.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub variant: Variant,
    pub n: u64,
    pub samples: u64,
    pub seed: u64,
    pub statistic: Statistic,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("n must be at least 1")]
    BadN,
    #[error("samples must be at least 1")]
    BadSamples,
    #[error("rank r must be at least 1")]
    BadRank,
    #[error("cycle length k must be at least 1")]
    BadCycleLength,
    #[error("expected a {expected} config, got {got:?}")]
    WrongStatistic {
        expected: &'static str,
        got: Statistic,
    },
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.n < 1 {
            return Err(ConfigError::BadN);
        }
        if self.samples < 1 {
            return Err(ConfigError::BadSamples);
        }
        match self.statistic {
            Statistic::LongestCycle { r } if r < 1 => Err(ConfigError::BadRank),
            Statistic::SmallCycles { k } if k < 1 => Err(ConfigError::BadCycleLength),
            _ => Ok(()),
        }
    }
}
