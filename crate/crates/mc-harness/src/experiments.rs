use crate::config::{ConfigError, ExperimentConfig, Statistic};
use crate::engine::run_experiment;
use crate::summary::ExperimentSummary;

fn expect_kind(
    cfg: &ExperimentConfig,
    ok: bool,
    expected: &'static str,
) -> Result<(), ConfigError> {
    if ok {
        Ok(())
    } else {
        Err(ConfigError::WrongStatistic {
            expected,
            got: cfg.statistic,
        })
    }
}

/// Samples `lambda_n / sqrt(n)` and reports its distance to Rayleigh(1),
/// its mean against `sqrt(pi/2)`, and its second moment against 2.
pub fn run_cyclic_points_experiment(
    cfg: &ExperimentConfig,
    workers: Option<usize>,
) -> Result<ExperimentSummary, ConfigError> {
    expect_kind(
        cfg,
        matches!(cfg.statistic, Statistic::CyclicPoints),
        "cyclic-points",
    )?;
    run_experiment(cfg, workers)
}

/// Samples `K_n`; reports mean and variance against the asymptotics, the KS
/// distance of the standardized count to the normal, and the
/// law-of-large-numbers tail table.
pub fn run_cycle_count_experiment(
    cfg: &ExperimentConfig,
    workers: Option<usize>,
) -> Result<ExperimentSummary, ConfigError> {
    expect_kind(
        cfg,
        matches!(cfg.statistic, Statistic::CycleCount),
        "cycle-count",
    )?;
    run_experiment(cfg, workers)
}

/// Samples `L_r / sqrt(n)`; reports its mean against `sqrt(pi/2) G_r` and a
/// 2-D histogram of `(lambda, L_r)/sqrt(n)` against the joint limit density.
pub fn run_longest_cycle_experiment(
    cfg: &ExperimentConfig,
    workers: Option<usize>,
) -> Result<ExperimentSummary, ConfigError> {
    expect_kind(
        cfg,
        matches!(cfg.statistic, Statistic::LongestCycle { .. }),
        "longest-cycle",
    )?;
    run_experiment(cfg, workers)
}

/// Samples `C_k`; reports its mean against `1/k` and the empirical PMF with
/// its total-variation distance to Poisson(1/k).
pub fn run_small_cycle_experiment(
    cfg: &ExperimentConfig,
    workers: Option<usize>,
) -> Result<ExperimentSummary, ConfigError> {
    expect_kind(
        cfg,
        matches!(cfg.statistic, Statistic::SmallCycles { .. }),
        "small-cycles",
    )?;
    run_experiment(cfg, workers)
}
