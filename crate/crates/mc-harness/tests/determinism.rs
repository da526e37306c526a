//! The reproducibility contract: identical configs give byte-identical
//! summaries no matter how the work is scheduled.

use mc_harness::{run_experiment, ExperimentConfig, Statistic};
use pf_core::Variant;

fn base_cfg(statistic: Statistic) -> ExperimentConfig {
    ExperimentConfig {
        variant: Variant::Classical,
        n: 300,
        samples: 4096 + 17, // force a ragged final chunk
        seed: 20240502,
        statistic,
    }
}

#[test]
fn summaries_are_identical_across_worker_counts() {
    for statistic in [
        Statistic::CyclicPoints,
        Statistic::CycleCount,
        Statistic::LongestCycle { r: 1 },
        Statistic::SmallCycles { k: 2 },
    ] {
        let cfg = base_cfg(statistic);
        let one = run_experiment(&cfg, Some(1)).unwrap();
        let two = run_experiment(&cfg, Some(2)).unwrap();
        let four = run_experiment(&cfg, Some(4)).unwrap();
        assert_eq!(one, two, "{statistic:?}");
        assert_eq!(one, four, "{statistic:?}");
        assert_eq!(one.to_json(), two.to_json(), "{statistic:?}");
        assert_eq!(one.to_json(), four.to_json(), "{statistic:?}");
    }
}

#[test]
fn repeated_runs_are_identical() {
    let cfg = base_cfg(Statistic::CyclicPoints);
    let a = run_experiment(&cfg, None).unwrap();
    let b = run_experiment(&cfg, None).unwrap();
    assert_eq!(a.to_json(), b.to_json());
}

#[test]
fn different_seeds_differ() {
    let cfg = base_cfg(Statistic::CyclicPoints);
    let mut other = cfg;
    other.seed ^= 1;
    let a = run_experiment(&cfg, None).unwrap();
    let b = run_experiment(&other, None).unwrap();
    assert_ne!(a.moments, b.moments);
}

#[test]
fn json_round_trips() {
    for statistic in [
        Statistic::CyclicPoints,
        Statistic::CycleCount,
        Statistic::LongestCycle { r: 2 },
        Statistic::SmallCycles { k: 1 },
    ] {
        let cfg = ExperimentConfig {
            variant: Variant::Prime,
            n: 64,
            samples: 500,
            seed: 7,
            statistic,
        };
        let summary = run_experiment(&cfg, Some(2)).unwrap();
        let json = summary.to_json();
        let back = mc_harness::ExperimentSummary::from_json(&json).unwrap();
        assert_eq!(summary, back);
        assert_eq!(json, back.to_json());
    }
}
