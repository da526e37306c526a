//! Down-scaled versions of the experiments: enough samples to see the limit
//! laws emerge, small enough to run quickly. The full-scale runs live in the
//! acceptance suite.

use mc_harness::{
    run_cycle_count_experiment, run_cyclic_points_experiment, run_longest_cycle_experiment,
    run_mgf_scaling_experiment, run_small_cycle_experiment, ExperimentConfig, Statistic,
};
use pf_core::Variant;

#[test]
fn cyclic_points_approach_rayleigh_at_modest_n() {
    for variant in [Variant::Classical, Variant::Prime] {
        let cfg = ExperimentConfig {
            variant,
            n: 2_000,
            samples: 20_000,
            seed: 11,
            statistic: Statistic::CyclicPoints,
        };
        let s = run_cyclic_points_experiment(&cfg, None).unwrap();
        let ks = s.ks.as_ref().unwrap().distance;
        // Exact-law distance at n = 2000 is ~0.010; sampling noise ~0.01.
        assert!(ks < 0.03, "{variant}: ks = {ks}");
        let mean_scaled = s.moments.mean / (cfg.n as f64).sqrt();
        assert!((mean_scaled - 1.2533).abs() < 0.04, "{mean_scaled}");
    }
}

#[test]
fn cycle_count_mean_tracks_asymptotic() {
    let cfg = ExperimentConfig {
        variant: Variant::Classical,
        n: 10_000,
        samples: 20_000,
        seed: 12,
        statistic: Statistic::CycleCount,
    };
    let s = run_cycle_count_experiment(&cfg, None).unwrap();
    let target = specfun::kn_asymptotic_mean(cfg.n);
    assert!(
        (s.moments.mean - target).abs() < 0.06,
        "{} vs {target}",
        s.moments.mean
    );
    // LLN tail at eps = 0.5 shrinks from n = 100 to n = 10^4
    let small = run_cycle_count_experiment(
        &ExperimentConfig {
            n: 100,
            ..cfg
        },
        None,
    )
    .unwrap();
    let tail_at = |s: &mc_harness::ExperimentSummary| {
        s.lln_tails
            .as_ref()
            .unwrap()
            .iter()
            .find(|t| t.epsilon == 0.5)
            .unwrap()
            .probability
    };
    assert!(
        tail_at(&small) > tail_at(&s),
        "{} vs {}",
        tail_at(&small),
        tail_at(&s)
    );
}

#[test]
fn longest_cycle_mean_tracks_limit() {
    let cfg = ExperimentConfig {
        variant: Variant::Classical,
        n: 10_000,
        samples: 20_000,
        seed: 13,
        statistic: Statistic::LongestCycle { r: 1 },
    };
    let s = run_longest_cycle_experiment(&cfg, None).unwrap();
    let observed = s.moments.mean / (cfg.n as f64).sqrt();
    assert!((observed - 0.7825).abs() < 0.03, "{observed}");
    // rank beyond every sampled cycle count contributes zeros
    let deep = run_longest_cycle_experiment(
        &ExperimentConfig {
            n: 30,
            samples: 500,
            statistic: Statistic::LongestCycle { r: 25 },
            ..cfg
        },
        None,
    )
    .unwrap();
    assert_eq!(deep.moments.max, 0);
    assert_eq!(deep.moments.mean, 0.0);
}

#[test]
fn small_cycle_counts_near_poisson() {
    let cfg = ExperimentConfig {
        variant: Variant::Classical,
        n: 3_000,
        samples: 30_000,
        seed: 14,
        statistic: Statistic::SmallCycles { k: 1 },
    };
    let s = run_small_cycle_experiment(&cfg, None).unwrap();
    assert!((s.moments.mean - 1.0).abs() < 0.05, "{}", s.moments.mean);
    assert!(s.tv_to_poisson.unwrap() < 0.05);

    let cfg3 = ExperimentConfig {
        statistic: Statistic::SmallCycles { k: 3 },
        ..cfg
    };
    let s3 = run_small_cycle_experiment(&cfg3, None).unwrap();
    assert!((s3.moments.mean - 1.0 / 3.0).abs() < 0.1 / 3.0, "{}", s3.moments.mean);
}

#[test]
fn wrong_statistic_kind_is_rejected() {
    let cfg = ExperimentConfig {
        variant: Variant::Classical,
        n: 10,
        samples: 10,
        seed: 0,
        statistic: Statistic::CyclicPoints,
    };
    assert!(run_cycle_count_experiment(&cfg, None).is_err());
    assert!(run_longest_cycle_experiment(&cfg, None).is_err());
    assert!(run_small_cycle_experiment(&cfg, None).is_err());
}

#[test]
fn mgf_table_is_deterministic_and_converging() {
    let a = run_mgf_scaling_experiment(Variant::Classical, &[1_000, 100_000], &[1.0, -0.5])
        .unwrap();
    let b = run_mgf_scaling_experiment(Variant::Classical, &[1_000, 100_000], &[1.0, -0.5])
        .unwrap();
    assert_eq!(a, b);
    assert_eq!(a.to_csv(), b.to_csv());
    for pair in a.rows.chunks(2) {
        assert!(pair[0].abs_error > pair[1].abs_error);
    }
}
