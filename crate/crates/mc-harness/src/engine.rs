use pf_core::{cycle_stats_with, CycleScratch};
use pf_sample::{RngStream, UniformSampler};
use rayon::prelude::*;

use crate::config::{ConfigError, ExperimentConfig, Statistic};
use crate::ks::{ks_distance_sorted, standard_normal_cdf};
use crate::summary::{
    Check, ExperimentSummary, Histogram, JointHistogram, KsReport, LlnTail, Moments, PmfEntry,
};
use crate::tolerances;

/// Samples per work chunk. The chunk layout is part of the deterministic
/// contract (merged_chunks depends on it), so it is a constant, not a knob.
const CHUNK: u64 = 1024;

/// Integer-valued per-chunk state; merging is exact and
/// order-insensitive up to the final sort.
struct Collected {
    values: Vec<u32>,
    joint: Option<JointHistogram>,
}

impl Collected {
    fn empty(cfg: &ExperimentConfig) -> Self {
        let joint = match cfg.statistic {
            Statistic::LongestCycle { .. } => Some(JointHistogram::new(0.0, 5.0, 0.05)),
            _ => None,
        };
        Self {
            values: Vec::new(),
            joint,
        }
    }

    fn merge(mut self, mut other: Self) -> Self {
        self.values.append(&mut other.values);
        match (&mut self.joint, &other.joint) {
            (Some(a), Some(b)) => a.merge(b),
            (None, None) => {}
            _ => unreachable!("chunks of one experiment share a shape"),
        }
        self
    }
}

fn run_chunks(cfg: &ExperimentConfig) -> Collected {
    let n = cfg.n as usize;
    let sqrt_n = (cfg.n as f64).sqrt();
    let num_chunks = cfg.samples.div_ceil(CHUNK);
    (0..num_chunks)
        .into_par_iter()
        .map(|chunk| {
            let mut sampler = UniformSampler::new(n, cfg.variant);
            let mut scratch = CycleScratch::default();
            let mut out = Collected::empty(cfg);
            let lo = chunk * CHUNK;
            let hi = (lo + CHUNK).min(cfg.samples);
            out.values.reserve((hi - lo) as usize);
            for index in lo..hi {
                let mut stream = RngStream::new(cfg.seed, index);
                let prefs = sampler.sample_prefs(&mut stream);
                let stats = cycle_stats_with(prefs, &mut scratch);
                match cfg.statistic {
                    Statistic::CyclicPoints => out.values.push(stats.cyclic_points()),
                    Statistic::CycleCount => out.values.push(stats.num_cycles() as u32),
                    Statistic::LongestCycle { r } => {
                        let l = stats.longest(r as usize);
                        out.values.push(l);
                        out.joint.as_mut().expect("joint histogram present").add(
                            stats.cyclic_points() as f64 / sqrt_n,
                            l as f64 / sqrt_n,
                        );
                    }
                    Statistic::SmallCycles { k } => {
                        out.values.push(stats.count_of_length(k) as u32)
                    }
                }
            }
            out
        })
        .reduce(|| Collected::empty(cfg), Collected::merge)
}

fn moments_from_sorted(values: &[u32]) -> Moments {
    let count = values.len() as u64;
    let (mut s1, mut s2, mut s3, mut s4) = (0u128, 0u128, 0u128, 0u128);
    for &v in values {
        let v = v as u128;
        s1 += v;
        s2 += v * v;
        s3 += v * v * v;
        s4 += v * v * v * v;
    }
    let nf = count as f64;
    let m1 = s1 as f64 / nf;
    let r2 = s2 as f64 / nf;
    let r3 = s3 as f64 / nf;
    let r4 = s4 as f64 / nf;
    let variance = r2 - m1 * m1;
    let central_m3 = r3 - 3.0 * m1 * r2 + 2.0 * m1.powi(3);
    let central_m4 = r4 - 4.0 * m1 * r3 + 6.0 * m1 * m1 * r2 - 3.0 * m1.powi(4);
    Moments {
        count,
        mean: m1,
        variance: variance.max(0.0),
        central_m3,
        central_m4,
        min: values.first().copied().unwrap_or(0),
        max: values.last().copied().unwrap_or(0),
        degenerate: count < 2,
    }
}

fn finalize(cfg: &ExperimentConfig, collected: Collected) -> ExperimentSummary {
    let mut values = collected.values;
    values.sort_unstable();
    let moments = moments_from_sorted(&values);
    let nf = cfg.n as f64;
    let sqrt_n = nf.sqrt();
    let count = values.len() as f64;

    let mut ks = None;
    let mut lln_tails = None;
    let mut pmf = None;
    let mut tv_to_poisson = None;
    let mut checks = Vec::new();

    let histogram = match cfg.statistic {
        Statistic::CyclicPoints => {
            let mut hist = Histogram::new("lambda_over_sqrt_n", 0.0, 5.0, 0.05);
            let scaled: Vec<f64> = values.iter().map(|&v| v as f64 / sqrt_n).collect();
            for &x in &scaled {
                hist.add(x);
            }
            let d = ks_distance_sorted(&scaled, |x| -(-x * x / 2.0f64).exp_m1())
                .expect("nonempty samples");
            ks = Some(KsReport {
                reference: "rayleigh(1)".to_string(),
                distance: d,
            });
            checks.push(Check::upper(
                "ks_rayleigh",
                tolerances::RAYLEIGH_KS_TOL,
                d,
            ));
            let target = specfun::SQRT_PI_OVER_2;
            checks.push(Check::abs(
                "mean_lambda_over_sqrt_n",
                target,
                moments.mean / sqrt_n,
                tolerances::RAYLEIGH_MEAN_REL_TOL * target,
            ));
            let second_moment = (moments.variance + moments.mean * moments.mean) / nf;
            checks.push(Check::abs(
                "second_moment_lambda_over_sqrt_n",
                2.0,
                second_moment,
                tolerances::RAYLEIGH_M2_REL_TOL * 2.0,
            ));
            hist
        }
        Statistic::CycleCount => {
            let center = 0.5 * nf.ln();
            let scale = center.sqrt();
            let mut hist = Histogram::new("standardized_cycle_count", -5.0, 5.0, 0.05);
            let scaled: Vec<f64> = values.iter().map(|&v| (v as f64 - center) / scale).collect();
            for &x in &scaled {
                hist.add(x);
            }
            let d = ks_distance_sorted(&scaled, standard_normal_cdf).expect("nonempty");
            ks = Some(KsReport {
                reference: "standard_normal".to_string(),
                distance: d,
            });
            checks.push(Check::upper("ks_normal", tolerances::CLT_KS_TOL, d));
            checks.push(Check::abs(
                "mean_cycle_count",
                specfun::kn_asymptotic_mean(cfg.n),
                moments.mean,
                tolerances::CYCLE_COUNT_MEAN_TOL,
            ));
            checks.push(Check::abs(
                "var_cycle_count",
                specfun::kn_asymptotic_var(cfg.n),
                moments.variance,
                tolerances::CYCLE_COUNT_VAR_TOL,
            ));
            let tails = tolerances::LLN_EPSILONS
                .iter()
                .map(|&eps| {
                    let outside = values
                        .iter()
                        .filter(|&&v| (v as f64 / center - 1.0).abs() > eps)
                        .count();
                    LlnTail {
                        epsilon: eps,
                        probability: outside as f64 / count,
                    }
                })
                .collect();
            lln_tails = Some(tails);
            hist
        }
        Statistic::LongestCycle { r } => {
            let mut hist = Histogram::new("longest_cycle_over_sqrt_n", 0.0, 5.0, 0.05);
            for &v in &values {
                hist.add(v as f64 / sqrt_n);
            }
            let observed = moments.mean / sqrt_n;
            if r == 1 {
                checks.push(Check::abs(
                    "mean_longest_over_sqrt_n",
                    tolerances::LONGEST_L1_LIMIT,
                    observed,
                    tolerances::LONGEST_L1_REL_TOL * tolerances::LONGEST_L1_LIMIT,
                ));
            } else {
                let target = specfun::longest_cycle_limit_mean(r as usize)
                    .expect("rank validated")
                    .value;
                checks.push(Check::abs(
                    "mean_longest_over_sqrt_n",
                    target,
                    observed,
                    tolerances::LONGEST_REL_TOL * target,
                ));
            }
            hist
        }
        Statistic::SmallCycles { k } => {
            let mut hist = Histogram::new("small_cycle_count", 0.0, 5.0, 0.05);
            for &v in &values {
                hist.add(v as f64);
            }
            let mut entries: Vec<PmfEntry> = Vec::new();
            for &v in &values {
                match entries.last_mut() {
                    Some(e) if e.value == v => e.count += 1,
                    _ => entries.push(PmfEntry { value: v, count: 1 }),
                }
            }
            let rate = 1.0 / k as f64;
            let tv = tv_to_poisson_law(&entries, count, rate);
            tv_to_poisson = Some(tv);
            checks.push(Check::abs(
                "mean_small_cycle_count",
                rate,
                moments.mean,
                tolerances::SMALL_CYCLE_MEAN_REL_TOL * rate,
            ));
            if k == 1 {
                checks.push(Check::upper(
                    "tv_poisson_1",
                    tolerances::SMALL_CYCLE_TV_TOL,
                    tv,
                ));
            }
            pmf = Some(entries);
            hist
        }
    };

    ExperimentSummary {
        config: *cfg,
        merged_chunks: cfg.samples.div_ceil(CHUNK),
        moments,
        histogram,
        ks,
        lln_tails,
        pmf,
        tv_to_poisson,
        joint_histogram: collected.joint,
        checks,
        runtime_ms: 0,
    }
}

/// Total-variation distance between the empirical law (sorted run-length
/// entries over `total` samples) and Poisson(rate).
fn tv_to_poisson_law(entries: &[PmfEntry], total: f64, rate: f64) -> f64 {
    let max_v = entries.last().map(|e| e.value).unwrap_or(0);
    let mut poisson = (-rate).exp();
    let mut acc = 0.0f64;
    let mut covered = 0.0f64;
    let mut iter = entries.iter().peekable();
    for j in 0..=max_v {
        let empirical = match iter.peek() {
            Some(e) if e.value == j => {
                let c = e.count as f64 / total;
                iter.next();
                c
            }
            _ => 0.0,
        };
        acc += (empirical - poisson).abs();
        covered += poisson;
        poisson *= rate / (j + 1) as f64;
    }
    // reference mass beyond the largest observed value
    acc += (1.0 - covered).max(0.0);
    0.5 * acc
}

/// Runs one experiment. With `workers = Some(w)` the sampling happens in a
/// private thread pool of that size; the summary is byte-identical for every
/// choice because per-sample randomness is keyed by sample index and chunk
/// merges are exact.
pub fn run_experiment(
    cfg: &ExperimentConfig,
    workers: Option<usize>,
) -> Result<ExperimentSummary, ConfigError> {
    cfg.validate()?;
    let summary = match workers {
        Some(w) => rayon::ThreadPoolBuilder::new()
            .num_threads(w.max(1))
            .build()
            .expect("thread pool")
            .install(|| finalize(cfg, run_chunks(cfg))),
        None => finalize(cfg, run_chunks(cfg)),
    };
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;
    use pf_core::Variant;

    #[test]
    fn single_sample_summary_is_degenerate() {
        let cfg = ExperimentConfig {
            variant: Variant::Classical,
            n: 50,
            samples: 1,
            seed: 3,
            statistic: Statistic::CyclicPoints,
        };
        let s = run_experiment(&cfg, Some(1)).unwrap();
        assert!(s.moments.degenerate);
        assert_eq!(s.moments.variance, 0.0);
        assert_eq!(s.merged_chunks, 1);
        assert_eq!(s.histogram.counts.iter().sum::<u64>(), 1);
    }

    #[test]
    fn histogram_counts_sum_to_sample_count() {
        let cfg = ExperimentConfig {
            variant: Variant::Prime,
            n: 200,
            samples: 3000,
            seed: 9,
            statistic: Statistic::CycleCount,
        };
        let s = run_experiment(&cfg, Some(2)).unwrap();
        assert_eq!(s.histogram.counts.iter().sum::<u64>(), 3000);
        assert_eq!(s.merged_chunks, 3);
        let tails = s.lln_tails.unwrap();
        assert_eq!(tails.len(), 3);
        // larger epsilon cannot have a larger tail
        assert!(tails[0].probability >= tails[1].probability);
        assert!(tails[1].probability >= tails[2].probability);
    }

    #[test]
    fn small_cycle_pmf_accounts_for_everything() {
        let cfg = ExperimentConfig {
            variant: Variant::Classical,
            n: 100,
            samples: 2000,
            seed: 4,
            statistic: Statistic::SmallCycles { k: 1 },
        };
        let s = run_experiment(&cfg, Some(2)).unwrap();
        let total: u64 = s.pmf.as_ref().unwrap().iter().map(|e| e.count).sum();
        assert_eq!(total, 2000);
        let tv = s.tv_to_poisson.unwrap();
        assert!((0.0..=1.0).contains(&tv));
    }

    #[test]
    fn invalid_configs_are_rejected() {
        let cfg = ExperimentConfig {
            variant: Variant::Classical,
            n: 0,
            samples: 10,
            seed: 0,
            statistic: Statistic::CyclicPoints,
        };
        assert!(run_experiment(&cfg, None).is_err());
        let cfg = ExperimentConfig {
            variant: Variant::Classical,
            n: 10,
            samples: 10,
            seed: 0,
            statistic: Statistic::LongestCycle { r: 0 },
        };
        assert!(run_experiment(&cfg, None).is_err());
    }
}
