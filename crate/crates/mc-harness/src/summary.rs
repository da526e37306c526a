use serde::{Deserialize, Serialize};

use crate::config::ExperimentConfig;

/// Central moments of the raw (integer-valued) statistic, computed from
/// exact integer power sums.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Moments {
    pub count: u64,
    pub mean: f64,
    /// Population second central moment.
    pub variance: f64,
    pub central_m3: f64,
    pub central_m4: f64,
    pub min: u32,
    pub max: u32,
    /// Set when `count < 2`, where the variance carries no information.
    pub degenerate: bool,
}

/// Fixed-width histogram of the scaled statistic named by `variable`.
/// Values outside `[lo, lo + bin_width * counts.len())` are clipped into the
/// edge bins, so the counts always sum to the sample count.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Histogram {
    pub variable: String,
    pub lo: f64,
    pub bin_width: f64,
    pub counts: Vec<u64>,
}

impl Histogram {
    pub(crate) fn new(variable: &str, lo: f64, hi: f64, bin_width: f64) -> Self {
        let bins = ((hi - lo) / bin_width).round() as usize;
        Self {
            variable: variable.to_string(),
            lo,
            bin_width,
            counts: vec![0; bins],
        }
    }

    pub(crate) fn add(&mut self, x: f64) {
        let raw = ((x - self.lo) / self.bin_width).floor();
        let idx = (raw.max(0.0) as usize).min(self.counts.len() - 1);
        self.counts[idx] += 1;
    }
}

/// 2-D histogram of `(lambda/sqrt(n), L_r/sqrt(n))`, row-major in the first
/// coordinate, for qualitative comparison with the joint limit density.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JointHistogram {
    pub lo: f64,
    pub bin_width: f64,
    pub bins_per_axis: usize,
    pub counts: Vec<u64>,
}

impl JointHistogram {
    pub(crate) fn new(lo: f64, hi: f64, bin_width: f64) -> Self {
        let bins = ((hi - lo) / bin_width).round() as usize;
        Self {
            lo,
            bin_width,
            bins_per_axis: bins,
            counts: vec![0; bins * bins],
        }
    }

    pub(crate) fn add(&mut self, x: f64, y: f64) {
        let b = self.bins_per_axis;
        let ix = ((((x - self.lo) / self.bin_width).floor()).max(0.0) as usize).min(b - 1);
        let iy = ((((y - self.lo) / self.bin_width).floor()).max(0.0) as usize).min(b - 1);
        self.counts[ix * b + iy] += 1;
    }

    pub(crate) fn merge(&mut self, other: &JointHistogram) {
        for (a, b) in self.counts.iter_mut().zip(&other.counts) {
            *a += b;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KsReport {
    pub reference: String,
    pub distance: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LlnTail {
    pub epsilon: f64,
    pub probability: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PmfEntry {
    pub value: u32,
    pub count: u64,
}

/// One named comparison of an observed quantity against its limit target.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub target: f64,
    pub observed: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl Check {
    pub(crate) fn abs(name: &str, target: f64, observed: f64, tolerance: f64) -> Self {
        Self {
            name: name.to_string(),
            target,
            observed,
            tolerance,
            pass: (observed - target).abs() <= tolerance,
        }
    }

    pub(crate) fn upper(name: &str, bound: f64, observed: f64) -> Self {
        Self {
            name: name.to_string(),
            target: bound,
            observed,
            tolerance: bound,
            pass: observed < bound,
        }
    }
}

/// Merged result of one experiment. A deterministic function of the config
/// alone: `runtime_ms` is 0 unless the caller explicitly stamps wall time
/// into it (timing is diagnostics, not data, and must not break run-to-run
/// byte equality of the artifact).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentSummary {
    pub config: ExperimentConfig,
    pub merged_chunks: u64,
    pub moments: Moments,
    pub histogram: Histogram,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub ks: Option<KsReport>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lln_tails: Option<Vec<LlnTail>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub pmf: Option<Vec<PmfEntry>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub tv_to_poisson: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub joint_histogram: Option<JointHistogram>,
    pub checks: Vec<Check>,
    pub runtime_ms: u64,
}

impl ExperimentSummary {
    pub fn all_checks_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("summary serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}
