use pf_core::Variant;
use pf_exact::kn_log_mgf;
use serde::{Deserialize, Serialize};

use crate::config::ConfigError;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MgfRow {
    pub n: u64,
    pub t: f64,
    /// `(1 / ln n) ln E[exp(t K_n)]`, computed exactly (no sampling).
    pub normalized_log_mgf: f64,
    /// The scaled-cumulant limit `(e^t - 1)/2`.
    pub limit: f64,
    pub abs_error: f64,
}

/// Deterministic convergence table for the scaled cumulant generating
/// function of the cycle count.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MgfTable {
    pub variant: Variant,
    pub rows: Vec<MgfRow>,
}

/// Evaluates `(1/ln n) ln E[e^{t K_n}]` on the full grid; no randomness
/// anywhere in this path.
pub fn run_mgf_scaling_experiment(
    variant: Variant,
    n_grid: &[u64],
    t_grid: &[f64],
) -> Result<MgfTable, ConfigError> {
    if n_grid.is_empty() || n_grid.iter().any(|&n| n < 2) {
        return Err(ConfigError::BadN);
    }
    if t_grid.is_empty() {
        return Err(ConfigError::BadSamples);
    }
    let mut rows = Vec::with_capacity(n_grid.len() * t_grid.len());
    for &t in t_grid {
        for &n in n_grid {
            let normalized = kn_log_mgf(n as usize, t, variant) / (n as f64).ln();
            let limit = (t.exp() - 1.0) / 2.0;
            rows.push(MgfRow {
                n,
                t,
                normalized_log_mgf: normalized,
                limit,
                abs_error: (normalized - limit).abs(),
            });
        }
    }
    Ok(MgfTable { variant, rows })
}

impl MgfTable {
    /// Fixed-header CSV with `.` decimal points, for plotting and golden
    /// files.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("variant,n,t,normalized_log_mgf,limit,abs_error\n");
        for row in &self.rows {
            out.push_str(&format!(
                "{},{},{},{:.12},{:.12},{:.12}\n",
                self.variant, row.n, row.t, row.normalized_log_mgf, row.limit, row.abs_error
            ));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_t_is_exact() {
        let table =
            run_mgf_scaling_experiment(Variant::Classical, &[100, 10_000], &[0.0]).unwrap();
        for row in &table.rows {
            assert!(row.normalized_log_mgf.abs() < 1e-12);
            assert_eq!(row.limit, 0.0);
        }
    }

    #[test]
    fn error_decreases_with_n_at_t_one() {
        let table = run_mgf_scaling_experiment(
            Variant::Classical,
            &[1_000, 10_000, 100_000],
            &[1.0],
        )
        .unwrap();
        let errs: Vec<f64> = table.rows.iter().map(|r| r.abs_error).collect();
        assert!(errs[0] > errs[1] && errs[1] > errs[2], "{errs:?}");
    }

    #[test]
    fn csv_shape_is_stable() {
        let table = run_mgf_scaling_experiment(Variant::Prime, &[100], &[0.5, -0.5]).unwrap();
        let csv = table.to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 3);
        assert_eq!(lines[0], "variant,n,t,normalized_log_mgf,limit,abs_error");
        assert!(lines[1].starts_with("prime,100,0.5,"));
    }

    #[test]
    fn rejects_degenerate_grids() {
        assert!(run_mgf_scaling_experiment(Variant::Classical, &[], &[1.0]).is_err());
        assert!(run_mgf_scaling_experiment(Variant::Classical, &[1], &[1.0]).is_err());
        assert!(run_mgf_scaling_experiment(Variant::Classical, &[10], &[]).is_err());
    }
}
