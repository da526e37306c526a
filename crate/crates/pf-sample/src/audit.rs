use std::collections::HashMap;

use pf_core::Variant;
use thiserror::Error;

use crate::classical::{classical_from_draws, ClassicalScratch};
use crate::prime::{prime_from_draws, PrimeScratch};

/// Result of exhaustively certifying a rotation construction.
///
/// For every draw vector on the circle it records how many cyclic shifts pass
/// the predicate (exactly one expected), whether the samplers' O(n) shift
/// selection picked that same shift, and whether each output is hit by the
/// same number of draw vectors (which is what makes the sampler uniform).
#[derive(Debug, Clone)]
pub struct ShiftAuditReport {
    pub variant: Variant,
    pub n: usize,
    pub circle_size: usize,
    pub sequences_checked: u64,
    /// Draw vectors whose passing-shift count differed from one.
    pub violations: u64,
    /// First violating draw vector and its passing shifts, if any.
    pub first_violation: Option<(Vec<u32>, Vec<u32>)>,
    /// Draw vectors where the fast shift selection disagreed with the
    /// unique passing shift.
    pub fast_path_mismatches: u64,
    pub distinct_outputs: u64,
    pub expected_distinct_outputs: u64,
    /// True when every output was produced by exactly `circle_size` draw
    /// vectors.
    pub orbit_multiplicity_ok: bool,
}

impl ShiftAuditReport {
    pub fn passed(&self) -> bool {
        self.violations == 0
            && self.fast_path_mismatches == 0
            && self.distinct_outputs == self.expected_distinct_outputs
            && self.orbit_multiplicity_ok
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("audit for {variant} is exhaustive and only supported for {min} <= n <= {max}, got {n}")]
pub struct AuditError {
    pub variant: Variant,
    pub n: usize,
    pub min: usize,
    pub max: usize,
}

/// Steps `digits` through the odometer over `{lo..=hi}^len`; returns false
/// after the last vector.
fn odometer_step(digits: &mut [u32], lo: u32, hi: u32) -> bool {
    for d in digits.iter_mut() {
        if *d < hi {
            *d += 1;
            return true;
        }
        *d = lo;
    }
    false
}

/// Exhaustively verifies that every `u in {1..n-1}^n` has exactly one cyclic
/// value shift that is a prime parking function, and that the sampler's
/// cycle-lemma selection finds it. `2 <= n <= 6`.
pub fn shift_uniqueness_audit(n: usize) -> Result<ShiftAuditReport, AuditError> {
    if !(2..=6).contains(&n) {
        return Err(AuditError {
            variant: Variant::Prime,
            n,
            min: 2,
            max: 6,
        });
    }
    let m = n - 1;
    let mut draws = vec![1u32; n];
    let mut shifted = vec![0u32; n];
    let mut scratch = PrimeScratch::default();
    let mut output_counts: HashMap<Vec<u32>, u64> = HashMap::new();

    let mut checked = 0u64;
    let mut violations = 0u64;
    let mut first_violation = None;
    let mut fast_path_mismatches = 0u64;
    loop {
        checked += 1;
        let mut passing: Vec<u32> = Vec::new();
        for c in 0..m as u32 {
            for (dst, &u) in shifted.iter_mut().zip(&draws) {
                *dst = (u + c - 1) % m as u32 + 1;
            }
            if pf_core::is_prime_parking_prefs(&shifted) {
                passing.push(c);
            }
        }
        if passing.len() != 1 {
            violations += 1;
            if first_violation.is_none() {
                first_violation = Some((draws.clone(), passing.clone()));
            }
        } else {
            prime_from_draws(&draws, &mut scratch);
            let c = passing[0];
            let expected: Vec<u32> = draws
                .iter()
                .map(|&u| (u + c - 1) % m as u32 + 1)
                .collect();
            if scratch.prefs != expected {
                fast_path_mismatches += 1;
            }
            *output_counts.entry(expected).or_insert(0) += 1;
        }
        if !odometer_step(&mut draws, 1, m as u32) {
            break;
        }
    }

    // |PPF_n| = (n-1)^{n-1}
    let expected_distinct_outputs = (m as u64).pow((n - 1) as u32);
    let orbit_multiplicity_ok = output_counts.values().all(|&c| c == m as u64);
    Ok(ShiftAuditReport {
        variant: Variant::Prime,
        n,
        circle_size: m,
        sequences_checked: checked,
        violations,
        first_violation,
        fast_path_mismatches,
        distinct_outputs: output_counts.len() as u64,
        expected_distinct_outputs,
        orbit_multiplicity_ok,
    })
}

/// Classical analogue on `{0..n}^n`: exactly one rotation of each draw vector
/// corresponds to a parking function, the circular-parking construction maps
/// the draw vector to that function, and each parking function arises from
/// exactly `n + 1` draw vectors. `1 <= n <= 5`.
pub fn rotation_uniqueness_audit_classical(n: usize) -> Result<ShiftAuditReport, AuditError> {
    if !(1..=5).contains(&n) {
        return Err(AuditError {
            variant: Variant::Classical,
            n,
            min: 1,
            max: 5,
        });
    }
    let m = n + 1;
    let mut draws = vec![0u32; n];
    let mut candidate = vec![0u32; n];
    let mut scratch = ClassicalScratch::default();
    let mut output_counts: HashMap<Vec<u32>, u64> = HashMap::new();

    let mut checked = 0u64;
    let mut violations = 0u64;
    let mut first_violation = None;
    let mut fast_path_mismatches = 0u64;
    loop {
        checked += 1;
        let mut passing: Vec<u32> = Vec::new();
        for c in 0..m as u32 {
            // prefs candidate is the rotation plus one; a rotated value of n
            // would leave the candidate outside 1..=n and is rejected by the
            // predicate.
            for (dst, &u) in candidate.iter_mut().zip(&draws) {
                *dst = (u + c) % m as u32 + 1;
            }
            if pf_core::is_parking_prefs(&candidate) {
                passing.push(c);
            }
        }
        if passing.len() != 1 {
            violations += 1;
            if first_violation.is_none() {
                first_violation = Some((draws.clone(), passing.clone()));
            }
        } else {
            classical_from_draws(&draws, &mut scratch);
            let c = passing[0];
            let expected: Vec<u32> = draws.iter().map(|&u| (u + c) % m as u32 + 1).collect();
            if scratch.prefs != expected {
                fast_path_mismatches += 1;
            }
            *output_counts.entry(expected).or_insert(0) += 1;
        }
        if !odometer_step(&mut draws, 0, n as u32) {
            break;
        }
    }

    // |PF_n| = (n+1)^{n-1}
    let expected_distinct_outputs = (m as u64).pow((n - 1) as u32);
    let orbit_multiplicity_ok = output_counts.values().all(|&c| c == m as u64);
    Ok(ShiftAuditReport {
        variant: Variant::Classical,
        n,
        circle_size: m,
        sequences_checked: checked,
        violations,
        first_violation,
        fast_path_mismatches,
        distinct_outputs: output_counts.len() as u64,
        expected_distinct_outputs,
        orbit_multiplicity_ok,
    })
}
