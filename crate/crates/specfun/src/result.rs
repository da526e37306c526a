use thiserror::Error;

/// A numeric value paired with an absolute error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpecFunResult {
    pub value: f64,
    pub abs_error_estimate: f64,
}

impl SpecFunResult {
    pub fn new(value: f64, abs_error_estimate: f64) -> Self {
        debug_assert!(abs_error_estimate >= 0.0 && abs_error_estimate.is_finite());
        Self {
            value,
            abs_error_estimate,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DomainError {
    #[error("{func}: {arg} = {value} is outside {domain}")]
    OutOfDomain {
        func: &'static str,
        arg: &'static str,
        value: f64,
        domain: &'static str,
    },
    #[error("{func}: rank r = {r} is outside {domain}")]
    RankOutOfRange {
        func: &'static str,
        r: usize,
        domain: &'static str,
    },
}
