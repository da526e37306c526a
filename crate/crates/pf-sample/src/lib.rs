//! Exact uniform samplers for classical and prime parking functions.
//!
//! Both samplers are rotation constructions on a circle: the classical one
//! parks `n` cars on `n + 1` circular spots and reads the preferences off
//! relative to the empty spot; the prime one draws from `{1..n-1}^n` and
//! rotates the values to the unique cyclic shift that satisfies the prime
//! predicate. Each output is exactly uniform over its family, and every
//! emitted sequence is re-checked against the predicate before it leaves the
//! sampler.
//!
//! Randomness is counter-based: [`RngStream::new(seed, stream_id)`] gives an
//! independent, reproducible stream per sample index, so results do not
//! depend on how work is split across threads.

mod audit;
mod classical;
mod prime;
mod rejection;
mod rng;
mod sampler;

pub use audit::{
    rotation_uniqueness_audit_classical, shift_uniqueness_audit, AuditError, ShiftAuditReport,
};
pub use rejection::{rejection_sample_pf, RejectionExhausted};
pub use rng::RngStream;
pub use sampler::{sample_pf, sample_ppf, UniformSampler};
