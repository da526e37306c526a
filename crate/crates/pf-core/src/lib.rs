//! Core types for parking functions and the cycle structure of their
//! functional digraphs.
//!
//! A preference sequence of length `n` assigns each of `n` cars a preferred
//! spot in `1..=n`. The sequence is a *parking function* when every car parks
//! under the usual sequential rule, and a *prime* parking function when it
//! stays a parking function after deleting one coordinate equal to 1.
//!
//! Every preference sequence is also a map `[n] -> [n]`, and therefore has a
//! functional digraph whose components are cycles with trees hanging off
//! them. [`cycle_stats`] extracts the cycle data: the number of cyclic
//! points, the number of cycles, and the multiset of cycle lengths.

mod cycles;
mod digraph;
mod pref;

pub use cycles::{
    cycle_stats, cycle_stats_batch, cycle_stats_of, cycle_stats_with, CycleScratch, CycleStats,
};
pub use digraph::{build_digraph, FunctionalDigraph};
pub use pref::{
    is_parking_function, is_parking_prefs, is_prime_parking_function, is_prime_parking_prefs,
    NotParkingFunction, ParkingFunction, PrefSequence, PrefSequenceError, Variant, VariantError,
};
