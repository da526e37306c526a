use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// A sequence of parking preferences: length `n >= 1`, entries in `1..=n`.
///
/// This is the raw input type; it need not be a parking function. Entries are
/// 1-indexed throughout the public API.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrefSequence {
    prefs: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PrefSequenceError {
    #[error("preference sequence must be nonempty")]
    Empty,
    #[error("preference {value} at index {index} is outside 1..={n}")]
    OutOfRange { index: usize, value: u32, n: usize },
}

impl PrefSequence {
    pub fn new(prefs: Vec<u32>) -> Result<Self, PrefSequenceError> {
        if prefs.is_empty() {
            return Err(PrefSequenceError::Empty);
        }
        let n = prefs.len();
        for (index, &value) in prefs.iter().enumerate() {
            if value < 1 || value as usize > n {
                return Err(PrefSequenceError::OutOfRange { index, value, n });
            }
        }
        Ok(Self { prefs })
    }

    pub fn len(&self) -> usize {
        self.prefs.len()
    }

    pub fn is_empty(&self) -> bool {
        false // length >= 1 by construction
    }

    /// The preferences, 1-indexed values in `1..=n`.
    pub fn prefs(&self) -> &[u32] {
        &self.prefs
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.prefs
    }
}

impl fmt::Display for PrefSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.prefs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Counts each preference value. `counts[p]` is the number of cars whose
/// preference is exactly `p`; index 0 is unused. Returns `None` if an entry
/// is outside `1..=n`.
fn preference_counts(prefs: &[u32]) -> Option<Vec<u32>> {
    let n = prefs.len();
    let mut counts = vec![0u32; n + 1];
    for &p in prefs {
        if p < 1 || p as usize > n {
            return None;
        }
        counts[p as usize] += 1;
    }
    Some(counts)
}

/// Slice form of [`is_parking_function`]; entries outside `1..=n` make the
/// answer `false`.
///
/// Uses a counting pass instead of a comparison sort, so the check is O(n):
/// the sorted condition is equivalent to `#\{k : pi(k) <= j\} >= j` for all
/// `j in 1..=n`.
pub fn is_parking_prefs(prefs: &[u32]) -> bool {
    let Some(counts) = preference_counts(prefs) else {
        return false;
    };
    let mut seen = 0u32;
    for (j, &c) in counts.iter().enumerate().skip(1) {
        seen += c;
        if (seen as usize) < j {
            return false;
        }
    }
    !prefs.is_empty()
}

/// Slice form of [`is_prime_parking_function`].
pub fn is_prime_parking_prefs(prefs: &[u32]) -> bool {
    let n = prefs.len();
    let Some(counts) = preference_counts(prefs) else {
        return false;
    };
    let mut seen = 0u32;
    for j in 1..n {
        seen += counts[j];
        if (seen as usize) < j + 1 {
            return false;
        }
    }
    !prefs.is_empty()
}

/// Whether the sorted rearrangement satisfies `pi_(i) <= i` for all `i`.
pub fn is_parking_function(seq: &PrefSequence) -> bool {
    is_parking_prefs(seq.prefs())
}

/// Whether `#\{k : pi(k) <= j\} >= j + 1` for all `j in 1..=n-1`.
///
/// Equivalently, the sequence stays a parking function after deleting one
/// coordinate equal to 1. For `n = 1` the sequence `(1)` counts as prime.
pub fn is_prime_parking_function(seq: &PrefSequence) -> bool {
    is_prime_parking_prefs(seq.prefs())
}

/// Which family of parking functions a sequence belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum Variant {
    Classical,
    Prime,
}

impl Variant {
    pub fn as_str(self) -> &'static str {
        match self {
            Variant::Classical => "classical",
            Variant::Prime => "prime",
        }
    }

    /// The predicate for this variant.
    pub fn admits(self, seq: &PrefSequence) -> bool {
        match self {
            Variant::Classical => is_parking_function(seq),
            Variant::Prime => is_prime_parking_function(seq),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown variant {0:?}, expected \"classical\" or \"prime\"")]
pub struct VariantError(String);

impl FromStr for Variant {
    type Err = VariantError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "classical" => Ok(Variant::Classical),
            "prime" => Ok(Variant::Prime),
            other => Err(VariantError(other.to_string())),
        }
    }
}

/// A preference sequence that has passed the predicate for its variant.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParkingFunction {
    seq: PrefSequence,
    variant: Variant,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{seq} is not a {variant} parking function")]
pub struct NotParkingFunction {
    seq: PrefSequence,
    variant: Variant,
}

impl ParkingFunction {
    pub fn new(seq: PrefSequence, variant: Variant) -> Result<Self, Box<NotParkingFunction>> {
        if variant.admits(&seq) {
            Ok(Self { seq, variant })
        } else {
            Err(Box::new(NotParkingFunction { seq, variant }))
        }
    }

    pub fn classical(seq: PrefSequence) -> Result<Self, Box<NotParkingFunction>> {
        Self::new(seq, Variant::Classical)
    }

    pub fn prime(seq: PrefSequence) -> Result<Self, Box<NotParkingFunction>> {
        Self::new(seq, Variant::Prime)
    }

    pub fn seq(&self) -> &PrefSequence {
        &self.seq
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn into_seq(self) -> PrefSequence {
        self.seq
    }
}
