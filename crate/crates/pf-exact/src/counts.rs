use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use pf_core::Variant;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("k = {k} is outside {lo}..={hi} for {variant} parking functions of length {n}")]
    KOutOfRange {
        variant: Variant,
        n: usize,
        k: usize,
        lo: usize,
        hi: usize,
    },
    #[error("brute-force census over [{n}]^{n} is refused: n <= {max} (n = 8 behind allow_large; 8^8 is about 1.7e7 sequences)")]
    BruteForceTooLarge { n: usize, max: usize },
    #[error("partition-sum oracle supports 1 <= k < n <= {max}, got n = {n}, k = {k}")]
    PartitionSumRange { n: usize, k: usize, max: usize },
}

pub(crate) fn factorial(n: usize) -> BigUint {
    let mut f = BigUint::one();
    for i in 2..=n {
        f *= BigUint::from(i);
    }
    f
}

pub(crate) fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..k {
        num *= BigUint::from(n - i);
        den *= BigUint::from(i + 1);
    }
    num / den
}

/// `(n+1)^(n-1)`, the number of parking functions of length `n`.
pub fn count_pf(n: usize) -> BigUint {
    assert!(n >= 1, "n must be at least 1");
    BigUint::from(n + 1).pow(n as u32 - 1)
}

/// `(n-1)^(n-1)` with the convention `0^0 = 1`, the number of prime parking
/// functions of length `n`.
pub fn count_ppf(n: usize) -> BigUint {
    assert!(n >= 1, "n must be at least 1");
    if n == 1 {
        BigUint::one()
    } else {
        BigUint::from(n - 1).pow(n as u32 - 1)
    }
}

/// Multiplies `base` by `m^e` where `e` may be `-1`, asserting the result is
/// an integer. The negative exponent shows up exactly at `k = n - 1`, and
/// keeping one rational code path with an integrality assertion doubles as a
/// correctness check on the closed form.
fn integral_product(base: BigUint, m: usize, e: i64) -> BigUint {
    let base = BigInt::from(base);
    let rat = if e >= 0 {
        BigRational::from_integer(base * BigInt::from(m).pow(e as u32))
    } else {
        BigRational::new(base, BigInt::from(m).pow((-e) as u32))
    };
    assert!(rat.is_integer(), "closed form produced a non-integer");
    assert!(!rat.is_negative());
    rat.to_integer().to_biguint().expect("nonnegative")
}

/// Number of classical parking functions of length `n` with exactly `k`
/// cyclic points: `n!` at `k = n`, else `binom(n+1,k) * k * k! * (n+1)^(n-k-2)`.
pub fn count_pf_cyclic(n: usize, k: usize) -> Result<BigUint, ExactError> {
    assert!(n >= 1, "n must be at least 1");
    if k < 1 || k > n {
        return Err(ExactError::KOutOfRange {
            variant: Variant::Classical,
            n,
            k,
            lo: 1,
            hi: n,
        });
    }
    if k == n {
        return Ok(factorial(n));
    }
    let base = binomial(n + 1, k) * BigUint::from(k) * factorial(k);
    Ok(integral_product(base, n + 1, n as i64 - k as i64 - 2))
}

/// Number of prime parking functions of length `n` with exactly `k` cyclic
/// points: `k * k! * binom(n-1,k) * (n-1)^(n-k-2)` for `1 <= k <= n-1`.
///
/// `k = n` is impossible for prime parking functions (a permutation is never
/// prime for `n >= 2`), hence the tighter range.
pub fn count_ppf_cyclic(n: usize, k: usize) -> Result<BigUint, ExactError> {
    assert!(n >= 2, "the prime closed form needs n >= 2");
    if k < 1 || k > n - 1 {
        return Err(ExactError::KOutOfRange {
            variant: Variant::Prime,
            n,
            k,
            lo: 1,
            hi: n - 1,
        });
    }
    let base = BigUint::from(k) * factorial(k) * binomial(n - 1, k);
    Ok(integral_product(base, n - 1, n as i64 - k as i64 - 2))
}

/// Dispatch on the variant.
pub fn count_cyclic(n: usize, k: usize, variant: Variant) -> Result<BigUint, ExactError> {
    match variant {
        Variant::Classical => count_pf_cyclic(n, k),
        Variant::Prime => count_ppf_cyclic(n, k),
    }
}

/// Exact `P(lambda_n = k)` for a uniformly random parking function of the
/// given variant.
pub fn pmf_cyclic(n: usize, k: usize, variant: Variant) -> Result<BigRational, ExactError> {
    let count = count_cyclic(n, k, variant)?;
    let total = match variant {
        Variant::Classical => count_pf(n),
        Variant::Prime => count_ppf(n),
    };
    Ok(BigRational::new(BigInt::from(count), BigInt::from(total)))
}

/// The full map `k -> #\{parking functions with k cyclic points\}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicPointCensus {
    pub n: usize,
    pub variant: Variant,
    counts: BTreeMap<usize, BigUint>,
}

impl CyclicPointCensus {
    pub(crate) fn from_counts(
        n: usize,
        variant: Variant,
        counts: BTreeMap<usize, BigUint>,
    ) -> Self {
        Self { n, variant, counts }
    }

    pub fn get(&self, k: usize) -> BigUint {
        self.counts.get(&k).cloned().unwrap_or_else(BigUint::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &BigUint)> {
        self.counts.iter().map(|(&k, c)| (k, c))
    }

    pub fn total(&self) -> BigUint {
        self.counts.values().sum()
    }
}

/// Census from the closed forms.
///
/// The prime family at `n = 1` is the single sequence `(1)`, which has one
/// cyclic point; the `k`-range of the prime closed form is empty there, so
/// that case is listed directly.
pub fn census_closed_form(n: usize, variant: Variant) -> CyclicPointCensus {
    assert!(n >= 1, "n must be at least 1");
    let mut counts = BTreeMap::new();
    match variant {
        Variant::Classical => {
            for k in 1..=n {
                counts.insert(k, count_pf_cyclic(n, k).expect("k in range"));
            }
        }
        Variant::Prime => {
            if n == 1 {
                counts.insert(1, BigUint::one());
            } else {
                for k in 1..n {
                    counts.insert(k, count_ppf_cyclic(n, k).expect("k in range"));
                }
            }
        }
    }
    CyclicPointCensus::from_counts(n, variant, counts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    #[test]
    fn totals() {
        assert_eq!(count_pf(1), BigUint::from(1u32));
        assert_eq!(count_pf(3), BigUint::from(16u32));
        assert_eq!(count_pf(7), BigUint::from(262144u32)); // 8^6
        assert_eq!(count_ppf(1), BigUint::from(1u32));
        assert_eq!(count_ppf(3), BigUint::from(4u32));
        assert_eq!(count_ppf(5), BigUint::from(256u32));
    }

    #[test]
    fn classical_cyclic_counts() {
        assert_eq!(count_pf_cyclic(3, 3).unwrap(), BigUint::from(6u32));
        assert_eq!(count_pf_cyclic(3, 1).unwrap(), BigUint::from(4u32));
        assert_eq!(count_pf_cyclic(3, 2).unwrap(), BigUint::from(6u32));
        assert!(count_pf_cyclic(3, 0).is_err());
        assert!(count_pf_cyclic(3, 4).is_err());
    }

    #[test]
    fn prime_cyclic_counts() {
        assert_eq!(count_ppf_cyclic(3, 1).unwrap(), BigUint::from(2u32));
        assert_eq!(count_ppf_cyclic(3, 2).unwrap(), BigUint::from(2u32));
        // 3 * 3! * binom(3,3) * 3^{-1} = 6
        assert_eq!(count_ppf_cyclic(4, 3).unwrap(), BigUint::from(6u32));
        assert!(count_ppf_cyclic(3, 3).is_err());
    }

    #[test]
    fn census_totals_match_closed_totals() {
        for n in 1..=200 {
            let census = census_closed_form(n, Variant::Classical);
            assert_eq!(census.total(), count_pf(n), "classical n = {n}");
            let census = census_closed_form(n, Variant::Prime);
            assert_eq!(census.total(), count_ppf(n), "prime n = {n}");
        }
    }

    #[test]
    fn pmf_values_and_normalization() {
        let p = pmf_cyclic(3, 3, Variant::Classical).unwrap();
        assert_eq!(p, BigRational::new(3.into(), 8.into()));
        let p = pmf_cyclic(3, 1, Variant::Prime).unwrap();
        assert_eq!(p, BigRational::new(1.into(), 2.into()));

        for n in [1usize, 2, 5, 17, 40] {
            let mut sum = BigRational::zero();
            for k in 1..=n {
                if let Ok(p) = pmf_cyclic(n, k, Variant::Classical) {
                    sum += p;
                }
            }
            assert!(sum.is_one(), "classical pmf sums to {sum} at n = {n}");
        }
        for n in [2usize, 5, 17, 40] {
            let mut sum = BigRational::zero();
            for k in 1..n {
                sum += pmf_cyclic(n, k, Variant::Prime).unwrap();
            }
            assert!(sum.is_one(), "prime pmf sums to {sum} at n = {n}");
        }
    }

    #[test]
    fn pmf_matches_lemma_expression() {
        // k n! / ((n+1)^k (n+1-k)!) for k < n
        let n = 6usize;
        for k in 1..n {
            let direct = BigRational::new(
                BigInt::from(k) * BigInt::from(factorial(n)),
                BigInt::from(n + 1).pow(k as u32) * BigInt::from(factorial(n + 1 - k)),
            );
            assert_eq!(pmf_cyclic(n, k, Variant::Classical).unwrap(), direct);
        }
        // prime: k (n-2)! / ((n-1)^k (n-1-k)!)
        for k in 1..n {
            let direct = BigRational::new(
                BigInt::from(k) * BigInt::from(factorial(n - 2)),
                BigInt::from(n - 1).pow(k as u32) * BigInt::from(factorial(n - 1 - k)),
            );
            assert_eq!(pmf_cyclic(n, k, Variant::Prime).unwrap(), direct);
        }
        let _ = count_pf(6).to_f64();
    }
}
