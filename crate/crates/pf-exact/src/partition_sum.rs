use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::counts::{factorial, ExactError};

const PARTITION_SUM_MAX: usize = 12;

/// Multiplicity vectors `(c_1, ..., c_j)` with `sum i * c_i = j`; `c[i-1]` is
/// the multiplicity of part `i`. For `j = 0` the single empty partition is a
/// vector of zeros.
fn partitions_of(j: usize) -> Vec<Vec<usize>> {
    fn rec(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining == 0 {
            out.push(current.clone());
            return;
        }
        for part in (1..=max_part.min(remaining)).rev() {
            current[part - 1] += 1;
            rec(remaining - part, part, current, out);
            current[part - 1] -= 1;
        }
    }
    let mut out = Vec::new();
    let mut current = vec![0usize; j.max(1)];
    if j == 0 {
        out.push(current);
    } else {
        rec(j, j, &mut current, &mut out);
    }
    out
}

/// Number of classical parking functions of length `n` with `k` cyclic
/// points, by literal evaluation of the inclusion-exclusion double sum over
/// cycle types:
///
/// outer sum over `(k_1..k_n)` with `sum i*k_i = k`, inner signed sum over
/// `(l_1..l_n)` with `sum i*(k_i+l_i) <= n`, each term
///
/// ```text
/// (-1)^(sum l_i) * prod ((i-1)!)^(k_i+l_i) / prod(k_i! l_i!)
///   * multinom(n+1; parts of size i with multiplicity k_i+l_i, rest)
///   * (n+1)^(n-1-sum i*(k_i+l_i))
/// ```
///
/// No cancellation or simplification is applied; the whole sum runs in exact
/// rational arithmetic (the power is `(n+1)^(-1)` in the extreme term) and
/// the result is asserted to be a nonnegative integer. This is the
/// independent derivation path for the closed form.
pub fn census_oracle_partition_sum(n: usize, k: usize) -> Result<BigUint, ExactError> {
    if n > PARTITION_SUM_MAX || k < 1 || k >= n {
        return Err(ExactError::PartitionSumRange {
            n,
            k,
            max: PARTITION_SUM_MAX,
        });
    }

    let fact: Vec<BigUint> = (0..=n + 1).map(factorial).collect();
    let m_big = BigInt::from(n + 1);

    let mut total = BigRational::zero();
    for outer in partitions_of(k) {
        for j in 0..=n - k {
            for inner in partitions_of(j) {
                let mut sign_exp = 0usize; // sum l_i
                let mut numer = BigInt::one();
                let mut denom = BigInt::one();
                let mut weight = 0usize; // sum i*(k_i+l_i)

                for i in 1..=n {
                    let ki = outer.get(i - 1).copied().unwrap_or(0);
                    let li = inner.get(i - 1).copied().unwrap_or(0);
                    if ki + li == 0 {
                        continue;
                    }
                    sign_exp += li;
                    weight += i * (ki + li);
                    // prod ((i-1)!)^(k_i+l_i) over prod k_i! l_i!
                    numer *= BigInt::from(fact[i - 1].clone()).pow((ki + li) as u32);
                    denom *= BigInt::from(fact[ki].clone()) * BigInt::from(fact[li].clone());
                    // multinomial denominator contribution (i!)^(k_i+l_i)
                    denom *= BigInt::from(fact[i].clone()).pow((ki + li) as u32);
                }
                debug_assert!(weight <= n);
                // multinomial numerator (n+1)! and the leftover block
                numer *= BigInt::from(fact[n + 1].clone());
                denom *= BigInt::from(fact[n + 1 - weight].clone());

                // (n+1)^(n-1-weight); the exponent is -1 when weight = n
                let e = n as i64 - 1 - weight as i64;
                if e >= 0 {
                    numer *= m_big.pow(e as u32);
                } else {
                    denom *= m_big.pow((-e) as u32);
                }

                let mut term = BigRational::new(numer, denom);
                if sign_exp % 2 == 1 {
                    term = -term;
                }
                total += term;
            }
        }
    }

    assert!(
        total.is_integer() && !total.is_negative(),
        "partition sum evaluated to {total}, expected a nonnegative integer"
    );
    Ok(total.to_integer().to_biguint().expect("nonnegative"))
}
