use pf_core::Variant;

use crate::moments::lambda_pmf;

/// `ln(n!)`: direct log sum for small `n`, Stirling series beyond.
fn ln_factorial(n: usize) -> f64 {
    if n < 256 {
        (2..=n).map(|i| (i as f64).ln()).sum()
    } else {
        let x = n as f64;
        let x2 = x * x;
        0.5 * (2.0 * std::f64::consts::PI * x).ln() + x * (x.ln() - 1.0) + 1.0 / (12.0 * x)
            - 1.0 / (360.0 * x2 * x) + 1.0 / (1260.0 * x2 * x2 * x)
    }
}

/// Per-k log-weights `ln P(lambda = k)` paired with the conditional factor
/// `ln prod_{j<=k} (e^t + j - 1)/j`, walked by recurrences. Calls `f` for
/// every k with a nonzero weight.
fn for_each_log_term(n: usize, t: f64, variant: Variant, mut f: impl FnMut(f64)) {
    let a = t.exp();
    if n == 1 {
        f(t); // single sequence, K = 1, weight 1
        return;
    }
    let (m, kmax) = match variant {
        Variant::Classical => ((n + 1) as f64, n - 1),
        Variant::Prime => ((n - 1) as f64, n - 1),
    };
    let mut log_p = -(m.ln()); // ln P(1) = -ln m
    let mut log_pi = (a / 1.0).ln();
    f(log_p + log_pi);
    for k in 1..kmax {
        let kf = k as f64;
        log_p += ((kf + 1.0) / kf).ln() + ((m - kf) / m).ln();
        log_pi += ((a + kf) / (kf + 1.0)).ln();
        f(log_p + log_pi);
    }
    if matches!(variant, Variant::Classical) {
        // k = n: P = n!/(n+1)^(n-1)
        let log_p_n = ln_factorial(n) - (n as f64 - 1.0) * m.ln();
        let mut log_pi_n = 0.0;
        for j in 1..=n {
            log_pi_n += ((a + j as f64 - 1.0) / j as f64).ln();
        }
        f(log_p_n + log_pi_n);
    }
}

/// `ln E[exp(t K_n)]`, exactly
/// `ln sum_k P(lambda = k) prod_{j=1}^k (e^t + j - 1)/j`.
///
/// The sum is evaluated in log space (two passes: max, then compensated
/// exp-sum), so large positive `t` cannot overflow intermediate products.
/// O(n) per call.
pub fn kn_log_mgf(n: usize, t: f64, variant: Variant) -> f64 {
    assert!(n >= 1, "n must be at least 1");
    if t == 0.0 {
        // sum of the pmf; do it directly so the t = 0 identity is clean
        let s: f64 = lambda_pmf(n, variant).iter().sum();
        return s.ln();
    }
    let mut max = f64::NEG_INFINITY;
    for_each_log_term(n, t, variant, |x| {
        if x > max {
            max = x;
        }
    });
    // Neumaier-compensated sum of exp(x - max)
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for_each_log_term(n, t, variant, |x| {
        let term = (x - max).exp();
        let s = sum + term;
        comp += if sum.abs() >= term.abs() {
            (sum - s) + term
        } else {
            (term - s) + sum
        };
        sum = s;
    });
    max + (sum + comp).ln()
}

/// `E[exp(t K_n)]`. Overflows to infinity only in the final exponentiation;
/// use [`kn_log_mgf`] when the value itself exceeds the float range.
pub fn kn_mgf(n: usize, t: f64, variant: Variant) -> f64 {
    kn_log_mgf(n, t, variant).exp()
}

/// Distribution of the cycle count `K_n` as floats: the mixture over
/// `lambda` of Poisson-binomial laws with success probabilities `1/i`,
/// truncated at `j_max` cycles.
pub fn kn_pmf(n: usize, variant: Variant, j_max: usize) -> Vec<f64> {
    assert!(n >= 1 && j_max >= 1);
    let lam = lambda_pmf(n, variant);
    let mut q = vec![0.0f64; j_max + 1];
    q[0] = 1.0;
    let mut out = vec![0.0f64; j_max + 1];
    for (k, &lk) in lam.iter().enumerate().skip(1) {
        let pk = 1.0 / k as f64;
        for j in (1..=j_max).rev() {
            q[j] = q[j] * (1.0 - pk) + q[j - 1] * pk;
        }
        q[0] *= 1.0 - pk;
        if lk > 0.0 {
            for (o, &qj) in out.iter_mut().zip(q.iter()) {
                *o += lk * qj;
            }
        }
    }
    out
}
