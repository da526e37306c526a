/// Rate function of the large deviation principle for the scaled cycle
/// count: `I(x) = x ln(2x) - x + 1/2` for `x > 0`, `1/2` at `x = 0` (the
/// continuous limit), infinite for `x < 0`.
pub fn ldp_rate(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if x < 0.0 {
        f64::INFINITY
    } else if x == 0.0 {
        0.5
    } else {
        x * (2.0 * x).ln() - x + 0.5
    }
}

/// The same function as the Legendre transform `sup_t (t x - (e^t - 1)/2)`,
/// evaluated by golden-section maximization over `t` without using the
/// closed-form maximizer. Serves as an independent numeric check of
/// [`ldp_rate`] for `x > 0`.
pub fn ldp_rate_legendre_numeric(x: f64) -> f64 {
    assert!(x > 0.0, "the numeric transform is for x > 0");
    let f = |t: f64| t * x - (t.exp() - 1.0) / 2.0;
    // f is strictly concave in t; bracket generously.
    let mut a = -60.0f64;
    let mut b = 20.0f64;
    let inv_phi = (5.0f64.sqrt() - 1.0) / 2.0;
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    for _ in 0..120 {
        if fc > fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    f(0.5 * (a + b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_values() {
        assert_eq!(ldp_rate(0.5), 0.0);
        assert!((ldp_rate(1.0) - (2.0f64.ln() - 0.5)).abs() < 1e-15);
        assert_eq!(ldp_rate(-1.0), f64::INFINITY);
        assert_eq!(ldp_rate(0.0), 0.5);
    }

    #[test]
    fn zero_is_the_unique_minimum() {
        for i in 1..=60 {
            let x = i as f64 * 0.05;
            if (x - 0.5).abs() > 1e-12 {
                assert!(ldp_rate(x) > 0.0, "I({x}) = {}", ldp_rate(x));
            }
        }
    }

    #[test]
    fn matches_legendre_transform() {
        for i in 1..=300 {
            let x = i as f64 * 0.01;
            let direct = ldp_rate(x);
            let numeric = ldp_rate_legendre_numeric(x);
            assert!(
                (direct - numeric).abs() < 1e-8,
                "x={x}: {direct} vs {numeric}"
            );
        }
    }

    #[test]
    fn convex_on_positive_axis() {
        // second difference nonnegative up to rounding
        let h = 1e-3;
        for i in 1..=3000 {
            let x = i as f64 * 1e-3 + h;
            let dd = ldp_rate(x + h) - 2.0 * ldp_rate(x) + ldp_rate(x - h);
            assert!(dd >= -1e-9, "x={x}: {dd}");
        }
    }
}
