use std::sync::OnceLock;

use crate::result::{DomainError, SpecFunResult};

/// Sampled values of the generalized Dickman functions `rho_0 .. rho_r_max`
/// on a uniform grid over `[0, x_max]`.
///
/// `rho_0 = 0` identically; `rho_r = 1` on `[0, r]` (inductively from the
/// delay equation); beyond that each row is marched one step at a time using
/// the integral form
///
/// ```text
/// rho_r(x + h) = rho_r(x) - int_x^(x+h) (rho_r(t-1) - rho_(r-1)(t-1)) / t dt
/// ```
///
/// with Simpson's rule on each step. The delayed values at step endpoints
/// fall exactly on the grid; the midpoint value is cubic-interpolated with a
/// stencil clamped inside one unit interval, because the solution is smooth
/// inside `(m, m+1)` but has derivative jumps at the integers.
///
/// Stored rows are clamped to the analytically known envelope (values in
/// `[0, 1]`, nonincreasing in `x`, nondecreasing in `r`), which costs less
/// than the discretization error and makes those invariants exact.
#[derive(Debug)]
pub struct DickmanTable {
    r_max: usize,
    per_unit: usize,
    units: usize,
    rows: Vec<Vec<f64>>,
}

impl DickmanTable {
    pub fn build(r_max: usize, units: usize, per_unit: usize) -> Self {
        assert!(per_unit >= 8 && units >= 2);
        let len = units * per_unit + 1;
        let h = 1.0 / per_unit as f64;
        let mut rows: Vec<Vec<f64>> = Vec::with_capacity(r_max + 1);
        rows.push(vec![0.0; len]); // rho_0

        for r in 1..=r_max {
            let mut row = vec![0.0; len];
            let flat_end = (r.min(units)) * per_unit;
            for v in row.iter_mut().take(flat_end + 1) {
                *v = 1.0;
            }
            let prev = &rows[r - 1];
            for i in flat_end..len - 1 {
                let x = i as f64 * h;
                // g(t) = (rho_r(t-1) - rho_(r-1)(t-1)) / t at the step ends
                // (grid-aligned) and midpoint (interpolated).
                let j = i - per_unit;
                let g0 = (row[j] - prev[j]) / x;
                let g1 = (row[j + 1] - prev[j + 1]) / (x + h);
                let tm = x + 0.5 * h - 1.0;
                let rm = interp_in_unit(&row, per_unit, units, tm);
                let pm = interp_in_unit(prev, per_unit, units, tm);
                let gm = (rm - pm) / (x + 0.5 * h);
                let increment = h / 6.0 * (g0 + 4.0 * gm + g1);

                let mut v = row[i] - increment;
                v = v.min(row[i]); // nonincreasing
                v = v.max(prev[i + 1]); // rho_r >= rho_(r-1), hence also >= 0
                row[i + 1] = v;
            }
            rows.push(row);
        }
        Self {
            r_max,
            per_unit,
            units,
            rows,
        }
    }

    pub fn r_max(&self) -> usize {
        self.r_max
    }

    pub fn x_max(&self) -> f64 {
        self.units as f64
    }

    /// `rho_r(x)`; 0 beyond the stored range (see [`Self::tail_bound`]).
    pub fn eval(&self, r: usize, x: f64) -> f64 {
        assert!(r <= self.r_max, "row {r} not built (r_max = {})", self.r_max);
        assert!(x >= 0.0);
        if r == 0 {
            return 0.0;
        }
        if x <= r as f64 {
            return 1.0;
        }
        if x >= self.x_max() {
            return 0.0;
        }
        interp_in_unit(&self.rows[r], self.per_unit, self.units, x)
    }

    /// Upper bound for `rho_r` beyond the stored range: the last stored value
    /// (rows are nonincreasing).
    pub fn tail_bound(&self, r: usize) -> f64 {
        assert!(r <= self.r_max);
        *self.rows[r].last().expect("rows are nonempty")
    }
}

/// Cubic Lagrange interpolation on a uniform grid, with the 4-point stencil
/// kept inside the unit interval containing `x` (derivative jumps sit at the
/// integers).
fn interp_in_unit(row: &[f64], per_unit: usize, units: usize, x: f64) -> f64 {
    let h = 1.0 / per_unit as f64;
    let m = (x.floor() as usize).min(units - 1);
    let lo = m * per_unit;
    let hi = (m + 1) * per_unit;
    let i = ((x / h) as usize).clamp(lo, hi - 1);
    let j0 = i.saturating_sub(1).clamp(lo, hi - 3);
    let s = x / h - j0 as f64;
    let y = &row[j0..j0 + 4];
    let c0 = -(s - 1.0) * (s - 2.0) * (s - 3.0) / 6.0;
    let c1 = s * (s - 2.0) * (s - 3.0) / 2.0;
    let c2 = -s * (s - 1.0) * (s - 3.0) / 2.0;
    let c3 = s * (s - 1.0) * (s - 2.0) / 6.0;
    c0 * y[0] + c1 * y[1] + c2 * y[2] + c3 * y[3]
}

const DEFAULT_R_MAX: usize = 24;
const DEFAULT_UNITS: usize = 50;
/// Main grid: h = 5e-4; the coarse check grid has h = 1e-3.
const FINE_PER_UNIT: usize = 2000;
const COARSE_PER_UNIT: usize = 1000;

struct Tables {
    fine: DickmanTable,
    coarse: DickmanTable,
}

fn global_tables() -> &'static Tables {
    static TABLES: OnceLock<Tables> = OnceLock::new();
    TABLES.get_or_init(|| Tables {
        fine: DickmanTable::build(DEFAULT_R_MAX, DEFAULT_UNITS, FINE_PER_UNIT),
        coarse: DickmanTable::build(DEFAULT_R_MAX, DEFAULT_UNITS, COARSE_PER_UNIT),
    })
}

pub(crate) fn shared_table() -> &'static DickmanTable {
    &global_tables().fine
}

/// The generalized Dickman function `rho_r(x)`.
///
/// The error estimate combines a Richardson comparison of the two grids with
/// the truncation bound past the table (where the value is reported as 0).
/// Supported for `r <= 200`; rows above the shared table's range are built on
/// demand.
pub fn dickman_rho(r: usize, x: f64) -> Result<SpecFunResult, DomainError> {
    if !(x >= 0.0) || !x.is_finite() {
        return Err(DomainError::OutOfDomain {
            func: "dickman_rho",
            arg: "x",
            value: x,
            domain: "x >= 0",
        });
    }
    if r > 200 {
        return Err(DomainError::RankOutOfRange {
            func: "dickman_rho",
            r,
            domain: "r <= 200",
        });
    }
    if r <= DEFAULT_R_MAX {
        let t = global_tables();
        let fine = t.fine.eval(r, x);
        if x >= t.fine.x_max() {
            return Ok(SpecFunResult::new(0.0, t.fine.tail_bound(r)));
        }
        let coarse = t.coarse.eval(r, x);
        // Simpson marching is fourth order, so the fine-grid error is about
        // |fine - coarse| / 15; interpolation noise gets a small floor.
        let err = (fine - coarse).abs() / 15.0 + 4.0 * f64::EPSILON;
        Ok(SpecFunResult::new(fine, err))
    } else {
        let units = (x.ceil() as usize + 2).clamp(2, 260);
        let fine = DickmanTable::build(r, units, FINE_PER_UNIT);
        let coarse = DickmanTable::build(r, units, COARSE_PER_UNIT);
        if x >= fine.x_max() {
            return Ok(SpecFunResult::new(0.0, fine.tail_bound(r)));
        }
        let v = fine.eval(r, x);
        let err = (v - coarse.eval(r, x)).abs() / 15.0 + 4.0 * f64::EPSILON;
        Ok(SpecFunResult::new(v, err))
    }
}
