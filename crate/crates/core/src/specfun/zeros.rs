use std::f64::consts::PI;

use super::bessel::{bessel_j_prime, j_nonneg, BesselOrder};
use crate::error::{Error, Result};

/// Bound on `|J_ν(λ)|` at every tabulated zero.
pub const ZERO_TOLERANCE: f64 = 1e-10;
/// Width of the interval across which every zero is certified by a sign change.
pub const CERTIFICATE_WIDTH: f64 = 1e-8;

const NEWTON_TOL: f64 = 1e-12;
const NEWTON_MAX_ITER: usize = 50;
const BISECTION_MAX_ITER: usize = 200;
// Consecutive positive zeros are more than 2.9 apart for every ν ≥ 0, so a
// scan with this step never steps over two zeros at once.
const SCAN_STEP: f64 = PI / 4.0;

/// The first positive zeros `λ_1 < λ_2 < …` of `J_ν`.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroTable {
    order: BesselOrder,
    zeros: Vec<f64>,
}

impl ZeroTable {
    pub fn order(&self) -> BesselOrder {
        self.order
    }

    pub fn zeros(&self) -> &[f64] {
        &self.zeros
    }

    pub fn len(&self) -> usize {
        self.zeros.len()
    }

    pub fn is_empty(&self) -> bool {
        self.zeros.is_empty()
    }

    /// The `k`-th zero, counting from 1.
    pub fn get(&self, k: usize) -> Option<f64> {
        k.checked_sub(1).and_then(|i| self.zeros.get(i).copied())
    }
}

/// Leading McMahon term `π(k + ν/2 − 1/4)` for the `k`-th zero.
pub fn mcmahon_guess(nu: BesselOrder, k: usize) -> f64 {
    PI * (k as f64 + 0.5 * nu.value() - 0.25)
}

/// First `count` positive zeros of `J_ν`.
///
/// Each zero is bracketed by a sign-change scan, refined by Newton's method
/// started from the McMahon estimate (falling back to bisection inside the
/// bracket), and certified by a sign change over [`CERTIFICATE_WIDTH`].
pub fn bessel_zeros(nu: BesselOrder, count: usize) -> Result<ZeroTable> {
    if count == 0 {
        return Err(Error::Config("zero count must be at least 1".into()));
    }
    scan(nu, |found, _| found >= count)
}

/// All positive zeros of `J_ν` below `limit`.
pub fn bessel_zeros_below(nu: BesselOrder, limit: f64) -> Result<ZeroTable> {
    if !limit.is_finite() {
        return Err(Error::Config(format!("zero search limit must be finite, got {limit}")));
    }
    let mut table = scan(nu, |_, x| x >= limit)?;
    table.zeros.retain(|&z| z < limit);
    Ok(table)
}

fn scan(nu: BesselOrder, mut done: impl FnMut(usize, f64) -> bool) -> Result<ZeroTable> {
    let v = nu.value();
    let mut zeros = Vec::new();
    // J_ν has no zeros in (0, max(ν, 0.5)]
    let mut lo = v.max(0.5);
    let mut f_lo = j_nonneg(v, lo);
    while !done(zeros.len(), lo) {
        let hi = lo + SCAN_STEP;
        let f_hi = j_nonneg(v, hi);
        if f_hi == 0.0 || f_lo.signum() != f_hi.signum() {
            let k = zeros.len() + 1;
            zeros.push(refine(nu, k, lo, hi, f_lo)?);
        }
        lo = hi;
        f_lo = f_hi;
    }
    Ok(ZeroTable { order: nu, zeros })
}

fn refine(nu: BesselOrder, k: usize, lo: f64, hi: f64, f_lo: f64) -> Result<f64> {
    let v = nu.value();
    let (mut a, mut b, mut fa) = (lo, hi, f_lo);
    let guess = mcmahon_guess(nu, k);
    let mut x = if guess > a && guess < b { guess } else { 0.5 * (a + b) };
    let mut converged = false;
    for _ in 0..NEWTON_MAX_ITER {
        let fx = j_nonneg(v, x);
        if fx == 0.0 {
            converged = true;
            break;
        }
        if fx.signum() == fa.signum() {
            a = x;
            fa = fx;
        } else {
            b = x;
        }
        let slope = bessel_j_prime(nu, x)?;
        let mut next = x - fx / slope;
        if !next.is_finite() || next <= a || next >= b {
            next = 0.5 * (a + b);
        }
        let step = (next - x).abs();
        x = next;
        if step < NEWTON_TOL {
            converged = true;
            break;
        }
    }
    if !converged {
        let mut iter = 0;
        while b - a > NEWTON_TOL {
            let mid = 0.5 * (a + b);
            let fm = j_nonneg(v, mid);
            if fm.signum() == fa.signum() {
                a = mid;
                fa = fm;
            } else {
                b = mid;
            }
            iter += 1;
            if iter > BISECTION_MAX_ITER {
                return Err(Error::Numerical {
                    index: k,
                    message: format!("zero of J_{nu} did not converge in [{a}, {b}]"),
                });
            }
        }
        x = 0.5 * (a + b);
    }
    certify(nu, k, x)
}

fn certify(nu: BesselOrder, k: usize, x: f64) -> Result<f64> {
    let v = nu.value();
    let half = 0.5 * CERTIFICATE_WIDTH;
    let (left, mid, right) = (j_nonneg(v, x - half), j_nonneg(v, x), j_nonneg(v, x + half));
    if mid.abs() >= ZERO_TOLERANCE || (mid != 0.0 && left.signum() == right.signum()) {
        return Err(Error::Numerical {
            index: k,
            message: format!("candidate zero {x} of J_{nu} failed certification (J = {mid:e})"),
        });
    }
    Ok(x)
}
