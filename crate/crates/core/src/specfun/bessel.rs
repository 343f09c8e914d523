//! Bessel functions of the first kind for real order `ν ≥ 0`.
//!
//! Three evaluation routes are combined:
//!
//! * the ascending power series, used for `|z| ≤ 12` and whenever its terms
//!   do not cancel badly;
//! * Hankel's asymptotic expansion `J_ν(z) = √(2/πz) (P cos ω − Q sin ω)`,
//!   summed until the terms drop below machine precision, used only when
//!   that actually happens;
//! * Miller's backward recurrence normalized by the Neumann-type identity
//!   `(z/2)^ν₀ = Σ_k (ν₀+2k) Γ(ν₀+k)/k! J_{ν₀+2k}(z)`, which covers the
//!   transition region `|z| ~ ν` where neither of the others is accurate.

use num_complex::Complex64;
use statrs::function::gamma::{gamma, ln_gamma};
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::harmonics::Dimension;

/// Radius below which the power series is always used.
pub const SERIES_RADIUS: f64 = 12.0;

const SERIES_MAX_TERMS: usize = 600;
const HANKEL_MAX_TERMS: usize = 120;
/// Accepted estimated relative error of a truncated Hankel expansion.
const HANKEL_ACCEPT: f64 = 1e-15;
/// Largest accepted ratio of `Σ|terms|` to `|Σ terms|` in the power series.
const SERIES_CANCELLATION_LIMIT: f64 = 1e4;

/// Order `ν ≥ 0` of a Bessel function.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct BesselOrder(f64);

impl BesselOrder {
    pub fn new(nu: f64) -> Result<Self> {
        if !nu.is_finite() || nu < 0.0 {
            return Err(Error::Domain(format!("Bessel order must be a finite value >= 0, got {nu}")));
        }
        Ok(Self(nu))
    }

    /// The order `m + n/2 − 1` paired with degree-`m` harmonics in dimension `n`.
    pub fn for_harmonic(n: Dimension, m: usize) -> Self {
        Self(m as f64 + n.get() as f64 / 2.0 - 1.0)
    }

    /// The order `n/2 − 1` of the Fourier–Bessel kernel in dimension `n`.
    pub fn kernel(n: Dimension) -> Self {
        Self(n.get() as f64 / 2.0 - 1.0)
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0.fract() == 0.0
    }

    pub fn is_half_integer(self) -> bool {
        (self.0 - 0.5).fract() == 0.0
    }
}

impl std::fmt::Display for BesselOrder {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `J_ν(z)` on the principal branch.
///
/// Arguments on the negative real axis are only accepted for integer orders.
pub fn bessel_j(nu: BesselOrder, z: Complex64) -> Result<Complex64> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::Domain(format!("non-finite Bessel argument {z}")));
    }
    let v = nu.value();
    if z.im == 0.0 {
        return bessel_j_real(nu, z.re).map(|r| Complex64::new(r, 0.0));
    }
    if z.re < 0.0 {
        // z = w e^{±iπ} with Re w > 0, J_ν(w e^{±iπ}) = e^{±iπν} J_ν(w)
        let sign = if z.im > 0.0 { 1.0 } else { -1.0 };
        let phase = Complex64::from_polar(1.0, sign * PI * v);
        return Ok(phase * j_right_half(v, -z));
    }
    Ok(j_right_half(v, z))
}

/// `J_ν(x)` for real `x`. Negative `x` is a domain error unless `ν` is an integer.
pub fn bessel_j_real(nu: BesselOrder, x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::Domain(format!("non-finite Bessel argument {x}")));
    }
    if x < 0.0 {
        if !nu.is_integer() {
            return Err(Error::Domain(format!(
                "J_{nu}({x}): argument on the negative real cut for a non-integer order"
            )));
        }
        let parity = if (nu.value() as u64).is_multiple_of(2) { 1.0 } else { -1.0 };
        return Ok(parity * j_nonneg(nu.value(), -x));
    }
    Ok(j_nonneg(nu.value(), x))
}

/// Normalized Bessel function `j_p(x) = 2^p Γ(p+1) J_p(x) / x^p`, with `j_p(0) = 1`.
///
/// `j_p` is even, so negative arguments are accepted.
pub fn bessel_j_norm(p: BesselOrder, x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::Domain(format!("non-finite argument {x}")));
    }
    Ok(j_norm_nonneg(p.value(), x.abs()))
}

/// `J'_ν(x)` from the recurrences `J'_ν = (J_{ν−1} − J_{ν+1})/2` (`ν ≥ 1`) and
/// `J'_ν = (ν/x) J_ν − J_{ν+1}` (`ν < 1`).
///
/// For `0 < ν < 1` the derivative is unbounded at the origin and `+∞` is returned.
pub fn bessel_j_prime(nu: BesselOrder, x: f64) -> Result<f64> {
    let v = nu.value();
    if x == 0.0 {
        return Ok(if v == 0.0 {
            0.0
        } else if v < 1.0 {
            f64::INFINITY
        } else if v == 1.0 {
            0.5
        } else {
            0.0
        });
    }
    let up = BesselOrder(v + 1.0);
    if v >= 1.0 {
        let down = BesselOrder(v - 1.0);
        Ok(0.5 * (bessel_j_real(down, x)? - bessel_j_real(up, x)?))
    } else {
        Ok(v / x * bessel_j_real(nu, x)? - bessel_j_real(up, x)?)
    }
}

/// Power-series branch on its own. Accurate for moderate `|z|`; loses digits
/// to cancellation near the real axis once `|z|` grows.
pub fn bessel_j_series(nu: BesselOrder, z: Complex64) -> Complex64 {
    series(nu.value(), z).0
}

/// Hankel asymptotic branch on its own, summed up to its smallest term.
/// Requires `Re z > 0`.
pub fn bessel_j_asymptotic(nu: BesselOrder, z: Complex64) -> Complex64 {
    hankel(nu.value(), z).0
}

/// Closed form for half-integer orders: `J_{l+1/2}(x) = √(2x/π) j_l(x)` with the
/// spherical Bessel function `j_l` obtained by upward recurrence from
/// `sin x / x` and `sin x / x² − cos x / x`.
///
/// Upward recurrence is accurate for `x ≳ l`; for smaller arguments it loses
/// roughly `(2l−1)!!² / x^{2l+1}` in relative precision.
pub fn bessel_j_half_integer(l: usize, x: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    let (s, c) = x.sin_cos();
    let j0 = s / x;
    let mut prev = j0;
    let mut cur = s / (x * x) - c / x;
    if l == 0 {
        return (2.0 * x / PI).sqrt() * j0;
    }
    for k in 1..l {
        let next = (2 * k + 1) as f64 / x * cur - prev;
        prev = cur;
        cur = next;
    }
    (2.0 * x / PI).sqrt() * cur
}

pub(crate) fn j_nonneg(v: f64, x: f64) -> f64 {
    if x == 0.0 {
        return if v == 0.0 { 1.0 } else { 0.0 };
    }
    j_right_half(v, Complex64::new(x, 0.0)).re
}

pub(crate) fn j_norm_nonneg(p: f64, x: f64) -> f64 {
    if x <= SERIES_RADIUS {
        let q = -0.25 * x * x;
        let mut term = 1.0;
        let mut sum = 1.0;
        let mut abs_sum = 1.0;
        for k in 1..SERIES_MAX_TERMS {
            let kf = k as f64;
            term *= q / (kf * (p + kf));
            sum += term;
            abs_sum += term.abs();
            if term.abs() <= 1e-17 * abs_sum && kf * kf > -q {
                break;
            }
        }
        return sum;
    }
    if p == 0.0 {
        return j_nonneg(0.0, x);
    }
    let log_factor = p * std::f64::consts::LN_2 + ln_gamma(p + 1.0) - p * x.ln();
    log_factor.exp() * j_nonneg(p, x)
}

fn j_right_half(v: f64, z: Complex64) -> Complex64 {
    if z.norm() <= SERIES_RADIUS {
        return series(v, z).0;
    }
    let (h, err) = hankel(v, z);
    if err <= HANKEL_ACCEPT {
        return h;
    }
    let (s, abs_sum) = series(v, z);
    if abs_sum <= SERIES_CANCELLATION_LIMIT * s.norm() {
        return s;
    }
    miller(v, z)
}

/// Returns the series value and `Σ|terms|` carrying the same prefactor.
fn series(v: f64, z: Complex64) -> (Complex64, f64) {
    if z == Complex64::ZERO {
        let value = if v == 0.0 { 1.0 } else { 0.0 };
        return (Complex64::new(value, 0.0), 1.0);
    }
    let q = -z * z * 0.25;
    let qn = q.norm();
    let mut term = Complex64::ONE;
    let mut sum = Complex64::ONE;
    let mut abs_sum = 1.0;
    for k in 1..SERIES_MAX_TERMS {
        let kf = k as f64;
        term *= q / (kf * (v + kf));
        sum += term;
        let tn = term.norm();
        abs_sum += tn;
        if tn <= 1e-17 * abs_sum && kf * kf > qn {
            break;
        }
    }
    let prefactor = if v == 0.0 {
        Complex64::ONE
    } else if z.im == 0.0 && z.re > 0.0 {
        Complex64::new((v * (0.5 * z.re).ln() - ln_gamma(v + 1.0)).exp(), 0.0)
    } else {
        (z * 0.5).powf(v) / gamma(v + 1.0)
    };
    (prefactor * sum, prefactor.norm() * abs_sum)
}

/// Hankel expansion; the second value is the magnitude of the last term
/// included, an estimate of the relative truncation error.
fn hankel(v: f64, z: Complex64) -> (Complex64, f64) {
    let mu = 4.0 * v * v;
    let mut p = Complex64::ONE;
    let mut q = Complex64::ZERO;
    let mut term = Complex64::ONE;
    let mut err = f64::INFINITY;
    for k in 1..=HANKEL_MAX_TERMS {
        let odd = (2 * k - 1) as f64;
        let next = term * (mu - odd * odd) / (8.0 * k as f64 * z);
        let mag = next.norm();
        if mag == 0.0 {
            // half-integer orders: the expansion terminates
            err = 0.0;
            break;
        }
        if k > 1 && mag >= term.norm() {
            err = term.norm();
            break;
        }
        let sign = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
        if k.is_multiple_of(2) {
            p += sign * next;
        } else {
            q += sign * next;
        }
        term = next;
        if mag < 1e-17 {
            err = mag;
            break;
        }
    }
    let omega = z - (0.5 * v + 0.25) * PI;
    let amplitude = (2.0 / (PI * z)).sqrt();
    (amplitude * (p * omega.cos() - q * omega.sin()), err)
}

/// Miller's algorithm for `ν = ν₀ + N` with `0 ≤ ν₀ < 1`.
fn miller(v: f64, z: Complex64) -> Complex64 {
    let order = v.floor() as usize;
    let nu0 = v - order as f64;
    let reach = z.norm().max(order as f64);
    let mut top = (reach + 30.0 + 12.0 * reach.cbrt()).ceil() as usize + 1;
    top += top % 2;

    // normalization weights w_j = (ν₀+2j) Γ(ν₀+j)/j!, w_0 = Γ(ν₀+1)
    let half = top / 2;
    let mut weights = Vec::with_capacity(half + 1);
    let g1 = gamma(nu0 + 1.0);
    weights.push(g1);
    let mut ratio = g1; // Γ(ν₀+j)/j! at j = 1
    for j in 1..=half {
        let jf = j as f64;
        weights.push((nu0 + 2.0 * jf) * ratio);
        ratio *= (nu0 + jf) / (jf + 1.0);
    }

    let inv_z = z.inv();
    let mut next = Complex64::ZERO;
    let mut cur = Complex64::new(1e-30, 0.0);
    let mut sum = Complex64::ZERO;
    let mut target = Complex64::ZERO;
    let mut k = top;
    loop {
        if k == order {
            target = cur;
        }
        if k.is_multiple_of(2) {
            sum += weights[k / 2] * cur;
        }
        if k == 0 {
            break;
        }
        let prev = 2.0 * (nu0 + k as f64) * inv_z * cur - next;
        next = cur;
        cur = prev;
        k -= 1;
        if cur.norm() > 1e250 {
            const SHRINK: f64 = 1e-250;
            cur *= SHRINK;
            next *= SHRINK;
            sum *= SHRINK;
            target *= SHRINK;
        }
    }
    let lead = if nu0 == 0.0 { Complex64::ONE } else { (z * 0.5).powf(nu0) };
    lead * target / sum
}
