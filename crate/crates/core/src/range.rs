//! Range checks for sampled spherical-mean data: the Bessel-zero conditions on
//! `ĝ_{m,l}`, the orthogonality conditions against Dirichlet eigenfunctions of
//! the ball, the moment conditions, and the order of vanishing at `λ = 0`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use statrs::function::gamma::gamma;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::harmonics::{eval_unchecked, harmonic_indices, Dimension, HarmonicIndex};
use crate::spectral::{check_t_resolution, decompose, kernel_order, least_squares_slope, HarmonicCoefficient, SpectralFunction};
use crate::specfun::{bessel_j_prime, bessel_zeros, j_nonneg, j_norm_nonneg, BesselOrder, ZeroTable, ZERO_TOLERANCE};
use crate::transform::DataGrid;
use crate::Point;

/// Spacing of the `λ` samples used to find `max |ĝ|` on the inspected interval.
pub const SUP_STEP: f64 = 0.05;
/// A channel whose scale falls below this fraction of the largest channel
/// scale is normalized by the floor instead and flagged degenerate.
pub const DEGENERACY_RATIO: f64 = 1e-6;
/// Window points with `|ĝ|` below this fraction of `‖g_{m,l}‖` are treated
/// as quadrature noise by [`vanishing_order`].
pub const NOISE_RATIO: f64 = 1e-11;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct Tolerances {
    pub condition3: f64,
    pub condition2: f64,
    pub moments: f64,
    /// Multiplies every tolerance above.
    pub scale: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self { condition3: 1e-6, condition2: 1e-6, moments: 1e-8, scale: 1.0 }
    }
}

impl Tolerances {
    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("condition3", self.condition3),
            ("condition2", self.condition2),
            ("moments", self.moments),
            ("scale", self.scale),
        ] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::Config(format!("tolerance {name} must be positive, got {v}")));
            }
        }
        Ok(())
    }

    fn get(&self, condition: Condition) -> f64 {
        self.scale
            * match condition {
                Condition::BesselZeros => self.condition3,
                Condition::Eigenfunction => self.condition2,
                Condition::Moment => self.moments,
            }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
    /// Passed only because the data in question is zero up to roundoff.
    Degenerate,
}

impl Verdict {
    pub fn passed(self) -> bool {
        self != Verdict::Fail
    }

    fn of(residual: f64, tolerance: f64, degenerate: bool) -> Self {
        if !(residual < tolerance) {
            Verdict::Fail
        } else if degenerate {
            Verdict::Degenerate
        } else {
            Verdict::Pass
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Degenerate => "DEGENERATE",
        })
    }
}

/// The separable Dirichlet eigenfunction
/// `ψ_λ(x) = |x|^{1−n/2} J_{m+n/2−1}(λ|x|) Y^m_l(x/|x|)` with `J_{m+n/2−1}(λ) = 0`.
/// On the unit sphere its outward normal derivative is `λ J'_{m+n/2−1}(λ) Y^m_l`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Eigenfunction {
    idx: HarmonicIndex,
    lambda: f64,
    boundary_factor: f64,
}

impl Eigenfunction {
    pub fn new(idx: HarmonicIndex, lambda: f64) -> Result<Self> {
        let nu = BesselOrder::for_harmonic(idx.dimension(), idx.degree());
        if !(lambda > 0.0) || j_nonneg(nu.value(), lambda).abs() >= ZERO_TOLERANCE {
            return Err(Error::Validation(format!("{lambda} is not a positive zero of J_{nu}")));
        }
        let boundary_factor = lambda * bessel_j_prime(nu, lambda)?;
        if boundary_factor == 0.0 {
            return Err(Error::Numerical { index: 0, message: format!("zero {lambda} of J_{nu} is not simple") });
        }
        Ok(Self { idx, lambda, boundary_factor })
    }

    /// Eigenfunction for the `k`-th zero (1-based) of the table.
    pub fn from_zeros(idx: HarmonicIndex, zeros: &ZeroTable, k: usize) -> Result<Self> {
        let lambda = zeros
            .get(k)
            .ok_or_else(|| Error::Config(format!("zero table has {} entries, asked for zero {k}", zeros.len())))?;
        Self::new(idx, lambda)
    }

    pub fn index(&self) -> HarmonicIndex {
        self.idx
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn boundary_factor(&self) -> f64 {
        self.boundary_factor
    }

    pub fn psi(&self, x: &Point) -> f64 {
        let n = self.idx.dimension();
        let nu = BesselOrder::for_harmonic(n, self.idx.degree()).value();
        let r = (x[0] * x[0] + x[1] * x[1] + x[2] * x[2]).sqrt();
        if r == 0.0 {
            // |x|^{1−n/2} J_ν(λ|x|) ~ (λ/2)^ν |x|^m / Γ(ν+1)
            return if self.idx.degree() == 0 {
                (0.5 * self.lambda).powf(nu) / gamma(nu + 1.0) * eval_unchecked(self.idx, &[1.0, 0.0, 0.0])
            } else {
                0.0
            };
        }
        let radial = r.powf(1.0 - 0.5 * n.get() as f64) * j_nonneg(nu, self.lambda * r);
        radial * eval_unchecked(self.idx, &[x[0] / r, x[1] / r, x[2] / r])
    }

    /// One-sided difference `(ψ(θ) − ψ((1−h)θ)) / h` of the radial derivative
    /// at a unit vector `θ`; approximates `boundary_factor · Y^m_l(θ)` to `O(h)`.
    pub fn normal_derivative_fd(&self, theta: &Point, h: f64) -> f64 {
        let inner = [theta[0] * (1.0 - h), theta[1] * (1.0 - h), theta[2] * (1.0 - h)];
        (self.psi(theta) - self.psi(&inner)) / h
    }
}

/// Residuals `|ĝ_{m,l}(λ_k)|` at the first `K` zeros of `J_{m+n/2−1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct Condition3 {
    pub idx: HarmonicIndex,
    pub lambdas: Vec<f64>,
    /// Signed `ĝ_{m,l}(λ_k)`.
    pub raw: Vec<f64>,
    /// `max |ĝ_{m,l}|` on `[0, λ_K]`.
    pub sup: f64,
    /// Normalizer actually used: `max(sup, floor)`.
    pub normalizer: f64,
    pub residuals: Vec<f64>,
    pub degenerate: bool,
}

impl Condition3 {
    /// Re-normalizes with `max(sup, floor)`; the channel is degenerate when
    /// `sup ≤ floor`.
    pub fn with_floor(mut self, floor: f64) -> Self {
        self.normalizer = self.sup.max(floor);
        self.degenerate = self.sup <= floor || self.sup == 0.0;
        self.residuals = normalize(&self.raw, self.normalizer);
        self
    }
}

fn normalize(raw: &[f64], normalizer: f64) -> Vec<f64> {
    raw.iter().map(|r| if normalizer > 0.0 { r.abs() / normalizer } else { 0.0 }).collect()
}

pub fn check_condition3(spec: &SpectralFunction, zeros: &ZeroTable, k: usize) -> Result<Condition3> {
    let idx = spec.index();
    let nu = BesselOrder::for_harmonic(idx.dimension(), idx.degree());
    if zeros.order() != nu {
        return Err(Error::Config(format!("zero table is for J_{}, channel {idx} needs J_{nu}", zeros.order())));
    }
    if k == 0 || zeros.len() < k {
        return Err(Error::Config(format!("need 1..={} zeros, asked for {k}", zeros.len())));
    }
    let lambdas = zeros.zeros()[..k].to_vec();
    let raw = spec.eval_many(&lambdas);
    let sup = spec.sup_on(lambdas[k - 1], SUP_STEP);
    let base = Condition3 { idx, lambdas, raw, sup, normalizer: 0.0, residuals: Vec::new(), degenerate: false };
    Ok(base.with_floor(0.0))
}

/// `∫_S ∫_0^2 g(x, t) ∂_ν ψ_λ(x) j_{n/2−1}(λt) t^{n−1} dt dx` evaluated as a
/// direct double sum over the grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Condition2 {
    pub raw: f64,
    /// `|raw| / (|λ J'(λ)| · max(‖g‖, floor))`.
    pub residual: f64,
    pub degenerate: bool,
}

pub fn check_condition2(grid: &DataGrid, eig: &Eigenfunction) -> Result<Condition2> {
    check_condition2_with_floor(grid, eig, 0.0)
}

pub fn check_condition2_with_floor(grid: &DataGrid, eig: &Eigenfunction, floor: f64) -> Result<Condition2> {
    let n = grid.dimension();
    if eig.idx.dimension() != n {
        return Err(Error::Config("eigenfunction dimension does not match the data".into()));
    }
    let p = kernel_order(n);
    let power = n.get() as i32 - 1;
    let radial = grid.radial();
    let kernel: Vec<f64> = radial
        .t()
        .iter()
        .zip(radial.weights())
        .map(|(&t, w)| w * j_norm_nonneg(p, eig.lambda * t) * t.powi(power))
        .collect();
    let centers = grid.centers();
    let mut raw = 0.0;
    for (i, (x, w)) in centers.nodes().iter().zip(centers.weights()).enumerate() {
        let normal = eig.boundary_factor * eval_unchecked(eig.idx, x);
        let inner: f64 = grid.row(i).iter().zip(&kernel).map(|(g, k)| g * k).sum();
        raw += w * normal * inner;
    }
    let norm = grid.norm();
    let scale = norm.max(floor) * eig.boundary_factor.abs();
    let residual = if scale > 0.0 { raw.abs() / scale } else { 0.0 };
    Ok(Condition2 { raw, residual, degenerate: norm <= floor || norm == 0.0 })
}

/// `∫_0^2 t^{2k+n−1} g_{m,l}(t) dt` by the grid rule, accumulated directly.
pub fn radial_moment(coef: &HarmonicCoefficient, k: usize) -> f64 {
    let radial = coef.radial();
    let exponent = (2 * k + coef.dimension().get() - 1) as i32;
    let mut acc = 0.0;
    for ((t, w), g) in radial.t().iter().zip(radial.weights()).zip(coef.samples()) {
        acc += w * t.powi(exponent) * g;
    }
    acc
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentResidual {
    pub k: usize,
    pub raw: f64,
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Moments {
    pub idx: HarmonicIndex,
    pub norm: f64,
    pub normalizer: f64,
    pub residuals: Vec<MomentResidual>,
    pub degenerate: bool,
}

/// Moments `k < k_max` with `2k < m`, normalized by `‖g_{m,l}‖`.
pub fn check_moments(coef: &HarmonicCoefficient, k_max: usize) -> Moments {
    check_moments_with_floor(coef, k_max, 0.0)
}

pub fn check_moments_with_floor(coef: &HarmonicCoefficient, k_max: usize, floor: f64) -> Moments {
    let m = coef.index().degree();
    let norm = coef.norm();
    let normalizer = norm.max(floor);
    let residuals = (0..k_max)
        .take_while(|k| 2 * k < m)
        .map(|k| {
            let raw = radial_moment(coef, k);
            let residual = if normalizer > 0.0 { raw.abs() / normalizer } else { 0.0 };
            MomentResidual { k, raw, residual }
        })
        .collect();
    Moments { idx: coef.index(), norm, normalizer, residuals, degenerate: norm <= floor || norm == 0.0 }
}

/// Harmonic content of `M_k(θ) = ∫_0^2 t^{2k+n−1} g(θ, t) dt`. `M_k` extends to
/// a polynomial of degree `≤ 2k` exactly when every component of degree
/// `m > 2k` vanishes.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MomentPolynomial {
    pub k: usize,
    /// `(m, l, coefficient)`.
    pub coefficients: Vec<(usize, usize, f64)>,
    /// Largest `|coefficient|` with `m > 2k`, relative to the coefficient norm.
    pub excess: f64,
    /// Largest `|coefficient|` with `m ≤ 2k` and `2k − m` odd, relative; reported only.
    pub odd_parity: f64,
    pub verdict: Verdict,
}

pub fn moment_polynomial_check(grid: &DataGrid, k: usize, m_max: usize, tolerance: f64) -> Result<MomentPolynomial> {
    let centers = grid.centers();
    if centers.resolution() < 4 * m_max {
        return Err(Error::Config(format!(
            "sphere resolution {} is too low for degree {m_max}",
            centers.resolution()
        )));
    }
    let n = grid.dimension();
    let radial = grid.radial();
    let exponent = (2 * k + n.get() - 1) as i32;
    let weights: Vec<f64> = radial.t().iter().zip(radial.weights()).map(|(t, w)| w * t.powi(exponent)).collect();
    let values: Vec<f64> =
        (0..centers.len()).map(|i| grid.row(i).iter().zip(&weights).map(|(g, w)| g * w).sum()).collect();
    let coefficients: Vec<(usize, usize, f64)> = harmonic_indices(n, m_max)
        .into_iter()
        .map(|idx| {
            let c = centers
                .nodes()
                .iter()
                .zip(centers.weights())
                .zip(&values)
                .map(|((x, w), v)| w * v * eval_unchecked(idx, x))
                .sum();
            (idx.degree(), idx.index(), c)
        })
        .collect();
    let total = coefficients.iter().map(|c| c.2 * c.2).sum::<f64>().sqrt();
    let rel = |pred: &dyn Fn(usize) -> bool| {
        let top = coefficients.iter().filter(|c| pred(c.0)).fold(0.0f64, |a, c| a.max(c.2.abs()));
        if total > 0.0 { top / total } else { 0.0 }
    };
    let excess = rel(&|m| m > 2 * k);
    let odd_parity = rel(&|m| m <= 2 * k && (2 * k - m) % 2 == 1);
    let verdict = Verdict::of(excess, tolerance, total == 0.0);
    Ok(MomentPolynomial { k, coefficients, excess, odd_parity, verdict })
}

/// Geometric sampling of `λ` used to fit the order of vanishing at 0.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FitWindow {
    pub lo: f64,
    pub hi: f64,
    pub points: usize,
}

impl Default for FitWindow {
    fn default() -> Self {
        Self { lo: 0.05, hi: 0.5, points: 16 }
    }
}

impl FitWindow {
    pub fn validate(&self) -> Result<()> {
        if !(self.lo > 0.0 && self.hi > self.lo && self.hi.is_finite()) || self.points < 3 {
            return Err(Error::Config(format!(
                "fit window needs 0 < lo < hi and at least 3 points, got [{}, {}] with {}",
                self.lo, self.hi, self.points
            )));
        }
        Ok(())
    }

    pub fn samples(&self) -> Vec<f64> {
        let ratio = (self.hi / self.lo).ln() / (self.points - 1) as f64;
        (0..self.points).map(|i| self.lo * (ratio * i as f64).exp()).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum VanishingOrder {
    /// Fitted log–log slope.
    Estimate(f64),
    /// Too few window samples above the noise floor; the order is at least
    /// the slope the window could have resolved.
    AtLeastWindowLimit,
}

/// Least-squares slope of `log |ĝ_{m,l}(λ)|` against `log λ` over the window,
/// skipping samples below the noise floor `NOISE_RATIO · ‖g_{m,l}‖`.
pub fn vanishing_order(spec: &SpectralFunction, window: &FitWindow) -> Result<VanishingOrder> {
    window.validate()?;
    let floor = NOISE_RATIO * spec.coefficient().norm();
    let lambdas = window.samples();
    let points: Vec<(f64, f64)> = lambdas
        .iter()
        .zip(spec.eval_many(&lambdas))
        .filter(|(_, v)| v.abs() > floor)
        .map(|(l, v)| (l.ln(), v.abs().ln()))
        .collect();
    Ok(match least_squares_slope(&points) {
        Some(s) if points.len() * 2 > window.points => VanishingOrder::Estimate(s),
        _ => VanishingOrder::AtLeastWindowLimit,
    })
}

/// `t^a (2−t)^b Y^m_l(x)` scaled by `amplitude`; smooth with compact support
/// in `S × [0, 2]` for `a, b ≥ 2` but not in the range.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NonRangeTerm {
    pub m: usize,
    pub l: usize,
    pub a: u32,
    pub b: u32,
    pub amplitude: f64,
}

impl NonRangeTerm {
    pub fn index(&self, n: Dimension) -> Result<HarmonicIndex> {
        HarmonicIndex::new(n, self.m, self.l)
    }

    /// Returns `grid + term`.
    pub fn apply(&self, grid: &DataGrid) -> Result<DataGrid> {
        if self.a < 2 || self.b < 2 || !self.amplitude.is_finite() {
            return Err(Error::Validation(format!(
                "perturbation needs a, b >= 2 and finite amplitude, got a={} b={}",
                self.a, self.b
            )));
        }
        let idx = self.index(grid.dimension())?;
        let mut out = grid.clone();
        let radial = grid.radial().clone();
        let profile: Vec<f64> = radial
            .t()
            .iter()
            .map(|t| self.amplitude * t.powi(self.a as i32) * (2.0 - t).powi(self.b as i32))
            .collect();
        for (i, x) in grid.centers().nodes().iter().enumerate() {
            let y = eval_unchecked(idx, x);
            for (g, p) in out.row_mut(i).iter_mut().zip(&profile) {
                *g += y * p;
            }
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Condition {
    /// `ĝ_{m,l}` at zeros of `J_{m+n/2−1}`.
    BesselZeros,
    /// Orthogonality to `∂_ν ψ_λ`.
    Eigenfunction,
    /// `∫ t^{2k+n−1} g_{m,l} dt` for `2k < m`.
    Moment,
}

impl std::fmt::Display for Condition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Condition::BesselZeros => "bessel_zeros",
            Condition::Eigenfunction => "eigenfunction",
            Condition::Moment => "moment",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportEntry {
    pub condition: Condition,
    pub m: usize,
    pub l: usize,
    /// Zero index (1-based) or moment order `k`.
    pub index: usize,
    pub residual: f64,
    pub tolerance: f64,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VanishingEntry {
    pub m: usize,
    pub l: usize,
    pub order: VanishingOrder,
    /// The fit ran on a degenerate channel and only measures noise.
    pub degenerate: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct CheckConfig {
    pub m_max: usize,
    /// Number of Bessel zeros per channel.
    pub zeros: usize,
    pub tolerances: Tolerances,
    pub window: FitWindow,
}

impl Default for CheckConfig {
    fn default() -> Self {
        Self { m_max: 8, zeros: 20, tolerances: Tolerances::default(), window: FitWindow::default() }
    }
}

/// All residuals for one data set.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RangeReport {
    pub dimension: usize,
    pub m_max: usize,
    pub zeros: usize,
    /// `[0, Λ]` with `Λ` the largest Bessel zero inspected.
    pub interval: (f64, f64),
    pub entries: Vec<ReportEntry>,
    pub vanishing: Vec<VanishingEntry>,
    pub moment_polynomials: Vec<MomentPolynomial>,
    /// Channels `(m, l)` whose data is zero up to roundoff.
    pub degenerate: Vec<(usize, usize)>,
    pub verdict: Verdict,
}

impl RangeReport {
    pub fn entries_for(&self, condition: Condition) -> impl Iterator<Item = &ReportEntry> {
        self.entries.iter().filter(move |e| e.condition == condition)
    }

    pub fn max_residual(&self, condition: Condition) -> f64 {
        self.entries_for(condition).fold(0.0, |m, e| m.max(e.residual))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Fixed-width text table, one line per entry.
    pub fn table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "n={} m_max={} zeros={} interval=[{:.6}, {:.6}] verdict={}",
            self.dimension, self.m_max, self.zeros, self.interval.0, self.interval.1, self.verdict
        );
        let _ = writeln!(out, "{:<14} {:>3} {:>3} {:>5} {:>24} {:>10} verdict", "condition", "m", "l", "index", "residual", "tolerance");
        for e in &self.entries {
            let _ = writeln!(
                out,
                "{:<14} {:>3} {:>3} {:>5} {:>24.16e} {:>10.1e} {}",
                e.condition.to_string(),
                e.m,
                e.l,
                e.index,
                e.residual,
                e.tolerance,
                e.verdict
            );
        }
        for v in &self.vanishing {
            let order = match v.order {
                VanishingOrder::Estimate(s) => format!("{s:.4}"),
                VanishingOrder::AtLeastWindowLimit => "below noise floor".to_string(),
            };
            let flag = if v.degenerate { " (degenerate)" } else { "" };
            let _ = writeln!(out, "vanishing order m={} l={}: {order}{flag}", v.m, v.l);
        }
        if !self.degenerate.is_empty() {
            let list: Vec<String> = self.degenerate.iter().map(|(m, l)| format!("({m},{l})")).collect();
            let _ = writeln!(out, "degenerate channels: {}", list.join(" "));
        }
        out
    }
}

/// Decomposes the data and runs every check up to degree `m_max`.
pub fn build_report(grid: &DataGrid, config: &CheckConfig) -> Result<RangeReport> {
    config.tolerances.validate()?;
    config.window.validate()?;
    if config.zeros == 0 {
        return Err(Error::Config("need at least one Bessel zero per channel".into()));
    }
    let n = grid.dimension();
    let tables: Vec<ZeroTable> = (0..=config.m_max)
        .map(|m| bessel_zeros(BesselOrder::for_harmonic(n, m), config.zeros))
        .collect::<Result<_>>()?;
    let lambda_max = tables.iter().map(|t| t.zeros()[config.zeros - 1]).fold(0.0, f64::max);
    check_t_resolution(grid.radial().len(), lambda_max)?;

    let coefs = decompose(grid, config.m_max)?;
    let specs: Vec<SpectralFunction> = coefs.iter().cloned().map(SpectralFunction::new).collect();

    let cond3: Vec<Condition3> = specs
        .par_iter()
        .map(|s| check_condition3(s, &tables[s.index().degree()], config.zeros))
        .collect::<Result<_>>()?;
    let sup_floor = DEGENERACY_RATIO * cond3.iter().fold(0.0f64, |m, c| m.max(c.sup));
    let cond3: Vec<Condition3> = cond3.into_iter().map(|c| c.with_floor(sup_floor)).collect();

    let norm_floor = DEGENERACY_RATIO * coefs.iter().fold(0.0f64, |m, c| m.max(c.norm()));
    let moments: Vec<Moments> = coefs
        .iter()
        .map(|c| check_moments_with_floor(c, c.index().degree().div_ceil(2), norm_floor))
        .collect();

    // condition 2 is normalized per channel so that a silent channel cannot
    // hide behind the energy of the others
    let eig_jobs: Vec<(usize, usize)> =
        (0..coefs.len()).flat_map(|c| (1..=config.zeros).map(move |k| (c, k))).collect();
    let cond2: Vec<(usize, usize, Condition2)> = eig_jobs
        .par_iter()
        .map(|&(c, k)| {
            let idx = coefs[c].index();
            let eig = Eigenfunction::from_zeros(idx, &tables[idx.degree()], k)?;
            let raw = check_condition2(grid, &eig)?.raw;
            let scale = eig.boundary_factor().abs() * cond3[c].normalizer;
            let residual = if scale > 0.0 { raw.abs() / scale } else { 0.0 };
            Ok((c, k, Condition2 { raw, residual, degenerate: cond3[c].degenerate }))
        })
        .collect::<Result<_>>()?;

    let tol = &config.tolerances;
    let mut entries = Vec::new();
    for (c, r) in cond3.iter().enumerate() {
        let (m, l) = (coefs[c].index().degree(), coefs[c].index().index());
        for (k, res) in r.residuals.iter().enumerate() {
            let tolerance = tol.get(Condition::BesselZeros);
            let verdict = Verdict::of(*res, tolerance, r.degenerate);
            entries.push(ReportEntry { condition: Condition::BesselZeros, m, l, index: k + 1, residual: *res, tolerance, verdict });
        }
    }
    for (c, k, r) in &cond2 {
        let idx = coefs[*c].index();
        let tolerance = tol.get(Condition::Eigenfunction);
        let verdict = Verdict::of(r.residual, tolerance, r.degenerate);
        entries.push(ReportEntry {
            condition: Condition::Eigenfunction,
            m: idx.degree(),
            l: idx.index(),
            index: *k,
            residual: r.residual,
            tolerance,
            verdict,
        });
    }
    for mo in &moments {
        for r in &mo.residuals {
            let tolerance = tol.get(Condition::Moment);
            let verdict = Verdict::of(r.residual, tolerance, mo.degenerate);
            entries.push(ReportEntry {
                condition: Condition::Moment,
                m: mo.idx.degree(),
                l: mo.idx.index(),
                index: r.k,
                residual: r.residual,
                tolerance,
                verdict,
            });
        }
    }

    let vanishing = specs
        .par_iter()
        .zip(&cond3)
        .map(|(s, c)| {
            Ok(VanishingEntry {
                m: s.index().degree(),
                l: s.index().index(),
                order: vanishing_order(s, &config.window)?,
                degenerate: c.degenerate,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let moment_polynomials = (0..config.m_max.div_ceil(2))
        .map(|k| moment_polynomial_check(grid, k, config.m_max, tol.get(Condition::Moment)))
        .collect::<Result<Vec<_>>>()?;

    let degenerate: Vec<(usize, usize)> = cond3
        .iter()
        .filter(|c| c.degenerate)
        .map(|c| (c.idx.degree(), c.idx.index()))
        .collect();
    let verdict = if entries.iter().any(|e| e.verdict == Verdict::Fail) {
        Verdict::Fail
    } else if degenerate.len() == cond3.len() {
        Verdict::Degenerate
    } else {
        Verdict::Pass
    };

    Ok(RangeReport {
        dimension: n.get(),
        m_max: config.m_max,
        zeros: config.zeros,
        interval: (0.0, lambda_max),
        entries,
        vanishing,
        moment_polynomials,
        degenerate,
        verdict,
    })
}
