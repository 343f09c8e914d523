//! Harmonic decomposition of sampled data, the Fourier–Bessel transform
//! `ĝ_{m,l}(λ) = ∫ g_{m,l}(t) j_{n/2−1}(λt) t^{n−1} dt` of each radial profile,
//! its even power series at `λ = 0`, and the ratio `ĝ_{m,l} / j_{m+n/2−1}`.

use rayon::prelude::*;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::harmonics::{eval_unchecked, harmonic_indices, Dimension, HarmonicIndex};
use crate::specfun::{bessel_zeros_below, j_norm_nonneg, BesselOrder};
use crate::transform::{DataGrid, RadialGrid};
use crate::Point;

/// Samples per oscillation period of the kernel `j_p(λt)` on `t ∈ [0, 2]`
/// required by [`check_t_resolution`].
pub const SAMPLES_PER_PERIOD: f64 = 10.0;
/// Default half-width of the excluded neighbourhood of each Bessel zero in
/// [`ratio_h`].
pub const RATIO_EXCLUSION: f64 = 0.1;

/// The radial profile `g_{m,l}(t) = ∫_S g(θ, t) Y^m_l(θ) dθ` on the grid radii.
#[derive(Debug, Clone, PartialEq)]
pub struct HarmonicCoefficient {
    idx: HarmonicIndex,
    radial: Arc<RadialGrid>,
    samples: Vec<f64>,
}

impl HarmonicCoefficient {
    pub fn new(idx: HarmonicIndex, radial: Arc<RadialGrid>, samples: Vec<f64>) -> Result<Self> {
        if samples.len() != radial.len() {
            return Err(Error::Validation(format!(
                "coefficient has {} samples for a radial grid of {}",
                samples.len(),
                radial.len()
            )));
        }
        Ok(Self { idx, radial, samples })
    }

    pub fn index(&self) -> HarmonicIndex {
        self.idx
    }

    pub fn dimension(&self) -> Dimension {
        self.idx.dimension()
    }

    pub fn radial(&self) -> &Arc<RadialGrid> {
        &self.radial
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    /// `(∫ g_{m,l}(t)² t^{n−1} dt)^{1/2}` by the grid rule.
    pub fn norm(&self) -> f64 {
        let power = self.dimension().get() as i32 - 1;
        self.radial
            .t()
            .iter()
            .zip(self.radial.weights())
            .zip(&self.samples)
            .map(|((t, w), g)| w * g * g * t.powi(power))
            .sum::<f64>()
            .sqrt()
    }

    /// `Σ_j w_j g_j kernel(t_j) t_j^{n−1}`.
    pub(crate) fn weighted_sum(&self, mut kernel: impl FnMut(f64) -> f64) -> f64 {
        let power = self.dimension().get() as i32 - 1;
        self.radial
            .t()
            .iter()
            .zip(self.radial.weights())
            .zip(&self.samples)
            .map(|((&t, w), g)| if *g == 0.0 { 0.0 } else { w * g * kernel(t) * t.powi(power) })
            .sum()
    }
}

/// Projects the data onto every harmonic of degree `≤ m_max` using the grid's
/// own sphere quadrature.
pub fn decompose(grid: &DataGrid, m_max: usize) -> Result<Vec<HarmonicCoefficient>> {
    let centers = grid.centers();
    if centers.resolution() < 4 * m_max {
        return Err(Error::Config(format!(
            "sphere resolution {} is too low for degree {m_max}; need at least {}",
            centers.resolution(),
            4 * m_max
        )));
    }
    let radial = grid.radial();
    harmonic_indices(grid.dimension(), m_max)
        .into_par_iter()
        .map(|idx| {
            let mut samples = vec![0.0; radial.len()];
            for (i, (x, w)) in centers.nodes().iter().zip(centers.weights()).enumerate() {
                let y = w * eval_unchecked(idx, x);
                for (acc, g) in samples.iter_mut().zip(grid.row(i)) {
                    *acc += y * g;
                }
            }
            HarmonicCoefficient::new(idx, radial.clone(), samples)
        })
        .collect()
}

/// `Σ_{m,l} g_{m,l}(t) Y^m_l(x)` for every grid radius, at a unit vector `x`.
pub fn reconstruct(coefs: &[HarmonicCoefficient], x: &Point) -> Vec<f64> {
    let len = coefs.first().map_or(0, |c| c.samples.len());
    let mut out = vec![0.0; len];
    for c in coefs {
        let y = eval_unchecked(c.idx, x);
        for (o, g) in out.iter_mut().zip(&c.samples) {
            *o += y * g;
        }
    }
    out
}

/// Order `n/2 − 1` of the normalized Bessel kernel.
pub fn kernel_order(n: Dimension) -> f64 {
    BesselOrder::kernel(n).value()
}

/// `ĝ_{m,l}(λ)` by the trapezoid rule on the coefficient's radial grid.
/// Depends on `|λ|` only.
pub fn fourier_bessel(coef: &HarmonicCoefficient, lambda: f64) -> f64 {
    let p = kernel_order(coef.dimension());
    let lambda = lambda.abs();
    if lambda == 0.0 {
        return coef.weighted_sum(|_| 1.0);
    }
    coef.weighted_sum(|t| j_norm_nonneg(p, lambda * t))
}

/// Requires `T ≥ 10 · Λ · 2 / (2π)` radial samples to resolve `j_p(λt)` for
/// `λ ≤ Λ` on `[0, 2]`.
pub fn check_t_resolution(t_points: usize, lambda_max: f64) -> Result<()> {
    let needed = required_t_points(lambda_max);
    if (t_points as f64) < needed {
        return Err(Error::Config(format!(
            "t resolution {t_points} cannot resolve lambda up to {lambda_max:.3}; need at least {}",
            needed.ceil()
        )));
    }
    Ok(())
}

pub fn required_t_points(lambda_max: f64) -> f64 {
    SAMPLES_PER_PERIOD * lambda_max * 2.0 / (2.0 * std::f64::consts::PI)
}

/// `ĝ_{m,l}` as a function of `λ`.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralFunction {
    coef: HarmonicCoefficient,
}

impl SpectralFunction {
    pub fn new(coef: HarmonicCoefficient) -> Self {
        Self { coef }
    }

    pub fn index(&self) -> HarmonicIndex {
        self.coef.idx
    }

    pub fn coefficient(&self) -> &HarmonicCoefficient {
        &self.coef
    }

    pub fn eval(&self, lambda: f64) -> f64 {
        fourier_bessel(&self.coef, lambda)
    }

    pub fn eval_many(&self, lambdas: &[f64]) -> Vec<f64> {
        lambdas.par_iter().map(|&l| self.eval(l)).collect()
    }

    /// `max |ĝ|` over a uniform sampling of `[0, lambda_max]` with spacing
    /// at most `step`, including both endpoints.
    pub fn sup_on(&self, lambda_max: f64, step: f64) -> f64 {
        let count = (lambda_max / step).ceil().max(1.0) as usize;
        let lambdas: Vec<f64> = (0..=count).map(|i| lambda_max * i as f64 / count as f64).collect();
        self.eval_many(&lambdas).into_iter().fold(0.0, |m, v| m.max(v.abs()))
    }
}

/// Coefficients `C_k` of `j_p(x) = Σ_k C_k x^{2k}`:
/// `C_0 = 1`, `C_k = −C_{k−1} / (4k(p+k))`.
pub fn series_coefficients(p: f64, count: usize) -> Vec<f64> {
    let mut out = Vec::with_capacity(count);
    let mut c = 1.0;
    for k in 0..count {
        if k > 0 {
            let kf = k as f64;
            c *= -0.25 / (kf * (p + kf));
        }
        out.push(c);
    }
    out
}

/// First `count` coefficients of `ĝ_{m,l}(λ) = Σ_k a_k λ^{2k}`, where
/// `a_k = C_k ∫ t^{2k+n−1} g_{m,l}(t) dt`.
pub fn taylor_coefficients(coef: &HarmonicCoefficient, count: usize) -> Result<Vec<f64>> {
    if count == 0 {
        return Err(Error::Config("need at least one Taylor coefficient".into()));
    }
    let c = series_coefficients(kernel_order(coef.dimension()), count);
    Ok(c
        .iter()
        .enumerate()
        .map(|(k, ck)| ck * coef.weighted_sum(|t| t.powi(2 * k as i32)))
        .collect())
}

/// Evaluates `Σ_k a_k λ^{2k}`.
pub fn taylor_eval(coefficients: &[f64], lambda: f64) -> f64 {
    let x = lambda * lambda;
    coefficients.iter().rev().fold(0.0, |acc, a| acc * x + a)
}

/// Samples of `H(λ) = ĝ_{m,l}(λ) / j_{m+n/2−1}(λ)`.
#[derive(Debug, Clone, PartialEq)]
pub struct RatioSamples {
    /// `(λ, H(λ))` for the accepted samples.
    pub accepted: Vec<(f64, f64)>,
    /// Requested samples that fell within the exclusion margin of a zero.
    pub rejected: Vec<f64>,
    pub margin: f64,
}

impl RatioSamples {
    pub fn max_abs(&self) -> f64 {
        self.accepted.iter().fold(0.0, |m, (_, h)| m.max(h.abs()))
    }
}

/// Ratio of the spectral function to the normalized Bessel function whose
/// zeros it must share. Samples within `margin` of a zero of `J_{m+n/2−1}`
/// are rejected and reported.
pub fn ratio_h(spec: &SpectralFunction, lambdas: &[f64], margin: f64) -> Result<RatioSamples> {
    if !(margin.is_finite() && margin >= 0.0) {
        return Err(Error::Config(format!("exclusion margin must be >= 0, got {margin}")));
    }
    let idx = spec.index();
    let nu = BesselOrder::for_harmonic(idx.dimension(), idx.degree());
    let top = lambdas.iter().fold(0.0f64, |m, l| m.max(l.abs()));
    let zeros = bessel_zeros_below(nu, top + margin + 1.0)?;
    let (ok, rejected): (Vec<f64>, Vec<f64>) = lambdas
        .iter()
        .copied()
        .partition(|l| zeros.zeros().iter().all(|z| (l.abs() - z).abs() > margin));
    let accepted = ok
        .par_iter()
        .map(|&l| (l, spec.eval(l) / j_norm_nonneg(nu.value(), l.abs())))
        .collect();
    Ok(RatioSamples { accepted, rejected, margin })
}

/// Least-squares slope of `log E(λ)` against `log(1 + λ)`, where
/// `E(λ) = max_{μ ≥ λ} |ĝ(μ)|` is the upper envelope over the samples.
/// Samples at or below `floor` are ignored. Returns `None` with fewer than
/// three usable samples.
pub fn envelope_decay_slope(spec: &SpectralFunction, lambdas: &[f64], floor: f64) -> Option<f64> {
    let mut sorted: Vec<f64> = lambdas.iter().map(|l| l.abs()).collect();
    sorted.sort_by(f64::total_cmp);
    let values = spec.eval_many(&sorted);
    let mut envelope = vec![0.0; values.len()];
    let mut running = 0.0f64;
    for i in (0..values.len()).rev() {
        running = running.max(values[i].abs());
        envelope[i] = running;
    }
    let points: Vec<(f64, f64)> = sorted
        .iter()
        .zip(&envelope)
        .filter(|(_, e)| **e > floor)
        .map(|(l, e)| ((1.0 + l).ln(), e.ln()))
        .collect();
    least_squares_slope(&points)
}

pub(crate) fn least_squares_slope(points: &[(f64, f64)]) -> Option<f64> {
    if points.len() < 3 {
        return None;
    }
    let n = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
    let my = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = points.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

/// `(Σ_{m,l} ‖g_{m,l}‖², ‖g‖²)`; the two agree up to harmonic truncation.
pub fn parseval(grid: &DataGrid, coefs: &[HarmonicCoefficient]) -> (f64, f64) {
    let coef_sum = coefs.iter().map(|c| c.norm().powi(2)).sum();
    (coef_sum, grid.norm().powi(2))
}

/// Flat `(m, l, t, value)` rows for export.
pub fn coefficient_rows(coefs: &[HarmonicCoefficient]) -> Vec<(usize, usize, f64, f64)> {
    coefs
        .iter()
        .flat_map(|c| {
            c.radial
                .t()
                .iter()
                .zip(&c.samples)
                .map(move |(&t, &g)| (c.idx.degree(), c.idx.index(), t, g))
        })
        .collect()
}

/// Flat `(m, l, λ, ĝ(λ))` rows for export.
pub fn spectral_rows(specs: &[SpectralFunction], lambdas: &[f64]) -> Vec<(usize, usize, f64, f64)> {
    specs
        .iter()
        .flat_map(|s| {
            let idx = s.index();
            lambdas
                .iter()
                .zip(s.eval_many(lambdas))
                .map(move |(&l, v)| (idx.degree(), idx.index(), l, v))
                .collect::<Vec<_>>()
        })
        .collect()
}
