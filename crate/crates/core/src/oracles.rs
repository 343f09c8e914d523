//! Numerical checks of the auxiliary identities behind the moment conditions,
//! run on explicit test functions and independent of the transform pipeline:
//!
//! - the plane-wave (Sonine) integral: the Fourier transform of
//!   `(1−|y|²)^{m−1}_+` in `ℝⁿ` is proportional to `j_{m+n/2−1}(|v|)`;
//! - `Δ|y|^{2k} = c_k |y|^{2k−2}` with `c_k = 2k(2k+n−2)`;
//! - the triangular map from radial moments `μ_k = ∫ |y|^{2k} h̃ dy` to
//!   `∫ Δ^j (1−|y|²)^{m−1} h̃ dy`;
//! - vanishing of the even derivatives at the origin of a radially lifted
//!   profile.

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};
use statrs::function::gamma::ln_gamma;
use std::f64::consts::PI;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::harmonics::Dimension;
use crate::quadrature::GaussLegendre;
use crate::range::Verdict;
use crate::spectral::HarmonicCoefficient;
use crate::specfun::j_norm_nonneg;
use crate::transform::bump_profile;

pub const SONINE_TOLERANCE: f64 = 1e-8;
pub const LAPLACIAN_TOLERANCE: f64 = 1e-4;
pub const TRIANGULAR_TOLERANCE: f64 = 1e-8;
pub const DERIVATIVE_TOLERANCE: f64 = 1e-6;

const SONINE_NODES: usize = 200;
const RADIAL_NODES: usize = 128;

/// `c_k = 2k(2k+n−2)`.
pub fn laplacian_constant(n: Dimension, k: usize) -> f64 {
    let k = k as f64;
    2.0 * k * (2.0 * k + n.get() as f64 - 2.0)
}

/// Surface area of `S^{n−1}`.
fn sphere_area(n: Dimension) -> f64 {
    match n {
        Dimension::Two => 2.0 * PI,
        Dimension::Three => 4.0 * PI,
    }
}

/// The even profile `h(t) = P(t²) exp(−1/(1−t²))` on `|t| < 1`, zero elsewhere,
/// and its radial lift `h̃(y) = h(|y|)`.
#[derive(Debug, Clone, PartialEq)]
pub struct TestProfile {
    /// Coefficients of `P` in powers of `t²`.
    poly: Vec<f64>,
}

impl TestProfile {
    pub fn bump() -> Self {
        Self { poly: vec![1.0] }
    }

    pub fn with_polynomial(poly: Vec<f64>) -> Result<Self> {
        if poly.is_empty() || poly.iter().any(|c| !c.is_finite()) {
            return Err(Error::Validation("profile polynomial needs finite coefficients".into()));
        }
        Ok(Self { poly })
    }

    /// A profile whose moments `μ_0, …, μ_{m−1}` vanish in `ℝⁿ`: `P` has degree
    /// `m` in `t²` with leading coefficient 1, and the lower coefficients solve
    /// the `m × m` moment system.
    pub fn null_moments(n: Dimension, m: usize) -> Result<Self> {
        if m == 0 {
            return Ok(Self::bump());
        }
        let rule = GaussLegendre::new(RADIAL_NODES);
        let power = n.get() as i32 - 1;
        // G[k][i] = ∫_0^1 r^{2(i+k)} b(r) r^{n−1} dr
        let gram = |k: usize, i: usize| {
            rule.integrate(0.0, 1.0, |r| r.powi(2 * (i + k) as i32 + power) * bump_profile(r * r))
        };
        let a = DMatrix::from_fn(m, m, gram);
        let rhs = DVector::from_fn(m, |k, _| -gram(k, m));
        let sol = a.lu().solve(&rhs).ok_or_else(|| Error::Numerical {
            index: m,
            message: "moment system for the null profile is singular".into(),
        })?;
        let mut poly: Vec<f64> = sol.iter().copied().collect();
        poly.push(1.0);
        Ok(Self { poly })
    }

    pub fn polynomial(&self) -> &[f64] {
        &self.poly
    }

    pub fn eval(&self, t: f64) -> f64 {
        let s = t * t;
        if s >= 1.0 {
            return 0.0;
        }
        self.poly.iter().rev().fold(0.0, |acc, c| acc * s + c) * bump_profile(s)
    }

    pub fn lift(&self, y: &[f64]) -> f64 {
        self.eval(y.iter().map(|c| c * c).sum::<f64>().sqrt())
    }

    /// `μ_k = ∫_{|y|<1} |y|^{2k} h̃(y) dy`.
    pub fn moment(&self, n: Dimension, k: usize) -> f64 {
        let power = (2 * k + n.get() - 1) as i32;
        sphere_area(n) * GaussLegendre::new(RADIAL_NODES).integrate(0.0, 1.0, |r| r.powi(power) * self.eval(r))
    }
}

/// Result of the plane-wave integral check for one `(m, n)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SonineCheck {
    pub m: usize,
    pub n: usize,
    pub order: f64,
    pub max_deviation: f64,
    pub worst_v: f64,
}

/// `∫_{−1}^{1} e^{−i v s} (1−s²)^{ν−1/2} ds`, normalized to 1 at `v = 0`, compared
/// with `j_ν(v)` for `ν = m + n/2 − 1`. Deviations are relative to
/// `max(|j_ν(v)|, min(1, E_ν(v)))` with `E_ν(v) = 2^ν Γ(ν+1) √(2/π) v^{−ν−1/2}`
/// the envelope of `j_ν`, so that sign changes of `j_ν` do not inflate them.
pub fn sonine_check(m: usize, n: Dimension, v_samples: &[f64]) -> Result<SonineCheck> {
    if m == 0 {
        return Err(Error::Domain("the plane-wave identity needs m >= 1".into()));
    }
    let nu = m as f64 + 0.5 * n.get() as f64 - 1.0;
    let rule = GaussLegendre::new(SONINE_NODES);
    // s = cos φ turns the weight into sin^{2ν} φ, a smooth periodic integrand
    let integral = |v: f64| rule.integrate(0.0, PI, |phi| (v * phi.cos()).cos() * phi.sin().powf(2.0 * nu));
    let at_zero = integral(0.0);
    let mut max_deviation = 0.0f64;
    let mut worst_v = 0.0;
    for &v in v_samples {
        let v = v.abs();
        let lhs = integral(v) / at_zero;
        let rhs = j_norm_nonneg(nu, v);
        let envelope = if v > 0.0 {
            (nu * 2f64.ln() + ln_gamma(nu + 1.0) - (nu + 0.5) * v.ln()).exp() * (2.0 / PI).sqrt()
        } else {
            1.0
        };
        let dev = (lhs - rhs).abs() / rhs.abs().max(envelope.min(1.0));
        if dev > max_deviation {
            max_deviation = dev;
            worst_v = v;
        }
    }
    Ok(SonineCheck { m, n: n.get(), order: nu, max_deviation, worst_v })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LaplacianCheck {
    pub n: usize,
    pub k: usize,
    pub constant: f64,
    /// `(h, max relative deviation)` per ladder step.
    pub deviations: Vec<(f64, f64)>,
    /// `log₁₀` ratio of successive deviations; about 2 for a second-order stencil.
    pub observed_orders: Vec<f64>,
}

/// Central differences of `|y|^{2k}` at the samples compared with
/// `c_k |y|^{2k−2}`, for each step in `ladder`.
pub fn laplacian_power_check(n: Dimension, k: usize, x_samples: &[[f64; 3]], ladder: &[f64]) -> Result<LaplacianCheck> {
    if k == 0 {
        return Err(Error::Domain("Laplacian power check needs k >= 1".into()));
    }
    let dims = n.get();
    let c = laplacian_constant(n, k);
    let f = |y: &[f64; 3]| y[..dims].iter().map(|v| v * v).sum::<f64>().powi(k as i32);
    let mut deviations = Vec::new();
    for &h in ladder {
        let mut worst = 0.0f64;
        for x in x_samples {
            let r2: f64 = x[..dims].iter().map(|v| v * v).sum();
            let exact = c * r2.powi(k as i32 - 1);
            let mut lap = 0.0;
            for d in 0..dims {
                let (mut p, mut q) = (*x, *x);
                p[d] += h;
                q[d] -= h;
                lap += (f(&p) - 2.0 * f(x) + f(&q)) / (h * h);
            }
            worst = worst.max((lap - exact).abs() / exact.abs().max(f64::MIN_POSITIVE));
        }
        deviations.push((h, worst));
    }
    let observed_orders = deviations
        .windows(2)
        .map(|w| (w[0].1 / w[1].1).log10() / (w[0].0 / w[1].0).log10())
        .collect();
    Ok(LaplacianCheck { n: dims, k, constant: c, deviations, observed_orders })
}

/// Coefficients `[a_0, a_1, …]` of a polynomial `Σ a_i r^i` in the radius.
type RadialPoly = Vec<f64>;

/// `f'' + (n−1)/r f'` on coefficient vectors; exact for polynomials whose odd
/// low-order terms vanish, which holds for even polynomials.
fn radial_laplacian(p: &RadialPoly, n: Dimension) -> RadialPoly {
    let nm1 = n.get() as f64 - 1.0;
    let mut out = vec![0.0; p.len().saturating_sub(2).max(1)];
    for (i, &a) in p.iter().enumerate().skip(2) {
        let i_f = i as f64;
        out[i - 2] += a * (i_f * (i_f - 1.0) + nm1 * i_f);
    }
    out
}

fn binomial(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TriangularCheck {
    pub m: usize,
    pub n: usize,
    /// Rows indexed by `r = m−1−j`, columns by moment order `k`; lower triangular.
    pub matrix: Vec<Vec<f64>>,
    pub triangular: bool,
    pub min_abs_diagonal: f64,
    /// Max over rows of `|Σ_k A_{jk} μ_k − ∫ Δ^j(1−|y|²)^{m−1} h̃| / scale_j`.
    pub max_deviation: f64,
    /// `∫ Δ^j (1−|y|²)^{m−1} h̃ dy` by direct quadrature, `j = 0..m`.
    pub direct: Vec<f64>,
    /// `∫ |Δ^j (1−|y|²)^{m−1}| |h̃| dy`, the scale of each row.
    pub scales: Vec<f64>,
}

/// Builds the moment map from binomials and the constants `c_k`, checks its
/// triangular shape, and compares it against direct quadrature of
/// `Δ^j (1−|y|²)^{m−1}` obtained by differentiating coefficient vectors.
pub fn triangular_system_check(m: usize, n: Dimension, profile: &TestProfile) -> Result<TriangularCheck> {
    triangular_system_check_with(m, n, profile, &|k| laplacian_constant(n, k))
}

/// Same as [`triangular_system_check`] with a caller-supplied `c_k`.
pub fn triangular_system_check_with(
    m: usize,
    n: Dimension,
    profile: &TestProfile,
    ck: &dyn Fn(usize) -> f64,
) -> Result<TriangularCheck> {
    if m == 0 {
        return Err(Error::Domain("triangular system needs m >= 1".into()));
    }
    // Δ^j r^{2i} = c_i c_{i−1} … c_{i−j+1} r^{2(i−j)}
    let falling = |i: usize, j: usize| (0..j).map(|s| if s > i { 0.0 } else { ck(i - s) }).product::<f64>();
    let mut a = vec![vec![0.0; m]; m];
    for (j, row) in a.iter_mut().enumerate() {
        for (k, entry) in row.iter_mut().enumerate() {
            let i = j + k;
            if i < m && i >= j {
                let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
                *entry = binomial(m - 1, i) * sign * falling(i, j);
            }
        }
    }
    let matrix: Vec<Vec<f64>> = (0..m).map(|r| a[m - 1 - r].clone()).collect();
    let triangular = matrix.iter().enumerate().all(|(r, row)| row.iter().skip(r + 1).all(|&v| v == 0.0));
    let min_abs_diagonal = (0..m).map(|r| matrix[r][r].abs()).fold(f64::INFINITY, f64::min);

    let moments: Vec<f64> = (0..m).map(|k| profile.moment(n, k)).collect();

    let mut base: RadialPoly = vec![0.0; 2 * (m - 1) + 1];
    for i in 0..m {
        base[2 * i] = binomial(m - 1, i) * if i % 2 == 0 { 1.0 } else { -1.0 };
    }
    let rule = GaussLegendre::new(RADIAL_NODES);
    let power = n.get() as i32 - 1;
    let area = sphere_area(n);
    let eval_poly = |p: &RadialPoly, r: f64| p.iter().rev().fold(0.0, |acc, c| acc * r + c);
    let mut current = base;
    let mut direct = Vec::with_capacity(m);
    let mut scales = Vec::with_capacity(m);
    let mut max_deviation = 0.0f64;
    for row in &a {
        let q = area * rule.integrate(0.0, 1.0, |r| eval_poly(&current, r) * profile.eval(r) * r.powi(power));
        let scale = area * rule.integrate(0.0, 1.0, |r| (eval_poly(&current, r) * profile.eval(r)).abs() * r.powi(power));
        let mapped: f64 = row.iter().zip(&moments).map(|(c, mu)| c * mu).sum();
        if scale > 0.0 {
            max_deviation = max_deviation.max((mapped - q).abs() / scale);
        }
        direct.push(q);
        scales.push(scale);
        current = radial_laplacian(&current, n);
    }
    Ok(TriangularCheck { m, n: n.get(), matrix, triangular, min_abs_diagonal, max_deviation, direct, scales })
}

/// `∫_{S^{n−1}} θ^β dσ = 2 Π Γ((β_i+1)/2) / Γ((|β|+n)/2)` for even `β_i`, else 0.
fn sphere_monomial(beta: &[usize]) -> f64 {
    if beta.iter().any(|b| b % 2 == 1) {
        return 0.0;
    }
    let total: usize = beta.iter().sum();
    let log = beta.iter().map(|&b| ln_gamma((b as f64 + 1.0) / 2.0)).sum::<f64>()
        - ln_gamma((total + beta.len()) as f64 / 2.0);
    2.0 * log.exp()
}

/// Multivariate polynomial as `(exponents, coefficient)` terms.
type Poly = Vec<(Vec<usize>, f64)>;

fn weight_polynomial(m: usize, dims: usize) -> Poly {
    // (1 − Σ y_i²)^{m−1} expanded by the multinomial theorem
    let mut out: Poly = vec![(vec![0; dims], 1.0)];
    for _ in 0..m.saturating_sub(1) {
        let mut next: Poly = Vec::new();
        for (e, c) in &out {
            next.push((e.clone(), *c));
            for d in 0..dims {
                let mut e2 = e.clone();
                e2[d] += 2;
                next.push((e2, -c));
            }
        }
        next.sort_by(|a, b| a.0.cmp(&b.0));
        out = next.into_iter().fold(Vec::<(Vec<usize>, f64)>::new(), |mut acc, (e, c)| {
            match acc.last_mut() {
                Some(last) if last.0 == e => last.1 += c,
                _ => acc.push((e, c)),
            }
            acc
        });
    }
    out
}

fn differentiate(p: &Poly, alpha: &[usize]) -> Poly {
    p.iter()
        .filter_map(|(e, c)| {
            let mut coef = *c;
            let mut e2 = e.clone();
            for (d, &a) in alpha.iter().enumerate() {
                if e2[d] < a {
                    return None;
                }
                for s in 0..a {
                    coef *= (e2[d] - s) as f64;
                }
                e2[d] -= a;
            }
            Some((e2, coef))
        })
        .collect()
}

/// Max over multi-indices `α` with even entries and `|α| ≤ 2(m−1)` of
/// `|∫ (1−|y|²)^{m−1} D^α h̃ dy|`, moved onto the weight by integration by
/// parts and integrated exactly in the angles. Also returns the largest
/// absolute-value scale of the same integrals.
pub fn derivative_chain_check(m: usize, n: Dimension, profile: &TestProfile) -> Result<(f64, f64)> {
    if m == 0 {
        return Err(Error::Domain("derivative chain needs m >= 1".into()));
    }
    let dims = n.get();
    let weight = weight_polynomial(m, dims);
    let rule = GaussLegendre::new(RADIAL_NODES);
    let radial = |degree: usize| rule.integrate(0.0, 1.0, |r| r.powi((degree + dims - 1) as i32) * profile.eval(r));
    let radial_abs =
        |degree: usize| rule.integrate(0.0, 1.0, |r| (r.powi((degree + dims - 1) as i32) * profile.eval(r)).abs());
    let half_max = m - 1;
    let mut alphas: Vec<Vec<usize>> = vec![vec![0; dims]];
    for _ in 0..half_max {
        let mut next = alphas.clone();
        for a in &alphas {
            for d in 0..dims {
                let mut b = a.clone();
                b[d] += 2;
                if b.iter().sum::<usize>() <= 2 * half_max && !next.contains(&b) {
                    next.push(b);
                }
            }
        }
        alphas = next;
    }
    let mut worst = 0.0f64;
    let mut scale = 0.0f64;
    for alpha in &alphas {
        let d = differentiate(&weight, alpha);
        let mut value = 0.0;
        let mut abs = 0.0;
        for (e, c) in &d {
            let deg: usize = e.iter().sum();
            let ang = sphere_monomial(e);
            value += c * ang * radial(deg);
            abs += (c * ang).abs() * radial_abs(deg);
        }
        worst = worst.max(value.abs());
        scale = scale.max(abs);
    }
    Ok((worst, scale))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DerivativeCheck {
    pub m: usize,
    pub l: usize,
    pub h: f64,
    /// `(derivative order, |D^order g̃(0)| / max |g_{m,l}|)` for orders 0, 2, 4.
    pub values: Vec<(usize, f64)>,
    pub max_deviation: f64,
}

/// Even derivatives at the origin of the radial lift `v ↦ g_{m,l}(|v|)`,
/// by central differences of step `h` on the even extension. Off-grid values
/// come from local cubic interpolation of the samples.
pub fn derivative_vanishing_check(coef: &HarmonicCoefficient, h: f64) -> Result<DerivativeCheck> {
    let radial = coef.radial();
    if !(h > 0.0) || 2.0 * h > radial.t()[radial.len() - 1] {
        return Err(Error::Config(format!("derivative step {h} outside the radial grid")));
    }
    let samples = coef.samples();
    let step = radial.step();
    let g = |t: f64| interpolate(samples, step, t.abs());
    let d0 = g(0.0);
    let d2 = (g(h) - 2.0 * d0 + g(-h)) / (h * h);
    let d4 = (g(2.0 * h) - 4.0 * g(h) + 6.0 * d0 - 4.0 * g(-h) + g(-2.0 * h)) / h.powi(4);
    let sup = samples.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let rel = |v: f64| if sup > 0.0 { v.abs() / sup } else { 0.0 };
    let values = vec![(0, rel(d0)), (2, rel(d2)), (4, rel(d4))];
    let max_deviation = values.iter().fold(0.0f64, |m, v| m.max(v.1));
    let idx = coef.index();
    Ok(DerivativeCheck { m: idx.degree(), l: idx.index(), h, values, max_deviation })
}

fn interpolate(samples: &[f64], step: f64, t: f64) -> f64 {
    let pos = t / step;
    let i = pos.floor() as isize;
    if (pos - i as f64).abs() < 1e-12 {
        return samples[i as usize];
    }
    let last = samples.len() as isize - 1;
    let start = (i - 1).clamp(0, last - 3);
    let nodes: Vec<isize> = (start..start + 4).collect();
    nodes
        .iter()
        .map(|&a| {
            let basis: f64 = nodes
                .iter()
                .filter(|&&b| b != a)
                .map(|&b| (pos - b as f64) / (a - b) as f64)
                .product();
            basis * samples[a as usize]
        })
        .sum()
}

/// Parameters of the lemma suite.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct LemmaConfig {
    /// Degrees `m` to test; empty gives an empty report.
    pub degrees: Vec<usize>,
    pub dimensions: Vec<usize>,
    pub v_max: f64,
    pub v_samples: usize,
    /// Powers `k` for the Laplacian check.
    pub powers: Vec<usize>,
    pub ladder: Vec<f64>,
    /// Multiplies every `c_k` used to build the triangular map (test hook).
    pub mutate_ck: Option<f64>,
}

impl Default for LemmaConfig {
    fn default() -> Self {
        Self {
            degrees: (1..=5).collect(),
            dimensions: vec![2, 3],
            v_max: 30.0,
            v_samples: 301,
            powers: (1..=5).collect(),
            ladder: vec![1e-1, 1e-2, 1e-3],
            mutate_ck: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LemmaEntry {
    pub lemma: String,
    pub n: usize,
    pub parameter: usize,
    pub deviation: f64,
    pub tolerance: f64,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LemmaReport {
    pub entries: Vec<LemmaEntry>,
    pub verdict: Verdict,
}

impl LemmaReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{:<22} {:>2} {:>3} {:>24} {:>10} verdict", "lemma", "n", "p", "deviation", "tolerance");
        for e in &self.entries {
            let _ = writeln!(
                out,
                "{:<22} {:>2} {:>3} {:>24.16e} {:>10.1e} {}",
                e.lemma, e.n, e.parameter, e.deviation, e.tolerance, e.verdict
            );
        }
        let _ = writeln!(out, "overall: {}", self.verdict);
        out
    }
}

fn entry(lemma: &str, n: Dimension, parameter: usize, deviation: f64, tolerance: f64) -> LemmaEntry {
    let verdict = if deviation < tolerance { Verdict::Pass } else { Verdict::Fail };
    LemmaEntry { lemma: lemma.into(), n: n.get(), parameter, deviation, tolerance, verdict }
}

/// Runs every oracle for each configured dimension and degree.
pub fn run_lemma_suite(config: &LemmaConfig) -> Result<LemmaReport> {
    if config.v_samples == 0 || !(config.v_max > 0.0) || config.ladder.is_empty() {
        return Err(Error::Config("lemma suite needs v_samples > 0, v_max > 0 and a step ladder".into()));
    }
    let dims: Vec<Dimension> = config.dimensions.iter().map(|&n| Dimension::new(n)).collect::<Result<_>>()?;
    let vs: Vec<f64> = (0..=config.v_samples).map(|i| config.v_max * i as f64 / config.v_samples as f64).collect();
    let points = [[0.3, 0.4, 0.5], [0.7, -0.2, 0.1], [-0.5, 0.6, -0.3]];
    let mut entries = Vec::new();
    for &n in &dims {
        for &m in config.degrees.iter().filter(|&&m| m >= 1) {
            let s = sonine_check(m, n, &vs)?;
            entries.push(entry("sonine", n, m, s.max_deviation, SONINE_TOLERANCE));
        }
        if !config.degrees.is_empty() {
            for &k in config.powers.iter().filter(|&&k| k >= 1) {
                let pts: Vec<[f64; 3]> = points
                    .iter()
                    .map(|p| if n == Dimension::Two { [p[0], p[1], 0.0] } else { *p })
                    .collect();
                let l = laplacian_power_check(n, k, &pts, &config.ladder)?;
                let dev = l.deviations.last().map_or(0.0, |d| d.1);
                entries.push(entry("laplacian_power", n, k, dev, LAPLACIAN_TOLERANCE));
            }
        }
        for &m in config.degrees.iter().filter(|&&m| m >= 1) {
            let factor = config.mutate_ck.unwrap_or(1.0);
            let ck = move |k: usize| factor * laplacian_constant(n, k);
            let t = triangular_system_check_with(m, n, &TestProfile::bump(), &ck)?;
            let shape_ok = t.triangular && t.min_abs_diagonal > 0.0;
            let dev = if shape_ok { t.max_deviation } else { f64::INFINITY };
            entries.push(entry("triangular_system", n, m, dev, TRIANGULAR_TOLERANCE));

            let null = TestProfile::null_moments(n, m)?;
            let tn = triangular_system_check_with(m, n, &null, &ck)?;
            let null_dev = tn.direct.iter().zip(&tn.scales).fold(0.0f64, |acc, (q, s)| acc.max(q.abs() / s));
            entries.push(entry("null_profile_rows", n, m, null_dev.max(tn.max_deviation), TRIANGULAR_TOLERANCE));

            let (worst, scale) = derivative_chain_check(m, n, &null)?;
            entries.push(entry("derivative_chain", n, m, worst / scale, TRIANGULAR_TOLERANCE));
        }
    }
    let verdict = if entries.iter().all(|e| e.verdict == Verdict::Pass) { Verdict::Pass } else { Verdict::Fail };
    Ok(LemmaReport { entries, verdict })
}
