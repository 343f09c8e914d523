//! Smooth phantoms supported in the unit ball, the spherical mean
//! `g(x, t) = ∫_{|θ|=1} f(x + tθ) dθ` (normalized measure), its restriction to
//! centers on the unit sphere, and a finite-difference check of the
//! Darboux equation `u_tt + (n−1)/t u_t = Δ_x u`.

use rayon::prelude::*;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::harmonics::{eval_unchecked, sphere_quadrature, Dimension, HarmonicIndex, SphereQuadrature};
use crate::quadrature::{trapezoid, GaussLegendre};
use crate::Point;

/// `exp(−1/(1−u²))` for `u² < 1`, zero otherwise; takes `u²`.
#[inline]
pub fn bump_profile(u2: f64) -> f64 {
    if u2 < 1.0 {
        (-1.0 / (1.0 - u2)).exp()
    } else {
        0.0
    }
}

/// Radial profile `a · exp(−1/(1−((s−c)/w)²))` supported in `[c−w, c+w]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShellProfile {
    pub center: f64,
    pub half_width: f64,
    pub amplitude: f64,
}

impl ShellProfile {
    pub fn eval(&self, s: f64) -> f64 {
        let u = (s - self.center) / self.half_width;
        self.amplitude * bump_profile(u * u)
    }

    pub fn outer_radius(&self) -> f64 {
        self.center + self.half_width
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum PhantomTerm {
    /// `a · exp(−1/(1 − |x−c|²/r²))` inside the ball `|x − c| < r`.
    Bump { center: Point, radius: f64, amplitude: f64 },
    /// `φ(|x|) Y^m_l(x/|x|)` with a shell profile `φ` kept away from the origin.
    Separable { profile: ShellProfile, harmonic: HarmonicIndex },
}

impl PhantomTerm {
    fn validate(&self, n: Dimension) -> Result<()> {
        match self {
            PhantomTerm::Bump { center, radius, amplitude } => {
                if !(radius.is_finite() && *radius > 0.0) || !amplitude.is_finite() {
                    return Err(Error::Validation(format!("bump needs radius > 0 and finite amplitude, got r={radius}")));
                }
                if n == Dimension::Two && center[2] != 0.0 {
                    return Err(Error::Validation("planar bump center must have zero third component".into()));
                }
                let c = norm(center);
                if c + radius > 1.0 {
                    return Err(Error::Validation(format!(
                        "bump support |c| + r = {} leaves the unit ball",
                        c + radius
                    )));
                }
            }
            PhantomTerm::Separable { profile, harmonic } => {
                let ShellProfile { center, half_width, amplitude } = *profile;
                if !(half_width.is_finite() && half_width > 0.0) || !amplitude.is_finite() {
                    return Err(Error::Validation("shell profile needs half_width > 0 and finite amplitude".into()));
                }
                if center < half_width {
                    return Err(Error::Validation(format!(
                        "shell profile [{}, {}] must not reach past the origin",
                        center - half_width,
                        center + half_width
                    )));
                }
                if profile.outer_radius() > 1.0 {
                    return Err(Error::Validation(format!(
                        "shell profile radius {} leaves the unit ball",
                        profile.outer_radius()
                    )));
                }
                if harmonic.dimension() != n {
                    return Err(Error::Validation("separable term harmonic has the wrong dimension".into()));
                }
            }
        }
        Ok(())
    }

    fn eval(&self, x: &Point) -> f64 {
        match self {
            PhantomTerm::Bump { center, radius, amplitude } => {
                let d2 = dist2(x, center);
                amplitude * bump_profile(d2 / (radius * radius))
            }
            PhantomTerm::Separable { profile, harmonic } => {
                let s = norm(x);
                let v = profile.eval(s);
                if v == 0.0 {
                    return 0.0;
                }
                eval_unchecked(*harmonic, &[x[0] / s, x[1] / s, x[2] / s]) * v
            }
        }
    }

    fn support_radius(&self) -> f64 {
        match self {
            PhantomTerm::Bump { center, radius, .. } => norm(center) + radius,
            PhantomTerm::Separable { profile, .. } => profile.outer_radius(),
        }
    }

    /// Average over the sphere of radius `t` about `x`.
    fn mean(&self, x: &Point, t: f64, rule: &MeanRule) -> f64 {
        match rule {
            MeanRule::Directions(dirs) => self.mean_directions(x, t, dirs),
            MeanRule::Axial(axial) => self.mean_axial(x, t, axial),
        }
    }

    fn mean_directions(&self, x: &Point, t: f64, dirs: &SphereQuadrature) -> f64 {
        match self {
            PhantomTerm::Bump { center, radius, amplitude } => {
                let delta = [x[0] - center[0], x[1] - center[1], x[2] - center[2]];
                let d2 = delta[0] * delta[0] + delta[1] * delta[1] + delta[2] * delta[2];
                let d = d2.sqrt();
                if t >= d + radius || t <= d - radius {
                    return 0.0;
                }
                let inv_r2 = 1.0 / (radius * radius);
                let base = d2 + t * t;
                let mut acc = 0.0;
                for (theta, &w) in dirs.nodes().iter().zip(dirs.weights()) {
                    let dot = delta[0] * theta[0] + delta[1] * theta[1] + delta[2] * theta[2];
                    let u2 = (base + 2.0 * t * dot) * inv_r2;
                    if u2 < 1.0 {
                        acc += w * (-1.0 / (1.0 - u2)).exp();
                    }
                }
                amplitude * acc
            }
            PhantomTerm::Separable { profile, .. } => {
                let s = norm(x);
                let (lo, hi) = (profile.center - profile.half_width, profile.outer_radius());
                if t >= s + hi || t + hi <= s || (s + t <= lo && t <= s) {
                    return 0.0;
                }
                dirs.nodes()
                    .iter()
                    .zip(dirs.weights())
                    .map(|(theta, &w)| {
                        let y = [x[0] + t * theta[0], x[1] + t * theta[1], x[2] + t * theta[2]];
                        w * self.eval(&y)
                    })
                    .sum()
            }
        }
    }

    fn mean_axial(&self, x: &Point, t: f64, axial: &AxialRule) -> f64 {
        match self {
            PhantomTerm::Bump { center, radius, amplitude } => {
                let d2 = dist2(x, center);
                let d = d2.sqrt();
                if t >= d + radius || t <= d - radius {
                    return 0.0;
                }
                if d == 0.0 {
                    return amplitude * bump_profile(t * t / (radius * radius));
                }
                // |x + tθ − c|² = d² + t² + 2tdz with z the cosine to the axis
                let inv_r2 = 1.0 / (radius * radius);
                let z_hi = ((radius * radius - d2 - t * t) / (2.0 * t * d)).min(1.0);
                amplitude * axial.average(-1.0, z_hi, |z| bump_profile((d2 + t * t + 2.0 * t * d * z) * inv_r2))
            }
            PhantomTerm::Separable { profile, harmonic } => {
                let rho = norm(x);
                let (lo, hi) = (profile.center - profile.half_width, profile.outer_radius());
                if t >= rho + hi || t + hi <= rho || (rho + t <= lo && t <= rho) {
                    return 0.0;
                }
                let m = harmonic.degree();
                if rho == 0.0 {
                    return if m == 0 { profile.eval(t) * eval_unchecked(*harmonic, &[1.0, 0.0, 0.0]) } else { 0.0 };
                }
                // rotation invariance: the mean is Y(x/|x|) times the mean of
                // φ(|y|) against the zonal harmonic of degree m about x/|x|
                let base = rho * rho + t * t;
                let z_lo = ((lo * lo - base) / (2.0 * rho * t)).max(-1.0);
                let z_hi = ((hi * hi - base) / (2.0 * rho * t)).min(1.0);
                let n = axial.n;
                let a = axial.average(z_lo, z_hi, |z| {
                    let s = (base + 2.0 * rho * t * z).max(0.0).sqrt();
                    if s == 0.0 {
                        return 0.0;
                    }
                    let c = ((rho + t * z) / s).clamp(-1.0, 1.0);
                    profile.eval(s) * zonal(n, m, c)
                });
                a * eval_unchecked(*harmonic, &[x[0] / rho, x[1] / rho, x[2] / rho])
            }
        }
    }
}

/// Zonal harmonic of degree `m` with value 1 at the pole: `T_m` in the plane,
/// `P_m` in space.
fn zonal(n: Dimension, m: usize, c: f64) -> f64 {
    let (mut prev, mut cur) = (1.0, c);
    if m == 0 {
        return prev;
    }
    for k in 1..m {
        let next = match n {
            Dimension::Two => 2.0 * c * cur - prev,
            Dimension::Three => ((2 * k + 1) as f64 * c * cur - k as f64 * prev) / (k + 1) as f64,
        };
        prev = cur;
        cur = next;
    }
    cur
}

/// Gauss–Legendre rule for sphere averages of functions that depend only on
/// the cosine `z` between the direction and a fixed axis.
#[derive(Debug, Clone, PartialEq)]
pub struct AxialRule {
    n: Dimension,
    rule: GaussLegendre,
}

impl AxialRule {
    pub fn new(n: Dimension, nodes: usize) -> Result<Self> {
        if nodes < 2 {
            return Err(Error::Config(format!("axial rule needs at least 2 nodes, got {nodes}")));
        }
        Ok(Self { n, rule: GaussLegendre::new(nodes) })
    }

    pub fn dimension(&self) -> Dimension {
        self.n
    }

    pub fn nodes(&self) -> usize {
        self.rule.len()
    }

    /// Contribution of `z ∈ [z_lo, z_hi]` to the normalized sphere average of
    /// `h(z)`. In the plane the integral runs over the angle `acos z` so the
    /// integrand stays smooth at the poles.
    fn average(&self, z_lo: f64, z_hi: f64, h: impl Fn(f64) -> f64) -> f64 {
        if z_hi <= z_lo {
            return 0.0;
        }
        match self.n {
            Dimension::Two => {
                let (a, b) = (z_hi.clamp(-1.0, 1.0).acos(), z_lo.clamp(-1.0, 1.0).acos());
                self.rule.integrate(a, b, |phi| h(phi.cos())) / std::f64::consts::PI
            }
            Dimension::Three => 0.5 * self.rule.integrate(z_lo, z_hi, h),
        }
    }
}

/// How sphere averages are discretized.
#[derive(Debug, Clone, PartialEq)]
pub enum MeanRule {
    /// Direct quadrature over the sphere of directions.
    Directions(SphereQuadrature),
    /// Each term is averaged through its symmetry axis: bumps are radial about
    /// their center, separable terms reduce to a zonal integral about `x`.
    Axial(AxialRule),
}

impl MeanRule {
    pub fn directions(n: Dimension, resolution: usize) -> Result<Self> {
        Ok(MeanRule::Directions(sphere_quadrature(n, resolution)?))
    }

    pub fn axial(n: Dimension, nodes: usize) -> Result<Self> {
        Ok(MeanRule::Axial(AxialRule::new(n, nodes)?))
    }

    pub fn dimension(&self) -> Dimension {
        match self {
            MeanRule::Directions(q) => q.dimension(),
            MeanRule::Axial(a) => a.n,
        }
    }
}

impl From<SphereQuadrature> for MeanRule {
    fn from(q: SphereQuadrature) -> Self {
        MeanRule::Directions(q)
    }
}

impl From<AxialRule> for MeanRule {
    fn from(a: AxialRule) -> Self {
        MeanRule::Axial(a)
    }
}

/// A smooth function supported in the closed unit ball, as a sum of terms.
#[derive(Debug, Clone, PartialEq)]
pub struct Phantom {
    n: Dimension,
    terms: Vec<PhantomTerm>,
}

impl Phantom {
    pub fn new(n: Dimension, terms: Vec<PhantomTerm>) -> Result<Self> {
        for term in &terms {
            term.validate(n)?;
        }
        Ok(Self { n, terms })
    }

    pub fn zero(n: Dimension) -> Self {
        Self { n, terms: Vec::new() }
    }

    pub fn bump(n: Dimension, center: Point, radius: f64, amplitude: f64) -> Result<Self> {
        Self::new(n, vec![PhantomTerm::Bump { center, radius, amplitude }])
    }

    pub fn dimension(&self) -> Dimension {
        self.n
    }

    pub fn terms(&self) -> &[PhantomTerm] {
        &self.terms
    }

    /// Sum of two phantoms of the same dimension.
    pub fn plus(&self, other: &Phantom) -> Result<Phantom> {
        if self.n != other.n {
            return Err(Error::Validation("cannot add phantoms of different dimensions".into()));
        }
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Ok(Phantom { n: self.n, terms })
    }

    pub fn validate(&self) -> Result<()> {
        self.terms.iter().try_for_each(|t| t.validate(self.n))
    }

    /// Radius of the smallest origin-centered ball containing the support.
    pub fn support_radius(&self) -> f64 {
        self.terms.iter().map(PhantomTerm::support_radius).fold(0.0, f64::max)
    }

    pub fn eval(&self, x: &Point) -> f64 {
        self.terms.iter().map(|t| t.eval(x)).sum()
    }
}

pub fn eval_phantom(f: &Phantom, x: &Point) -> f64 {
    f.eval(x)
}

/// Quadrature approximation of the normalized average of `f` over the sphere
/// of radius `t` about `x`.
pub fn spherical_mean(f: &Phantom, x: &Point, t: f64, rule: &MeanRule) -> Result<f64> {
    if !(t.is_finite() && t >= 0.0) {
        return Err(Error::Domain(format!("sphere radius must be >= 0, got {t}")));
    }
    if rule.dimension() != f.n {
        return Err(Error::Config("mean rule dimension does not match the phantom".into()));
    }
    check_planar(f.n, x)?;
    Ok(mean_unchecked(f, x, t, rule))
}

fn mean_unchecked(f: &Phantom, x: &Point, t: f64, rule: &MeanRule) -> f64 {
    if t == 0.0 {
        return f.eval(x);
    }
    f.terms.iter().map(|term| term.mean(x, t, rule)).sum()
}

/// Uniform radial grid on `[0, 2]` with trapezoid weights.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialGrid {
    t: Vec<f64>,
    weights: Vec<f64>,
}

impl RadialGrid {
    /// `points` nodes including both endpoints.
    pub fn uniform(points: usize) -> Result<Self> {
        if points < 2 {
            return Err(Error::Config(format!("radial grid needs at least 2 points, got {points}")));
        }
        let (t, weights) = trapezoid(points, 0.0, 2.0);
        Ok(Self { t, weights })
    }

    pub fn t(&self) -> &[f64] {
        &self.t
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.t.len()
    }

    pub fn is_empty(&self) -> bool {
        self.t.is_empty()
    }

    pub fn step(&self) -> f64 {
        2.0 / (self.t.len() - 1) as f64
    }
}

/// Samples `g[i, j] = g(x_i, t_j)` with sphere nodes `x_i` and radii `t_j`.
#[derive(Debug, Clone, PartialEq)]
pub struct DataGrid {
    centers: SphereQuadrature,
    radial: Arc<RadialGrid>,
    values: Vec<f64>,
}

impl DataGrid {
    pub fn new(centers: SphereQuadrature, radial: Arc<RadialGrid>, values: Vec<f64>) -> Result<Self> {
        if values.len() != centers.len() * radial.len() {
            return Err(Error::Validation(format!(
                "data grid has {} values, expected {} x {}",
                values.len(),
                centers.len(),
                radial.len()
            )));
        }
        Ok(Self { centers, radial, values })
    }

    pub fn zeros(centers: SphereQuadrature, radial: Arc<RadialGrid>) -> Self {
        let values = vec![0.0; centers.len() * radial.len()];
        Self { centers, radial, values }
    }

    pub fn dimension(&self) -> Dimension {
        self.centers.dimension()
    }

    pub fn centers(&self) -> &SphereQuadrature {
        &self.centers
    }

    pub fn radial(&self) -> &Arc<RadialGrid> {
        &self.radial
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn value(&self, node: usize, tj: usize) -> f64 {
        self.values[node * self.radial.len() + tj]
    }

    /// All radii for one sphere node.
    pub fn row(&self, node: usize) -> &[f64] {
        let len = self.radial.len();
        &self.values[node * len..(node + 1) * len]
    }

    pub fn row_mut(&mut self, node: usize) -> &mut [f64] {
        let len = self.radial.len();
        &mut self.values[node * len..(node + 1) * len]
    }

    /// `self + scale · other` on identical grids.
    pub fn add_scaled(&self, other: &DataGrid, scale: f64) -> Result<DataGrid> {
        if self.centers != other.centers || self.radial != other.radial {
            return Err(Error::Validation("data grids are not defined on the same nodes".into()));
        }
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a + scale * b).collect();
        Ok(DataGrid { centers: self.centers.clone(), radial: self.radial.clone(), values })
    }

    /// `(Σ_i w_i Σ_j w_j g² t_j^{n−1})^{1/2}`.
    pub fn norm(&self) -> f64 {
        let power = self.dimension().get() as i32 - 1;
        let radial = &self.radial;
        self.centers
            .weights()
            .iter()
            .enumerate()
            .map(|(i, &wi)| {
                let row = self.row(i);
                wi * radial
                    .t()
                    .iter()
                    .zip(radial.weights())
                    .zip(row)
                    .map(|((t, w), g)| w * g * g * t.powi(power))
                    .sum::<f64>()
            })
            .sum::<f64>()
            .sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    /// Largest `|g|` over nodes with `t ∈ [lo, hi]`.
    pub fn max_abs_in(&self, lo: f64, hi: f64) -> f64 {
        let mut best = 0.0f64;
        for i in 0..self.centers.len() {
            for (t, g) in self.radial.t().iter().zip(self.row(i)) {
                if *t >= lo && *t <= hi {
                    best = best.max(g.abs());
                }
            }
        }
        best
    }
}

/// Samples `R_S f` on `centers × t-grid` with `t_points` uniform radii in `[0, 2]`.
pub fn forward(f: &Phantom, centers: &SphereQuadrature, t_points: usize, rule: &MeanRule) -> Result<DataGrid> {
    f.validate()?;
    if centers.dimension() != f.n || rule.dimension() != f.n {
        return Err(Error::Config("center quadrature and mean rule must match the phantom dimension".into()));
    }
    let radial = Arc::new(RadialGrid::uniform(t_points)?);
    let rows: Vec<Vec<f64>> = centers
        .nodes()
        .par_iter()
        .map(|x| radial.t().iter().map(|&t| mean_unchecked(f, x, t, rule)).collect())
        .collect();
    DataGrid::new(centers.clone(), radial, rows.concat())
}

/// Max-norm of `u_tt + (n−1)/t u_t − Δ_x u` for the unrestricted spherical mean
/// `u`, with second-order central differences of step `h` in `t` and in each
/// coordinate of `x`, over all `(x, t)` pairs.
pub fn darboux_residual(f: &Phantom, centers: &[Point], t_values: &[f64], h: f64, rule: &MeanRule) -> Result<f64> {
    if !(h.is_finite() && h > 0.0) {
        return Err(Error::Config(format!("finite-difference step must be positive, got {h}")));
    }
    if let Some(t) = t_values.iter().find(|&&t| !(t - h > 0.0)) {
        return Err(Error::Config(format!(
            "radius {t} with step {h} touches t = 0 where (n-1)/t is singular"
        )));
    }
    if rule.dimension() != f.n {
        return Err(Error::Config("mean rule dimension does not match the phantom".into()));
    }
    centers.iter().try_for_each(|x| check_planar(f.n, x))?;
    let n = f.n.get();
    let pairs: Vec<(Point, f64)> = centers.iter().flat_map(|x| t_values.iter().map(move |&t| (*x, t))).collect();
    let residuals: Vec<f64> = pairs
        .par_iter()
        .map(|(x, t)| {
            let u = |y: &Point, s: f64| mean_unchecked(f, y, s, rule);
            let center = u(x, *t);
            let (up, down) = (u(x, t + h), u(x, t - h));
            let u_tt = (up - 2.0 * center + down) / (h * h);
            let u_t = (up - down) / (2.0 * h);
            let mut lap = 0.0;
            for d in 0..n {
                let mut plus = *x;
                let mut minus = *x;
                plus[d] += h;
                minus[d] -= h;
                lap += (u(&plus, *t) - 2.0 * center + u(&minus, *t)) / (h * h);
            }
            (u_tt + (n as f64 - 1.0) / t * u_t - lap).abs()
        })
        .collect();
    Ok(residuals.into_iter().fold(0.0, f64::max))
}

fn check_planar(n: Dimension, x: &Point) -> Result<()> {
    if n == Dimension::Two && x[2] != 0.0 {
        return Err(Error::Domain(format!("planar point {x:?} has a nonzero third component")));
    }
    Ok(())
}

fn norm(x: &Point) -> f64 {
    (x[0] * x[0] + x[1] * x[1] + x[2] * x[2]).sqrt()
}

fn dist2(a: &Point, b: &Point) -> f64 {
    (a[0] - b[0]).powi(2) + (a[1] - b[1]).powi(2) + (a[2] - b[2]).powi(2)
}
