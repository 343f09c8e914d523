//! Real orthonormal spherical harmonics on `S^{n-1}` for `n ∈ {2, 3}` and
//! quadrature rules on the sphere.
//!
//! All inner products use the normalized measure (total mass 1), so the
//! degree-0 harmonic is the constant 1. For `n = 3` the basis is built from
//! associated Legendre functions without the Condon–Shortley phase.

use serde::{Deserialize, Serialize};
use std::f64::consts::{PI, SQRT_2};

use crate::error::{Error, Result};
use crate::quadrature::GaussLegendre;
use crate::Point;

/// Ambient dimension of the problem.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "usize", into = "usize")]
pub enum Dimension {
    Two,
    Three,
}

impl Dimension {
    pub fn new(n: usize) -> Result<Self> {
        match n {
            2 => Ok(Self::Two),
            3 => Ok(Self::Three),
            _ => Err(Error::Config(format!("unsupported dimension {n}; expected 2 or 3"))),
        }
    }

    pub fn get(self) -> usize {
        match self {
            Self::Two => 2,
            Self::Three => 3,
        }
    }
}

impl TryFrom<usize> for Dimension {
    type Error = Error;

    fn try_from(n: usize) -> Result<Self> {
        Self::new(n)
    }
}

impl From<Dimension> for usize {
    fn from(n: Dimension) -> usize {
        n.get()
    }
}

impl std::fmt::Display for Dimension {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.get())
    }
}

/// Number `d(m)` of linearly independent degree-`m` harmonics.
pub fn harmonic_dim(n: usize, m: usize) -> Result<usize> {
    Ok(dim(Dimension::new(n)?, m))
}

pub(crate) fn dim(n: Dimension, m: usize) -> usize {
    match (n, m) {
        (_, 0) => 1,
        (Dimension::Two, _) => 2,
        (Dimension::Three, _) => 2 * m + 1,
    }
}

/// Harmonic `Y^m_l` with `1 ≤ l ≤ d(m)`.
///
/// For `n = 2`, `l = 1` is `√2 cos(mφ)` and `l = 2` is `√2 sin(mφ)`.
/// For `n = 3`, `l` enumerates the azimuthal order `μ = l − m − 1 ∈ [−m, m]`,
/// with negative `μ` selecting the sine harmonics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HarmonicIndex {
    n: Dimension,
    m: usize,
    l: usize,
}

impl HarmonicIndex {
    pub fn new(n: Dimension, m: usize, l: usize) -> Result<Self> {
        let d = dim(n, m);
        if l == 0 || l > d {
            return Err(Error::Index(format!("harmonic index l={l} outside 1..={d} for n={n}, m={m}")));
        }
        Ok(Self { n, m, l })
    }

    pub fn dimension(&self) -> Dimension {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.m
    }

    pub fn index(&self) -> usize {
        self.l
    }

    fn azimuthal_order(&self) -> i64 {
        self.l as i64 - self.m as i64 - 1
    }
}

impl std::fmt::Display for HarmonicIndex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(m={}, l={})", self.m, self.l)
    }
}

/// All indices with degree `m ≤ m_max`, ordered by `(m, l)`.
pub fn harmonic_indices(n: Dimension, m_max: usize) -> Vec<HarmonicIndex> {
    (0..=m_max).flat_map(|m| (1..=dim(n, m)).map(move |l| HarmonicIndex { n, m, l })).collect()
}

/// `Y^m_l(θ)` for a unit vector `θ` (third component zero when `n = 2`).
pub fn eval_harmonic(idx: HarmonicIndex, theta: &Point) -> Result<f64> {
    let norm = theta.iter().map(|c| c * c).sum::<f64>().sqrt();
    if (norm - 1.0).abs() > 1e-10 {
        return Err(Error::Domain(format!("harmonic argument must be a unit vector, |θ| = {norm}")));
    }
    if idx.n == Dimension::Two && theta[2] != 0.0 {
        return Err(Error::Domain("planar harmonic evaluated off the plane".into()));
    }
    Ok(eval_unchecked(idx, theta))
}

pub(crate) fn eval_unchecked(idx: HarmonicIndex, theta: &Point) -> f64 {
    let phi = theta[1].atan2(theta[0]);
    match idx.n {
        Dimension::Two => match (idx.m, idx.l) {
            (0, _) => 1.0,
            (m, 1) => SQRT_2 * (m as f64 * phi).cos(),
            (m, _) => SQRT_2 * (m as f64 * phi).sin(),
        },
        Dimension::Three => {
            let mu = idx.azimuthal_order();
            let cos_polar = theta[2];
            let sin_polar = theta[0].hypot(theta[1]);
            let p = normalized_legendre(idx.m, mu.unsigned_abs() as usize, cos_polar, sin_polar);
            match mu {
                0 => p,
                mu if mu > 0 => SQRT_2 * p * (mu as f64 * phi).cos(),
                mu => SQRT_2 * p * ((-mu) as f64 * phi).sin(),
            }
        }
    }
}

/// `√((2l+1)(l−μ)!/(l+μ)!) P_l^μ(x)` without the Condon–Shortley phase, so that
/// `½∫_{−1}^{1} P̃² dx = 1`. `s = √(1 − x²)` is passed in to avoid cancellation.
fn normalized_legendre(l: usize, mu: usize, x: f64, s: f64) -> f64 {
    let mut pmm = 1.0;
    for k in 1..=mu {
        let kf = k as f64;
        pmm *= ((2.0 * kf + 1.0) / (2.0 * kf)).sqrt() * s;
    }
    if l == mu {
        return pmm;
    }
    let mut p_prev = pmm;
    let mut p = (2.0 * mu as f64 + 3.0).sqrt() * x * pmm;
    let muf = mu as f64;
    for ll in (mu + 2)..=l {
        let lf = ll as f64;
        let denom = lf * lf - muf * muf;
        let a = ((4.0 * lf * lf - 1.0) / denom).sqrt();
        let b = ((2.0 * lf + 1.0) * (lf - 1.0 - muf) * (lf - 1.0 + muf) / ((2.0 * lf - 3.0) * denom)).sqrt();
        let next = a * x * p - b * p_prev;
        p_prev = p;
        p = next;
    }
    p
}

/// Quadrature on the unit sphere with weights summing to 1.
///
/// `n = 2`: `resolution` equally spaced angles with equal weights.
/// `n = 3`: `resolution / 2` Gauss–Legendre nodes in the polar cosine times
/// `resolution` equally spaced azimuths. Both integrate products of
/// harmonics of degree `≤ resolution / 4` exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct SphereQuadrature {
    n: Dimension,
    resolution: usize,
    nodes: Vec<Point>,
    weights: Vec<f64>,
}

pub fn sphere_quadrature(n: Dimension, resolution: usize) -> Result<SphereQuadrature> {
    if resolution < 4 {
        return Err(Error::Config(format!("sphere quadrature resolution must be >= 4, got {resolution}")));
    }
    let (nodes, weights) = match n {
        Dimension::Two => {
            let w = 1.0 / resolution as f64;
            let nodes = (0..resolution)
                .map(|k| {
                    let a = 2.0 * PI * k as f64 / resolution as f64;
                    [a.cos(), a.sin(), 0.0]
                })
                .collect();
            (nodes, vec![w; resolution])
        }
        Dimension::Three => {
            let polar = GaussLegendre::new(resolution / 2);
            let azimuths = resolution;
            let mut nodes = Vec::with_capacity(polar.len() * azimuths);
            let mut weights = Vec::with_capacity(polar.len() * azimuths);
            for (&z, &wz) in polar.nodes().iter().zip(polar.weights()) {
                let s = (1.0 - z * z).sqrt();
                for k in 0..azimuths {
                    let a = 2.0 * PI * k as f64 / azimuths as f64;
                    nodes.push([s * a.cos(), s * a.sin(), z]);
                    weights.push(wz / (2.0 * azimuths as f64));
                }
            }
            (nodes, weights)
        }
    };
    Ok(SphereQuadrature { n, resolution, nodes, weights })
}

impl SphereQuadrature {
    pub fn dimension(&self) -> Dimension {
        self.n
    }

    pub fn resolution(&self) -> usize {
        self.resolution
    }

    pub fn nodes(&self) -> &[Point] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Highest harmonic degree whose Gram matrix this rule reproduces exactly.
    pub fn max_exact_degree(&self) -> usize {
        self.resolution / 4
    }

    /// Average of `f` over the sphere.
    pub fn integrate(&self, mut f: impl FnMut(&Point) -> f64) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(x, &w)| w * f(x)).sum()
    }
}
