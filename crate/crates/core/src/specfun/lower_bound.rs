//! Empirical check of the lower bound `|J_ν(z)| ≥ C e^{|Im z|} / √|z|` away from
//! a disk `S₀` about the origin and disks of radius `π/6` centered at
//! `±π(k + (2ν+3)/4)` on the real axis.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;

use super::bessel::{bessel_j, BesselOrder};
use crate::error::{Error, Result};

const MAX_DRAWS_PER_SAMPLE: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LowerBoundSweep {
    /// Number of admissible samples to collect in the disk `|z| ≤ r_max`.
    pub samples: usize,
    pub r_max: f64,
    /// Radius of `S₀`; `None` selects `3 + ν`.
    pub s0_radius: Option<f64>,
    /// Radius of the disks around the asymptotic zero locations.
    pub disk_radius: f64,
    pub seed: u64,
}

impl Default for LowerBoundSweep {
    fn default() -> Self {
        Self { samples: 10_000, r_max: 50.0, s0_radius: None, disk_radius: PI / 6.0, seed: 0x5eed }
    }
}

impl LowerBoundSweep {
    pub fn s0_radius_for(&self, nu: BesselOrder) -> f64 {
        self.s0_radius.unwrap_or(3.0 + nu.value())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LowerBoundMargin {
    pub order: BesselOrder,
    /// Smallest sampled value of `|J_ν(z)| √|z| e^{−|Im z|}`.
    pub margin: f64,
    pub argmin: Complex64,
    pub admissible: usize,
    pub drawn: usize,
    /// The same minimum restricted to admissible points on the real axis.
    pub real_axis_margin: f64,
}

/// Whether `z` lies in the sampled region: inside `|z| ≤ r_max`, outside `S₀`
/// and outside every disk around `±π(k + (2ν+3)/4)`.
pub fn is_admissible(nu: BesselOrder, z: Complex64, sweep: &LowerBoundSweep) -> bool {
    let r = z.norm();
    if r > sweep.r_max || r < sweep.s0_radius_for(nu) {
        return false;
    }
    let offset = (2.0 * nu.value() + 3.0) / 4.0;
    let x = z.re.abs();
    let k = (x / PI - offset).round();
    let center = PI * (k + offset);
    Complex64::new(x - center, z.im).norm() >= sweep.disk_radius
}

/// The normalized magnitude `|J_ν(z)| √|z| e^{−|Im z|}`.
///
/// `|J_ν|` is invariant under `z ↦ −z̄`, so the value is computed in the closed
/// right half plane; this keeps non-integer orders away from the branch cut.
pub fn normalized_magnitude(nu: BesselOrder, z: Complex64) -> Result<f64> {
    let w = Complex64::new(z.re.abs(), z.im);
    Ok(bessel_j(nu, w)?.norm() * w.norm().sqrt() * (-w.im.abs()).exp())
}

pub fn lower_bound_margin(nu: BesselOrder, sweep: &LowerBoundSweep) -> Result<LowerBoundMargin> {
    if sweep.samples == 0 || !(sweep.r_max > 0.0) {
        return Err(Error::Config("lower-bound sweep needs samples > 0 and r_max > 0".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(sweep.seed);
    let max_draws = sweep.samples * MAX_DRAWS_PER_SAMPLE;

    let mut margin = f64::INFINITY;
    let mut argmin = Complex64::ZERO;
    let mut admissible = 0;
    let mut drawn = 0;
    while admissible < sweep.samples && drawn < max_draws {
        drawn += 1;
        let radius = sweep.r_max * rng.random::<f64>().sqrt();
        let angle = 2.0 * PI * rng.random::<f64>();
        let z = Complex64::from_polar(radius, angle);
        if !is_admissible(nu, z, sweep) {
            continue;
        }
        admissible += 1;
        let value = normalized_magnitude(nu, z)?;
        if value < margin {
            margin = value;
            argmin = z;
        }
    }
    if admissible == 0 {
        return Err(Error::Config(format!(
            "no admissible samples for order {nu}: S0 radius {} and r_max {}",
            sweep.s0_radius_for(nu),
            sweep.r_max
        )));
    }

    let mut real_axis_margin = f64::INFINITY;
    for _ in 0..sweep.samples {
        let z = Complex64::new(sweep.r_max * (2.0 * rng.random::<f64>() - 1.0), 0.0);
        if is_admissible(nu, z, sweep) {
            real_axis_margin = real_axis_margin.min(normalized_magnitude(nu, z)?);
        }
    }

    Ok(LowerBoundMargin { order: nu, margin, argmin, admissible, drawn, real_axis_margin })
}
