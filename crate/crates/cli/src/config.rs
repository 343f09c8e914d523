//! Run configuration, read from a TOML file.

use serde::{Deserialize, Serialize};
use std::path::{Path, PathBuf};

use sphrange::harmonics::HarmonicIndex;
use sphrange::range::{CheckConfig, FitWindow, NonRangeTerm};
use sphrange::spectral::check_t_resolution;
use sphrange::specfun::{bessel_zeros, BesselOrder};
use sphrange::transform::MeanRule;
use sphrange::{Dimension, Phantom, PhantomTerm, ShellProfile, Tolerances};

use crate::{CliError, LemmaSection};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub dimension: usize,
    /// Seed for the sampled Bessel lower-bound sweep in `verify-lemmas`.
    #[serde(default = "default_seed")]
    pub seed: u64,
    #[serde(default)]
    pub phantom: Vec<TermConfig>,
    #[serde(default)]
    pub grid: GridConfig,
    #[serde(default)]
    pub spectral: SpectralConfig,
    #[serde(default)]
    pub tolerances: Tolerances,
    /// Non-range terms added to the forward data (negative controls).
    #[serde(default)]
    pub perturbation: Vec<NonRangeTerm>,
    #[serde(default)]
    pub output: OutputConfig,
    #[serde(default)]
    pub lemmas: LemmaSection,
}

fn default_seed() -> u64 {
    0x5eed
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum TermConfig {
    Bump {
        center: Vec<f64>,
        radius: f64,
        #[serde(default = "one")]
        amplitude: f64,
    },
    Separable {
        m: usize,
        l: usize,
        shell_center: f64,
        half_width: f64,
        #[serde(default = "one")]
        amplitude: f64,
    },
}

fn one() -> f64 {
    1.0
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MeanKind {
    Directions,
    Axial,
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct GridConfig {
    /// Resolution of the sphere quadrature for centers; 512 in the plane and
    /// 64 in space when unset.
    pub sphere_resolution: Option<usize>,
    /// Radial samples on `[0, 2]`; 1024 when unset.
    pub t_points: Option<usize>,
    /// Directions in the plane, axial in space when unset.
    pub mean: Option<MeanKind>,
    /// Resolution of the direction rule; 2048 in the plane and 256 in space when unset.
    pub direction_resolution: Option<usize>,
    /// Gauss–Legendre order of the axial rule; 256 when unset.
    pub axial_nodes: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SpectralConfig {
    pub m_max: usize,
    pub zeros: usize,
    /// Upper end of the `λ` window exported by `decompose`.
    pub lambda_max: f64,
    pub lambda_samples: usize,
    pub fit_window: FitWindow,
}

impl Default for SpectralConfig {
    fn default() -> Self {
        let check = CheckConfig::default();
        Self { m_max: check.m_max, zeros: check.zeros, lambda_max: 60.0, lambda_samples: 1200, fit_window: check.window }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct OutputConfig {
    pub dir: PathBuf,
}

impl Default for OutputConfig {
    fn default() -> Self {
        Self { dir: PathBuf::from("out") }
    }
}

/// Command-line values that take precedence over the file.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub out: Option<PathBuf>,
    pub t_resolution: Option<usize>,
    pub m_max: Option<usize>,
    pub zeros: Option<usize>,
    pub tolerance_scale: Option<f64>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            dimension: 2,
            seed: default_seed(),
            phantom: vec![TermConfig::Bump { center: vec![0.3, 0.0], radius: 0.4, amplitude: 1.0 }],
            grid: GridConfig::default(),
            spectral: SpectralConfig::default(),
            tolerances: Tolerances::default(),
            perturbation: Vec::new(),
            output: OutputConfig::default(),
            lemmas: LemmaSection::default(),
        }
    }
}

impl RunConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        toml::from_str(&text).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("config serializes")
    }

    pub fn apply(&mut self, o: &Overrides) {
        if let Some(out) = &o.out {
            self.output.dir = out.clone();
        }
        if let Some(t) = o.t_resolution {
            self.grid.t_points = Some(t);
        }
        if let Some(m) = o.m_max {
            self.spectral.m_max = m;
        }
        if let Some(k) = o.zeros {
            self.spectral.zeros = k;
        }
        if let Some(s) = o.tolerance_scale {
            self.tolerances.scale = s;
        }
    }

    pub fn dim(&self) -> Result<Dimension, CliError> {
        Ok(Dimension::new(self.dimension)?)
    }

    pub fn sphere_resolution(&self) -> usize {
        self.grid.sphere_resolution.unwrap_or(if self.dimension == 3 { 64 } else { 512 })
    }

    pub fn t_points(&self) -> usize {
        self.grid.t_points.unwrap_or(1024)
    }

    pub fn mean_rule(&self) -> Result<MeanRule, CliError> {
        let n = self.dim()?;
        let kind = self.grid.mean.unwrap_or(if n == Dimension::Three { MeanKind::Axial } else { MeanKind::Directions });
        Ok(match kind {
            MeanKind::Directions => {
                let res = self.grid.direction_resolution.unwrap_or(if n == Dimension::Three { 256 } else { 2048 });
                MeanRule::directions(n, res)?
            }
            MeanKind::Axial => MeanRule::axial(n, self.grid.axial_nodes.unwrap_or(256))?,
        })
    }

    pub fn phantom(&self) -> Result<Phantom, CliError> {
        let n = self.dim()?;
        let terms = self
            .phantom
            .iter()
            .map(|t| match t {
                TermConfig::Bump { center, radius, amplitude } => {
                    if center.len() != n.get() {
                        return Err(CliError::Config(format!(
                            "bump center {center:?} needs {} components",
                            n.get()
                        )));
                    }
                    let mut c = [0.0; 3];
                    c[..center.len()].copy_from_slice(center);
                    Ok(PhantomTerm::Bump { center: c, radius: *radius, amplitude: *amplitude })
                }
                TermConfig::Separable { m, l, shell_center, half_width, amplitude } => Ok(PhantomTerm::Separable {
                    profile: ShellProfile { center: *shell_center, half_width: *half_width, amplitude: *amplitude },
                    harmonic: HarmonicIndex::new(n, *m, *l)?,
                }),
            })
            .collect::<Result<Vec<_>, CliError>>()?;
        Ok(Phantom::new(n, terms)?)
    }

    pub fn check_config(&self) -> CheckConfig {
        CheckConfig {
            m_max: self.spectral.m_max,
            zeros: self.spectral.zeros,
            tolerances: self.tolerances,
            window: self.spectral.fit_window,
        }
    }

    /// Validates everything a run could trip over before any heavy computation.
    pub fn validate(&self) -> Result<(), CliError> {
        let n = self.dim()?;
        self.phantom()?;
        self.mean_rule()?;
        for p in &self.perturbation {
            p.index(n)?;
            if p.a < 2 || p.b < 2 || !p.amplitude.is_finite() {
                return Err(CliError::Config(format!("perturbation needs a, b >= 2, got a={} b={}", p.a, p.b)));
            }
        }
        self.tolerances.validate()?;
        self.spectral.fit_window.validate()?;
        let s = &self.spectral;
        if s.zeros == 0 {
            return Err(CliError::Config("spectral.zeros must be at least 1".into()));
        }
        if !(s.lambda_max > 0.0) || s.lambda_samples == 0 {
            return Err(CliError::Config("spectral.lambda_max and lambda_samples must be positive".into()));
        }
        let res = self.sphere_resolution();
        if res < 4 * s.m_max {
            return Err(CliError::Config(format!(
                "sphere resolution {res} is too low for m_max {}; need at least {}",
                s.m_max,
                4 * s.m_max
            )));
        }
        let lambda_max = (0..=s.m_max)
            .map(|m| bessel_zeros(BesselOrder::for_harmonic(n, m), s.zeros).map(|z| z.zeros()[s.zeros - 1]))
            .collect::<sphrange::Result<Vec<f64>>>()?
            .into_iter()
            .fold(s.lambda_max, f64::max);
        check_t_resolution(self.t_points(), lambda_max)?;
        Ok(())
    }
}
