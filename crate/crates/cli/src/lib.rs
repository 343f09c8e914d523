//! Config-driven batch runs: forward simulation, decomposition, range checks
//! and verification of the auxiliary identities.
//!
//! Exit codes: 0 when the verdict is PASS (or DEGENERATE), 1 when a range or
//! lemma check fails, 2 for configuration, parse and IO errors.

// `!(x > 0.0)` is used on purpose so that NaN is rejected.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod config;
pub mod grid_io;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use std::path::{Path, PathBuf};

use sphrange::harmonics::sphere_quadrature;
use sphrange::oracles::{run_lemma_suite, LemmaConfig, LemmaReport};
use sphrange::range::build_report;
use sphrange::spectral::{coefficient_rows, decompose, spectral_rows};
use sphrange::specfun::{lower_bound_margin, BesselOrder, LowerBoundSweep};
use sphrange::transform::{forward, MeanRule};
use sphrange::{SpectralFunction, Verdict};

pub use config::{Overrides, RunConfig};
use grid_io::{read_grid, write_grid, write_json, write_rows, write_text, GridMetadata};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(String),
}

impl CliError {
    pub fn io(path: &Path, e: std::io::Error) -> Self {
        CliError::Io(format!("{}: {e}", path.display()))
    }
}

impl From<sphrange::Error> for CliError {
    fn from(e: sphrange::Error) -> Self {
        CliError::Config(e.to_string())
    }
}

pub const EXIT_FAIL: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "sphrange", version, about = "Spherical mean transform with centers on the unit sphere: simulation and range checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Clone, Default, Args)]
pub struct CommonArgs {
    /// TOML run configuration; built-in defaults when omitted.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Output directory (overrides `output.dir`).
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Number of radial samples on [0, 2].
    #[arg(long, global = true)]
    pub t_resolution: Option<usize>,
    /// Highest harmonic degree to inspect.
    #[arg(long, global = true)]
    pub m_max: Option<usize>,
    /// Bessel zeros per channel.
    #[arg(long = "zeros", value_name = "K", global = true)]
    pub zeros: Option<usize>,
    /// Multiplies every tolerance.
    #[arg(long, global = true)]
    pub tolerance_scale: Option<f64>,
    /// Worker threads; results do not depend on it.
    #[arg(long, env = "SPHRANGE_THREADS", global = true)]
    pub threads: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sample the transform of the configured phantom and write the grid as CSV.
    Forward,
    /// Expand a grid in spherical harmonics; write coefficients and spectral samples.
    Decompose {
        /// Grid CSV; defaults to `<out>/grid.csv`.
        #[arg(long)]
        grid: Option<PathBuf>,
    },
    /// Run the range checks on a grid and write the report.
    Check {
        /// Grid CSV; defaults to `<out>/grid.csv`.
        #[arg(long)]
        grid: Option<PathBuf>,
    },
    /// Verify the auxiliary identities on explicit test functions.
    VerifyLemmas,
}

/// Lemma options in the config file: the oracle suite plus the sampled
/// Bessel lower-bound sweep.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct LemmaSection {
    #[serde(flatten)]
    pub suite: LemmaConfig,
    pub lower_bound_orders: Vec<f64>,
    pub lower_bound_samples: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LowerBoundEntry {
    pub order: f64,
    pub margin: f64,
    pub admissible: usize,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LemmaOutput {
    pub lemmas: LemmaReport,
    pub lower_bound: Vec<LowerBoundEntry>,
    pub verdict: Verdict,
}

/// Result of a command: a verdict and the text printed to stdout.
#[derive(Debug)]
pub struct Outcome {
    pub verdict: Verdict,
    pub summary: String,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        if self.verdict == Verdict::Fail {
            EXIT_FAIL
        } else {
            0
        }
    }
}

pub fn load_config(common: &CommonArgs) -> Result<RunConfig, CliError> {
    let mut config = match &common.config {
        Some(path) => RunConfig::load(path)?,
        None => RunConfig::default(),
    };
    config.apply(&Overrides {
        out: common.out.clone(),
        t_resolution: common.t_resolution,
        m_max: common.m_max,
        zeros: common.zeros,
        tolerance_scale: common.tolerance_scale,
    });
    Ok(config)
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let config = load_config(&cli.common)?;
    let run = || match &cli.command {
        Command::Forward => cmd_forward(&config),
        Command::Decompose { grid } => cmd_decompose(&config, grid.as_deref()),
        Command::Check { grid } => cmd_check(&config, grid.as_deref()),
        Command::VerifyLemmas => cmd_verify_lemmas(&config),
    };
    match cli.common.threads {
        Some(0) => Err(CliError::Config("thread count must be at least 1".into())),
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| CliError::Config(format!("cannot start {t} threads: {e}")))?
            .install(run),
        None => run(),
    }
}

fn out_dir(config: &RunConfig) -> Result<&Path, CliError> {
    let dir = config.output.dir.as_path();
    std::fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    Ok(dir)
}

fn grid_path(config: &RunConfig, grid: Option<&Path>) -> PathBuf {
    grid.map_or_else(|| config.output.dir.join("grid.csv"), Path::to_path_buf)
}

fn describe(rule: &MeanRule) -> String {
    match rule {
        MeanRule::Directions(q) => format!("directions:{}", q.resolution()),
        MeanRule::Axial(a) => format!("axial:{}", a.nodes()),
    }
}

pub fn cmd_forward(config: &RunConfig) -> Result<Outcome, CliError> {
    config.validate()?;
    let n = config.dim()?;
    let phantom = config.phantom()?;
    let rule = config.mean_rule()?;
    let centers = sphere_quadrature(n, config.sphere_resolution())?;
    let mut grid = forward(&phantom, &centers, config.t_points(), &rule)?;
    let range_max_abs = grid.max_abs();
    for p in &config.perturbation {
        grid = p.apply(&grid)?;
    }
    let dir = out_dir(config)?;
    let path = dir.join("grid.csv");
    let meta = GridMetadata {
        format: grid_io::FORMAT.into(),
        version: 1,
        dimension: n.get(),
        sphere_resolution: config.sphere_resolution(),
        t_points: config.t_points(),
        mean_rule: describe(&rule),
        seed: config.seed,
        range_max_abs,
    };
    write_grid(&path, &grid, &meta)?;
    Ok(Outcome {
        verdict: Verdict::Pass,
        summary: format!(
            "wrote {} ({} nodes x {} radii, max |g| = {:.16e})",
            path.display(),
            grid.centers().len(),
            grid.radial().len(),
            grid.max_abs()
        ),
    })
}

fn load_consistent_grid(config: &RunConfig, grid: Option<&Path>) -> Result<sphrange::DataGrid, CliError> {
    let path = grid_path(config, grid);
    let (data, meta) = read_grid(&path)?;
    if meta.dimension != config.dimension {
        return Err(CliError::Config(format!(
            "{} holds {}-dimensional data but the config says dimension = {}",
            path.display(),
            meta.dimension,
            config.dimension
        )));
    }
    Ok(data)
}

/// Validation of the parts of the config that apply to an existing grid.
fn validate_for_grid(config: &RunConfig, grid: &sphrange::DataGrid) -> Result<(), CliError> {
    let mut c = config.clone();
    c.grid.sphere_resolution = Some(grid.centers().resolution());
    c.grid.t_points = Some(grid.radial().len());
    c.validate()
}

pub fn cmd_decompose(config: &RunConfig, grid: Option<&Path>) -> Result<Outcome, CliError> {
    let data = load_consistent_grid(config, grid)?;
    validate_for_grid(config, &data)?;
    let coefs = decompose(&data, config.spectral.m_max)?;
    let s = &config.spectral;
    let lambdas: Vec<f64> = (0..=s.lambda_samples).map(|i| s.lambda_max * i as f64 / s.lambda_samples as f64).collect();
    let specs: Vec<SpectralFunction> = coefs.iter().cloned().map(SpectralFunction::new).collect();
    let dir = out_dir(config)?;
    write_rows(&dir.join("coefficients.csv"), "t", &coefficient_rows(&coefs))?;
    write_rows(&dir.join("spectral.csv"), "lambda", &spectral_rows(&specs, &lambdas))?;
    Ok(Outcome {
        verdict: Verdict::Pass,
        summary: format!(
            "wrote {} channels to {} and {}",
            coefs.len(),
            dir.join("coefficients.csv").display(),
            dir.join("spectral.csv").display()
        ),
    })
}

pub fn cmd_check(config: &RunConfig, grid: Option<&Path>) -> Result<Outcome, CliError> {
    let data = load_consistent_grid(config, grid)?;
    validate_for_grid(config, &data)?;
    let report = build_report(&data, &config.check_config())?;
    let dir = out_dir(config)?;
    write_text(&dir.join("report.json"), &(report.to_json() + "\n"))?;
    let table = report.table();
    write_text(&dir.join("report.txt"), &table)?;
    Ok(Outcome { verdict: report.verdict, summary: table })
}

pub fn cmd_verify_lemmas(config: &RunConfig) -> Result<Outcome, CliError> {
    let section = &config.lemmas;
    let lemmas = run_lemma_suite(&section.suite)?;
    let mut lower_bound = Vec::new();
    if !section.suite.degrees.is_empty() {
        let sweep = LowerBoundSweep { samples: section.lower_bound_samples, seed: config.seed, ..Default::default() };
        for &order in &section.lower_bound_orders {
            let m = lower_bound_margin(BesselOrder::new(order)?, &sweep)?;
            let verdict = if m.margin > 0.0 { Verdict::Pass } else { Verdict::Fail };
            lower_bound.push(LowerBoundEntry { order, margin: m.margin, admissible: m.admissible, verdict });
        }
    }
    let verdict = if lemmas.verdict == Verdict::Pass && lower_bound.iter().all(|e| e.verdict == Verdict::Pass) {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    let mut table = lemmas.table();
    for e in &lower_bound {
        table.push_str(&format!(
            "bessel_lower_bound nu={} margin={:.16e} samples={} {}\n",
            e.order, e.margin, e.admissible, e.verdict
        ));
    }
    table.push_str(&format!("verdict: {verdict}\n"));
    let output = LemmaOutput { lemmas, lower_bound, verdict };
    let dir = out_dir(config)?;
    write_json(&dir.join("lemmas.json"), &output)?;
    write_text(&dir.join("lemmas.txt"), &table)?;
    Ok(Outcome { verdict, summary: table })
}

impl Default for LemmaSection {
    fn default() -> Self {
        Self {
            suite: LemmaConfig::default(),
            lower_bound_orders: vec![0.0, 1.0, 2.0, 2.5],
            lower_bound_samples: LowerBoundSweep::default().samples,
        }
    }
}
