//! Numerical toolkit for the spherical mean transform restricted to centers on
//! the unit sphere `S`, acting on smooth functions supported in the unit ball.
//!
//! The pipeline is
//!
//! 1. [`transform::forward`] samples `g(x, t) = R_S f(x, t)` on a product grid
//!    of sphere nodes and radii `t ∈ [0, 2]`;
//! 2. [`spectral::decompose`] expands the data in real spherical harmonics and
//!    [`spectral::SpectralFunction`] evaluates the Fourier–Bessel transform of
//!    each radial profile;
//! 3. [`range`] checks the Bessel-zero orthogonality conditions, the
//!    eigenfunction orthogonality conditions, the moment conditions and the
//!    vanishing order of each spectral function at the origin.
//!
//! [`oracles`] verifies the auxiliary identities these checks rely on
//! (Sonine's integral, powers of the Laplacian, the triangular moment system)
//! independently of the transform pipeline.

// `!(x > 0.0)` is used on purpose so that NaN is rejected.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod harmonics;
pub mod oracles;
pub mod quadrature;
pub mod range;
pub mod spectral;
pub mod specfun;
pub mod transform;

pub use error::{Error, Result};
pub use harmonics::{Dimension, HarmonicIndex, SphereQuadrature};
pub use range::{RangeReport, Tolerances, Verdict};
pub use spectral::{HarmonicCoefficient, SpectralFunction};
pub use specfun::{BesselOrder, ZeroTable};
pub use transform::{DataGrid, Phantom, PhantomTerm, RadialGrid, ShellProfile};

/// Points are stored with three components; in the plane the third is zero.
pub type Point = [f64; 3];
