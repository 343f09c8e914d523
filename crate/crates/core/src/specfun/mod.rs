//! Bessel functions of the first kind, their zeros, and the lower-bound sweep.

mod bessel;
mod lower_bound;
mod zeros;

pub use bessel::{
    bessel_j, bessel_j_asymptotic, bessel_j_half_integer, bessel_j_norm, bessel_j_prime,
    bessel_j_real, bessel_j_series, BesselOrder, SERIES_RADIUS,
};
pub use lower_bound::{
    is_admissible, lower_bound_margin, normalized_magnitude, LowerBoundMargin, LowerBoundSweep,
};
pub use zeros::{
    bessel_zeros, bessel_zeros_below, mcmahon_guess, ZeroTable, CERTIFICATE_WIDTH, ZERO_TOLERANCE,
};

pub(crate) use bessel::{j_nonneg, j_norm_nonneg};
