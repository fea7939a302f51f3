//! Bound states of the radial Schrödinger equation from classical turning
//! points: turning-point widths, phase integrals, branch energy formulas and
//! damped-periodic radial wavefunctions, checked against independent
//! reference solvers (spherical Bessel zeros, textbook spectra, Numerov).

// `!(x > 0.0)` is used on purpose so that NaN is rejected along with the
// out-of-range values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod oracles;
pub mod potentials;
pub mod quadrature;
pub mod report;
pub mod spectrum;
pub mod turning_points;
pub mod wavefunctions;

pub use error::{Error, Result};
