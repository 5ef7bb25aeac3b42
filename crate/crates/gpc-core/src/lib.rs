//! Generalized Pauli dynamical maps at desk scale.
//!
//! Builds mutually unbiased bases for prime dimensions, represents
//! generalized Pauli channels in both probability and eigenvalue form,
//! mixes the single-basis dynamical maps, locates and classifies the
//! singular points of the mixture, extracts time-local decoherence
//! rates, and constructs the closed-form memory kernels together with
//! a Volterra solver that verifies them against the eigenvalue
//! trajectories they generate.

pub mod channel;
pub mod generator;
pub mod kernel;
pub mod linalg;
pub mod mixture;
pub mod mub;
pub mod numerics;
pub mod volterra;

pub(crate) mod par;

pub use mub::{Dim, MubFamily, UnitaryFamily};
