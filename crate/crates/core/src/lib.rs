//! Invariant-region-preserving discontinuous Galerkin and finite-volume
//! schemes for the compressible Euler equations in one and two dimensions.
//!
//! The crate is organised bottom-up:
//!
//! - [`euler`]: conserved states, pressure, entropy, the region functionals
//!   and physical fluxes.
//! - [`quadrature`]: Gauss and Gauss-Lobatto rules and per-cell test sets.
//! - [`limiter`]: the explicit scaling limiter that restores region
//!   membership on a test set.
//! - [`flux`]: Lax-Friedrichs, HLL, HLLC and Godunov interface fluxes, plus
//!   the exact Riemann solver.
//! - [`solver`]: meshes, modal DG residuals, SSP-RK3, CFL control,
//!   first-order finite volumes and checkpoints.
//! - [`harness`]: the benchmark problems, error norms, convergence tables
//!   and output files.

// `!(x > 0.0)` is used on purpose so that NaN fails every admissibility test.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod euler;
pub mod flux;
pub mod harness;
pub mod limiter;
pub mod quadrature;
pub mod solver;

pub use error::{IrpError, Result};
pub use euler::{ConservedState, GasModel, RegionMargins, State1, State2};
pub use flux::FluxKind;
pub use limiter::{LimiterConfig, LimiterEvent, LimiterMode};
pub use solver::polynomial::CellPolynomial;
pub use solver::{DgSolution, Mesh};
