//! Rigid-body equations of motion in body-frame variables: free and forced
//! Euler rotations, the heavy top in momentum form, coupled Newton–Euler
//! translation–rotation dynamics, the Kirchhoff equations for a vehicle in
//! ideal fluid, planar hovercraft and satellite attitude models, plus a
//! fixed-step fourth-order integrator, geometric pose reconstruction, and
//! energy and momentum observables.
//!
//! Right-hand sides are pure functions; the integrator advances a flat state
//! vector and rebuilds poses with the group exponential so rotations stay
//! orthogonal over long runs.

mod csv;
mod energy;
mod integrate;
mod rhs;
mod types;

pub use csv::{parse_trajectory_csv, trajectory_csv};
pub use energy::{kinetic_energy, momenta};
pub use integrate::{integrate, reconstruct_pose, rk4_step, System};
pub use rhs::{
    euler_rhs, heavy_top_rhs, hovercraft_rhs, kirchhoff_submarine_rhs, newton_euler_rhs,
    satellite_rhs,
};
pub use types::{BodyParams, BodyState, Trajectory, TrajectorySample, Wrench};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DynamicsError {
    /// Heavy-top equations need the body-frame gravity direction in the state.
    #[error("heavy top state carries no gravity direction")]
    MissingGamma,
    /// Integration produced a non-finite state component.
    #[error("state became non-finite at step {step}")]
    NonFiniteState { step: usize },
    #[error("trajectory csv: unexpected header")]
    CsvHeader,
    #[error("trajectory csv: malformed record on line {line}")]
    CsvRecord { line: usize },
    #[error("trajectory csv needs at least two samples")]
    CsvTooShort,
}
