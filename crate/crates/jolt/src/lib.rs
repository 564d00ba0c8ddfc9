//! Force and torque rate analysis along rigid-body trajectories: numerical
//! differentiation of sampled body velocities, the jolt covector pair
//! (force rate, torque rate) from the momentum derivatives, and peak and
//! threshold-exceedance reports.

mod derivatives;
mod report;

pub use derivatives::{derivatives_from_trajectory, KinematicDerivatives};
pub use report::{jolt_report, report_text, se3_jolt, JoltReport, JoltSample};

/// Implementation details re-exported for the benchmark suite.
#[doc(hidden)]
pub mod internals {
    pub use crate::report::internals::*;
}

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum JoltError {
    /// The boundary stencils need two neighbours on one side.
    #[error("need at least 5 trajectory samples, got {got}")]
    TooFewSamples { got: usize },
    #[error("sample spacing is not uniform at sample {index}")]
    NonUniformDt { index: usize },
}
