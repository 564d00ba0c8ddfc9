//! Value types and closed-form maps for the matrix Lie groups used across the
//! workspace: SO(2), SO(3), SE(2), SE(3), the Galilei group, general matrix
//! exponentials, quaternions, and a static catalog of classical groups.
//!
//! Every type is an immutable value and every operation is a pure function, so
//! everything here is safe to share and call concurrently.

mod catalog;
mod charts;
mod galilei;
mod matexp;
mod planar;
mod quat;
mod se3;
mod so3;

pub use catalog::{catalog_lookup, GroupCatalogEntry};
pub use charts::stereographic_transition;
pub use galilei::{galilei_apply, galilei_compose, GalileiTransform};
pub use matexp::matrix_exp;
pub use planar::{
    momentum_map_so2, se2_bracket, se2_adjoint, se2_coadjoint, so2_generator_field, Pose2,
    Rotation2,
};
pub use quat::{quaternion_from_axis_angle, Quaternion};
pub use se3::{exp_se3, log_se3, se3_bracket, se3_hat, Pose3, Twist};
pub use so3::{
    ad_so3, adjoint_conjugation_check, bch3, euler_angles_to_rotation, exp_so3, hat3, log_so3,
    vee3, Rotation3,
};

use thiserror::Error;

/// Element of so(3) in vector coordinates.
pub type AlgebraVector3 = nalgebra::Vector3<f64>;

/// Errors raised by group and algebra operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GroupError {
    /// Input matrix is not skew-symmetric within tolerance.
    #[error("matrix is not skew-symmetric (deviation {deviation:.3e})")]
    NotSkew { deviation: f64 },
    /// Rotation angle is too close to pi; the axis of the principal logarithm
    /// is ill-conditioned there.
    #[error("rotation angle within 1e-6 of pi, axis ill-conditioned (trace {trace:.6})")]
    NearAngleLimit { trace: f64 },
    /// Series argument outside the guaranteed convergence region.
    #[error("argument norm {norm:.6} exceeds the trust region 0.5")]
    OutOfTrustRegion { norm: f64 },
    /// Axis vector must have unit length.
    #[error("axis norm {norm:.6} is not 1 within 1e-9")]
    NotUnitAxis { norm: f64 },
    /// The transition map is undefined at the origin.
    #[error("zero vector has no chart transition")]
    ZeroInput,
    /// Group family is not in the catalog.
    #[error("unknown group family {name:?}")]
    UnknownGroup { name: String },
    /// Matrix fails the rotation invariants (orthogonality, determinant +1).
    #[error("matrix is not a rotation (orthogonality deviation {ortho:.3e}, det {det:.6})")]
    NotRotation { ortho: f64, det: f64 },
}
