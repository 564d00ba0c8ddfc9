use nalgebra::{Matrix3, Vector3};

use crate::so3::hat3;
use crate::{GroupError, Rotation3};

/// Quaternion in (scalar, vector) form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quaternion {
    pub scalar: f64,
    pub vector: Vector3<f64>,
}

impl Quaternion {
    pub fn new(scalar: f64, vector: Vector3<f64>) -> Self {
        Self { scalar, vector }
    }

    pub fn identity() -> Self {
        Self { scalar: 1.0, vector: Vector3::zeros() }
    }

    pub fn norm(&self) -> f64 {
        (self.scalar * self.scalar + self.vector.norm_squared()).sqrt()
    }

    /// Rotation represented by the quaternion. Normalizes first, so any
    /// nonzero quaternion is accepted; the zero quaternion has no rotation.
    pub fn to_rotation(&self) -> Rotation3 {
        let n = self.norm();
        let s = self.scalar / n;
        let k = hat3(self.vector / n);
        Rotation3::from_matrix_unchecked(Matrix3::identity() + 2.0 * s * k + 2.0 * (k * k))
    }

    /// Unit quaternion of a rotation, with the sign fixed so the scalar part
    /// is non-negative (first nonzero vector component positive when the
    /// scalar vanishes).
    pub fn from_rotation(r: &Rotation3) -> Quaternion {
        let m = r.matrix();
        let trace = m[(0, 0)] + m[(1, 1)] + m[(2, 2)];
        // Shepperd's method: branch on the largest of trace and the diagonal
        // entries so the divisor stays well away from zero.
        let q = if trace > m[(0, 0)] && trace > m[(1, 1)] && trace > m[(2, 2)] {
            let s = (trace + 1.0).sqrt() * 2.0;
            Quaternion::new(
                0.25 * s,
                Vector3::new(
                    (m[(2, 1)] - m[(1, 2)]) / s,
                    (m[(0, 2)] - m[(2, 0)]) / s,
                    (m[(1, 0)] - m[(0, 1)]) / s,
                ),
            )
        } else if m[(0, 0)] > m[(1, 1)] && m[(0, 0)] > m[(2, 2)] {
            let s = (1.0 + m[(0, 0)] - m[(1, 1)] - m[(2, 2)]).sqrt() * 2.0;
            Quaternion::new(
                (m[(2, 1)] - m[(1, 2)]) / s,
                Vector3::new(
                    0.25 * s,
                    (m[(0, 1)] + m[(1, 0)]) / s,
                    (m[(0, 2)] + m[(2, 0)]) / s,
                ),
            )
        } else if m[(1, 1)] > m[(2, 2)] {
            let s = (1.0 + m[(1, 1)] - m[(0, 0)] - m[(2, 2)]).sqrt() * 2.0;
            Quaternion::new(
                (m[(0, 2)] - m[(2, 0)]) / s,
                Vector3::new(
                    (m[(0, 1)] + m[(1, 0)]) / s,
                    0.25 * s,
                    (m[(1, 2)] + m[(2, 1)]) / s,
                ),
            )
        } else {
            let s = (1.0 + m[(2, 2)] - m[(0, 0)] - m[(1, 1)]).sqrt() * 2.0;
            Quaternion::new(
                (m[(1, 0)] - m[(0, 1)]) / s,
                Vector3::new(
                    (m[(0, 2)] + m[(2, 0)]) / s,
                    (m[(1, 2)] + m[(2, 1)]) / s,
                    0.25 * s,
                ),
            )
        };
        let n = q.norm();
        let mut q = Quaternion::new(q.scalar / n, q.vector / n);
        let flip = q.scalar < 0.0
            || (q.scalar == 0.0
                && q.vector.iter().copied().find(|c| *c != 0.0).unwrap_or(1.0) < 0.0);
        if flip {
            q = Quaternion::new(-q.scalar, -q.vector);
        }
        q
    }
}

/// Unit quaternion `(cos θ/2, u sin θ/2)` of a rotation by θ about the unit
/// axis u.
pub fn quaternion_from_axis_angle(u: Vector3<f64>, theta: f64) -> Result<Quaternion, GroupError> {
    let norm = u.norm();
    if (norm - 1.0).abs() > 1e-9 {
        return Err(GroupError::NotUnitAxis { norm });
    }
    let half = 0.5 * theta;
    Ok(Quaternion::new(half.cos(), u * half.sin()))
}
