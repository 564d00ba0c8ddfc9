use nalgebra::{Matrix3, Matrix4, Vector3};

use crate::so3::{exp_so3, hat3, log_so3, sincc};
use crate::{GroupError, Rotation3};

/// Element of se(3): angular part `w`, linear part `v`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Twist {
    pub w: Vector3<f64>,
    pub v: Vector3<f64>,
}

impl Twist {
    pub fn new(w: Vector3<f64>, v: Vector3<f64>) -> Self {
        Self { w, v }
    }

    pub fn zero() -> Self {
        Self { w: Vector3::zeros(), v: Vector3::zeros() }
    }
}

/// 4x4 embedding of a twist; the bottom row is zero.
pub fn se3_hat(t: &Twist) -> Matrix4<f64> {
    let k = hat3(t.w);
    let mut m = Matrix4::zeros();
    m.fixed_view_mut::<3, 3>(0, 0).copy_from(&k);
    m.fixed_view_mut::<3, 1>(0, 3).copy_from(&t.v);
    m
}

/// Element of SE(3): rotation plus translation, acting as `x ↦ rot·x + p`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Pose3 {
    pub rot: Rotation3,
    pub p: Vector3<f64>,
}

impl Pose3 {
    pub fn new(rot: Rotation3, p: Vector3<f64>) -> Self {
        Self { rot, p }
    }

    pub fn identity() -> Self {
        Self { rot: Rotation3::identity(), p: Vector3::zeros() }
    }

    /// `(A,a)(B,b) = (AB, Ab + a)`.
    pub fn compose(&self, other: &Pose3) -> Pose3 {
        Pose3 { rot: self.rot.compose(&other.rot), p: self.rot.act(other.p) + self.p }
    }

    /// `(A,a)⁻¹ = (A⁻¹, -A⁻¹ a)`.
    pub fn inverse(&self) -> Pose3 {
        let rot_inv = self.rot.inverse();
        Pose3 { rot: rot_inv, p: -rot_inv.act(self.p) }
    }

    pub fn act(&self, q: Vector3<f64>) -> Vector3<f64> {
        self.rot.act(q) + self.p
    }

    /// Homogeneous 4x4 form with bottom row (0,0,0,1).
    pub fn homogeneous(&self) -> Matrix4<f64> {
        let mut m = Matrix4::identity();
        m.fixed_view_mut::<3, 3>(0, 0).copy_from(self.rot.matrix());
        m.fixed_view_mut::<3, 1>(0, 3).copy_from(&self.p);
        m
    }
}

/// Left Jacobian of SO(3): the translation factor of the SE(3) exponential,
/// `A = I + (1-cosθ)/θ² ŵ + (θ-sinθ)/θ³ ŵ²` with `θ = ‖w‖`.
fn translation_factor(w: Vector3<f64>) -> Matrix3<f64> {
    let theta = w.norm();
    let k = hat3(w);
    let c1 = if theta < 1e-4 {
        let t2 = theta * theta;
        0.5 - t2 / 24.0 + t2 * t2 / 720.0
    } else {
        (1.0 - theta.cos()) / (theta * theta)
    };
    Matrix3::identity() + c1 * k + sincc(theta) * (k * k)
}

/// Exponential map se(3) -> SE(3).
pub fn exp_se3(t: &Twist) -> Pose3 {
    Pose3 { rot: exp_so3(t.w), p: translation_factor(t.w) * t.v }
}

/// Principal logarithm SE(3) -> se(3); inherits the angle limit of
/// [`log_so3`].
pub fn log_se3(g: &Pose3) -> Result<Twist, GroupError> {
    let w = log_so3(&g.rot)?;
    // The translation factor is invertible away from angle 2π, so the linear
    // part solves A v = p.
    let v = translation_factor(w)
        .lu()
        .solve(&g.p)
        .expect("translation factor is invertible below the angle limit");
    Ok(Twist { w, v })
}

/// Lie bracket on se(3): `[(ξ,u),(η,v)] = (ξ×η, ξ×v - η×u)`; equals the 4x4
/// matrix commutator of the embeddings.
pub fn se3_bracket(a: &Twist, b: &Twist) -> Twist {
    Twist { w: a.w.cross(&b.w), v: a.w.cross(&b.v) - b.w.cross(&a.v) }
}
