use std::f64::consts::PI;

use nalgebra::{Matrix2, Vector2};

/// Wraps an angle to the canonical representative in (-π, π].
fn canonical_angle(theta: f64) -> f64 {
    let r = theta.rem_euclid(2.0 * PI);
    if r > PI { r - 2.0 * PI } else { r }
}

/// Planar rotation, stored by its canonical angle in (-π, π].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rotation2 {
    theta: f64,
}

impl Rotation2 {
    pub fn new(theta: f64) -> Self {
        Self { theta: canonical_angle(theta) }
    }

    pub fn identity() -> Self {
        Self { theta: 0.0 }
    }

    pub fn angle(&self) -> f64 {
        self.theta
    }

    pub fn matrix(&self) -> Matrix2<f64> {
        let (s, c) = self.theta.sin_cos();
        Matrix2::new(c, -s, s, c)
    }

    pub fn compose(&self, other: &Rotation2) -> Rotation2 {
        Rotation2::new(self.theta + other.theta)
    }

    pub fn inverse(&self) -> Rotation2 {
        Rotation2::new(-self.theta)
    }

    pub fn act(&self, v: Vector2<f64>) -> Vector2<f64> {
        let (s, c) = self.theta.sin_cos();
        Vector2::new(c * v.x - s * v.y, s * v.x + c * v.y)
    }
}

/// Element of SE(2), acting as `x ↦ rot·x + a`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Pose2 {
    pub rot: Rotation2,
    pub a: Vector2<f64>,
}

impl Pose2 {
    pub fn new(rot: Rotation2, a: Vector2<f64>) -> Self {
        Self { rot, a }
    }

    pub fn identity() -> Self {
        Self { rot: Rotation2::identity(), a: Vector2::zeros() }
    }

    pub fn compose(&self, other: &Pose2) -> Pose2 {
        Pose2 { rot: self.rot.compose(&other.rot), a: self.rot.act(other.a) + self.a }
    }

    /// `(R_θ, a)⁻¹ = (R_{-θ}, -R_{-θ} a)`.
    pub fn inverse(&self) -> Pose2 {
        let rot_inv = self.rot.inverse();
        Pose2 { rot: rot_inv, a: -rot_inv.act(self.a) }
    }

    pub fn act(&self, q: Vector2<f64>) -> Vector2<f64> {
        self.rot.act(q) + self.a
    }
}

// The fixed symplectic-style matrix J = [[0,1],[-1,0]] used by the se(2)
// bracket and adjoint formulas.
fn j_times(v: Vector2<f64>) -> Vector2<f64> {
    Vector2::new(v.y, -v.x)
}

fn j_transpose_times(v: Vector2<f64>) -> Vector2<f64> {
    Vector2::new(-v.y, v.x)
}

/// Lie bracket on se(2) in (angular, linear) coordinates:
/// `[(ξ,v),(ζ,w)] = (0, ξJᵀw - ζJᵀv)`.
pub fn se2_bracket(a: (f64, Vector2<f64>), b: (f64, Vector2<f64>)) -> (f64, Vector2<f64>) {
    let (xi, v) = a;
    let (zeta, w) = b;
    (0.0, xi * j_transpose_times(w) - zeta * j_transpose_times(v))
}

/// Adjoint action of SE(2) on its algebra:
/// `Ad_{(θ,a)}(ξ,v) = (ξ, ξJa + R_θ v)`.
pub fn se2_adjoint(g: &Pose2, x: (f64, Vector2<f64>)) -> (f64, Vector2<f64>) {
    let (xi, v) = x;
    (xi, xi * j_times(g.a) + g.rot.act(v))
}

/// Coadjoint action `Ad*_{(θ,a)⁻¹}` on the dual (μ, α):
/// `(μ - (R_θα)·(Ja), R_θα)`. Satisfies the pairing invariance
/// `⟨Ad*_{g⁻¹}m, Ad_g x⟩ = ⟨m, x⟩` and preserves ‖α‖, so orbits with α ≠ 0
/// are cylinders.
pub fn se2_coadjoint(g: &Pose2, m: (f64, Vector2<f64>)) -> (f64, Vector2<f64>) {
    let (mu, alpha) = m;
    let rotated = g.rot.act(alpha);
    (mu - rotated.dot(&j_times(g.a)), rotated)
}

/// Infinitesimal generator of the SO(2) action on the plane:
/// `ξ·(-y, x)` at the point (x, y).
pub fn so2_generator_field(xi: f64, point: Vector2<f64>) -> Vector2<f64> {
    Vector2::new(-xi * point.y, xi * point.x)
}

/// Momentum map of the SO(2) action on T*R²: the planar angular momentum
/// `x·p_y - y·p_x`.
pub fn momentum_map_so2(x: f64, y: f64, p_x: f64, p_y: f64) -> f64 {
    x * p_y - y * p_x
}
