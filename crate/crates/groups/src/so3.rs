use nalgebra::{Matrix3, Vector3};

use crate::GroupError;

/// Below this angle the Rodrigues coefficients switch to their fourth-order
/// Taylor expansions; keeps the 0/0 limits exact to better than 1e-16.
const TAYLOR_SWITCH: f64 = 1e-4;

/// Orthogonality and determinant tolerance enforced when a rotation is built
/// from a raw matrix.
const ROTATION_TOL: f64 = 1e-12;

/// Rotation in 3-space stored as a full orthogonal matrix with determinant +1.
///
/// Construction from a raw matrix re-checks the invariants; group operations
/// on already-verified rotations do not, so long composition chains stay
/// usable (their drift is far below the raw-input tolerance).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rotation3 {
    m: Matrix3<f64>,
}

impl Rotation3 {
    /// Verifies `m^T m = I` and `det m = 1` to 1e-12.
    pub fn new(m: Matrix3<f64>) -> Result<Self, GroupError> {
        let ortho = (m.transpose() * m - Matrix3::identity()).norm();
        let det = m.determinant();
        if ortho > ROTATION_TOL || (det - 1.0).abs() > ROTATION_TOL {
            return Err(GroupError::NotRotation { ortho, det });
        }
        Ok(Self { m })
    }

    pub(crate) fn from_matrix_unchecked(m: Matrix3<f64>) -> Self {
        Self { m }
    }

    pub fn identity() -> Self {
        Self { m: Matrix3::identity() }
    }

    pub fn matrix(&self) -> &Matrix3<f64> {
        &self.m
    }

    pub fn compose(&self, other: &Rotation3) -> Rotation3 {
        Rotation3 { m: self.m * other.m }
    }

    /// Inverse is the transpose.
    pub fn inverse(&self) -> Rotation3 {
        Rotation3 { m: self.m.transpose() }
    }

    pub fn act(&self, v: Vector3<f64>) -> Vector3<f64> {
        self.m * v
    }

    pub fn trace(&self) -> f64 {
        self.m.trace()
    }
}

/// Maps a vector to the skew matrix with `hat3(w) * x = w × x`.
pub fn hat3(w: Vector3<f64>) -> Matrix3<f64> {
    Matrix3::new(
        0.0, -w.z, w.y, //
        w.z, 0.0, -w.x, //
        -w.y, w.x, 0.0,
    )
}

/// Inverse of [`hat3`]; the input must be skew-symmetric to 1e-9.
pub fn vee3(m: &Matrix3<f64>) -> Result<Vector3<f64>, GroupError> {
    let deviation = (m + m.transpose()).norm();
    if deviation > 1e-9 {
        return Err(GroupError::NotSkew { deviation });
    }
    Ok(Vector3::new(m[(2, 1)], m[(0, 2)], m[(1, 0)]))
}

/// sin(t)/t with its Taylor expansion near zero.
fn sinc(t: f64) -> f64 {
    if t.abs() < TAYLOR_SWITCH {
        let t2 = t * t;
        1.0 - t2 / 6.0 + t2 * t2 / 120.0
    } else {
        t.sin() / t
    }
}

/// (1 - cos t)/t^2 with its Taylor expansion near zero.
fn cosc(t: f64) -> f64 {
    if t.abs() < TAYLOR_SWITCH {
        let t2 = t * t;
        0.5 - t2 / 24.0 + t2 * t2 / 720.0
    } else {
        (1.0 - t.cos()) / (t * t)
    }
}

/// (t - sin t)/t^3 with its Taylor expansion near zero.
pub(crate) fn sincc(t: f64) -> f64 {
    if t.abs() < TAYLOR_SWITCH {
        let t2 = t * t;
        1.0 / 6.0 - t2 / 120.0 + t2 * t2 / 5040.0
    } else {
        (t - t.sin()) / (t * t * t)
    }
}

/// Exponential map so(3) -> SO(3) by the Rodrigues formula
/// `exp(w) = I + sinc(θ) ŵ + cosc(θ) ŵ²` with `θ = ‖w‖`.
pub fn exp_so3(w: Vector3<f64>) -> Rotation3 {
    let theta = w.norm();
    let k = hat3(w);
    let m = Matrix3::identity() + sinc(theta) * k + cosc(theta) * (k * k);
    Rotation3::from_matrix_unchecked(m)
}

/// Principal logarithm SO(3) -> so(3), with angle in [0, pi].
///
/// Fails with [`GroupError::NearAngleLimit`] when `trace(r) <= -1 + 1e-6`
/// (angle at or near pi), where the axis is not determined by `r - r^T`.
pub fn log_so3(r: &Rotation3) -> Result<Vector3<f64>, GroupError> {
    let trace = r.trace();
    if trace <= -1.0 + 1e-6 {
        return Err(GroupError::NearAngleLimit { trace });
    }
    let theta = (0.5 * (trace - 1.0)).clamp(-1.0, 1.0).acos();
    // w = θ/(2 sin θ) vee(r - r^T); the factor tends to 1/2 as θ -> 0.
    let factor = if theta < TAYLOR_SWITCH {
        0.5 + theta * theta / 12.0
    } else {
        theta / (2.0 * theta.sin())
    };
    let anti = r.matrix() - r.matrix().transpose();
    Ok(factor * Vector3::new(anti[(2, 1)], anti[(0, 2)], anti[(1, 0)]))
}

/// Adjoint action of so(3) on itself; equals the cross product, and equals
/// `vee3([hat3(u), hat3(v)])`.
pub fn ad_so3(u: Vector3<f64>, v: Vector3<f64>) -> Vector3<f64> {
    u.cross(&v)
}

/// Frobenius residual of `exp(g ξ) = g exp(ξ) g⁻¹`; the adjoint action of
/// SO(3) on vector coordinates is the matrix itself.
pub fn adjoint_conjugation_check(g: &Rotation3, xi: Vector3<f64>) -> f64 {
    let lhs = exp_so3(g.act(xi));
    let rhs = g.matrix() * exp_so3(xi).matrix() * g.matrix().transpose();
    (lhs.matrix() - rhs).norm()
}

/// Truncated Baker-Campbell-Hausdorff series on so(3):
/// `u + v + [u,v]/2 + [[u,v],v]/12 - [[u,v],u]/12`.
///
/// Valid only inside the trust region `‖u‖, ‖v‖ <= 0.5`; the omitted terms
/// involve brackets of four or more elements.
pub fn bch3(u: Vector3<f64>, v: Vector3<f64>) -> Result<Vector3<f64>, GroupError> {
    for norm in [u.norm(), v.norm()] {
        if norm > 0.5 {
            return Err(GroupError::OutOfTrustRegion { norm });
        }
    }
    let uv = ad_so3(u, v);
    Ok(u + v + 0.5 * uv + (ad_so3(uv, v) - ad_so3(uv, u)) / 12.0)
}

/// Product of the three one-parameter joint rotations: `R_φ` about x, `R_ψ`
/// about y, `R_θ` about z, composed as `R_φ · R_ψ · R_θ`.
pub fn euler_angles_to_rotation(phi: f64, psi: f64, theta: f64) -> Rotation3 {
    let r_phi = Matrix3::new(
        1.0, 0.0, 0.0, //
        0.0, phi.cos(), -phi.sin(), //
        0.0, phi.sin(), phi.cos(),
    );
    let r_psi = Matrix3::new(
        psi.cos(), 0.0, psi.sin(), //
        0.0, 1.0, 0.0, //
        -psi.sin(), 0.0, psi.cos(),
    );
    let r_theta = Matrix3::new(
        theta.cos(), -theta.sin(), 0.0, //
        theta.sin(), theta.cos(), 0.0, //
        0.0, 0.0, 1.0,
    );
    Rotation3::from_matrix_unchecked(r_phi * r_psi * r_theta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn hat3_layout_and_kernel() {
        let w = Vector3::new(1.0, 2.0, 3.0);
        let h = hat3(w);
        let expected = Matrix3::new(0.0, -3.0, 2.0, 3.0, 0.0, -1.0, -2.0, 1.0, 0.0);
        assert_eq!(h, expected);
        assert_eq!(h * w, Vector3::zeros());
        assert_eq!(hat3(Vector3::zeros()), Matrix3::zeros());
    }

    #[test]
    fn vee3_rejects_symmetric_input() {
        let sym = Matrix3::new(1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0);
        assert!(matches!(vee3(&sym), Err(GroupError::NotSkew { .. })));
        assert_eq!(vee3(&Matrix3::zeros()).unwrap(), Vector3::zeros());
    }

    #[test]
    fn vee3_inverts_hat3() {
        let w = Vector3::new(1.0, 2.0, 3.0);
        assert_eq!(vee3(&hat3(w)).unwrap(), w);
    }

    #[test]
    fn exp_of_zero_is_identity() {
        assert_eq!(exp_so3(Vector3::zeros()).matrix(), Rotation3::identity().matrix());
    }

    #[test]
    fn log_of_identity_is_zero() {
        assert_eq!(log_so3(&Rotation3::identity()).unwrap(), Vector3::zeros());
    }

    #[test]
    fn log_rejects_half_turn() {
        // Rotation by pi about z has trace -1.
        let r = exp_so3(Vector3::new(0.0, 0.0, std::f64::consts::PI));
        assert!(matches!(log_so3(&r), Err(GroupError::NearAngleLimit { .. })));
    }

    #[test]
    fn log_inverts_exp() {
        let w = Vector3::new(0.1, 0.2, 0.3);
        let back = log_so3(&exp_so3(w)).unwrap();
        assert_relative_eq!(back, w, epsilon = 1e-10);
    }

    #[test]
    fn rotation_constructor_rejects_non_orthogonal() {
        let m = Matrix3::new(1.0, 0.1, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0);
        assert!(matches!(Rotation3::new(m), Err(GroupError::NotRotation { .. })));
    }

    #[test]
    fn rotation_constructor_rejects_reflection() {
        let m = Matrix3::from_diagonal(&Vector3::new(1.0, 1.0, -1.0));
        assert!(matches!(Rotation3::new(m), Err(GroupError::NotRotation { .. })));
    }

    #[test]
    fn ad_so3_on_basis() {
        let e1 = Vector3::x();
        let e2 = Vector3::y();
        assert_eq!(ad_so3(e1, e2), Vector3::z());
        assert_eq!(ad_so3(e1, e1), Vector3::zeros());
    }

    #[test]
    fn conjugation_residual_vanishes_in_trivial_cases() {
        let g = exp_so3(Vector3::new(0.4, -0.2, 0.9));
        assert_eq!(adjoint_conjugation_check(&Rotation3::identity(), Vector3::new(1.0, 2.0, 3.0)), 0.0);
        assert_relative_eq!(adjoint_conjugation_check(&g, Vector3::zeros()), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn bch3_trust_region_guard() {
        let big = Vector3::new(0.6, 0.0, 0.0);
        let ok = Vector3::new(0.1, 0.0, 0.0);
        assert!(matches!(bch3(big, ok), Err(GroupError::OutOfTrustRegion { .. })));
        assert!(matches!(bch3(ok, big), Err(GroupError::OutOfTrustRegion { .. })));
    }

    #[test]
    fn bch3_reduces_to_sum_for_commuting_arguments() {
        let u = Vector3::new(0.1, 0.0, 0.0);
        let v = Vector3::new(0.2, 0.0, 0.0);
        assert_relative_eq!(bch3(u, v).unwrap(), Vector3::new(0.3, 0.0, 0.0), epsilon = 1e-15);
        assert_eq!(bch3(u, Vector3::zeros()).unwrap(), u);
    }

    #[test]
    fn euler_angles_identity_and_x_quarter_turn() {
        assert_relative_eq!(
            *euler_angles_to_rotation(0.0, 0.0, 0.0).matrix(),
            Matrix3::identity(),
            epsilon = 1e-15
        );
        let r = euler_angles_to_rotation(std::f64::consts::FRAC_PI_2, 0.0, 0.0);
        let expected = Matrix3::new(1.0, 0.0, 0.0, 0.0, 0.0, -1.0, 0.0, 1.0, 0.0);
        assert_relative_eq!(*r.matrix(), expected, epsilon = 1e-15);
    }

    #[test]
    fn euler_angle_product_is_order_sensitive() {
        let half_pi = std::f64::consts::FRAC_PI_2;
        let forward = euler_angles_to_rotation(half_pi, half_pi, 0.0);
        let reversed = euler_angles_to_rotation(0.0, half_pi, 0.0)
            .compose(&euler_angles_to_rotation(half_pi, 0.0, 0.0));
        assert!((forward.matrix() - reversed.matrix()).norm() > 0.5);
    }
}
