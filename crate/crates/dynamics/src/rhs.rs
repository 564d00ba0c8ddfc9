use nalgebra::Vector3;

use crate::{BodyParams, BodyState, DynamicsError, Wrench};

/// Euler's rotation equations `I_k dw_k = (I_next - I_prev) w_next w_prev + T_k`
/// written out per component.
pub fn euler_rhs(i: &Vector3<f64>, w: &Vector3<f64>, t: &Vector3<f64>) -> Vector3<f64> {
    Vector3::new(
        ((i.y - i.z) * w.y * w.z + t.x) / i.x,
        ((i.z - i.x) * w.z * w.x + t.y) / i.y,
        ((i.x - i.y) * w.x * w.y + t.z) / i.z,
    )
}

/// Heavy-top equations in momentum variables: returns `(dp, dGamma)` where
/// `p_k = I_k w_k` and `Gamma` is the body-frame gravity direction. The
/// momentum coupling uses the inertia-ratio form and the torque is
/// `Mgl (Gamma x chi)`; `dGamma = Gamma x Omega` with `Omega_k = p_k / I_k`.
pub fn heavy_top_rhs(
    s: &BodyState,
    params: &BodyParams,
) -> Result<(Vector3<f64>, Vector3<f64>), DynamicsError> {
    let gamma = s.gamma.ok_or(DynamicsError::MissingGamma)?;
    let i = &params.i;
    let (mgl, chi) = (params.mgl, &params.chi);
    let p = params.i.component_mul(&s.w);
    let dp = Vector3::new(
        (i.y - i.z) / (i.y * i.z) * p.y * p.z + mgl * (gamma.y * chi.z - gamma.z * chi.y),
        (i.z - i.x) / (i.z * i.x) * p.z * p.x + mgl * (gamma.z * chi.x - gamma.x * chi.z),
        (i.x - i.y) / (i.x * i.y) * p.x * p.y + mgl * (gamma.x * chi.y - gamma.y * chi.x),
    );
    let omega = p.component_div(i);
    Ok((dp, gamma.cross(&omega)))
}

/// Coupled Newton–Euler equations, written out in the printed scalar form:
/// `m_k dv_k` picks up the momentum–rotation coupling and `I_k dw_k` both the
/// inertia and mass asymmetries.
pub fn newton_euler_rhs(
    params: &BodyParams,
    s: &BodyState,
    wr: &Wrench,
) -> (Vector3<f64>, Vector3<f64>) {
    let (m, i) = (&params.m, &params.i);
    let (v, w) = (&s.v, &s.w);
    let dv = Vector3::new(
        (wr.f.x - m.z * v.z * w.y + m.y * v.y * w.z) / m.x,
        (wr.f.y - m.x * v.x * w.z + m.z * v.z * w.x) / m.y,
        (wr.f.z - m.y * v.y * w.x + m.x * v.x * w.y) / m.z,
    );
    let dw = Vector3::new(
        (wr.t.x + (m.y - m.z) * v.y * v.z + (i.y - i.z) * w.y * w.z) / i.x,
        (wr.t.y + (m.z - m.x) * v.z * v.x + (i.z - i.x) * w.z * w.x) / i.y,
        (wr.t.z + (m.x - m.y) * v.x * v.y + (i.x - i.y) * w.x * w.y) / i.z,
    );
    (dv, dw)
}

/// Kirchhoff equations for a body in ideal fluid, in the vector form
/// `M dv = Mv x w + f`, `I dw = Iw x w + Mv x v + tau`. The unforced case
/// coincides with `newton_euler_rhs` under zero wrench; keeping the two
/// routes separate lets tests cross-check them.
pub fn kirchhoff_submarine_rhs(
    params: &BodyParams,
    s: &BodyState,
    controls: (&Vector3<f64>, &Vector3<f64>),
) -> (Vector3<f64>, Vector3<f64>) {
    let p = params.m.component_mul(&s.v);
    let pi = params.i.component_mul(&s.w);
    let dv = (p.cross(&s.w) + controls.0).component_div(&params.m);
    let dw = (pi.cross(&s.w) + p.cross(&s.v) + controls.1).component_div(&params.i);
    (dv, dw)
}

/// Planar hovercraft with a single stern thruster at lever arm `h`: the state
/// is `(v_x, v_y, w)` and the torque of the transverse thrust is `-h u_2`.
pub fn hovercraft_rhs(
    m: f64,
    i: f64,
    s: &Vector3<f64>,
    u: (f64, f64),
    h: f64,
) -> Vector3<f64> {
    assert!(m > 0.0 && i > 0.0, "mass and inertia must be positive");
    let (vx, vy, w) = (s.x, s.y, s.z);
    Vector3::new(w * vy + u.0 / m, -w * vx + u.1 / m, -h * u.1 / i)
}

/// Satellite attitude dynamics `I dw = Iw x w + tau`, in cross-product form;
/// agrees with `euler_rhs` once the torque is identified.
pub fn satellite_rhs(i: &Vector3<f64>, w: &Vector3<f64>, tau: &Vector3<f64>) -> Vector3<f64> {
    let pi = i.component_mul(w);
    (pi.cross(w) + tau).component_div(i)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn params_123_456() -> BodyParams {
        BodyParams::new(Vector3::new(1.0, 2.0, 3.0), Vector3::new(4.0, 5.0, 6.0))
    }

    #[test]
    fn euler_rhs_matches_hand_substitution() {
        let dw = euler_rhs(
            &Vector3::new(1.0, 2.0, 3.0),
            &Vector3::new(1.0, 1.0, 1.0),
            &Vector3::zeros(),
        );
        assert_eq!(dw, Vector3::new(-1.0, 1.0, -1.0 / 3.0));
    }

    #[test]
    fn principal_axis_spin_is_stationary() {
        let i = Vector3::new(1.0, 2.0, 3.0);
        for axis in [Vector3::x(), Vector3::y(), Vector3::z()] {
            assert_eq!(euler_rhs(&i, &(2.5 * axis), &Vector3::zeros()), Vector3::zeros());
        }
    }

    #[test]
    fn symmetric_body_has_no_free_dynamics() {
        let dw = euler_rhs(
            &Vector3::new(2.0, 2.0, 2.0),
            &Vector3::new(0.3, -0.7, 1.1),
            &Vector3::zeros(),
        );
        assert_eq!(dw, Vector3::zeros());
    }

    #[test]
    fn both_printed_sign_arrangements_agree() {
        // Forced form: I1 dw1 + (I3 - I2) w2 w3 = T1, terms moved across the
        // equals sign relative to the unforced (I2 - I3) arrangement.
        let i = Vector3::new(1.5, 2.5, 4.0);
        let w = Vector3::new(0.2, -0.4, 0.9);
        let t = Vector3::new(0.3, 0.1, -0.2);
        let dw = euler_rhs(&i, &w, &t);
        let forced = Vector3::new(
            (t.x - (i.z - i.y) * w.y * w.z) / i.x,
            (t.y - (i.x - i.z) * w.z * w.x) / i.y,
            (t.z - (i.y - i.x) * w.x * w.y) / i.z,
        );
        assert_eq!(dw, forced);
    }

    #[test]
    fn heavy_top_needs_gamma() {
        let s = BodyState::new(Vector3::zeros(), Vector3::new(1.0, 0.0, 0.0));
        let params = BodyParams::rotor(Vector3::new(1.0, 2.0, 3.0));
        assert_eq!(heavy_top_rhs(&s, &params), Err(DynamicsError::MissingGamma));
    }

    #[test]
    fn parallel_gamma_and_spin_freeze_gamma() {
        let params = BodyParams::rotor(Vector3::new(1.0, 2.0, 3.0)).with_gravity(2.0, Vector3::z());
        let s = BodyState::new(Vector3::zeros(), Vector3::new(0.0, 0.0, 5.0))
            .with_gamma(Vector3::z());
        let (_, dgamma) = heavy_top_rhs(&s, &params).unwrap();
        assert_eq!(dgamma, Vector3::zeros());
    }

    #[test]
    fn zero_gravity_reduces_to_euler_in_momentum_form() {
        let i = Vector3::new(1.0, 2.0, 3.0);
        let params = BodyParams::rotor(i).with_gravity(0.0, Vector3::z());
        let w = Vector3::new(0.4, -0.2, 0.7);
        let s = BodyState::new(Vector3::zeros(), w).with_gamma(Vector3::x());
        let (dp, _) = heavy_top_rhs(&s, &params).unwrap();
        let expected = i.component_mul(&euler_rhs(&i, &w, &Vector3::zeros()));
        assert_relative_eq!(dp, expected, epsilon = 1e-15);
    }

    #[test]
    fn heavy_top_matches_hand_substitution() {
        let params = BodyParams::rotor(Vector3::new(1.0, 2.0, 3.0)).with_gravity(2.0, Vector3::z());
        // p = (1,1,1), so w = (1, 1/2, 1/3).
        let s = BodyState::new(Vector3::zeros(), Vector3::new(1.0, 0.5, 1.0 / 3.0))
            .with_gamma(Vector3::x());
        let (dp, dgamma) = heavy_top_rhs(&s, &params).unwrap();
        assert_relative_eq!(
            dp,
            Vector3::new(-1.0 / 6.0, 2.0 / 3.0 - 2.0, -0.5),
            epsilon = 1e-15
        );
        assert_relative_eq!(dgamma, Vector3::new(0.0, -1.0 / 3.0, 0.5), epsilon = 1e-15);
    }

    #[test]
    fn rest_state_accelerates_by_inverse_inertia() {
        let params = params_123_456();
        let wr = Wrench::new(Vector3::new(2.0, 4.0, 9.0), Vector3::new(4.0, 10.0, 18.0));
        let s = BodyState::new(Vector3::zeros(), Vector3::zeros());
        let (dv, dw) = newton_euler_rhs(&params, &s, &wr);
        assert_eq!(dv, Vector3::new(2.0, 2.0, 3.0));
        assert_eq!(dw, Vector3::new(1.0, 2.0, 3.0));
    }

    #[test]
    fn equal_masses_decouple_rotation_from_translation() {
        let params = BodyParams::new(Vector3::new(2.0, 2.0, 2.0), Vector3::new(4.0, 5.0, 6.0));
        let w = Vector3::new(0.3, -0.1, 0.8);
        let with_motion =
            newton_euler_rhs(&params, &BodyState::new(Vector3::new(1.0, -2.0, 0.5), w), &Wrench::zero());
        let at_rest = newton_euler_rhs(&params, &BodyState::new(Vector3::zeros(), w), &Wrench::zero());
        assert_eq!(with_motion.1, at_rest.1);
    }

    #[test]
    fn equal_masses_kill_the_kirchhoff_momentum_torque() {
        let params = BodyParams::new(Vector3::new(2.0, 2.0, 2.0), Vector3::new(4.0, 5.0, 6.0));
        let v = Vector3::new(1.0, -2.0, 0.5);
        let s = BodyState::new(v, Vector3::zeros());
        let zero = Vector3::zeros();
        let (_, dw) = kirchhoff_submarine_rhs(&params, &s, (&zero, &zero));
        assert_eq!(dw, Vector3::zeros());
    }

    #[test]
    fn drifting_submarine_reduces_to_free_euler() {
        let params = params_123_456();
        let w = Vector3::new(0.5, -0.3, 0.2);
        let s = BodyState::new(Vector3::zeros(), w);
        let zero = Vector3::zeros();
        let (dv, dw) = kirchhoff_submarine_rhs(&params, &s, (&zero, &zero));
        assert_eq!(dv, Vector3::zeros());
        assert_relative_eq!(dw, euler_rhs(&params.i, &w, &Vector3::zeros()), epsilon = 1e-15);
    }

    #[test]
    fn hovercraft_hand_values() {
        assert_eq!(
            hovercraft_rhs(2.0, 1.0, &Vector3::new(1.0, 0.0, 1.0), (0.0, 0.0), 0.5),
            Vector3::new(0.0, -1.0, 0.0)
        );
        assert_eq!(
            hovercraft_rhs(1.0, 2.0, &Vector3::zeros(), (0.0, 1.0), 0.5),
            Vector3::new(0.0, 1.0, -0.25)
        );
        assert_eq!(hovercraft_rhs(1.0, 1.0, &Vector3::zeros(), (0.0, 0.0), 0.5), Vector3::zeros());
    }

    #[test]
    fn satellite_agrees_with_euler_form() {
        let i = Vector3::new(1.0, 2.0, 3.0);
        let w = Vector3::new(1.0, 1.0, 1.0);
        assert_relative_eq!(
            satellite_rhs(&i, &w, &Vector3::zeros()),
            Vector3::new(-1.0, 1.0, -1.0 / 3.0),
            epsilon = 1e-15
        );
        let tau = Vector3::new(3.0, -2.0, 6.0);
        assert_eq!(
            satellite_rhs(&i, &Vector3::zeros(), &tau),
            Vector3::new(3.0, -1.0, 2.0)
        );
    }
}
