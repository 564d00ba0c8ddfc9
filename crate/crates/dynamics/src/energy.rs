use nalgebra::Vector3;

use crate::{BodyParams, BodyState};

/// Total kinetic energy `E = 1/2 v' M v + 1/2 w' I w` with diagonal mass and
/// inertia matrices.
pub fn kinetic_energy(params: &BodyParams, s: &BodyState) -> f64 {
    0.5 * params.m.component_mul(&s.v).dot(&s.v) + 0.5 * params.i.component_mul(&s.w).dot(&s.w)
}

/// Linear and angular momentum covectors `p_k = m_k v_k`, `pi_k = I_k w_k`,
/// the kinetic-energy gradients in `v` and `w`.
pub fn momenta(params: &BodyParams, s: &BodyState) -> (Vector3<f64>, Vector3<f64>) {
    (params.m.component_mul(&s.v), params.i.component_mul(&s.w))
}
