use liemech_groups::{exp_so3, Pose3};
use nalgebra::{DVector, Vector3};

use crate::rhs::{
    euler_rhs, heavy_top_rhs, hovercraft_rhs, kirchhoff_submarine_rhs, satellite_rhs,
};
use crate::{BodyParams, BodyState, DynamicsError, Trajectory, TrajectorySample, Wrench};

/// Right-hand-side selector. Control signals are sampled at the integrator's
/// internal sub-steps, so time-varying inputs keep the method's full order.
pub enum System<'a> {
    FreeEuler,
    ForcedEuler { torque: &'a dyn Fn(f64) -> Vector3<f64> },
    HeavyTop,
    NewtonEuler { wrench: &'a dyn Fn(f64) -> Wrench },
    Submarine {
        force: &'a dyn Fn(f64) -> Vector3<f64>,
        torque: &'a dyn Fn(f64) -> Vector3<f64>,
    },
    Satellite { torque: &'a dyn Fn(f64) -> Vector3<f64> },
    Hovercraft { thrust: &'a dyn Fn(f64) -> (f64, f64) },
}

/// One classical fourth-order step of `dy/dt = f(t, y)`.
pub fn rk4_step<F>(f: &mut F, t: f64, y: &DVector<f64>, dt: f64) -> DVector<f64>
where
    F: FnMut(f64, &DVector<f64>) -> DVector<f64>,
{
    let k1 = f(t, y);
    let k2 = f(t + 0.5 * dt, &(y + &k1 * (0.5 * dt)));
    let k3 = f(t + 0.5 * dt, &(y + &k2 * (0.5 * dt)));
    let k4 = f(t + dt, &(y + &k3 * dt));
    y + (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (dt / 6.0)
}

fn vec3(y: &DVector<f64>, at: usize) -> Vector3<f64> {
    Vector3::new(y[at], y[at + 1], y[at + 2])
}

fn pack(system: &System, s0: &BodyState, params: &BodyParams) -> Result<DVector<f64>, DynamicsError> {
    Ok(match system {
        System::FreeEuler | System::ForcedEuler { .. } | System::Satellite { .. } => {
            DVector::from_column_slice(s0.w.as_slice())
        }
        System::HeavyTop => {
            let gamma = s0.gamma.ok_or(DynamicsError::MissingGamma)?;
            let p = params.i.component_mul(&s0.w);
            DVector::from_vec(vec![p.x, p.y, p.z, gamma.x, gamma.y, gamma.z])
        }
        System::NewtonEuler { .. } | System::Submarine { .. } => {
            DVector::from_vec(vec![s0.v.x, s0.v.y, s0.v.z, s0.w.x, s0.w.y, s0.w.z])
        }
        System::Hovercraft { .. } => DVector::from_vec(vec![s0.v.x, s0.v.y, s0.w.z]),
    })
}

fn deriv(system: &System, params: &BodyParams, t: f64, y: &DVector<f64>) -> DVector<f64> {
    match system {
        System::FreeEuler => {
            let dw = euler_rhs(&params.i, &vec3(y, 0), &Vector3::zeros());
            DVector::from_column_slice(dw.as_slice())
        }
        System::ForcedEuler { torque } => {
            let dw = euler_rhs(&params.i, &vec3(y, 0), &torque(t));
            DVector::from_column_slice(dw.as_slice())
        }
        System::Satellite { torque } => {
            let dw = satellite_rhs(&params.i, &vec3(y, 0), &torque(t));
            DVector::from_column_slice(dw.as_slice())
        }
        System::HeavyTop => {
            let p = vec3(y, 0);
            let state = BodyState {
                v: Vector3::zeros(),
                w: p.component_div(&params.i),
                pose: Pose3::identity(),
                gamma: Some(vec3(y, 3)),
            };
            let (dp, dgamma) = heavy_top_rhs(&state, params).expect("gamma packed");
            DVector::from_vec(vec![dp.x, dp.y, dp.z, dgamma.x, dgamma.y, dgamma.z])
        }
        System::NewtonEuler { wrench } => {
            let state = BodyState::new(vec3(y, 0), vec3(y, 3));
            let (dv, dw) = crate::newton_euler_rhs(params, &state, &wrench(t));
            DVector::from_vec(vec![dv.x, dv.y, dv.z, dw.x, dw.y, dw.z])
        }
        System::Submarine { force, torque } => {
            let state = BodyState::new(vec3(y, 0), vec3(y, 3));
            let (dv, dw) = kirchhoff_submarine_rhs(params, &state, (&force(t), &torque(t)));
            DVector::from_vec(vec![dv.x, dv.y, dv.z, dw.x, dw.y, dw.z])
        }
        System::Hovercraft { thrust } => {
            let ds = hovercraft_rhs(params.m.x, params.i.z, &vec3(y, 0), thrust(t), params.h);
            DVector::from_column_slice(ds.as_slice())
        }
    }
}

/// Body-frame velocity pair represented by a packed state.
fn velocities(system: &System, s0: &BodyState, params: &BodyParams, y: &DVector<f64>) -> (Vector3<f64>, Vector3<f64>) {
    match system {
        System::FreeEuler | System::ForcedEuler { .. } | System::Satellite { .. } => {
            (s0.v, vec3(y, 0))
        }
        System::HeavyTop => (s0.v, vec3(y, 0).component_div(&params.i)),
        System::NewtonEuler { .. } | System::Submarine { .. } => (vec3(y, 0), vec3(y, 3)),
        System::Hovercraft { .. } => {
            (Vector3::new(y[0], y[1], 0.0), Vector3::new(0.0, 0.0, y[2]))
        }
    }
}

fn applied_wrench(system: &System, params: &BodyParams, t: f64) -> Wrench {
    match system {
        System::FreeEuler | System::HeavyTop => Wrench::zero(),
        System::ForcedEuler { torque } | System::Satellite { torque } => {
            Wrench::new(Vector3::zeros(), torque(t))
        }
        System::NewtonEuler { wrench } => wrench(t),
        System::Submarine { force, torque } => Wrench::new(force(t), torque(t)),
        System::Hovercraft { thrust } => {
            let (u1, u2) = thrust(t);
            Wrench::new(Vector3::new(u1, u2, 0.0), Vector3::new(0.0, 0.0, -params.h * u2))
        }
    }
}

fn step_pose(pose: &Pose3, v_mid: Vector3<f64>, w_mid: Vector3<f64>, dt: f64) -> Pose3 {
    let rot = pose.rot.compose(&exp_so3(w_mid * dt));
    let p = pose.p + rot.act(v_mid) * dt;
    Pose3::new(rot, p)
}

fn sample(
    system: &System,
    params: &BodyParams,
    s0: &BodyState,
    t: f64,
    y: &DVector<f64>,
    pose: &Pose3,
) -> TrajectorySample {
    let (v, w) = velocities(system, s0, params, y);
    let gamma = match system {
        System::HeavyTop => Some(vec3(y, 3)),
        _ => s0.gamma,
    };
    TrajectorySample {
        t,
        state: BodyState { v, w, pose: *pose, gamma },
        wrench: applied_wrench(system, params, t),
    }
}

/// Fixed-step integration with the classical fourth-order method, advancing
/// the pose alongside the state by the group exponential of the midpoint
/// velocity. Fails if any state component stops being finite.
pub fn integrate(
    system: &System,
    params: &BodyParams,
    s0: &BodyState,
    dt: f64,
    steps: usize,
) -> Result<Trajectory, DynamicsError> {
    assert!(dt > 0.0, "dt must be positive");
    assert!(steps >= 1, "need at least one step");
    let mut y = pack(system, s0, params)?;
    let mut pose = s0.pose;
    let mut samples = Vec::with_capacity(steps + 1);
    samples.push(sample(system, params, s0, 0.0, &y, &pose));
    for step in 0..steps {
        let t = step as f64 * dt;
        let next = rk4_step(&mut |tt, yy| deriv(system, params, tt, yy), t, &y, dt);
        if !next.iter().all(|x| x.is_finite()) {
            return Err(DynamicsError::NonFiniteState { step });
        }
        let (v0, w0) = velocities(system, s0, params, &y);
        let (v1, w1) = velocities(system, s0, params, &next);
        pose = step_pose(&pose, (v0 + v1) * 0.5, (w0 + w1) * 0.5, dt);
        y = next;
        samples.push(sample(system, params, s0, (step + 1) as f64 * dt, &y, &pose));
    }
    Ok(Trajectory { dt, samples })
}

/// Rebuilds the pose series from sampled body velocities: per step the
/// rotation advances by the exponential of the midpoint angular velocity and
/// the translation by the rotated midpoint linear velocity.
pub fn reconstruct_pose(
    velocities: &[(Vector3<f64>, Vector3<f64>)],
    pose0: &Pose3,
    dt: f64,
) -> Vec<Pose3> {
    assert!(dt > 0.0, "dt must be positive");
    let mut out = Vec::with_capacity(velocities.len());
    out.push(*pose0);
    for pair in velocities.windows(2) {
        let v_mid = (pair[0].0 + pair[1].0) * 0.5;
        let w_mid = (pair[0].1 + pair[1].1) * 0.5;
        out.push(step_pose(out.last().unwrap(), v_mid, w_mid, dt));
    }
    out
}
