use liemech_dynamics::Trajectory;
use nalgebra::Vector3;

use crate::JoltError;

/// Body-frame velocities with their first and second time derivatives at one
/// sample instant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KinematicDerivatives {
    pub t: f64,
    pub v: Vector3<f64>,
    pub w: Vector3<f64>,
    pub a_v: Vector3<f64>,
    pub a_w: Vector3<f64>,
    pub j_v: Vector3<f64>,
    pub j_w: Vector3<f64>,
}

/// Second-order first derivative: central in the interior, one-sided
/// three-point stencils at the ends.
fn first_derivative(f: &[Vector3<f64>], dt: f64) -> Vec<Vector3<f64>> {
    let n = f.len();
    let mut out = Vec::with_capacity(n);
    out.push((-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * dt));
    for k in 1..n - 1 {
        out.push((f[k + 1] - f[k - 1]) / (2.0 * dt));
    }
    out.push((3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) / (2.0 * dt));
    out
}

/// Second-order second derivative taken directly on the samples; exact on
/// cubics, unlike two chained first-derivative passes whose boundary biases
/// would not cancel.
fn second_derivative(f: &[Vector3<f64>], dt: f64) -> Vec<Vector3<f64>> {
    let n = f.len();
    let dt2 = dt * dt;
    let mut out = Vec::with_capacity(n);
    out.push((2.0 * f[0] - 5.0 * f[1] + 4.0 * f[2] - f[3]) / dt2);
    for k in 1..n - 1 {
        out.push((f[k + 1] - 2.0 * f[k] + f[k - 1]) / dt2);
    }
    out.push((2.0 * f[n - 1] - 5.0 * f[n - 2] + 4.0 * f[n - 3] - f[n - 4]) / dt2);
    out
}

/// Differentiates the sampled body velocities twice. Needs at least five
/// uniformly spaced samples for the boundary stencils.
pub fn derivatives_from_trajectory(
    traj: &Trajectory,
) -> Result<Vec<KinematicDerivatives>, JoltError> {
    let n = traj.samples.len();
    if n < 5 {
        return Err(JoltError::TooFewSamples { got: n });
    }
    for (index, pair) in traj.samples.windows(2).enumerate() {
        let gap = pair[1].t - pair[0].t;
        if (gap - traj.dt).abs() > 1e-6 * traj.dt {
            return Err(JoltError::NonUniformDt { index: index + 1 });
        }
    }
    let v: Vec<Vector3<f64>> = traj.samples.iter().map(|s| s.state.v).collect();
    let w: Vec<Vector3<f64>> = traj.samples.iter().map(|s| s.state.w).collect();
    let a_v = first_derivative(&v, traj.dt);
    let a_w = first_derivative(&w, traj.dt);
    let j_v = second_derivative(&v, traj.dt);
    let j_w = second_derivative(&w, traj.dt);
    Ok((0..n)
        .map(|k| KinematicDerivatives {
            t: traj.samples[k].t,
            v: v[k],
            w: w[k],
            a_v: a_v[k],
            a_w: a_w[k],
            j_v: j_v[k],
            j_w: j_w[k],
        })
        .collect())
}
