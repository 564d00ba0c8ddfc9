use liemech_dynamics::{integrate, kinetic_energy, momenta, BodyParams, BodyState, System};
use nalgebra::{Matrix3, Vector3};

const DT: f64 = 1e-3;
const STEPS: usize = 10_000;

fn drift(series: impl Iterator<Item = f64>) -> f64 {
    let values: Vec<f64> = series.collect();
    let first = values[0];
    values.iter().map(|x| (x - first).abs()).fold(0.0, f64::max)
}

#[test]
fn free_body_conserves_momentum_norm_and_energy() {
    let params = BodyParams::rotor(Vector3::new(1.0, 2.0, 3.0));
    let s0 = BodyState::new(Vector3::zeros(), Vector3::new(1.0, 1.0, 1.0));
    let traj = integrate(&System::FreeEuler, &params, &s0, DT, STEPS).unwrap();
    let pi_sq = drift(traj.samples.iter().map(|s| momenta(&params, &s.state).1.norm_squared()));
    assert!(pi_sq < 1e-8, "momentum drift {pi_sq}");
    let energy = drift(traj.samples.iter().map(|s| kinetic_energy(&params, &s.state)));
    assert!(energy < 1e-8, "energy drift {energy}");
}

#[test]
fn heavy_top_conserves_gamma_norm_and_total_energy() {
    let params = BodyParams::rotor(Vector3::new(1.0, 2.0, 3.0)).with_gravity(1.0, Vector3::z());
    let s0 = BodyState::new(Vector3::zeros(), Vector3::new(0.8, -0.4, 0.6))
        .with_gamma(Vector3::new(2.0 / 3.0, 1.0 / 3.0, 2.0 / 3.0));
    let traj = integrate(&System::HeavyTop, &params, &s0, DT, STEPS).unwrap();
    let gamma_norm =
        drift(traj.samples.iter().map(|s| s.state.gamma.expect("heavy top").norm()));
    assert!(gamma_norm < 1e-8, "gamma drift {gamma_norm}");
    let total = drift(traj.samples.iter().map(|s| {
        kinetic_energy(&params, &s.state) + params.mgl * s.state.gamma.unwrap().dot(&params.chi)
    }));
    assert!(total < 1e-6, "energy drift {total}");
}

#[test]
fn unforced_submarine_conserves_kinetic_energy() {
    let params = BodyParams::new(Vector3::new(1.0, 2.0, 3.0), Vector3::new(4.0, 5.0, 6.0));
    let s0 = BodyState::new(Vector3::new(1.0, 0.0, -1.0), Vector3::new(0.0, 2.0, 1.0));
    let zero = |_: f64| Vector3::zeros();
    let traj =
        integrate(&System::Submarine { force: &zero, torque: &zero }, &params, &s0, DT, STEPS)
            .unwrap();
    let energy = drift(traj.samples.iter().map(|s| kinetic_energy(&params, &s.state)));
    assert!(energy < 1e-8, "energy drift {energy}");
}

#[test]
fn rotations_stay_orthogonal_over_a_hundred_thousand_steps() {
    let params = BodyParams::rotor(Vector3::new(1.0, 2.0, 3.0));
    let s0 = BodyState::new(Vector3::zeros(), Vector3::new(1.0, 1.0, 1.0));
    let traj = integrate(&System::FreeEuler, &params, &s0, DT, 100_000).unwrap();
    let r = traj.samples.last().unwrap().state.pose.rot;
    let residual = (r.matrix().transpose() * r.matrix() - Matrix3::identity()).norm();
    assert!(residual < 1e-9, "orthogonality residual {residual}");
}
