use approx::assert_relative_eq;
use liemech_dynamics::{
    euler_rhs, integrate, kinetic_energy, kirchhoff_submarine_rhs, newton_euler_rhs,
    parse_trajectory_csv, reconstruct_pose, trajectory_csv, BodyParams, BodyState, System, Wrench,
};
use nalgebra::Vector3;
use proptest::prelude::*;

fn vec3(limit: f64) -> impl Strategy<Value = Vector3<f64>> {
    prop::collection::vec(-limit..limit, 3).prop_map(|v| Vector3::new(v[0], v[1], v[2]))
}

fn positive3() -> impl Strategy<Value = Vector3<f64>> {
    prop::collection::vec(0.2f64..4.0, 3).prop_map(|v| Vector3::new(v[0], v[1], v[2]))
}

proptest! {
    #[test]
    fn kinetic_energy_is_positive_off_rest(m in positive3(), i in positive3(), v in vec3(2.0), w in vec3(2.0)) {
        let params = BodyParams::new(m, i);
        let s = BodyState::new(v, w);
        let e = kinetic_energy(&params, &s);
        prop_assert!(e >= 0.0);
        if v.norm() + w.norm() > 1e-6 {
            prop_assert!(e > 0.0);
        }
    }

    #[test]
    fn euler_rhs_is_orthogonal_to_momentum(i in positive3(), w in vec3(2.0)) {
        // d|pi|^2/dt = 2 pi . dpi = 2 pi . (pi x w) = 0.
        let dw = euler_rhs(&i, &w, &Vector3::zeros());
        let pi = i.component_mul(&w);
        let dpi = i.component_mul(&dw);
        prop_assert!(pi.dot(&dpi).abs() < 1e-10 * (1.0 + pi.norm_squared()));
    }

    #[test]
    fn kirchhoff_and_newton_euler_agree_unforced(
        m in positive3(), i in positive3(), v in vec3(2.0), w in vec3(2.0)
    ) {
        let params = BodyParams::new(m, i);
        let s = BodyState::new(v, w);
        let zero = Vector3::zeros();
        let direct = newton_euler_rhs(&params, &s, &Wrench::zero());
        let fluid = kirchhoff_submarine_rhs(&params, &s, (&zero, &zero));
        prop_assert!((direct.0 - fluid.0).norm() < 1e-13);
        prop_assert!((direct.1 - fluid.1).norm() < 1e-13);
    }

    #[test]
    fn trajectory_csv_round_trips(w0 in vec3(1.5), v0 in vec3(1.5), steps in 2usize..20) {
        let params = BodyParams::new(Vector3::new(1.0, 2.0, 3.0), Vector3::new(4.0, 5.0, 6.0));
        let s0 = BodyState::new(v0, w0);
        let wrench = |_: f64| Wrench::zero();
        let traj = integrate(&System::NewtonEuler { wrench: &wrench }, &params, &s0, 0.01, steps).unwrap();
        let text = trajectory_csv(&traj);
        let back = parse_trajectory_csv(&text).unwrap();
        prop_assert_eq!(back.samples.len(), traj.samples.len());
        for (a, b) in traj.samples.iter().zip(&back.samples) {
            // Shortest round-trip formatting reproduces every float exactly;
            // only the rotation passes through a quaternion.
            prop_assert_eq!(a.t, b.t);
            prop_assert_eq!(a.state.v, b.state.v);
            prop_assert_eq!(a.state.w, b.state.w);
            prop_assert_eq!(a.state.pose.p, b.state.pose.p);
            let gap = (a.state.pose.rot.matrix() - b.state.pose.rot.matrix()).norm();
            prop_assert!(gap < 1e-12);
        }
        // Re-serialization is byte-identical except in the quaternion block,
        // which passes through a rotation matrix and may move in the last ulp.
        let again = trajectory_csv(&back);
        for (line_a, line_b) in text.lines().zip(again.lines()) {
            let fields_a: Vec<&str> = line_a.split(',').collect();
            let fields_b: Vec<&str> = line_b.split(',').collect();
            for k in (0..7).chain(11..14) {
                prop_assert_eq!(fields_a.get(k), fields_b.get(k));
            }
        }
    }

    #[test]
    fn reconstruction_matches_the_integrated_pose(w0 in vec3(1.0), v0 in vec3(1.0)) {
        let params = BodyParams::new(Vector3::new(1.0, 2.0, 3.0), Vector3::new(4.0, 5.0, 6.0));
        let s0 = BodyState::new(v0, w0);
        let wrench = |_: f64| Wrench::zero();
        let traj = integrate(&System::NewtonEuler { wrench: &wrench }, &params, &s0, 0.01, 50).unwrap();
        let poses = reconstruct_pose(&traj.velocities(), &traj.samples[0].state.pose, traj.dt);
        let last = traj.samples.last().unwrap();
        assert_relative_eq!(
            *poses.last().unwrap().rot.matrix(),
            *last.state.pose.rot.matrix(),
            epsilon = 1e-12
        );
        assert_relative_eq!(poses.last().unwrap().p, last.state.pose.p, epsilon = 1e-12);
    }
}
