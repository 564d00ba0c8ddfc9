use liemech_groups::Pose3;
use nalgebra::Vector3;

/// Principal masses and inertia moments of a body, with the scenario extras
/// that some systems need: `mgl` and the center-of-mass direction `chi` for
/// the heavy top, the thruster lever arm `h` for the hovercraft.
#[derive(Debug, Clone, PartialEq)]
pub struct BodyParams {
    pub m: Vector3<f64>,
    pub i: Vector3<f64>,
    pub mgl: f64,
    pub chi: Vector3<f64>,
    pub h: f64,
}

impl BodyParams {
    pub fn new(m: Vector3<f64>, i: Vector3<f64>) -> Self {
        assert!(m.iter().all(|&x| x > 0.0), "masses must be positive");
        assert!(i.iter().all(|&x| x > 0.0), "inertias must be positive");
        BodyParams { m, i, mgl: 0.0, chi: Vector3::new(0.0, 0.0, 1.0), h: 0.0 }
    }

    /// Rotation-only body: the mass entries are never read but must stay
    /// positive for the invariants.
    pub fn rotor(i: Vector3<f64>) -> Self {
        BodyParams::new(Vector3::new(1.0, 1.0, 1.0), i)
    }

    pub fn with_gravity(mut self, mgl: f64, chi: Vector3<f64>) -> Self {
        assert!((chi.norm() - 1.0).abs() <= 1e-9, "chi must be a unit vector");
        self.mgl = mgl;
        self.chi = chi;
        self
    }

    pub fn with_lever(mut self, h: f64) -> Self {
        self.h = h;
        self
    }
}

/// Body-frame velocities plus the spatial pose; `gamma` is the body-frame
/// gravity direction and is only present for heavy-top states.
#[derive(Debug, Clone, PartialEq)]
pub struct BodyState {
    pub v: Vector3<f64>,
    pub w: Vector3<f64>,
    pub pose: Pose3,
    pub gamma: Option<Vector3<f64>>,
}

impl BodyState {
    pub fn new(v: Vector3<f64>, w: Vector3<f64>) -> Self {
        BodyState { v, w, pose: Pose3::identity(), gamma: None }
    }

    pub fn with_pose(mut self, pose: Pose3) -> Self {
        self.pose = pose;
        self
    }

    pub fn with_gamma(mut self, gamma: Vector3<f64>) -> Self {
        assert!((gamma.norm() - 1.0).abs() <= 1e-6, "gamma must be a unit vector");
        self.gamma = Some(gamma);
        self
    }
}

/// External force and torque covectors in the body frame.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Wrench {
    pub f: Vector3<f64>,
    pub t: Vector3<f64>,
}

impl Wrench {
    pub fn new(f: Vector3<f64>, t: Vector3<f64>) -> Self {
        Wrench { f, t }
    }

    pub fn zero() -> Self {
        Wrench { f: Vector3::zeros(), t: Vector3::zeros() }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TrajectorySample {
    pub t: f64,
    pub state: BodyState,
    pub wrench: Wrench,
}

/// Uniformly sampled state history; `samples[n].t == n * dt` up to rounding.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub dt: f64,
    pub samples: Vec<TrajectorySample>,
}

impl Trajectory {
    /// Body-frame velocity pairs in sample order.
    pub fn velocities(&self) -> Vec<(Vector3<f64>, Vector3<f64>)> {
        self.samples.iter().map(|s| (s.state.v, s.state.w)).collect()
    }

    pub fn duration(&self) -> f64 {
        self.samples.last().map_or(0.0, |s| s.t)
    }
}
