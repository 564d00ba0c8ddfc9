//! Scenario execution: builds the system from the validated setup, runs it,
//! writes the requested files, and summarizes conservation behavior in a
//! manifest. Everything written here is deterministic: fixed key order,
//! shortest round-trip numbers, and no timestamps, so identical scenarios
//! produce byte-identical files.

use crate::scenario::{
    scenario_digest, ControlRow, OutputKind, Scenario, SystemKind, SystemSetup,
};
use liemech_dynamics::{
    integrate, kinetic_energy, momenta, trajectory_csv, BodyParams, BodyState, DynamicsError,
    System, Trajectory, Wrench,
};
use liemech_jolt::{jolt_report, report_text};
use liemech_symplectic::{flow, particle_hamiltonian, Harmonic, PhasePoint};
use nalgebra::Vector3;
use std::fmt::Write as _;
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum RunError {
    #[error("integration produced a non-finite state at step {step}")]
    Numerical { step: usize },
    #[error("{message}")]
    Domain { message: String },
    #[error("cannot write `{path}`: {source}")]
    Io { path: String, source: std::io::Error },
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunManifest {
    pub tool_version: String,
    pub scenario_digest: String,
    pub system: &'static str,
    pub steps: usize,
    pub outputs: Vec<String>,
    pub conservation: Vec<(String, f64)>,
}

impl RunManifest {
    pub fn text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "tool_version = {}", self.tool_version);
        let _ = writeln!(out, "scenario_digest = {}", self.scenario_digest);
        let _ = writeln!(out, "system = {}", self.system);
        let _ = writeln!(out, "steps = {}", self.steps);
        for name in &self.outputs {
            let _ = writeln!(out, "output = {name}");
        }
        for (key, value) in &self.conservation {
            let _ = writeln!(out, "{key} = {value}");
        }
        out
    }
}

/// Value held by a piecewise-constant table at time t: the last row at or
/// before t, or zeros before the first row.
fn control_at(rows: &[ControlRow], arity: usize, t: f64) -> Vec<f64> {
    rows.iter()
        .rev()
        .find(|row| row.t <= t)
        .map(|row| row.u.clone())
        .unwrap_or_else(|| vec![0.0; arity])
}

fn drift(series: impl Iterator<Item = f64>) -> f64 {
    let mut first = None;
    let mut worst = 0.0f64;
    for x in series {
        let base = *first.get_or_insert(x);
        worst = worst.max((x - base).abs());
    }
    worst
}

fn write_file(outdir: &Path, name: &str, content: &str) -> Result<(), RunError> {
    let path = outdir.join(name);
    std::fs::write(&path, content)
        .map_err(|source| RunError::Io { path: path.display().to_string(), source })
}

fn rigid_target(sc: &Scenario) -> (BodyParams, BodyState) {
    match &sc.setup {
        SystemSetup::FreeEuler { inertia, w0 } | SystemSetup::Satellite { inertia, w0 } => {
            (BodyParams::rotor(*inertia), BodyState::new(Vector3::zeros(), *w0))
        }
        SystemSetup::HeavyTop { inertia, mgl, chi, w0, gamma0 } => (
            BodyParams::rotor(*inertia).with_gravity(*mgl, *chi),
            BodyState::new(Vector3::zeros(), *w0).with_gamma(*gamma0),
        ),
        SystemSetup::Hovercraft { mass, inertia, lever, v0, w0 } => (
            BodyParams::new(
                Vector3::new(*mass, *mass, *mass),
                Vector3::new(*inertia, *inertia, *inertia),
            )
            .with_lever(*lever),
            BodyState::new(Vector3::new(v0.0, v0.1, 0.0), Vector3::new(0.0, 0.0, *w0)),
        ),
        SystemSetup::Submarine { mass, inertia, v0, w0 }
        | SystemSetup::NewtonEuler { mass, inertia, v0, w0 } => {
            (BodyParams::new(*mass, *inertia), BodyState::new(*v0, *w0))
        }
        SystemSetup::HamiltonianParticle { .. } => unreachable!("rigid systems only"),
    }
}

fn conservation_summary(
    sc: &Scenario,
    params: &BodyParams,
    traj: &Trajectory,
) -> Vec<(String, f64)> {
    let mut out = Vec::new();
    match sc.system {
        SystemKind::FreeEuler => {
            out.push((
                "spin_sq_drift".to_string(),
                drift(traj.samples.iter().map(|s| momenta(params, &s.state).1.norm_squared())),
            ));
            out.push((
                "energy_drift".to_string(),
                drift(traj.samples.iter().map(|s| kinetic_energy(params, &s.state))),
            ));
        }
        SystemKind::HeavyTop => {
            out.push((
                "gamma_norm_drift".to_string(),
                drift(traj.samples.iter().map(|s| s.state.gamma.expect("heavy top").norm())),
            ));
            out.push((
                "energy_drift".to_string(),
                drift(traj.samples.iter().map(|s| {
                    kinetic_energy(params, &s.state)
                        + params.mgl * s.state.gamma.expect("heavy top").dot(&params.chi)
                })),
            ));
        }
        _ => {
            out.push((
                "energy_drift".to_string(),
                drift(traj.samples.iter().map(|s| kinetic_energy(params, &s.state))),
            ));
        }
    }
    out
}

fn run_rigid(sc: &Scenario, outdir: &Path) -> Result<RunManifest, RunError> {
    let (params, s0) = rigid_target(sc);
    let rows = &sc.controls;
    let torque3 = |t: f64| {
        let u = control_at(rows, 3, t);
        Vector3::new(u[0], u[1], u[2])
    };
    let force6 = |t: f64| {
        let u = control_at(rows, 6, t);
        Vector3::new(u[0], u[1], u[2])
    };
    let torque6 = |t: f64| {
        let u = control_at(rows, 6, t);
        Vector3::new(u[3], u[4], u[5])
    };
    let wrench6 = |t: f64| {
        let u = control_at(rows, 6, t);
        Wrench::new(Vector3::new(u[0], u[1], u[2]), Vector3::new(u[3], u[4], u[5]))
    };
    let thrust2 = |t: f64| {
        let u = control_at(rows, 2, t);
        (u[0], u[1])
    };
    let system = match sc.system {
        SystemKind::FreeEuler => System::FreeEuler,
        SystemKind::HeavyTop => System::HeavyTop,
        SystemKind::Satellite => System::Satellite { torque: &torque3 },
        SystemKind::Submarine => System::Submarine { force: &force6, torque: &torque6 },
        SystemKind::NewtonEuler => System::NewtonEuler { wrench: &wrench6 },
        SystemKind::Hovercraft => System::Hovercraft { thrust: &thrust2 },
        SystemKind::HamiltonianParticle => unreachable!("rigid systems only"),
    };

    let traj = integrate(&system, &params, &s0, sc.dt, sc.steps).map_err(|e| match e {
        DynamicsError::NonFiniteState { step } => RunError::Numerical { step },
        other => RunError::Domain { message: other.to_string() },
    })?;

    let mut outputs = Vec::new();
    if sc.outputs.contains(&OutputKind::Trajectory) {
        write_file(outdir, "trajectory.csv", &trajectory_csv(&traj))?;
        outputs.push("trajectory.csv".to_string());
    }
    if sc.outputs.contains(&OutputKind::Jolt) {
        let thresholds = sc.thresholds.unwrap_or((f64::INFINITY, f64::INFINITY));
        let report = jolt_report(&traj, &params, thresholds)
            .map_err(|e| RunError::Domain { message: e.to_string() })?;
        let text = report_text(&report);
        let csv_at = text.find("\n\n").expect("report body starts after a blank line") + 2;
        write_file(outdir, "jolt.csv", &text[csv_at..])?;
        outputs.push("jolt.csv".to_string());
        write_file(outdir, "jolt.txt", &text)?;
        outputs.push("jolt.txt".to_string());
    }

    let manifest = RunManifest {
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        scenario_digest: scenario_digest(sc),
        system: sc.system.name(),
        steps: sc.steps,
        outputs,
        conservation: conservation_summary(sc, &params, &traj),
    };
    write_file(outdir, "manifest.txt", &manifest.text())?;
    Ok(manifest)
}

fn phase_csv(path: &[(f64, PhasePoint)]) -> String {
    let n = path[0].1.dim();
    let mut out = String::from("t");
    for i in 1..=n {
        let _ = write!(out, ",q{i}");
    }
    for i in 1..=n {
        let _ = write!(out, ",p{i}");
    }
    out.push('\n');
    for (t, z) in path {
        let _ = write!(out, "{t}");
        for x in z.q.iter().chain(z.p.iter()) {
            let _ = write!(out, ",{x}");
        }
        out.push('\n');
    }
    out
}

fn run_hamiltonian(sc: &Scenario, outdir: &Path) -> Result<RunManifest, RunError> {
    let SystemSetup::HamiltonianParticle { mass, k, q0, p0 } = &sc.setup else {
        unreachable!("dispatched on system kind");
    };
    let h = particle_hamiltonian(*mass, Harmonic { k: *k });
    let z0 = PhasePoint::new(q0.clone(), p0.clone());
    let path = flow(|z| h.grad(z), &z0, sc.dt, sc.steps);
    if let Some(step) = path.iter().position(|(_, z)| {
        !z.q.iter().chain(z.p.iter()).all(|x| x.is_finite())
    }) {
        return Err(RunError::Numerical { step: step.saturating_sub(1) });
    }

    let mut outputs = Vec::new();
    if sc.outputs.contains(&OutputKind::Trajectory) {
        write_file(outdir, "phase.csv", &phase_csv(&path))?;
        outputs.push("phase.csv".to_string());
    }

    let mut conservation =
        vec![("energy_drift".to_string(), drift(path.iter().map(|(_, z)| h.value(z))))];
    if z0.dim() == 2 {
        conservation.push((
            "angular_momentum_drift".to_string(),
            drift(path.iter().map(|(_, z)| {
                liemech_groups::momentum_map_so2(z.q[0], z.q[1], z.p[0], z.p[1])
            })),
        ));
    }

    let manifest = RunManifest {
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        scenario_digest: scenario_digest(sc),
        system: sc.system.name(),
        steps: sc.steps,
        outputs,
        conservation,
    };
    write_file(outdir, "manifest.txt", &manifest.text())?;
    Ok(manifest)
}

/// Runs a validated scenario, writing its files into `outdir` (created if
/// absent) and returning the manifest that was also written there.
pub fn run_scenario(sc: &Scenario, outdir: &Path) -> Result<RunManifest, RunError> {
    std::fs::create_dir_all(outdir)
        .map_err(|source| RunError::Io { path: outdir.display().to_string(), source })?;
    match sc.system {
        SystemKind::HamiltonianParticle => run_hamiltonian(sc, outdir),
        _ => run_rigid(sc, outdir),
    }
}
