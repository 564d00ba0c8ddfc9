use std::fmt::Write as _;

use liemech_dynamics::{BodyParams, Trajectory};

use crate::derivatives::{derivatives_from_trajectory, KinematicDerivatives};
use crate::JoltError;

/// Force-rate and torque-rate covectors at one instant, with their norms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JoltSample {
    pub t: f64,
    pub f_dot: nalgebra::Vector3<f64>,
    pub t_dot: nalgebra::Vector3<f64>,
    pub f_norm: f64,
    pub t_norm: f64,
}

/// Jolt series with its peaks and the intervals where a norm exceeds the
/// configured threshold.
#[derive(Debug, Clone, PartialEq)]
pub struct JoltReport {
    pub samples: Vec<JoltSample>,
    /// `(time, value)` of the largest force-rate norm, earliest on ties.
    pub peak_f: (f64, f64),
    pub peak_t: (f64, f64),
    pub thresholds: (f64, f64),
    pub f_exceedances: Vec<(f64, f64)>,
    pub t_exceedances: Vec<(f64, f64)>,
}

/// Rate of the body-frame force and torque covectors for the momenta
/// `p = Mv`, `pi = Iw`:
/// `dF = ddp - dp x w - p x dw` and
/// `dT = ddpi - dpi x w - pi x dw - dp x v - p x dv`.
pub fn se3_jolt(params: &BodyParams, k: &KinematicDerivatives) -> JoltSample {
    let p = params.m.component_mul(&k.v);
    let dp = params.m.component_mul(&k.a_v);
    let ddp = params.m.component_mul(&k.j_v);
    let pi = params.i.component_mul(&k.w);
    let dpi = params.i.component_mul(&k.a_w);
    let ddpi = params.i.component_mul(&k.j_w);
    let f_dot = ddp - dp.cross(&k.w) - p.cross(&k.a_w);
    let t_dot = ddpi - dpi.cross(&k.w) - pi.cross(&k.a_w) - dp.cross(&k.v) - p.cross(&k.a_v);
    JoltSample { t: k.t, f_dot, t_dot, f_norm: f_dot.norm(), t_norm: t_dot.norm() }
}

pub mod internals {
    use super::*;

    pub fn jolt_series_seq(params: &BodyParams, derivs: &[KinematicDerivatives]) -> Vec<JoltSample> {
        derivs.iter().map(|k| se3_jolt(params, k)).collect()
    }

    #[cfg(feature = "parallel")]
    pub fn jolt_series_par(params: &BodyParams, derivs: &[KinematicDerivatives]) -> Vec<JoltSample> {
        use rayon::prelude::*;
        derivs.par_iter().map(|k| se3_jolt(params, k)).collect()
    }
}

/// Largest value with its time, keeping the earliest time on ties.
fn peak(samples: &[JoltSample], norm: impl Fn(&JoltSample) -> f64) -> (f64, f64) {
    let mut best = (samples[0].t, norm(&samples[0]));
    for s in &samples[1..] {
        if norm(s) > best.1 {
            best = (s.t, norm(s));
        }
    }
    (best.0, best.1)
}

/// Maximal runs of consecutive samples whose norm exceeds the threshold,
/// reported as `(start time, end time)`.
fn exceedances(
    samples: &[JoltSample],
    threshold: f64,
    norm: impl Fn(&JoltSample) -> f64,
) -> Vec<(f64, f64)> {
    let mut out = Vec::new();
    let mut open: Option<(f64, f64)> = None;
    for s in samples {
        if norm(s) > threshold {
            open = Some(match open {
                None => (s.t, s.t),
                Some((start, _)) => (start, s.t),
            });
        } else if let Some(run) = open.take() {
            out.push(run);
        }
    }
    if let Some(run) = open {
        out.push(run);
    }
    out
}

/// Differentiates the trajectory and evaluates the jolt at every sample.
/// `thresholds` are the `(force rate, torque rate)` norms above which an
/// interval counts as an exceedance; pass infinity to disable screening.
pub fn jolt_report(
    traj: &Trajectory,
    params: &BodyParams,
    thresholds: (f64, f64),
) -> Result<JoltReport, JoltError> {
    let derivs = derivatives_from_trajectory(traj)?;
    #[cfg(feature = "parallel")]
    let samples = internals::jolt_series_par(params, &derivs);
    #[cfg(not(feature = "parallel"))]
    let samples = internals::jolt_series_seq(params, &derivs);
    let peak_f = peak(&samples, |s| s.f_norm);
    let peak_t = peak(&samples, |s| s.t_norm);
    let f_exceedances = exceedances(&samples, thresholds.0, |s| s.f_norm);
    let t_exceedances = exceedances(&samples, thresholds.1, |s| s.t_norm);
    Ok(JoltReport { samples, peak_f, peak_t, thresholds, f_exceedances, t_exceedances })
}

fn intervals_text(intervals: &[(f64, f64)]) -> String {
    intervals
        .iter()
        .map(|(a, b)| format!("{a}..{b}"))
        .collect::<Vec<_>>()
        .join(";")
}

/// Deterministic text form: a key=value header block, a blank line, then the
/// per-sample CSV body.
pub fn report_text(report: &JoltReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "peak_fdot_norm={}", report.peak_f.1);
    let _ = writeln!(out, "peak_fdot_time={}", report.peak_f.0);
    let _ = writeln!(out, "peak_tdot_norm={}", report.peak_t.1);
    let _ = writeln!(out, "peak_tdot_time={}", report.peak_t.0);
    let _ = writeln!(out, "threshold_fdot={}", report.thresholds.0);
    let _ = writeln!(out, "threshold_tdot={}", report.thresholds.1);
    let _ = writeln!(out, "fdot_exceedances={}", intervals_text(&report.f_exceedances));
    let _ = writeln!(out, "tdot_exceedances={}", intervals_text(&report.t_exceedances));
    out.push('\n');
    out.push_str("t,Fdot_x,Fdot_y,Fdot_z,Tdot_x,Tdot_y,Tdot_z,Fdot_norm,Tdot_norm\n");
    for s in &report.samples {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{}",
            s.t,
            s.f_dot.x,
            s.f_dot.y,
            s.f_dot.z,
            s.t_dot.x,
            s.t_dot.y,
            s.t_dot.z,
            s.f_norm,
            s.t_norm
        );
    }
    out
}
