use liemech_groups::{Pose3, Quaternion};
use nalgebra::Vector3;

use crate::{BodyState, DynamicsError, Trajectory, TrajectorySample, Wrench};

pub const TRAJECTORY_HEADER: &str = "t,vx,vy,vz,wx,wy,wz,qw,qx,qy,qz,px,py,pz";

/// Serializes a trajectory with the pose as unit quaternion plus translation.
/// Numbers print in shortest round-trip form, so identical trajectories give
/// byte-identical text.
pub fn trajectory_csv(traj: &Trajectory) -> String {
    let mut out = String::from(TRAJECTORY_HEADER);
    out.push('\n');
    for s in &traj.samples {
        let q = Quaternion::from_rotation(&s.state.pose.rot);
        let fields = [
            s.t,
            s.state.v.x,
            s.state.v.y,
            s.state.v.z,
            s.state.w.x,
            s.state.w.y,
            s.state.w.z,
            q.scalar,
            q.vector.x,
            q.vector.y,
            q.vector.z,
            s.state.pose.p.x,
            s.state.pose.p.y,
            s.state.pose.p.z,
        ];
        let line: Vec<String> = fields.iter().map(|x| format!("{x}")).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}

/// Reads a trajectory written by `trajectory_csv` (or any capture with the
/// same header). Wrenches are not part of the format and come back zero.
pub fn parse_trajectory_csv(text: &str) -> Result<Trajectory, DynamicsError> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, header)) if header.trim() == TRAJECTORY_HEADER => {}
        _ => return Err(DynamicsError::CsvHeader),
    }
    let mut samples = Vec::new();
    for (index, line) in lines {
        if line.trim().is_empty() {
            continue;
        }
        let record = DynamicsError::CsvRecord { line: index + 1 };
        let fields: Vec<f64> = line
            .split(',')
            .map(|x| x.trim().parse::<f64>())
            .collect::<Result<_, _>>()
            .map_err(|_| record.clone())?;
        if fields.len() != 14 {
            return Err(record);
        }
        if let Some(prev) = samples.last() {
            let prev: &TrajectorySample = prev;
            if fields[0] <= prev.t {
                return Err(record);
            }
        }
        let quat = Quaternion::new(
            fields[7],
            Vector3::new(fields[8], fields[9], fields[10]),
        );
        let pose = Pose3::new(quat.to_rotation(), Vector3::new(fields[11], fields[12], fields[13]));
        samples.push(TrajectorySample {
            t: fields[0],
            state: BodyState {
                v: Vector3::new(fields[1], fields[2], fields[3]),
                w: Vector3::new(fields[4], fields[5], fields[6]),
                pose,
                gamma: None,
            },
            wrench: Wrench::zero(),
        });
    }
    if samples.len() < 2 {
        return Err(DynamicsError::CsvTooShort);
    }
    let dt = samples[1].t - samples[0].t;
    Ok(Trajectory { dt, samples })
}
