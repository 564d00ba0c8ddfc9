//! Text-producing back ends for the CLI verbs, kept free of process concerns
//! so tests can call them directly.

use crate::runner::{run_scenario, RunError};
use crate::scenario::{parse_scenario, ScenarioError};
use liemech_algebra::{
    build_root_system, cartan_matrix, classify_diagram, diagram_text, dynkin_diagram,
    root_angles, simple_roots, verify_root_system, Family,
};
use liemech_dynamics::{parse_trajectory_csv, BodyParams};
use liemech_groups::{
    bch3, catalog_lookup, exp_se3, exp_so3, log_se3, log_so3, quaternion_from_axis_angle,
    Pose3, Rotation3, Twist,
};
use liemech_jolt::{jolt_report, report_text};
use nalgebra::{Matrix3, Vector3};
use std::fmt::Write as _;
use std::path::Path;
use thiserror::Error;

/// Verb-level failure, carrying the process exit code contract:
/// 1 usage, 2 domain or validation, 3 numerical.
#[derive(Debug, Error, PartialEq)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Domain(String),
    #[error("{0}")]
    Numerical(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Domain(_) => 2,
            CliError::Numerical(_) => 3,
        }
    }
}

impl From<ScenarioError> for CliError {
    fn from(e: ScenarioError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<RunError> for CliError {
    fn from(e: RunError) -> Self {
        match e {
            RunError::Numerical { .. } => CliError::Numerical(e.to_string()),
            other => CliError::Domain(other.to_string()),
        }
    }
}

/// Full classification pipeline for one family/rank: construct, verify the
/// axioms, read off angles, base, Cartan matrix, diagram, and the label the
/// diagram classifies back to.
pub fn roots_command(family: &str, rank: usize) -> Result<String, CliError> {
    let mut letters = family.chars();
    let (letter, rest) = (letters.next(), letters.next());
    let family = match (letter, rest) {
        (Some(c), None) => Family::from_letter(c).ok_or_else(|| {
            CliError::Usage(format!("unknown family `{c}`, expected one of A B C D E F G"))
        })?,
        _ => {
            return Err(CliError::Usage(format!(
                "family must be a single letter A..G, got `{family}`"
            )))
        }
    };
    let rs = build_root_system(family, rank)
        .map_err(|e| CliError::Domain(e.to_string()))?;
    let report = verify_root_system(&rs);

    let mut out = String::new();
    let _ = writeln!(out, "requested = {family}{rank}");
    let _ = writeln!(out, "roots = {}", rs.len());
    let _ = writeln!(out, "axioms = {}", if report.all_ok() { "ok" } else { "violated" });
    let _ = writeln!(out, "worst_violation = {}", report.worst_violation);

    let mut degrees: Vec<i64> = root_angles(&rs).iter().map(|a| a.round() as i64).collect();
    degrees.sort_unstable();
    degrees.dedup();
    let shown: Vec<String> = degrees.iter().map(|d| d.to_string()).collect();
    let _ = writeln!(out, "angles_deg = {}", shown.join(", "));

    let base = simple_roots(&rs).map_err(|e| CliError::Domain(e.to_string()))?;
    let cm = cartan_matrix(&base).map_err(|e| CliError::Domain(e.to_string()))?;
    for (i, row) in cm.rows().iter().enumerate() {
        let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        let _ = writeln!(out, "cartan {i} = {}", cells.join(", "));
    }

    let diagram =
        dynkin_diagram(&cm, &base).map_err(|e| CliError::Domain(e.to_string()))?;
    out.push_str(&diagram_text(&diagram));
    let classified =
        classify_diagram(&diagram).map_err(|e| CliError::Domain(e.to_string()))?;
    let labels: Vec<String> =
        classified.iter().map(|(f, r)| format!("{f}{r}")).collect();
    let _ = writeln!(out, "classified = {}", labels.join(" + "));
    Ok(out)
}

fn f17(x: f64) -> String {
    format!("{x:.16e}")
}

fn floats(args: &[String], want: usize, op: &str) -> Result<Vec<f64>, CliError> {
    if args.len() != want {
        return Err(CliError::Usage(format!(
            "`{op}` takes {want} numeric argument(s), got {}",
            args.len()
        )));
    }
    args.iter()
        .map(|a| {
            a.parse::<f64>()
                .map_err(|_| CliError::Usage(format!("`{op}`: `{a}` is not a number")))
        })
        .collect()
}

fn matrix_lines(label: &str, rows: usize, cols: usize, get: impl Fn(usize, usize) -> f64) -> String {
    let mut out = String::new();
    for r in 0..rows {
        let cells: Vec<String> = (0..cols).map(|c| f17(get(r, c))).collect();
        let _ = writeln!(out, "{label} {r} = {}", cells.join(", "));
    }
    out
}

fn vector_line(label: &str, xs: &[f64]) -> String {
    let cells: Vec<String> = xs.iter().map(|&x| f17(x)).collect();
    format!("{label} = {}\n", cells.join(", "))
}

fn rotation_from_args(xs: &[f64]) -> Result<Rotation3, CliError> {
    let m = Matrix3::from_row_slice(xs);
    Rotation3::new(m).map_err(|e| CliError::Domain(e.to_string()))
}

/// Evaluates one exposed group operation; results print with 17 significant
/// digits. `catalog` prints the classical-group fact row instead.
pub fn group_command(op: &str, args: &[String]) -> Result<String, CliError> {
    match op {
        "exp-so3" => {
            let xs = floats(args, 3, op)?;
            let r = exp_so3(Vector3::new(xs[0], xs[1], xs[2]));
            let m = *r.matrix();
            Ok(matrix_lines("row", 3, 3, |i, j| m[(i, j)]))
        }
        "log-so3" => {
            let xs = floats(args, 9, op)?;
            let r = rotation_from_args(&xs)?;
            let w = log_so3(&r).map_err(|e| CliError::Domain(e.to_string()))?;
            Ok(vector_line("w", w.as_slice()))
        }
        "exp-se3" => {
            let xs = floats(args, 6, op)?;
            let twist = Twist::new(
                Vector3::new(xs[0], xs[1], xs[2]),
                Vector3::new(xs[3], xs[4], xs[5]),
            );
            let pose = exp_se3(&twist);
            let h = pose.homogeneous();
            Ok(matrix_lines("row", 4, 4, |i, j| h[(i, j)]))
        }
        "log-se3" => {
            let xs = floats(args, 12, op)?;
            let rot = rotation_from_args(&xs[..9])?;
            let pose = Pose3::new(rot, Vector3::new(xs[9], xs[10], xs[11]));
            let twist = log_se3(&pose).map_err(|e| CliError::Domain(e.to_string()))?;
            Ok(vector_line(
                "xi",
                &[twist.w.x, twist.w.y, twist.w.z, twist.v.x, twist.v.y, twist.v.z],
            ))
        }
        "bch-so3" => {
            let xs = floats(args, 6, op)?;
            let w = bch3(
                Vector3::new(xs[0], xs[1], xs[2]),
                Vector3::new(xs[3], xs[4], xs[5]),
            )
            .map_err(|e| CliError::Domain(e.to_string()))?;
            Ok(vector_line("w", w.as_slice()))
        }
        "quat-axis-angle" => {
            let xs = floats(args, 4, op)?;
            let q = quaternion_from_axis_angle(Vector3::new(xs[0], xs[1], xs[2]), xs[3])
                .map_err(|e| CliError::Domain(e.to_string()))?;
            Ok(vector_line(
                "q",
                &[q.scalar, q.vector.x, q.vector.y, q.vector.z],
            ))
        }
        "catalog" => {
            if args.len() != 2 {
                return Err(CliError::Usage(format!(
                    "`catalog` takes a family name and a parameter, got {} argument(s)",
                    args.len()
                )));
            }
            let n: usize = args[1].parse().map_err(|_| {
                CliError::Usage(format!("`catalog`: `{}` is not a parameter", args[1]))
            })?;
            let entry =
                catalog_lookup(&args[0], n).map_err(|e| CliError::Domain(e.to_string()))?;
            let yn = |b: bool| if b { "yes" } else { "no" };
            Ok(format!(
                "name={} dim={} compact={} connected={} simply_connected={} abelian={}\n",
                entry.name,
                entry.dimension,
                yn(entry.compact),
                yn(entry.connected),
                yn(entry.simply_connected),
                yn(entry.abelian),
            ))
        }
        other => Err(CliError::Usage(format!(
            "unknown group op `{other}`; expected exp-so3, log-so3, exp-se3, log-se3, \
             bch-so3, quat-axis-angle, or catalog"
        ))),
    }
}

fn triplet(name: &str, xs: &[f64]) -> Result<Vector3<f64>, CliError> {
    if xs.len() != 3 {
        return Err(CliError::Usage(format!(
            "--{name} needs three comma-separated values, got {}",
            xs.len()
        )));
    }
    if xs.iter().any(|&x| x <= 0.0) {
        return Err(CliError::Domain(format!("--{name} must be positive componentwise")));
    }
    Ok(Vector3::new(xs[0], xs[1], xs[2]))
}

/// Reads a trajectory CSV and prints the jolt report for the given body.
pub fn jolt_command(
    path: &Path,
    mass: &[f64],
    inertia: &[f64],
    thresholds: Option<&[f64]>,
) -> Result<String, CliError> {
    let m = triplet("mass", mass)?;
    let i = triplet("inertia", inertia)?;
    let thresholds = match thresholds {
        None => (f64::INFINITY, f64::INFINITY),
        Some(xs) if xs.len() == 2 => (xs[0], xs[1]),
        Some(xs) => {
            return Err(CliError::Usage(format!(
                "--thresholds needs two comma-separated values, got {}",
                xs.len()
            )))
        }
    };
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Domain(format!("cannot read `{}`: {e}", path.display())))?;
    let traj = parse_trajectory_csv(&text)
        .map_err(|e| CliError::Domain(format!("in `{}`: {e}", path.display())))?;
    let report = jolt_report(&traj, &BodyParams::new(m, i), thresholds)
        .map_err(|e| CliError::Domain(format!("in `{}`: {e}", path.display())))?;
    Ok(report_text(&report))
}

/// Parses and runs a scenario file, returning the manifest text that `run`
/// prints. Outputs land in `outdir`.
pub fn run_command(scenario_path: &Path, outdir: &Path) -> Result<String, CliError> {
    let text = std::fs::read_to_string(scenario_path).map_err(|e| {
        CliError::Domain(format!("cannot read `{}`: {e}", scenario_path.display()))
    })?;
    let sc = parse_scenario(&text)
        .map_err(|e| CliError::Domain(format!("in `{}`: {e}", scenario_path.display())))?;
    let manifest = run_scenario(&sc, outdir)?;
    Ok(manifest.text())
}
