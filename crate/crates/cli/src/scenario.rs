//! Scenario configuration: a flat `key = value` format with bracketed
//! sections, chosen over a general-purpose markup so the canonical form is
//! trivially reproducible.
//!
//! Grammar, line by line:
//! - `# ...` comments and blank lines are skipped,
//! - `[params]`, `[initial]`, `[controls]` open a section,
//! - `key = value` assigns; values are words (`system`, `outputs`) or
//!   comma-separated numbers,
//! - inside `[controls]` the key is a time and the value the control vector
//!   held constant from that time on.
//!
//! `serialize_scenario` emits the canonical form: fixed key order, sorted
//! control rows, shortest round-trip numbers. Parsing then serializing is
//! idempotent after that one normalization pass, and the run digest is the
//! FNV-1a hash of exactly this text.

use nalgebra::{DVector, Vector3};
use std::collections::BTreeMap;
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum ScenarioError {
    #[error("parse error at line {line}, column {col}: {message}")]
    Parse { line: usize, col: usize, message: String },
    #[error("missing field `{field}`")]
    MissingField { field: String },
    #[error("invalid scenario: {message}")]
    Validation { message: String },
}

fn parse_err(line: usize, col: usize, message: impl Into<String>) -> ScenarioError {
    ScenarioError::Parse { line, col, message: message.into() }
}

fn invalid(message: impl Into<String>) -> ScenarioError {
    ScenarioError::Validation { message: message.into() }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SystemKind {
    FreeEuler,
    HeavyTop,
    Hovercraft,
    Satellite,
    Submarine,
    NewtonEuler,
    HamiltonianParticle,
}

impl SystemKind {
    pub fn name(self) -> &'static str {
        match self {
            SystemKind::FreeEuler => "free_euler",
            SystemKind::HeavyTop => "heavy_top",
            SystemKind::Hovercraft => "hovercraft",
            SystemKind::Satellite => "satellite",
            SystemKind::Submarine => "submarine",
            SystemKind::NewtonEuler => "newton_euler",
            SystemKind::HamiltonianParticle => "hamiltonian_particle",
        }
    }

    fn from_name(name: &str) -> Option<Self> {
        Some(match name {
            "free_euler" => SystemKind::FreeEuler,
            "heavy_top" => SystemKind::HeavyTop,
            "hovercraft" => SystemKind::Hovercraft,
            "satellite" => SystemKind::Satellite,
            "submarine" => SystemKind::Submarine,
            "newton_euler" => SystemKind::NewtonEuler,
            "hamiltonian_particle" => SystemKind::HamiltonianParticle,
            _ => return None,
        })
    }

    /// Width of one control row, or None when the system takes no controls.
    pub fn control_arity(self) -> Option<usize> {
        match self {
            SystemKind::Hovercraft => Some(2),
            SystemKind::Satellite => Some(3),
            SystemKind::Submarine | SystemKind::NewtonEuler => Some(6),
            _ => None,
        }
    }
}

/// Validated, typed content of the `[params]` and `[initial]` sections.
#[derive(Debug, Clone, PartialEq)]
pub enum SystemSetup {
    FreeEuler { inertia: Vector3<f64>, w0: Vector3<f64> },
    HeavyTop {
        inertia: Vector3<f64>,
        mgl: f64,
        chi: Vector3<f64>,
        w0: Vector3<f64>,
        gamma0: Vector3<f64>,
    },
    Hovercraft { mass: f64, inertia: f64, lever: f64, v0: (f64, f64), w0: f64 },
    Satellite { inertia: Vector3<f64>, w0: Vector3<f64> },
    Submarine {
        mass: Vector3<f64>,
        inertia: Vector3<f64>,
        v0: Vector3<f64>,
        w0: Vector3<f64>,
    },
    NewtonEuler {
        mass: Vector3<f64>,
        inertia: Vector3<f64>,
        v0: Vector3<f64>,
        w0: Vector3<f64>,
    },
    HamiltonianParticle { mass: f64, k: f64, q0: DVector<f64>, p0: DVector<f64> },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum OutputKind {
    Trajectory,
    Jolt,
}

impl OutputKind {
    pub fn name(self) -> &'static str {
        match self {
            OutputKind::Trajectory => "trajectory",
            OutputKind::Jolt => "jolt",
        }
    }
}

/// Control vector applied from time `t` until the next row.
#[derive(Debug, Clone, PartialEq)]
pub struct ControlRow {
    pub t: f64,
    pub u: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub system: SystemKind,
    pub setup: SystemSetup,
    pub dt: f64,
    pub duration: f64,
    /// round(duration / dt), validated to land on duration within one step.
    pub steps: usize,
    pub outputs: Vec<OutputKind>,
    pub controls: Vec<ControlRow>,
    pub thresholds: Option<(f64, f64)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Section {
    Top,
    Params,
    Initial,
    Controls,
}

struct RawValue {
    line: usize,
    col: usize,
    text: String,
}

/// Key/value lines grouped by section, with source positions for errors.
struct RawScenario {
    top: BTreeMap<String, RawValue>,
    params: BTreeMap<String, RawValue>,
    initial: BTreeMap<String, RawValue>,
    controls: Vec<(RawValue, RawValue)>,
}

fn split_raw(text: &str) -> Result<RawScenario, ScenarioError> {
    let mut raw = RawScenario {
        top: BTreeMap::new(),
        params: BTreeMap::new(),
        initial: BTreeMap::new(),
        controls: Vec::new(),
    };
    let mut section = Section::Top;
    for (idx, full_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match full_line.find('#') {
            Some(at) => &full_line[..at],
            None => full_line,
        };
        if line.trim().is_empty() {
            continue;
        }
        let col_of = |sub: &str| {
            // Byte offset of the trimmed slice inside the original line.
            sub.as_ptr() as usize - full_line.as_ptr() as usize + 1
        };
        let trimmed = line.trim();
        if let Some(stripped) = trimmed.strip_prefix('[') {
            let name = stripped.strip_suffix(']').ok_or_else(|| {
                parse_err(line_no, col_of(trimmed), "unterminated section header")
            })?;
            section = match name {
                "params" => Section::Params,
                "initial" => Section::Initial,
                "controls" => Section::Controls,
                other => {
                    return Err(parse_err(
                        line_no,
                        col_of(trimmed),
                        format!("unknown section `{other}`"),
                    ))
                }
            };
            continue;
        }
        let Some(eq) = line.find('=') else {
            return Err(parse_err(line_no, col_of(trimmed), "expected `key = value`"));
        };
        let key_part = line[..eq].trim();
        let value_part = line[eq + 1..].trim();
        if key_part.is_empty() {
            return Err(parse_err(line_no, col_of(trimmed), "empty key before `=`"));
        }
        if value_part.is_empty() {
            return Err(parse_err(line_no, eq + 2, format!("empty value for `{key_part}`")));
        }
        let key_val = RawValue {
            line: line_no,
            col: col_of(key_part),
            text: key_part.to_string(),
        };
        let value = RawValue {
            line: line_no,
            col: col_of(value_part),
            text: value_part.to_string(),
        };
        match section {
            Section::Controls => raw.controls.push((key_val, value)),
            _ => {
                let map = match section {
                    Section::Top => &mut raw.top,
                    Section::Params => &mut raw.params,
                    Section::Initial => &mut raw.initial,
                    Section::Controls => unreachable!(),
                };
                if map.insert(key_part.to_string(), value).is_some() {
                    return Err(parse_err(
                        line_no,
                        key_val.col,
                        format!("duplicate key `{key_part}`"),
                    ));
                }
            }
        }
    }
    Ok(raw)
}

fn parse_number(v: &RawValue) -> Result<f64, ScenarioError> {
    let x: f64 = v
        .text
        .parse()
        .map_err(|_| parse_err(v.line, v.col, format!("expected a number, got `{}`", v.text)))?;
    if !x.is_finite() {
        return Err(invalid(format!("value `{}` is not finite", v.text)));
    }
    Ok(x)
}

fn parse_numbers(v: &RawValue) -> Result<Vec<f64>, ScenarioError> {
    let mut out = Vec::new();
    let mut offset = 0usize;
    for piece in v.text.split(',') {
        let trimmed = piece.trim();
        let col = v.col + offset + (piece.len() - piece.trim_start().len());
        if trimmed.is_empty() {
            return Err(parse_err(v.line, col, "empty entry in number list"));
        }
        let x: f64 = trimmed
            .parse()
            .map_err(|_| parse_err(v.line, col, format!("expected a number, got `{trimmed}`")))?;
        if !x.is_finite() {
            return Err(invalid(format!("value `{trimmed}` is not finite")));
        }
        out.push(x);
        offset += piece.len() + 1;
    }
    Ok(out)
}

struct SectionReader<'a> {
    name: &'a str,
    map: &'a BTreeMap<String, RawValue>,
    used: Vec<&'a str>,
}

impl<'a> SectionReader<'a> {
    fn new(name: &'a str, map: &'a BTreeMap<String, RawValue>) -> Self {
        Self { name, map, used: Vec::new() }
    }

    fn numbers(&mut self, field: &'a str, arity: usize) -> Result<Vec<f64>, ScenarioError> {
        self.used.push(field);
        let raw = self
            .map
            .get(field)
            .ok_or_else(|| ScenarioError::MissingField { field: field.to_string() })?;
        let xs = parse_numbers(raw)?;
        if xs.len() != arity {
            return Err(invalid(format!(
                "field `{field}` needs {arity} component(s), got {}",
                xs.len()
            )));
        }
        Ok(xs)
    }

    fn any_numbers(&mut self, field: &'a str) -> Result<Vec<f64>, ScenarioError> {
        self.used.push(field);
        let raw = self
            .map
            .get(field)
            .ok_or_else(|| ScenarioError::MissingField { field: field.to_string() })?;
        parse_numbers(raw)
    }

    fn scalar(&mut self, field: &'a str) -> Result<f64, ScenarioError> {
        Ok(self.numbers(field, 1)?[0])
    }

    fn vec3(&mut self, field: &'a str) -> Result<Vector3<f64>, ScenarioError> {
        let xs = self.numbers(field, 3)?;
        Ok(Vector3::new(xs[0], xs[1], xs[2]))
    }

    fn finish(self) -> Result<(), ScenarioError> {
        for key in self.map.keys() {
            if !self.used.contains(&key.as_str()) {
                return Err(invalid(format!(
                    "unexpected field `{key}` at {}",
                    self.name
                )));
            }
        }
        Ok(())
    }
}

fn positive(name: &str, x: f64) -> Result<f64, ScenarioError> {
    if x > 0.0 {
        Ok(x)
    } else {
        Err(invalid(format!("field `{name}` must be positive, got {x}")))
    }
}

fn positive3(name: &str, v: Vector3<f64>) -> Result<Vector3<f64>, ScenarioError> {
    if v.iter().all(|&x| x > 0.0) {
        Ok(v)
    } else {
        Err(invalid(format!("field `{name}` must be positive componentwise")))
    }
}

fn unit3(name: &str, v: Vector3<f64>) -> Result<Vector3<f64>, ScenarioError> {
    if (v.norm() - 1.0).abs() <= 1e-6 {
        Ok(v)
    } else {
        Err(invalid(format!("field `{name}` must be a unit vector")))
    }
}

fn build_setup(
    system: SystemKind,
    params: &BTreeMap<String, RawValue>,
    initial: &BTreeMap<String, RawValue>,
) -> Result<SystemSetup, ScenarioError> {
    let mut p = SectionReader::new("[params]", params);
    let mut s = SectionReader::new("[initial]", initial);
    let setup = match system {
        SystemKind::FreeEuler => SystemSetup::FreeEuler {
            inertia: positive3("inertia", p.vec3("inertia")?)?,
            w0: s.vec3("w0")?,
        },
        SystemKind::HeavyTop => SystemSetup::HeavyTop {
            inertia: positive3("inertia", p.vec3("inertia")?)?,
            mgl: p.scalar("mgl")?,
            chi: unit3("chi", p.vec3("chi")?)?,
            w0: s.vec3("w0")?,
            gamma0: unit3("gamma0", s.vec3("gamma0")?)?,
        },
        SystemKind::Hovercraft => {
            let v0 = s.numbers("v0", 2)?;
            SystemSetup::Hovercraft {
                mass: positive("mass", p.scalar("mass")?)?,
                inertia: positive("inertia", p.scalar("inertia")?)?,
                lever: p.scalar("h")?,
                v0: (v0[0], v0[1]),
                w0: s.scalar("w0")?,
            }
        }
        SystemKind::Satellite => SystemSetup::Satellite {
            inertia: positive3("inertia", p.vec3("inertia")?)?,
            w0: s.vec3("w0")?,
        },
        SystemKind::Submarine => SystemSetup::Submarine {
            mass: positive3("mass", p.vec3("mass")?)?,
            inertia: positive3("inertia", p.vec3("inertia")?)?,
            v0: s.vec3("v0")?,
            w0: s.vec3("w0")?,
        },
        SystemKind::NewtonEuler => SystemSetup::NewtonEuler {
            mass: positive3("mass", p.vec3("mass")?)?,
            inertia: positive3("inertia", p.vec3("inertia")?)?,
            v0: s.vec3("v0")?,
            w0: s.vec3("w0")?,
        },
        SystemKind::HamiltonianParticle => {
            let q0 = s.any_numbers("q0")?;
            let p0 = s.any_numbers("p0")?;
            if q0.is_empty() || q0.len() != p0.len() {
                return Err(invalid(format!(
                    "fields `q0` and `p0` must be non-empty and equally long, got {} and {}",
                    q0.len(),
                    p0.len()
                )));
            }
            let k = p.scalar("k")?;
            if k < 0.0 {
                return Err(invalid(format!("field `k` must be non-negative, got {k}")));
            }
            SystemSetup::HamiltonianParticle {
                mass: positive("mass", p.scalar("mass")?)?,
                k,
                q0: DVector::from_vec(q0),
                p0: DVector::from_vec(p0),
            }
        }
    };
    p.finish()?;
    s.finish()?;
    Ok(setup)
}

pub fn parse_scenario(text: &str) -> Result<Scenario, ScenarioError> {
    let raw = split_raw(text)?;
    let mut top = SectionReader::new("the top level", &raw.top);

    top.used.push("system");
    let system_raw = raw
        .top
        .get("system")
        .ok_or_else(|| ScenarioError::MissingField { field: "system".to_string() })?;
    let system = SystemKind::from_name(&system_raw.text).ok_or_else(|| {
        invalid(format!("field `system` has unknown value `{}`", system_raw.text))
    })?;

    let dt = positive("dt", top.scalar("dt")?)?;
    let duration = positive("duration", top.scalar("duration")?)?;
    let steps = (duration / dt).round() as usize;
    if steps < 1 || (steps as f64 * dt - duration).abs() > dt {
        return Err(invalid(format!(
            "dt = {dt} times a whole number of steps must reproduce duration = {duration} \
             within one step"
        )));
    }

    top.used.push("outputs");
    let mut outputs = match raw.top.get("outputs") {
        None => vec![OutputKind::Trajectory],
        Some(v) => {
            let mut kinds = Vec::new();
            for piece in v.text.split(',') {
                let name = piece.trim();
                let kind = match name {
                    "trajectory" => OutputKind::Trajectory,
                    "jolt" => OutputKind::Jolt,
                    other => {
                        return Err(invalid(format!(
                            "field `outputs` has unknown entry `{other}`"
                        )))
                    }
                };
                if !kinds.contains(&kind) {
                    kinds.push(kind);
                }
            }
            kinds
        }
    };
    outputs.sort();
    if outputs.contains(&OutputKind::Jolt) && system == SystemKind::HamiltonianParticle {
        return Err(invalid(
            "field `outputs` requests a jolt report, which only rigid-body systems produce"
                .to_string(),
        ));
    }

    top.used.push("thresholds");
    let thresholds = match raw.top.get("thresholds") {
        None => None,
        Some(v) => {
            let xs = parse_numbers(v)?;
            if xs.len() != 2 {
                return Err(invalid(format!(
                    "field `thresholds` needs 2 components, got {}",
                    xs.len()
                )));
            }
            Some((xs[0], xs[1]))
        }
    };
    top.finish()?;

    let setup = build_setup(system, &raw.params, &raw.initial)?;

    let mut controls = Vec::new();
    match system.control_arity() {
        None => {
            if let Some((key, _)) = raw.controls.first() {
                return Err(invalid(format!(
                    "system `{}` takes no [controls] (found a row at line {})",
                    system.name(),
                    key.line
                )));
            }
        }
        Some(arity) => {
            for (key, value) in &raw.controls {
                let t = parse_number(key)?;
                if t < 0.0 {
                    return Err(invalid(format!("control time {t} must be non-negative")));
                }
                let u = parse_numbers(value)?;
                if u.len() != arity {
                    return Err(invalid(format!(
                        "control row at t = {t} needs {arity} component(s), got {}",
                        u.len()
                    )));
                }
                controls.push(ControlRow { t, u });
            }
            controls.sort_by(|a, b| a.t.total_cmp(&b.t));
            for pair in controls.windows(2) {
                if pair[0].t == pair[1].t {
                    return Err(invalid(format!(
                        "duplicate control time {} in [controls]",
                        pair[0].t
                    )));
                }
            }
        }
    }

    Ok(Scenario { system, setup, dt, duration, steps, outputs, controls, thresholds })
}

fn push_kv(out: &mut String, key: &str, values: &[f64]) {
    let joined: Vec<String> = values.iter().map(|x| format!("{x}")).collect();
    let _ = writeln!(out, "{key} = {}", joined.join(", "));
}

/// Canonical text form; the digest below is computed over exactly this.
pub fn serialize_scenario(sc: &Scenario) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "system = {}", sc.system.name());
    push_kv(&mut out, "dt", &[sc.dt]);
    push_kv(&mut out, "duration", &[sc.duration]);
    let names: Vec<&str> = sc.outputs.iter().map(|o| o.name()).collect();
    let _ = writeln!(out, "outputs = {}", names.join(", "));
    if let Some((tf, tt)) = sc.thresholds {
        push_kv(&mut out, "thresholds", &[tf, tt]);
    }

    out.push_str("\n[params]\n");
    match &sc.setup {
        SystemSetup::FreeEuler { inertia, .. } | SystemSetup::Satellite { inertia, .. } => {
            push_kv(&mut out, "inertia", inertia.as_slice());
        }
        SystemSetup::HeavyTop { inertia, mgl, chi, .. } => {
            push_kv(&mut out, "chi", chi.as_slice());
            push_kv(&mut out, "inertia", inertia.as_slice());
            push_kv(&mut out, "mgl", &[*mgl]);
        }
        SystemSetup::Hovercraft { mass, inertia, lever, .. } => {
            push_kv(&mut out, "h", &[*lever]);
            push_kv(&mut out, "inertia", &[*inertia]);
            push_kv(&mut out, "mass", &[*mass]);
        }
        SystemSetup::Submarine { mass, inertia, .. }
        | SystemSetup::NewtonEuler { mass, inertia, .. } => {
            push_kv(&mut out, "inertia", inertia.as_slice());
            push_kv(&mut out, "mass", mass.as_slice());
        }
        SystemSetup::HamiltonianParticle { mass, k, .. } => {
            push_kv(&mut out, "k", &[*k]);
            push_kv(&mut out, "mass", &[*mass]);
        }
    }

    out.push_str("\n[initial]\n");
    match &sc.setup {
        SystemSetup::FreeEuler { w0, .. } | SystemSetup::Satellite { w0, .. } => {
            push_kv(&mut out, "w0", w0.as_slice());
        }
        SystemSetup::HeavyTop { w0, gamma0, .. } => {
            push_kv(&mut out, "gamma0", gamma0.as_slice());
            push_kv(&mut out, "w0", w0.as_slice());
        }
        SystemSetup::Hovercraft { v0, w0, .. } => {
            push_kv(&mut out, "v0", &[v0.0, v0.1]);
            push_kv(&mut out, "w0", &[*w0]);
        }
        SystemSetup::Submarine { v0, w0, .. } | SystemSetup::NewtonEuler { v0, w0, .. } => {
            push_kv(&mut out, "v0", v0.as_slice());
            push_kv(&mut out, "w0", w0.as_slice());
        }
        SystemSetup::HamiltonianParticle { q0, p0, .. } => {
            push_kv(&mut out, "p0", p0.as_slice());
            push_kv(&mut out, "q0", q0.as_slice());
        }
    }

    if !sc.controls.is_empty() {
        out.push_str("\n[controls]\n");
        for row in &sc.controls {
            push_kv(&mut out, &format!("{}", row.t), &row.u);
        }
    }
    out
}

fn fnv1a64(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

/// Stable hex digest of the canonicalized scenario text.
pub fn scenario_digest(sc: &Scenario) -> String {
    format!("{:016x}", fnv1a64(serialize_scenario(sc).as_bytes()))
}
