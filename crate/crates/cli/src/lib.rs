//! Library backing the `liemech` binary: scenario parsing, simulation
//! dispatch, and the text reports behind the `roots`, `group`, and `jolt`
//! verbs. The binary stays a thin argument-handling shell so every behavior
//! is testable in process.

pub mod commands;
pub mod runner;
pub mod scenario;

pub use commands::{group_command, jolt_command, roots_command, run_command, CliError};
pub use runner::{run_scenario, RunError, RunManifest};
pub use scenario::{
    parse_scenario, scenario_digest, serialize_scenario, ControlRow, OutputKind, Scenario,
    ScenarioError, SystemKind, SystemSetup,
};
