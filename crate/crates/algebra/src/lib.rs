//! Structure-constant Lie algebras and the combinatorics of root systems:
//! Killing form and semisimplicity, explicit root constructions for the
//! families A through G, base extraction, Cartan matrices, and Dynkin diagram
//! admissibility and classification.
//!
//! Root coordinates are half-integers in every supported construction, so
//! they are stored doubled as integers and the reflection and integrality
//! axioms are checked in exact arithmetic; floating point only enters for
//! angles and the Killing form.

mod base;
mod diagram;
mod roots;
mod structure;

pub use base::{cartan_matrix, simple_roots, CartanMatrix};
pub use diagram::{classify_diagram, diagram_text, dynkin_diagram, DiagramEdge, DynkinDiagram};
pub use roots::{build_root_system, root_angles, verify_root_system, AxiomReport, Family, RootSystem};
pub use structure::{is_semisimple, jacobi_defect, killing_form, StructureAlgebra};

/// Internal entry points kept public for the benchmark suite; not part of the
/// supported API.
#[doc(hidden)]
pub mod internals {
    pub use crate::roots::internals::*;
}

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AlgebraError {
    #[error("rank {rank} is not valid for family {family}")]
    InvalidRank { family: Family, rank: usize },
    #[error("root system is not irreducible within its span")]
    NotIrreducible,
    #[error("Cartan entry ({row},{col}) = {value} is not an integer")]
    NonIntegerEntry { row: usize, col: usize, value: f64 },
    #[error("diagram violates admissibility rule {rule}")]
    Inadmissible { rule: u8 },
    #[error("admissible diagram is outside the A-G catalog")]
    Unclassifiable,
    #[error("structure constants break antisymmetry at ({i},{j},{k})")]
    NotAntisymmetric { i: usize, j: usize, k: usize },
    #[error("structure constant table has the wrong shape")]
    ShapeMismatch,
    #[error("coordinate {value} is not a half-integer")]
    BadCoordinate { value: f64 },
}
