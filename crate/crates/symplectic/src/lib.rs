//! Symplectic-matrix predicates, canonical Hamiltonian vector fields, and
//! phase-space flows.
//!
//! The standard form on R^{2n} is carried by [`SymplecticForm`], matrices are
//! screened with [`is_symplectic`] and [`sp_algebra_residual`], Hamilton's
//! equations are produced by [`hamiltonian_rhs`], and nonlinear maps are
//! tested for canonicity through the symplecticity of their numerically
//! differentiated Jacobian ([`canonical_check`]).

mod canonical;
mod form;
mod hamiltonian;

pub use canonical::{canonical_check, numerical_jacobian, FD_STEP};
pub use form::{is_symplectic, sp_algebra_residual, SymplecticCheck, SymplecticForm};
pub use hamiltonian::{
    flow, hamiltonian_rhs, particle_hamiltonian, Harmonic, ParticleHamiltonian, PhasePoint,
    Potential, Zero,
};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SymplecticError {
    /// The standard form pairs coordinates with momenta, so every matrix it
    /// grades must act on an even-dimensional space.
    #[error("symplectic checks need an even dimension, got {dim}")]
    OddDimension { dim: usize },
}
