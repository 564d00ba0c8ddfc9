use crate::{is_symplectic, PhasePoint, SymplecticCheck, SymplecticError};
use nalgebra::DMatrix;

/// Central-difference step for phase-space Jacobians. Balances truncation
/// against roundoff near unit-scale inputs.
pub const FD_STEP: f64 = 1e-6;

/// Jacobian of a phase-space map at z by per-component central differences in
/// the flat (q, p) coordinates.
pub fn numerical_jacobian<F>(f: &F, z: &PhasePoint, step: f64) -> DMatrix<f64>
where
    F: Fn(&PhasePoint) -> PhasePoint,
{
    let dim = 2 * z.dim();
    let flat = z.to_flat();
    let mut jac = DMatrix::zeros(dim, dim);
    for col in 0..dim {
        let mut plus = flat.clone();
        let mut minus = flat.clone();
        plus[col] += step;
        minus[col] -= step;
        let column = (f(&PhasePoint::from_flat(&plus)).to_flat()
            - f(&PhasePoint::from_flat(&minus)).to_flat())
            / (2.0 * step);
        jac.set_column(col, &column);
    }
    jac
}

/// A map is canonical at z when its Jacobian is symplectic; the Jacobian is
/// built numerically with [`FD_STEP`] and screened by [`is_symplectic`].
pub fn canonical_check<F>(
    f: F,
    z: &PhasePoint,
    tol: f64,
) -> Result<SymplecticCheck, SymplecticError>
where
    F: Fn(&PhasePoint) -> PhasePoint,
{
    is_symplectic(&numerical_jacobian(&f, z, FD_STEP), tol)
}
