use crate::SymplecticError;
use nalgebra::DMatrix;

/// Standard symplectic form on R^{2n}, stored as the block matrix
/// J = [[0, I], [-I, 0]]. Satisfies J^T = -J and J^2 = -I.
#[derive(Debug, Clone, PartialEq)]
pub struct SymplecticForm {
    pub n: usize,
    j: DMatrix<f64>,
}

impl SymplecticForm {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "the form needs at least one degree of freedom");
        let mut j = DMatrix::zeros(2 * n, 2 * n);
        for k in 0..n {
            j[(k, n + k)] = 1.0;
            j[(n + k, k)] = -1.0;
        }
        Self { n, j }
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.j
    }
}

/// Outcome of a symplecticity test: the Frobenius residual together with the
/// verdict against the tolerance it was screened at.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymplecticCheck {
    pub passes: bool,
    pub residual: f64,
}

fn even_half(a: &DMatrix<f64>) -> Result<usize, SymplecticError> {
    assert!(a.is_square(), "symplectic checks take square matrices");
    let dim = a.nrows();
    if dim == 0 || !dim.is_multiple_of(2) {
        return Err(SymplecticError::OddDimension { dim });
    }
    Ok(dim / 2)
}

/// Tests a^T J a = J and reports the Frobenius residual of the defect.
pub fn is_symplectic(a: &DMatrix<f64>, tol: f64) -> Result<SymplecticCheck, SymplecticError> {
    let n = even_half(a)?;
    let j = SymplecticForm::new(n);
    let residual = (a.transpose() * j.matrix() * a - j.matrix()).norm();
    Ok(SymplecticCheck { passes: residual <= tol, residual })
}

/// Frobenius norm of a^T J + J a, the defect of membership in sp(2n). Zero
/// exactly on the linearization of the group condition at the identity.
pub fn sp_algebra_residual(a: &DMatrix<f64>) -> Result<f64, SymplecticError> {
    let n = even_half(a)?;
    let j = SymplecticForm::new(n);
    Ok((a.transpose() * j.matrix() + j.matrix() * a).norm())
}
