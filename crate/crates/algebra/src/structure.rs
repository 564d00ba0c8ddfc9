use nalgebra::{DMatrix, DVector};

use crate::AlgebraError;

/// Finite-dimensional algebra given by structure constants: the bracket of
/// basis elements i and j has k-coordinate `c[i][j][k]`.
#[derive(Debug, Clone, PartialEq)]
pub struct StructureAlgebra {
    dim: usize,
    c: Vec<Vec<Vec<f64>>>,
}

impl StructureAlgebra {
    // Index loops stay explicit: antisymmetry reads c with swapped indices.
    #[allow(clippy::needless_range_loop)]
    pub fn new(dim: usize, c: Vec<Vec<Vec<f64>>>) -> Result<Self, AlgebraError> {
        if c.len() != dim || c.iter().any(|p| p.len() != dim || p.iter().any(|r| r.len() != dim)) {
            return Err(AlgebraError::ShapeMismatch);
        }
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    if (c[i][j][k] + c[j][i][k]).abs() > 1e-12 {
                        return Err(AlgebraError::NotAntisymmetric { i, j, k });
                    }
                }
            }
        }
        Ok(Self { dim, c })
    }

    /// so(3): brackets of the standard basis are cross products, c = ε_ijk.
    pub fn so3() -> Self {
        let mut c = vec![vec![vec![0.0; 3]; 3]; 3];
        for (i, j, k) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
            c[i][j][k] = 1.0;
            c[j][i][k] = -1.0;
        }
        Self { dim: 3, c }
    }

    pub fn abelian(dim: usize) -> Self {
        Self { dim, c: vec![vec![vec![0.0; dim]; dim]; dim] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn bracket_of_basis(&self, i: usize, j: usize) -> DVector<f64> {
        DVector::from_iterator(self.dim, self.c[i][j].iter().copied())
    }

    /// Matrix of ad(x): column j holds the bracket [x, e_j].
    pub fn ad_matrix(&self, x: &DVector<f64>) -> DMatrix<f64> {
        let mut m = DMatrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            for k in 0..self.dim {
                let mut entry = 0.0;
                for i in 0..self.dim {
                    entry += x[i] * self.c[i][j][k];
                }
                m[(k, j)] = entry;
            }
        }
        m
    }

    fn bracket(&self, x: &DVector<f64>, y: &DVector<f64>) -> DVector<f64> {
        let mut out = DVector::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                let factor = x[i] * y[j];
                if factor != 0.0 {
                    for k in 0..self.dim {
                        out[k] += factor * self.c[i][j][k];
                    }
                }
            }
        }
        out
    }
}

/// Worst norm over basis triples of the cyclic sum
/// `[e_i,[e_j,e_k]] + [e_k,[e_i,e_j]] + [e_j,[e_k,e_i]]`; zero for genuine
/// Lie algebras.
pub fn jacobi_defect(alg: &StructureAlgebra) -> f64 {
    let n = alg.dim();
    let basis: Vec<DVector<f64>> =
        (0..n).map(|i| DVector::from_fn(n, |r, _| if r == i { 1.0 } else { 0.0 })).collect();
    let mut worst: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let cyc = alg.bracket(&basis[i], &alg.bracket(&basis[j], &basis[k]))
                    + alg.bracket(&basis[k], &alg.bracket(&basis[i], &basis[j]))
                    + alg.bracket(&basis[j], &alg.bracket(&basis[k], &basis[i]));
                worst = worst.max(cyc.norm());
            }
        }
    }
    worst
}

/// Killing form `B(x, y) = Tr(ad x · ad y)`.
pub fn killing_form(alg: &StructureAlgebra, x: &DVector<f64>, y: &DVector<f64>) -> f64 {
    (alg.ad_matrix(x) * alg.ad_matrix(y)).trace()
}

/// Semisimplicity via non-degeneracy of the Killing form: true iff the Gram
/// matrix of B on the basis has |det| > 1e-9.
pub fn is_semisimple(alg: &StructureAlgebra) -> bool {
    let n = alg.dim();
    let basis: Vec<DVector<f64>> =
        (0..n).map(|i| DVector::from_fn(n, |r, _| if r == i { 1.0 } else { 0.0 })).collect();
    let ads: Vec<DMatrix<f64>> = basis.iter().map(|e| alg.ad_matrix(e)).collect();
    let gram = DMatrix::from_fn(n, n, |i, j| (&ads[i] * &ads[j]).trace());
    gram.determinant().abs() > 1e-9
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn so3_satisfies_jacobi() {
        assert!(jacobi_defect(&StructureAlgebra::so3()) <= 1e-15);
    }

    #[test]
    fn abelian_algebra_has_zero_defect_and_zero_killing_form() {
        let alg = StructureAlgebra::abelian(3);
        assert_eq!(jacobi_defect(&alg), 0.0);
        let x = DVector::from_vec(vec![1.0, 2.0, 3.0]);
        assert_eq!(killing_form(&alg, &x, &x), 0.0);
        assert!(!is_semisimple(&alg));
    }

    #[test]
    fn perturbed_so3_breaks_jacobi() {
        let mut c = vec![vec![vec![0.0; 3]; 3]; 3];
        for (i, j, k) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
            c[i][j][k] = 1.0;
            c[j][i][k] = -1.0;
        }
        // Adds a component along the first generator to [e1, e2]; the cyclic
        // sum then picks up 0.3 [e3, e1] = 0.3 e2.
        c[0][1][0] += 0.3;
        c[1][0][0] -= 0.3;
        let alg = StructureAlgebra::new(3, c).unwrap();
        let defect = jacobi_defect(&alg);
        assert!((defect - 0.3).abs() < 1e-12, "defect {defect}");
    }

    #[test]
    fn so3_killing_form_values() {
        let alg = StructureAlgebra::so3();
        let e1 = DVector::from_vec(vec![1.0, 0.0, 0.0]);
        let e2 = DVector::from_vec(vec![0.0, 1.0, 0.0]);
        assert_relative_eq!(killing_form(&alg, &e1, &e1), -2.0, epsilon = 1e-14);
        assert_relative_eq!(killing_form(&alg, &e1, &e2), 0.0, epsilon = 1e-14);
        assert!(is_semisimple(&alg));
    }

    #[test]
    fn constructor_rejects_broken_antisymmetry() {
        let mut c = vec![vec![vec![0.0; 2]; 2]; 2];
        c[0][1][0] = 1.0;
        assert!(matches!(
            StructureAlgebra::new(2, c),
            Err(AlgebraError::NotAntisymmetric { .. })
        ));
    }

    #[test]
    fn constructor_rejects_wrong_shape() {
        let c = vec![vec![vec![0.0; 2]; 2]; 1];
        assert!(matches!(StructureAlgebra::new(2, c), Err(AlgebraError::ShapeMismatch)));
    }
}
