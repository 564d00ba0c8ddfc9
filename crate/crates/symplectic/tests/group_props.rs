use liemech_groups::matrix_exp;
use liemech_symplectic::{
    canonical_check, is_symplectic, sp_algebra_residual, PhasePoint, SymplecticForm,
};
use nalgebra::{dvector, DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// J times a symmetric matrix: the general element of sp(2n).
fn random_sp(n: usize, rng: &mut ChaCha8Rng) -> DMatrix<f64> {
    let dim = 2 * n;
    let mut s = DMatrix::zeros(dim, dim);
    for i in 0..dim {
        for j in 0..=i {
            let x = rng.gen_range(-0.5..0.5);
            s[(i, j)] = x;
            s[(j, i)] = x;
        }
    }
    SymplecticForm::new(n).matrix() * s
}

#[test]
fn generated_algebra_elements_have_zero_residual() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let n = rng.gen_range(1..4);
        let a = random_sp(n, &mut rng);
        assert!(sp_algebra_residual(&a).unwrap() < 1e-13);
    }
}

#[test]
fn exponentials_of_algebra_elements_are_symplectic() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..100 {
        let n = rng.gen_range(1..4);
        let a = random_sp(n, &mut rng);
        let g = matrix_exp(&a);
        let check = is_symplectic(&g, 1e-10).unwrap();
        assert!(check.passes, "residual {}", check.residual);
        // Short-time exponential of the linearized condition also passes.
        assert!(is_symplectic(&matrix_exp(&(0.01 * &a)), 1e-10).unwrap().passes);
    }
}

#[test]
fn passing_matrices_have_unit_determinant_magnitude() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..100 {
        let n = rng.gen_range(1..4);
        let g = matrix_exp(&random_sp(n, &mut rng));
        assert!(is_symplectic(&g, 1e-10).unwrap().passes);
        assert!((g.determinant().abs() - 1.0).abs() < 1e-8);
    }
}

#[test]
fn products_and_inverses_of_passing_matrices_pass() {
    let tol = 1e-10;
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..50 {
        let n = rng.gen_range(1..4);
        let g = matrix_exp(&random_sp(n, &mut rng));
        let h = matrix_exp(&random_sp(n, &mut rng));
        assert!(is_symplectic(&g, tol).unwrap().passes);
        assert!(is_symplectic(&h, tol).unwrap().passes);
        assert!(is_symplectic(&(&g * &h), 2.0 * tol).unwrap().passes);
        let inv = g.clone().try_inverse().expect("symplectic matrices are invertible");
        assert!(is_symplectic(&inv, 2.0 * tol).unwrap().passes);
    }
}

#[test]
fn monodromy_of_a_quadratic_hamiltonian_is_symplectic() {
    // For H = z^T Q z / 2 the flow matrix obeys M-dot = J Q M; its value at
    // t = 1 must preserve the form.
    let n = 2;
    let dim = 2 * n;
    let q = DMatrix::from_row_slice(dim, dim, &[
        2.0, 0.3, -0.1, 0.4,
        0.3, 1.5, 0.2, -0.2,
        -0.1, 0.2, 1.0, 0.1,
        0.4, -0.2, 0.1, 2.5,
    ]);
    let field = SymplecticForm::new(n).matrix() * q;
    let mut deriv = |_t: f64, y: &DVector<f64>| {
        let m = DMatrix::from_column_slice(dim, dim, y.as_slice());
        let dm = &field * m;
        DVector::from_column_slice(dm.as_slice())
    };
    let dt = 1e-3;
    let mut y = DVector::from_column_slice(DMatrix::<f64>::identity(dim, dim).as_slice());
    for step in 0..1000 {
        y = liemech_dynamics::rk4_step(&mut deriv, step as f64 * dt, &y, dt);
    }
    let monodromy = DMatrix::from_column_slice(dim, dim, y.as_slice());
    let check = is_symplectic(&monodromy, 1e-8).unwrap();
    assert!(check.passes, "residual {}", check.residual);
}

#[test]
fn linear_symplectic_maps_are_canonical() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for _ in 0..20 {
        let g = matrix_exp(&random_sp(1, &mut rng));
        let map = |z: &PhasePoint| PhasePoint::from_flat(&(&g * z.to_flat()));
        let z = PhasePoint::new(dvector![0.3], dvector![-0.8]);
        let check = canonical_check(map, &z, 1e-8).unwrap();
        assert!(check.passes, "residual {}", check.residual);
    }
}

#[test]
fn a_nonlinear_momentum_shear_is_canonical() {
    // (q, p) -> (q, p + 3 q^2) has Jacobian [[1, 0], [6q, 1]].
    let map = |z: &PhasePoint| {
        PhasePoint::new(z.q.clone(), dvector![z.p[0] + 3.0 * z.q[0] * z.q[0]])
    };
    let z = PhasePoint::new(dvector![0.7], dvector![0.2]);
    assert!(canonical_check(map, &z, 1e-7).unwrap().passes);
}
