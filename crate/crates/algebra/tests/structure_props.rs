use liemech_algebra::{is_semisimple, jacobi_defect, killing_form, StructureAlgebra};
use liemech_groups::se2_bracket;
use nalgebra::{DVector, Vector2};
use proptest::prelude::*;

/// se(2) structure constants read off from the planar bracket, with the
/// rotation generator first and the two translations after it.
fn se2_constants() -> StructureAlgebra {
    let basis = [
        (1.0, Vector2::zeros()),
        (0.0, Vector2::new(1.0, 0.0)),
        (0.0, Vector2::new(0.0, 1.0)),
    ];
    let mut c = vec![vec![vec![0.0; 3]; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            let (xi, v) = se2_bracket(basis[i], basis[j]);
            c[i][j] = vec![xi, v.x, v.y];
        }
    }
    StructureAlgebra::new(3, c).unwrap()
}

#[test]
fn se2_satisfies_jacobi_but_is_not_semisimple() {
    let alg = se2_constants();
    assert!(jacobi_defect(&alg) < 1e-12);
    assert!(!is_semisimple(&alg));
    assert!(is_semisimple(&StructureAlgebra::so3()));
}

#[test]
fn se2_killing_form_is_degenerate_along_translations() {
    let alg = se2_constants();
    let e2 = DVector::from_vec(vec![0.0, 1.0, 0.0]);
    for j in 0..3 {
        let mut y = DVector::zeros(3);
        y[j] = 1.0;
        assert_eq!(killing_form(&alg, &e2, &y), 0.0);
    }
}

fn vec3() -> impl Strategy<Value = DVector<f64>> {
    prop::collection::vec(-5.0f64..5.0, 3).prop_map(DVector::from_vec)
}

#[allow(clippy::needless_range_loop)]
fn antisymmetric_constants() -> impl Strategy<Value = StructureAlgebra> {
    prop::collection::vec(-1.0f64..1.0, 9).prop_map(|flat| {
        let mut c = vec![vec![vec![0.0; 3]; 3]; 3];
        let mut it = flat.into_iter();
        for i in 0..3 {
            for j in (i + 1)..3 {
                for k in 0..3 {
                    let value = it.next().unwrap();
                    c[i][j][k] = value;
                    c[j][i][k] = -value;
                }
            }
        }
        StructureAlgebra::new(3, c).unwrap()
    })
}

proptest! {
    #[test]
    fn killing_form_is_symmetric(alg in antisymmetric_constants(), x in vec3(), y in vec3()) {
        let forward = killing_form(&alg, &x, &y);
        let backward = killing_form(&alg, &y, &x);
        prop_assert!((forward - backward).abs() < 1e-12 * (1.0 + forward.abs()));
    }

    #[test]
    fn killing_form_is_bilinear(
        alg in antisymmetric_constants(),
        x in vec3(),
        y in vec3(),
        z in vec3(),
        a in -3.0f64..3.0,
        b in -3.0f64..3.0,
    ) {
        let combined = killing_form(&alg, &(a * &x + b * &y), &z);
        let split = a * killing_form(&alg, &x, &z) + b * killing_form(&alg, &y, &z);
        prop_assert!((combined - split).abs() < 1e-12 * (1.0 + split.abs()));
    }

    #[test]
    fn so3_killing_form_is_negative_definite(x in vec3()) {
        let alg = StructureAlgebra::so3();
        let value = killing_form(&alg, &x, &x);
        prop_assert!(value <= 0.0);
        if x.norm() > 1e-6 {
            prop_assert!((value + 2.0 * x.norm_squared()).abs() < 1e-10);
        }
    }
}
