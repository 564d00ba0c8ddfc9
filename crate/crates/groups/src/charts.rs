use nalgebra::DVector;

use crate::GroupError;

/// Transition map between the two stereographic charts of the sphere:
/// `z ↦ z/‖z‖²`. Involutive on its domain, the punctured plane.
pub fn stereographic_transition(z: &DVector<f64>) -> Result<DVector<f64>, GroupError> {
    let n2 = z.norm_squared();
    if n2 == 0.0 {
        return Err(GroupError::ZeroInput);
    }
    Ok(z / n2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn halves_a_radius_two_vector() {
        let z = DVector::from_vec(vec![2.0, 0.0]);
        assert_eq!(stereographic_transition(&z).unwrap(), DVector::from_vec(vec![0.5, 0.0]));
    }

    #[test]
    fn fixes_unit_vectors() {
        let z = DVector::from_vec(vec![0.6, 0.8]);
        assert_relative_eq!(stereographic_transition(&z).unwrap(), z, epsilon = 1e-15);
    }

    #[test]
    fn is_an_involution() {
        let z = DVector::from_vec(vec![0.3, -1.7, 2.2]);
        let twice = stereographic_transition(&stereographic_transition(&z).unwrap()).unwrap();
        assert_relative_eq!(twice, z, epsilon = 1e-14);
    }

    #[test]
    fn rejects_the_origin() {
        let z = DVector::zeros(3);
        assert!(matches!(stereographic_transition(&z), Err(GroupError::ZeroInput)));
    }
}
