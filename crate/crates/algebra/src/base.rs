use std::collections::HashSet;
use std::f64::consts::PI;

use nalgebra::{DMatrix, DVector};

use crate::roots::RootSystem;
use crate::AlgebraError;

/// Generic linear functional with powers of π as coefficients; irrational
/// coefficients avoid ties on half-integer root coordinates, so the sign
/// split into positive and negative roots is unambiguous.
fn height(doubled: &[i64]) -> f64 {
    doubled.iter().enumerate().map(|(i, &x)| PI.powi(i as i32 + 1) * x as f64).sum()
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn to_f64(doubled: &[i64]) -> DVector<f64> {
    DVector::from_iterator(doubled.len(), doubled.iter().map(|&x| x as f64 / 2.0))
}

/// Ordered base of simple roots: the positive roots (under a fixed generic
/// functional) not expressible as a sum of two positive roots, ordered
/// breadth-first from the node of lowest degree with lexicographic
/// tie-breaks. The system must be irreducible within its span.
pub fn simple_roots(rs: &RootSystem) -> Result<Vec<DVector<f64>>, AlgebraError> {
    let positive: Vec<&[i64]> = rs
        .doubled_roots()
        .iter()
        .map(|r| r.as_slice())
        .filter(|r| height(r) > 0.0)
        .collect();
    let positive_set: HashSet<&[i64]> = positive.iter().copied().collect();
    let mut simple: Vec<Vec<i64>> = Vec::new();
    for alpha in &positive {
        let decomposes = positive.iter().any(|beta| {
            let rest: Vec<i64> = alpha.iter().zip(*beta).map(|(a, b)| a - b).collect();
            rest.iter().any(|&x| x != 0) && positive_set.contains(rest.as_slice())
        });
        if !decomposes {
            simple.push(alpha.to_vec());
        }
    }

    let span_rank = {
        let floats: Vec<f64> = rs.doubled_roots().iter().flatten().map(|&x| x as f64).collect();
        DMatrix::from_row_slice(rs.len(), rs.ambient_dim(), &floats).rank(1e-9)
    };
    assert_eq!(simple.len(), span_rank, "base size must equal the rank of the span");

    // Breadth-first ordering from the lowest-degree node; ties and neighbor
    // visits resolved lexicographically on coordinates.
    let k = simple.len();
    let adjacent =
        |i: usize, j: usize| i != j && dot(&simple[i], &simple[j]) != 0;
    let degree: Vec<usize> =
        (0..k).map(|i| (0..k).filter(|&j| adjacent(i, j)).count()).collect();
    let start = (0..k)
        .min_by(|&a, &b| degree[a].cmp(&degree[b]).then_with(|| simple[a].cmp(&simple[b])))
        .ok_or(AlgebraError::NotIrreducible)?;
    let mut order = vec![start];
    let mut seen = vec![false; k];
    seen[start] = true;
    let mut cursor = 0;
    while cursor < order.len() {
        let current = order[cursor];
        cursor += 1;
        let mut neighbors: Vec<usize> =
            (0..k).filter(|&j| !seen[j] && adjacent(current, j)).collect();
        neighbors.sort_by(|&a, &b| simple[a].cmp(&simple[b]));
        for n in neighbors {
            seen[n] = true;
            order.push(n);
        }
    }
    if order.len() != k {
        return Err(AlgebraError::NotIrreducible);
    }
    Ok(order.into_iter().map(|i| to_f64(&simple[i])).collect())
}

/// Integer matrix over an ordered base with entries
/// `A[i][j] = 2⟨α_i, α_j⟩ / ⟨α_i, α_i⟩`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanMatrix {
    a: Vec<Vec<i64>>,
}

impl CartanMatrix {
    pub fn size(&self) -> usize {
        self.a.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.a[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.a
    }
}

pub fn cartan_matrix(base: &[DVector<f64>]) -> Result<CartanMatrix, AlgebraError> {
    let k = base.len();
    let mut a = vec![vec![0i64; k]; k];
    for i in 0..k {
        for j in 0..k {
            let value = 2.0 * base[i].dot(&base[j]) / base[i].dot(&base[i]);
            if (value - value.round()).abs() >= 1e-9 {
                return Err(AlgebraError::NonIntegerEntry { row: i, col: j, value });
            }
            a[i][j] = value.round() as i64;
        }
    }
    Ok(CartanMatrix { a })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::{build_root_system, Family};

    #[test]
    fn a2_base_is_two_roots_at_120_degrees() {
        let rs = build_root_system(Family::A, 2).unwrap();
        let base = simple_roots(&rs).unwrap();
        assert_eq!(base.len(), 2);
        let cos = base[0].dot(&base[1]) / (base[0].norm() * base[1].norm());
        assert!((cos.acos().to_degrees() - 120.0).abs() < 1e-9);
        let cm = cartan_matrix(&base).unwrap();
        assert_eq!(cm.rows(), &[vec![2, -1], vec![-1, 2]]);
    }

    #[test]
    fn a1_base_is_a_single_root() {
        let rs = build_root_system(Family::A, 1).unwrap();
        assert_eq!(simple_roots(&rs).unwrap().len(), 1);
    }

    #[test]
    fn b2_base_mixes_lengths_at_135_degrees() {
        let rs = build_root_system(Family::B, 2).unwrap();
        let base = simple_roots(&rs).unwrap();
        assert_eq!(base.len(), 2);
        let lengths: Vec<f64> = base.iter().map(|r| r.norm_squared()).collect();
        assert!((lengths[0] - lengths[1]).abs() > 0.5, "one long and one short root");
        let cos = base[0].dot(&base[1]) / (base[0].norm() * base[1].norm());
        assert!((cos.acos().to_degrees() - 135.0).abs() < 1e-9);
        let cm = cartan_matrix(&base).unwrap();
        assert_eq!(cm.entry(0, 1) * cm.entry(1, 0), 2);
    }

    #[test]
    fn g2_base_product_is_three() {
        let rs = build_root_system(Family::G, 2).unwrap();
        let cm = cartan_matrix(&simple_roots(&rs).unwrap()).unwrap();
        assert_eq!(cm.entry(0, 1) * cm.entry(1, 0), 3);
    }

    #[test]
    fn every_root_has_single_signed_coordinates_in_the_base() {
        for (family, rank) in
            [(Family::A, 3), (Family::B, 3), (Family::C, 3), (Family::D, 4), (Family::F, 4)]
        {
            let rs = build_root_system(family, rank).unwrap();
            let base = simple_roots(&rs).unwrap();
            let n = rs.ambient_dim();
            let basis = DMatrix::from_fn(n, base.len(), |r, c| base[c][r]);
            let decomposition = basis.clone().svd(true, true);
            for root in rs.roots() {
                let coeffs = decomposition.solve(&root, 1e-12).unwrap();
                let all_nonneg = coeffs.iter().all(|&c| c >= -1e-9);
                let all_nonpos = coeffs.iter().all(|&c| c <= 1e-9);
                assert!(all_nonneg || all_nonpos, "{family}{rank}: mixed signs {coeffs}");
            }
        }
    }

    #[test]
    fn reducible_span_is_rejected() {
        let rs = RootSystem::from_doubled(
            2,
            vec![vec![2, 0], vec![-2, 0], vec![0, 2], vec![0, -2]],
        );
        assert!(matches!(simple_roots(&rs), Err(AlgebraError::NotIrreducible)));
    }

    #[test]
    fn non_integer_ratio_is_rejected() {
        let base = vec![
            DVector::from_vec(vec![1.0, 0.0]),
            DVector::from_vec(vec![1.5, 0.5]),
        ];
        assert!(matches!(
            cartan_matrix(&base),
            Err(AlgebraError::NonIntegerEntry { row: 1, col: 0, .. })
        ));
    }
}
