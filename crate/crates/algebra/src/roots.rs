use std::collections::HashSet;
use std::fmt;

use nalgebra::DVector;

use crate::AlgebraError;

/// Simple Lie algebra families of the classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn from_letter(letter: char) -> Option<Family> {
        match letter.to_ascii_uppercase() {
            'A' => Some(Family::A),
            'B' => Some(Family::B),
            'C' => Some(Family::C),
            'D' => Some(Family::D),
            'E' => Some(Family::E),
            'F' => Some(Family::F),
            'G' => Some(Family::G),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        };
        write!(f, "{letter}")
    }
}

/// Finite set of root vectors. Coordinates are half-integers, stored doubled
/// as integers so the axioms can be checked exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    ambient_dim: usize,
    doubled: Vec<Vec<i64>>,
    family_label: Option<(Family, usize)>,
}

impl RootSystem {
    /// Builds from doubled integer coordinates (each stored vector is 2α).
    pub fn from_doubled(ambient_dim: usize, doubled: Vec<Vec<i64>>) -> Self {
        assert!(doubled.iter().all(|r| r.len() == ambient_dim), "coordinate length mismatch");
        Self { ambient_dim, doubled, family_label: None }
    }

    /// Builds from floating coordinates; every coordinate must be a
    /// half-integer to 1e-9.
    pub fn from_coordinates(
        ambient_dim: usize,
        roots: Vec<Vec<f64>>,
    ) -> Result<Self, AlgebraError> {
        let mut doubled = Vec::with_capacity(roots.len());
        for r in roots {
            if r.len() != ambient_dim {
                return Err(AlgebraError::ShapeMismatch);
            }
            let mut d = Vec::with_capacity(ambient_dim);
            for x in r {
                let twice = 2.0 * x;
                if (twice - twice.round()).abs() > 1e-9 {
                    return Err(AlgebraError::BadCoordinate { value: x });
                }
                d.push(twice.round() as i64);
            }
            doubled.push(d);
        }
        Ok(Self { ambient_dim, doubled, family_label: None })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn len(&self) -> usize {
        self.doubled.len()
    }

    pub fn is_empty(&self) -> bool {
        self.doubled.is_empty()
    }

    pub fn family_label(&self) -> Option<(Family, usize)> {
        self.family_label
    }

    /// Doubled integer coordinates (each vector is 2α).
    pub fn doubled_roots(&self) -> &[Vec<i64>] {
        &self.doubled
    }

    pub fn roots(&self) -> Vec<DVector<f64>> {
        self.doubled
            .iter()
            .map(|r| DVector::from_iterator(self.ambient_dim, r.iter().map(|&x| x as f64 / 2.0)))
            .collect()
    }
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn unit(n: usize, i: usize, value: i64) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = value;
    v
}

/// Explicit coordinate construction of the root system of a family at a
/// given rank. Valid ranks: A n≥1, B n≥2, C n≥3, D n≥4, E 6..8, F 4, G 2.
pub fn build_root_system(family: Family, rank: usize) -> Result<RootSystem, AlgebraError> {
    let invalid = || AlgebraError::InvalidRank { family, rank };
    let mut roots: Vec<Vec<i64>> = Vec::new();
    let ambient_dim = match family {
        Family::A => {
            if rank < 1 {
                return Err(invalid());
            }
            let n = rank + 1;
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        let mut r = vec![0; n];
                        r[i] = 2;
                        r[j] = -2;
                        roots.push(r);
                    }
                }
            }
            n
        }
        Family::B | Family::C => {
            let min = if family == Family::B { 2 } else { 3 };
            if rank < min {
                return Err(invalid());
            }
            let axis = if family == Family::B { 2 } else { 4 };
            for i in 0..rank {
                for s in [axis, -axis] {
                    roots.push(unit(rank, i, s));
                }
            }
            for i in 0..rank {
                for j in (i + 1)..rank {
                    for si in [2, -2] {
                        for sj in [2, -2] {
                            let mut r = vec![0; rank];
                            r[i] = si;
                            r[j] = sj;
                            roots.push(r);
                        }
                    }
                }
            }
            rank
        }
        Family::D => {
            if rank < 4 {
                return Err(invalid());
            }
            for i in 0..rank {
                for j in (i + 1)..rank {
                    for si in [2, -2] {
                        for sj in [2, -2] {
                            let mut r = vec![0; rank];
                            r[i] = si;
                            r[j] = sj;
                            roots.push(r);
                        }
                    }
                }
            }
            rank
        }
        Family::E => {
            if !(6..=8).contains(&rank) {
                return Err(invalid());
            }
            let e8 = e8_doubled();
            match rank {
                8 => roots = e8,
                7 => {
                    // Hyperplane orthogonal to the lexicographically smallest
                    // root of E8.
                    let f1 = e8.iter().min().unwrap().clone();
                    roots = e8.iter().filter(|r| dot(r, &f1) == 0).cloned().collect();
                }
                6 => {
                    // Orthogonal to the smallest root and then to the smallest
                    // remaining non-orthogonal one, which together span an A2.
                    let f1 = e8.iter().min().unwrap().clone();
                    let f2 = e8
                        .iter()
                        .filter(|r| **r != f1 && dot(r, &f1) != 0)
                        .min()
                        .unwrap()
                        .clone();
                    roots = e8
                        .iter()
                        .filter(|r| dot(r, &f1) == 0 && dot(r, &f2) == 0)
                        .cloned()
                        .collect();
                }
                _ => unreachable!(),
            }
            8
        }
        Family::F => {
            if rank != 4 {
                return Err(invalid());
            }
            for i in 0..4 {
                for s in [2, -2] {
                    roots.push(unit(4, i, s));
                }
            }
            for i in 0..4 {
                for j in (i + 1)..4 {
                    for si in [2, -2] {
                        for sj in [2, -2] {
                            let mut r = vec![0; 4];
                            r[i] = si;
                            r[j] = sj;
                            roots.push(r);
                        }
                    }
                }
            }
            for signs in 0..16u32 {
                roots.push((0..4).map(|i| if signs >> i & 1 == 1 { -1 } else { 1 }).collect());
            }
            4
        }
        Family::G => {
            if rank != 2 {
                return Err(invalid());
            }
            // Realized inside the sum-zero plane of R³ so coordinates stay
            // integral: six short roots e_i - e_j and six long ones
            // 2e_i - e_j - e_k.
            for i in 0..3 {
                for j in 0..3 {
                    if i != j {
                        let mut r = vec![0; 3];
                        r[i] = 2;
                        r[j] = -2;
                        roots.push(r);
                    }
                }
            }
            for i in 0..3 {
                let mut r = vec![-2; 3];
                r[i] = 4;
                roots.push(r.clone());
                roots.push(r.iter().map(|x| -x).collect());
            }
            3
        }
    };
    Ok(RootSystem { ambient_dim, doubled: roots, family_label: Some((family, rank)) })
}

/// E8: doubled integer vectors of squared doubled length 8 whose entries are
/// all even (±2e_i ± 2e_j) or all odd (signs with an even number of minuses).
fn e8_doubled() -> Vec<Vec<i64>> {
    let mut roots = Vec::with_capacity(240);
    for i in 0..8 {
        for j in (i + 1)..8 {
            for si in [2i64, -2] {
                for sj in [2i64, -2] {
                    let mut r = vec![0; 8];
                    r[i] = si;
                    r[j] = sj;
                    roots.push(r);
                }
            }
        }
    }
    for signs in 0..256u32 {
        if signs.count_ones() % 2 == 0 {
            roots.push((0..8).map(|i| if signs >> i & 1 == 1 { -1i64 } else { 1 }).collect());
        }
    }
    roots
}

/// Outcome of checking the three root-system axioms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxiomReport {
    /// Axiom 1: the only multiples of a root α in the set are ±α.
    pub scalar_multiples_ok: bool,
    /// Axiom 2: closure under the reflections s_α(β) = β − (2⟨β,α⟩/⟨α,α⟩)α.
    pub reflection_closed: bool,
    /// Axiom 3: 2⟨β,α⟩/⟨α,α⟩ is an integer for all pairs.
    pub integrality_ok: bool,
    /// Largest numeric violation observed across all three checks; 0 when
    /// every axiom holds.
    pub worst_violation: f64,
}

impl AxiomReport {
    pub fn all_ok(&self) -> bool {
        self.scalar_multiples_ok && self.reflection_closed && self.integrality_ok
    }

    fn merge(self, other: AxiomReport) -> AxiomReport {
        AxiomReport {
            scalar_multiples_ok: self.scalar_multiples_ok && other.scalar_multiples_ok,
            reflection_closed: self.reflection_closed && other.reflection_closed,
            integrality_ok: self.integrality_ok && other.integrality_ok,
            worst_violation: self.worst_violation.max(other.worst_violation),
        }
    }

    fn clean() -> AxiomReport {
        AxiomReport {
            scalar_multiples_ok: true,
            reflection_closed: true,
            integrality_ok: true,
            worst_violation: 0.0,
        }
    }
}

fn collinear(a: &[i64], b: &[i64]) -> bool {
    let n = a.len();
    for i in 0..n {
        for j in (i + 1)..n {
            if a[i] * b[j] != a[j] * b[i] {
                return false;
            }
        }
    }
    true
}

/// Checks every axiom against one root α; exact integer arithmetic except
/// for the violation magnitudes.
fn check_against(rs: &RootSystem, members: &HashSet<&[i64]>, alpha: &[i64]) -> AxiomReport {
    let mut report = AxiomReport::clean();
    let alpha_sq = dot(alpha, alpha);
    if alpha_sq == 0 {
        // Roots are nonzero by definition; a zero vector fails axiom 1.
        report.scalar_multiples_ok = false;
        report.worst_violation = 1.0;
        return report;
    }
    for beta in rs.doubled_roots() {
        let beta: &[i64] = beta;
        if collinear(alpha, beta) && beta != alpha && beta.iter().zip(alpha).any(|(b, a)| *b != -a)
        {
            report.scalar_multiples_ok = false;
            let ratio = (dot(beta, beta) as f64 / alpha_sq as f64).sqrt();
            report.worst_violation = report.worst_violation.max((ratio - 1.0).abs());
        }
        let num = 2 * dot(beta, alpha);
        if num % alpha_sq == 0 {
            let k = num / alpha_sq;
            let reflected: Vec<i64> = beta.iter().zip(alpha).map(|(b, a)| b - k * a).collect();
            if !members.contains(reflected.as_slice()) {
                report.reflection_closed = false;
                let dist =
                    nearest_distance(rs, &reflected.iter().map(|&x| x as f64).collect::<Vec<_>>());
                report.worst_violation = report.worst_violation.max(dist / 2.0);
            }
        } else {
            report.integrality_ok = false;
            let x = num as f64 / alpha_sq as f64;
            report.worst_violation = report.worst_violation.max((x - x.round()).abs());
            let reflected: Vec<f64> =
                beta.iter().zip(alpha).map(|(b, a)| *b as f64 - x * *a as f64).collect();
            let dist = nearest_distance(rs, &reflected);
            if dist > 1e-9 {
                report.reflection_closed = false;
                report.worst_violation = report.worst_violation.max(dist / 2.0);
            }
        }
    }
    report
}

fn nearest_distance(rs: &RootSystem, point: &[f64]) -> f64 {
    rs.doubled_roots()
        .iter()
        .map(|r| {
            r.iter()
                .zip(point)
                .map(|(a, b)| (*a as f64 - b) * (*a as f64 - b))
                .sum::<f64>()
                .sqrt()
        })
        .fold(f64::INFINITY, f64::min)
}

#[doc(hidden)]
pub mod internals {
    use super::*;

    pub fn verify_seq(rs: &RootSystem) -> AxiomReport {
        let members: HashSet<&[i64]> = rs.doubled_roots().iter().map(|r| r.as_slice()).collect();
        rs.doubled_roots()
            .iter()
            .map(|alpha| check_against(rs, &members, alpha))
            .fold(AxiomReport::clean(), AxiomReport::merge)
    }

    #[cfg(feature = "parallel")]
    pub fn verify_par(rs: &RootSystem) -> AxiomReport {
        use rayon::prelude::*;
        let members: HashSet<&[i64]> = rs.doubled_roots().iter().map(|r| r.as_slice()).collect();
        rs.doubled_roots()
            .par_iter()
            .map(|alpha| check_against(rs, &members, alpha))
            .reduce(AxiomReport::clean, AxiomReport::merge)
    }
}

/// Checks the three axioms over every pair of roots and reports which hold.
pub fn verify_root_system(rs: &RootSystem) -> AxiomReport {
    #[cfg(feature = "parallel")]
    {
        internals::verify_par(rs)
    }
    #[cfg(not(feature = "parallel"))]
    {
        internals::verify_seq(rs)
    }
}

/// Distinct pairwise angles between roots, in degrees, sorted ascending.
/// Self-pairs contribute 0 and opposite pairs 180.
pub fn root_angles(rs: &RootSystem) -> Vec<f64> {
    let mut angles: Vec<f64> = Vec::new();
    let roots = rs.doubled_roots();
    for i in 0..roots.len() {
        for j in i..roots.len() {
            // One square root of the exact integer product keeps aligned and
            // opposite pairs at cos = ±1 exactly.
            let norms = dot(&roots[i], &roots[i]) * dot(&roots[j], &roots[j]);
            let cos = dot(&roots[i], &roots[j]) as f64 / (norms as f64).sqrt();
            let angle = cos.clamp(-1.0, 1.0).acos().to_degrees();
            if !angles.iter().any(|a| (a - angle).abs() < 1e-6) {
                angles.push(angle);
            }
        }
    }
    angles.sort_by(|a, b| a.partial_cmp(b).unwrap());
    angles
}
