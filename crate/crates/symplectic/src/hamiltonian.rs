use liemech_dynamics::rk4_step;
use nalgebra::DVector;

/// Point of phase space split into positions and conjugate momenta, the
/// ordering the standard form assumes when z = (q, p) is flattened.
#[derive(Debug, Clone, PartialEq)]
pub struct PhasePoint {
    pub q: DVector<f64>,
    pub p: DVector<f64>,
}

impl PhasePoint {
    pub fn new(q: DVector<f64>, p: DVector<f64>) -> Self {
        assert_eq!(q.len(), p.len(), "positions and momenta must pair up");
        assert!(
            q.iter().chain(p.iter()).all(|x| x.is_finite()),
            "phase points must be finite"
        );
        Self { q, p }
    }

    pub fn dim(&self) -> usize {
        self.q.len()
    }

    pub fn from_flat(z: &DVector<f64>) -> Self {
        assert!(z.len().is_multiple_of(2), "a flat phase vector has even length");
        let n = z.len() / 2;
        Self::new(z.rows(0, n).into_owned(), z.rows(n, n).into_owned())
    }

    pub fn to_flat(&self) -> DVector<f64> {
        let n = self.dim();
        let mut z = DVector::zeros(2 * n);
        z.rows_mut(0, n).copy_from(&self.q);
        z.rows_mut(n, n).copy_from(&self.p);
        z
    }
}

/// Hamilton's equations z-dot = J grad H(z), evaluated componentwise:
/// q-dot = dH/dp and p-dot = -dH/dq. The gradient is handed over flat, dq
/// block first, matching [`PhasePoint::to_flat`].
pub fn hamiltonian_rhs<G>(grad_h: G, z: &PhasePoint) -> DVector<f64>
where
    G: Fn(&PhasePoint) -> DVector<f64>,
{
    let n = z.dim();
    let g = grad_h(z);
    assert_eq!(g.len(), 2 * n, "gradient length must match phase dimension");
    let mut zdot = DVector::zeros(2 * n);
    for i in 0..n {
        zdot[i] = g[n + i];
        zdot[n + i] = -g[i];
    }
    zdot
}

/// Scalar potential with its analytic gradient. Implementors keep the two
/// consistent; the particle Hamiltonian inherits that consistency.
pub trait Potential {
    fn value(&self, q: &DVector<f64>) -> f64;
    fn grad(&self, q: &DVector<f64>) -> DVector<f64>;
}

/// Free particle.
#[derive(Debug, Clone, Copy)]
pub struct Zero;

impl Potential for Zero {
    fn value(&self, _q: &DVector<f64>) -> f64 {
        0.0
    }

    fn grad(&self, q: &DVector<f64>) -> DVector<f64> {
        DVector::zeros(q.len())
    }
}

/// Isotropic spring (k/2)|q|^2.
#[derive(Debug, Clone, Copy)]
pub struct Harmonic {
    pub k: f64,
}

impl Potential for Harmonic {
    fn value(&self, q: &DVector<f64>) -> f64 {
        0.5 * self.k * q.norm_squared()
    }

    fn grad(&self, q: &DVector<f64>) -> DVector<f64> {
        self.k * q
    }
}

/// H(q, p) = (1/2m) sum p_i^2 + V(q) with the gradient assembled from the
/// potential's analytic gradient and p/m.
#[derive(Debug, Clone)]
pub struct ParticleHamiltonian<P> {
    pub m: f64,
    pub potential: P,
}

pub fn particle_hamiltonian<P: Potential>(m: f64, potential: P) -> ParticleHamiltonian<P> {
    assert!(m > 0.0, "mass must be positive");
    ParticleHamiltonian { m, potential }
}

impl<P: Potential> ParticleHamiltonian<P> {
    pub fn value(&self, z: &PhasePoint) -> f64 {
        z.p.norm_squared() / (2.0 * self.m) + self.potential.value(&z.q)
    }

    /// Flat gradient [dH/dq; dH/dp] = [grad V(q); p/m].
    pub fn grad(&self, z: &PhasePoint) -> DVector<f64> {
        let n = z.dim();
        let mut g = DVector::zeros(2 * n);
        g.rows_mut(0, n).copy_from(&self.potential.grad(&z.q));
        g.rows_mut(n, n).copy_from(&(&z.p / self.m));
        g
    }
}

/// Integrates z-dot = J grad H(z) with the shared classical one-step method
/// and returns the sampled flow, (0, z0) first. No symplectic integrator is
/// claimed; conservation statements downstream budget for fourth-order error.
pub fn flow<G>(grad_h: G, z0: &PhasePoint, dt: f64, steps: usize) -> Vec<(f64, PhasePoint)>
where
    G: Fn(&PhasePoint) -> DVector<f64>,
{
    assert!(dt > 0.0 && steps >= 1, "flows need a positive step and horizon");
    let mut f =
        |_t: f64, y: &DVector<f64>| hamiltonian_rhs(&grad_h, &PhasePoint::from_flat(y));
    let mut out = Vec::with_capacity(steps + 1);
    out.push((0.0, z0.clone()));
    let mut y = z0.to_flat();
    for step in 0..steps {
        let t = step as f64 * dt;
        y = rk4_step(&mut f, t, &y, dt);
        out.push(((step + 1) as f64 * dt, PhasePoint::from_flat(&y)));
    }
    out
}
