use nalgebra::Vector3;

use crate::Rotation3;

/// Element of the ten-parameter Galilei group: time shift `s`, space
/// translation `a`, boost velocity `vel`, rotation `rot`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GalileiTransform {
    pub s: f64,
    pub a: Vector3<f64>,
    pub vel: Vector3<f64>,
    pub rot: Rotation3,
}

impl GalileiTransform {
    pub fn new(s: f64, a: Vector3<f64>, vel: Vector3<f64>, rot: Rotation3) -> Self {
        Self { s, a, vel, rot }
    }

    pub fn identity() -> Self {
        Self { s: 0.0, a: Vector3::zeros(), vel: Vector3::zeros(), rot: Rotation3::identity() }
    }

    pub fn inverse(&self) -> Self {
        let rot_inv = self.rot.inverse();
        Self {
            s: -self.s,
            a: rot_inv.act(self.vel * self.s - self.a),
            vel: -rot_inv.act(self.vel),
            rot: rot_inv,
        }
    }
}

/// Acts on an event: `(t, x) ↦ (t + s, rot·x + vel·t + a)`. Time differences
/// and distances between synchronous events are preserved.
pub fn galilei_apply(g: &GalileiTransform, event: (f64, Vector3<f64>)) -> (f64, Vector3<f64>) {
    let (t, x) = event;
    (t + g.s, g.rot.act(x) + g.vel * t + g.a)
}

/// Composition with `apply(compose(g2, g1), e) = apply(g2, apply(g1, e))`.
pub fn galilei_compose(g2: &GalileiTransform, g1: &GalileiTransform) -> GalileiTransform {
    GalileiTransform {
        s: g1.s + g2.s,
        a: g2.rot.act(g1.a) + g2.vel * g1.s + g2.a,
        vel: g2.rot.act(g1.vel) + g2.vel,
        rot: g2.rot.compose(&g1.rot),
    }
}
