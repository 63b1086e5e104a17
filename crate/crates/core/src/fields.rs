//! Uniform static field configurations and electron kinematic state.

use nalgebra::Vector3;

use crate::error::{Error, Result};
use crate::quantities::ConstantsTable;

pub type Vec3 = Vector3<f64>;

/// Uniform electric field (V/m) and magnetic induction (T).
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct FieldConfig {
    pub e_field: Vec3,
    pub b_field: Vec3,
}

/// Electric displacement D (C/m²) and magnetic induction B (T) magnitudes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Induction {
    pub d: f64,
    pub b: f64,
}

impl FieldConfig {
    pub fn new(e_field: Vec3, b_field: Vec3) -> Self {
        Self { e_field, b_field }
    }

    pub fn electric(e_field: Vec3) -> Self {
        Self::new(e_field, Vec3::zeros())
    }

    pub fn magnetic(b_field: Vec3) -> Self {
        Self::new(Vec3::zeros(), b_field)
    }

    /// E along x̂ and B along ẑ with the given magnitudes.
    pub fn from_magnitudes(e: f64, b: f64) -> Self {
        Self::new(Vec3::new(e, 0.0, 0.0), Vec3::new(0.0, 0.0, b))
    }

    /// Build from induction magnitudes, D = ε₀E along x̂ and B along ẑ.
    pub fn from_induction(d: f64, b: f64, k: &ConstantsTable) -> Self {
        Self::from_magnitudes(d / k.eps0, b)
    }

    /// Magnetic field strength H = B/μ₀ (A/m).
    pub fn h_field(&self, k: &ConstantsTable) -> Vec3 {
        self.b_field / k.mu0
    }

    pub fn d_magnitude(&self, k: &ConstantsTable) -> f64 {
        k.eps0 * self.e_field.norm()
    }

    pub fn h_magnitude(&self, k: &ConstantsTable) -> f64 {
        self.b_field.norm() / k.mu0
    }
}

pub fn induction(config: &FieldConfig, k: &ConstantsTable) -> Induction {
    Induction {
        d: config.d_magnitude(k),
        b: config.b_field.norm(),
    }
}

/// Angle in [0, π] between the velocity and a field line direction.
pub fn beta_angle(v: &Vec3, field_line: &Vec3) -> Result<f64> {
    let nv = v.norm();
    let nf = field_line.norm();
    if nv == 0.0 {
        return Err(Error::ZeroVector { what: "velocity" });
    }
    if nf == 0.0 {
        return Err(Error::ZeroVector { what: "field line" });
    }
    let cos = (v.dot(field_line) / (nv * nf)).clamp(-1.0, 1.0);
    Ok(cos.acos())
}

/// Position (m), velocity (m/s) and laboratory time (s) of the electron.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ElectronState {
    pub position: Vec3,
    pub velocity: Vec3,
    pub t: f64,
}

impl ElectronState {
    pub fn new(position: Vec3, velocity: Vec3, t: f64, k: &ConstantsTable) -> Result<Self> {
        check_subluminal(&velocity, k)?;
        Ok(Self {
            position,
            velocity,
            t,
        })
    }

    pub fn at_origin(velocity: Vec3, k: &ConstantsTable) -> Result<Self> {
        Self::new(Vec3::zeros(), velocity, 0.0, k)
    }

    pub fn speed(&self) -> f64 {
        self.velocity.norm()
    }
}

pub(crate) fn check_subluminal(v: &Vec3, k: &ConstantsTable) -> Result<()> {
    let speed = v.norm();
    if speed.is_finite() && speed < k.c {
        Ok(())
    } else {
        Err(Error::SuperluminalInput { speed })
    }
}

/// Lorentz factor γ = 1/√(1 − v²/c²).
pub fn lorentz_factor(v: &Vec3, k: &ConstantsTable) -> f64 {
    1.0 / (1.0 - v.norm_squared() / (k.c * k.c)).sqrt()
}
