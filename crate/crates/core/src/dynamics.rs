//! Electron acceleration laws and the split-step trajectory integrator.
//!
//! Two modes are kept strictly apart. `PaperLiteral` evaluates the printed
//! equations of motion verbatim, m dV/dt = eE/ε₀ and m dV/dt = (e/c)[H V],
//! as non-relativistic laws. `StandardLorentz` integrates
//! dp/dt = e(E + v×B) with p = γ m_e v.

use crate::bremsstrahlung::{power_kinematic_form, PowerVariant};
use crate::error::{Error, Result};
use crate::fields::{check_subluminal, lorentz_factor, ElectronState, FieldConfig, Vec3};
use crate::quantities::{ConstantsTable, Dimension};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DynamicsMode {
    PaperLiteral,
    #[default]
    StandardLorentz,
}

/// A vector value with the dimension its defining formula produces, which
/// for the literal laws is not an acceleration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LiteralVector {
    pub value: Vec3,
    pub dim: Dimension,
}

/// eE/(ε₀ m_e), as printed.
pub fn accel_electric_literal(e_field: &Vec3, k: &ConstantsTable) -> LiteralVector {
    LiteralVector {
        value: e_field * (k.e / (k.eps0 * k.m_e)),
        dim: Dimension::CHARGE * Dimension::ELECTRIC_FIELD
            / (Dimension::PERMITTIVITY * Dimension::MASS),
    }
}

/// (e/(m_e c)) H×v, with the printed `[HV]` ordering.
pub fn accel_magnetic_literal(
    v: &Vec3,
    h_field: &Vec3,
    k: &ConstantsTable,
) -> Result<LiteralVector> {
    check_subluminal(v, k)?;
    Ok(LiteralVector {
        value: h_field.cross(v) * (k.e / (k.m_e * k.c)),
        dim: Dimension::CHARGE * Dimension::MAGNETIC_FIELD_STRENGTH * Dimension::VELOCITY
            / (Dimension::MASS * Dimension::VELOCITY),
    })
}

/// dv/dt for dp/dt = e(E + v×B), p = γ m_e v.
pub fn accel_standard(v: &Vec3, config: &FieldConfig, k: &ConstantsTable) -> Result<Vec3> {
    check_subluminal(v, k)?;
    let force = (config.e_field + v.cross(&config.b_field)) * k.e;
    let gamma = lorentz_factor(v, k);
    Ok((force - v * (v.dot(&force) / (k.c * k.c))) / (gamma * k.m_e))
}

/// Acceleration used for the radiated-power diagnostic in the given mode.
pub fn acceleration(
    v: &Vec3,
    config: &FieldConfig,
    mode: DynamicsMode,
    k: &ConstantsTable,
) -> Result<Vec3> {
    match mode {
        DynamicsMode::StandardLorentz => accel_standard(v, config, k),
        DynamicsMode::PaperLiteral => {
            let electric = accel_electric_literal(&config.e_field, k);
            let magnetic = accel_magnetic_literal(v, &config.h_field(k), k)?;
            Ok(electric.value + magnetic.value)
        }
    }
}

/// Rotate `w` by the angle |Ω|·dt about Ω, the exact flow of dw/dt = Ω×w.
fn rotate(w: &Vec3, omega: &Vec3, dt: f64) -> Vec3 {
    let rate = omega.norm();
    if rate == 0.0 {
        return *w;
    }
    let axis = omega / rate;
    let (sin, cos) = (rate * dt).sin_cos();
    w * cos + axis.cross(w) * sin + axis * (axis.dot(w) * (1.0 - cos))
}

/// Advance one step: half electric kick, exact magnetic rotation, half
/// electric kick. Position uses the mean of old and new velocities.
pub fn step(
    state: &ElectronState,
    config: &FieldConfig,
    dt: f64,
    mode: DynamicsMode,
    k: &ConstantsTable,
) -> Result<ElectronState> {
    if !(dt > 0.0 && dt.is_finite()) {
        return Err(Error::InvalidArgument {
            name: "dt",
            reason: format!("must be positive and finite, got {dt}"),
        });
    }
    check_subluminal(&state.velocity, k)?;
    let half = 0.5 * dt;
    let velocity = match mode {
        DynamicsMode::StandardLorentz => {
            let q_over_m = k.e / k.m_e;
            let kick = config.e_field * (q_over_m * half);
            let u_minus = state.velocity * lorentz_factor(&state.velocity, k) + kick;
            let gamma_minus = (1.0 + u_minus.norm_squared() / (k.c * k.c)).sqrt();
            let omega = config.b_field * (-q_over_m / gamma_minus);
            let u_new = rotate(&u_minus, &omega, dt) + kick;
            let gamma_new = (1.0 + u_new.norm_squared() / (k.c * k.c)).sqrt();
            u_new / gamma_new
        }
        DynamicsMode::PaperLiteral => {
            let kick = accel_electric_literal(&config.e_field, k).value * half;
            let omega = config.h_field(k) * (k.e / (k.m_e * k.c));
            let v_new = rotate(&(state.velocity + kick), &omega, dt) + kick;
            let speed = v_new.norm();
            if speed.is_nan() || speed >= k.c {
                return Err(Error::StepRejected { step: 0, speed });
            }
            v_new
        }
    };
    Ok(ElectronState {
        position: state.position + (state.velocity + velocity) * half,
        velocity,
        t: state.t + dt,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sample {
    pub state: ElectronState,
    /// Instantaneous radiated power from the kinematic form.
    pub power: f64,
}

/// Uniformly sampled path, including the initial state.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub samples: Vec<Sample>,
    pub dt: f64,
    pub mode: DynamicsMode,
}

impl Trajectory {
    /// Trapezoidal dt·Σ P over the samples.
    pub fn cumulative_energy(&self) -> f64 {
        let n = self.samples.len();
        if n < 2 {
            return 0.0;
        }
        let inner: f64 = self.samples[1..n - 1].iter().map(|s| s.power).sum();
        self.dt * (inner + 0.5 * (self.samples[0].power + self.samples[n - 1].power))
    }

    pub fn final_state(&self) -> &ElectronState {
        &self.samples[self.samples.len() - 1].state
    }

    pub fn final_speed(&self) -> f64 {
        self.final_state().speed()
    }

    /// Largest |(|v_i| − |v_0|)/|v_0||; zero when starting at rest.
    pub fn max_speed_drift(&self) -> f64 {
        let v0 = self.samples[0].state.speed();
        if v0 == 0.0 {
            return 0.0;
        }
        self.samples
            .iter()
            .map(|s| ((s.state.speed() - v0) / v0).abs())
            .fold(0.0, f64::max)
    }
}

fn power_variant(mode: DynamicsMode) -> PowerVariant {
    match mode {
        DynamicsMode::StandardLorentz => PowerVariant::Textbook,
        DynamicsMode::PaperLiteral => PowerVariant::PaperLiteral,
    }
}

fn sample(
    state: ElectronState,
    config: &FieldConfig,
    mode: DynamicsMode,
    k: &ConstantsTable,
) -> Result<Sample> {
    let a = acceleration(&state.velocity, config, mode, k)?;
    let power = power_kinematic_form(&state.velocity, &a, power_variant(mode), k)?.watts();
    Ok(Sample { state, power })
}

pub fn integrate(
    state0: &ElectronState,
    config: &FieldConfig,
    dt: f64,
    n_steps: usize,
    mode: DynamicsMode,
    k: &ConstantsTable,
) -> Result<Trajectory> {
    if n_steps == 0 {
        return Err(Error::InvalidArgument {
            name: "n_steps",
            reason: "must be at least 1".into(),
        });
    }
    let mut samples = Vec::with_capacity(n_steps + 1);
    samples.push(sample(*state0, config, mode, k)?);
    let mut state = *state0;
    for index in 1..=n_steps {
        state = step(&state, config, dt, mode, k).map_err(|err| match err {
            Error::StepRejected { speed, .. } => Error::StepRejected { step: index, speed },
            other => other,
        })?;
        // uniform grid without accumulated rounding
        state.t = state0.t + index as f64 * dt;
        samples.push(sample(state, config, mode, k)?);
    }
    Ok(Trajectory { samples, dt, mode })
}
