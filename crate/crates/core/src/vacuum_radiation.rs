//! Radiation from vacuum: fluctuation terms, frequency–field laws, radiant
//! energy and intensity, and the Lamb-shift reference magnitudes.
//!
//! Everything is available in two modes. [`EvalMode::PaperCoefficients`]
//! uses the printed powers of ten (ω = 10¹²·x, δε̄ = 10⁻³⁴D³ and so on);
//! [`EvalMode::LiteralFormulas`] evaluates the printed symbolic formulas from
//! the CODATA constants. The two disagree by many orders of magnitude and
//! neither is corrected here; the audit module reports the gaps.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fields::{induction, FieldConfig};
use crate::quantities::{ConstantsTable, Dimension, Quantity};
use crate::zpf::{displacement_prefactor, mean_square_displacement};

/// Printed coefficient of both frequency laws, ω = 10¹²·x.
pub const OMEGA_COEFFICIENT: f64 = 1e12;
/// δε̄_E = 10⁻³⁴·D³.
pub const ELECTRIC_ENERGY_COEFFICIENT: f64 = 1e-34;
/// dε̄_E/dt = 10⁻²²·D⁴.
pub const ELECTRIC_INTENSITY_COEFFICIENT: f64 = 1e-22;
/// δε̄_H = 10⁻²⁵·B³.
pub const MAGNETIC_ENERGY_COEFFICIENT: f64 = 1e-25;
/// dε̄_H/dt = 10⁻⁷·B as printed.
pub const MAGNETIC_INTENSITY_COEFFICIENT: f64 = 1e-7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EvalMode {
    #[default]
    PaperCoefficients,
    LiteralFormulas,
}

impl EvalMode {
    pub fn as_str(&self) -> &'static str {
        match self {
            EvalMode::PaperCoefficients => "paper",
            EvalMode::LiteralFormulas => "literal",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FieldKind {
    Electric,
    Magnetic,
}

/// How an angular frequency is turned into a displayed GHz figure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FrequencyConvention {
    /// ω read numerically as Hz; gives the printed 10⁵ GHz at B = 100 T.
    #[default]
    NumericHz,
    /// ω/2π.
    AngularOverTwoPi,
}

impl FrequencyConvention {
    pub fn ghz(&self, omega: f64) -> f64 {
        match self {
            FrequencyConvention::NumericHz => omega / 1e9,
            FrequencyConvention::AngularOverTwoPi => omega / (2.0 * PI * 1e9),
        }
    }
}

/// Which magnetic intensity law the coefficient mode uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MagneticIntensityLaw {
    /// 10⁻⁷·B, as printed.
    #[default]
    Printed,
    /// 10⁻⁷·B⁴, the reading that reproduces the quoted ~10 J/s at 100 T.
    QuarticVariant,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ReportOptions {
    pub frequency: FrequencyConvention,
    pub magnetic_intensity: MagneticIntensityLaw,
}

/// Magnetic input for the frequency law, either strength or induction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MagneticInput {
    /// H, A/m.
    Strength(f64),
    /// B, T.
    Induction(f64),
}

fn nonnegative(name: &'static str, x: f64) -> Result<()> {
    if x >= 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidArgument {
            name,
            reason: format!("must be finite and nonnegative, got {x}"),
        })
    }
}

/// (2/3)·e⁴/(ε₀ m_e² c³): prefactor of the field-form power.
fn power_prefactor(k: &ConstantsTable) -> f64 {
    2.0 / 3.0 * k.e.powi(4) / (k.eps0 * k.m_e * k.m_e * k.c.powi(3))
}

/// (2/3)·e⁴/(ε₀ m_e² c⁴): prefactor of the fluctuation energy relations.
fn energy_prefactor(k: &ConstantsTable) -> f64 {
    power_prefactor(k) / k.c
}

fn prefactor_dim(c_power: i32) -> Dimension {
    Dimension::CHARGE.powi(4)
        / (Dimension::PERMITTIVITY * Dimension::MASS.powi(2) * Dimension::VELOCITY.powi(c_power))
}

fn fluct_power(
    field: f64,
    field_dim: Dimension,
    dv_sq_rate: f64,
    beta: f64,
    k: &ConstantsTable,
) -> Result<Quantity> {
    nonnegative("field", field)?;
    nonnegative("dv_sq_rate", dv_sq_rate)?;
    if !(0.0..=PI).contains(&beta) {
        return Err(Error::InvalidArgument {
            name: "beta",
            reason: format!("must lie in [0, pi], got {beta}"),
        });
    }
    let magnitude = beta.sin() * power_prefactor(k) * field * field * dv_sq_rate / (k.c * k.c);
    let dim = prefactor_dim(3) * field_dim.powi(2) * Dimension::VELOCITY.powi(2)
        / Dimension::TIME
        / Dimension::VELOCITY.powi(2);
    Quantity::new(magnitude, dim)
}

/// sin β·(2/3)(e⁴/ε₀m_e²c³)·E²·(dδV̄²/dt)/c², as printed for the electric field.
pub fn fluct_power_electric(
    e: f64,
    dv_sq_rate: f64,
    beta: f64,
    k: &ConstantsTable,
) -> Result<Quantity> {
    fluct_power(e, Dimension::ELECTRIC_FIELD, dv_sq_rate, beta, k)
}

/// Magnetic counterpart of [`fluct_power_electric`] with H in A/m.
pub fn fluct_power_magnetic(
    h: f64,
    dv_sq_rate: f64,
    beta: f64,
    k: &ConstantsTable,
) -> Result<Quantity> {
    fluct_power(h, Dimension::MAGNETIC_FIELD_STRENGTH, dv_sq_rate, beta, k)
}

fn fluct_energy(
    field: f64,
    field_dim: Dimension,
    delta_r_sq: f64,
    omega: f64,
    k: &ConstantsTable,
) -> Result<Quantity> {
    nonnegative("field", field)?;
    nonnegative("delta_r_sq", delta_r_sq)?;
    nonnegative("omega", omega)?;
    let magnitude = energy_prefactor(k) * field * field * delta_r_sq * omega / k.c;
    let dim = prefactor_dim(4) * field_dim.powi(2) * Dimension::AREA * Dimension::FREQUENCY
        / Dimension::VELOCITY;
    Quantity::new(magnitude, dim)
}

/// δε̄_E = (2/3)(e⁴/ε₀m_e²c⁴)·E²·δr̄²·(ω/c).
pub fn fluct_energy_electric(
    e: f64,
    delta_r_sq: f64,
    omega: f64,
    k: &ConstantsTable,
) -> Result<Quantity> {
    fluct_energy(e, Dimension::ELECTRIC_FIELD, delta_r_sq, omega, k)
}

/// δε̄_H = (2/3)(e⁴/ε₀m_e²c⁴)·H²·δr̄²·(ω/c).
pub fn fluct_energy_magnetic(
    h: f64,
    delta_r_sq: f64,
    omega: f64,
    k: &ConstantsTable,
) -> Result<Quantity> {
    fluct_energy(h, Dimension::MAGNETIC_FIELD_STRENGTH, delta_r_sq, omega, k)
}

/// √((2/3)(c/ħ)(e⁴/(ε₀m_e²c⁴))), the constant-derived frequency-law coefficient.
pub fn frequency_law_coefficient(k: &ConstantsTable) -> f64 {
    (k.c / k.hbar * energy_prefactor(k)).sqrt()
}

/// ω_E from the field strength E (V/m).
pub fn omega_electric(e: f64, mode: EvalMode, k: &ConstantsTable) -> Result<f64> {
    nonnegative("E", e)?;
    Ok(match mode {
        EvalMode::PaperCoefficients => OMEGA_COEFFICIENT * e,
        EvalMode::LiteralFormulas => frequency_law_coefficient(k) * e,
    })
}

/// ω_H. In coefficient mode the printed 10¹² multiplies whichever field value is
/// supplied; in literal mode the radicand multiplies H (B is converted).
pub fn omega_magnetic(input: MagneticInput, mode: EvalMode, k: &ConstantsTable) -> Result<f64> {
    let (value, h) = match input {
        MagneticInput::Strength(h) => (h, h),
        MagneticInput::Induction(b) => (b, b / k.mu0),
    };
    nonnegative("magnetic field", value)?;
    Ok(match mode {
        EvalMode::PaperCoefficients => OMEGA_COEFFICIENT * value,
        EvalMode::LiteralFormulas => frequency_law_coefficient(k) * h,
    })
}

/// Closed-form radiant energy for field value `f` (E or H) whose frequency is
/// `coefficient·f`:
/// ((2/3)e⁴/(ε₀m_e²c⁴))^(3/2)·f³·(1/ħc)^(1/2)·(2/π)α(ħ/m_e c)²·ln(ν_e/ω).
fn literal_radiant_energy(f: f64, k: &ConstantsTable) -> Result<f64> {
    if f == 0.0 {
        return Ok(0.0);
    }
    let omega = frequency_law_coefficient(k) * f;
    if omega >= k.nu_e {
        return Err(Error::DomainError(format!(
            "radiation frequency {omega:e} s^-1 is not below nu_e = {:e} s^-1",
            k.nu_e
        )));
    }
    let value = energy_prefactor(k).powf(1.5)
        * f.powi(3)
        * (1.0 / (k.hbar * k.c)).sqrt()
        * displacement_prefactor(k).magnitude()
        * (k.nu_e / omega).ln();
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::NonFinite {
            context: "radiant energy",
        })
    }
}

/// δε̄_E from the electric induction D (C/m²).
pub fn vacuum_energy_electric(d: f64, mode: EvalMode, k: &ConstantsTable) -> Result<f64> {
    nonnegative("D", d)?;
    match mode {
        EvalMode::PaperCoefficients => Ok(ELECTRIC_ENERGY_COEFFICIENT * d.powi(3)),
        EvalMode::LiteralFormulas => literal_radiant_energy(d / k.eps0, k),
    }
}

/// δε̄_H from the magnetic induction B (T).
pub fn vacuum_energy_magnetic(b: f64, mode: EvalMode, k: &ConstantsTable) -> Result<f64> {
    nonnegative("B", b)?;
    match mode {
        EvalMode::PaperCoefficients => Ok(MAGNETIC_ENERGY_COEFFICIENT * b.powi(3)),
        EvalMode::LiteralFormulas => literal_radiant_energy(b / k.mu0, k),
    }
}

/// Radiation frequency attached to an induction value: 10¹²·induction in
/// coefficient mode, the constant-derived law applied to E = D/ε₀ or H = B/μ₀ in
/// literal mode.
pub fn omega_from_induction(
    kind: FieldKind,
    induction: f64,
    mode: EvalMode,
    k: &ConstantsTable,
) -> Result<f64> {
    nonnegative("induction", induction)?;
    Ok(match (mode, kind) {
        (EvalMode::PaperCoefficients, _) => OMEGA_COEFFICIENT * induction,
        (EvalMode::LiteralFormulas, FieldKind::Electric) => {
            return omega_electric(induction / k.eps0, mode, k)
        }
        (EvalMode::LiteralFormulas, FieldKind::Magnetic) => {
            return omega_magnetic(MagneticInput::Induction(induction), mode, k)
        }
    })
}

pub fn vacuum_energy(
    kind: FieldKind,
    induction: f64,
    mode: EvalMode,
    k: &ConstantsTable,
) -> Result<f64> {
    match kind {
        FieldKind::Electric => vacuum_energy_electric(induction, mode, k),
        FieldKind::Magnetic => vacuum_energy_magnetic(induction, mode, k),
    }
}

/// dε̄/dt. Coefficient mode: 10⁻²²D⁴ (electric) and 10⁻⁷B or 10⁻⁷B⁴ (magnetic);
/// literal mode: energy × omega.
pub fn vacuum_intensity(
    kind: FieldKind,
    induction: f64,
    mode: EvalMode,
    law: MagneticIntensityLaw,
    k: &ConstantsTable,
) -> Result<f64> {
    nonnegative("induction", induction)?;
    match (mode, kind) {
        (EvalMode::PaperCoefficients, FieldKind::Electric) => {
            Ok(ELECTRIC_INTENSITY_COEFFICIENT * induction.powi(4))
        }
        (EvalMode::PaperCoefficients, FieldKind::Magnetic) => Ok(match law {
            MagneticIntensityLaw::Printed => MAGNETIC_INTENSITY_COEFFICIENT * induction,
            MagneticIntensityLaw::QuarticVariant => {
                MAGNETIC_INTENSITY_COEFFICIENT * induction.powi(4)
            }
        }),
        (EvalMode::LiteralFormulas, _) => {
            let energy = vacuum_energy(kind, induction, mode, k)?;
            Ok(energy * omega_from_induction(kind, induction, mode, k)?)
        }
    }
}

/// Published Lamb-shift magnitudes used as the comparison scale.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LambReference {
    /// J
    pub energy: f64,
    /// J/s
    pub intensity: f64,
    /// Hz
    pub frequency: f64,
}

pub const LAMB_REFERENCE: LambReference = LambReference {
    energy: 1e-24,
    intensity: 1e-16,
    frequency: 1e9,
};

pub fn lamb_reference() -> LambReference {
    LAMB_REFERENCE
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VacuumRadiationResult {
    pub field_kind: FieldKind,
    /// D in C/m² or B in T.
    pub induction: f64,
    /// s⁻¹
    pub omega: f64,
    /// ω shown in GHz under the selected convention.
    pub frequency_ghz: f64,
    /// J
    pub energy: f64,
    /// J/s
    pub intensity: f64,
    pub mode: EvalMode,
}

/// Result divided by the Lamb-shift magnitudes.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LambRatios {
    pub energy: f64,
    pub intensity: f64,
    pub frequency: f64,
}

impl LambRatios {
    pub fn of(result: &VacuumRadiationResult, lamb: &LambReference) -> Self {
        Self {
            energy: result.energy / lamb.energy,
            intensity: result.intensity / lamb.intensity,
            frequency: result.frequency_ghz * 1e9 / lamb.frequency,
        }
    }
}

pub fn evaluate(
    kind: FieldKind,
    induction: f64,
    mode: EvalMode,
    options: &ReportOptions,
    k: &ConstantsTable,
) -> Result<VacuumRadiationResult> {
    let omega = omega_from_induction(kind, induction, mode, k)?;
    let energy = vacuum_energy(kind, induction, mode, k)?;
    let intensity = vacuum_intensity(kind, induction, mode, options.magnetic_intensity, k)?;
    Ok(VacuumRadiationResult {
        field_kind: kind,
        induction,
        omega,
        frequency_ghz: options.frequency.ghz(omega),
        energy,
        intensity,
        mode,
    })
}

/// Both field blocks for one field point, with Lamb-shift comparisons.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RadiationReport {
    pub electric: VacuumRadiationResult,
    pub magnetic: VacuumRadiationResult,
    pub lamb: LambReference,
    pub electric_lamb_ratios: LambRatios,
    pub magnetic_lamb_ratios: LambRatios,
}

pub fn full_report(
    config: &FieldConfig,
    mode: EvalMode,
    options: &ReportOptions,
    k: &ConstantsTable,
) -> Result<RadiationReport> {
    let ind = induction(config, k);
    let electric = evaluate(FieldKind::Electric, ind.d, mode, options, k)?;
    let magnetic = evaluate(FieldKind::Magnetic, ind.b, mode, options, k)?;
    let lamb = lamb_reference();
    Ok(RadiationReport {
        electric,
        magnetic,
        lamb,
        electric_lamb_ratios: LambRatios::of(&electric, &lamb),
        magnetic_lamb_ratios: LambRatios::of(&magnetic, &lamb),
    })
}

/// The literal radiant energy rebuilt link by link: δr̄² at ω, then the
/// fluctuation energy relation at the same ω.
pub fn literal_energy_by_chain(kind: FieldKind, induction: f64, k: &ConstantsTable) -> Result<f64> {
    let omega = omega_from_induction(kind, induction, EvalMode::LiteralFormulas, k)?;
    let dr2 = mean_square_displacement(omega, k)?.delta_r_sq.magnitude();
    let energy = match kind {
        FieldKind::Electric => fluct_energy_electric(induction / k.eps0, dr2, omega, k)?,
        FieldKind::Magnetic => fluct_energy_magnetic(induction / k.mu0, dr2, omega, k)?,
    };
    Ok(energy.magnitude())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::FRAC_PI_2;

    fn k() -> &'static ConstantsTable {
        ConstantsTable::codata()
    }

    #[test]
    fn fluctuation_power_terms() {
        assert_eq!(
            fluct_power_electric(2.0, 3.0, 0.0, k())
                .unwrap()
                .magnitude(),
            0.0
        );
        let max = fluct_power_electric(2.0, 3.0, FRAC_PI_2, k())
            .unwrap()
            .magnitude();
        for beta in [0.1, 0.7, 1.2, 2.0, 3.0] {
            assert!(
                fluct_power_electric(2.0, 3.0, beta, k())
                    .unwrap()
                    .magnitude()
                    < max
            );
        }
        let doubled = fluct_power_electric(4.0, 3.0, FRAC_PI_2, k())
            .unwrap()
            .magnitude();
        assert_relative_eq!(doubled, 4.0 * max, max_relative = 1e-15);
        let h = fluct_power_magnetic(2.0, 3.0, FRAC_PI_2, k()).unwrap();
        assert_eq!(h.magnitude(), max);
        assert_ne!(
            h.dim(),
            fluct_power_electric(2.0, 3.0, FRAC_PI_2, k())
                .unwrap()
                .dim()
        );
        assert!(fluct_power_electric(2.0, 3.0, 4.0, k()).is_err());
        assert!(fluct_power_magnetic(-1.0, 3.0, 1.0, k()).is_err());
    }

    #[test]
    fn fluctuation_energy_relations() {
        assert_eq!(
            fluct_energy_electric(0.0, 1e-27, 1e15, k())
                .unwrap()
                .magnitude(),
            0.0
        );
        assert_eq!(
            fluct_energy_magnetic(1.0, 0.0, 1e15, k())
                .unwrap()
                .magnitude(),
            0.0
        );
        let base = fluct_energy_electric(3.0, 1e-27, 1e15, k()).unwrap();
        assert_eq!(base.dim(), Dimension::ENERGY);
        let w2 = fluct_energy_electric(3.0, 1e-27, 2e15, k())
            .unwrap()
            .magnitude();
        let r2 = fluct_energy_electric(3.0, 2e-27, 1e15, k())
            .unwrap()
            .magnitude();
        let e2 = fluct_energy_electric(6.0, 1e-27, 1e15, k())
            .unwrap()
            .magnitude();
        assert_relative_eq!(w2, 2.0 * base.magnitude(), max_relative = 1e-15);
        assert_relative_eq!(r2, 2.0 * base.magnitude(), max_relative = 1e-15);
        assert_relative_eq!(e2, 4.0 * base.magnitude(), max_relative = 1e-15);
        let h = fluct_energy_magnetic(3.0, 1e-27, 1e15, k()).unwrap();
        assert_eq!(h.magnitude(), base.magnitude());
        assert_ne!(h.dim(), Dimension::ENERGY);
    }

    #[test]
    fn frequency_laws() {
        assert_eq!(
            omega_electric(1.0, EvalMode::PaperCoefficients, k()).unwrap(),
            1e12
        );
        assert_eq!(
            omega_electric(0.0, EvalMode::LiteralFormulas, k()).unwrap(),
            0.0
        );
        // radicand evaluated at 30 digits: 145.0583264221...
        assert_relative_eq!(
            omega_electric(1.0, EvalMode::LiteralFormulas, k()).unwrap(),
            145.058_326_422_117_67,
            max_relative = 1e-12
        );
        let b100 = omega_magnetic(
            MagneticInput::Induction(100.0),
            EvalMode::PaperCoefficients,
            k(),
        )
        .unwrap();
        assert_eq!(b100, 1e14);
        assert_relative_eq!(FrequencyConvention::NumericHz.ghz(b100), 1e5);
        assert_eq!(
            omega_magnetic(MagneticInput::Strength(0.0), EvalMode::LiteralFormulas, k()).unwrap(),
            0.0
        );
        assert_eq!(
            omega_magnetic(MagneticInput::Strength(1.0), EvalMode::LiteralFormulas, k()).unwrap(),
            omega_electric(1.0, EvalMode::LiteralFormulas, k()).unwrap()
        );
    }

    #[test]
    fn paper_energy_endpoints() {
        let mode = EvalMode::PaperCoefficients;
        assert_relative_eq!(
            vacuum_energy_electric(3e4, mode, k()).unwrap(),
            2.7e-21,
            max_relative = 1e-15
        );
        assert_eq!(vacuum_energy_electric(1.0, mode, k()).unwrap(), 1e-34);
        assert_eq!(vacuum_energy_electric(0.0, mode, k()).unwrap(), 0.0);
        assert_relative_eq!(
            vacuum_energy_magnetic(100.0, mode, k()).unwrap(),
            1e-19,
            max_relative = 1e-15
        );
        assert_eq!(vacuum_energy_magnetic(1.0, mode, k()).unwrap(), 1e-25);
        assert_eq!(vacuum_energy_magnetic(0.0, mode, k()).unwrap(), 0.0);
        assert!(vacuum_energy_magnetic(-1.0, mode, k()).is_err());
    }

    #[test]
    fn paper_intensity_endpoints() {
        let mode = EvalMode::PaperCoefficients;
        let law = MagneticIntensityLaw::Printed;
        assert_relative_eq!(
            vacuum_intensity(FieldKind::Electric, 3e4, mode, law, k()).unwrap(),
            8.1e-5,
            max_relative = 1e-15
        );
        assert_eq!(
            vacuum_intensity(FieldKind::Magnetic, 0.0, mode, law, k()).unwrap(),
            0.0
        );
        assert_relative_eq!(
            vacuum_intensity(FieldKind::Magnetic, 100.0, mode, law, k()).unwrap(),
            1e-5,
            max_relative = 1e-15
        );
        assert_relative_eq!(
            vacuum_intensity(
                FieldKind::Magnetic,
                100.0,
                mode,
                MagneticIntensityLaw::QuarticVariant,
                k()
            )
            .unwrap(),
            10.0,
            max_relative = 1e-15
        );
    }

    #[test]
    fn literal_energy_values() {
        // independent 30-digit evaluation of the closed form at D = 3e4 and B = 100
        let mode = EvalMode::LiteralFormulas;
        assert_relative_eq!(
            vacuum_energy_electric(3e4, mode, k()).unwrap(),
            7.107_650_111_558_36e-25,
            max_relative = 1e-10
        );
        assert_relative_eq!(
            vacuum_energy_magnetic(100.0, mode, k()).unwrap(),
            3.117_197_290_641_348e-47,
            max_relative = 1e-10
        );
        assert_eq!(vacuum_energy_electric(0.0, mode, k()).unwrap(), 0.0);
    }

    #[test]
    fn literal_energy_log_domain() {
        // ω_E = 145.06·D/ε₀ reaches ν_e just below D ≈ 4.74e7 C/m²
        let d_limit = k().nu_e * k().eps0 / frequency_law_coefficient(k());
        assert!(vacuum_energy_electric(0.99 * d_limit, EvalMode::LiteralFormulas, k()).is_ok());
        assert!(matches!(
            vacuum_energy_electric(d_limit * 1.01, EvalMode::LiteralFormulas, k()),
            Err(Error::DomainError(_))
        ));
        assert!(matches!(
            vacuum_intensity(
                FieldKind::Electric,
                d_limit * 1.01,
                EvalMode::LiteralFormulas,
                MagneticIntensityLaw::Printed,
                k()
            ),
            Err(Error::DomainError(_))
        ));
    }

    #[test]
    fn closed_form_matches_chain() {
        for (kind, x) in [
            (FieldKind::Electric, 3e4),
            (FieldKind::Electric, 1e-3),
            (FieldKind::Magnetic, 100.0),
            (FieldKind::Magnetic, 7.0e9),
        ] {
            let closed = vacuum_energy(kind, x, EvalMode::LiteralFormulas, k()).unwrap();
            let chain = literal_energy_by_chain(kind, x, k()).unwrap();
            assert_relative_eq!(closed, chain, max_relative = 1e-12);
        }
    }

    #[test]
    fn lamb_reference_values() {
        let lamb = lamb_reference();
        assert_eq!(lamb.energy, 1e-24);
        assert_eq!(lamb.intensity, 1e-16);
        assert_eq!(lamb.frequency, 1e9);
    }

    #[test]
    fn full_report_composition() {
        let opts = ReportOptions::default();
        let cfg = FieldConfig::from_induction(3e4, 0.0, k());
        let report = full_report(&cfg, EvalMode::PaperCoefficients, &opts, k()).unwrap();
        assert_relative_eq!(report.electric.energy, 2.7e-21, max_relative = 1e-12);
        assert_eq!(report.magnetic.energy, 0.0);
        assert_eq!(report.magnetic.intensity, 0.0);
        assert_eq!(report.magnetic.omega, 0.0);

        let cfg = FieldConfig::magnetic(nalgebra::Vector3::new(0.0, 0.0, 100.0));
        let report = full_report(&cfg, EvalMode::PaperCoefficients, &opts, k()).unwrap();
        assert_relative_eq!(
            report.magnetic_lamb_ratios.energy,
            1e5,
            max_relative = 1e-12
        );
    }

    #[test]
    fn mode_switch_preserves_sign_and_zero_structure() {
        let opts = ReportOptions::default();
        for (d, b) in [(3e4, 0.0), (0.0, 100.0), (1.0, 1.0), (0.0, 0.0)] {
            let cfg = FieldConfig::from_induction(d, b, k());
            let paper = full_report(&cfg, EvalMode::PaperCoefficients, &opts, k()).unwrap();
            let literal = full_report(&cfg, EvalMode::LiteralFormulas, &opts, k()).unwrap();
            for (p, l) in [
                (paper.electric, literal.electric),
                (paper.magnetic, literal.magnetic),
            ] {
                for (x, y) in [
                    (p.omega, l.omega),
                    (p.energy, l.energy),
                    (p.intensity, l.intensity),
                ] {
                    assert!(x >= 0.0 && y >= 0.0);
                    assert_eq!(x == 0.0, y == 0.0);
                }
            }
        }
    }

    #[test]
    fn electric_paper_mode_intensity_is_energy_times_omega() {
        for d in [1e-3, 1.0, 3e4, 1e7] {
            let r = evaluate(
                FieldKind::Electric,
                d,
                EvalMode::PaperCoefficients,
                &ReportOptions::default(),
                k(),
            )
            .unwrap();
            assert_relative_eq!(r.intensity, r.energy * r.omega, max_relative = 1e-12);
        }
    }

    proptest::proptest! {
        #[test]
        fn literal_energy_increases_below_turnover(a in -6.0f64..6.0, b in -6.0f64..6.0) {
            proptest::prop_assume!((a - b).abs() > 1e-9);
            // increasing while ln(ν_e/ω) > 1/3; stay well inside that region
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            let mode = EvalMode::LiteralFormulas;
            let e_lo = vacuum_energy_electric(10f64.powf(lo), mode, k()).unwrap();
            let e_hi = vacuum_energy_electric(10f64.powf(hi), mode, k()).unwrap();
            proptest::prop_assert!(e_hi > e_lo && e_lo > 0.0);
            let m_lo = vacuum_energy_magnetic(10f64.powf(lo + 5.0), mode, k()).unwrap();
            let m_hi = vacuum_energy_magnetic(10f64.powf(hi + 5.0), mode, k()).unwrap();
            proptest::prop_assert!(m_hi > m_lo && m_lo > 0.0);
        }
    }
}
