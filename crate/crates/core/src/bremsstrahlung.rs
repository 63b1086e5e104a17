//! Radiated power of an accelerated electron in field form and kinematic
//! form, and the radiated-momentum rate.
//!
//! The literal variants evaluate the printed expressions verbatim,
//! including their prefactors and denominator exponents; the textbook
//! variants are the SI Landau–Lifshitz and Liénard forms.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::fields::{check_subluminal, FieldConfig, Vec3};
use crate::quantities::{ConstantsTable, Dimension, Quantity};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PowerForm {
    FieldForm,
    KinematicForm,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PowerVariant {
    PaperLiteral,
    #[default]
    Textbook,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerResult {
    pub power: Quantity,
    pub form: PowerForm,
    pub variant: PowerVariant,
}

impl PowerResult {
    pub fn watts(&self) -> f64 {
        self.power.magnitude()
    }
}

fn beta_sq(v: &Vec3, k: &ConstantsTable) -> f64 {
    v.norm_squared() / (k.c * k.c)
}

/// −dε/dt from the field configuration.
///
/// Literal: (2/3)(e⁴/(ε₀m²c³))·[(E + v×H/c)² − (E·H)/c²]/(1 − v²/c²)²
/// with H = B/μ₀. Textbook: (2/3)(e⁴/(4πε₀m²c³))·[(E + v×B)² − (E·v)²/c²]/(1 − v²/c²).
pub fn power_field_form(
    config: &FieldConfig,
    v: &Vec3,
    variant: PowerVariant,
    k: &ConstantsTable,
) -> Result<PowerResult> {
    check_subluminal(v, k)?;
    let e = config.e_field;
    let one_minus = 1.0 - beta_sq(v, k);
    let e4 = k.e.powi(4);
    let (magnitude, dim) = match variant {
        PowerVariant::PaperLiteral => {
            let h = config.h_field(k);
            let prefactor = 2.0 / 3.0 * e4 / (k.eps0 * k.m_e * k.m_e * k.c.powi(3));
            let lead = e + v.cross(&h) / k.c;
            let bracket = lead.norm_squared() - e.dot(&h) / (k.c * k.c);
            // Tagged with the dimension of the leading E² term.
            let dim = Dimension::CHARGE.powi(4)
                / (Dimension::PERMITTIVITY * Dimension::MASS.powi(2) * Dimension::VELOCITY.powi(3))
                * Dimension::ELECTRIC_FIELD.powi(2);
            (prefactor * bracket / (one_minus * one_minus), dim)
        }
        PowerVariant::Textbook => {
            let prefactor = 2.0 / 3.0 * e4 / (4.0 * PI * k.eps0 * k.m_e * k.m_e * k.c.powi(3));
            let lead = e + v.cross(&config.b_field);
            let ev = e.dot(v);
            let bracket = lead.norm_squared() - ev * ev / (k.c * k.c);
            (prefactor * bracket / one_minus, Dimension::POWER)
        }
    };
    Ok(PowerResult {
        power: Quantity::new(magnitude, dim)?,
        form: PowerForm::FieldForm,
        variant,
    })
}

/// Liénard power (2/3)(e²/c³)·[a² − (v×a)²/c²]/(1 − v²/c²)³.
///
/// The literal variant carries the printed Gaussian-style prefactor
/// e²/c³; the textbook variant multiplies by 1/(4πε₀) and is in watts.
pub fn power_kinematic_form(
    v: &Vec3,
    a: &Vec3,
    variant: PowerVariant,
    k: &ConstantsTable,
) -> Result<PowerResult> {
    check_subluminal(v, k)?;
    let one_minus = 1.0 - beta_sq(v, k);
    let bracket = a.norm_squared() - v.cross(a).norm_squared() / (k.c * k.c);
    let literal = 2.0 / 3.0 * k.e * k.e / k.c.powi(3) * bracket / one_minus.powi(3);
    let literal_dim =
        Dimension::CHARGE.powi(2) * Dimension::ACCELERATION.powi(2) / Dimension::VELOCITY.powi(3);
    let (magnitude, dim) = match variant {
        PowerVariant::PaperLiteral => (literal, literal_dim),
        PowerVariant::Textbook => (
            literal / (4.0 * PI * k.eps0),
            literal_dim / Dimension::PERMITTIVITY,
        ),
    };
    Ok(PowerResult {
        power: Quantity::new(magnitude, dim)?,
        form: PowerForm::KinematicForm,
        variant,
    })
}

/// Rate of momentum carried off by the radiation, (v/c²)·P.
pub fn momentum_rate(v: &Vec3, power: f64, k: &ConstantsTable) -> Result<Vec3> {
    check_subluminal(v, k)?;
    if !(power >= 0.0 && power.is_finite()) {
        return Err(Error::InvalidArgument {
            name: "power",
            reason: format!("must be finite and nonnegative, got {power}"),
        });
    }
    Ok(v * (power / (k.c * k.c)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::accel_standard;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn k() -> &'static ConstantsTable {
        ConstantsTable::codata()
    }

    #[test]
    fn zero_fields_radiate_nothing() {
        let v = Vec3::new(1e7, 0.0, 0.0);
        for variant in [PowerVariant::PaperLiteral, PowerVariant::Textbook] {
            let p = power_field_form(&FieldConfig::default(), &v, variant, k()).unwrap();
            assert_eq!(p.watts(), 0.0);
            let p = power_kinematic_form(&v, &Vec3::zeros(), variant, k()).unwrap();
            assert_eq!(p.watts(), 0.0);
        }
    }

    #[test]
    fn literal_field_form_unit_field_at_rest() {
        let cfg = FieldConfig::electric(Vec3::new(1.0, 0.0, 0.0));
        let p = power_field_form(&cfg, &Vec3::zeros(), PowerVariant::PaperLiteral, k()).unwrap();
        // (2/3)e⁴/(ε₀ m_e² c³) from a 30-digit evaluation
        assert_relative_eq!(p.watts(), 2.219_021_376_632_429e-30, max_relative = 1e-12);
        assert_eq!(p.power.dim(), Dimension::POWER);
    }

    #[test]
    fn textbook_field_form_ignores_magnetic_field_at_rest() {
        let pure_e = FieldConfig::electric(Vec3::new(5.0, 0.0, 0.0));
        let crossed = FieldConfig::new(pure_e.e_field, Vec3::new(0.0, 0.0, 2.0));
        let a = power_field_form(&pure_e, &Vec3::zeros(), PowerVariant::Textbook, k()).unwrap();
        let b = power_field_form(&crossed, &Vec3::zeros(), PowerVariant::Textbook, k()).unwrap();
        assert_eq!(a.watts(), b.watts());
    }

    #[test]
    fn larmor_limit() {
        let a = Vec3::new(1e20, 0.0, 0.0);
        let p = power_kinematic_form(&Vec3::zeros(), &a, PowerVariant::Textbook, k()).unwrap();
        assert_relative_eq!(p.watts(), 5.708_326_765_029_51e-14, max_relative = 1e-10);
        assert_eq!(p.power.dim(), Dimension::POWER);
        let lit =
            power_kinematic_form(&Vec3::zeros(), &a, PowerVariant::PaperLiteral, k()).unwrap();
        assert_ne!(lit.power.dim(), Dimension::POWER);
    }

    #[test]
    fn perpendicular_enhancement_is_gamma_fourth() {
        let a = Vec3::new(0.0, 3e18, 0.0);
        let p0 = power_kinematic_form(&Vec3::zeros(), &a, PowerVariant::Textbook, k()).unwrap();
        for beta in [0.1, 0.5, 0.9, 0.99] {
            let v = Vec3::new(beta * k().c, 0.0, 0.0);
            let p = power_kinematic_form(&v, &a, PowerVariant::Textbook, k()).unwrap();
            let gamma2 = 1.0 / (1.0 - beta * beta);
            assert_relative_eq!(
                p.watts() / p0.watts(),
                gamma2 * gamma2,
                max_relative = 1e-12
            );
        }
    }

    #[test]
    fn parallel_enhancement_is_gamma_sixth() {
        let a = Vec3::new(3e18, 0.0, 0.0);
        for variant in [PowerVariant::Textbook, PowerVariant::PaperLiteral] {
            let p0 = power_kinematic_form(&Vec3::zeros(), &a, variant, k()).unwrap();
            for beta in [0.1, 0.5, 0.9, 0.99] {
                let v = Vec3::new(beta * k().c, 0.0, 0.0);
                let p = power_kinematic_form(&v, &a, variant, k()).unwrap();
                let gamma2 = 1.0 / (1.0 - beta * beta);
                assert_relative_eq!(p.watts() / p0.watts(), gamma2.powi(3), max_relative = 1e-12);
            }
        }
    }

    proptest! {
        #[test]
        fn textbook_forms_agree_under_lorentz_force(
            beta in 0.0f64..0.95,
            dir in (-1.0f64..1.0, -1.0f64..1.0, -1.0f64..1.0),
            e in (-1e6f64..1e6, -1e6f64..1e6, -1e6f64..1e6),
            b in (-2.0f64..2.0, -2.0f64..2.0, -2.0f64..2.0),
        ) {
            let d = Vec3::new(dir.0, dir.1, dir.2);
            prop_assume!(d.norm() > 1e-3);
            let v = d.normalize() * (beta * k().c);
            let cfg = FieldConfig::new(Vec3::new(e.0, e.1, e.2), Vec3::new(b.0, b.1, b.2));
            let field = power_field_form(&cfg, &v, PowerVariant::Textbook, k()).unwrap().watts();
            let a = accel_standard(&v, &cfg, k()).unwrap();
            let kin = power_kinematic_form(&v, &a, PowerVariant::Textbook, k()).unwrap().watts();
            let scale = field.abs().max(kin.abs());
            prop_assume!(scale > 0.0);
            prop_assert!((field - kin).abs() <= 1e-9 * scale, "{} vs {}", field, kin);
        }
    }

    #[test]
    fn superluminal_inputs_are_rejected() {
        let v = Vec3::new(k().c, 0.0, 0.0);
        assert!(matches!(
            power_kinematic_form(&v, &Vec3::x(), PowerVariant::Textbook, k()),
            Err(Error::SuperluminalInput { .. })
        ));
        assert!(momentum_rate(&v, 1.0, k()).is_err());
        assert!(
            power_field_form(&FieldConfig::default(), &v, PowerVariant::Textbook, k()).is_err()
        );
    }

    #[test]
    fn momentum_rate_points_along_velocity() {
        let v = Vec3::new(0.5 * k().c, 0.0, 0.0);
        let p = momentum_rate(&v, 2.0, k()).unwrap();
        assert_relative_eq!(p.x, 0.5 * 2.0 / k().c, max_relative = 1e-15);
        assert_eq!((p.y, p.z), (0.0, 0.0));
        assert_eq!(
            momentum_rate(&Vec3::zeros(), 2.0, k()).unwrap(),
            Vec3::zeros()
        );
        assert!(momentum_rate(&v, -1.0, k()).is_err());

        let slow = momentum_rate(&(v * 0.5), 2.0, k()).unwrap().norm();
        assert!(slow < p.norm());
    }
}
