//! The printed equations, as expression trees, with textbook SI
//! counterparts where one exists.

use std::f64::consts::PI;

use super::expr::{num, sym, Bindings, Expr, Symbol::*, UnitSystem};
use super::Interpretation;

/// One printed equation.
#[derive(Debug, Clone, PartialEq)]
pub struct PrintedEquation {
    pub id: &'static str,
    pub description: &'static str,
    pub lhs: Expr,
    pub rhs: Expr,
    /// Replacement right-hand side under the SI textbook reading.
    pub textbook_rhs: Option<Expr>,
}

impl PrintedEquation {
    pub fn rhs_for(&self, interpretation: Interpretation) -> &Expr {
        match (interpretation, &self.textbook_rhs) {
            (Interpretation::SiTextbook, Some(rhs)) => rhs,
            _ => &self.rhs,
        }
    }
}

fn two_thirds() -> Expr {
    num(2.0 / 3.0)
}

/// ε₀ as printed, or 4πε₀ for the textbook SI reading.
fn permittivity(textbook: bool) -> Expr {
    if textbook {
        num(4.0 * PI) * sym(Eps0)
    } else {
        sym(Eps0)
    }
}

/// e⁴/(ε₀ m_e² c^n).
fn charge4_over(c_power: i32, textbook: bool) -> Expr {
    sym(Charge).pow(4, 1) / (permittivity(textbook) * sym(Mass).sq() * sym(C).pow(c_power, 1))
}

/// (2/3)(e⁴/(ε₀ m_e² c⁴)).
fn energy_group(textbook: bool) -> Expr {
    two_thirds() * charge4_over(4, textbook)
}

/// √((2/3)(c/ħ)(e⁴/(ε₀m_e²c⁴)))·field.
pub(crate) fn frequency_law(field: Expr, textbook: bool) -> Expr {
    (two_thirds() * (sym(C) / sym(Hbar)) * charge4_over(4, textbook)).pow(1, 2) * field
}

/// (2/π)·α·(ħ/m_e c)²
fn zpf_prefactor() -> Expr {
    num(2.0 / PI) * sym(Alpha) * (sym(Hbar) / (sym(Mass) * sym(C))).sq()
}

/// ((2/3)e⁴/(ε₀m_e²c⁴))^(3/2)·field³·(1/ħc)^(1/2)·(2/π)α(ħ/m_e c)²·ln(ν_e/ω).
pub(crate) fn radiant_energy(field: Expr, textbook: bool) -> Expr {
    let omega = frequency_law(field.clone(), textbook);
    energy_group(textbook).pow(3, 2)
        * field.pow(3, 1)
        * (num(1.0) / (sym(Hbar) * sym(C))).pow(1, 2)
        * zpf_prefactor()
        * (sym(NuE) / omega).ln()
}

fn electric_field_from_d() -> Expr {
    sym(DField) / sym(Eps0)
}

fn magnetic_field_from_b(textbook: bool) -> Expr {
    if textbook {
        sym(C) * sym(BField)
    } else {
        sym(BField) / sym(Mu0)
    }
}

/// [(E + [VH]/c)² − (EH)/c²]/(1 − (V/c)²)²
fn field_form_bracket() -> Expr {
    let lead = sym(EField).plus(sym(Velocity) * sym(HField) / sym(C));
    (lead.sq() - sym(EField) * sym(HField) / sym(C).sq())
        / (num(1.0) - (sym(Velocity) / sym(C)).sq()).sq()
}

fn textbook_field_bracket() -> Expr {
    let lead = sym(EField).plus(sym(Velocity) * sym(BField));
    (lead.sq() - (sym(EField) * sym(Velocity)).sq() / sym(C).sq())
        / (num(1.0) - (sym(Velocity) / sym(C)).sq())
}

fn kinematic_bracket() -> Expr {
    (sym(Accel).sq() - (sym(Velocity) * sym(Accel)).sq() / sym(C).sq())
        / (num(1.0) - (sym(Velocity) / sym(C)).sq()).pow(3, 1)
}

fn fluct_power(field: Expr) -> Expr {
    sym(Angle).sin() * two_thirds() * charge4_over(3, false) * field.sq() * sym(DvSqRate)
        / sym(C).sq()
}

fn fluct_energy(field: Expr, textbook: bool) -> Expr {
    energy_group(textbook) * field.sq() * sym(DeltaRSq) * (sym(Omega) / sym(C))
}

/// Every printed equation checked for dimensional consistency.
pub fn printed_equations() -> Vec<PrintedEquation> {
    vec![
        PrintedEquation {
            id: "Eq1",
            description: "electron equation of motion in an electric field, m dV/dt = eE/eps0",
            lhs: sym(Mass) * sym(Accel),
            rhs: sym(Charge) * sym(EField) / sym(Eps0),
            textbook_rhs: Some(sym(Charge) * sym(EField)),
        },
        PrintedEquation {
            id: "Eq2",
            description: "electron equation of motion in a magnetic field, m dV/dt = (e/c)[HV]",
            lhs: sym(Mass) * sym(Accel),
            rhs: sym(Charge) / sym(C) * sym(HField) * sym(Velocity),
            textbook_rhs: Some(sym(Charge) * sym(Velocity) * sym(BField)),
        },
        PrintedEquation {
            id: "Eq3",
            description: "bremsstrahlung power, field form",
            lhs: sym(Power),
            rhs: two_thirds() * charge4_over(3, false) * field_form_bracket(),
            textbook_rhs: Some(two_thirds() * charge4_over(3, true) * textbook_field_bracket()),
        },
        PrintedEquation {
            id: "Eq3p",
            description: "bremsstrahlung power, kinematic form (2/3)(e^2/c^3)[...]",
            lhs: sym(Power),
            rhs: two_thirds() * sym(Charge).sq() / sym(C).pow(3, 1) * kinematic_bracket(),
            textbook_rhs: Some(
                two_thirds() * sym(Charge).sq() / (permittivity(true) * sym(C).pow(3, 1))
                    * kinematic_bracket(),
            ),
        },
        PrintedEquation {
            id: "Eq4",
            description: "zero-point mean-square displacement",
            lhs: sym(DeltaRSq),
            rhs: zpf_prefactor() * (sym(Omega) / (sym(Mass) * sym(C).sq() / sym(Hbar))).ln(),
            textbook_rhs: Some(zpf_prefactor() * (sym(NuE) / sym(Omega)).ln()),
        },
        PrintedEquation {
            id: "Eq4-alpha",
            description: "fine-structure constant written as alpha = e^2/(hbar c)",
            lhs: sym(Alpha),
            rhs: sym(Charge).sq() / (sym(Hbar) * sym(C)),
            textbook_rhs: Some(sym(Charge).sq() / (permittivity(true) * sym(Hbar) * sym(C))),
        },
        PrintedEquation {
            id: "Eq6",
            description: "electric radiation-from-vacuum power term",
            lhs: sym(Power),
            rhs: fluct_power(sym(EField)),
            textbook_rhs: None,
        },
        PrintedEquation {
            id: "Eq8",
            description: "magnetic radiation-from-vacuum power term",
            lhs: sym(Power),
            rhs: fluct_power(sym(HField)),
            textbook_rhs: None,
        },
        PrintedEquation {
            id: "Eq9",
            description: "electric energy fluctuation vs displacement (same form as Eq15)",
            lhs: sym(Energy),
            rhs: fluct_energy(sym(EField), false),
            textbook_rhs: Some(fluct_energy(sym(EField), true)),
        },
        PrintedEquation {
            id: "Eq10",
            description: "magnetic energy fluctuation vs displacement (same form as Eq16)",
            lhs: sym(Energy),
            rhs: fluct_energy(sym(HField), false),
            textbook_rhs: Some(fluct_energy(magnetic_field_from_b(true), true)),
        },
        PrintedEquation {
            id: "Eq12",
            description: "frequency-field law, electric",
            lhs: sym(Omega),
            rhs: frequency_law(sym(EField), false),
            textbook_rhs: Some(frequency_law(sym(EField), true)),
        },
        PrintedEquation {
            id: "Eq14",
            description: "frequency-field law, magnetic",
            lhs: sym(Omega),
            rhs: frequency_law(sym(HField), false),
            textbook_rhs: Some(frequency_law(magnetic_field_from_b(true), true)),
        },
        PrintedEquation {
            id: "Eq17",
            description: "radiant energy from vacuum, electric, in terms of D",
            lhs: sym(Energy),
            rhs: radiant_energy(electric_field_from_d(), false),
            textbook_rhs: Some(radiant_energy(electric_field_from_d(), true)),
        },
        PrintedEquation {
            id: "Eq17-nu_e",
            description: "electronic vacuum frequency written as nu_e = hbar/(m_e c^2)",
            lhs: sym(NuE),
            rhs: sym(Hbar) / (sym(Mass) * sym(C).sq()),
            textbook_rhs: Some(sym(Mass) * sym(C).sq() / sym(Hbar)),
        },
        PrintedEquation {
            id: "Eq18",
            description: "radiant energy from vacuum, magnetic, in terms of B",
            lhs: sym(Energy),
            rhs: radiant_energy(magnetic_field_from_b(false), false),
            textbook_rhs: Some(radiant_energy(magnetic_field_from_b(true), true)),
        },
    ]
}

/// A printed numeric coefficient paired with the formula it abbreviates.
pub struct CoefficientCheck {
    pub id: &'static str,
    pub description: &'static str,
    pub printed: f64,
    /// Formula value divided by the power of the field it multiplies.
    pub compute: fn(Interpretation) -> Result<f64, String>,
}

pub const REFERENCE_D: f64 = 3e4;
pub const REFERENCE_B: f64 = 100.0;

fn bindings(interpretation: Interpretation) -> Bindings {
    interpretation.unit_system().constants()
}

fn textbook(interpretation: Interpretation) -> bool {
    interpretation == Interpretation::SiTextbook
}

fn electric_energy_at(interpretation: Interpretation, d: f64) -> Result<(f64, f64), String> {
    let tb = textbook(interpretation);
    let b = bindings(interpretation).with(DField, d);
    let energy = radiant_energy(electric_field_from_d(), tb).eval(&b)?;
    let omega = frequency_law(electric_field_from_d(), tb).eval(&b)?;
    Ok((energy, omega))
}

fn magnetic_energy_at(interpretation: Interpretation, b_ind: f64) -> Result<(f64, f64), String> {
    let tb = textbook(interpretation);
    let b = bindings(interpretation).with(BField, b_ind);
    let energy = radiant_energy(magnetic_field_from_b(tb), tb).eval(&b)?;
    let omega = frequency_law(magnetic_field_from_b(tb), tb).eval(&b)?;
    Ok((energy, omega))
}

pub fn coefficient_checks() -> Vec<CoefficientCheck> {
    vec![
        CoefficientCheck {
            id: "Eq12",
            description: "omega_E = 1e12 E versus the frequency-law radicand per unit E",
            printed: 1e12,
            compute: |i| {
                frequency_law(sym(EField), textbook(i)).eval(&bindings(i).with(EField, 1.0))
            },
        },
        CoefficientCheck {
            id: "Eq14",
            description: "omega_H = 1e12 H versus the frequency-law radicand per unit field",
            printed: 1e12,
            compute: |i| {
                let tb = textbook(i);
                let field = if tb {
                    magnetic_field_from_b(true)
                } else {
                    sym(HField)
                };
                frequency_law(field, tb).eval(&bindings(i).with(HField, 1.0).with(BField, 1.0))
            },
        },
        CoefficientCheck {
            id: "Eq19",
            description: "energy coefficient 1e-34 versus Eq17 at D = 3e4, divided by D^3",
            printed: 1e-34,
            compute: |i| Ok(electric_energy_at(i, REFERENCE_D)?.0 / REFERENCE_D.powi(3)),
        },
        CoefficientCheck {
            id: "Eq19",
            description:
                "intensity coefficient 1e-22 versus Eq17 x omega_E at D = 3e4, divided by D^4",
            printed: 1e-22,
            compute: |i| {
                let (energy, omega) = electric_energy_at(i, REFERENCE_D)?;
                Ok(energy * omega / REFERENCE_D.powi(4))
            },
        },
        CoefficientCheck {
            id: "Eq20",
            description: "energy coefficient 1e-25 versus Eq18 at B = 100, divided by B^3",
            printed: 1e-25,
            compute: |i| Ok(magnetic_energy_at(i, REFERENCE_B)?.0 / REFERENCE_B.powi(3)),
        },
        CoefficientCheck {
            id: "Eq20",
            description:
                "intensity coefficient 1e-7 versus Eq18 x omega_H at B = 100, divided by B",
            printed: 1e-7,
            compute: |i| {
                let (energy, omega) = magnetic_energy_at(i, REFERENCE_B)?;
                Ok(energy * omega / REFERENCE_B)
            },
        },
        CoefficientCheck {
            id: "Sanity-nu_e",
            description: "harness check: nu_e = m_e c^2/hbar against its tabulated value",
            printed: 7.763_440_711_05e20,
            compute: |i| (sym(Mass) * sym(C).sq() / sym(Hbar)).eval(&bindings(i)),
        },
    ]
}

/// The printed displacement logarithm, ln(ω/ν_e).
pub(crate) fn printed_displacement_log(omega: f64) -> Result<f64, String> {
    let b = UnitSystem::Si.constants().with(Omega, omega);
    (sym(Omega) / (sym(Mass) * sym(C).sq() / sym(Hbar)))
        .ln()
        .eval(&b)
}

pub(crate) fn radiant_energy_log(omega: f64) -> Result<f64, String> {
    let b = UnitSystem::Si.constants().with(Omega, omega);
    (sym(NuE) / sym(Omega)).ln().eval(&b)
}
