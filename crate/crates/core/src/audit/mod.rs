//! Dimensional and coefficient audit of the printed equations.
//!
//! The audit only observes: it evaluates its own expression trees and calls
//! the public evaluation functions, never altering them.

mod expr;
mod registry;
mod report;

use serde::{Deserialize, Serialize};

pub use expr::{num, sym, Bindings, DimIssue, Expr, Symbol, UnitSystem};
pub use registry::{coefficient_checks, printed_equations, CoefficientCheck, PrintedEquation};
pub use report::{parse_structured, render_report, sort_findings, ReportFormat};

use crate::bremsstrahlung::{power_field_form, power_kinematic_form, PowerVariant};
use crate::dynamics::{accel_electric_literal, accel_magnetic_literal, accel_standard};
use crate::fields::{FieldConfig, Vec3};
use crate::quantities::{ConstantsTable, Dimension};
use crate::vacuum_radiation::{
    omega_electric, EvalMode, ELECTRIC_ENERGY_COEFFICIENT, ELECTRIC_INTENSITY_COEFFICIENT,
    MAGNETIC_ENERGY_COEFFICIENT, MAGNETIC_INTENSITY_COEFFICIENT, OMEGA_COEFFICIENT,
};

/// Unit reading under which an equation is checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Interpretation {
    /// SI units, formulas exactly as printed.
    SiLiteral,
    /// Gaussian units (ε₀ = μ₀ = 1), formulas as printed.
    Gaussian,
    /// SI units with textbook forms where the printed form is non-SI.
    SiTextbook,
}

impl Interpretation {
    pub const ALL: [Interpretation; 3] = [
        Interpretation::SiLiteral,
        Interpretation::Gaussian,
        Interpretation::SiTextbook,
    ];

    pub fn unit_system(&self) -> UnitSystem {
        match self {
            Interpretation::Gaussian => UnitSystem::Gaussian,
            _ => UnitSystem::Si,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Interpretation::SiLiteral => "si_literal",
            Interpretation::Gaussian => "gaussian",
            Interpretation::SiTextbook => "si_textbook",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FindingKind {
    DimensionMismatch,
    CoefficientMismatch,
    CrossCheckFailure,
    OrientationFlip,
    NotationAnomaly,
    /// Info-level record for a check that passed.
    Consistent,
}

impl FindingKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            FindingKind::DimensionMismatch => "dimension_mismatch",
            FindingKind::CoefficientMismatch => "coefficient_mismatch",
            FindingKind::CrossCheckFailure => "cross_check_failure",
            FindingKind::OrientationFlip => "orientation_flip",
            FindingKind::NotationAnomaly => "notation_anomaly",
            FindingKind::Consistent => "consistent",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Severity {
    Info,
    Warn,
    Fail,
}

impl Severity {
    pub fn as_str(&self) -> &'static str {
        match self {
            Severity::Info => "info",
            Severity::Warn => "warn",
            Severity::Fail => "fail",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AuditFinding {
    pub equation_id: String,
    pub kind: FindingKind,
    pub interpretation: Option<Interpretation>,
    pub detail: String,
    /// Ratio or delta; always present for coefficient and cross-check kinds.
    pub magnitude: Option<f64>,
    pub severity: Severity,
}

impl AuditFinding {
    fn new(
        id: &str,
        kind: FindingKind,
        interpretation: Option<Interpretation>,
        detail: impl Into<String>,
        magnitude: Option<f64>,
        severity: Severity,
    ) -> Self {
        Self {
            equation_id: id.to_string(),
            kind,
            interpretation,
            detail: detail.into(),
            magnitude,
            severity,
        }
    }
}

/// Dimensions of one equation under one interpretation.
#[derive(Debug, Clone, PartialEq)]
pub struct EquationRecord {
    pub id: &'static str,
    pub description: &'static str,
    pub interpretation: Interpretation,
    pub lhs_dim: Result<Dimension, DimIssue>,
    pub rhs_dim: Result<Dimension, DimIssue>,
    pub printed_coefficient: Option<f64>,
    pub computed_coefficient: Option<f64>,
}

impl EquationRecord {
    pub fn is_consistent(&self) -> bool {
        matches!((&self.lhs_dim, &self.rhs_dim), (Ok(l), Ok(r)) if l == r)
    }
}

pub fn equation_records(interpretation: Interpretation) -> Vec<EquationRecord> {
    let system = interpretation.unit_system();
    let checks = coefficient_checks();
    printed_equations()
        .into_iter()
        .map(|eq| {
            let check = checks.iter().find(|c| c.id == eq.id);
            EquationRecord {
                id: eq.id,
                description: eq.description,
                interpretation,
                lhs_dim: eq.lhs.dim(system),
                rhs_dim: eq.rhs_for(interpretation).dim(system),
                printed_coefficient: check.map(|c| c.printed),
                computed_coefficient: check.and_then(|c| (c.compute)(interpretation).ok()),
            }
        })
        .collect()
}

pub fn audit_dimensions(interpretation: Interpretation) -> Vec<AuditFinding> {
    equation_records(interpretation)
        .into_iter()
        .map(|rec| {
            let i = Some(interpretation);
            match (&rec.lhs_dim, &rec.rhs_dim) {
                (Ok(l), Ok(r)) if l == r => AuditFinding::new(
                    rec.id,
                    FindingKind::Consistent,
                    i,
                    format!("{}: both sides [{l}]", rec.description),
                    None,
                    Severity::Info,
                ),
                (Ok(l), Ok(r)) => AuditFinding::new(
                    rec.id,
                    FindingKind::DimensionMismatch,
                    i,
                    format!(
                        "{}: left [{l}], right [{r}], residual right/left [{}]",
                        rec.description,
                        *r / *l
                    ),
                    None,
                    Severity::Warn,
                ),
                (Err(issue), _) | (_, Err(issue)) => AuditFinding::new(
                    rec.id,
                    FindingKind::DimensionMismatch,
                    i,
                    format!("{}: {issue}", rec.description),
                    None,
                    Severity::Warn,
                ),
            }
        })
        .collect()
}

const PASS_TOLERANCE: f64 = 1e-6;
const FAIL_FACTOR: f64 = 10.0;

fn ratio_severity(ratio: f64) -> Option<Severity> {
    if (ratio - 1.0).abs() <= PASS_TOLERANCE {
        None
    } else if ratio.abs() > FAIL_FACTOR || ratio.abs() < 1.0 / FAIL_FACTOR {
        Some(Severity::Fail)
    } else {
        Some(Severity::Warn)
    }
}

fn ratio_finding(
    id: &str,
    failure: FindingKind,
    interpretation: Option<Interpretation>,
    detail: String,
    ratio: f64,
) -> AuditFinding {
    match ratio_severity(ratio) {
        None => AuditFinding::new(
            id,
            FindingKind::Consistent,
            interpretation,
            detail,
            Some(ratio),
            Severity::Info,
        ),
        Some(sev) => AuditFinding::new(id, failure, interpretation, detail, Some(ratio), sev),
    }
}

pub fn audit_coefficients() -> Vec<AuditFinding> {
    let mut findings = Vec::new();
    for check in coefficient_checks() {
        for interpretation in Interpretation::ALL {
            let i = Some(interpretation);
            match (check.compute)(interpretation) {
                Ok(computed) => {
                    let ratio = check.printed / computed;
                    findings.push(ratio_finding(
                        check.id,
                        FindingKind::CoefficientMismatch,
                        i,
                        format!(
                            "{}: printed {:.3e}, computed {:.6e}, printed/computed {:.6e}",
                            check.description, check.printed, computed, ratio
                        ),
                        ratio,
                    ));
                }
                Err(reason) => findings.push(AuditFinding::new(
                    check.id,
                    FindingKind::NotationAnomaly,
                    i,
                    format!("{}: not evaluable ({reason})", check.description),
                    None,
                    Severity::Warn,
                )),
            }
        }
    }
    findings
}

/// Numbers quoted in the running text beside the final energy and intensity laws.
pub mod text_claims {
    pub const ELECTRIC_ENERGY_AT_REFERENCE: f64 = 3e-21;
    pub const ELECTRIC_INTENSITY_AT_REFERENCE: f64 = 1e-4;
    pub const MAGNETIC_ENERGY_AT_REFERENCE: f64 = 1e-19;
    pub const MAGNETIC_INTENSITY_AT_REFERENCE: f64 = 10.0;
    pub const MAGNETIC_FREQUENCY_GHZ_AT_REFERENCE: f64 = 1e5;
    /// "~" claims are accepted within this factor.
    pub const APPROXIMATE_FACTOR: f64 = 2.0;
}

fn approximate_claim(id: &str, what: &str, claimed: f64, computed: f64) -> AuditFinding {
    let ratio = claimed / computed;
    let within =
        (1.0 / text_claims::APPROXIMATE_FACTOR..=text_claims::APPROXIMATE_FACTOR).contains(&ratio);
    let detail = format!("{what}: text claims ~{claimed:.1e}, coefficients give {computed:.6e}");
    if within {
        AuditFinding::new(
            id,
            FindingKind::Consistent,
            None,
            detail,
            Some(ratio),
            Severity::Info,
        )
    } else {
        let severity = ratio_severity(ratio).unwrap_or(Severity::Warn);
        AuditFinding::new(
            id,
            FindingKind::CrossCheckFailure,
            None,
            detail,
            Some(ratio),
            severity,
        )
    }
}

pub fn audit_crosschecks() -> Vec<AuditFinding> {
    let k = ConstantsTable::codata();
    let mut findings = Vec::new();
    let d = registry::REFERENCE_D;
    let b = registry::REFERENCE_B;

    // (a) electric intensity = energy × omega, D-reading and E-reading
    let d_reading = ELECTRIC_ENERGY_COEFFICIENT * OMEGA_COEFFICIENT;
    findings.push(ratio_finding(
        "Eq19",
        FindingKind::CrossCheckFailure,
        None,
        format!(
            "intensity = energy x omega with omega = 1e12 D: 1e-34 x 1e12 = {d_reading:.3e} vs printed 1e-22"
        ),
        d_reading / ELECTRIC_INTENSITY_COEFFICIENT,
    ));
    let e_reading = ELECTRIC_ENERGY_COEFFICIENT * OMEGA_COEFFICIENT / k.eps0;
    findings.push(AuditFinding::new(
        "Eq19",
        FindingKind::CrossCheckFailure,
        None,
        format!(
            "intensity = energy x omega with omega = 1e12 E = 1e12 D/eps0 gives {e_reading:.6e} D^4, printed 1e-22 D^4"
        ),
        Some(e_reading / ELECTRIC_INTENSITY_COEFFICIENT),
        Severity::Warn,
    ));
    findings.push(approximate_claim(
        "Eq19",
        "energy at D = 3e4",
        text_claims::ELECTRIC_ENERGY_AT_REFERENCE,
        ELECTRIC_ENERGY_COEFFICIENT * d.powi(3),
    ));
    findings.push(approximate_claim(
        "Eq19",
        "intensity at D = 3e4",
        text_claims::ELECTRIC_INTENSITY_AT_REFERENCE,
        ELECTRIC_INTENSITY_COEFFICIENT * d.powi(4),
    ));

    // (b) magnetic intensity: text claim, printed formula, energy × omega
    let printed = MAGNETIC_INTENSITY_COEFFICIENT * b;
    let product = MAGNETIC_ENERGY_COEFFICIENT * b.powi(3) * OMEGA_COEFFICIENT * b;
    findings.push(AuditFinding::new(
        "Eq20",
        FindingKind::CrossCheckFailure,
        None,
        format!(
            "intensity at B = 100: text claims ~{:.1e} J/s, printed 1e-7 B gives {printed:.3e}, energy x omega gives {product:.3e}",
            text_claims::MAGNETIC_INTENSITY_AT_REFERENCE
        ),
        Some(text_claims::MAGNETIC_INTENSITY_AT_REFERENCE / printed),
        Severity::Fail,
    ));
    findings.push(ratio_finding(
        "Eq20",
        FindingKind::CrossCheckFailure,
        None,
        format!("intensity at B = 100: printed 1e-7 B = {printed:.3e} vs energy x omega = {product:.3e}"),
        printed / product,
    ));
    findings.push(AuditFinding::new(
        "Eq20",
        FindingKind::CrossCheckFailure,
        None,
        "intensity scaling: energy x omega = 1e-13 B^4 but printed law is 1e-7 B; they coincide only at B = 100"
            .to_string(),
        Some(MAGNETIC_INTENSITY_COEFFICIENT / (MAGNETIC_ENERGY_COEFFICIENT * OMEGA_COEFFICIENT)),
        Severity::Warn,
    ));
    findings.push(approximate_claim(
        "Eq20",
        "energy at B = 100",
        text_claims::MAGNETIC_ENERGY_AT_REFERENCE,
        MAGNETIC_ENERGY_COEFFICIENT * b.powi(3),
    ));
    findings.push(approximate_claim(
        "Eq20",
        "frequency at B = 100 in GHz (omega read as Hz)",
        text_claims::MAGNETIC_FREQUENCY_GHZ_AT_REFERENCE,
        OMEGA_COEFFICIENT * b / 1e9,
    ));

    // (c) substituting the equations of motion into the kinematic form
    let e_field = Vec3::new(1.0, 0.0, 0.0);
    let field = power_field_form(
        &FieldConfig::electric(e_field),
        &Vec3::zeros(),
        PowerVariant::PaperLiteral,
        k,
    );
    let kinematic = power_kinematic_form(
        &Vec3::zeros(),
        &accel_electric_literal(&e_field, k).value,
        PowerVariant::PaperLiteral,
        k,
    );
    if let (Ok(field), Ok(kinematic)) = (field, kinematic) {
        findings.push(ratio_finding(
            "Eq3-Eq3p",
            FindingKind::CrossCheckFailure,
            Some(Interpretation::SiLiteral),
            "electric: Eq3' with Eq1 acceleration over Eq3 at v = 0 (expected 1)".to_string(),
            kinematic.watts() / field.watts(),
        ));
    }
    let v = Vec3::new(0.5 * k.c, 0.0, 0.0);
    let h = Vec3::new(0.0, 0.0, 1.0);
    let magnetic_cfg = FieldConfig::magnetic(h * k.mu0);
    let field = power_field_form(&magnetic_cfg, &v, PowerVariant::PaperLiteral, k);
    let kinematic = accel_magnetic_literal(&v, &h, k)
        .and_then(|a| power_kinematic_form(&v, &a.value, PowerVariant::PaperLiteral, k));
    if let (Ok(field), Ok(kinematic)) = (field, kinematic) {
        findings.push(ratio_finding(
            "Eq3-Eq3p",
            FindingKind::CrossCheckFailure,
            Some(Interpretation::SiLiteral),
            "magnetic: Eq3' with Eq2 acceleration over Eq3 at v = 0.5c perpendicular to H (expected 1)".to_string(),
            kinematic.watts() / field.watts(),
        ));
    }
    let crossed = FieldConfig::new(Vec3::new(3e5, 1e5, 0.0), Vec3::new(0.0, 2e-3, 1e-3));
    let v = Vec3::new(0.1, 0.5, -0.3) * k.c;
    let field = power_field_form(&crossed, &v, PowerVariant::Textbook, k);
    let kinematic = accel_standard(&v, &crossed, k)
        .and_then(|a| power_kinematic_form(&v, &a, PowerVariant::Textbook, k));
    if let (Ok(field), Ok(kinematic)) = (field, kinematic) {
        findings.push(ratio_finding(
            "Eq3-Eq3p",
            FindingKind::CrossCheckFailure,
            Some(Interpretation::SiTextbook),
            "textbook field form vs Lienard form with Lorentz-force acceleration, crossed fields at 0.6c".to_string(),
            kinematic.watts() / field.watts(),
        ));
    }

    // (d) logarithm orientation: displacement law against radiant-energy laws
    if let Ok(omega) = omega_electric(d / k.eps0, EvalMode::LiteralFormulas, k) {
        if let (Ok(printed), Ok(canonical)) = (
            registry::printed_displacement_log(omega),
            registry::radiant_energy_log(omega),
        ) {
            findings.push(AuditFinding::new(
                "Eq4-Eq17",
                FindingKind::OrientationFlip,
                None,
                format!(
                    "Eq4 uses ln(omega/nu_e) = {printed:.6} but Eq17/18 use ln(nu_e/omega) = {canonical:.6} at omega_E(D = 3e4) = {omega:.6e} s^-1; the printed Eq4 gives a negative mean-square displacement"
                ),
                Some(printed / canonical),
                Severity::Warn,
            ));
        }
    }
    findings
}

/// Fixed notes on printed forms that no numeric check can express.
pub fn notation_notes() -> Vec<AuditFinding> {
    vec![
        AuditFinding::new(
            "Eq2",
            FindingKind::NotationAnomaly,
            None,
            "cross product printed as [HV] = H x V, the negative of the textbook V x H",
            None,
            Severity::Info,
        ),
        AuditFinding::new(
            "Eq3",
            FindingKind::NotationAnomaly,
            None,
            "second bracket term printed as unsquared (EH)/c^2; the textbook term is (E.V)^2/c^2",
            None,
            Severity::Warn,
        ),
        AuditFinding::new(
            "Eq3-Eq3p",
            FindingKind::NotationAnomaly,
            None,
            "denominator exponents differ: (1-V^2/c^2)^2 in Eq3, (1-V^2/c^2)^3 in Eq3'; textbook field form has exponent 1",
            None,
            Severity::Info,
        ),
        AuditFinding::new(
            "Eq17",
            FindingKind::NotationAnomaly,
            None,
            "bracket grouping leaves open whether 2/3 sits inside the 3/2 power; the two readings differ by (2/3)^(1/2)",
            Some((2.0f64 / 3.0).sqrt()),
            Severity::Info,
        ),
    ]
}

/// Every finding, in rendering order.
pub fn all_findings() -> Vec<AuditFinding> {
    let mut findings: Vec<AuditFinding> = Interpretation::ALL
        .into_iter()
        .flat_map(audit_dimensions)
        .collect();
    findings.extend(audit_coefficients());
    findings.extend(audit_crosschecks());
    findings.extend(notation_notes());
    sort_findings(&mut findings);
    findings
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn find<'a>(
        findings: &'a [AuditFinding],
        id: &str,
        kind: FindingKind,
        interpretation: Option<Interpretation>,
    ) -> Vec<&'a AuditFinding> {
        findings
            .iter()
            .filter(|f| f.equation_id == id && f.kind == kind && f.interpretation == interpretation)
            .collect()
    }

    #[test]
    fn electric_motion_residual_is_inverse_permittivity() {
        let rec = equation_records(Interpretation::SiLiteral)
            .into_iter()
            .find(|r| r.id == "Eq1")
            .unwrap();
        let residual = rec.rhs_dim.clone().unwrap() / rec.lhs_dim.clone().unwrap();
        assert_eq!(residual, Dimension::PERMITTIVITY.inverse());
        let findings = audit_dimensions(Interpretation::SiLiteral);
        assert_eq!(
            find(
                &findings,
                "Eq1",
                FindingKind::DimensionMismatch,
                Some(Interpretation::SiLiteral)
            )
            .len(),
            1
        );
    }

    #[test]
    fn textbook_lorentz_forms_are_consistent() {
        let findings = audit_dimensions(Interpretation::SiTextbook);
        for id in [
            "Eq1",
            "Eq2",
            "Eq3",
            "Eq3p",
            "Eq4",
            "Eq4-alpha",
            "Eq12",
            "Eq14",
            "Eq17",
            "Eq17-nu_e",
            "Eq18",
        ] {
            assert_eq!(
                find(
                    &findings,
                    id,
                    FindingKind::Consistent,
                    Some(Interpretation::SiTextbook)
                )
                .len(),
                1,
                "{id}"
            );
        }
    }

    #[test]
    fn displacement_law_is_consistent_everywhere() {
        for i in Interpretation::ALL {
            let rec = equation_records(i)
                .into_iter()
                .find(|r| r.id == "Eq4")
                .unwrap();
            assert!(rec.is_consistent(), "{i:?}");
            assert_eq!(rec.lhs_dim, Ok(Dimension::AREA));
        }
    }

    #[test]
    fn gaussian_reading_repairs_field_equations() {
        let findings = audit_dimensions(Interpretation::Gaussian);
        for id in ["Eq1", "Eq2", "Eq3p", "Eq4-alpha", "Eq10", "Eq14", "Eq18"] {
            assert_eq!(
                find(
                    &findings,
                    id,
                    FindingKind::Consistent,
                    Some(Interpretation::Gaussian)
                )
                .len(),
                1,
                "{id}"
            );
        }
        // the (EH)/c² term stays anomalous in every reading
        let eq3 = find(
            &findings,
            "Eq3",
            FindingKind::DimensionMismatch,
            Some(Interpretation::Gaussian),
        );
        assert_eq!(eq3.len(), 1);
        assert!(eq3[0].detail.contains("summand 2"));
    }

    #[test]
    fn si_literal_known_mismatches() {
        let findings = audit_dimensions(Interpretation::SiLiteral);
        for id in [
            "Eq1",
            "Eq2",
            "Eq3",
            "Eq3p",
            "Eq4-alpha",
            "Eq6",
            "Eq8",
            "Eq10",
            "Eq14",
            "Eq17-nu_e",
            "Eq18",
        ] {
            assert_eq!(
                find(
                    &findings,
                    id,
                    FindingKind::DimensionMismatch,
                    Some(Interpretation::SiLiteral)
                )
                .len(),
                1,
                "{id}"
            );
        }
        for id in ["Eq4", "Eq9", "Eq12", "Eq17"] {
            assert_eq!(
                find(
                    &findings,
                    id,
                    FindingKind::Consistent,
                    Some(Interpretation::SiLiteral)
                )
                .len(),
                1,
                "{id}"
            );
        }
    }

    #[test]
    fn electric_frequency_coefficient_gap() {
        let findings = audit_coefficients();
        let eq12 = find(
            &findings,
            "Eq12",
            FindingKind::CoefficientMismatch,
            Some(Interpretation::SiLiteral),
        );
        assert_eq!(eq12.len(), 1);
        // 1e12 / 145.0583264221 from the 30-digit oracle
        assert_relative_eq!(
            eq12[0].magnitude.unwrap(),
            6.893_778_693_475_438e9,
            max_relative = 1e-9
        );
        assert_eq!(eq12[0].severity, Severity::Fail);
    }

    #[test]
    fn electric_energy_coefficient_gap() {
        let findings = audit_coefficients();
        let eq19: Vec<_> = find(
            &findings,
            "Eq19",
            FindingKind::CoefficientMismatch,
            Some(Interpretation::SiLiteral),
        )
        .into_iter()
        .filter(|f| f.detail.starts_with("energy"))
        .collect();
        assert_eq!(eq19.len(), 1);
        // 1e-34 / (7.1076501e-25 / 2.7e13)
        assert_relative_eq!(
            eq19[0].magnitude.unwrap(),
            3_798.723_850_530_146,
            max_relative = 1e-9
        );
    }

    #[test]
    fn sanity_record_passes() {
        let findings = audit_coefficients();
        for i in Interpretation::ALL {
            assert_eq!(
                find(&findings, "Sanity-nu_e", FindingKind::Consistent, Some(i)).len(),
                1
            );
        }
    }

    #[test]
    fn expression_trees_agree_with_evaluators() {
        use crate::vacuum_radiation::{
            frequency_law_coefficient, vacuum_energy_electric, vacuum_energy_magnetic,
        };
        let k = ConstantsTable::codata();
        let checks = coefficient_checks();
        let eq12 = checks.iter().find(|c| c.id == "Eq12").unwrap();
        assert_relative_eq!(
            (eq12.compute)(Interpretation::SiLiteral).unwrap(),
            frequency_law_coefficient(k),
            max_relative = 1e-12
        );
        let energy19 = &checks.iter().filter(|c| c.id == "Eq19").collect::<Vec<_>>()[0];
        assert_relative_eq!(
            (energy19.compute)(Interpretation::SiLiteral).unwrap() * 3e4f64.powi(3),
            vacuum_energy_electric(3e4, EvalMode::LiteralFormulas, k).unwrap(),
            max_relative = 1e-12
        );
        let energy20 = &checks.iter().filter(|c| c.id == "Eq20").collect::<Vec<_>>()[0];
        assert_relative_eq!(
            (energy20.compute)(Interpretation::SiLiteral).unwrap() * 1e6,
            vacuum_energy_magnetic(100.0, EvalMode::LiteralFormulas, k).unwrap(),
            max_relative = 1e-12
        );
    }

    #[test]
    fn crosscheck_results() {
        let k = ConstantsTable::codata();
        let findings = audit_crosschecks();
        let eq20: Vec<_> = find(&findings, "Eq20", FindingKind::CrossCheckFailure, None)
            .into_iter()
            .filter(|f| f.severity == Severity::Fail)
            .collect();
        assert_eq!(eq20.len(), 1);
        assert_relative_eq!(eq20[0].magnitude.unwrap(), 1e6, max_relative = 1e-12);

        let d_reading = find(&findings, "Eq19", FindingKind::Consistent, None);
        assert!(d_reading
            .iter()
            .any(|f| f.detail.contains("omega = 1e12 D:")));

        let sub = find(
            &findings,
            "Eq3-Eq3p",
            FindingKind::CrossCheckFailure,
            Some(Interpretation::SiLiteral),
        );
        assert_eq!(sub.len(), 2);
        assert_relative_eq!(
            sub[0].magnitude.unwrap(),
            1.0 / k.eps0,
            max_relative = 1e-12
        );
        assert_relative_eq!(sub[1].magnitude.unwrap(), k.eps0, max_relative = 1e-12);
        assert_eq!(
            find(
                &findings,
                "Eq3-Eq3p",
                FindingKind::Consistent,
                Some(Interpretation::SiTextbook)
            )
            .len(),
            1
        );

        let flip = find(&findings, "Eq4-Eq17", FindingKind::OrientationFlip, None);
        assert_eq!(flip.len(), 1);
        assert_eq!(flip[0].severity, Severity::Warn);
        assert_relative_eq!(flip[0].magnitude.unwrap(), -1.0, max_relative = 1e-12);
    }

    #[test]
    fn magnitudes_present_where_required() {
        for f in all_findings() {
            if matches!(
                f.kind,
                FindingKind::CoefficientMismatch | FindingKind::CrossCheckFailure
            ) {
                assert!(f.magnitude.is_some(), "{f:?}");
            }
        }
    }

    #[test]
    fn audit_does_not_change_evaluation() {
        use crate::vacuum_radiation::{full_report, ReportOptions};
        let k = ConstantsTable::codata();
        let cfg = FieldConfig::from_induction(3e4, 100.0, k);
        let before = full_report(
            &cfg,
            EvalMode::LiteralFormulas,
            &ReportOptions::default(),
            k,
        )
        .unwrap();
        let _ = all_findings();
        let after = full_report(
            &cfg,
            EvalMode::LiteralFormulas,
            &ReportOptions::default(),
            k,
        )
        .unwrap();
        assert_eq!(before, after);
    }
}
