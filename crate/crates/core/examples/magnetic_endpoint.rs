//! The magnetic laws at one induction, with the two frequency display
//! conventions and both magnetic intensity readings.

use vacrad::quantities::ConstantsTable;
use vacrad::vacuum_radiation::{
    evaluate, EvalMode, FieldKind, FrequencyConvention, MagneticIntensityLaw, ReportOptions,
};

fn main() -> vacrad::Result<()> {
    let b = 100.0;
    let k = ConstantsTable::codata();
    for frequency in [
        FrequencyConvention::NumericHz,
        FrequencyConvention::AngularOverTwoPi,
    ] {
        for law in [
            MagneticIntensityLaw::Printed,
            MagneticIntensityLaw::QuarticVariant,
        ] {
            let opts = ReportOptions {
                frequency,
                magnetic_intensity: law,
            };
            let r = evaluate(
                FieldKind::Magnetic,
                b,
                EvalMode::PaperCoefficients,
                &opts,
                k,
            )?;
            println!(
                "{frequency:?}/{law:?}: {:.4e} GHz, energy {:.3e} J, intensity {:.3e} J/s",
                r.frequency_ghz, r.energy, r.intensity
            );
        }
    }

    let lit = evaluate(
        FieldKind::Magnetic,
        b,
        EvalMode::LiteralFormulas,
        &ReportOptions::default(),
        k,
    )?;
    println!(
        "literal: omega {:.4e} 1/s, energy {:.4e} J, intensity {:.4e} J/s",
        lit.omega, lit.energy, lit.intensity
    );
    Ok(())
}
