//! Radiant energy, intensity and frequency in an electric field, in both
//! evaluation modes.
//!
//! cargo run --example electric_endpoint -- 3e4

use vacrad::quantities::ConstantsTable;
use vacrad::vacuum_radiation::{
    evaluate, lamb_reference, EvalMode, FieldKind, LambRatios, ReportOptions,
};

fn main() -> vacrad::Result<()> {
    let d: f64 = std::env::args()
        .nth(1)
        .map_or(3e4, |s| s.parse().expect("D in C/m^2"));
    let k = ConstantsTable::codata();
    let lamb = lamb_reference();

    println!("D = {d:e} C/m^2 (E = {:e} V/m)", d / k.eps0);
    for mode in [EvalMode::PaperCoefficients, EvalMode::LiteralFormulas] {
        match evaluate(FieldKind::Electric, d, mode, &ReportOptions::default(), k) {
            Ok(r) => {
                let ratios = LambRatios::of(&r, &lamb);
                println!(
                    "{:8} omega {:.4e} 1/s  energy {:.4e} J  intensity {:.4e} J/s  (x Lamb: {:.2e}, {:.2e})",
                    mode.as_str(),
                    r.omega,
                    r.energy,
                    r.intensity,
                    ratios.energy,
                    ratios.intensity
                );
            }
            Err(e) => println!("{:8} {e}", mode.as_str()),
        }
    }
    Ok(())
}
