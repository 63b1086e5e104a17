//! Liénard power enhancement for acceleration across and along the velocity,
//! and the literal field form next to the textbook one.

use vacrad::bremsstrahlung::{power_field_form, power_kinematic_form, PowerVariant};
use vacrad::fields::{lorentz_factor, FieldConfig, Vec3};
use vacrad::quantities::ConstantsTable;

fn main() -> vacrad::Result<()> {
    let k = ConstantsTable::codata();
    let a = 1e20;
    let p0 = power_kinematic_form(
        &Vec3::zeros(),
        &Vec3::new(a, 0.0, 0.0),
        PowerVariant::Textbook,
        k,
    )?
    .watts();
    println!("Larmor at |a| = {a:e} m/s^2: {p0:.6e} W");

    println!(
        "{:>6} {:>14} {:>14} {:>14}",
        "beta", "P_perp/P0", "gamma^4", "P_par/P0"
    );
    for beta in [0.1, 0.5, 0.9, 0.99] {
        let v = Vec3::new(beta * k.c, 0.0, 0.0);
        let g = lorentz_factor(&v, k);
        let perp =
            power_kinematic_form(&v, &Vec3::new(0.0, a, 0.0), PowerVariant::Textbook, k)?.watts();
        let par =
            power_kinematic_form(&v, &Vec3::new(a, 0.0, 0.0), PowerVariant::Textbook, k)?.watts();
        println!(
            "{beta:>6} {:>14.6e} {:>14.6e} {:>14.6e}",
            perp / p0,
            g.powi(4),
            par / p0
        );
    }

    let cfg = FieldConfig::from_magnitudes(1e6, 0.0);
    for variant in [PowerVariant::PaperLiteral, PowerVariant::Textbook] {
        let p = power_field_form(&cfg, &Vec3::zeros(), variant, k)?;
        println!(
            "{variant:?} field form at E = 1e6 V/m: {:.6e} [{}]",
            p.power.magnitude(),
            p.power.dim()
        );
    }
    Ok(())
}
