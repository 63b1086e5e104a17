//! Dimension-checked arithmetic, and one printed relation read in SI and in
//! Gaussian units.

use vacrad::audit::{equation_records, Interpretation};
use vacrad::quantities::{ConstantsTable, Dimension, Quantity};

fn main() -> vacrad::Result<()> {
    let k = ConstantsTable::codata();

    // e²/(4πε₀ħc) is the fine-structure constant
    let e2 = k.e_q().mul(&k.e_q())?;
    let denom = k
        .eps0_q()
        .mul(&k.hbar_q())?
        .mul(&k.c_q())?
        .scale(4.0 * std::f64::consts::PI)?;
    let alpha = e2.div(&denom)?;
    println!(
        "alpha = {:.12e} [{}], 1/alpha = {:.9}",
        alpha.magnitude(),
        alpha.dim(),
        1.0 / alpha.magnitude()
    );

    // e²/(ħc) alone is not dimensionless in SI
    let bare = e2.div(&k.hbar_q().mul(&k.c_q())?)?;
    println!("e^2/(hbar c) carries [{}]", bare.dim());

    let speed = Quantity::new(3.0, Dimension::VELOCITY)?;
    match speed.add(&Quantity::new(1.0, Dimension::LENGTH)?) {
        Ok(_) => unreachable!(),
        Err(e) => println!("velocity + length: {e}"),
    }

    for interp in Interpretation::ALL {
        for rec in equation_records(interp)
            .iter()
            .filter(|r| r.id == "Eq4-alpha")
        {
            println!(
                "{:12} {}: consistent = {}",
                interp.as_str(),
                rec.id,
                rec.is_consistent()
            );
        }
    }
    Ok(())
}
