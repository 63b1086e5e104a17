//! Mean-square zero-point displacement across the frequency range.

use vacrad::quantities::ConstantsTable;
use vacrad::zpf::{displacement_prefactor, mean_square_displacement};

fn main() {
    let k = ConstantsTable::codata();
    println!(
        "prefactor (2 alpha / pi) (hbar / m c)^2 = {:.6e} m^2",
        displacement_prefactor(k).magnitude()
    );
    println!("nu_e = {:.6e} 1/s", k.nu_e);
    for exp in [6, 9, 12, 15, 18, 20] {
        let omega = 10f64.powi(exp);
        let d = mean_square_displacement(omega, k).unwrap();
        println!(
            "omega = 1e{exp:<2}  dr^2 = {:.6e} m^2",
            d.delta_r_sq.magnitude()
        );
    }
    match mean_square_displacement(k.nu_e, k) {
        Ok(_) => unreachable!(),
        Err(e) => println!("omega = nu_e: {e}"),
    }
}
