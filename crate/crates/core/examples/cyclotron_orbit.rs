//! Gyration in a uniform magnetic field: speed conservation, the measured
//! gyrofrequency against eB/(γm), and the energy radiated on the way.

use vacrad::dynamics::{integrate, DynamicsMode};
use vacrad::fields::{lorentz_factor, ElectronState, FieldConfig, Vec3};
use vacrad::quantities::ConstantsTable;

fn main() -> vacrad::Result<()> {
    let k = ConstantsTable::codata();
    let b = 1.0;
    let fields = FieldConfig::magnetic(Vec3::new(0.0, 0.0, b));

    for beta in [1e-3, 0.5, 0.9] {
        let v0 = Vec3::new(beta * k.c, 0.0, 0.0);
        let gamma = lorentz_factor(&v0, k);
        let omega_c = k.e * b / (gamma * k.m_e);
        let period = 2.0 * std::f64::consts::PI / omega_c;
        let steps = 10_000;
        let dt = 3.0 * period / steps as f64;

        let traj = integrate(
            &ElectronState::at_origin(v0, k)?,
            &fields,
            dt,
            steps,
            DynamicsMode::StandardLorentz,
            k,
        )?;
        let turned: f64 = traj
            .samples
            .windows(2)
            .map(|w| {
                let (a, b) = (w[0].state.velocity, w[1].state.velocity);
                (a.x * b.y - a.y * b.x).atan2(a.dot(&b))
            })
            .sum();
        let measured = turned.abs() / (steps as f64 * dt);
        println!(
            "beta {beta}: drift {:.2e}, omega {measured:.6e} vs {omega_c:.6e}, radius {:.4e} m, radiated {:.4e} J",
            traj.max_speed_drift(),
            gamma * k.m_e * beta * k.c / (k.e * b),
            traj.cumulative_energy()
        );
    }
    Ok(())
}
