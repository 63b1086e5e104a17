//! Mean-square electron displacement driven by zero-point fluctuations.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::quantities::{ConstantsTable, Dimension, Quantity};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZpfDisplacement {
    /// δr̄², m².
    pub delta_r_sq: Quantity,
    /// Frequency argument of the logarithm, s⁻¹.
    pub omega: f64,
}

/// (2/π)·α·(ħ/m_e c)², m².
pub fn displacement_prefactor(k: &ConstantsTable) -> Quantity {
    let lc = k.compton_length();
    Quantity::new(2.0 / PI * k.alpha * lc * lc, Dimension::AREA).expect("finite constant")
}

/// δr̄² = (2/π)·α·(ħ/m_e c)²·ln(ν_e/ω) for 0 < ω < ν_e.
///
/// The logarithm is oriented as ln(ν_e/ω) so the result is positive below
/// the electronic vacuum frequency.
pub fn mean_square_displacement(omega: f64, k: &ConstantsTable) -> Result<ZpfDisplacement> {
    if !(omega > 0.0 && omega < k.nu_e) {
        return Err(Error::DomainError(format!(
            "frequency {omega:e} s^-1 outside (0, nu_e = {:e} s^-1)",
            k.nu_e
        )));
    }
    let delta_r_sq = displacement_prefactor(k).scale((k.nu_e / omega).ln())?;
    Ok(ZpfDisplacement { delta_r_sq, omega })
}
