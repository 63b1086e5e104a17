//! CODATA 2018 SI constants.

use std::f64::consts::PI;

use super::dimension::Dimension;
use super::quantity::Quantity;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstantsMode {
    CodataSi,
}

/// Constants used throughout the crate, in SI units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConstantsTable {
    /// Speed of light, m/s.
    pub c: f64,
    /// Reduced Planck constant, J·s.
    pub hbar: f64,
    /// Elementary charge, C (positive).
    pub e: f64,
    /// Electron mass, kg.
    pub m_e: f64,
    /// Vacuum permittivity, F/m.
    pub eps0: f64,
    /// Vacuum permeability, H/m.
    pub mu0: f64,
    /// Fine-structure constant.
    pub alpha: f64,
    /// Electronic vacuum frequency m_e c²/ħ, s⁻¹.
    pub nu_e: f64,
}

pub const CODATA_SI: ConstantsTable = {
    let c = 299_792_458.0;
    let hbar = 1.054_571_817e-34;
    let m_e = 9.109_383_701_5e-31;
    ConstantsTable {
        c,
        hbar,
        e: 1.602_176_634e-19,
        m_e,
        eps0: 8.854_187_812_8e-12,
        mu0: 1.256_637_062_12e-6,
        alpha: 7.297_352_569_3e-3,
        nu_e: m_e * c * c / hbar,
    }
};

pub fn constants(mode: ConstantsMode) -> ConstantsTable {
    match mode {
        ConstantsMode::CodataSi => CODATA_SI,
    }
}

impl Default for ConstantsTable {
    fn default() -> Self {
        CODATA_SI
    }
}

impl ConstantsTable {
    pub fn codata() -> &'static ConstantsTable {
        &CODATA_SI
    }

    /// e²/(4π ε₀ ħ c), the SI expression of the fine-structure constant.
    pub fn alpha_from_si(&self) -> f64 {
        self.e * self.e / (4.0 * PI * self.eps0 * self.hbar * self.c)
    }

    /// Reduced Compton wavelength ħ/(m_e c), m.
    pub fn compton_length(&self) -> f64 {
        self.hbar / (self.m_e * self.c)
    }

    pub fn c_q(&self) -> Quantity {
        Quantity::new(self.c, Dimension::VELOCITY).expect("finite constant")
    }

    pub fn hbar_q(&self) -> Quantity {
        Quantity::new(self.hbar, Dimension::ACTION).expect("finite constant")
    }

    pub fn e_q(&self) -> Quantity {
        Quantity::new(self.e, Dimension::CHARGE).expect("finite constant")
    }

    pub fn m_e_q(&self) -> Quantity {
        Quantity::new(self.m_e, Dimension::MASS).expect("finite constant")
    }

    pub fn eps0_q(&self) -> Quantity {
        Quantity::new(self.eps0, Dimension::PERMITTIVITY).expect("finite constant")
    }

    pub fn mu0_q(&self) -> Quantity {
        Quantity::new(self.mu0, Dimension::PERMEABILITY).expect("finite constant")
    }

    pub fn nu_e_q(&self) -> Quantity {
        Quantity::new(self.nu_e, Dimension::FREQUENCY).expect("finite constant")
    }
}
