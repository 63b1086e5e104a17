//! Radiation-from-vacuum characteristics of electrons accelerated in uniform
//! electric or magnetic fields.
//!
//! The crate evaluates the published formula chain (bremsstrahlung power,
//! zero-point displacement, frequency–field laws, radiant energy and
//! intensity) both from its printed power-of-ten coefficients and from the
//! physical constants, integrates electron trajectories, and audits the
//! printed equations for dimensional and numerical consistency.
//!
//! ```
//! use vacrad::quantities::ConstantsTable;
//! use vacrad::vacuum_radiation::{vacuum_energy_electric, EvalMode};
//!
//! let k = ConstantsTable::codata();
//! let energy = vacuum_energy_electric(3e4, EvalMode::PaperCoefficients, k).unwrap();
//! assert!((energy / 2.7e-21 - 1.0).abs() < 1e-12);
//! ```

pub mod audit;
pub mod bremsstrahlung;
pub mod cli;
pub mod dynamics;
pub mod error;
pub mod fields;
pub mod quantities;
pub mod vacuum_radiation;
pub mod zpf;

pub use error::{Error, Result};
