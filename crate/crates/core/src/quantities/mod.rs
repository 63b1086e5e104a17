//! Dimension algebra over SI base dimensions, dimensioned quantities and the
//! physical constants table.

mod constants;
mod dimension;
mod quantity;

pub use constants::{constants, ConstantsMode, ConstantsTable};
pub use dimension::{dim_combine, DimOp, Dimension, Exponent};
pub use quantity::{q_arith, ArithOp, Quantity};
