use std::fmt;

use super::dimension::{Dimension, Exponent};
use crate::error::{Error, Result};

/// A finite real magnitude tagged with its dimension.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quantity {
    magnitude: f64,
    dim: Dimension,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
    /// Raise the left operand to a rational power. The right operand of
    /// [`q_arith`] must be dimensionless and exactly representable as the
    /// given exponent.
    Pow(Exponent),
}

impl Quantity {
    pub fn new(magnitude: f64, dim: Dimension) -> Result<Self> {
        if !magnitude.is_finite() {
            return Err(Error::NonFinite {
                context: "quantity construction",
            });
        }
        Ok(Self { magnitude, dim })
    }

    pub fn dimensionless(magnitude: f64) -> Result<Self> {
        Self::new(magnitude, Dimension::DIMENSIONLESS)
    }

    pub fn magnitude(&self) -> f64 {
        self.magnitude
    }

    pub fn dim(&self) -> Dimension {
        self.dim
    }

    fn checked(magnitude: f64, dim: Dimension, context: &'static str) -> Result<Self> {
        if magnitude.is_finite() {
            Ok(Self { magnitude, dim })
        } else {
            Err(Error::NonFinite { context })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_dim(other)?;
        Self::checked(self.magnitude + other.magnitude, self.dim, "addition")
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_dim(other)?;
        Self::checked(self.magnitude - other.magnitude, self.dim, "subtraction")
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        Self::checked(
            self.magnitude * other.magnitude,
            self.dim * other.dim,
            "multiplication",
        )
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Self::checked(
            self.magnitude / other.magnitude,
            self.dim / other.dim,
            "division",
        )
    }

    pub fn powr(&self, exponent: Exponent) -> Result<Self> {
        let e = *exponent.numer() as f64 / *exponent.denom() as f64;
        Self::checked(self.magnitude.powf(e), self.dim.powr(exponent), "power")
    }

    /// Multiply by a dimensionless factor.
    pub fn scale(&self, factor: f64) -> Result<Self> {
        Self::checked(self.magnitude * factor, self.dim, "scaling")
    }

    fn same_dim(&self, other: &Self) -> Result<()> {
        if self.dim == other.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            })
        }
    }
}

/// Binary arithmetic on quantities with dimension checking.
pub fn q_arith(a: &Quantity, b: &Quantity, op: ArithOp) -> Result<Quantity> {
    match op {
        ArithOp::Add => a.add(b),
        ArithOp::Sub => a.sub(b),
        ArithOp::Mul => a.mul(b),
        ArithOp::Div => a.div(b),
        ArithOp::Pow(exponent) => {
            if !b.dim.is_dimensionless() {
                return Err(Error::DimensionMismatch {
                    left: b.dim,
                    right: Dimension::DIMENSIONLESS,
                });
            }
            let e = *exponent.numer() as f64 / *exponent.denom() as f64;
            if b.magnitude != e {
                return Err(Error::InvalidArgument {
                    name: "exponent",
                    reason: format!("operand {} does not match exponent {exponent}", b.magnitude),
                });
            }
            a.powr(exponent)
        }
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:e} [{}]", self.magnitude, self.dim)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Ratio;
    use proptest::prelude::*;

    fn metres(x: f64) -> Quantity {
        Quantity::new(x, Dimension::LENGTH).unwrap()
    }

    #[test]
    fn adds_equal_dimensions() {
        let sum = q_arith(&metres(2.0), &metres(3.0), ArithOp::Add).unwrap();
        assert_eq!(sum, metres(5.0));
    }

    #[test]
    fn rejects_adding_length_to_time() {
        let seconds = Quantity::new(3.0, Dimension::TIME).unwrap();
        let err = q_arith(&metres(2.0), &seconds, ArithOp::Add).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { .. }));
    }

    #[test]
    fn product_carries_combined_dimension() {
        let rate = Quantity::new(4.0, Dimension::FREQUENCY).unwrap();
        let v = q_arith(&metres(3.0), &rate, ArithOp::Mul).unwrap();
        assert_eq!(v.magnitude(), 12.0);
        assert_eq!(v.dim(), Dimension::VELOCITY);
    }

    #[test]
    fn overflow_is_reported() {
        let big = metres(1e300);
        assert!(matches!(big.mul(&big), Err(Error::NonFinite { .. })));
        assert!(Quantity::new(f64::NAN, Dimension::LENGTH).is_err());
    }

    #[test]
    fn pow_requires_dimensionless_matching_exponent() {
        let area = Quantity::new(4.0, Dimension::AREA).unwrap();
        let half = Quantity::dimensionless(0.5).unwrap();
        let root = q_arith(&area, &half, ArithOp::Pow(Ratio::new(1, 2))).unwrap();
        assert_eq!(root, metres(2.0));
        assert!(q_arith(&area, &metres(0.5), ArithOp::Pow(Ratio::new(1, 2))).is_err());
    }

    proptest! {
        #[test]
        fn arithmetic_follows_dimension_algebra(
            x in 1e-10f64..1e10, y in 1e-10f64..1e10,
            a in -3i32..=3, b in -3i32..=3, c in -3i32..=3,
        ) {
            let da = Dimension::from_ints(a, b, c, 0);
            let db = Dimension::from_ints(c, a, b, 1);
            let qa = Quantity::new(x, da).unwrap();
            let qb = Quantity::new(y, db).unwrap();
            prop_assert_eq!(q_arith(&qa, &qb, ArithOp::Mul).unwrap().dim(), da * db);
            prop_assert_eq!(q_arith(&qa, &qb, ArithOp::Div).unwrap().dim(), da / db);
            prop_assert!(q_arith(&qa, &qb, ArithOp::Add).is_err());
        }
    }
}
