use std::fmt;
use std::ops::{Div, Mul};

use num_rational::Ratio;
use num_traits::{One, Zero};

/// Rational exponent of one base dimension.
pub type Exponent = Ratio<i32>;

/// Physical dimension as rational exponents of length, mass, time and
/// electric current.
///
/// Exponents are rational rather than integer because intermediate groups in
/// the radiant-energy formulas are raised to the powers 3/2 and 1/2, and in
/// the Gaussian reading charge itself carries M^(1/2) L^(3/2) T^-1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Dimension {
    pub length: Exponent,
    pub mass: Exponent,
    pub time: Exponent,
    pub current: Exponent,
}

const fn int(n: i32) -> Exponent {
    Ratio::new_raw(n, 1)
}

/// Operation selector for [`dim_combine`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DimOp {
    Mul,
    Div,
}

impl Dimension {
    pub const DIMENSIONLESS: Self = Self::from_ints(0, 0, 0, 0);
    pub const LENGTH: Self = Self::from_ints(1, 0, 0, 0);
    pub const MASS: Self = Self::from_ints(0, 1, 0, 0);
    pub const TIME: Self = Self::from_ints(0, 0, 1, 0);
    pub const CURRENT: Self = Self::from_ints(0, 0, 0, 1);

    pub const AREA: Self = Self::from_ints(2, 0, 0, 0);
    pub const FREQUENCY: Self = Self::from_ints(0, 0, -1, 0);
    pub const VELOCITY: Self = Self::from_ints(1, 0, -1, 0);
    pub const ACCELERATION: Self = Self::from_ints(1, 0, -2, 0);
    pub const FORCE: Self = Self::from_ints(1, 1, -2, 0);
    pub const ENERGY: Self = Self::from_ints(2, 1, -2, 0);
    pub const POWER: Self = Self::from_ints(2, 1, -3, 0);
    pub const ACTION: Self = Self::from_ints(2, 1, -1, 0);
    pub const CHARGE: Self = Self::from_ints(0, 0, 1, 1);
    /// V/m
    pub const ELECTRIC_FIELD: Self = Self::from_ints(1, 1, -3, -1);
    /// A/m
    pub const MAGNETIC_FIELD_STRENGTH: Self = Self::from_ints(-1, 0, 0, 1);
    /// C/m²
    pub const ELECTRIC_DISPLACEMENT: Self = Self::from_ints(-2, 0, 1, 1);
    /// T
    pub const MAGNETIC_INDUCTION: Self = Self::from_ints(0, 1, -2, -1);
    /// F/m
    pub const PERMITTIVITY: Self = Self::from_ints(-3, -1, 4, 2);
    /// H/m
    pub const PERMEABILITY: Self = Self::from_ints(1, 1, -2, -2);

    pub const fn from_ints(length: i32, mass: i32, time: i32, current: i32) -> Self {
        Self {
            length: int(length),
            mass: int(mass),
            time: int(time),
            current: int(current),
        }
    }

    pub fn new(length: Exponent, mass: Exponent, time: Exponent, current: Exponent) -> Self {
        Self {
            length,
            mass,
            time,
            current,
        }
    }

    pub fn is_dimensionless(&self) -> bool {
        *self == Self::DIMENSIONLESS
    }

    fn zip(self, other: Self, f: impl Fn(Exponent, Exponent) -> Exponent) -> Self {
        Self {
            length: f(self.length, other.length),
            mass: f(self.mass, other.mass),
            time: f(self.time, other.time),
            current: f(self.current, other.current),
        }
    }

    pub fn powr(self, exponent: Exponent) -> Self {
        Self {
            length: self.length * exponent,
            mass: self.mass * exponent,
            time: self.time * exponent,
            current: self.current * exponent,
        }
    }

    pub fn powi(self, exponent: i32) -> Self {
        self.powr(int(exponent))
    }

    pub fn inverse(self) -> Self {
        self.powi(-1)
    }

    fn exponents(&self) -> [(&'static str, Exponent); 4] {
        [
            ("L", self.length),
            ("M", self.mass),
            ("T", self.time),
            ("I", self.current),
        ]
    }
}

impl Default for Dimension {
    fn default() -> Self {
        Self::DIMENSIONLESS
    }
}

impl Mul for Dimension {
    type Output = Dimension;

    fn mul(self, rhs: Self) -> Self {
        self.zip(rhs, |a, b| a + b)
    }
}

impl Div for Dimension {
    type Output = Dimension;

    fn div(self, rhs: Self) -> Self {
        self.zip(rhs, |a, b| a - b)
    }
}

/// Exponentwise sum (`Mul`) or difference (`Div`).
pub fn dim_combine(a: Dimension, b: Dimension, op: DimOp) -> Dimension {
    match op {
        DimOp::Mul => a * b,
        DimOp::Div => a / b,
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_dimensionless() {
            return f.write_str("1");
        }
        let mut first = true;
        for (symbol, exp) in self.exponents() {
            if exp.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            f.write_str(symbol)?;
            if exp.is_one() {
                continue;
            }
            if exp.is_integer() {
                write!(f, "^{}", exp.numer())?;
            } else {
                write!(f, "^({}/{})", exp.numer(), exp.denom())?;
            }
        }
        Ok(())
    }
}
