//! Expression trees for printed equations.
//!
//! A tree is evaluated two ways: for its dimension under a unit system, and
//! numerically against a symbol binding. Vector products are modelled by
//! their magnitudes, which is all a dimension check or a coefficient
//! evaluation needs.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Div, Mul, Sub};

use num_rational::Ratio;

use crate::quantities::{ConstantsTable, Dimension, Exponent};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    C,
    Hbar,
    Charge,
    Mass,
    Eps0,
    Mu0,
    Alpha,
    NuE,
    Omega,
    EField,
    HField,
    DField,
    BField,
    Velocity,
    Accel,
    DeltaRSq,
    DvSqRate,
    Energy,
    Power,
    Angle,
}

impl Symbol {
    pub fn name(&self) -> &'static str {
        match self {
            Symbol::C => "c",
            Symbol::Hbar => "hbar",
            Symbol::Charge => "e",
            Symbol::Mass => "m_e",
            Symbol::Eps0 => "eps0",
            Symbol::Mu0 => "mu0",
            Symbol::Alpha => "alpha",
            Symbol::NuE => "nu_e",
            Symbol::Omega => "omega",
            Symbol::EField => "E",
            Symbol::HField => "H",
            Symbol::DField => "D",
            Symbol::BField => "B",
            Symbol::Velocity => "V",
            Symbol::Accel => "dV/dt",
            Symbol::DeltaRSq => "dr^2",
            Symbol::DvSqRate => "d(dV^2)/dt",
            Symbol::Energy => "energy",
            Symbol::Power => "power",
            Symbol::Angle => "beta",
        }
    }
}

/// Unit system a symbol's dimension is read in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnitSystem {
    Si,
    Gaussian,
}

fn half(n: i32) -> Exponent {
    Ratio::new(n, 2)
}

/// Gaussian field dimension M^(1/2) L^(-1/2) T^-1 shared by E, H, D and B.
fn gaussian_field() -> Dimension {
    Dimension::new(
        half(-1),
        half(1),
        Ratio::from_integer(-1),
        Ratio::from_integer(0),
    )
}

impl UnitSystem {
    pub fn dim(&self, symbol: Symbol) -> Dimension {
        use Symbol::*;
        match (self, symbol) {
            (_, C) | (_, Velocity) => Dimension::VELOCITY,
            (_, Hbar) => Dimension::ACTION,
            (_, Mass) => Dimension::MASS,
            (_, Alpha) | (_, Angle) => Dimension::DIMENSIONLESS,
            (_, NuE) | (_, Omega) => Dimension::FREQUENCY,
            (_, Accel) => Dimension::ACCELERATION,
            (_, DeltaRSq) => Dimension::AREA,
            (_, DvSqRate) => Dimension::VELOCITY.powi(2) / Dimension::TIME,
            (_, Energy) => Dimension::ENERGY,
            (_, Power) => Dimension::POWER,
            (UnitSystem::Si, Charge) => Dimension::CHARGE,
            (UnitSystem::Si, Eps0) => Dimension::PERMITTIVITY,
            (UnitSystem::Si, Mu0) => Dimension::PERMEABILITY,
            (UnitSystem::Si, EField) => Dimension::ELECTRIC_FIELD,
            (UnitSystem::Si, HField) => Dimension::MAGNETIC_FIELD_STRENGTH,
            (UnitSystem::Si, DField) => Dimension::ELECTRIC_DISPLACEMENT,
            (UnitSystem::Si, BField) => Dimension::MAGNETIC_INDUCTION,
            (UnitSystem::Gaussian, Charge) => Dimension::new(
                half(3),
                half(1),
                Ratio::from_integer(-1),
                Ratio::from_integer(0),
            ),
            (UnitSystem::Gaussian, Eps0) | (UnitSystem::Gaussian, Mu0) => Dimension::DIMENSIONLESS,
            (UnitSystem::Gaussian, EField)
            | (UnitSystem::Gaussian, HField)
            | (UnitSystem::Gaussian, DField)
            | (UnitSystem::Gaussian, BField) => gaussian_field(),
        }
    }

    /// Constant values in this system (SI, or CGS with ε₀ = μ₀ = 1).
    pub fn constants(&self) -> Bindings {
        let si = ConstantsTable::codata();
        let mut b = Bindings::default();
        match self {
            UnitSystem::Si => {
                b.set(Symbol::C, si.c)
                    .set(Symbol::Hbar, si.hbar)
                    .set(Symbol::Charge, si.e)
                    .set(Symbol::Mass, si.m_e)
                    .set(Symbol::Eps0, si.eps0)
                    .set(Symbol::Mu0, si.mu0);
            }
            UnitSystem::Gaussian => {
                b.set(Symbol::C, si.c * 1e2)
                    .set(Symbol::Hbar, si.hbar * 1e7)
                    .set(Symbol::Charge, si.e * si.c * 10.0)
                    .set(Symbol::Mass, si.m_e * 1e3)
                    .set(Symbol::Eps0, 1.0)
                    .set(Symbol::Mu0, 1.0);
            }
        }
        b.set(Symbol::Alpha, si.alpha).set(Symbol::NuE, si.nu_e);
        b
    }
}

/// Numeric values for symbols.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Bindings(BTreeMap<Symbol, f64>);

impl Bindings {
    pub fn set(&mut self, symbol: Symbol, value: f64) -> &mut Self {
        self.0.insert(symbol, value);
        self
    }

    pub fn with(mut self, symbol: Symbol, value: f64) -> Self {
        self.set(symbol, value);
        self
    }

    pub fn get(&self, symbol: Symbol) -> Option<f64> {
        self.0.get(&symbol).copied()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Sym(Symbol),
    Num(f64),
    Prod(Vec<Expr>),
    Quot(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Exponent),
    Sum(Vec<Expr>),
    Ln(Box<Expr>),
    Sin(Box<Expr>),
}

pub fn sym(symbol: Symbol) -> Expr {
    Expr::Sym(symbol)
}

pub fn num(x: f64) -> Expr {
    Expr::Num(x)
}

/// Why an expression has no single dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimIssue(pub String);

impl fmt::Display for DimIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl Expr {
    pub fn pow(self, numer: i32, denom: i32) -> Expr {
        Expr::Pow(Box::new(self), Ratio::new(numer, denom))
    }

    pub fn sq(self) -> Expr {
        self.pow(2, 1)
    }

    pub fn ln(self) -> Expr {
        Expr::Ln(Box::new(self))
    }

    pub fn sin(self) -> Expr {
        Expr::Sin(Box::new(self))
    }

    pub fn plus(self, other: Expr) -> Expr {
        match self {
            Expr::Sum(mut terms) => {
                terms.push(other);
                Expr::Sum(terms)
            }
            first => Expr::Sum(vec![first, other]),
        }
    }

    pub fn dim(&self, system: UnitSystem) -> Result<Dimension, DimIssue> {
        match self {
            Expr::Sym(s) => Ok(system.dim(*s)),
            Expr::Num(_) => Ok(Dimension::DIMENSIONLESS),
            Expr::Prod(factors) => factors
                .iter()
                .try_fold(Dimension::DIMENSIONLESS, |acc, f| Ok(acc * f.dim(system)?)),
            Expr::Quot(a, b) => Ok(a.dim(system)? / b.dim(system)?),
            Expr::Pow(a, e) => Ok(a.dim(system)?.powr(*e)),
            Expr::Sum(terms) => {
                let first = terms[0].dim(system)?;
                for (i, term) in terms.iter().enumerate().skip(1) {
                    let d = term.dim(system)?;
                    if d != first {
                        return Err(DimIssue(format!(
                            "summand {} has dimension [{d}] but summand 1 has [{first}]",
                            i + 1
                        )));
                    }
                }
                Ok(first)
            }
            Expr::Ln(a) | Expr::Sin(a) => {
                let d = a.dim(system)?;
                if d.is_dimensionless() {
                    Ok(Dimension::DIMENSIONLESS)
                } else {
                    let f = if matches!(self, Expr::Ln(_)) {
                        "ln"
                    } else {
                        "sin"
                    };
                    Err(DimIssue(format!("argument of {f} has dimension [{d}]")))
                }
            }
        }
    }

    pub fn eval(&self, bindings: &Bindings) -> Result<f64, String> {
        match self {
            Expr::Sym(s) => bindings
                .get(*s)
                .ok_or_else(|| format!("symbol {} is unbound", s.name())),
            Expr::Num(x) => Ok(*x),
            Expr::Prod(factors) => factors
                .iter()
                .try_fold(1.0, |acc, f| Ok(acc * f.eval(bindings)?)),
            Expr::Quot(a, b) => Ok(a.eval(bindings)? / b.eval(bindings)?),
            Expr::Pow(a, e) => {
                let exponent = *e.numer() as f64 / *e.denom() as f64;
                Ok(a.eval(bindings)?.powf(exponent))
            }
            Expr::Sum(terms) => terms
                .iter()
                .try_fold(0.0, |acc, t| Ok(acc + t.eval(bindings)?)),
            Expr::Ln(a) => {
                let x = a.eval(bindings)?;
                if x > 0.0 {
                    Ok(x.ln())
                } else {
                    Err(format!("logarithm of nonpositive value {x}"))
                }
            }
            Expr::Sin(a) => Ok(a.eval(bindings)?.sin()),
        }
    }
}

impl Mul for Expr {
    type Output = Expr;

    fn mul(self, rhs: Expr) -> Expr {
        match self {
            Expr::Prod(mut factors) => {
                factors.push(rhs);
                Expr::Prod(factors)
            }
            lhs => Expr::Prod(vec![lhs, rhs]),
        }
    }
}

impl Div for Expr {
    type Output = Expr;

    fn div(self, rhs: Expr) -> Expr {
        Expr::Quot(Box::new(self), Box::new(rhs))
    }
}

impl Sub for Expr {
    type Output = Expr;

    fn sub(self, rhs: Expr) -> Expr {
        self.plus(num(-1.0) * rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::Symbol::*;
    use super::*;

    #[test]
    fn force_from_charge_and_field() {
        let rhs = sym(Charge) * sym(EField);
        assert_eq!(rhs.dim(UnitSystem::Si).unwrap(), Dimension::FORCE);
        assert_eq!(rhs.dim(UnitSystem::Gaussian).unwrap(), Dimension::FORCE);
    }

    #[test]
    fn gaussian_fine_structure_is_dimensionless() {
        let alpha = sym(Charge).sq() / (sym(Hbar) * sym(C));
        assert!(alpha.dim(UnitSystem::Gaussian).unwrap().is_dimensionless());
        assert!(!alpha.dim(UnitSystem::Si).unwrap().is_dimensionless());
        let v = alpha.eval(&UnitSystem::Gaussian.constants()).unwrap();
        assert!((v / ConstantsTable::codata().alpha - 1.0).abs() < 1e-6);
    }

    #[test]
    fn sum_of_unlike_terms_is_reported() {
        let e = sym(EField) - sym(HField);
        let issue = e.dim(UnitSystem::Si).unwrap_err();
        assert!(issue.0.contains("summand 2"));
        assert!(e.dim(UnitSystem::Gaussian).is_ok());
    }

    #[test]
    fn log_of_dimensioned_argument() {
        assert!(sym(Omega).ln().dim(UnitSystem::Si).is_err());
        assert!((sym(Omega) / sym(NuE)).ln().dim(UnitSystem::Si).is_ok());
        let b = Bindings::default().with(Omega, 0.0).with(NuE, 1.0);
        assert!((sym(Omega) / sym(NuE)).ln().eval(&b).is_err());
    }

    #[test]
    fn numeric_evaluation() {
        let b = Bindings::default().with(EField, 3.0).with(HField, 2.0);
        let e = (sym(EField) - sym(HField)) * sym(EField).pow(1, 2).sq() / num(2.0);
        assert!((e.eval(&b).unwrap() - 1.5).abs() < 1e-15);
        assert!(sym(Omega).eval(&b).is_err());
    }
}
