//! Exact products of rationals and integer powers of π.

use std::fmt;
use std::ops::{Div, Mul};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// `coefficient · π^power`, kept in lowest terms (zero has power 0).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PiRational {
    coefficient: BigRational,
    power: i32,
}

impl PiRational {
    pub fn new(coefficient: BigRational, power: i32) -> Self {
        let power = if coefficient.is_zero() { 0 } else { power };
        PiRational { coefficient, power }
    }

    pub fn rational(coefficient: BigRational) -> Self {
        Self::new(coefficient, 0)
    }

    pub fn integer(n: i64) -> Self {
        Self::rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn pi() -> Self {
        Self::new(BigRational::one(), 1)
    }

    /// The exact binary value of a finite `f64`.
    pub fn from_f64(x: f64) -> Result<Self> {
        BigRational::from_float(x)
            .map(Self::rational)
            .ok_or_else(|| Error::domain(format!("{x} has no exact rational value")))
    }

    /// `num / 10^exp`
    pub fn decimal(num: i64, exp: u32) -> Self {
        let den = BigInt::from(10).pow(exp);
        Self::rational(BigRational::new(BigInt::from(num), den))
    }

    pub fn coefficient(&self) -> &BigRational {
        &self.coefficient
    }

    pub fn power(&self) -> i32 {
        self.power
    }

    pub fn is_negative(&self) -> bool {
        self.coefficient.is_negative()
    }

    pub fn half(&self) -> Self {
        Self::new(&self.coefficient / BigInt::from(2), self.power)
    }

    /// Sum of two terms with the same power of π; `None` otherwise.
    pub fn checked_add(&self, other: &Self) -> Option<Self> {
        if self.coefficient.is_zero() {
            return Some(other.clone());
        }
        if other.coefficient.is_zero() {
            return Some(self.clone());
        }
        (self.power == other.power).then(|| Self::new(&self.coefficient + &other.coefficient, self.power))
    }

    pub fn to_f64(&self) -> f64 {
        self.coefficient.to_f64().unwrap_or(f64::NAN) * std::f64::consts::PI.powi(self.power)
    }
}

impl Mul for &PiRational {
    type Output = PiRational;
    fn mul(self, rhs: &PiRational) -> PiRational {
        PiRational::new(&self.coefficient * &rhs.coefficient, self.power + rhs.power)
    }
}

impl Div for &PiRational {
    type Output = PiRational;
    fn div(self, rhs: &PiRational) -> PiRational {
        assert!(!rhs.coefficient.is_zero(), "division by zero");
        PiRational::new(&self.coefficient / &rhs.coefficient, self.power - rhs.power)
    }
}

impl fmt::Display for PiRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.coefficient)?;
        match self.power {
            0 => Ok(()),
            1 => write!(f, "*pi"),
            p => write!(f, "*pi^{p}"),
        }
    }
}

impl Serialize for PiRational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_powers_cancel() {
        let two_pi = &PiRational::integer(2) * &PiRational::pi();
        let inv = &PiRational::integer(1) / &two_pi;
        let one = &two_pi * &inv;
        assert_eq!(one, PiRational::integer(1));
        assert_eq!(one.power(), 0);
        assert!((two_pi.to_f64() - std::f64::consts::TAU).abs() < 1e-15);
    }

    #[test]
    fn addition_needs_matching_powers() {
        let a = PiRational::decimal(3, 1);
        let b = PiRational::decimal(7, 1);
        assert_eq!(a.checked_add(&b).unwrap(), PiRational::integer(1));
        assert!(a.checked_add(&PiRational::pi()).is_none());
        assert_eq!(PiRational::integer(0).checked_add(&PiRational::pi()).unwrap(), PiRational::pi());
    }

    #[test]
    fn float_round_trip() {
        let x = 1.234_567_890_123e15;
        let r = PiRational::from_f64(x).unwrap();
        assert_eq!(r.to_f64(), x);
        assert!(PiRational::from_f64(f64::NAN).is_err());
        assert_eq!(PiRational::decimal(5, 1).to_string(), "1/2");
        assert_eq!(PiRational::pi().half().to_string(), "1/2*pi");
    }
}
