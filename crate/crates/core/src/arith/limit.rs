use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::poly::PolyQ;
use super::rational::{format_rational, Rational};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Direction {
    PlusInfinity,
    MinusInfinity,
    /// t → 0 from above.
    ZeroRight,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Limit {
    Finite(#[serde(with = "super::rational::serde_rational")] Rational),
    PlusInfinity,
    MinusInfinity,
}

impl Limit {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            Limit::Finite(r) => Some(r),
            _ => None,
        }
    }
}

impl fmt::Display for Limit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Limit::Finite(r) => f.write_str(&format_rational(r)),
            Limit::PlusInfinity => f.write_str("+inf"),
            Limit::MinusInfinity => f.write_str("-inf"),
        }
    }
}

/// Limit of numerator/denominator read off the dominant terms: the top
/// powers at ±∞, the lowest powers at 0⁺.
pub fn rational_function_limit(
    numerator: &PolyQ,
    denominator: &PolyQ,
    direction: Direction,
) -> Result<Limit> {
    if denominator.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    if numerator.is_zero() {
        return Ok(Limit::Finite(Rational::zero()));
    }
    let (num_exp, num_c, den_exp, den_c) = match direction {
        Direction::PlusInfinity | Direction::MinusInfinity => (
            numerator.degree().unwrap() as i64,
            numerator.leading().unwrap(),
            denominator.degree().unwrap() as i64,
            denominator.leading().unwrap(),
        ),
        Direction::ZeroRight => (
            -(numerator.order().unwrap() as i64),
            numerator.lowest().unwrap(),
            -(denominator.order().unwrap() as i64),
            denominator.lowest().unwrap(),
        ),
    };
    let ratio = num_c / den_c;
    let excess = num_exp - den_exp;
    if excess < 0 {
        return Ok(Limit::Finite(Rational::zero()));
    }
    if excess == 0 {
        return Ok(Limit::Finite(ratio));
    }
    // the dominant term behaves like ratio · t^excess (or t^-excess near 0⁺)
    let flips = direction == Direction::MinusInfinity && excess % 2 == 1;
    let positive = ratio.is_positive() != flips;
    Ok(if positive {
        Limit::PlusInfinity
    } else {
        Limit::MinusInfinity
    })
}
