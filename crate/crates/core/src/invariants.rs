//! Symplectic Chern-number data and the obstruction verdicts derived from
//! it.
//!
//! With v = [ω]ⁿ(M), a = (c₁ ∨ [ω]^{n−1})(M) and b = (c₁² ∨ [ω]^{n−2})(M):
//!
//! * a compatible Einstein metric with a ≥ 0 is Kähler–Einstein with
//!   c₁ ∈ ℝ₊[ω], which forces b·v = a²;
//! * a compatible Einstein metric with a < 0 satisfies
//!   k₂·a² < b·v < k₁·a²;
//! * a compatible Kähler metric satisfies b·v ≤ a².

use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::rational::{int, rat, Rational};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymplecticInvariants {
    pub n: usize,
    #[serde(with = "crate::arith::rational::serde_rational")]
    pub v: Rational,
    #[serde(with = "crate::arith::rational::serde_rational")]
    pub a: Rational,
    #[serde(with = "crate::arith::rational::serde_rational")]
    pub b: Rational,
}

impl SymplecticInvariants {
    pub fn new(n: usize, v: Rational, a: Rational, b: Rational) -> Self {
        SymplecticInvariants { n, v, a, b }
    }

    fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::DimensionTooSmall { n: self.n, min: 2 });
        }
        if !self.v.is_positive() {
            return Err(Error::NonPositiveVolume(self.v.to_string()));
        }
        Ok(())
    }

    /// The data of λω: (λⁿv, λ^{n−1}a, λ^{n−2}b).
    pub fn rescaled(&self, lambda: &Rational) -> Self {
        let p = |k: usize| num_traits::pow(lambda.clone(), k);
        SymplecticInvariants {
            n: self.n,
            v: p(self.n) * &self.v,
            a: p(self.n - 1) * &self.a,
            b: p(self.n - 2) * &self.b,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstantsOptions {
    /// Use k₂ = 3/4 in real dimension four instead of the proved 2/3.
    pub lebrun_k2: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Constants {
    #[serde(with = "crate::arith::rational::serde_rational")]
    pub k1: Rational,
    #[serde(with = "crate::arith::rational::serde_rational")]
    pub k2: Rational,
    /// Lower scalar-curvature factor: 3/2 in dimension four, 5/3 above.
    #[serde(with = "crate::arith::rational::serde_rational")]
    pub scalar_bound: Rational,
}

pub fn constants_for(n: usize) -> Result<Constants> {
    constants_with(n, ConstantsOptions::default())
}

pub fn constants_with(n: usize, options: ConstantsOptions) -> Result<Constants> {
    match n {
        0 | 1 => Err(Error::DimensionTooSmall { n, min: 2 }),
        2 => Ok(Constants {
            k1: rat(9, 4),
            k2: if options.lebrun_k2 { rat(3, 4) } else { rat(2, 3) },
            scalar_bound: rat(3, 2),
        }),
        _ => {
            let nn = int(n as i64);
            Ok(Constants {
                k1: rat(25, 9),
                k2: (&nn - rat(25, 9)) / (nn - int(1)),
                scalar_bound: rat(5, 3),
            })
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EinsteinVerdict {
    /// a < 0 and b·v ≥ k₁a².
    ObstructedIneq1,
    /// a < 0 and b·v ≤ k₂a².
    ObstructedIneq2,
    /// a ≥ 0 and b·v ≠ a², so c₁ cannot be a non-negative multiple of [ω].
    /// This tests a necessary condition only.
    ObstructedPartA,
    NotObstructed,
}

impl EinsteinVerdict {
    pub fn is_obstructed(&self) -> bool {
        *self != EinsteinVerdict::NotObstructed
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum KaehlerVerdict {
    /// b·v > a².
    ObstructedApte,
    NotObstructed,
}

impl fmt::Display for EinsteinVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl fmt::Display for KaehlerVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Both sides of every inequality, exactly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictDetails {
    #[serde(with = "crate::arith::rational::serde_rational")]
    pub bv: Rational,
    #[serde(with = "crate::arith::rational::serde_rational")]
    pub a_sq: Rational,
    #[serde(with = "crate::arith::rational::serde_rational")]
    pub k1_a_sq: Rational,
    #[serde(with = "crate::arith::rational::serde_rational")]
    pub k2_a_sq: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub einstein: EinsteinVerdict,
    pub kaehler: KaehlerVerdict,
    pub details: VerdictDetails,
}

/// Einstein verdict from the signs of a, k₁a² − bv, bv − k₂a² and bv − a².
pub fn einstein_from_signs(sign_a: i8, sign_ineq1: i8, sign_ineq2: i8, sign_apte: i8) -> EinsteinVerdict {
    if sign_a >= 0 {
        if sign_apte != 0 {
            EinsteinVerdict::ObstructedPartA
        } else {
            EinsteinVerdict::NotObstructed
        }
    } else if sign_ineq1 <= 0 {
        EinsteinVerdict::ObstructedIneq1
    } else if sign_ineq2 <= 0 {
        EinsteinVerdict::ObstructedIneq2
    } else {
        EinsteinVerdict::NotObstructed
    }
}

pub fn kaehler_from_sign(sign_apte: i8) -> KaehlerVerdict {
    if sign_apte > 0 {
        KaehlerVerdict::ObstructedApte
    } else {
        KaehlerVerdict::NotObstructed
    }
}

fn sign(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

fn details(inv: &SymplecticInvariants, constants: &Constants) -> VerdictDetails {
    let a_sq = &inv.a * &inv.a;
    VerdictDetails {
        bv: &inv.b * &inv.v,
        k1_a_sq: &constants.k1 * &a_sq,
        k2_a_sq: &constants.k2 * &a_sq,
        a_sq,
    }
}

pub fn check_einstein_obstruction(inv: &SymplecticInvariants) -> Result<EinsteinVerdict> {
    check_einstein_with(inv, ConstantsOptions::default())
}

pub fn check_einstein_with(inv: &SymplecticInvariants, options: ConstantsOptions) -> Result<EinsteinVerdict> {
    inv.validate()?;
    let d = details(inv, &constants_with(inv.n, options)?);
    Ok(einstein_from_signs(
        sign(&inv.a),
        sign(&(&d.k1_a_sq - &d.bv)),
        sign(&(&d.bv - &d.k2_a_sq)),
        sign(&(&d.bv - &d.a_sq)),
    ))
}

pub fn check_kaehler_obstruction(inv: &SymplecticInvariants) -> Result<KaehlerVerdict> {
    inv.validate()?;
    let d = details(inv, &constants_for(inv.n)?);
    Ok(kaehler_from_sign(sign(&(&d.bv - &d.a_sq))))
}

pub fn evaluate(inv: &SymplecticInvariants, options: ConstantsOptions) -> Result<Verdict> {
    inv.validate()?;
    let d = details(inv, &constants_with(inv.n, options)?);
    Ok(Verdict {
        einstein: check_einstein_with(inv, options)?,
        kaehler: check_kaehler_obstruction(inv)?,
        details: d,
    })
}

/// Half-open window [lower, upper) of π-coefficients for the scalar
/// curvature of a non-Kähler compatible Einstein metric.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScalarWindow {
    #[serde(with = "crate::arith::rational::serde_rational")]
    pub lower: Rational,
    #[serde(with = "crate::arith::rational::serde_rational")]
    pub upper: Rational,
}

impl ScalarWindow {
    pub fn contains(&self, coefficient: &Rational) -> bool {
        &self.lower <= coefficient && coefficient < &self.upper
    }
}

/// None when a ≥ 0 (every compatible Einstein metric is then Kähler).
/// Otherwise s/π ∈ [bound·a·4/((n−1)!·v), a·4/((n−1)!·v)).
pub fn einstein_constant_window(inv: &SymplecticInvariants) -> Result<Option<ScalarWindow>> {
    inv.validate()?;
    if !inv.a.is_negative() {
        return Ok(None);
    }
    let constants = constants_for(inv.n)?;
    let fact = (1..inv.n as i64).map(int).fold(int(1), |a, x| a * x);
    let upper = &inv.a * int(4) / (fact * &inv.v);
    Ok(Some(ScalarWindow {
        lower: &constants.scalar_bound * &upper,
        upper,
    }))
}
