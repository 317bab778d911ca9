use serde::{Deserialize, Serialize};

use super::specs::FamilyInvariants;
use crate::arith::limit::{rational_function_limit, Direction, Limit};
use crate::error::{Error, Result};
use crate::invariants::{constants_with, ConstantsOptions};

/// lim b(t)·v(t)/a(t)² in the given direction.
pub fn ratio_limit(inv: &FamilyInvariants, direction: Direction) -> Result<Limit> {
    if inv.a.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    rational_function_limit(&inv.bv(), &inv.a_sq(), direction)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AsymptoticVerdict {
    ObstructedIneq1AtInfinity,
    ObstructedIneq2AtInfinity,
    NotObstructedAtInfinity,
}

/// Classifies a limiting ratio against k₁ and k₂ (strict comparisons).
pub fn classify_limit(limit: &Limit, n: usize, options: ConstantsOptions) -> Result<AsymptoticVerdict> {
    let c = constants_with(n, options)?;
    Ok(match limit {
        Limit::PlusInfinity => AsymptoticVerdict::ObstructedIneq1AtInfinity,
        Limit::MinusInfinity => AsymptoticVerdict::ObstructedIneq2AtInfinity,
        Limit::Finite(l) if *l > c.k1 => AsymptoticVerdict::ObstructedIneq1AtInfinity,
        Limit::Finite(l) if *l < c.k2 => AsymptoticVerdict::ObstructedIneq2AtInfinity,
        Limit::Finite(_) => AsymptoticVerdict::NotObstructedAtInfinity,
    })
}

/// Verdict for t → +∞.
pub fn asymptotic_verdict(inv: &FamilyInvariants, n: usize) -> Result<AsymptoticVerdict> {
    asymptotic_verdict_toward(inv, n, Direction::PlusInfinity, ConstantsOptions::default())
}

pub fn asymptotic_verdict_toward(
    inv: &FamilyInvariants,
    n: usize,
    direction: Direction,
    options: ConstantsOptions,
) -> Result<AsymptoticVerdict> {
    classify_limit(&ratio_limit(inv, direction)?, n, options)
}
