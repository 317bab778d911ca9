use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::binom::{binom, choose};
use crate::arith::poly::PolyQ;
use crate::arith::rational::{rat, Rational};
use crate::arith::roots::Domain;
use crate::error::{Error, Result};
use crate::invariants::SymplecticInvariants;

/// ω_t = ω + t·Re(β) on a Kähler manifold with c₁ = −[ω], described by the
/// pairings J_l = ∫ ω^{n−2l} ∧ β^l ∧ β̄^l, l = 0…⌊n/2⌋.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistFamilySpec {
    pub n: usize,
    #[serde(with = "crate::arith::rational::serde_rational::vec")]
    pub j: Vec<Rational>,
}

impl TwistFamilySpec {
    pub fn new(n: usize, j: Vec<Rational>) -> Self {
        TwistFamilySpec { n, j }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::InvalidSpec(format!("n must be at least 2, got {}", self.n)));
        }
        if self.j.len() != self.n / 2 + 1 {
            return Err(Error::InvalidSpec(format!(
                "J must have floor(n/2)+1 = {} entries, got {}",
                self.n / 2 + 1,
                self.j.len()
            )));
        }
        if !self.j[0].is_positive() {
            return Err(Error::InvalidSpec("J_0 (total volume) must be positive".into()));
        }
        if let Some(l) = self.j.iter().position(Signed::is_negative) {
            return Err(Error::InvalidSpec(format!("J_{l} must be non-negative")));
        }
        Ok(())
    }

    /// Highest l with J_l ≠ 0.
    pub fn highest_power(&self) -> usize {
        self.j.iter().rposition(|x| !x.is_zero()).unwrap_or(0)
    }
}

/// ω_t = η + tμ on M₁^{2n₁} × M₂^{2n₂} with c₁(Mᵢ) = −[ηᵢ], for t > 0;
/// `e` is ∫ η^{n₁} ∧ μ^{n₂}.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductFamilySpec {
    pub n1: usize,
    pub n2: usize,
    #[serde(with = "crate::arith::rational::serde_rational")]
    pub e: Rational,
}

impl ProductFamilySpec {
    pub fn new(n1: usize, n2: usize, e: Rational) -> Self {
        ProductFamilySpec { n1, n2, e }
    }

    pub fn n(&self) -> usize {
        self.n1 + self.n2
    }

    pub fn validate(&self) -> Result<()> {
        if self.n1 < 1 || self.n2 < 1 {
            return Err(Error::InvalidSpec("n1 and n2 must be at least 1".into()));
        }
        if !self.e.is_positive() {
            return Err(Error::InvalidSpec("E must be positive".into()));
        }
        Ok(())
    }

    /// The factors exchanged; its behaviour at t → ∞ is this family's
    /// behaviour at t → 0⁺.
    pub fn swapped(&self) -> Self {
        ProductFamilySpec {
            n1: self.n2,
            n2: self.n1,
            e: self.e.clone(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyKind {
    Twist,
    Product,
}

/// v(t), a(t), b(t) for a one-parameter family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyInvariants {
    pub n: usize,
    pub kind: FamilyKind,
    pub v: PolyQ,
    pub a: PolyQ,
    pub b: PolyQ,
}

impl FamilyInvariants {
    /// Parameter values on which the family is defined.
    pub fn domain(&self) -> Domain {
        match self.kind {
            FamilyKind::Twist => Domain::AllReals,
            FamilyKind::Product => Domain::Positive,
        }
    }

    pub fn at(&self, t: &Rational) -> SymplecticInvariants {
        SymplecticInvariants::new(self.n, self.v.eval(t), self.a.eval(t), self.b.eval(t))
    }

    /// b·v, the numerator of the asymptotic ratio.
    pub fn bv(&self) -> PolyQ {
        &self.b * &self.v
    }

    pub fn a_sq(&self) -> PolyQ {
        &self.a * &self.a
    }
}

fn binomial_weight(top: usize, l: usize) -> Rational {
    // C(top, 2l)·C(2l, l)·(1/2)^{2l}
    let c = choose(top as u64, 2 * l as u64) * choose(2 * l as u64, l as u64);
    Rational::from_integer(c) * rat(1, 4i64.pow(l as u32))
}

fn twist_sum(top: usize, j: &[Rational]) -> PolyQ {
    j.iter()
        .enumerate()
        .filter(|(l, _)| 2 * l <= top)
        .fold(PolyQ::zero(), |acc, (l, jl)| {
            &acc + &PolyQ::monomial(binomial_weight(top, l) * jl, 2 * l)
        })
}

/// Expands ω_tⁿ, ω∧ω_t^{n−1} and ω²∧ω_t^{n−2}; with c₁ = −[ω] these give
/// v, −a and b.
pub fn twist_invariants(spec: &TwistFamilySpec) -> Result<FamilyInvariants> {
    spec.validate()?;
    let n = spec.n;
    Ok(FamilyInvariants {
        n,
        kind: FamilyKind::Twist,
        v: twist_sum(n, &spec.j),
        a: -twist_sum(n - 1, &spec.j),
        b: twist_sum(n - 2, &spec.j),
    })
}

/// Σ coeff·t^exp, rejecting negative exponents that carry a non-zero
/// coefficient.
fn laurent_free(terms: &[(num_bigint::BigInt, i64)], scale: &Rational) -> Result<PolyQ> {
    let mut out = PolyQ::zero();
    for (c, exp) in terms {
        if c.is_zero() {
            continue;
        }
        if *exp < 0 {
            return Err(Error::InvalidSpec(format!("negative power t^{exp} in expansion")));
        }
        out = &out + &PolyQ::monomial(Rational::from_integer(c.clone()) * scale, *exp as usize);
    }
    Ok(out)
}

/// Expansions of ω_tⁿ, (η+μ)∧ω_t^{n−1} and (η+μ)²∧ω_t^{n−2} against
/// η^{n₁}∧μ^{n₂}, with the vanishing binomial convention.
pub fn product_invariants(spec: &ProductFamilySpec) -> Result<FamilyInvariants> {
    spec.validate()?;
    let (n1, n2) = (spec.n1 as i64, spec.n2 as i64);
    let n = n1 + n2;
    let two = num_bigint::BigInt::from(2);
    let v = laurent_free(&[(binom(n, n1), n2)], &spec.e)?;
    let a = -laurent_free(
        &[(binom(n - 1, n1 - 1), n2), (binom(n - 1, n1), n2 - 1)],
        &spec.e,
    )?;
    let b = laurent_free(
        &[
            (binom(n - 2, n1 - 2), n2),
            (two * binom(n - 2, n1 - 1), n2 - 1),
            (binom(n - 2, n1), n2 - 2),
        ],
        &spec.e,
    )?;
    Ok(FamilyInvariants {
        n: spec.n(),
        kind: FamilyKind::Product,
        v,
        a,
        b,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::int;

    fn poly(cs: &[(i64, i64)]) -> PolyQ {
        PolyQ::new(cs.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn twist_surface() {
        let fam = twist_invariants(&TwistFamilySpec::new(2, vec![int(1), int(2)])).unwrap();
        assert_eq!(fam.v, poly(&[(1, 1), (0, 1), (1, 1)]));
        assert_eq!(fam.a, poly(&[(-1, 1)]));
        assert_eq!(fam.b, poly(&[(1, 1)]));
    }

    #[test]
    fn twist_fourfold() {
        let fam = twist_invariants(&TwistFamilySpec::new(4, vec![int(1), int(1), int(0)])).unwrap();
        assert_eq!(fam.v, poly(&[(1, 1), (0, 1), (3, 1)]));
        assert_eq!(fam.a, poly(&[(-1, 1), (0, 1), (-3, 2)]));
        assert_eq!(fam.b, poly(&[(1, 1), (0, 1), (1, 2)]));
    }

    #[test]
    fn twist_base_point() {
        let spec = TwistFamilySpec::new(5, vec![rat(7, 3), int(2), int(5)]);
        let at0 = twist_invariants(&spec).unwrap().at(&int(0));
        assert_eq!((at0.v, at0.a, at0.b), (rat(7, 3), rat(-7, 3), rat(7, 3)));
    }

    #[test]
    fn twist_spec_validation() {
        for spec in [
            TwistFamilySpec::new(2, vec![int(0), int(1)]),
            TwistFamilySpec::new(2, vec![int(1), int(-1)]),
            TwistFamilySpec::new(4, vec![int(1), int(1)]),
            TwistFamilySpec::new(1, vec![int(1)]),
        ] {
            assert!(matches!(twist_invariants(&spec), Err(Error::InvalidSpec(_))), "{spec:?}");
        }
        assert_eq!(TwistFamilySpec::new(6, vec![int(1), int(0), int(1), int(0)]).highest_power(), 2);
    }

    #[test]
    fn product_two_by_two() {
        let fam = product_invariants(&ProductFamilySpec::new(2, 2, int(1))).unwrap();
        assert_eq!(fam.v, poly(&[(0, 1), (0, 1), (6, 1)]));
        assert_eq!(fam.a, poly(&[(0, 1), (-3, 1), (-3, 1)]));
        assert_eq!(fam.b, poly(&[(1, 1), (4, 1), (1, 1)]));
    }

    #[test]
    fn product_of_surfaces_follows_the_convention() {
        // every C(0, ·) vanishes, including the cross term
        let fam = product_invariants(&ProductFamilySpec::new(1, 1, int(1))).unwrap();
        assert_eq!(fam.v, poly(&[(0, 1), (2, 1)]));
        assert_eq!(fam.a, poly(&[(-1, 1), (-1, 1)]));
        assert!(fam.b.is_zero());
    }

    #[test]
    fn product_swap_symmetry_at_one() {
        for (n1, n2) in [(2, 3), (1, 4), (3, 5), (2, 2)] {
            let spec = ProductFamilySpec::new(n1, n2, rat(3, 2));
            let x = product_invariants(&spec).unwrap().at(&int(1));
            let y = product_invariants(&spec.swapped()).unwrap().at(&int(1));
            assert_eq!(x, y, "({n1},{n2})");
        }
    }

    #[test]
    fn product_spec_validation() {
        assert!(product_invariants(&ProductFamilySpec::new(0, 2, int(1))).is_err());
        assert!(product_invariants(&ProductFamilySpec::new(2, 2, int(0))).is_err());
    }
}
