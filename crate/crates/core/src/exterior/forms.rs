//! Type decomposition of real 2-forms and the pointwise wedge identities
//! that the cohomological formulas rest on.

use num_traits::{Signed, Zero};

use super::multivector::{ModelSpace, MultiVector};
use crate::arith::rational::{int, GaussianRational, Rational};
use crate::error::{Error, Result};

fn factorial(k: usize) -> Rational {
    (1..=k as i64).map(int).fold(int(1), |a, x| a * x)
}

fn real(r: Rational) -> GaussianRational {
    GaussianRational::new(r, Rational::zero())
}

/// ξ = (1/n)(ξ,ω)ω + ξ₀′ + ξ″.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeDecomposition {
    pub omega_part: MultiVector,
    pub primitive_11: MultiVector,
    pub anti_invariant: MultiVector,
}

impl TypeDecomposition {
    /// ξ′ = omega_part + primitive_11.
    pub fn invariant(&self) -> MultiVector {
        &self.omega_part + &self.primitive_11
    }

    pub fn sum(&self) -> MultiVector {
        &self.invariant() + &self.anti_invariant
    }
}

fn check_real_two_form(xi: &MultiVector) -> Result<()> {
    if !xi.is_homogeneous_of(2) {
        return Err(Error::WrongDegree {
            expected: 2,
            found: xi.degree().map_or("mixed".into(), |d| d.to_string()),
        });
    }
    if !xi.is_real() {
        return Err(Error::NonRealForm);
    }
    Ok(())
}

/// Real pairing (ξ, η) with {e^i∧e^j : i<j} orthonormal.
pub fn pairing(xi: &MultiVector, eta: &MultiVector) -> Rational {
    xi.inner(eta).re
}

pub fn decompose(xi: &MultiVector) -> Result<TypeDecomposition> {
    check_real_two_form(xi)?;
    let space = xi.space();
    let half = real(Rational::new(1.into(), 2.into()));
    let pulled = xi.pullback_j();
    let invariant = (xi + &pulled).scale(&half);
    let anti_invariant = (xi - &pulled).scale(&half);
    let omega = space.omega();
    let omega_part = omega.scale_real(&(pairing(xi, &omega) / int(space.n() as i64)));
    let primitive_11 = &invariant - &omega_part;
    Ok(TypeDecomposition {
        omega_part,
        primitive_11,
        anti_invariant,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub holds: bool,
    pub residual: MultiVector,
}

impl IdentityCheck {
    fn from_residual(residual: MultiVector) -> Self {
        IdentityCheck {
            holds: residual.is_zero(),
            residual,
        }
    }
}

/// ξ ∧ ω^{n−1} − (n−1)!(ξ,ω)σ, which must vanish.
pub fn verify_omega_power_identity(xi: &MultiVector) -> Result<IdentityCheck> {
    check_real_two_form(xi)?;
    let space = xi.space();
    let n = space.n();
    let omega = space.omega();
    let lhs = xi.wedge(&space.power(&omega, n - 1))?;
    let rhs = space
        .volume()
        .scale_real(&(factorial(n - 1) * pairing(xi, &omega)));
    Ok(IdentityCheck::from_residual(&lhs - &rhs))
}

/// Both stated forms of the ξ∧ξ∧ω^{n−2} identity: one through the primitive
/// part ξ₀′ and one through the full J-invariant part ξ′.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareIdentityCheck {
    pub holds: bool,
    pub residual_primitive: MultiVector,
    pub residual_invariant: MultiVector,
}

pub fn verify_square_identity(xi: &MultiVector) -> Result<SquareIdentityCheck> {
    check_real_two_form(xi)?;
    let space = xi.space();
    let n = space.n();
    if n < 2 {
        return Err(Error::DimensionTooSmall { n, min: 2 });
    }
    let omega = space.omega();
    let parts = decompose(xi)?;
    let lhs = xi.wedge(xi)?.wedge(&space.power(&omega, n - 2))?;
    let xo = pairing(xi, &omega);
    let anti = parts.anti_invariant.norm_sq();
    let scale = factorial(n - 2);
    let nn = int(n as i64);

    let primitive_form = (&nn - int(1)) / &nn * &xo * &xo - parts.primitive_11.norm_sq() + &anti;
    let invariant_form = &xo * &xo - parts.invariant().norm_sq() + &anti;
    let sigma = space.volume();
    let residual_primitive = &lhs - &sigma.scale_real(&(&scale * primitive_form));
    let residual_invariant = &lhs - &sigma.scale_real(&(&scale * invariant_form));
    Ok(SquareIdentityCheck {
        holds: residual_primitive.is_zero() && residual_invariant.is_zero(),
        residual_primitive,
        residual_invariant,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HodgeRiemannCheck {
    pub holds: bool,
    pub norm_sq: Rational,
    pub residual: MultiVector,
}

/// ω^{n−2l} ∧ α ∧ ᾱ = (n−2l)! |α|² σ for a constant (2l,0)-form α.
///
/// |α|² is the Hermitian norm induced by the standard metric on the real
/// blade basis, under which |ε^{j₁}∧…∧ε^{j_p}|² = 2^p.
pub fn verify_hodge_riemann(alpha: &MultiVector) -> Result<HodgeRiemannCheck> {
    let space = alpha.space();
    let n = space.n();
    if alpha.is_zero() {
        return Ok(HodgeRiemannCheck {
            holds: true,
            norm_sq: Rational::zero(),
            residual: space.zero(),
        });
    }
    let degree = alpha.degree().ok_or_else(|| Error::WrongDegree {
        expected: 2,
        found: "mixed".into(),
    })?;
    if degree % 2 != 0 || degree > n {
        return Err(Error::WrongType(degree));
    }
    let holomorphic_mask = (0..n).fold(0u32, |m, j| m | (1 << (2 * j)));
    if alpha
        .to_complex_frame()
        .terms()
        .any(|(blade, _)| blade & !holomorphic_mask != 0)
    {
        return Err(Error::WrongType(degree));
    }
    let norm_sq = alpha.norm_sq();
    let lhs = space
        .power(&space.omega(), n - degree)
        .wedge(alpha)?
        .wedge(&alpha.conj())?;
    let rhs = space.volume().scale_real(&(factorial(n - degree) * &norm_sq));
    let residual = &lhs - &rhs;
    Ok(HodgeRiemannCheck {
        holds: residual.is_zero() && !norm_sq.is_negative(),
        norm_sq,
        residual,
    })
}

/// Checks ModelSpace-level sanity: (ω, ω) = n and ωⁿ = n!σ.
pub fn model_space_consistent(space: &ModelSpace) -> bool {
    let omega = space.omega();
    pairing(&omega, &omega) == int(space.n() as i64)
        && space.power(&omega, space.n()) == space.volume().scale_real(&factorial(space.n()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::rat;

    fn space(n: usize) -> ModelSpace {
        ModelSpace::new(n).unwrap()
    }

    #[test]
    fn decompose_e12() {
        let s = space(2);
        let parts = decompose(&s.blade(&[1, 2])).unwrap();
        assert_eq!(parts.omega_part, s.omega().scale_real(&rat(1, 2)));
        assert_eq!(
            parts.primitive_11,
            (&s.blade(&[1, 2]) - &s.blade(&[3, 4])).scale_real(&rat(1, 2))
        );
        assert!(parts.anti_invariant.is_zero());
    }

    #[test]
    fn decompose_omega() {
        let s = space(3);
        let parts = decompose(&s.omega()).unwrap();
        assert_eq!(parts.omega_part, s.omega());
        assert!(parts.primitive_11.is_zero());
        assert!(parts.anti_invariant.is_zero());
    }

    #[test]
    fn decompose_anti_invariant() {
        let s = space(2);
        let xi = &s.blade(&[1, 3]) - &s.blade(&[2, 4]);
        let parts = decompose(&xi).unwrap();
        assert!(parts.omega_part.is_zero());
        assert!(parts.primitive_11.is_zero());
        assert_eq!(parts.anti_invariant, xi);
    }

    #[test]
    fn decompose_rejects_bad_input() {
        let s = space(2);
        assert!(matches!(decompose(&s.blade(&[1])), Err(Error::WrongDegree { .. })));
        assert_eq!(decompose(&s.epsilon(1).wedge(&s.epsilon(2)).unwrap()), Err(Error::NonRealForm));
    }

    #[test]
    fn omega_power_identity_examples() {
        let s = space(2);
        let xi = s.blade(&[1, 2]);
        assert_eq!(xi.wedge(&s.omega()).unwrap(), s.volume());
        assert!(verify_omega_power_identity(&xi).unwrap().holds);
        for n in 1..=4 {
            assert!(verify_omega_power_identity(&space(n).omega()).unwrap().holds);
        }
    }

    #[test]
    fn square_identity_examples() {
        let s = space(2);
        let xi = &s.blade(&[1, 3]) - &s.blade(&[2, 4]);
        assert_eq!(xi.wedge(&xi).unwrap(), s.volume().scale_real(&int(2)));
        assert_eq!(xi.norm_sq(), int(2));
        assert!(verify_square_identity(&xi).unwrap().holds);
        for n in 2..=4 {
            assert!(verify_square_identity(&space(n).omega()).unwrap().holds);
        }
        assert_eq!(
            verify_square_identity(&space(1).omega()),
            Err(Error::DimensionTooSmall { n: 1, min: 2 })
        );
    }

    #[test]
    fn a_wrong_identity_leaves_a_residual() {
        // dropping the (n−1)! factor must be caught for n = 3
        let s = space(3);
        let xi = s.omega();
        let lhs = xi.wedge(&s.power(&s.omega(), 2)).unwrap();
        let wrong = s.volume().scale_real(&pairing(&xi, &s.omega()));
        assert!(!(&lhs - &wrong).is_zero());
    }

    #[test]
    fn hodge_riemann_generator() {
        let s = space(2);
        let alpha = s.epsilon(1).wedge(&s.epsilon(2)).unwrap();
        let check = verify_hodge_riemann(&alpha).unwrap();
        assert!(check.holds);
        assert_eq!(check.norm_sq, int(4));
        let alpha_bar = alpha.conj();
        assert_eq!(alpha.wedge(&alpha_bar).unwrap(), s.volume().scale_real(&int(4)));
    }

    #[test]
    fn hodge_riemann_zero_and_embedded() {
        let s = space(4);
        let zero = verify_hodge_riemann(&s.zero()).unwrap();
        assert!(zero.holds && zero.norm_sq.is_zero());
        let alpha = s.epsilon(1).wedge(&s.epsilon(2)).unwrap();
        let check = verify_hodge_riemann(&alpha).unwrap();
        assert!(check.holds);
        // the norm does not depend on the ambient dimension
        assert_eq!(check.norm_sq, int(4));
        let lhs = s.power(&s.omega(), 2).wedge(&alpha).unwrap().wedge(&alpha.conj()).unwrap();
        assert_eq!(lhs, s.volume().scale_real(&int(8)));
    }

    #[test]
    fn hodge_riemann_rejects_mixed_types() {
        let s = space(2);
        let mixed = s.epsilon(1).wedge(&s.epsilon_bar(2)).unwrap();
        assert_eq!(verify_hodge_riemann(&mixed), Err(Error::WrongType(2)));
        let anti = s.epsilon_bar(1).wedge(&s.epsilon_bar(2)).unwrap();
        assert_eq!(verify_hodge_riemann(&anti), Err(Error::WrongType(2)));
        assert_eq!(verify_hodge_riemann(&s.epsilon(1)), Err(Error::WrongType(1)));
    }

    #[test]
    fn model_spaces_are_consistent() {
        for n in 1..=6 {
            assert!(model_space_consistent(&space(n)));
        }
    }
}
