//! Constant-coefficient complex forms on the 2n-dimensional model space.
//!
//! Basis covectors e¹…e²ⁿ are bit positions 0…2n−1 of a blade mask; a blade
//! stores the increasing wedge e^{i₁}∧…∧e^{i_k}.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use crate::arith::rational::{abs_sq, format_rational, GaussianRational, Rational};
use crate::error::{Error, Result};

pub type Blade = u32;

/// Largest supported half-dimension (2n basis covectors must fit a mask).
pub const MAX_HALF_DIM: usize = 15;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ModelSpace {
    n: usize,
}

impl ModelSpace {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::DimensionTooSmall { n, min: 1 });
        }
        if n > MAX_HALF_DIM {
            return Err(Error::DimensionTooLarge { n, max: MAX_HALF_DIM });
        }
        Ok(ModelSpace { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn real_dim(&self) -> usize {
        2 * self.n
    }

    pub fn zero(&self) -> MultiVector {
        MultiVector {
            n: self.n,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(&self, c: GaussianRational) -> MultiVector {
        self.zero().with_term(0, c)
    }

    /// e^{i₁}∧…∧e^{i_k} for 1-based indices in any order (sign included).
    pub fn blade(&self, indices: &[usize]) -> MultiVector {
        indices.iter().fold(self.scalar(one()), |acc, &i| {
            acc.wedge(&self.covector(i)).expect("same space")
        })
    }

    /// e^i, 1-based.
    pub fn covector(&self, i: usize) -> MultiVector {
        assert!((1..=self.real_dim()).contains(&i), "covector index {i} out of range");
        self.zero().with_term(1 << (i - 1), one())
    }

    /// ω = Σᵢ e^{2i−1} ∧ e^{2i}.
    pub fn omega(&self) -> MultiVector {
        let mut out = self.zero();
        for i in 0..self.n {
            out.add_term(0b11 << (2 * i), one());
        }
        out
    }

    /// σ = e¹∧…∧e²ⁿ = ωⁿ/n!.
    pub fn volume(&self) -> MultiVector {
        self.zero().with_term(self.top_blade(), one())
    }

    pub fn top_blade(&self) -> Blade {
        ((1u64 << self.real_dim()) - 1) as Blade
    }

    /// ε^j = e^{2j−1} + i·e^{2j}, a (1,0)-covector (J*ε = iε).
    pub fn epsilon(&self, j: usize) -> MultiVector {
        assert!((1..=self.n).contains(&j), "complex index {j} out of range");
        let mut out = self.zero();
        out.add_term(1 << (2 * j - 2), one());
        out.add_term(1 << (2 * j - 1), GaussianRational::i());
        out
    }

    pub fn epsilon_bar(&self, j: usize) -> MultiVector {
        self.epsilon(j).conj()
    }

    /// Wedge power αᵏ (α⁰ = 1).
    pub fn power(&self, alpha: &MultiVector, k: usize) -> MultiVector {
        (0..k).fold(self.scalar(one()), |acc, _| acc.wedge(alpha).expect("same space"))
    }
}

fn one() -> GaussianRational {
    GaussianRational::one()
}

/// Sign of moving blade `b` to the right of blade `a`, i.e. the parity of
/// pairs (i ∈ a, j ∈ b) with i > j.
fn reorder_sign(a: Blade, b: Blade) -> bool {
    let mut inversions = 0u32;
    let mut rest = b;
    while rest != 0 {
        let j = rest.trailing_zeros();
        inversions += (a >> (j + 1)).count_ones();
        rest &= rest - 1;
    }
    inversions % 2 == 1
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiVector {
    n: usize,
    terms: BTreeMap<Blade, GaussianRational>,
}

impl MultiVector {
    pub fn space(&self) -> ModelSpace {
        ModelSpace { n: self.n }
    }

    fn with_term(mut self, blade: Blade, c: GaussianRational) -> Self {
        self.add_term(blade, c);
        self
    }

    pub(crate) fn add_term(&mut self, blade: Blade, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(blade).or_insert_with(GaussianRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&blade);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (Blade, &GaussianRational)> {
        self.terms.iter().map(|(&b, c)| (b, c))
    }

    pub fn coefficient(&self, blade: Blade) -> GaussianRational {
        self.terms.get(&blade).cloned().unwrap_or_else(GaussianRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_real(&self) -> bool {
        self.terms.values().all(|c| c.im.is_zero())
    }

    /// Degree of a homogeneous non-zero form; `None` if zero or mixed.
    pub fn degree(&self) -> Option<usize> {
        let mut degrees = self.terms.keys().map(|b| b.count_ones() as usize);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous_of(&self, k: usize) -> bool {
        self.terms.keys().all(|b| b.count_ones() as usize == k)
    }

    fn check_space(&self, other: &MultiVector) -> Result<()> {
        if self.n != other.n {
            return Err(Error::MismatchedModelSpace {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    pub fn wedge(&self, other: &MultiVector) -> Result<MultiVector> {
        self.check_space(other)?;
        let mut out = self.space().zero();
        for (&a, ca) in &self.terms {
            for (&b, cb) in &other.terms {
                if a & b != 0 {
                    continue;
                }
                let c = ca * cb;
                out.add_term(a | b, if reorder_sign(a, b) { -c } else { c });
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &GaussianRational) -> MultiVector {
        let mut out = self.space().zero();
        for (&b, x) in &self.terms {
            out.add_term(b, x * c);
        }
        out
    }

    pub fn scale_real(&self, c: &Rational) -> MultiVector {
        self.scale(&GaussianRational::new(c.clone(), Rational::zero()))
    }

    pub fn conj(&self) -> MultiVector {
        MultiVector {
            n: self.n,
            terms: self.terms.iter().map(|(&b, c)| (b, c.conj())).collect(),
        }
    }

    /// Applies the algebra morphism induced by a map on basis covectors
    /// (`image(k)` is the image of e^{k+1}).
    pub fn map_covectors(&self, image: impl Fn(u32) -> MultiVector) -> MultiVector {
        let mut out = self.space().zero();
        for (&blade, c) in &self.terms {
            let mut term = self.space().scalar(c.clone());
            let mut rest = blade;
            while rest != 0 {
                let k = rest.trailing_zeros();
                rest &= rest - 1;
                term = term.wedge(&image(k)).expect("same space");
            }
            out = &out + &term;
        }
        out
    }

    /// Pullback by J, extended multiplicatively: J*e^{2i−1} = −e^{2i},
    /// J*e^{2i} = e^{2i−1}. For a 2-form this is ξ(J·,J·).
    pub fn pullback_j(&self) -> MultiVector {
        let space = self.space();
        self.map_covectors(|k| {
            let mut v = space.zero();
            if k % 2 == 0 {
                v.add_term(1 << (k + 1), -one());
            } else {
                v.add_term(1 << (k - 1), one());
            }
            v
        })
    }

    /// Rewrites the form in the complex frame ε¹, ε̄¹, …, εⁿ, ε̄ⁿ: in the
    /// result, bit 2j−2 stands for ε^j and bit 2j−1 for ε̄^j.
    pub fn to_complex_frame(&self) -> MultiVector {
        let space = self.space();
        let half = GaussianRational::new(Rational::one() / Rational::from_integer(2.into()), Rational::zero());
        let minus_half_i = GaussianRational::new(Rational::zero(), -half.re.clone());
        self.map_covectors(|k| {
            let (eps, bar) = (k & !1, k | 1);
            let mut v = space.zero();
            if k % 2 == 0 {
                // e^{2j−1} = (ε + ε̄)/2
                v.add_term(1 << eps, half.clone());
                v.add_term(1 << bar, half.clone());
            } else {
                // e^{2j} = (ε − ε̄)/(2i)
                v.add_term(1 << eps, minus_half_i.clone());
                v.add_term(1 << bar, -minus_half_i.clone());
            }
            v
        })
    }

    /// Hermitian pairing Σ_I a_I·conj(b_I) in the orthonormal blade basis.
    pub fn inner(&self, other: &MultiVector) -> GaussianRational {
        self.terms
            .iter()
            .filter_map(|(b, c)| other.terms.get(b).map(|d| c * d.conj()))
            .fold(GaussianRational::zero(), |acc, x| acc + x)
    }

    /// |α|² = Σ_I |α_I|².
    pub fn norm_sq(&self) -> Rational {
        self.terms.values().map(abs_sq).fold(Rational::zero(), |a, x| a + x)
    }

    /// Multiple of σ when `self` is a top-degree form.
    pub fn top_coefficient(&self) -> GaussianRational {
        self.coefficient(self.space().top_blade())
    }
}

impl Add<&MultiVector> for &MultiVector {
    type Output = MultiVector;
    fn add(self, rhs: &MultiVector) -> MultiVector {
        assert_eq!(self.n, rhs.n, "adding forms from different model spaces");
        let mut out = self.clone();
        for (&b, c) in &rhs.terms {
            out.add_term(b, c.clone());
        }
        out
    }
}

impl Sub<&MultiVector> for &MultiVector {
    type Output = MultiVector;
    fn sub(self, rhs: &MultiVector) -> MultiVector {
        self + &(-rhs)
    }
}

impl Neg for &MultiVector {
    type Output = MultiVector;
    fn neg(self) -> MultiVector {
        MultiVector {
            n: self.n,
            terms: self.terms.iter().map(|(&b, c)| (b, -c)).collect(),
        }
    }
}

impl fmt::Display for MultiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&blade, c)| {
                let coeff = if c.im.is_zero() {
                    format_rational(&c.re)
                } else {
                    format!("({}+{}i)", format_rational(&c.re), format_rational(&c.im))
                };
                let idx: Vec<String> = (0..32)
                    .filter(|k| blade & (1 << k) != 0)
                    .map(|k| (k + 1).to_string())
                    .collect();
                if idx.is_empty() {
                    coeff
                } else {
                    format!("{coeff}*e{}", idx.join("^"))
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}
