//! Univariate polynomials in the family parameter `t` over ℚ.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::rational::{format_rational, Rational};

/// Dense polynomial; `coeffs[i]` multiplies `t^i`. Trailing zero
/// coefficients are always stripped, so the zero polynomial has no
/// coefficients at all.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct PolyQ {
    #[serde(with = "super::rational::serde_rational::vec")]
    coeffs: Vec<Rational>,
}

impl PolyQ {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        PolyQ { coeffs }
    }

    pub fn zero() -> Self {
        PolyQ { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        PolyQ::new(vec![c])
    }

    /// c·t^k
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        PolyQ::new(coeffs)
    }

    /// The identity polynomial `t`.
    pub fn t() -> Self {
        PolyQ::monomial(Rational::one(), 1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Exponent of the lowest non-zero term.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn lowest(&self) -> Option<&Rational> {
        self.order().map(|k| &self.coeffs[k])
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * t + c)
    }

    /// Sign of p(t) as -1, 0 or 1.
    pub fn sign_at(&self, t: &Rational) -> i8 {
        integer_sign_at(&self.primitive_integer(), t)
    }

    /// Integer coefficients of c·p for the positive c that makes them
    /// coprime. Signs of values are unchanged.
    pub(crate) fn primitive_integer(&self) -> Vec<BigInt> {
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if content.is_zero() || content.is_one() {
            return ints;
        }
        ints.into_iter().map(|c| c / &content).collect()
    }

    pub(crate) fn from_integers(coeffs: &[BigInt]) -> Self {
        PolyQ::new(coeffs.iter().map(|c| Rational::from_integer(c.clone())).collect())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        PolyQ::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn derivative(&self) -> Self {
        PolyQ::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(k.into()))
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(PolyQ::constant(Rational::one()), |acc, _| &acc * self)
    }

    /// True when only even powers of `t` carry non-zero coefficients.
    pub fn is_even(&self) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(k, c)| k % 2 == 0 || c.is_zero())
    }

    /// Scales to leading coefficient 1. The zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lc) => self.scale(&lc.recip()),
            None => PolyQ::zero(),
        }
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &PolyQ) -> (PolyQ, PolyQ) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lc = divisor.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree().filter(|&nd| nd >= dd) else {
            return (PolyQ::zero(), self.clone());
        };
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] / lc;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * d;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (PolyQ::new(quot), PolyQ::new(rem))
    }

    /// Monic greatest common divisor; gcd(0, 0) = 0.
    pub fn gcd(&self, other: &PolyQ) -> PolyQ {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = PolyQ::from_integers(&r.primitive_integer());
        }
        a.monic()
    }

    /// p / gcd(p, p'): same distinct roots, all simple.
    pub fn square_free(&self) -> PolyQ {
        if self.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0
    }
}

/// Sign of Σ cᵢ tⁱ at t = a/b (b > 0), from the integer b^d·p(a/b).
pub(crate) fn integer_sign_at(coeffs: &[BigInt], t: &Rational) -> i8 {
    let Some((top, rest)) = coeffs.split_last() else {
        return 0;
    };
    let (a, b) = (t.numer(), t.denom());
    let mut acc = top.clone();
    let mut pw = b.clone();
    for c in rest.iter().rev() {
        acc = acc * a + c * &pw;
        pw *= b;
    }
    match acc.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

pub(crate) fn sign(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

impl From<Rational> for PolyQ {
    fn from(c: Rational) -> Self {
        PolyQ::constant(c)
    }
}

impl Add<&PolyQ> for &PolyQ {
    type Output = PolyQ;
    fn add(self, rhs: &PolyQ) -> PolyQ {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        PolyQ::new((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub<&PolyQ> for &PolyQ {
    type Output = PolyQ;
    fn sub(self, rhs: &PolyQ) -> PolyQ {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        PolyQ::new((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul<&PolyQ> for &PolyQ {
    type Output = PolyQ;
    fn mul(self, rhs: &PolyQ) -> PolyQ {
        if self.is_zero() || rhs.is_zero() {
            return PolyQ::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        PolyQ::new(out)
    }
}

impl Neg for &PolyQ {
    type Output = PolyQ;
    fn neg(self) -> PolyQ {
        PolyQ::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr<PolyQ> for PolyQ {
            type Output = PolyQ;
            fn $m(self, rhs: PolyQ) -> PolyQ { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for PolyQ {
    type Output = PolyQ;
    fn neg(self) -> PolyQ {
        -&self
    }
}

/// Ascending-order rendering, e.g. `1 + 3/2t^2`.
impl fmt::Display for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let mag = c.abs();
            if first {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            first = false;
            let body = format_rational(&mag);
            let coeff = if k > 0 && mag.is_one() {
                String::new()
            } else if k > 0 && !mag.is_integer() {
                format!("({body})")
            } else {
                body
            };
            match k {
                0 => write!(f, "{coeff}")?,
                1 => write!(f, "{coeff}t")?,
                _ => write!(f, "{coeff}t^{k}")?,
            }
        }
        Ok(())
    }
}
