#![allow(dead_code)]

use chern_obstruct::arith::rational::{int, rat};
use chern_obstruct::arith::{Limit, Rational};
use chern_obstruct::exterior::{ModelSpace, MultiVector};
use chern_obstruct::families::TwistFamilySpec;
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn factorial(n: usize) -> Rational {
    (1..=n).fold(Rational::one(), |acc, k| acc * int(k as i64))
}

/// Real coefficient of e^a ∧ e^b (1-based, a < b).
pub fn coeff(xi: &MultiVector, a: usize, b: usize) -> Rational {
    xi.coefficient((1 << (a - 1)) | (1 << (b - 1))).re
}

/// Top coefficient of ξ ∧ ω^{n−1}, from the coordinate formula (n−1)! Σ ξ_{2k−1,2k}.
pub fn omega_power_lhs(xi: &MultiVector) -> Rational {
    let n = xi.space().n();
    let trace = (1..=n).fold(Rational::zero(), |acc, k| acc + coeff(xi, 2 * k - 1, 2 * k));
    factorial(n - 1) * trace
}

/// Top coefficient of ξ ∧ ξ ∧ ω^{n−2}: (n−2)! Σ_{j<k} 2 Pf(ξ on the (j, k) 4-plane).
pub fn square_lhs(xi: &MultiVector) -> Rational {
    let n = xi.space().n();
    let mut total = Rational::zero();
    for j in 1..=n {
        for k in j + 1..=n {
            let (a, b, c, d) = (2 * j - 1, 2 * j, 2 * k - 1, 2 * k);
            let pf = coeff(xi, a, b) * coeff(xi, c, d) - coeff(xi, a, c) * coeff(xi, b, d)
                + coeff(xi, a, d) * coeff(xi, b, c);
            total += int(2) * pf;
        }
    }
    factorial(n - 2) * total
}

/// Sum of squares of the real blade coefficients.
pub fn coordinate_norm_sq(xi: &MultiVector) -> Rational {
    xi.terms().fold(Rational::zero(), |acc, (_, c)| acc + &c.re * &c.re + &c.im * &c.im)
}

/// (ξ, ω) and the J-anti-invariant norm from raw coordinates: on each pair of
/// planes (j, k) the anti-invariant part is ½(ξ_{ac} − ξ_{bd}, ξ_{ad} + ξ_{bc}).
pub fn coordinate_parts(xi: &MultiVector) -> (Rational, Rational) {
    let n = xi.space().n();
    let xo = (1..=n).fold(Rational::zero(), |acc, k| acc + coeff(xi, 2 * k - 1, 2 * k));
    let mut anti = Rational::zero();
    for j in 1..=n {
        for k in j + 1..=n {
            let (a, b, c, d) = (2 * j - 1, 2 * j, 2 * k - 1, 2 * k);
            let p = (coeff(xi, a, c) - coeff(xi, b, d)) / int(2);
            let q = (coeff(xi, a, d) + coeff(xi, b, c)) / int(2);
            anti += int(2) * (&p * &p + &q * &q);
        }
    }
    (xo, anti)
}

/// J-vector with J_l = 1 for l ≤ k and 0 above.
pub fn twist_top_power(n: usize, k: usize) -> TwistFamilySpec {
    TwistFamilySpec::new(n, (0..=n / 2).map(|l| int(i64::from(l <= k))).collect())
}

/// Closed-form limit of b·v/a² for the twist family with highest power k.
pub fn twist_limit_closed_form(n: usize, k: usize) -> Limit {
    let m = n / 2;
    if k == m && n % 2 == 0 {
        Limit::PlusInfinity
    } else if k == m {
        Limit::Finite(Rational::zero())
    } else {
        let (n, k) = (n as i64, k as i64);
        Limit::Finite(rat(n * (n - 2 * k - 1), (n - 1) * (n - 2 * k)))
    }
}

pub fn product_limit_closed_form(n1: usize, n2: usize) -> Rational {
    let (n1, n) = (n1 as i64, (n1 + n2) as i64);
    rat(n * (n1 - 1), n1 * (n - 1))
}

/// k2 from its definition for n ≥ 3.
pub fn k2_high(n: usize) -> Rational {
    (int(n as i64) - rat(25, 9)) / int(n as i64 - 1)
}

pub fn space(n: usize) -> ModelSpace {
    ModelSpace::new(n).unwrap()
}
