//! Random exact forms for property checks.

use rand::Rng;

use super::multivector::{ModelSpace, MultiVector};
use crate::arith::rational::{rat, GaussianRational, Rational};

fn small_rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    rat(rng.gen_range(-12..=12), rng.gen_range(1..=7))
}

/// Subsets of {0..n-1} of size k, in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Real 2-form with independent small rational coefficients on every blade
/// (about a fifth of them zeroed to exercise sparse cases).
pub fn random_real_two_form<R: Rng + ?Sized>(space: &ModelSpace, rng: &mut R) -> MultiVector {
    let mut out = space.zero();
    for pair in subsets(space.real_dim(), 2) {
        if rng.gen_bool(0.2) {
            continue;
        }
        let c = small_rational(rng);
        let blade = space.blade(&[pair[0] + 1, pair[1] + 1]);
        out = &out + &blade.scale_real(&c);
    }
    out
}

/// Random Σ c_I ε^I over |I| = `degree`, with Gaussian rational c_I.
pub fn random_holomorphic_form<R: Rng + ?Sized>(
    space: &ModelSpace,
    degree: usize,
    rng: &mut R,
) -> MultiVector {
    let mut out = space.zero();
    for idx in subsets(space.n(), degree) {
        if rng.gen_bool(0.25) {
            continue;
        }
        let c = GaussianRational::new(small_rational(rng), small_rational(rng));
        let term = idx.iter().fold(space.scalar(GaussianRational::new(rat(1, 1), rat(0, 1))), |acc, &j| {
            acc.wedge(&space.epsilon(j + 1)).expect("same space")
        });
        out = &out + &term.scale(&c);
    }
    out
}
