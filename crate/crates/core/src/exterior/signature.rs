//! Inertia of the pairing b(ξ, η) = ξ∧η∧ω^{n−2} / ((n−2)! σ) on the real
//! J-invariant 2-forms.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::forms::pairing;
use super::multivector::{ModelSpace, MultiVector};
use crate::arith::rational::{int, Rational};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Inertia {
    pub positives: usize,
    pub negatives: usize,
    pub zeros: usize,
}

/// Sylvester inertia of a symmetric rational matrix via symmetric Gaussian
/// elimination (congruence A ↦ EAEᵀ).
pub fn inertia(matrix: &[Vec<Rational>]) -> Inertia {
    let m = matrix.len();
    let mut a: Vec<Vec<Rational>> = matrix.to_vec();
    let mut out = Inertia {
        positives: 0,
        negatives: 0,
        zeros: 0,
    };
    for k in 0..m {
        if a[k][k].is_zero() {
            if let Some(j) = (k + 1..m).find(|&j| !a[j][j].is_zero()) {
                a.swap(k, j);
                for row in a.iter_mut() {
                    row.swap(k, j);
                }
            } else if let Some(j) = (k + 1..m).find(|&j| !a[k][j].is_zero()) {
                // row/col k += row/col j makes the pivot 2·a[k][j]
                for c in 0..m {
                    let x = a[j][c].clone();
                    a[k][c] += x;
                }
                for r in 0..m {
                    let x = a[r][j].clone();
                    a[r][k] += x;
                }
            }
        }
        let pivot = a[k][k].clone();
        if pivot.is_zero() {
            out.zeros += 1;
            continue;
        }
        if pivot.is_positive() {
            out.positives += 1;
        } else {
            out.negatives += 1;
        }
        for i in k + 1..m {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &pivot;
            for c in k..m {
                let x = &f * &a[k][c];
                a[i][c] -= x;
            }
            for r in k..m {
                let x = &f * &a[r][k];
                a[r][i] -= x;
            }
        }
    }
    out
}

/// Basis of Λ^{1,1}_ℝ: e^{2i−1}∧e^{2i} together with
/// e^{2i−1}∧e^{2j−1} + e^{2i}∧e^{2j} and e^{2i−1}∧e^{2j} − e^{2i}∧e^{2j−1}
/// for i < j. There are n² of them.
pub fn invariant_two_form_basis(space: &ModelSpace) -> Vec<MultiVector> {
    let n = space.n();
    let mut basis: Vec<MultiVector> = (1..=n).map(|i| space.blade(&[2 * i - 1, 2 * i])).collect();
    for i in 1..=n {
        for j in i + 1..=n {
            basis.push(&space.blade(&[2 * i - 1, 2 * j - 1]) + &space.blade(&[2 * i, 2 * j]));
            basis.push(&space.blade(&[2 * i - 1, 2 * j]) - &space.blade(&[2 * i, 2 * j - 1]));
        }
    }
    basis
}

fn factorial(k: usize) -> Rational {
    (1..=k as i64).map(int).fold(int(1), |a, x| a * x)
}

/// Pairing matrix of b on `forms`.
pub fn gram_matrix(space: &ModelSpace, forms: &[MultiVector]) -> Result<Vec<Vec<Rational>>> {
    let n = space.n();
    if n < 2 {
        return Err(Error::DimensionTooSmall { n, min: 2 });
    }
    let omega_pow = space.power(&space.omega(), n - 2);
    let norm = factorial(n - 2);
    let with_omega: Vec<MultiVector> = forms
        .iter()
        .map(|f| f.wedge(&omega_pow))
        .collect::<Result<_>>()?;
    let mut gram = vec![vec![Rational::zero(); forms.len()]; forms.len()];
    for i in 0..forms.len() {
        for j in i..forms.len() {
            let top = forms[i].wedge(&with_omega[j])?.top_coefficient();
            let value = top.re / &norm;
            gram[j][i] = value.clone();
            gram[i][j] = value;
        }
    }
    Ok(gram)
}

pub fn signature_of_pairing(space: &ModelSpace) -> Result<Inertia> {
    let basis = invariant_two_form_basis(space);
    Ok(inertia(&gram_matrix(space, &basis)?))
}

/// b(ω, ω) restricted to the line spanned by ω.
pub fn signature_on_omega_line(space: &ModelSpace) -> Result<Inertia> {
    Ok(inertia(&gram_matrix(space, &[space.omega()])?))
}

/// Sanity check used by tests: basis forms are J-invariant and independent
/// (their Euclidean Gram matrix is non-degenerate).
pub fn basis_is_valid(space: &ModelSpace) -> bool {
    let basis = invariant_two_form_basis(space);
    let invariant = basis.iter().all(|f| f.pullback_j() == *f);
    let euclid: Vec<Vec<Rational>> = basis
        .iter()
        .map(|f| basis.iter().map(|g| pairing(f, g)).collect())
        .collect();
    invariant && inertia(&euclid).zeros == 0
}
