//! Certified real root isolation with Sturm sequences.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::poly::{integer_sign_at, sign, PolyQ};
use super::rational::{int, rat, Rational};
use crate::error::{Error, Result};

/// Where roots are sought.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Domain {
    AllReals,
    Positive,
    Negative,
}

impl Domain {
    pub fn contains(&self, t: &Rational) -> bool {
        match self {
            Domain::AllReals => true,
            Domain::Positive => t.is_positive(),
            Domain::Negative => t.is_negative(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SturmSequence {
    /// Each member scaled by a positive constant to a primitive integer
    /// polynomial.
    polys: Vec<Vec<BigInt>>,
}

impl SturmSequence {
    /// Builds p, p', −rem(p, p'), … for a non-zero polynomial.
    pub fn new(p: &PolyQ) -> Self {
        let mut polys = vec![p.primitive_integer()];
        let mut prev = PolyQ::from_integers(&polys[0]);
        let mut next = PolyQ::from_integers(&p.derivative().primitive_integer());
        while !next.is_zero() {
            let rem = PolyQ::from_integers(&(-prev.div_rem(&next).1).primitive_integer());
            polys.push(next.primitive_integer());
            prev = next;
            next = rem;
        }
        SturmSequence { polys }
    }

    pub fn variations(&self, t: &Rational) -> usize {
        let mut count = 0;
        let mut last = 0i8;
        for p in &self.polys {
            let s = integer_sign_at(p, t);
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    fn vanishes_at(&self, t: &Rational) -> bool {
        integer_sign_at(&self.polys[0], t) == 0
    }

    /// Distinct roots in the half-open interval (lo, hi]; the leading
    /// polynomial must be square-free.
    pub fn count(&self, lo: &Rational, hi: &Rational) -> usize {
        self.variations(lo).saturating_sub(self.variations(hi))
    }
}

/// Rational interval (lo, hi] holding exactly one real root of a square-free
/// polynomial, as certified by Sturm counts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsolatingInterval {
    #[serde(with = "super::rational::serde_rational")]
    pub lo: Rational,
    #[serde(with = "super::rational::serde_rational")]
    pub hi: Rational,
    pub polynomial: PolyQ,
}

impl IsolatingInterval {
    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    /// True when the root is the rational `hi` itself.
    pub fn is_exact(&self) -> bool {
        self.polynomial.eval(&self.hi).is_zero()
    }

    pub fn certify(&self) -> bool {
        self.lo < self.hi && SturmSequence::new(&self.polynomial).count(&self.lo, &self.hi) == 1
    }

    /// Shrinks the interval by bisection until its width is at most `width`.
    pub fn refine(&mut self, width: &Rational) {
        if self.is_exact() {
            let lo = &self.hi - width;
            if lo > self.lo {
                self.lo = lo;
            }
            return;
        }
        let sturm = SturmSequence::new(&self.polynomial);
        self.refine_with(&sturm, width);
    }

    pub fn refined(&self, width: &Rational) -> Self {
        let mut out = self.clone();
        out.refine(width);
        out
    }

    fn refine_with(&mut self, sturm: &SturmSequence, width: &Rational) {
        let two = int(2);
        while &self.width() > width {
            let mid = (&self.lo + &self.hi) / &two;
            if sturm.vanishes_at(&mid) {
                let lo = &mid - width;
                self.lo = if lo > self.lo { lo } else { self.lo.clone() };
                self.hi = mid;
                return;
            }
            if sturm.count(&self.lo, &mid) == 1 {
                self.hi = mid;
            } else {
                self.lo = mid;
            }
        }
    }

    /// Moves `lo` right until it is not itself a root, keeping the
    /// certified count at one.
    fn clear_lower_root(&mut self, sturm: &SturmSequence) {
        let two = int(2);
        while sturm.vanishes_at(&self.lo) && !sturm.vanishes_at(&self.hi) {
            let mid = (&self.lo + &self.hi) / &two;
            if sturm.vanishes_at(&mid) {
                self.hi = mid;
                return;
            }
            if sturm.count(&self.lo, &mid) == 0 {
                self.lo = mid;
            } else {
                self.hi = mid;
            }
        }
    }

    /// Midpoint as a plain decimal approximation, for display only.
    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / int(2)
    }

    /// Ordering of an exact rational relative to the root: -1 below, 0 equal,
    /// 1 above.
    pub fn compare(&self, t: &Rational) -> i8 {
        let mut iv = self.clone();
        loop {
            if t <= &iv.lo {
                return -1;
            }
            if t > &iv.hi {
                return 1;
            }
            if iv.polynomial.eval(t).is_zero() {
                return 0;
            }
            let w = iv.width() / int(2);
            iv.refine(&w);
        }
    }
}

/// Upper bound on the absolute value of every root (Cauchy).
pub fn root_bound(p: &PolyQ) -> Rational {
    let lc = p.leading().expect("non-zero polynomial").abs();
    let max = p
        .coeffs()
        .iter()
        .rev()
        .skip(1)
        .map(|c| c.abs() / &lc)
        .fold(Rational::zero(), |m, c| if c > m { c } else { m });
    Rational::one() + max
}

/// Isolates the distinct real roots of `p` inside `domain`, in increasing
/// order.
pub fn isolate_real_roots(p: &PolyQ, domain: Domain) -> Result<Vec<IsolatingInterval>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let sf = p.square_free();
    if sf.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let sturm = SturmSequence::new(&sf);
    let bound = root_bound(&sf);
    let (lo, hi) = match domain {
        Domain::AllReals => (-bound.clone(), bound),
        Domain::Positive => (Rational::zero(), bound),
        Domain::Negative => (-bound, Rational::zero()),
    };
    let mut out = Vec::new();
    bisect(&sf, &sturm, lo, hi, &mut out);
    for iv in &mut out {
        iv.clear_lower_root(&sturm);
    }
    if domain == Domain::Negative {
        out.retain(|iv| !(iv.hi.is_zero() && iv.is_exact()));
    }
    Ok(out)
}

/// Pairwise coprime square-free polynomials with the same real roots as the
/// product of the non-constant members of `polys`.
pub fn coprime_basis(polys: &[&PolyQ]) -> Vec<PolyQ> {
    let mut basis: Vec<PolyQ> = Vec::new();
    for p in polys {
        if p.degree().unwrap_or(0) == 0 {
            continue;
        }
        let mut cur = p.square_free().monic();
        let mut next = Vec::with_capacity(basis.len() + 1);
        for q in basis {
            let g = cur.gcd(&q);
            if g.degree() == Some(0) {
                next.push(q);
                continue;
            }
            let (rest, _) = q.div_rem(&g);
            cur = cur.div_rem(&g).0;
            if rest.degree().unwrap_or(0) > 0 {
                next.push(rest);
            }
            next.push(g);
        }
        if cur.degree().unwrap_or(0) > 0 {
            next.push(cur);
        }
        basis = next;
    }
    basis
}

/// Isolates the distinct real roots in `domain` of the product of the
/// non-constant members of `polys`, without forming the product. Intervals are pairwise disjoint, increasing,
/// and each carries the coprime factor that vanishes at its root.
pub fn isolate_common_roots(polys: &[&PolyQ], domain: Domain) -> Result<Vec<IsolatingInterval>> {
    let mut all = Vec::new();
    for f in coprime_basis(polys) {
        all.extend(isolate_real_roots(&f, domain)?);
    }
    loop {
        all.sort_by(|x, y| x.lo.cmp(&y.lo));
        let overlap = (1..all.len()).find(|&i| all[i - 1].hi > all[i].lo);
        match overlap {
            None => return Ok(all),
            Some(i) => {
                for j in [i - 1, i] {
                    let w = all[j].width() / int(2);
                    all[j].refine(&w);
                }
            }
        }
    }
}

fn bisect(
    p: &PolyQ,
    sturm: &SturmSequence,
    lo: Rational,
    hi: Rational,
    out: &mut Vec<IsolatingInterval>,
) {
    match sturm.count(&lo, &hi) {
        0 => {}
        1 => out.push(IsolatingInterval {
            lo,
            hi,
            polynomial: p.clone(),
        }),
        _ => {
            let mid = (&lo + &hi) * rat(1, 2);
            bisect(p, sturm, lo, mid.clone(), out);
            bisect(p, sturm, mid, hi, out);
        }
    }
}

/// Number of distinct real roots in `domain` according to Sturm's theorem.
pub fn sturm_root_count(p: &PolyQ, domain: Domain) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let sf = p.square_free();
    if sf.degree() == Some(0) {
        return Ok(0);
    }
    let sturm = SturmSequence::new(&sf);
    let bound = root_bound(&sf);
    let zero = Rational::zero();
    Ok(match domain {
        Domain::AllReals => sturm.count(&-bound.clone(), &bound),
        Domain::Positive => sturm.count(&zero, &bound),
        Domain::Negative => {
            sturm.count(&-bound, &zero) - usize::from(sf.eval(&zero).is_zero())
        }
    })
}

/// Sign of `q` at the unique root held by `iv`, provided every root of `q`
/// lying in (iv.lo, iv.hi] is that root (true when `q` divides a power of
/// the isolated polynomial).
pub fn sign_at_root(q: &PolyQ, iv: &IsolatingInterval) -> i8 {
    if q.is_zero() {
        return 0;
    }
    let sf = q.square_free();
    if sf.degree() == Some(0) {
        return sign(&sf.coeffs()[0]);
    }
    if SturmSequence::new(&sf).count(&iv.lo, &iv.hi) == 1 {
        0
    } else {
        q.sign_at(&iv.hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[(i64, i64)]) -> PolyQ {
        PolyQ::new(cs.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    /// Independent oracle: sign changes of p on a rational grid.
    fn grid_sign_changes(p: &PolyQ, from: i64, to: i64, steps_per_unit: i64) -> usize {
        let mut count = 0;
        let mut last = 0i8;
        for k in from * steps_per_unit..=to * steps_per_unit {
            let s = p.sign_at(&rat(k, steps_per_unit));
            if s != 0 && last != 0 && s != last {
                count += 1;
            }
            if s != 0 {
                last = s;
            }
        }
        count
    }

    #[test]
    fn t_squared_minus_two() {
        let q = p(&[(-2, 1), (0, 1), (1, 1)]);
        let roots = isolate_real_roots(&q, Domain::AllReals).unwrap();
        assert_eq!(roots.len(), 2);
        assert_eq!(grid_sign_changes(&q, -3, 3, 1), 2);
        for (iv, (lo, hi)) in roots.iter().zip([(-2, -1), (1, 2)]) {
            let narrow = iv.refined(&rat(1, 2));
            assert!(narrow.lo >= int(lo) && narrow.hi <= int(hi), "{narrow:?}");
            assert!(narrow.certify());
        }
    }

    #[test]
    fn no_real_roots() {
        let q = p(&[(1, 1), (0, 1), (1, 1)]);
        assert!(isolate_real_roots(&q, Domain::AllReals).unwrap().is_empty());
    }

    #[test]
    fn zero_polynomial_rejected() {
        assert_eq!(
            isolate_real_roots(&PolyQ::zero(), Domain::AllReals),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn sqrt_five_over_two() {
        let q = p(&[(5, 4), (0, 1), (-1, 1)]);
        let roots = isolate_real_roots(&q, Domain::Positive).unwrap();
        assert_eq!(roots.len(), 1);
        let iv = roots[0].refined(&rat(1, 1_000_000_000));
        // bisection oracle on 5/4 − t² over [1, 2]
        let (mut lo, mut hi) = (int(1), int(2));
        while &hi - &lo > rat(1, 10_000_000_000) {
            let mid = (&lo + &hi) / int(2);
            if q.sign_at(&mid) > 0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        assert!(iv.lo <= lo && hi <= iv.hi);
        assert!(iv.lo >= rat(1_118_033, 1_000_000));
        assert!(iv.hi <= rat(1_118_035, 1_000_000));
        assert!(iv.width() <= rat(1, 1_000_000_000));
    }

    #[test]
    fn rational_roots_and_domains() {
        // t(t−1)(t+1/2)²
        let q = &(&p(&[(0, 1), (-1, 1), (1, 1)]) * &p(&[(1, 2), (1, 1)])) * &p(&[(1, 2), (1, 1)]);
        let all = isolate_real_roots(&q, Domain::AllReals).unwrap();
        assert_eq!(all.len(), 3);
        assert_eq!(all[0].compare(&rat(-1, 2)), 0);
        assert_eq!(all[1].compare(&int(0)), 0);
        assert_eq!(all[2].compare(&int(1)), 0);
        assert_eq!(isolate_real_roots(&q, Domain::Positive).unwrap().len(), 1);
        let neg = isolate_real_roots(&q, Domain::Negative).unwrap();
        assert_eq!(neg.len(), 1);
        assert_eq!(neg[0].compare(&rat(-1, 2)), 0);
        assert_eq!(sturm_root_count(&q, Domain::Negative).unwrap(), 1);
        for iv in &all {
            assert!(iv.certify());
            assert!(!iv.polynomial.eval(&iv.lo).is_zero());
            let r = iv.refined(&rat(1, 1000));
            assert!(r.certify() && r.width() <= rat(1, 1000));
        }
    }

    #[test]
    fn sign_at_shared_root() {
        let q = p(&[(-2, 1), (0, 1), (1, 1)]);
        let roots = isolate_real_roots(&q, Domain::Positive).unwrap();
        let other = p(&[(-2, 1), (1, 1)]);
        assert_eq!(sign_at_root(&q, &roots[0]), 0);
        assert_eq!(sign_at_root(&other, &roots[0].refined(&rat(1, 100))), -1);
        assert_eq!(roots[0].compare(&rat(3, 2)), 1);
        assert_eq!(roots[0].compare(&int(1)), -1);
    }
}
