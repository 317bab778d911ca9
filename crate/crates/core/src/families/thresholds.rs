//! Exact sign tables for the three test polynomials along a family.
//!
//! With the family constants k₁, k₂:
//!
//! * p₁ = k₁a² − bv  (≤ 0 violates the upper Einstein bound)
//! * p₂ = bv − k₂a²  (≤ 0 violates the lower Einstein bound)
//! * p₉ = bv − a²    (> 0 violates the Kähler bound)
//!
//! The common roots of a, p₁, p₂ and p₉ are isolated over a coprime basis; every open gap
//! between consecutive roots is classified at a rational sample point and
//! every root at its isolating interval.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::specs::FamilyInvariants;
use crate::arith::poly::PolyQ;
use crate::arith::rational::{int, rat, Rational};
use crate::arith::roots::{isolate_common_roots, isolate_real_roots, Domain, IsolatingInterval};
use crate::error::{Error, Result};
use crate::invariants::{
    constants_with, einstein_from_signs, kaehler_from_sign, Constants, ConstantsOptions,
    EinsteinVerdict, KaehlerVerdict,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Endpoint {
    MinusInfinity,
    PlusInfinity,
    /// Excluded boundary t = 0 of a one-sided domain.
    Zero,
    Root(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Region {
    Open { lower: Endpoint, upper: Endpoint },
    Root(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Signs {
    pub a: i8,
    pub ineq1: i8,
    pub ineq2: i8,
    pub apte: i8,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Segment {
    pub region: Region,
    /// Rational point of an open region at which the signs were evaluated.
    #[serde(with = "crate::arith::rational::serde_rational::option")]
    pub sample: Option<Rational>,
    pub signs: Signs,
    pub einstein: EinsteinVerdict,
    pub kaehler: KaehlerVerdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThresholdReport {
    pub n: usize,
    pub domain: Domain,
    pub constants: Constants,
    pub ineq1_poly: PolyQ,
    pub ineq2_poly: PolyQ,
    pub apte_poly: PolyQ,
    /// Distinct roots of a·p₁·p₂·p₉ in the domain, increasing, each tagged
    /// with the coprime factor it belongs to.
    pub roots: Vec<IsolatingInterval>,
    /// Alternating open gaps and roots, left to right.
    pub segments: Vec<Segment>,
}

/// Default report width of isolating intervals.
pub fn default_refine_width() -> Rational {
    rat(1, 1_000_000_000)
}

struct TestPolys<'a> {
    a: &'a PolyQ,
    ineq1: PolyQ,
    ineq2: PolyQ,
    apte: PolyQ,
}

impl TestPolys<'_> {
    fn signs_at(&self, t: &Rational) -> Signs {
        Signs {
            a: self.a.sign_at(t),
            ineq1: self.ineq1.sign_at(t),
            ineq2: self.ineq2.sign_at(t),
            apte: self.apte.sign_at(t),
        }
    }

    /// Signs at a root isolated over the coprime basis of these polynomials:
    /// each one is either divisible by the interval's factor or free of
    /// roots on the interval.
    fn signs_at_root(&self, iv: &IsolatingInterval) -> Signs {
        let at = |q: &PolyQ| {
            if q.is_zero() || q.div_rem(&iv.polynomial).1.is_zero() {
                0
            } else {
                q.sign_at(&iv.hi)
            }
        };
        Signs {
            a: at(self.a),
            ineq1: at(&self.ineq1),
            ineq2: at(&self.ineq2),
            apte: at(&self.apte),
        }
    }

    fn all(&self) -> [&PolyQ; 4] {
        [self.a, &self.ineq1, &self.ineq2, &self.apte]
    }
}

fn segment(region: Region, sample: Option<Rational>, signs: Signs) -> Segment {
    Segment {
        region,
        sample,
        einstein: einstein_from_signs(signs.a, signs.ineq1, signs.ineq2, signs.apte),
        kaehler: kaehler_from_sign(signs.apte),
        signs,
    }
}

fn halve(iv: &mut IsolatingInterval) {
    let w = iv.width() / int(2);
    iv.refine(&w);
}

pub fn obstruction_thresholds(inv: &FamilyInvariants) -> Result<ThresholdReport> {
    obstruction_thresholds_with(inv, ConstantsOptions::default(), &default_refine_width())
}

pub fn obstruction_thresholds_with(
    inv: &FamilyInvariants,
    options: ConstantsOptions,
    refine_width: &Rational,
) -> Result<ThresholdReport> {
    let domain = inv.domain();
    if inv.v.is_zero() {
        return Err(Error::DomainViolation("v is identically zero".into()));
    }
    if let Some(root) = isolate_real_roots(&inv.v, domain)?.first() {
        return Err(Error::DomainViolation(format!(
            "v = {} vanishes in ({}, {}]",
            inv.v, root.lo, root.hi
        )));
    }
    let constants = constants_with(inv.n, options)?;
    let bv = inv.bv();
    let a_sq = inv.a_sq();
    let polys = TestPolys {
        a: &inv.a,
        ineq1: &a_sq.scale(&constants.k1) - &bv,
        ineq2: &bv - &a_sq.scale(&constants.k2),
        apte: &bv - &a_sq,
    };

    let mut roots = isolate_common_roots(&polys.all(), domain)?;

    let mut segments = Vec::with_capacity(2 * roots.len() + 1);
    let lower_edge = match domain {
        Domain::Positive => Endpoint::Zero,
        _ => Endpoint::MinusInfinity,
    };
    let upper_edge = match domain {
        Domain::Negative => Endpoint::Zero,
        _ => Endpoint::PlusInfinity,
    };

    if roots.is_empty() {
        let sample = match domain {
            Domain::AllReals => Rational::zero(),
            Domain::Positive => int(1),
            Domain::Negative => int(-1),
        };
        let signs = polys.signs_at(&sample);
        segments.push(segment(
            Region::Open {
                lower: lower_edge,
                upper: upper_edge,
            },
            Some(sample),
            signs,
        ));
    } else {
        let last = roots.len() - 1;
        // gap below the first root
        let first_sample = if domain == Domain::Positive {
            while !roots[0].lo.is_positive() {
                halve(&mut roots[0]);
            }
            &roots[0].lo / int(2)
        } else {
            &roots[0].lo - int(1)
        };
        segments.push(segment(
            Region::Open {
                lower: lower_edge,
                upper: Endpoint::Root(0),
            },
            Some(first_sample.clone()),
            polys.signs_at(&first_sample),
        ));
        for i in 0..=last {
            segments.push(segment(Region::Root(i), None, polys.signs_at_root(&roots[i])));
            let (sample, upper) = if i < last {
                while roots[i].hi >= roots[i + 1].lo {
                    halve(&mut roots[i + 1]);
                }
                ((&roots[i].hi + &roots[i + 1].lo) / int(2), Endpoint::Root(i + 1))
            } else if domain == Domain::Negative {
                while !roots[i].hi.is_negative() {
                    halve(&mut roots[i]);
                }
                (&roots[i].hi / int(2), upper_edge)
            } else {
                (&roots[i].hi + int(1), upper_edge)
            };
            segments.push(segment(
                Region::Open {
                    lower: Endpoint::Root(i),
                    upper,
                },
                Some(sample.clone()),
                polys.signs_at(&sample),
            ));
        }
    }

    for root in &mut roots {
        root.refine(refine_width);
    }

    Ok(ThresholdReport {
        n: inv.n,
        domain,
        constants,
        ineq1_poly: polys.ineq1,
        ineq2_poly: polys.ineq2,
        apte_poly: polys.apte,
        roots,
        segments,
    })
}

impl ThresholdReport {
    /// Segment containing the parameter value `t`, if `t` lies in the domain.
    pub fn locate(&self, t: &Rational) -> Option<&Segment> {
        if !self.domain.contains(t) {
            return None;
        }
        for (i, root) in self.roots.iter().enumerate() {
            match root.compare(t) {
                -1 => return self.segments.get(2 * i),
                0 => return self.segments.get(2 * i + 1),
                _ => {}
            }
        }
        self.segments.last()
    }

    /// Verdicts on the unbounded right-hand tail (t → +∞), when present.
    pub fn right_tail(&self) -> Option<&Segment> {
        self.segments
            .last()
            .filter(|s| matches!(s.region, Region::Open { upper: Endpoint::PlusInfinity, .. }))
    }

    pub fn left_tail(&self) -> Option<&Segment> {
        self.segments
            .first()
            .filter(|s| matches!(s.region, Region::Open { lower: Endpoint::MinusInfinity, .. }))
    }

    pub fn segments_with_einstein(&self, verdict: EinsteinVerdict) -> impl Iterator<Item = &Segment> {
        self.segments.iter().filter(move |s| s.einstein == verdict)
    }

    pub fn segments_with_kaehler(&self, verdict: KaehlerVerdict) -> impl Iterator<Item = &Segment> {
        self.segments.iter().filter(move |s| s.kaehler == verdict)
    }
}
