//! Report documents and their text rendering. The structured form is JSON
//! with every rational written as an exact `p/q` string.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::arith::limit::Limit;
use crate::arith::rational::{decimal_ceil, decimal_floor, describe, format_rational, Rational};
use crate::arith::roots::{Domain, IsolatingInterval};
use crate::exterior::Inertia;
use crate::families::{
    AsymptoticVerdict, Endpoint, FamilyInvariants, ProductFamilySpec, Region, Segment,
    ThresholdReport, TwistFamilySpec,
};
use crate::invariants::{Constants, ScalarWindow, SymplecticInvariants, Verdict};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub input: SymplecticInvariants,
    pub lebrun_k2: bool,
    pub constants: Constants,
    pub verdict: Verdict,
    pub einstein_window: Option<ScalarWindow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "family", content = "spec")]
pub enum FamilyInput {
    Twist(TwistFamilySpec),
    Product(ProductFamilySpec),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyReport {
    pub input: FamilyInput,
    pub lebrun_k2: bool,
    pub invariants: FamilyInvariants,
    pub limit: Limit,
    pub asymptotic: AsymptoticVerdict,
    /// Product families only: the limit as t → 0⁺ and its verdict.
    pub limit_at_zero: Option<Limit>,
    pub asymptotic_at_zero: Option<AsymptoticVerdict>,
    #[serde(with = "crate::arith::rational::serde_rational")]
    pub refine_width: Rational,
    pub thresholds: ThresholdReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleCheck {
    pub name: String,
    pub passed: usize,
    pub failed: usize,
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub n: usize,
    pub samples: usize,
    pub seed: u64,
    pub checks: Vec<OracleCheck>,
    pub signature: Option<Inertia>,
    pub expected_signature: Option<Inertia>,
    pub all_passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistSweepRow {
    pub n: usize,
    pub k: usize,
    /// "i", "ii" or "iii".
    pub case: String,
    pub limit: Limit,
    pub verdict: AsymptoticVerdict,
    /// (25/9)(n − 2k) < n; only meaningful in case iii.
    pub condition: bool,
    pub agrees: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductSweepRow {
    pub n1: usize,
    pub n2: usize,
    pub limit: Limit,
    #[serde(with = "crate::arith::rational::serde_rational")]
    pub formula: Rational,
    pub verdict: AsymptoticVerdict,
    /// (25/9)·n1 < n.
    pub condition: bool,
    /// Verdict at t → 0⁺ equals the verdict of the swapped family at t → ∞.
    pub swap_agrees: bool,
    pub agrees: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub twist: Vec<TwistSweepRow>,
    pub product: Vec<ProductSweepRow>,
    pub discrepancies: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "report", rename_all = "kebab-case")]
pub enum Report {
    Check(CheckReport),
    Family(FamilyReport),
    Oracle(OracleReport),
    Sweep(SweepReport),
}

impl Report {
    /// True when an internal consistency check failed (exit code 2).
    pub fn has_internal_failure(&self) -> bool {
        match self {
            Report::Oracle(r) => !r.all_passed,
            Report::Sweep(r) => r.discrepancies > 0,
            _ => false,
        }
    }

    pub fn to_structured(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    pub fn from_structured(text: &str) -> Result<Report, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn to_text(&self) -> String {
        match self {
            Report::Check(r) => render_check(r),
            Report::Family(r) => render_family(r),
            Report::Oracle(r) => render_oracle(r),
            Report::Sweep(r) => render_sweep(r),
        }
    }
}

/// Decimal places needed to show an interval of the given width.
fn places_for(width: &Rational) -> usize {
    let inv = width.recip().ceil();
    inv.numer().to_string().len() + 1
}

pub fn render_interval(iv: &IsolatingInterval, places: usize) -> String {
    if iv.is_exact() {
        return format!("= {}  (exact root of {})", format_rational(&iv.hi), iv.polynomial);
    }
    format!(
        "in [{}, {}]  (root of {} in ({}, {}])",
        decimal_floor(&iv.lo, places),
        decimal_ceil(&iv.hi, places),
        iv.polynomial,
        format_rational(&iv.lo),
        format_rational(&iv.hi)
    )
}

fn render_check(r: &CheckReport) -> String {
    let mut s = String::new();
    let d = &r.verdict.details;
    let _ = writeln!(s, "input: n = {}, v = {}, a = {}, b = {}", r.input.n, describe(&r.input.v), describe(&r.input.a), describe(&r.input.b));
    let _ = writeln!(
        s,
        "constants: k1 = {}, k2 = {}{}, scalar bound = {}",
        describe(&r.constants.k1),
        describe(&r.constants.k2),
        if r.lebrun_k2 { " (alternative constant)" } else { "" },
        describe(&r.constants.scalar_bound)
    );
    let _ = writeln!(s, "b*v     = {}", describe(&d.bv));
    let _ = writeln!(s, "a^2     = {}", describe(&d.a_sq));
    let _ = writeln!(s, "k1*a^2  = {}", describe(&d.k1_a_sq));
    let _ = writeln!(s, "k2*a^2  = {}", describe(&d.k2_a_sq));
    let _ = writeln!(s, "einstein: {}", r.verdict.einstein);
    let _ = writeln!(s, "kaehler:  {}", r.verdict.kaehler);
    if let Some(w) = &r.einstein_window {
        let _ = writeln!(s, "scalar curvature window: s in [{}, {}) * pi", describe(&w.lower), describe(&w.upper));
    }
    s
}

fn endpoint(e: &Endpoint) -> String {
    match e {
        Endpoint::MinusInfinity => "-inf".into(),
        Endpoint::PlusInfinity => "+inf".into(),
        Endpoint::Zero => "0".into(),
        Endpoint::Root(i) => format!("r{i}"),
    }
}

fn sign_char(s: i8) -> char {
    match s {
        1 => '+',
        -1 => '-',
        _ => '0',
    }
}

fn render_segment(seg: &Segment) -> String {
    let region = match &seg.region {
        Region::Open { lower, upper } => format!("({}, {})", endpoint(lower), endpoint(upper)),
        Region::Root(i) => format!("t = r{i}"),
    };
    let sample = seg
        .sample
        .as_ref()
        .map(|t| format!(" at t = {}", describe(t)))
        .unwrap_or_default();
    format!(
        "{region:<14} a:{} p1:{} p2:{} p9:{}  einstein={} kaehler={}{sample}",
        sign_char(seg.signs.a),
        sign_char(seg.signs.ineq1),
        sign_char(seg.signs.ineq2),
        sign_char(seg.signs.apte),
        seg.einstein,
        seg.kaehler
    )
}

fn render_family(r: &FamilyReport) -> String {
    let mut s = String::new();
    match &r.input {
        FamilyInput::Twist(spec) => {
            let j: Vec<String> = spec.j.iter().map(format_rational).collect();
            let _ = writeln!(s, "family: twist, n = {}, J = [{}]", spec.n, j.join(", "));
        }
        FamilyInput::Product(spec) => {
            let _ = writeln!(s, "family: product, n1 = {}, n2 = {}, E = {}", spec.n1, spec.n2, format_rational(&spec.e));
        }
    }
    let inv = &r.invariants;
    let _ = writeln!(s, "v(t) = {}", inv.v);
    let _ = writeln!(s, "a(t) = {}", inv.a);
    let _ = writeln!(s, "b(t) = {}", inv.b);
    let _ = writeln!(s, "L = lim b*v/a^2 (t -> +inf) = {}", r.limit);
    let _ = writeln!(s, "asymptotic verdict: {:?}", r.asymptotic);
    if let (Some(l0), Some(v0)) = (&r.limit_at_zero, &r.asymptotic_at_zero) {
        let _ = writeln!(s, "L0 = lim b*v/a^2 (t -> 0+) = {l0}, verdict {v0:?}");
    }
    let t = &r.thresholds;
    let _ = writeln!(
        s,
        "constants: k1 = {}, k2 = {}{}",
        describe(&t.constants.k1),
        describe(&t.constants.k2),
        if r.lebrun_k2 { " (alternative constant)" } else { "" }
    );
    let domain = match t.domain {
        Domain::AllReals => "all real t",
        Domain::Positive => "t > 0",
        Domain::Negative => "t < 0",
    };
    let _ = writeln!(s, "domain: {domain}");
    let _ = writeln!(s, "p1 = k1*a^2 - b*v = {}", t.ineq1_poly);
    let _ = writeln!(s, "p2 = b*v - k2*a^2 = {}", t.ineq2_poly);
    let _ = writeln!(s, "p9 = b*v - a^2    = {}", t.apte_poly);
    let places = places_for(&r.refine_width);
    if t.roots.is_empty() {
        let _ = writeln!(s, "roots: none in the domain");
    } else {
        let _ = writeln!(s, "roots (width <= {}):", format_rational(&r.refine_width));
        for (i, iv) in t.roots.iter().enumerate() {
            let _ = writeln!(s, "  r{i} {}", render_interval(iv, places));
        }
    }
    let _ = writeln!(s, "sign table:");
    for seg in &t.segments {
        let _ = writeln!(s, "  {}", render_segment(seg));
    }
    s
}

fn render_oracle(r: &OracleReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "model space: n = {} (dimension {}), {} samples, seed {}", r.n, 2 * r.n, r.samples, r.seed);
    for c in &r.checks {
        let status = if c.failed == 0 { "PASS" } else { "FAIL" };
        let _ = writeln!(s, "{status} {:<24} {} passed, {} failed", c.name, c.passed, c.failed);
        if let Some(ce) = &c.counterexample {
            let _ = writeln!(s, "     counterexample: {ce}");
        }
    }
    if let (Some(sig), Some(exp)) = (&r.signature, &r.expected_signature) {
        let status = if sig == exp { "PASS" } else { "FAIL" };
        let _ = writeln!(
            s,
            "{status} signature                 ({}, {}, {}), expected ({}, {}, {})",
            sig.positives, sig.negatives, sig.zeros, exp.positives, exp.negatives, exp.zeros
        );
    }
    let _ = writeln!(s, "overall: {}", if r.all_passed { "all identities hold" } else { "FAILURES" });
    s
}

fn render_sweep(r: &SweepReport) -> String {
    let mut s = String::new();
    if !r.twist.is_empty() {
        let _ = writeln!(s, "twist family: n, k, case, L, verdict, (25/9)(n-2k) < n, agrees");
        for row in &r.twist {
            let _ = writeln!(
                s,
                "  {:>2} {:>2} {:<3} {:<10} {:<27} {:<5} {}",
                row.n,
                row.k,
                row.case,
                row.limit.to_string(),
                format!("{:?}", row.verdict),
                row.condition,
                row.agrees
            );
        }
    }
    if !r.product.is_empty() {
        let _ = writeln!(s, "product family: n1, n2, L, n(n1-1)/(n1(n-1)), verdict, (25/9)n1 < n, swap agrees, agrees");
        for row in &r.product {
            let _ = writeln!(
                s,
                "  {:>2} {:>2} {:<8} {:<8} {:<27} {:<5} {:<5} {}",
                row.n1,
                row.n2,
                row.limit.to_string(),
                format_rational(&row.formula),
                format!("{:?}", row.verdict),
                row.condition,
                row.swap_agrees,
                row.agrees
            );
        }
    }
    let _ = writeln!(s, "discrepancies: {}", r.discrepancies);
    s
}
