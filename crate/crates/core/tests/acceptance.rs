//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails. All comparisons are exact unless a
//! width tolerance is named.

mod common;

use std::process::ExitCode;

use chern_obstruct::arith::rational::{int, rat};
use chern_obstruct::arith::{Direction, Limit, PolyQ, Rational};
use chern_obstruct::exterior::sample::{random_holomorphic_form, random_real_two_form};
use chern_obstruct::exterior::{
    signature_of_pairing, verify_hodge_riemann, verify_omega_power_identity, verify_square_identity,
};
use chern_obstruct::families::{
    asymptotic_verdict_toward, obstruction_thresholds, obstruction_thresholds_with, product_invariants,
    ratio_limit, twist_invariants, AsymptoticVerdict, FamilyInvariants, ProductFamilySpec, Region,
    TwistFamilySpec,
};
use chern_obstruct::invariants::{
    check_einstein_obstruction, check_kaehler_obstruction, constants_for, einstein_constant_window,
    ConstantsOptions, EinsteinVerdict, KaehlerVerdict, SymplecticInvariants,
};
use common::*;
use num_traits::{Signed, Zero};
use rand::Rng;

/// Random 2-forms per dimension for criterion 2.
const WEDGE_SAMPLES: usize = 100;
/// Random (2l,0)-forms per (n, l) for criterion 3.
const HR_SAMPLES: usize = 40;
/// Random instances for criterion 9.
const SCALE_SAMPLES: usize = 500;
/// Random J-vectors per n for criterion 8.
const BASE_POINT_SAMPLES: usize = 50;

fn refine_tolerance() -> Rational {
    rat(1, 1_000_000_000)
}

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn criterion_1() -> Outcome {
    let mut bad = Vec::new();
    let c = constants_for(2).unwrap();
    if (c.k1.clone(), c.k2.clone()) != (rat(9, 4), rat(2, 3)) {
        bad.push(2);
    }
    for n in 3..=12 {
        let c = constants_for(n).unwrap();
        if c.k1 != rat(25, 9) || c.k2 != k2_high(n) {
            bad.push(n);
        }
    }
    outcome(bad.is_empty(), format!("n = 2..12 exact; mismatches at {bad:?}"))
}

fn criterion_2() -> Outcome {
    let mut failures = 0;
    let mut checked = 0;
    for n in 2..=4 {
        let sp = space(n);
        let mut r = rng(1000 + n as u64);
        for _ in 0..WEDGE_SAMPLES {
            let xi = random_real_two_form(&sp, &mut r);
            let c6 = verify_omega_power_identity(&xi).unwrap();
            let c7 = verify_square_identity(&xi).unwrap();
            let (xo, anti) = coordinate_parts(&xi);
            let oracle6 = omega_power_lhs(&xi) == factorial(n - 1) * &xo;
            let rhs7 = factorial(n - 2) * (&xo * &xo - coordinate_norm_sq(&xi) + int(2) * anti);
            let oracle7 = square_lhs(&xi) == rhs7;
            let lib_matches_oracle = xi.wedge(&sp.power(&sp.omega(), n - 1)).unwrap().top_coefficient().re
                == omega_power_lhs(&xi)
                && xi.wedge(&xi).unwrap().wedge(&sp.power(&sp.omega(), n - 2)).unwrap().top_coefficient().re
                    == square_lhs(&xi);
            checked += 1;
            if !(c6.holds && c7.holds && oracle6 && oracle7 && lib_matches_oracle) {
                failures += 1;
            }
        }
    }
    outcome(
        failures == 0,
        format!("{checked} forms over n = 2,3,4 ({WEDGE_SAMPLES} each), residual exactly 0; failures {failures}"),
    )
}

fn criterion_3() -> Outcome {
    let mut failures = 0;
    let mut checked = 0;
    for n in 2..=4 {
        let sp = space(n);
        let mut r = rng(2000 + n as u64);
        for l in 0..=n / 2 {
            let zero = verify_hodge_riemann(&sp.zero()).unwrap();
            if !(zero.holds && zero.norm_sq.is_zero()) {
                failures += 1;
            }
            for _ in 0..HR_SAMPLES {
                let alpha = random_holomorphic_form(&sp, 2 * l, &mut r);
                let c = verify_hodge_riemann(&alpha).unwrap();
                // Oracle: |ε^I|² = 2^{|I|}, so |α|² = 2^{2l} Σ |c_I|² over the complex frame.
                let frame = alpha.to_complex_frame();
                let oracle = frame
                    .terms()
                    .fold(Rational::zero(), |acc, (_, c)| acc + &c.re * &c.re + &c.im * &c.im)
                    * int(1 << (2 * l));
                checked += 1;
                let ok = c.holds
                    && !c.norm_sq.is_negative()
                    && c.norm_sq == oracle
                    && c.norm_sq.is_zero() == alpha.is_zero();
                if !ok {
                    failures += 1;
                }
            }
        }
    }
    outcome(
        failures == 0,
        format!("{checked} forms, n = 2,3,4, l = 0..n/2; norm_sq >= 0 and zero iff alpha = 0; failures {failures}"),
    )
}

fn criterion_4() -> Outcome {
    let mut seen = Vec::new();
    let mut pass = true;
    for n in 2..=5 {
        let s = signature_of_pairing(&space(n)).unwrap();
        pass &= (s.positives, s.negatives, s.zeros) == (1, n * n - 1, 0);
        seen.push(format!("n={n}:({},{},{})", s.positives, s.negatives, s.zeros));
    }
    outcome(pass, seen.join(" "))
}

fn criterion_5() -> Outcome {
    let mut limit_mismatch = Vec::new();
    let mut discrepancies = Vec::new();
    let mut cells = 0;
    for n in 4..=12 {
        for k in 0..=n / 2 {
            let inv = twist_invariants(&twist_top_power(n, k)).unwrap();
            let l = ratio_limit(&inv, Direction::PlusInfinity).unwrap();
            if l != twist_limit_closed_form(n, k) {
                limit_mismatch.push((n, k));
            }
            if k < n / 2 {
                cells += 1;
                let verdict = asymptotic_verdict_toward(&inv, n, Direction::PlusInfinity, ConstantsOptions::default()).unwrap();
                let condition = rat(25, 9) * int((n - 2 * k) as i64) < int(n as i64);
                if (verdict == AsymptoticVerdict::ObstructedIneq2AtInfinity) != condition {
                    discrepancies.push((n, k));
                }
            }
        }
    }
    outcome(
        limit_mismatch.is_empty() && discrepancies.is_empty(),
        format!(
            "grid n = 4..12; limit mismatches {limit_mismatch:?}; case-(iii) cells {cells}, discrepancies {}",
            discrepancies.len()
        ),
    )
}

fn criterion_6() -> Outcome {
    let opts = ConstantsOptions::default();
    let mut case_i_ii = Vec::new();
    let mut case_iii = Vec::new();
    let mut swap = Vec::new();
    for n1 in 2..=8 {
        for n2 in 2..=8 {
            let spec = ProductFamilySpec::new(n1, n2, int(1));
            let n = n1 + n2;
            let inv = product_invariants(&spec).unwrap();
            let at_inf = ratio_limit(&inv, Direction::PlusInfinity).unwrap();
            let at_zero = ratio_limit(&inv, Direction::ZeroRight).unwrap();
            if n1 == 2 && at_inf != Limit::Finite(Rational::zero()) {
                case_i_ii.push(format!("(i) {n1},{n2}: L={at_inf}"));
            }
            if n2 == 2 && at_zero != Limit::Finite(Rational::zero()) {
                case_i_ii.push(format!("(ii) {n1},{n2}: L0={at_zero}"));
            }
            if n1 >= 3 && n2 >= 3 {
                let v_inf = asymptotic_verdict_toward(&inv, n, Direction::PlusInfinity, opts).unwrap();
                let v_zero = asymptotic_verdict_toward(&inv, n, Direction::ZeroRight, opts).unwrap();
                let cond_iii = rat(25, 9) * int(n1 as i64) < int(n as i64);
                let cond_iv = rat(25, 9) * int(n2 as i64) < int(n as i64);
                if at_inf != Limit::Finite(product_limit_closed_form(n1, n2))
                    || (v_inf == AsymptoticVerdict::ObstructedIneq2AtInfinity) != cond_iii
                    || (v_zero == AsymptoticVerdict::ObstructedIneq2AtInfinity) != cond_iv
                {
                    case_iii.push((n1, n2));
                }
            }
            let swapped = product_invariants(&spec.swapped()).unwrap();
            let lim_swapped = ratio_limit(&swapped, Direction::PlusInfinity).unwrap();
            let verdict_zero = asymptotic_verdict_toward(&inv, n, Direction::ZeroRight, opts).unwrap();
            let verdict_swapped = asymptotic_verdict_toward(&swapped, n, Direction::PlusInfinity, opts).unwrap();
            if at_zero != lim_swapped || verdict_zero != verdict_swapped {
                swap.push((n1, n2));
            }
        }
    }
    let shown: Vec<_> = case_i_ii.iter().take(3).cloned().collect();
    outcome(
        case_i_ii.is_empty() && case_iii.is_empty() && swap.is_empty(),
        format!(
            "case (iii)/(iv) mismatches {}; swap mismatches {}; case (i)/(ii) L=0 violations {} (e.g. {})",
            case_iii.len(),
            swap.len(),
            case_i_ii.len(),
            shown.join(", ")
        ),
    )
}

fn criterion_7() -> Outcome {
    let spec = TwistFamilySpec::new(2, vec![int(1), int(2)]);
    let inv = twist_invariants(&spec).unwrap();
    let polys = inv.v == PolyQ::new(vec![int(1), int(0), int(1)])
        && inv.a == PolyQ::constant(int(-1))
        && inv.b == PolyQ::constant(int(1));

    let table = obstruction_thresholds_with(&inv, ConstantsOptions::default(), &refine_tolerance()).unwrap();
    let five_quarters = rat(5, 4);
    // Oracle for |t| >= √5/2 on a rational t: t² >= 5/4.
    let ineq1_oracle = |t: &Rational| t * t >= five_quarters;
    let mut regions_ok = true;
    let mut threshold_ok = false;
    for seg in &table.segments {
        match &seg.region {
            Region::Root(i) => {
                let iv = &table.roots[*i];
                let width_ok = iv.width() <= refine_tolerance();
                let sqrt5_2 = iv.polynomial.eval(&iv.hi).is_zero() && iv.hi.is_zero()
                    || (iv.lo > Rational::zero() && &iv.lo * &iv.lo < five_quarters && &iv.hi * &iv.hi >= five_quarters)
                    || (iv.hi < Rational::zero() && &iv.hi * &iv.hi < five_quarters && &iv.lo * &iv.lo >= five_quarters);
                if iv.lo > Rational::zero() && sqrt5_2 && width_ok {
                    threshold_ok = true;
                }
                regions_ok &= width_ok && sqrt5_2;
                // Roots are ±√5/2 (Ineq1 holds with equality) and 0 (Apte fails).
                let at_zero = iv.lo < Rational::zero() && iv.hi >= Rational::zero();
                regions_ok &= (seg.einstein == EinsteinVerdict::ObstructedIneq1) != at_zero;
                regions_ok &= (seg.kaehler == KaehlerVerdict::ObstructedApte) != at_zero;
            }
            Region::Open { .. } => {
                let t = seg.sample.clone().unwrap();
                regions_ok &= (seg.einstein == EinsteinVerdict::ObstructedIneq1) == ineq1_oracle(&t);
                regions_ok &= seg.kaehler == KaehlerVerdict::ObstructedApte;
            }
        }
    }
    // Pointwise oracle on a fine rational grid.
    let mut grid_ok = true;
    for i in -400..=400 {
        let t = rat(i, 100);
        let point = inv.at(&t);
        grid_ok &= (check_einstein_obstruction(&point).unwrap() == EinsteinVerdict::ObstructedIneq1) == ineq1_oracle(&t);
        grid_ok &= (check_kaehler_obstruction(&point).unwrap() == KaehlerVerdict::ObstructedApte) == !t.is_zero();
        grid_ok &= table.locate(&t).map(|s| s.einstein) == Some(check_einstein_obstruction(&point).unwrap());
    }
    let window = einstein_constant_window(&inv.at(&int(1))).unwrap();
    let window_ok = window
        .as_ref()
        .is_some_and(|w| w.lower == int(-3) && w.upper == int(-2) && w.contains(&int(-3)) && !w.contains(&int(-2)));
    let pass = polys && regions_ok && threshold_ok && grid_ok && window_ok;
    outcome(
        pass,
        format!(
            "polynomials {polys}, sign table {regions_ok}, threshold width <= 1e-9 around sqrt(5)/2 {threshold_ok}, grid {grid_ok}, window [-3,-2)pi {window_ok}"
        ),
    )
}

fn criterion_8() -> Outcome {
    let mut r = rng(8);
    let mut failures = 0;
    let mut checked = 0;
    for n in 2..=12 {
        for _ in 0..BASE_POINT_SAMPLES {
            let j: Vec<Rational> = (0..=n / 2)
                .map(|l| {
                    let lo = if l == 0 { 1 } else { 0 };
                    rat(r.gen_range(lo..50), r.gen_range(1..10))
                })
                .collect();
            let inv = twist_invariants(&TwistFamilySpec::new(n, j)).unwrap();
            let p = inv.at(&Rational::zero());
            checked += 1;
            if &p.b * &p.v != &p.a * &p.a {
                failures += 1;
            }
        }
    }
    outcome(failures == 0, format!("{checked} twist families, n = 2..12; failures {failures}"))
}

fn random_rational<R: Rng>(r: &mut R, lo: i64, hi: i64) -> Rational {
    rat(r.gen_range(lo..=hi), r.gen_range(1..=12))
}

fn criterion_9() -> Outcome {
    let mut r = rng(9);
    let mut failures = 0;
    for i in 0..SCALE_SAMPLES {
        let n = r.gen_range(2..=10);
        // Every fourth instance sits on an equality boundary.
        let v = rat(r.gen_range(1..=40), r.gen_range(1..=12));
        let a = random_rational(&mut r, -30, 30);
        let b = match i % 4 {
            0 => &a * &a / &v,
            1 => constants_for(n).unwrap().k1 * &a * &a / &v,
            _ => random_rational(&mut r, -30, 30),
        };
        let lambda = rat(r.gen_range(1..=30), r.gen_range(1..=30));
        let inv = SymplecticInvariants::new(n, v, a, b);
        // Oracle rescaling, independent of the library's `rescaled`.
        let pow = |k: usize| (0..k).fold(int(1), |acc, _| acc * &lambda);
        let scaled = SymplecticInvariants::new(n, &inv.v * pow(n), &inv.a * pow(n - 1), &inv.b * pow(n - 2));
        let same = check_einstein_obstruction(&inv).unwrap() == check_einstein_obstruction(&scaled).unwrap()
            && check_kaehler_obstruction(&inv).unwrap() == check_kaehler_obstruction(&scaled).unwrap()
            && inv.rescaled(&lambda) == scaled;
        if !same {
            failures += 1;
        }
    }
    outcome(failures == 0, format!("{SCALE_SAMPLES} random instances; failures {failures}"))
}

fn implication_holds(inv: &FamilyInvariants) -> (usize, usize) {
    let table = obstruction_thresholds(inv).unwrap();
    let mut seen = 0;
    let mut bad = 0;
    for seg in &table.segments {
        if seg.einstein == EinsteinVerdict::ObstructedIneq1 {
            seen += 1;
            if seg.kaehler != KaehlerVerdict::ObstructedApte {
                bad += 1;
            }
        }
    }
    (seen, bad)
}

fn criterion_10() -> Outcome {
    let mut seen = 0;
    let mut bad = 0;
    for n in 2..=12 {
        for k in 0..=n / 2 {
            let (s, b) = implication_holds(&twist_invariants(&twist_top_power(n, k)).unwrap());
            seen += s;
            bad += b;
        }
    }
    for n1 in 1..=8 {
        for n2 in 1..=8 {
            let (s, b) = implication_holds(&product_invariants(&ProductFamilySpec::new(n1, n2, int(1))).unwrap());
            seen += s;
            bad += b;
        }
    }
    outcome(bad == 0, format!("{seen} ObstructedIneq1 regions across twist and product sweeps; exceptions {bad}"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("constants table", criterion_1),
        ("wedge identities", criterion_2),
        ("Hodge-Riemann identity", criterion_3),
        ("Lorentz signature", criterion_4),
        ("twist asymptotics", criterion_5),
        ("product asymptotics", criterion_6),
        ("n = 2 twist example", criterion_7),
        ("Kaehler base point", criterion_8),
        ("scale invariance", criterion_9),
        ("Ineq1 implies Apte", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let o = f();
        if !o.pass {
            failed += 1;
        }
        println!("criterion {:>2} {} {name}: {}", i + 1, if o.pass { "PASS" } else { "FAIL" }, o.detail);
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
