use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::job::{CsvOptions, JobSpec, OracleParams, Payload, SweepFamily, SweepParams};
use super::report::{
    CheckReport, FamilyInput, FamilyReport, OracleCheck, OracleReport, ProductSweepRow, Report,
    SweepReport, TwistSweepRow,
};
use crate::arith::limit::{Direction, Limit};
use crate::arith::rational::{decimal_significant, int, rat, Rational};
use crate::error::{Error, Result};
use crate::exterior::{
    self, decompose, pairing, sample, signature_of_pairing, verify_hodge_riemann,
    verify_omega_power_identity, verify_square_identity, Inertia, ModelSpace, MultiVector,
};
use crate::families::{
    asymptotic_verdict_toward, obstruction_thresholds_with, product_invariants, ratio_limit,
    twist_invariants, AsymptoticVerdict, FamilyInvariants, ProductFamilySpec, TwistFamilySpec,
};
use crate::invariants::{constants_with, einstein_constant_window, evaluate, ConstantsOptions};

fn options(job: &JobSpec) -> ConstantsOptions {
    ConstantsOptions {
        lebrun_k2: job.output.lebrun_k2,
    }
}

pub fn run(job: &JobSpec) -> Result<Report> {
    match &job.payload {
        Payload::Check(_) => run_check(job),
        Payload::Twist(_) | Payload::Product(_) => run_family(job),
        Payload::VerifyOracle(_) => run_verify_oracle(job),
        Payload::Sweep(_) => run_sweep(job),
    }
}

pub fn run_check(job: &JobSpec) -> Result<Report> {
    let Payload::Check(inv) = &job.payload else {
        return Err(Error::parse(0, "mode", "expected a check job"));
    };
    let opts = options(job);
    Ok(Report::Check(CheckReport {
        input: inv.clone(),
        lebrun_k2: opts.lebrun_k2,
        constants: constants_with(inv.n, opts)?,
        verdict: evaluate(inv, opts)?,
        einstein_window: einstein_constant_window(inv)?,
    }))
}

pub fn family_invariants(job: &JobSpec) -> Result<(FamilyInput, FamilyInvariants)> {
    match &job.payload {
        Payload::Twist(spec) => Ok((FamilyInput::Twist(spec.clone()), twist_invariants(spec)?)),
        Payload::Product(spec) => Ok((FamilyInput::Product(spec.clone()), product_invariants(spec)?)),
        _ => Err(Error::parse(0, "mode", "expected a twist or product job")),
    }
}

pub fn run_family(job: &JobSpec) -> Result<Report> {
    let opts = options(job);
    let (input, inv) = family_invariants(job)?;
    let limit = ratio_limit(&inv, Direction::PlusInfinity)?;
    let asymptotic = asymptotic_verdict_toward(&inv, inv.n, Direction::PlusInfinity, opts)?;
    let (limit_at_zero, asymptotic_at_zero) = match input {
        FamilyInput::Product(_) => (
            Some(ratio_limit(&inv, Direction::ZeroRight)?),
            Some(asymptotic_verdict_toward(&inv, inv.n, Direction::ZeroRight, opts)?),
        ),
        FamilyInput::Twist(_) => (None, None),
    };
    let thresholds = obstruction_thresholds_with(&inv, opts, &job.output.refine_width)?;
    Ok(Report::Family(FamilyReport {
        input,
        lebrun_k2: opts.lebrun_k2,
        invariants: inv,
        limit,
        asymptotic,
        limit_at_zero,
        asymptotic_at_zero,
        refine_width: job.output.refine_width.clone(),
        thresholds,
    }))
}

/// CSV samples `t,v,a,b,ratio` at steps+1 evenly spaced points, evaluated
/// exactly and rendered to 12 significant digits.
pub fn family_csv(inv: &FamilyInvariants, csv: &CsvOptions) -> String {
    let mut out = String::from("t,v,a,b,ratio\n");
    for t in csv_points(csv) {
        let at = inv.at(&t);
        let ratio = if at.a.is_zero() {
            String::new()
        } else {
            decimal_significant(&(&at.b * &at.v / (&at.a * &at.a)), 12)
        };
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            decimal_significant(&t, 12),
            decimal_significant(&at.v, 12),
            decimal_significant(&at.a, 12),
            decimal_significant(&at.b, 12),
            ratio
        ));
    }
    out
}

pub fn csv_points(csv: &CsvOptions) -> Vec<Rational> {
    if csv.steps == 0 {
        return vec![csv.t_min.clone()];
    }
    let step = (&csv.t_max - &csv.t_min) / int(csv.steps as i64);
    (0..=csv.steps)
        .map(|i| &csv.t_min + &step * int(i as i64))
        .collect()
}

struct Tally {
    name: &'static str,
    passed: usize,
    failed: usize,
    counterexample: Option<String>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally {
            name,
            passed: 0,
            failed: 0,
            counterexample: None,
        }
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            if self.counterexample.is_none() {
                self.counterexample = Some(witness());
            }
        }
    }

    fn finish(self) -> OracleCheck {
        OracleCheck {
            name: self.name.into(),
            passed: self.passed,
            failed: self.failed,
            counterexample: self.counterexample,
        }
    }
}

fn fixed_two_forms(space: &ModelSpace) -> Vec<MultiVector> {
    let mut forms = vec![space.omega(), space.blade(&[1, 2])];
    if space.n() >= 2 {
        forms.push(&space.blade(&[1, 3]) - &space.blade(&[2, 4]));
        forms.push(&space.blade(&[1, 2]) - &space.blade(&[3, 4]));
    }
    forms
}

/// Runs the exact identity suites on one model space.
pub fn oracle_suite(params: &OracleParams) -> Result<OracleReport> {
    let n = params.n;
    if n < 2 {
        return Err(Error::DimensionTooSmall { n, min: 2 });
    }
    if n > exterior::DEFAULT_MAX_N && !params.allow_large {
        return Err(Error::DimensionTooLarge {
            n,
            max: exterior::DEFAULT_MAX_N,
        });
    }
    let space = ModelSpace::new(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut two_forms = fixed_two_forms(&space);
    two_forms.extend((0..params.samples).map(|_| sample::random_real_two_form(&space, &mut rng)));

    let mut id6 = Tally::new("omega-power-identity");
    let mut id7 = Tally::new("square-identity");
    let mut dec = Tally::new("type-decomposition");
    let omega = space.omega();
    for xi in &two_forms {
        let c6 = verify_omega_power_identity(xi)?;
        id6.record(c6.holds, || format!("xi = {xi}; residual = {}", c6.residual));
        let c7 = verify_square_identity(xi)?;
        id7.record(c7.holds, || {
            format!(
                "xi = {xi}; residuals = {} / {}",
                c7.residual_primitive, c7.residual_invariant
            )
        });
        let parts = decompose(xi)?;
        let norms = parts.omega_part.norm_sq() + parts.primitive_11.norm_sq() + parts.anti_invariant.norm_sq();
        let again = decompose(&parts.invariant())?;
        let ok = parts.sum() == *xi
            && norms == xi.norm_sq()
            && pairing(&parts.anti_invariant, &omega) == int(0)
            && pairing(&parts.primitive_11, &omega) == int(0)
            && parts.primitive_11.pullback_j() == parts.primitive_11
            && parts.anti_invariant.pullback_j() == -&parts.anti_invariant
            && again.anti_invariant.is_zero()
            && again.invariant() == parts.invariant();
        dec.record(ok, || format!("xi = {xi}"));
    }

    let mut hr = Tally::new("hodge-riemann");
    for l in 0..=n / 2 {
        let generator = (1..=2 * l).fold(space.scalar(num_complex::Complex::new(int(1), int(0))), |acc, j| {
            acc.wedge(&space.epsilon(j)).expect("same space")
        });
        let mut alphas = vec![space.zero(), generator];
        alphas.extend((0..params.samples).map(|_| sample::random_holomorphic_form(&space, 2 * l, &mut rng)));
        for alpha in &alphas {
            let c = verify_hodge_riemann(alpha)?;
            let zero_iff = (c.norm_sq == int(0)) == alpha.is_zero();
            hr.record(c.holds && zero_iff, || format!("alpha = {alpha}; residual = {}", c.residual));
        }
    }

    let signature = signature_of_pairing(&space)?;
    let expected = Inertia {
        positives: 1,
        negatives: n * n - 1,
        zeros: 0,
    };
    let checks = vec![id6.finish(), id7.finish(), dec.finish(), hr.finish()];
    let all_passed = checks.iter().all(|c| c.failed == 0) && signature == expected;
    Ok(OracleReport {
        n,
        samples: params.samples,
        seed: params.seed,
        checks,
        signature: Some(signature),
        expected_signature: Some(expected),
        all_passed,
    })
}

pub fn run_verify_oracle(job: &JobSpec) -> Result<Report> {
    let Payload::VerifyOracle(params) = &job.payload else {
        return Err(Error::parse(0, "mode", "expected a verify-oracle job"));
    };
    Ok(Report::Oracle(oracle_suite(params)?))
}

/// J-vector with J_l = 1 for l ≤ k and 0 above.
pub fn twist_spec_with_top_power(n: usize, k: usize) -> TwistFamilySpec {
    TwistFamilySpec::new(n, (0..=n / 2).map(|l| int(i64::from(l <= k))).collect())
}

pub fn twist_sweep(n_range: (usize, usize), opts: ConstantsOptions) -> Result<Vec<TwistSweepRow>> {
    let mut rows = Vec::new();
    for n in n_range.0..=n_range.1 {
        let m = n / 2;
        for k in 0..=m {
            let inv = twist_invariants(&twist_spec_with_top_power(n, k))?;
            let limit = ratio_limit(&inv, Direction::PlusInfinity)?;
            let verdict = asymptotic_verdict_toward(&inv, n, Direction::PlusInfinity, opts)?;
            let condition = rat(25, 9) * int((n - 2 * k) as i64) < int(n as i64);
            let (case, expected) = if k == m && n % 2 == 0 {
                ("i", AsymptoticVerdict::ObstructedIneq1AtInfinity)
            } else if k == m {
                ("ii", AsymptoticVerdict::ObstructedIneq2AtInfinity)
            } else if condition {
                ("iii", AsymptoticVerdict::ObstructedIneq2AtInfinity)
            } else {
                ("iii", AsymptoticVerdict::NotObstructedAtInfinity)
            };
            rows.push(TwistSweepRow {
                n,
                k,
                case: case.into(),
                limit,
                verdict,
                condition,
                agrees: verdict == expected,
            });
        }
    }
    Ok(rows)
}

pub fn product_sweep(range: (usize, usize), opts: ConstantsOptions) -> Result<Vec<ProductSweepRow>> {
    let mut rows = Vec::new();
    for n1 in range.0..=range.1 {
        for n2 in range.0..=range.1 {
            let spec = ProductFamilySpec::new(n1, n2, int(1));
            let n = spec.n();
            let inv = product_invariants(&spec)?;
            let limit = ratio_limit(&inv, Direction::PlusInfinity)?;
            let verdict = asymptotic_verdict_toward(&inv, n, Direction::PlusInfinity, opts)?;
            let formula = int((n * (n1 - 1)) as i64) / int((n1 * (n - 1)) as i64);
            let condition = rat(25, 9) * int(n1 as i64) < int(n as i64);
            let at_zero = asymptotic_verdict_toward(&inv, n, Direction::ZeroRight, opts)?;
            let swapped = product_invariants(&spec.swapped())?;
            let swapped_verdict = asymptotic_verdict_toward(&swapped, n, Direction::PlusInfinity, opts)?;
            let swap_agrees = at_zero == swapped_verdict
                && ratio_limit(&inv, Direction::ZeroRight)? == ratio_limit(&swapped, Direction::PlusInfinity)?;
            // The closed-form condition uses the constants for n >= 3.
            let agrees = limit == Limit::Finite(formula.clone())
                && (n < 3 || (verdict == AsymptoticVerdict::ObstructedIneq2AtInfinity) == condition);
            rows.push(ProductSweepRow {
                n1,
                n2,
                limit,
                formula,
                verdict,
                condition,
                swap_agrees,
                agrees,
            });
        }
    }
    Ok(rows)
}

pub fn run_sweep(job: &JobSpec) -> Result<Report> {
    let Payload::Sweep(SweepParams {
        family,
        twist_n,
        product_n,
    }) = &job.payload
    else {
        return Err(Error::parse(0, "mode", "expected a sweep job"));
    };
    let opts = options(job);
    let twist = if *family != SweepFamily::Product {
        twist_sweep(*twist_n, opts)?
    } else {
        Vec::new()
    };
    let product = if *family != SweepFamily::Twist {
        product_sweep(*product_n, opts)?
    } else {
        Vec::new()
    };
    let discrepancies = twist.iter().filter(|r| !r.agrees).count()
        + product.iter().filter(|r| !(r.agrees && r.swap_agrees)).count();
    Ok(Report::Sweep(SweepReport {
        twist,
        product,
        discrepancies,
    }))
}
