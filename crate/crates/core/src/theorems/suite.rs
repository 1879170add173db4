//! Seeded randomized suites: each trial draws constrained inputs for one
//! statement, runs [`verify_theorem`](crate::theorems::verify_theorem),
//! and tallies the classifications. Counterexamples are captured with the
//! trial seed and printable inputs so any failure replays exactly.

use std::time::Instant;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::context::FieldContext;
use crate::element::Element;
use crate::error::Result;
use crate::parser::{format_poly1, format_poly2};
use crate::poly::Poly1;
use crate::poly2::Poly2;
use crate::theorems::generate::{
    default_pool, random_poly, random_poly2, subfield_pool, CoeffForce, GenConstraints,
    GenConstraints2, NonFRequirement,
};
use crate::theorems::{verify_theorem, Classification, TheoremId, TheoremInputs, TheoremVerdict};

/// Degree ceilings for randomly drawn inputs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SuiteCaps {
    /// Highest degree for univariate draws.
    pub max_degree_uni: usize,
    /// Highest total degree for bivariate draws.
    pub max_degree_bi: usize,
    /// Highest degree an iterate may reach (deg(p)^r is kept at or below
    /// this, bounding the largest composition the iteration tests build).
    pub max_iter_result_degree: usize,
}

impl Default for SuiteCaps {
    fn default() -> Self {
        SuiteCaps {
            max_degree_uni: 5,
            max_degree_bi: 3,
            max_iter_result_degree: 81,
        }
    }
}

/// One trial whose conclusion failed with all hypotheses met.
#[derive(Debug, Clone, Serialize)]
pub struct CounterexampleRecord {
    /// Which trial (0-based) produced it.
    pub trial: u64,
    /// The per-trial seed; rerunning the suite with this seed and one
    /// trial reproduces the draw.
    pub seed: u64,
    /// Printable forms of the drawn inputs.
    pub inputs: Vec<String>,
    /// The full verdict.
    pub verdict: TheoremVerdict,
}

/// Aggregate outcome of a suite run.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    /// Statement short name.
    pub theorem: String,
    /// Context spec the suite ran on.
    pub context: String,
    /// Trials requested.
    pub trials: u64,
    /// Trials classified CONFIRMS.
    pub confirms: u64,
    /// Trials classified VACUOUS.
    pub vacuous: u64,
    /// Conclusion failures with hypotheses met.
    pub counterexamples: Vec<CounterexampleRecord>,
    /// The master seed the run was keyed on.
    pub seed: u64,
    /// Degree ceilings in force.
    pub caps: SuiteCaps,
    /// Wall-clock duration of the run.
    pub runtime_ms: u64,
}

/// Decorrelates per-trial seeds from the master seed (splitmix64 finisher).
fn mix_seed(seed: u64, trial: u64) -> u64 {
    let mut z = seed ^ trial.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

struct Pools {
    mixed: Vec<Element>,
    f_only: Vec<Element>,
}

enum DrawnInputs {
    Pair(Poly1, Poly1),
    Iterate(Poly1, u32),
    UniBi(Poly1, Poly2),
}

fn constraints(
    pool: &[Element],
    seed: u64,
    degree: (usize, usize),
    lead: CoeffForce,
    non_f: NonFRequirement,
) -> GenConstraints {
    GenConstraints {
        degree,
        lead,
        constant: CoeffForce::Any,
        non_f,
        pool: pool.to_vec(),
        seed,
    }
}

/// Largest degree n with n^r bounded by the iterate cap (and by the
/// univariate cap), but at least 1.
fn iter_degree_limit(caps: &SuiteCaps, r: u32) -> usize {
    let mut best = 1usize;
    for n in 1..=caps.max_degree_uni {
        let mut power = 1usize;
        let mut ok = true;
        for _ in 0..r {
            match power.checked_mul(n) {
                Some(next) if next <= caps.max_iter_result_degree => power = next,
                _ => {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            best = n;
        }
    }
    best
}

fn draw_inputs(
    ctx: &FieldContext,
    id: TheoremId,
    pools: &Pools,
    trial_seed: u64,
    caps: &SuiteCaps,
) -> Result<DrawnInputs> {
    let mut rng = ChaCha8Rng::seed_from_u64(trial_seed);
    let max = caps.max_degree_uni;
    match id {
        TheoremId::T1 | TheoremId::Ring | TheoremId::DeficitSetT1 => {
            let q = random_poly(
                ctx,
                &constraints(
                    &pools.mixed,
                    rng.random::<u64>(),
                    (2, max),
                    CoeffForce::InF,
                    NonFRequirement::SomeIndexGe1,
                ),
            )?;
            let p = random_poly(
                ctx,
                &constraints(
                    &pools.mixed,
                    rng.random::<u64>(),
                    (1, max),
                    CoeffForce::InF,
                    NonFRequirement::None,
                ),
            )?;
            Ok(DrawnInputs::Pair(p, q))
        }
        TheoremId::C1 => {
            let q = random_poly(
                ctx,
                &GenConstraints {
                    degree: (2, max),
                    lead: CoeffForce::InF,
                    constant: CoeffForce::InF,
                    non_f: NonFRequirement::SomeIndexGe1,
                    pool: pools.mixed.clone(),
                    seed: rng.random::<u64>(),
                },
            )?;
            let p = random_poly(
                ctx,
                &constraints(
                    &pools.mixed,
                    rng.random::<u64>(),
                    (1, max),
                    CoeffForce::InF,
                    NonFRequirement::None,
                ),
            )?;
            Ok(DrawnInputs::Pair(p, q))
        }
        TheoremId::T1A => {
            let q = random_poly(
                ctx,
                &constraints(
                    &pools.f_only,
                    rng.random::<u64>(),
                    (0, max),
                    CoeffForce::Any,
                    NonFRequirement::None,
                ),
            )?;
            let p = random_poly(
                ctx,
                &constraints(
                    &pools.mixed,
                    rng.random::<u64>(),
                    (0, max),
                    CoeffForce::Any,
                    NonFRequirement::None,
                ),
            )?;
            Ok(DrawnInputs::Pair(p, q))
        }
        TheoremId::T2 => {
            // Unconstrained leads, redrawn until their product lands in F
            // so the hypothesis is met often rather than almost never.
            for _ in 0..50 {
                let p = random_poly(
                    ctx,
                    &constraints(
                        &pools.mixed,
                        rng.random::<u64>(),
                        (1, max),
                        CoeffForce::Any,
                        NonFRequirement::None,
                    ),
                )?;
                let q = random_poly(
                    ctx,
                    &constraints(
                        &pools.mixed,
                        rng.random::<u64>(),
                        (0, max),
                        CoeffForce::Any,
                        NonFRequirement::None,
                    ),
                )?;
                let product = ctx.mul(p.leading()?, q.leading()?)?;
                if ctx.is_in_subfield(&product)? {
                    return Ok(DrawnInputs::Pair(p, q));
                }
            }
            // Fall back to plainly F-leading draws.
            let p = random_poly(
                ctx,
                &constraints(
                    &pools.mixed,
                    rng.random::<u64>(),
                    (1, max),
                    CoeffForce::InF,
                    NonFRequirement::None,
                ),
            )?;
            let q = random_poly(
                ctx,
                &constraints(
                    &pools.mixed,
                    rng.random::<u64>(),
                    (0, max),
                    CoeffForce::InF,
                    NonFRequirement::None,
                ),
            )?;
            Ok(DrawnInputs::Pair(p, q))
        }
        TheoremId::P1 => {
            let p = random_poly(
                ctx,
                &constraints(
                    &pools.mixed,
                    rng.random::<u64>(),
                    (1, max),
                    CoeffForce::Any,
                    NonFRequirement::None,
                ),
            )?;
            let q = random_poly(
                ctx,
                &constraints(
                    &pools.mixed,
                    rng.random::<u64>(),
                    (2, max),
                    CoeffForce::InF,
                    NonFRequirement::SomeIndexGe1,
                ),
            )?;
            Ok(DrawnInputs::Pair(p, q))
        }
        TheoremId::L1 => {
            // Mostly all-F draws so the membership hypotheses are met;
            // sometimes a mixed outer to exercise the vacuous route.
            let q = random_poly(
                ctx,
                &constraints(
                    &pools.f_only,
                    rng.random::<u64>(),
                    (1, max),
                    CoeffForce::Any,
                    NonFRequirement::None,
                ),
            )?;
            let p_pool = if rng.random_range(0..10) < 7 {
                &pools.f_only
            } else {
                &pools.mixed
            };
            let p = random_poly(
                ctx,
                &constraints(
                    p_pool,
                    rng.random::<u64>(),
                    (0, max),
                    CoeffForce::Any,
                    NonFRequirement::None,
                ),
            )?;
            Ok(DrawnInputs::Pair(p, q))
        }
        TheoremId::T3 => {
            let mixed_outer = rng.random_range(0..10) >= 7;
            let p_pool = if mixed_outer {
                &pools.mixed
            } else {
                &pools.f_only
            };
            let p = random_poly(
                ctx,
                &constraints(
                    p_pool,
                    rng.random::<u64>(),
                    (0, max),
                    CoeffForce::Any,
                    NonFRequirement::None,
                ),
            )?;
            let q = random_poly(
                ctx,
                &GenConstraints {
                    degree: (1, max),
                    lead: CoeffForce::InF,
                    constant: CoeffForce::InF,
                    non_f: NonFRequirement::None,
                    pool: if mixed_outer {
                        pools.f_only.clone()
                    } else {
                        pools.mixed.clone()
                    },
                    seed: rng.random::<u64>(),
                },
            )?;
            Ok(DrawnInputs::Pair(p, q))
        }
        TheoremId::T4 => {
            let r = rng.random_range(1..=3u32);
            let n_max = iter_degree_limit(caps, r);
            let c = constraints(
                &pools.mixed,
                0,
                (1, n_max),
                CoeffForce::InF,
                NonFRequirement::SomeIndexAny,
            );
            // Resample away from the degenerate degree-1 draws so the
            // nondegeneracy hypothesis is met on most trials.
            let mut p = random_poly(
                ctx,
                &GenConstraints {
                    seed: rng.random::<u64>(),
                    ..c.clone()
                },
            )?;
            for _ in 0..20 {
                if super::iterate_nondegenerate(ctx, &p, r)? {
                    break;
                }
                p = random_poly(
                    ctx,
                    &GenConstraints {
                        seed: rng.random::<u64>(),
                        ..c.clone()
                    },
                )?;
            }
            Ok(DrawnInputs::Iterate(p, r))
        }
        TheoremId::IterIneq => {
            let r = rng.random_range(1..=3u32);
            let n_max = iter_degree_limit(caps, r);
            let p = random_poly(
                ctx,
                &constraints(
                    &pools.mixed,
                    rng.random::<u64>(),
                    (0, n_max),
                    CoeffForce::Any,
                    NonFRequirement::None,
                ),
            )?;
            Ok(DrawnInputs::Iterate(p, r))
        }
        TheoremId::T5 => {
            let r = rng.random_range(1..=3u32);
            let n_max = iter_degree_limit(caps, r);
            let (pool, non_f) = if rng.random_range(0..10) < 7 {
                (&pools.f_only, NonFRequirement::None)
            } else {
                (&pools.mixed, NonFRequirement::SomeIndexAny)
            };
            let p = random_poly(
                ctx,
                &constraints(
                    pool,
                    rng.random::<u64>(),
                    (1, n_max),
                    CoeffForce::InF,
                    non_f,
                ),
            )?;
            Ok(DrawnInputs::Iterate(p, r))
        }
        TheoremId::Ff => {
            let t = ctx.characteristic() as usize;
            let coprime: Vec<usize> = (1..=max).filter(|n| t == 0 || n % t != 0).collect();
            let n = coprime[rng.random_range(0..coprime.len())];
            let p = random_poly(
                ctx,
                &constraints(
                    &pools.mixed,
                    rng.random::<u64>(),
                    (n, n),
                    CoeffForce::InF,
                    NonFRequirement::None,
                ),
            )?;
            let q = random_poly(
                ctx,
                &constraints(
                    &pools.mixed,
                    rng.random::<u64>(),
                    (2, max),
                    CoeffForce::InF,
                    NonFRequirement::SomeIndexGe1,
                ),
            )?;
            Ok(DrawnInputs::Pair(p, q))
        }
        TheoremId::TwoVar => {
            let p = random_poly(
                ctx,
                &constraints(
                    &pools.mixed,
                    rng.random::<u64>(),
                    (1, caps.max_degree_bi),
                    CoeffForce::InF,
                    NonFRequirement::None,
                ),
            )?;
            let q = random_poly2(
                ctx,
                &GenConstraints2 {
                    degree: (2, caps.max_degree_bi),
                    top_in_f: true,
                    non_f_part: true,
                    pool: pools.mixed.clone(),
                    seed: rng.random::<u64>(),
                },
            )?;
            Ok(DrawnInputs::UniBi(p, q))
        }
    }
}

fn run_trial(
    ctx: &FieldContext,
    id: TheoremId,
    pools: &Pools,
    trial_seed: u64,
    caps: &SuiteCaps,
) -> Result<(TheoremVerdict, Vec<String>)> {
    let inputs = draw_inputs(ctx, id, pools, trial_seed, caps)?;
    match &inputs {
        DrawnInputs::Pair(p, q) => {
            let verdict = verify_theorem(ctx, id, TheoremInputs::Pair { p, q })?;
            Ok((verdict, vec![format_poly1(ctx, p)?, format_poly1(ctx, q)?]))
        }
        DrawnInputs::Iterate(p, r) => {
            let verdict = verify_theorem(ctx, id, TheoremInputs::Iterate { p, r: *r })?;
            Ok((verdict, vec![format_poly1(ctx, p)?, format!("r = {r}")]))
        }
        DrawnInputs::UniBi(p, q) => {
            let verdict = verify_theorem(ctx, id, TheoremInputs::UniBi { p, q })?;
            Ok((verdict, vec![format_poly1(ctx, p)?, format_poly2(ctx, q)?]))
        }
    }
}

/// Runs `trials` seeded trials of one statement on one context. Stops at
/// the first counterexample for proved statements; the set-membership
/// variant is empirical, so its counterexamples are tallied and the run
/// continues.
pub fn run_suite(
    ctx: &FieldContext,
    id: TheoremId,
    trials: u64,
    seed: u64,
    caps: SuiteCaps,
) -> Result<SuiteReport> {
    super::check_admissible(ctx, id)?;
    let started = Instant::now();
    let mixed = default_pool(ctx)?;
    let f_only = subfield_pool(ctx, &mixed)?;
    let pools = Pools { mixed, f_only };
    let mut confirms = 0u64;
    let mut vacuous = 0u64;
    let mut counterexamples = Vec::new();
    for trial in 0..trials {
        let trial_seed = mix_seed(seed, trial);
        let (verdict, inputs) = run_trial(ctx, id, &pools, trial_seed, &caps)?;
        match verdict.classification {
            Classification::Confirms => confirms += 1,
            Classification::Vacuous => vacuous += 1,
            Classification::CounterexampleToConclusion => {
                counterexamples.push(CounterexampleRecord {
                    trial,
                    seed: trial_seed,
                    inputs,
                    verdict,
                });
                if id != TheoremId::DeficitSetT1 {
                    break;
                }
            }
        }
    }
    Ok(SuiteReport {
        theorem: id.to_string(),
        context: ctx.name(),
        trials,
        confirms,
        vacuous,
        counterexamples,
        seed,
        caps,
        runtime_ms: started.elapsed().as_millis() as u64,
    })
}

/// Outcome of a negative control: a deliberately violated hypothesis with
/// the count of trials where the conclusion indeed failed.
#[derive(Debug, Clone, Serialize)]
pub struct NegativeControlReport {
    /// Trials run.
    pub trials: u64,
    /// Trials where the conclusion failed, as designed.
    pub violations: u64,
    /// Printable inputs of the first failing trial.
    pub first_violation: Option<Vec<String>>,
}

/// Negative control: over GF(4) ⊃ GF(2), outer degrees divisible by the
/// characteristic must break the deficit equality on suitable inners —
/// proving the checker can see failures. The verdicts stay vacuous (the
/// coprimality hypothesis is unmet), so this inspects the conclusion
/// directly.
pub fn negative_control_ff(
    trials: u64,
    seed: u64,
    caps: SuiteCaps,
) -> Result<NegativeControlReport> {
    let ctx = FieldContext::parse_spec("GF(2^2)")?;
    let mixed = default_pool(&ctx)?;
    let mut violations = 0u64;
    let mut first_violation = None;
    for trial in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(mix_seed(seed, trial));
        let n = if rng.random_range(0..2) == 0 { 2 } else { 4 };
        let n = n.min(caps.max_degree_uni.max(2));
        let p = random_poly(
            &ctx,
            &constraints(
                &mixed,
                rng.random::<u64>(),
                (n, n),
                CoeffForce::InF,
                NonFRequirement::None,
            ),
        )?;
        let q = random_poly(
            &ctx,
            &constraints(
                &mixed,
                rng.random::<u64>(),
                (2, caps.max_degree_uni.max(2)),
                CoeffForce::InF,
                NonFRequirement::SomeIndexGe1,
            ),
        )?;
        let verdict = verify_theorem(&ctx, TheoremId::Ff, TheoremInputs::Pair { p: &p, q: &q })?;
        if !verdict.conclusion_holds {
            violations += 1;
            if first_violation.is_none() {
                first_violation = Some(vec![format_poly1(&ctx, &p)?, format_poly1(&ctx, &q)?]);
            }
        }
    }
    Ok(NegativeControlReport {
        trials,
        violations,
        first_violation,
    })
}

/// Negative control: with the outer leading coefficient forced outside F
/// (so the lead-product hypothesis fails), the deficit bound is expected
/// to fail on concrete draws like √2·x³ + … against inner F-lead draws.
pub fn negative_control_t2(
    ctx: &FieldContext,
    trials: u64,
    seed: u64,
    caps: SuiteCaps,
) -> Result<NegativeControlReport> {
    let mixed = default_pool(ctx)?;
    let mut violations = 0u64;
    let mut first_violation = None;
    for trial in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(mix_seed(seed, trial));
        let p = random_poly(
            ctx,
            &constraints(
                &mixed,
                rng.random::<u64>(),
                (1, caps.max_degree_uni),
                CoeffForce::NotInF,
                NonFRequirement::None,
            ),
        )?;
        let q = random_poly(
            ctx,
            &constraints(
                &mixed,
                rng.random::<u64>(),
                (2, caps.max_degree_uni),
                CoeffForce::InF,
                NonFRequirement::SomeIndexGe1,
            ),
        )?;
        let verdict = verify_theorem(ctx, TheoremId::T2, TheoremInputs::Pair { p: &p, q: &q })?;
        if !verdict.conclusion_holds {
            violations += 1;
            if first_violation.is_none() {
                first_violation = Some(vec![format_poly1(ctx, &p)?, format_poly1(ctx, &q)?]);
            }
        }
    }
    Ok(NegativeControlReport {
        trials,
        violations,
        first_violation,
    })
}

/// One row of the default verification plan.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct PlanEntry {
    /// Context spec to run on.
    pub field: &'static str,
    /// Statement to check.
    pub id: TheoremId,
    /// Trial count.
    pub trials: u64,
}

/// The default plan: every statement on the contexts where it is proved
/// (or, for the set-membership variant, empirically interesting).
pub fn default_suite_plan() -> Vec<PlanEntry> {
    let mut plan = Vec::new();
    let char0: [TheoremId; 10] = [
        TheoremId::T1,
        TheoremId::C1,
        TheoremId::T1A,
        TheoremId::T2,
        TheoremId::P1,
        TheoremId::L1,
        TheoremId::T3,
        TheoremId::T4,
        TheoremId::IterIneq,
        TheoremId::T5,
    ];
    for field in ["Q(sqrt 2, sqrt 3)", "Q(sqrt -1)"] {
        for id in char0 {
            plan.push(PlanEntry {
                field,
                id,
                trials: 1000,
            });
        }
    }
    plan.push(PlanEntry {
        field: "GF(3^2)",
        id: TheoremId::Ff,
        trials: 500,
    });
    plan.push(PlanEntry {
        field: "GF(5^2)",
        id: TheoremId::Ff,
        trials: 500,
    });
    plan.push(PlanEntry {
        field: "Q(sqrt 2, sqrt 3)",
        id: TheoremId::TwoVar,
        trials: 200,
    });
    plan.push(PlanEntry {
        field: "Z<Q",
        id: TheoremId::Ring,
        trials: 500,
    });
    plan.push(PlanEntry {
        field: "set:realsUnionImag",
        id: TheoremId::DeficitSetT1,
        trials: 500,
    });
    plan
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(spec: &str) -> FieldContext {
        FieldContext::parse_spec(spec).expect("context")
    }

    #[test]
    fn composition_suite_confirms_every_constrained_trial() {
        let k = ctx("Q(sqrt 2)");
        let report = run_suite(&k, TheoremId::T1, 30, 42, SuiteCaps::default()).unwrap();
        assert_eq!(report.confirms, 30);
        assert_eq!(report.vacuous, 0);
        assert!(report.counterexamples.is_empty());
        assert_eq!(report.theorem, "T1");
        assert_eq!(report.context, "Q(sqrt 2)");
    }

    #[test]
    fn suites_are_deterministic_in_the_seed() {
        let k = ctx("Q(sqrt 2, sqrt 3)");
        let a = run_suite(&k, TheoremId::T2, 25, 7, SuiteCaps::default()).unwrap();
        let b = run_suite(&k, TheoremId::T2, 25, 7, SuiteCaps::default()).unwrap();
        assert_eq!(a.confirms, b.confirms);
        assert_eq!(a.vacuous, b.vacuous);
        assert_eq!(a.counterexamples.len(), b.counterexamples.len());
        let c = run_suite(&k, TheoremId::T2, 25, 8, SuiteCaps::default()).unwrap();
        // A different seed draws different inputs; the counts may differ,
        // but whatever happens there must still be no counterexamples.
        assert!(c.counterexamples.is_empty());
    }

    #[test]
    fn product_rule_suite_never_finds_counterexamples() {
        let k = ctx("Q(sqrt -1)");
        let report = run_suite(&k, TheoremId::T1A, 30, 3, SuiteCaps::default()).unwrap();
        assert!(report.counterexamples.is_empty());
        assert!(report.confirms > 0);
    }

    #[test]
    fn iteration_suites_stay_clean_within_caps() {
        let k = ctx("Q(sqrt 2)");
        let report = run_suite(&k, TheoremId::T4, 40, 11, SuiteCaps::default()).unwrap();
        assert!(report.counterexamples.is_empty());
        assert!(report.confirms > 0, "nondegenerate draws should dominate");
        let caps = SuiteCaps {
            max_degree_uni: 3,
            ..SuiteCaps::default()
        };
        let report = run_suite(&k, TheoremId::IterIneq, 200, 12, caps).unwrap();
        assert!(report.counterexamples.is_empty());
    }

    #[test]
    fn lead_violation_control_fails_every_trial() {
        let k = ctx("Q(sqrt 2)");
        let control = negative_control_t2(&k, 20, 5, SuiteCaps::default()).unwrap();
        assert_eq!(control.trials, 20);
        assert_eq!(control.violations, 20);
        assert!(control.first_violation.is_some());
    }

    #[test]
    fn characteristic_violation_control_finds_failures() {
        let control = negative_control_ff(50, 9, SuiteCaps::default()).unwrap();
        assert!(
            control.violations > 0,
            "characteristic-divisible outer degrees must break the equality somewhere"
        );
    }

    #[test]
    fn set_membership_suite_reports_rather_than_aborts() {
        let k = ctx("set:realsUnionImag");
        let report = run_suite(&k, TheoremId::DeficitSetT1, 200, 1, SuiteCaps::default()).unwrap();
        assert_eq!(
            report.confirms + report.vacuous + report.counterexamples.len() as u64,
            200,
            "empirical runs classify every trial"
        );
        for record in &report.counterexamples {
            assert!(record.verdict.hypotheses_met);
            assert!(!record.verdict.conclusion_holds);
            assert_eq!(record.inputs.len(), 2);
        }
    }

    #[test]
    fn the_default_plan_covers_every_statement() {
        let plan = default_suite_plan();
        for id in TheoremId::ALL {
            assert!(plan.iter().any(|e| e.id == id), "{id} missing from plan");
        }
        // Every row is admissible on its context.
        for entry in &plan {
            let k = ctx(entry.field);
            super::super::check_admissible(&k, entry.id).unwrap();
        }
    }
}
