//! Mechanical verification of the composition and iteration laws the
//! deficit satisfies: each statement gets a hypothesis list and a
//! conclusion predicate, evaluated independently on concrete inputs, plus
//! seeded random suites, fixed worked examples, and a decomposition
//! obstruction check built on the same machinery.

pub mod decompose;
pub mod fixtures;
pub mod generate;
pub mod oracle;
pub mod suite;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::context::{ContextSpec, FieldContext};
use crate::error::{Error, Result};
use crate::poly::{compose, deficit1, is_in_f_poly, iterate, DeficitReport, Poly1};
use crate::poly2::{compose_uni_bi, deficit2, is_in_f_poly2, Poly2};

/// Identifiers for the verifiable statements. The short names are the
/// stable public vocabulary used by reports and the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum TheoremId {
    /// Nonconstant p with F-leading coefficients on both sides: the
    /// composition leaves F[x] and keeps the inner deficit.
    T1,
    /// Variant of [`TheoremId::T1`] anchored at the inner constant term.
    C1,
    /// Inner polynomial wholly in F[x]: deficits multiply.
    T1A,
    /// Product of leading coefficients in F: deficit cannot drop.
    T2,
    /// Membership conclusion of [`TheoremId::T1`] without any condition
    /// on the outer leading coefficient.
    P1,
    /// Inner in F[x] and composition in F[x] force the outer into F[x].
    L1,
    /// Composition in F[x] with anchored inner ends forces a factor into
    /// F[x]; both when the composition is nonconstant.
    T3,
    /// Iteration analogue of [`TheoremId::T1`].
    T4,
    /// Iteration never lowers the deficit.
    #[serde(rename = "ITER_INEQ")]
    IterIneq,
    /// Iterate in F[x] with F-leading coefficient forces p into F[x].
    T5,
    /// [`TheoremId::T1`] weakened to an inequality when F is only a ring.
    #[serde(rename = "RING")]
    Ring,
    /// [`TheoremId::T1`] over finite characteristic, guarded by the
    /// characteristic not dividing the outer degree.
    #[serde(rename = "FF")]
    Ff,
    /// Two-variable analogue of [`TheoremId::T1`] over homogeneous parts.
    #[serde(rename = "TWO_VAR")]
    TwoVar,
    /// [`TheoremId::T1`]'s predicates evaluated under a set-membership
    /// context; empirical, with counterexamples reported rather than
    /// treated as bugs.
    #[serde(rename = "DEFICIT_SET_T1")]
    DeficitSetT1,
}

impl TheoremId {
    /// Every id, in presentation order.
    pub const ALL: [TheoremId; 14] = [
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
        TheoremId::Ring,
        TheoremId::Ff,
        TheoremId::TwoVar,
        TheoremId::DeficitSetT1,
    ];

    /// The stable short name.
    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::T1 => "T1",
            TheoremId::C1 => "C1",
            TheoremId::T1A => "T1A",
            TheoremId::T2 => "T2",
            TheoremId::P1 => "P1",
            TheoremId::L1 => "L1",
            TheoremId::T3 => "T3",
            TheoremId::T4 => "T4",
            TheoremId::IterIneq => "ITER_INEQ",
            TheoremId::T5 => "T5",
            TheoremId::Ring => "RING",
            TheoremId::Ff => "FF",
            TheoremId::TwoVar => "TWO_VAR",
            TheoremId::DeficitSetT1 => "DEFICIT_SET_T1",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let normalized = s.trim().to_ascii_uppercase().replace('-', "_");
        TheoremId::ALL
            .iter()
            .find(|id| id.as_str() == normalized)
            .copied()
            .ok_or_else(|| Error::RejectSpec {
                reason: format!("unknown statement id '{s}'"),
            })
    }
}

/// One named hypothesis with its evaluation on the given inputs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Hypothesis {
    /// What the hypothesis asserts.
    pub name: &'static str,
    /// Whether the inputs satisfy it.
    pub met: bool,
}

fn hyp(name: &'static str, met: bool) -> Hypothesis {
    Hypothesis { name, met }
}

/// How a verdict classifies the inputs against the statement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Classification {
    /// Hypotheses met and conclusion holds.
    #[serde(rename = "CONFIRMS")]
    Confirms,
    /// At least one hypothesis unmet; the conclusion is still evaluated.
    #[serde(rename = "VACUOUS")]
    Vacuous,
    /// Hypotheses met but the conclusion fails. Impossible for a proved
    /// statement on its intended contexts; reaching it there is a bug.
    #[serde(rename = "COUNTEREXAMPLE_TO_CONCLUSION")]
    CounterexampleToConclusion,
}

/// A deficit report tagged with which polynomial it describes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LabeledReport {
    /// "p", "q", "composed", or "iterate".
    pub label: String,
    /// The underlying scan.
    #[serde(flatten)]
    pub report: DeficitReport,
}

/// Full evaluation of one statement on concrete inputs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremVerdict {
    /// Which statement was checked.
    pub id: TheoremId,
    /// Per-hypothesis breakdown.
    pub hypotheses: Vec<Hypothesis>,
    /// True iff every hypothesis is met.
    pub hypotheses_met: bool,
    /// The conclusion, evaluated regardless of the hypotheses; deficit
    /// comparisons involving an undefined deficit count as false.
    pub conclusion_holds: bool,
    /// Summary classification.
    pub classification: Classification,
    /// Deficit reports (with offending coefficient indices) for every
    /// nonzero polynomial involved.
    pub witnesses: Vec<LabeledReport>,
}

/// Inputs for [`verify_theorem`], shaped per statement arity.
#[derive(Debug, Clone, Copy)]
pub enum TheoremInputs<'a> {
    /// Outer and inner univariate polynomials.
    Pair { p: &'a Poly1, q: &'a Poly1 },
    /// A univariate polynomial and an iteration count r ≥ 1.
    Iterate { p: &'a Poly1, r: u32 },
    /// A univariate outer and a bivariate inner polynomial.
    UniBi { p: &'a Poly1, q: &'a Poly2 },
}

fn assemble(
    id: TheoremId,
    hypotheses: Vec<Hypothesis>,
    conclusion_holds: bool,
    witnesses: Vec<LabeledReport>,
) -> TheoremVerdict {
    let hypotheses_met = hypotheses.iter().all(|h| h.met);
    let classification = if !hypotheses_met {
        Classification::Vacuous
    } else if conclusion_holds {
        Classification::Confirms
    } else {
        Classification::CounterexampleToConclusion
    };
    TheoremVerdict {
        id,
        hypotheses,
        hypotheses_met,
        conclusion_holds,
        classification,
        witnesses,
    }
}

fn deficits_eq(a: &Option<DeficitReport>, b: &Option<DeficitReport>) -> bool {
    matches!((a, b), (Some(x), Some(y)) if x.deficit == y.deficit)
}

fn deficits_ge(a: &Option<DeficitReport>, b: &Option<DeficitReport>) -> bool {
    matches!((a, b), (Some(x), Some(y)) if x.deficit >= y.deficit)
}

fn report_of(ctx: &FieldContext, p: &Poly1) -> Result<Option<DeficitReport>> {
    if p.is_zero() {
        Ok(None)
    } else {
        deficit1(ctx, p).map(Some)
    }
}

fn report2_of(ctx: &FieldContext, p: &Poly2) -> Result<Option<DeficitReport>> {
    if p.is_zero() {
        Ok(None)
    } else {
        deficit2(ctx, p).map(Some)
    }
}

/// Membership of the leading coefficient, vacuously true for zero.
fn lead_in_f(ctx: &FieldContext, p: &Poly1) -> Result<bool> {
    if p.is_zero() {
        Ok(true)
    } else {
        ctx.is_in_subfield(p.leading()?)
    }
}

/// True when some coefficient of `q` at index ≥ 1 lies outside F.
pub(crate) fn some_non_f_at_ge1(ctx: &FieldContext, q: &Poly1) -> Result<bool> {
    for c in q.coeffs().iter().skip(1) {
        if !ctx.is_in_subfield(c)? {
            return Ok(true);
        }
    }
    Ok(false)
}

fn witness(label: &str, report: &Option<DeficitReport>) -> Option<LabeledReport> {
    report.as_ref().map(|r| LabeledReport {
        label: label.to_string(),
        report: r.clone(),
    })
}

/// Evaluates one statement on the inputs: per-hypothesis breakdown and
/// conclusion, judged independently of each other.
pub fn verify_theorem(
    ctx: &FieldContext,
    id: TheoremId,
    inputs: TheoremInputs<'_>,
) -> Result<TheoremVerdict> {
    check_admissible(ctx, id)?;
    match (id, inputs) {
        (
            TheoremId::T1
            | TheoremId::C1
            | TheoremId::T1A
            | TheoremId::T2
            | TheoremId::P1
            | TheoremId::L1
            | TheoremId::T3
            | TheoremId::Ring
            | TheoremId::Ff
            | TheoremId::DeficitSetT1,
            TheoremInputs::Pair { p, q },
        ) => check_pair(ctx, id, p, q),
        (TheoremId::T4 | TheoremId::IterIneq | TheoremId::T5, TheoremInputs::Iterate { p, r }) => {
            if r == 0 {
                return Err(Error::ArityMismatch {
                    reason: format!("{id} needs an iteration count r >= 1"),
                });
            }
            check_iterate(ctx, id, p, r)
        }
        (TheoremId::TwoVar, TheoremInputs::UniBi { p, q }) => check_two_var(ctx, p, q),
        (_, inputs) => Err(Error::ArityMismatch {
            reason: format!("{id} does not take {} inputs", inputs_shape(&inputs)),
        }),
    }
}

fn inputs_shape(inputs: &TheoremInputs<'_>) -> &'static str {
    match inputs {
        TheoremInputs::Pair { .. } => "(p, q) pair",
        TheoremInputs::Iterate { .. } => "(p, r) iteration",
        TheoremInputs::UniBi { .. } => "univariate-outer/bivariate-inner",
    }
}

fn check_admissible(ctx: &FieldContext, id: TheoremId) -> Result<()> {
    let (ok, requirement) = match id {
        TheoremId::Ring => (
            matches!(ctx.spec(), ContextSpec::RingZInQ),
            "the integers-inside-rationals ring context",
        ),
        TheoremId::Ff => (
            matches!(ctx.spec(), ContextSpec::FiniteField { .. }),
            "a finite-field context",
        ),
        TheoremId::DeficitSetT1 => (
            matches!(ctx.spec(), ContextSpec::SetContext { .. }),
            "a set-membership context",
        ),
        _ => (
            ctx.f_is_field() && ctx.characteristic() == 0,
            "a characteristic-0 field pair",
        ),
    };
    if ok {
        Ok(())
    } else {
        Err(Error::InadmissibleContext {
            reason: format!("{id} needs {requirement}; the context is {}", ctx.name()),
        })
    }
}

fn check_pair(ctx: &FieldContext, id: TheoremId, p: &Poly1, q: &Poly1) -> Result<TheoremVerdict> {
    let composed = compose(ctx, p, q)?;
    let p_report = report_of(ctx, p)?;
    let q_report = report_of(ctx, q)?;
    let c_report = report_of(ctx, &composed)?;
    let p_in_f = is_in_f_poly(ctx, p)?;
    let q_in_f = is_in_f_poly(ctx, q)?;
    let c_in_f = is_in_f_poly(ctx, &composed)?;
    let p_nonconstant = !p.is_constant();
    let p_lead = lead_in_f(ctx, p)?;
    let q_lead = lead_in_f(ctx, q)?;
    let q_const = ctx.is_in_subfield(&q.coeff_or_zero(ctx, 0))?;
    let q_witness = some_non_f_at_ge1(ctx, q)?;

    let (hypotheses, conclusion_holds) = match id {
        TheoremId::T1 | TheoremId::Ring | TheoremId::Ff | TheoremId::DeficitSetT1 => {
            let mut hypotheses = vec![
                hyp("p is not constant", p_nonconstant),
                hyp("q is not in F[x]", !q_in_f),
                hyp("leading coefficient of p is in F", p_lead),
                hyp("leading coefficient of q is in F", q_lead),
                hyp(
                    "some coefficient of q at index >= 1 is outside F",
                    q_witness,
                ),
            ];
            if id == TheoremId::Ff {
                let t = ctx.characteristic();
                let coprime = !p.is_zero() && t > 0 && (p.degree()? as u64) % t != 0;
                hypotheses.push(hyp("characteristic does not divide deg(p)", coprime));
            }
            let conclusion = if id == TheoremId::Ring {
                deficits_ge(&c_report, &q_report)
            } else {
                !c_in_f && deficits_eq(&c_report, &q_report)
            };
            (hypotheses, conclusion)
        }
        TheoremId::C1 => (
            vec![
                hyp("p is not constant", p_nonconstant),
                hyp("q is not in F[x]", !q_in_f),
                hyp("leading coefficient of p is in F", p_lead),
                hyp("leading coefficient of q is in F", q_lead),
                hyp("constant term of q is in F", q_const),
            ],
            !c_in_f && deficits_eq(&c_report, &q_report),
        ),
        TheoremId::T1A => {
            let product = match (&c_report, &p_report, &q_report) {
                (Some(c), Some(p), Some(q)) => c.deficit == p.deficit * q.deficit,
                _ => false,
            };
            (
                vec![
                    hyp("q is in F[x]", q_in_f),
                    hyp("p is nonzero", !p.is_zero()),
                    hyp("q is nonzero", !q.is_zero()),
                    hyp(
                        "composition is nonzero (deficit defined)",
                        c_report.is_some(),
                    ),
                ],
                product,
            )
        }
        TheoremId::T2 => {
            let product_in_f = if p.is_zero() || q.is_zero() {
                false
            } else {
                ctx.is_in_subfield(&ctx.mul(p.leading()?, q.leading()?)?)?
            };
            (
                vec![
                    hyp("p is not constant", p_nonconstant),
                    hyp("product of the leading coefficients is in F", product_in_f),
                    hyp("q is nonzero", !q.is_zero()),
                    hyp(
                        "composition is nonzero (deficit defined)",
                        c_report.is_some(),
                    ),
                ],
                deficits_ge(&c_report, &q_report),
            )
        }
        TheoremId::P1 => (
            vec![
                hyp("p is not constant", p_nonconstant),
                hyp("q is not in F[x]", !q_in_f),
                hyp("leading coefficient of q is in F", q_lead),
                hyp(
                    "some coefficient of q at index >= 1 is outside F",
                    q_witness,
                ),
            ],
            !c_in_f,
        ),
        TheoremId::L1 => (
            vec![
                hyp("q is in F[x]", q_in_f),
                hyp("q is not constant", !q.is_constant()),
                hyp("composition is in F[x]", c_in_f),
                hyp("p is nonzero", !p.is_zero()),
            ],
            p_in_f,
        ),
        TheoremId::T3 => {
            let c_nonconstant = !composed.is_constant();
            (
                vec![
                    hyp("composition is in F[x]", c_in_f),
                    hyp("constant term of q is in F", q_const),
                    hyp("leading coefficient of q is in F", q_lead),
                ],
                (p_in_f || q_in_f) && (!c_nonconstant || (p_in_f && q_in_f)),
            )
        }
        _ => unreachable!("non-pair ids are dispatched elsewhere"),
    };

    let witnesses = [
        witness("p", &p_report),
        witness("q", &q_report),
        witness("composed", &c_report),
    ]
    .into_iter()
    .flatten()
    .collect();
    Ok(assemble(id, hypotheses, conclusion_holds, witnesses))
}

/// Σ_{k=0}^{r-1} a^k — the factor multiplying the constant term of a
/// degree-1 polynomial's r-th iterate.
fn geometric_sum(
    ctx: &FieldContext,
    a: &crate::element::Element,
    r: u32,
) -> Result<crate::element::Element> {
    let mut sum = ctx.zero();
    let mut power = ctx.one();
    for _ in 0..r {
        sum = ctx.add(&sum, &power)?;
        power = ctx.mul(&power, a)?;
    }
    Ok(sum)
}

/// The nondegeneracy guard for iteration statements at degree 1: the r-th
/// iterate of a₁x + a₀ is a₁^r x + a₀·Σ_{k<r} a₁^k, and the sum can
/// vanish (a₁ = −1, r even), collapsing the iterate into F[x] regardless
/// of a₀. Degree ≥ 2 is always nondegenerate.
fn iterate_nondegenerate(ctx: &FieldContext, p: &Poly1, r: u32) -> Result<bool> {
    if p.is_zero() || p.degree()? != 1 {
        return Ok(true);
    }
    Ok(!geometric_sum(ctx, p.leading()?, r)?.is_zero())
}

const NONDEG_NAME: &str =
    "degree-1 iterate nondegeneracy (deg p >= 2 or sum_{k<r} a_1^k is nonzero)";

fn check_iterate(ctx: &FieldContext, id: TheoremId, p: &Poly1, r: u32) -> Result<TheoremVerdict> {
    let iterated = if p.is_zero() {
        Poly1::zero(ctx)
    } else {
        iterate(ctx, p, r)?
    };
    let p_report = report_of(ctx, p)?;
    let it_report = report_of(ctx, &iterated)?;
    let p_in_f = is_in_f_poly(ctx, p)?;
    let it_in_f = is_in_f_poly(ctx, &iterated)?;
    let p_lead = lead_in_f(ctx, p)?;
    let nondegenerate = iterate_nondegenerate(ctx, p, r)?;

    let (hypotheses, conclusion_holds) = match id {
        TheoremId::T4 => (
            vec![
                hyp("p is not in F[x]", !p_in_f),
                hyp("leading coefficient of p is in F", p_lead),
                hyp(NONDEG_NAME, nondegenerate),
            ],
            !it_in_f && deficits_eq(&it_report, &p_report),
        ),
        TheoremId::IterIneq => (
            vec![hyp("p is nonzero", !p.is_zero())],
            deficits_ge(&it_report, &p_report),
        ),
        TheoremId::T5 => (
            vec![
                hyp("p is nonzero", !p.is_zero()),
                hyp("leading coefficient of p is in F", p_lead),
                hyp("the r-th iterate is in F[x]", it_in_f),
                hyp(NONDEG_NAME, nondegenerate),
            ],
            p_in_f,
        ),
        _ => unreachable!("non-iterate ids are dispatched elsewhere"),
    };

    let witnesses = [witness("p", &p_report), witness("iterate", &it_report)]
        .into_iter()
        .flatten()
        .collect();
    Ok(assemble(id, hypotheses, conclusion_holds, witnesses))
}

fn check_two_var(ctx: &FieldContext, p: &Poly1, q: &Poly2) -> Result<TheoremVerdict> {
    let composed = compose_uni_bi(ctx, p, q)?;
    let p_nonconstant = !p.is_constant();
    let p_lead = lead_in_f(ctx, p)?;
    let q_in_f = is_in_f_poly2(ctx, q)?;
    let c_in_f = is_in_f_poly2(ctx, &composed)?;
    let p_report = report_of(ctx, p)?;
    let q_report = report2_of(ctx, q)?;
    let c_report = report2_of(ctx, &composed)?;

    let (top_in_f, part_witness) = if q.is_zero() {
        (true, false)
    } else {
        let parts = q.parts();
        let mut top = true;
        for (_, c) in parts.last().expect("nonzero has a top part") {
            if !ctx.is_in_subfield(c)? {
                top = false;
                break;
            }
        }
        let mut witness_found = false;
        'outer: for part in parts.iter().skip(1) {
            for (_, c) in part {
                if !ctx.is_in_subfield(c)? {
                    witness_found = true;
                    break 'outer;
                }
            }
        }
        (top, witness_found)
    };

    let hypotheses = vec![
        hyp("p is not constant", p_nonconstant),
        hyp("q is not in F[x,y]", !q_in_f),
        hyp("leading coefficient of p is in F", p_lead),
        hyp("top homogeneous part of q is in F[x,y]", top_in_f),
        hyp(
            "some homogeneous part of q of degree >= 1 is outside F[x,y]",
            part_witness,
        ),
    ];
    let conclusion_holds = !c_in_f && deficits_eq(&c_report, &q_report);
    let witnesses = [
        witness("p", &p_report),
        witness("q", &q_report),
        witness("composed", &c_report),
    ]
    .into_iter()
    .flatten()
    .collect();
    Ok(assemble(
        TheoremId::TwoVar,
        hypotheses,
        conclusion_holds,
        witnesses,
    ))
}
