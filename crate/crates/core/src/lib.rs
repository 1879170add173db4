//! Exact arithmetic over field pairs F ⊂ K, polynomial composition in one
//! and two variables, and the F-deficit invariant, together with seeded
//! verification suites for the composition laws the deficit satisfies.

pub mod context;
pub mod element;
pub mod error;
pub mod parser;
pub mod poly;
pub mod poly2;
pub mod theorems;

pub use context::{make_context, ContextSpec, CtxId, FieldContext, SetId};
pub use element::Element;
pub use error::{Error, Result};
pub use parser::{
    format_element, format_poly1, format_poly2, parse_expr_tree, parse_poly1, parse_poly2, ExprTree,
};
pub use poly::{
    add, compose, deficit1, is_in_f_poly, iterate, iterate_capped, mul, neg, scale, sub,
    DeficitReport, Poly1, DEFAULT_COEFF_CAP,
};
pub use poly2::{
    add2, compose_uni_bi, compose_uni_bi_capped, deficit2, diag_subst_bi, diag_subst_uni,
    homogeneous_parts, is_in_f_poly2, mul2, neg2, scale2, sub2, Poly2,
};
pub use theorems::decompose::{decomposition_obstruction, Obstruction};
pub use theorems::fixtures::{worked_examples, FixtureOutcome};
pub use theorems::generate::{
    default_pool, random_poly, random_poly2, subfield_pool, CoeffForce, GenConstraints,
    GenConstraints2, NonFRequirement,
};
pub use theorems::oracle::{
    compose_oracle, compose_oracle2, compose_oracle2_capped, compose_oracle_capped,
};
pub use theorems::suite::{
    default_suite_plan, negative_control_ff, negative_control_t2, run_suite, CounterexampleRecord,
    NegativeControlReport, PlanEntry, SuiteCaps, SuiteReport,
};
pub use theorems::{
    verify_theorem, Classification, Hypothesis, LabeledReport, TheoremId, TheoremInputs,
    TheoremVerdict,
};
