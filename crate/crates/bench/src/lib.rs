//! Shared input builders for the benchmark targets.

use deficitlab_core::{
    default_pool, random_poly, CoeffForce, FieldContext, GenConstraints, NonFRequirement, Poly1,
};

/// A reproducible polynomial of the requested degree over `ctx`.
pub fn bench_poly(ctx: &FieldContext, degree: usize, seed: u64) -> Poly1 {
    let pool = default_pool(ctx).expect("pool");
    random_poly(
        ctx,
        &GenConstraints {
            degree: (degree, degree),
            lead: CoeffForce::Any,
            constant: CoeffForce::Any,
            non_f: NonFRequirement::None,
            pool,
            seed,
        },
    )
    .expect("bench input")
}
