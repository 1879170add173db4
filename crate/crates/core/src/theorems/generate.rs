//! Deterministic, constraint-driven random polynomials for the
//! verification suites: membership forces on chosen coefficients, a
//! some-coefficient-outside-F requirement, and seeded reproducibility.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::context::FieldContext;
use crate::element::Element;
use crate::error::{Error, Result};
use crate::poly::Poly1;
use crate::poly2::Poly2;

/// Membership force on a single coefficient slot.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoeffForce {
    /// Sample from the whole pool.
    Any,
    /// Sample only elements inside F.
    InF,
    /// Sample only elements outside F.
    NotInF,
}

/// Whether the output must carry a coefficient outside F somewhere.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NonFRequirement {
    /// No requirement.
    None,
    /// Some coefficient at index ≥ 1 must lie outside F.
    SomeIndexGe1,
    /// Some coefficient at any index must lie outside F.
    SomeIndexAny,
}

/// Everything [`random_poly`] needs to draw one univariate polynomial.
#[derive(Debug, Clone)]
pub struct GenConstraints {
    /// Inclusive degree range; the output's degree lands inside it.
    pub degree: (usize, usize),
    /// Force on the leading coefficient (always nonzero regardless).
    pub lead: CoeffForce,
    /// Force on the constant term.
    pub constant: CoeffForce,
    /// Outside-F requirement over the whole coefficient list.
    pub non_f: NonFRequirement,
    /// Candidate coefficients; classified into F / non-F internally.
    pub pool: Vec<Element>,
    /// Seed for the deterministic draw.
    pub seed: u64,
}

/// Everything [`random_poly2`] needs to draw one bivariate polynomial.
#[derive(Debug, Clone)]
pub struct GenConstraints2 {
    /// Inclusive total-degree range.
    pub degree: (usize, usize),
    /// Force every coefficient of the top homogeneous part into F.
    pub top_in_f: bool,
    /// Require some homogeneous part of degree ≥ 1 outside F[x,y].
    pub non_f_part: bool,
    /// Candidate coefficients.
    pub pool: Vec<Element>,
    /// Seed for the deterministic draw.
    pub seed: u64,
}

struct ClassifiedPool {
    in_f: Vec<Element>,
    out_f: Vec<Element>,
}

fn classify(ctx: &FieldContext, pool: &[Element]) -> Result<ClassifiedPool> {
    if pool.is_empty() {
        return Err(Error::UnsatisfiableConstraints {
            reason: "coefficient pool is empty".into(),
        });
    }
    let mut in_f = Vec::new();
    let mut out_f = Vec::new();
    for e in pool {
        if ctx.is_in_subfield(e)? {
            in_f.push(e.clone());
        } else {
            out_f.push(e.clone());
        }
    }
    Ok(ClassifiedPool { in_f, out_f })
}

fn combine_forces(a: CoeffForce, b: CoeffForce) -> Option<CoeffForce> {
    match (a, b) {
        (CoeffForce::Any, f) | (f, CoeffForce::Any) => Some(f),
        (x, y) if x == y => Some(x),
        _ => None,
    }
}

impl ClassifiedPool {
    /// Candidates for one slot: force class, optionally restricted to
    /// non-F (designated witness slot) and to nonzero (leading slot).
    fn candidates(
        &self,
        force: CoeffForce,
        designated_non_f: bool,
        nonzero: bool,
    ) -> Vec<&Element> {
        let base: Box<dyn Iterator<Item = &Element>> = match (force, designated_non_f) {
            (CoeffForce::InF, true) => return Vec::new(),
            (_, true) | (CoeffForce::NotInF, false) => Box::new(self.out_f.iter()),
            (CoeffForce::InF, false) => Box::new(self.in_f.iter()),
            (CoeffForce::Any, false) => Box::new(self.in_f.iter().chain(self.out_f.iter())),
        };
        base.filter(|e| !nonzero || !e.is_zero()).collect()
    }
}

/// The force on slot `j` of a degree-`d` polynomial under `c`, or `None`
/// when the leading and constant forces contradict each other at d = 0.
fn slot_force(c: &GenConstraints, d: usize, j: usize) -> Option<CoeffForce> {
    if d == 0 {
        combine_forces(c.lead, c.constant)
    } else if j == d {
        Some(c.lead)
    } else if j == 0 {
        Some(c.constant)
    } else {
        Some(CoeffForce::Any)
    }
}

/// Slots of a degree-`d` draw that could carry the non-F witness.
fn witness_positions(c: &GenConstraints, pool: &ClassifiedPool, d: usize) -> Vec<usize> {
    let lo = match c.non_f {
        NonFRequirement::None => return Vec::new(),
        NonFRequirement::SomeIndexGe1 => 1,
        NonFRequirement::SomeIndexAny => 0,
    };
    (lo..=d)
        .filter(|&j| match slot_force(c, d, j) {
            Some(force) => !pool.candidates(force, true, j == d).is_empty(),
            None => false,
        })
        .collect()
}

fn degree_is_feasible(c: &GenConstraints, pool: &ClassifiedPool, d: usize) -> bool {
    for j in 0..=d {
        let Some(force) = slot_force(c, d, j) else {
            return false;
        };
        if pool.candidates(force, false, j == d).is_empty() {
            return false;
        }
    }
    match c.non_f {
        NonFRequirement::None => true,
        _ => !witness_positions(c, pool, d).is_empty(),
    }
}

/// Draws one polynomial satisfying every constraint in `c`,
/// deterministically for a fixed seed.
pub fn random_poly(ctx: &FieldContext, c: &GenConstraints) -> Result<Poly1> {
    let (lo, hi) = c.degree;
    if lo > hi {
        return Err(Error::UnsatisfiableConstraints {
            reason: format!("degree range {lo}..={hi} is empty"),
        });
    }
    let pool = classify(ctx, &c.pool)?;
    let feasible: Vec<usize> = (lo..=hi)
        .filter(|&d| degree_is_feasible(c, &pool, d))
        .collect();
    if feasible.is_empty() {
        return Err(Error::UnsatisfiableConstraints {
            reason: format!(
                "no degree in {lo}..={hi} satisfies the forces \
                 (pool holds {} element(s) in F, {} outside F)",
                pool.in_f.len(),
                pool.out_f.len()
            ),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(c.seed);
    let d = feasible[rng.random_range(0..feasible.len())];
    let witness = match c.non_f {
        NonFRequirement::None => None,
        _ => {
            let positions = witness_positions(c, &pool, d);
            Some(positions[rng.random_range(0..positions.len())])
        }
    };
    let mut coeffs = Vec::with_capacity(d + 1);
    for j in 0..=d {
        let force = slot_force(c, d, j).expect("feasible degree has no contradictions");
        let cands = pool.candidates(force, witness == Some(j), j == d);
        coeffs.push(cands[rng.random_range(0..cands.len())].clone());
    }
    Poly1::new(ctx, coeffs)
}

/// Draws one bivariate polynomial satisfying `c`, deterministically for a
/// fixed seed. Parts are sampled sparsely: each monomial slot draws from
/// the pool, which contains zero, so most parts stay short.
pub fn random_poly2(ctx: &FieldContext, c: &GenConstraints2) -> Result<Poly2> {
    let (lo, hi) = c.degree;
    if lo > hi {
        return Err(Error::UnsatisfiableConstraints {
            reason: format!("total-degree range {lo}..={hi} is empty"),
        });
    }
    let pool = classify(ctx, &c.pool)?;
    let top_force = if c.top_in_f {
        CoeffForce::InF
    } else {
        CoeffForce::Any
    };
    let top_nonzero = pool.candidates(top_force, false, true);
    let feasible: Vec<usize> = (lo..=hi)
        .filter(|&m| {
            if top_nonzero.is_empty() {
                return false;
            }
            if c.non_f_part {
                let max_witness = if c.top_in_f { m.saturating_sub(1) } else { m };
                if max_witness < 1 || pool.out_f.is_empty() {
                    return false;
                }
            }
            true
        })
        .collect();
    if feasible.is_empty() {
        return Err(Error::UnsatisfiableConstraints {
            reason: format!(
                "no total degree in {lo}..={hi} admits the part constraints \
                 (pool holds {} element(s) in F, {} outside F)",
                pool.in_f.len(),
                pool.out_f.len()
            ),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(c.seed);
    let m = feasible[rng.random_range(0..feasible.len())];
    let witness_part = if c.non_f_part {
        let max_witness = if c.top_in_f { m - 1 } else { m };
        Some(rng.random_range(1..=max_witness))
    } else {
        None
    };
    let all: Vec<&Element> = pool.in_f.iter().chain(pool.out_f.iter()).collect();
    let in_f_only: Vec<&Element> = pool.in_f.iter().collect();
    let out_f_only: Vec<&Element> = pool.out_f.iter().collect();
    let mut monomials: Vec<(usize, usize, Element)> = Vec::new();
    for k in 0..=m {
        let slots: Vec<&Element> = if k == m && c.top_in_f {
            in_f_only.clone()
        } else {
            all.clone()
        };
        let mut part: Vec<Element> = (0..=k)
            .map(|_| slots[rng.random_range(0..slots.len())].clone())
            .collect();
        if k == m && part.iter().all(|e| e.is_zero()) {
            let slot = rng.random_range(0..part.len());
            part[slot] = top_nonzero[rng.random_range(0..top_nonzero.len())].clone();
        }
        if witness_part == Some(k) && !part.iter().any(|e| !e.is_zero() && is_out(&pool, e)) {
            let slot = rng.random_range(0..part.len());
            part[slot] = out_f_only[rng.random_range(0..out_f_only.len())].clone();
        }
        for (xe, e) in part.into_iter().enumerate() {
            if !e.is_zero() {
                monomials.push((xe, k - xe, e));
            }
        }
    }
    Poly2::new(ctx, monomials)
}

fn is_out(pool: &ClassifiedPool, e: &Element) -> bool {
    pool.out_f.contains(e)
}

/// A small readable candidate pool mixing elements inside and outside F,
/// adapted to the context's flavor.
pub fn default_pool(ctx: &FieldContext) -> Result<Vec<Element>> {
    use crate::context::ContextSpec;
    let mut pool = vec![ctx.zero(), ctx.one(), ctx.from_i64(-1), ctx.from_i64(2)];
    match ctx.spec() {
        ContextSpec::Rationals => {
            pool.push(ctx.from_i64(-2));
            pool.push(half(ctx)?);
        }
        ContextSpec::MultiQuadratic { radicals } => {
            pool.push(ctx.from_i64(-2));
            pool.push(half(ctx)?);
            for &d in radicals {
                pool.push(ctx.sqrt_atom(d)?);
            }
            let first = ctx.sqrt_atom(radicals[0])?;
            pool.push(ctx.add(&ctx.one(), &first)?);
        }
        ContextSpec::Transcendental => {
            pool.push(ctx.from_i64(-2));
            pool.push(half(ctx)?);
            let t = ctx.t_atom()?;
            pool.push(t.clone());
            pool.push(ctx.add(&ctx.one(), &t)?);
            pool.push(ctx.mul(&ctx.from_i64(2), &t)?);
        }
        ContextSpec::FiniteField { n, .. } => {
            if *n >= 2 {
                let g = ctx.generator()?;
                pool.push(ctx.add(&g, &ctx.one())?);
                pool.push(g);
            }
        }
        ContextSpec::RingZInQ => {
            pool.push(ctx.from_i64(-2));
            pool.push(half(ctx)?);
            pool.push(rational(ctx, 3, 2)?);
            pool.push(rational(ctx, 2, 3)?);
            pool.push(rational(ctx, -1, 2)?);
        }
        ContextSpec::SetContext { set } => match set {
            crate::context::SetId::ComplementQ => {
                pool.push(half(ctx)?);
                let t = ctx.t_atom()?;
                pool.push(t.clone());
                pool.push(ctx.add(&ctx.one(), &t)?);
                pool.push(ctx.mul(&ctx.from_i64(2), &t)?);
            }
            crate::context::SetId::RealsUnionImag => {
                pool.push(half(ctx)?);
                let i = ctx.sqrt_atom(-1)?;
                pool.push(i.clone());
                pool.push(ctx.mul(&ctx.from_i64(2), &i)?);
                pool.push(ctx.add(&ctx.one(), &i)?);
                pool.push(ctx.add(&ctx.from_i64(2), &i)?);
            }
        },
    }
    let mut deduped: Vec<Element> = Vec::with_capacity(pool.len());
    for e in pool {
        if !deduped.contains(&e) {
            deduped.push(e);
        }
    }
    Ok(deduped)
}

fn half(ctx: &FieldContext) -> Result<Element> {
    rational(ctx, 1, 2)
}

fn rational(ctx: &FieldContext, numer: i64, denom: i64) -> Result<Element> {
    use num::rational::BigRational;
    use num::BigInt;
    ctx.from_rational(&BigRational::new(BigInt::from(numer), BigInt::from(denom)))
}

/// The subset of `pool` lying inside F — handy for drawing polynomials
/// that must live entirely in F[x].
pub fn subfield_pool(ctx: &FieldContext, pool: &[Element]) -> Result<Vec<Element>> {
    let mut out = Vec::new();
    for e in pool {
        if ctx.is_in_subfield(e)? {
            out.push(e.clone());
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::deficit1;

    fn ctx(spec: &str) -> FieldContext {
        FieldContext::parse_spec(spec).expect("context")
    }

    fn t1_inner_constraints(k: &FieldContext, seed: u64) -> GenConstraints {
        GenConstraints {
            degree: (3, 3),
            lead: CoeffForce::InF,
            constant: CoeffForce::Any,
            non_f: NonFRequirement::SomeIndexGe1,
            pool: default_pool(k).unwrap(),
            seed,
        }
    }

    #[test]
    fn seeded_draw_satisfies_every_constraint() {
        let k = ctx("Q(sqrt 2)");
        let q = random_poly(&k, &t1_inner_constraints(&k, 7)).unwrap();
        assert_eq!(q.degree().unwrap(), 3);
        assert!(k.is_in_subfield(q.leading().unwrap()).unwrap());
        let witness = (1..=3).any(|j| !k.is_in_subfield(&q.coeff_or_zero(&k, j)).unwrap());
        assert!(witness, "expected a coefficient outside F at index >= 1");
        // The deficit of such a polynomial is at least 1 by construction.
        assert!(deficit1(&k, &q).unwrap().deficit >= 1);
    }

    #[test]
    fn same_seed_reproduces_the_same_polynomial() {
        let k = ctx("Q(sqrt 2, sqrt 3)");
        let a = random_poly(&k, &t1_inner_constraints(&k, 99)).unwrap();
        let b = random_poly(&k, &t1_inner_constraints(&k, 99)).unwrap();
        assert_eq!(a, b);
        let c = random_poly(&k, &t1_inner_constraints(&k, 100)).unwrap();
        // Overwhelmingly likely to differ; the draw space is large.
        assert_ne!(a, c);
    }

    #[test]
    fn pool_without_non_f_elements_is_unsatisfiable_when_one_is_required() {
        let k = ctx("Q");
        let err = random_poly(&k, &t1_inner_constraints(&k, 7)).unwrap_err();
        assert_eq!(err.code(), "UNSATISFIABLE_CONSTRAINTS");
    }

    #[test]
    fn contradictory_and_empty_constraint_sets_are_rejected() {
        let k = ctx("Q(sqrt 2)");
        let pool = default_pool(&k).unwrap();
        let empty_range = GenConstraints {
            degree: (4, 2),
            lead: CoeffForce::Any,
            constant: CoeffForce::Any,
            non_f: NonFRequirement::None,
            pool: pool.clone(),
            seed: 0,
        };
        assert_eq!(
            random_poly(&k, &empty_range).unwrap_err().code(),
            "UNSATISFIABLE_CONSTRAINTS"
        );
        let clash_at_zero = GenConstraints {
            degree: (0, 0),
            lead: CoeffForce::InF,
            constant: CoeffForce::NotInF,
            non_f: NonFRequirement::None,
            pool: pool.clone(),
            seed: 0,
        };
        assert_eq!(
            random_poly(&k, &clash_at_zero).unwrap_err().code(),
            "UNSATISFIABLE_CONSTRAINTS"
        );
        let no_pool = GenConstraints {
            degree: (1, 2),
            lead: CoeffForce::Any,
            constant: CoeffForce::Any,
            non_f: NonFRequirement::None,
            pool: Vec::new(),
            seed: 0,
        };
        assert_eq!(
            random_poly(&k, &no_pool).unwrap_err().code(),
            "UNSATISFIABLE_CONSTRAINTS"
        );
    }

    #[test]
    fn degree_one_with_lead_in_f_needs_witness_elsewhere() {
        // At degree 1 with an F-forced lead, the only ge-1 index is the
        // lead itself, so the witness cannot be placed.
        let k = ctx("Q(sqrt 2)");
        let c = GenConstraints {
            degree: (1, 1),
            ..t1_inner_constraints(&k, 3)
        };
        assert_eq!(
            random_poly(&k, &c).unwrap_err().code(),
            "UNSATISFIABLE_CONSTRAINTS"
        );
        // Degree 2 leaves index 1 free for it.
        let c = GenConstraints {
            degree: (1, 2),
            ..t1_inner_constraints(&k, 3)
        };
        assert_eq!(random_poly(&k, &c).unwrap().degree().unwrap(), 2);
    }

    #[test]
    fn constraint_sweep_across_contexts_and_seeds() {
        for spec in ["Q(sqrt 2)", "Q[t]", "GF(3^2)", "Z<Q", "set:realsUnionImag"] {
            let k = ctx(spec);
            let pool = default_pool(&k).unwrap();
            for seed in 0..25u64 {
                let c = GenConstraints {
                    degree: (2, 5),
                    lead: CoeffForce::InF,
                    constant: CoeffForce::Any,
                    non_f: NonFRequirement::SomeIndexGe1,
                    pool: pool.clone(),
                    seed,
                };
                let q = random_poly(&k, &c).unwrap();
                let d = q.degree().unwrap();
                assert!((2..=5).contains(&d), "degree out of range on {spec}");
                assert!(k.is_in_subfield(q.leading().unwrap()).unwrap());
                assert!(
                    (1..=d).any(|j| !k.is_in_subfield(&q.coeff_or_zero(&k, j)).unwrap()),
                    "missing non-F witness on {spec} seed {seed}"
                );
            }
        }
    }

    #[test]
    fn not_in_f_lead_force_is_honored() {
        let k = ctx("Q(sqrt 2)");
        let c = GenConstraints {
            degree: (1, 4),
            lead: CoeffForce::NotInF,
            constant: CoeffForce::Any,
            non_f: NonFRequirement::None,
            pool: default_pool(&k).unwrap(),
            seed: 11,
        };
        for seed in 0..10u64 {
            let p = random_poly(&k, &GenConstraints { seed, ..c.clone() }).unwrap();
            assert!(!k.is_in_subfield(p.leading().unwrap()).unwrap());
        }
    }

    #[test]
    fn subfield_pool_keeps_only_f_members() {
        let k = ctx("Z<Q");
        let pool = default_pool(&k).unwrap();
        let fs = subfield_pool(&k, &pool).unwrap();
        assert!(!fs.is_empty());
        for e in &fs {
            assert!(k.is_in_subfield(e).unwrap());
        }
        assert!(fs.len() < pool.len(), "Z<Q pool should hold fractions too");
    }

    #[test]
    fn bivariate_draw_honors_part_constraints() {
        let k = ctx("Q(sqrt 2)");
        let pool = default_pool(&k).unwrap();
        for seed in 0..20u64 {
            let c = GenConstraints2 {
                degree: (2, 3),
                top_in_f: true,
                non_f_part: true,
                pool: pool.clone(),
                seed,
            };
            let q = random_poly2(&k, &c).unwrap();
            let m = q.total_degree().unwrap();
            assert!((2..=3).contains(&m));
            let parts = q.parts();
            let top = &parts[m];
            assert!(!top.is_empty());
            for (_, e) in top {
                assert!(
                    k.is_in_subfield(e).unwrap(),
                    "top part left F on seed {seed}"
                );
            }
            let witness = parts.iter().enumerate().any(|(deg, part)| {
                deg >= 1 && part.iter().any(|(_, e)| !k.is_in_subfield(e).unwrap())
            });
            assert!(witness, "no non-F part on seed {seed}");
        }
    }

    #[test]
    fn bivariate_draw_is_deterministic_and_rejects_infeasible_requests() {
        let k = ctx("Q(sqrt 2)");
        let pool = default_pool(&k).unwrap();
        let c = GenConstraints2 {
            degree: (2, 3),
            top_in_f: true,
            non_f_part: true,
            pool: pool.clone(),
            seed: 5,
        };
        assert_eq!(random_poly2(&k, &c).unwrap(), random_poly2(&k, &c).unwrap());
        // Total degree 1 with an F-only top part leaves nowhere for the
        // non-F witness part.
        let c = GenConstraints2 {
            degree: (1, 1),
            ..c
        };
        assert_eq!(
            random_poly2(&k, &c).unwrap_err().code(),
            "UNSATISFIABLE_CONSTRAINTS"
        );
        let q_only = GenConstraints2 {
            degree: (2, 3),
            top_in_f: true,
            non_f_part: true,
            pool: subfield_pool(&k, &pool).unwrap(),
            seed: 5,
        };
        assert_eq!(
            random_poly2(&k, &q_only).unwrap_err().code(),
            "UNSATISFIABLE_CONSTRAINTS"
        );
    }

    #[test]
    fn default_pools_mix_members_and_non_members() {
        for spec in [
            "Q(sqrt 2)",
            "Q[t]",
            "GF(2^2)",
            "GF(3^2)",
            "Z<Q",
            "set:complementQ",
            "set:realsUnionImag",
        ] {
            let k = ctx(spec);
            let pool = default_pool(&k).unwrap();
            let mut inside = 0;
            let mut outside = 0;
            for e in &pool {
                if k.is_in_subfield(e).unwrap() {
                    inside += 1;
                } else {
                    outside += 1;
                }
            }
            assert!(inside > 0, "{spec} pool has no F members");
            assert!(outside > 0, "{spec} pool has no non-F members");
        }
        // Plain Q has nothing outside F by definition.
        let q = ctx("Q");
        for e in default_pool(&q).unwrap() {
            assert!(q.is_in_subfield(&e).unwrap());
        }
    }
}
