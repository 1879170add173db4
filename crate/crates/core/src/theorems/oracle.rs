//! Brute-force recomputation of compositions, independent of the Horner
//! evaluation path: every power of the inner polynomial is expanded with
//! the multinomial theorem and the monomial contributions are summed.

use num::bigint::BigUint;

use crate::context::FieldContext;
use crate::element::Element;
use crate::error::{Error, Result};
use crate::poly::{Poly1, DEFAULT_COEFF_CAP};
use crate::poly2::{add2, mul2, Poly2};

fn factorial(k: usize) -> BigUint {
    (1..=k as u64).map(BigUint::from).product()
}

/// k! / (i_0! ⋯ i_m!) for a multi-index summing to k, as an exact integer.
fn multinomial(idx: &[usize]) -> BigUint {
    let k: usize = idx.iter().sum();
    let mut value = factorial(k);
    for &i in idx {
        value /= factorial(i);
    }
    value
}

/// Walks every multi-index (i_0, ..., i_m) with i_0 + ⋯ + i_m = `rem`,
/// invoking `emit` on each.
fn for_each_multi_index(
    rem: usize,
    pos: usize,
    idx: &mut Vec<usize>,
    emit: &mut dyn FnMut(&[usize]) -> Result<()>,
) -> Result<()> {
    if pos + 1 == idx.len() {
        idx[pos] = rem;
        emit(idx)?;
        idx[pos] = 0;
        return Ok(());
    }
    for v in 0..=rem {
        idx[pos] = v;
        for_each_multi_index(rem - v, pos + 1, idx, emit)?;
    }
    idx[pos] = 0;
    Ok(())
}

/// p∘q recomputed term by term: for each nonzero a_k, expand
/// (b_0 + b_1 x + ⋯ + b_m x^m)^k into multinomial contributions
/// a_k · k!/(i_0!⋯i_m!) · ∏ b_j^{i_j} at exponent Σ j·i_j.
///
/// This shares no code with the evaluation path in [`crate::poly::compose`]
/// and serves as its cross-check.
pub fn compose_oracle_capped(
    ctx: &FieldContext,
    p: &Poly1,
    q: &Poly1,
    cap: usize,
) -> Result<Poly1> {
    if p.is_zero() {
        return Ok(Poly1::zero(ctx));
    }
    let n = p.degree()?;
    let m = if q.is_zero() { 0 } else { q.degree()? };
    let needed = n
        .checked_mul(m)
        .and_then(|d| d.checked_add(1))
        .ok_or(Error::DegreeOverflow {
            needed: usize::MAX,
            cap,
        })?;
    if needed > cap {
        return Err(Error::DegreeOverflow { needed, cap });
    }
    let b: Vec<Element> = (0..=m).map(|j| q.coeff_or_zero(ctx, j)).collect();
    let mut acc = vec![ctx.zero(); needed];
    for k in 0..=n {
        let a_k = p.coeff_or_zero(ctx, k);
        if a_k.is_zero() {
            continue;
        }
        let mut idx = vec![0usize; m + 1];
        for_each_multi_index(k, 0, &mut idx, &mut |idx| {
            if idx
                .iter()
                .enumerate()
                .any(|(j, &i)| i > 0 && b[j].is_zero())
            {
                return Ok(());
            }
            let mut coeff = ctx.mul(&a_k, &ctx.from_biguint(&multinomial(idx)))?;
            let mut exponent = 0usize;
            for (j, &i) in idx.iter().enumerate() {
                if i == 0 {
                    continue;
                }
                coeff = ctx.mul(&coeff, &ctx.pow(&b[j], i as u64)?)?;
                exponent += j * i;
            }
            acc[exponent] = ctx.add(&acc[exponent], &coeff)?;
            Ok(())
        })?;
    }
    Poly1::new(ctx, acc)
}

/// [`compose_oracle_capped`] with the default cap.
pub fn compose_oracle(ctx: &FieldContext, p: &Poly1, q: &Poly1) -> Result<Poly1> {
    compose_oracle_capped(ctx, p, q, DEFAULT_COEFF_CAP)
}

/// The two-variable twin of [`compose_oracle_capped`]: the inner
/// polynomial is split into homogeneous components q_0, ..., q_m and each
/// power of their sum is expanded multinomially, with every component
/// power computed by plain polynomial multiplication.
pub fn compose_oracle2_capped(
    ctx: &FieldContext,
    p: &Poly1,
    q: &Poly2,
    cap: usize,
) -> Result<Poly2> {
    if p.is_zero() {
        return Ok(Poly2::zero(ctx));
    }
    let n = p.degree()?;
    let m = if q.is_zero() { 0 } else { q.total_degree()? };
    let degree = n as u128 * m as u128;
    let needed = usize::try_from((degree + 1) * (degree + 2) / 2).unwrap_or(usize::MAX);
    if needed > cap {
        return Err(Error::DegreeOverflow { needed, cap });
    }

    let parts: Vec<Poly2> = (0..=m)
        .map(|k| {
            let monomials = q
                .parts()
                .get(k)
                .map(|part| {
                    part.iter()
                        .map(|(xe, c)| (*xe, k - xe, c.clone()))
                        .collect()
                })
                .unwrap_or_default();
            Poly2::new(ctx, monomials)
        })
        .collect::<Result<_>>()?;
    // part_powers[j] holds parts[j]^0, parts[j]^1, ... as far as requested.
    let mut part_powers: Vec<Vec<Poly2>> = parts
        .iter()
        .map(|part| {
            vec![
                Poly2::constant(ctx, ctx.one()).expect("constant one"),
                part.clone(),
            ]
        })
        .collect();
    let mut power_of = |j: usize, i: usize| -> Result<Poly2> {
        while part_powers[j].len() <= i {
            let last = part_powers[j].last().expect("powers start at 1").clone();
            part_powers[j].push(mul2(ctx, &last, &parts[j])?);
        }
        Ok(part_powers[j][i].clone())
    };

    let mut acc = Poly2::zero(ctx);
    for k in 0..=n {
        let a_k = p.coeff_or_zero(ctx, k);
        if a_k.is_zero() {
            continue;
        }
        let mut idx = vec![0usize; m + 1];
        for_each_multi_index(k, 0, &mut idx, &mut |idx| {
            if idx
                .iter()
                .enumerate()
                .any(|(j, &i)| i > 0 && parts[j].is_zero())
            {
                return Ok(());
            }
            let scalar = ctx.mul(&a_k, &ctx.from_biguint(&multinomial(idx)))?;
            let mut term = Poly2::constant(ctx, scalar)?;
            for (j, &i) in idx.iter().enumerate() {
                if i == 0 {
                    continue;
                }
                term = mul2(ctx, &term, &power_of(j, i)?)?;
            }
            acc = add2(ctx, &acc, &term)?;
            Ok(())
        })?;
    }
    Ok(acc)
}

/// [`compose_oracle2_capped`] with the default cap.
pub fn compose_oracle2(ctx: &FieldContext, p: &Poly1, q: &Poly2) -> Result<Poly2> {
    compose_oracle2_capped(ctx, p, q, DEFAULT_COEFF_CAP)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::FieldContext;
    use crate::parser::{parse_poly1, parse_poly2};
    use crate::poly::compose;
    use crate::poly2::compose_uni_bi;

    fn ctx(spec: &str) -> FieldContext {
        FieldContext::parse_spec(spec).expect("context")
    }

    #[test]
    fn cube_of_shifted_identity_is_binomial_expansion() {
        let k = ctx("Q");
        let p = parse_poly1(&k, "x^3").unwrap();
        let q = parse_poly1(&k, "x + 1").unwrap();
        let out = compose_oracle(&k, &p, &q).unwrap();
        let expected = parse_poly1(&k, "x^3 + 3*x^2 + 3*x + 1").unwrap();
        assert_eq!(out, expected);
    }

    #[test]
    fn agrees_with_evaluation_path_on_worked_sextic() {
        let k = ctx("Q(sqrt 2, sqrt 3)");
        let p = parse_poly1(&k, "x^3 + 2*x^2 - sqrt(2)*x + 1").unwrap();
        let q = parse_poly1(&k, "x^2 + sqrt(3)*x + 5").unwrap();
        let direct = compose(&k, &p, &q).unwrap();
        let expanded = compose_oracle(&k, &p, &q).unwrap();
        assert_eq!(direct, expanded);
    }

    #[test]
    fn zero_and_constant_inner_polynomials() {
        let k = ctx("Q(sqrt 2)");
        let p = parse_poly1(&k, "x^2 + 1").unwrap();
        let zero = Poly1::zero(&k);
        assert_eq!(
            compose_oracle(&k, &p, &zero).unwrap(),
            parse_poly1(&k, "1").unwrap()
        );
        assert_eq!(compose_oracle(&k, &zero, &p).unwrap(), zero);
        let c = parse_poly1(&k, "sqrt(2)").unwrap();
        // p(sqrt 2) = 2 + 1 = 3.
        assert_eq!(
            compose_oracle(&k, &p, &c).unwrap(),
            parse_poly1(&k, "3").unwrap()
        );
    }

    #[test]
    fn rejects_results_beyond_the_cap() {
        let k = ctx("Q");
        let p = Poly1::monomial(&k, k.one(), 100).unwrap();
        let q = Poly1::monomial(&k, k.one(), 50).unwrap();
        match compose_oracle(&k, &p, &q) {
            Err(Error::DegreeOverflow { needed, cap }) => {
                assert_eq!(needed, 5001);
                assert_eq!(cap, DEFAULT_COEFF_CAP);
            }
            other => panic!("expected overflow, got {other:?}"),
        }
    }

    #[test]
    fn agrees_with_evaluation_path_across_contexts_on_seeded_pairs() {
        use crate::theorems::generate::{
            default_pool, random_poly, CoeffForce, GenConstraints, NonFRequirement,
        };
        for spec in ["Q", "Q(sqrt 2)", "Q[t]", "GF(2^2)", "Z<Q"] {
            let k = ctx(spec);
            let pool = default_pool(&k).unwrap();
            for seed in 0..12u64 {
                let draw = |s: u64, lo: usize, hi: usize| {
                    random_poly(
                        &k,
                        &GenConstraints {
                            degree: (lo, hi),
                            lead: CoeffForce::Any,
                            constant: CoeffForce::Any,
                            non_f: NonFRequirement::None,
                            pool: pool.clone(),
                            seed: s,
                        },
                    )
                    .unwrap()
                };
                let p = draw(seed, 0, 4);
                let q = draw(seed.wrapping_add(1000), 0, 4);
                assert_eq!(
                    compose(&k, &p, &q).unwrap(),
                    compose_oracle(&k, &p, &q).unwrap(),
                    "mismatch on {spec} seed {seed}"
                );
            }
        }
    }

    #[test]
    fn bivariate_twin_matches_evaluation_path() {
        let k = ctx("Q(sqrt 2)");
        let p = parse_poly1(&k, "x^2").unwrap();
        let q = parse_poly2(&k, "x^2 + y^2 + sqrt(2)*x").unwrap();
        let direct = compose_uni_bi(&k, &p, &q).unwrap();
        let expanded = compose_oracle2(&k, &p, &q).unwrap();
        assert_eq!(direct, expanded);
        let expected = parse_poly2(
            &k,
            "x^4 + 2*x^2*y^2 + y^4 + 2*sqrt(2)*x^3 + 2*sqrt(2)*x*y^2 + 2*x^2",
        )
        .unwrap();
        assert_eq!(expanded, expected);
    }

    #[test]
    fn bivariate_twin_handles_degenerate_inputs() {
        let k = ctx("Q(sqrt 2)");
        let p = parse_poly1(&k, "x^2 - 2").unwrap();
        let constant = parse_poly2(&k, "sqrt(2)").unwrap();
        // p(sqrt 2) = 0.
        assert!(compose_oracle2(&k, &p, &constant).unwrap().is_zero());
        let zero = Poly2::zero(&k);
        assert_eq!(
            compose_oracle2(&k, &p, &zero).unwrap(),
            parse_poly2(&k, "-2").unwrap()
        );
    }
}
