//! Field and ring axioms for every context's host arithmetic, plus
//! closure of the designated sub-domain F under the operations, on
//! seeded random triples.

use deficitlab_core::{default_pool, subfield_pool, Element, FieldContext};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const CONTEXTS: [&str; 10] = [
    "Q",
    "Q(sqrt 2)",
    "Q(sqrt 2, sqrt 3)",
    "Q(sqrt -1)",
    "Q[t]",
    "GF(2^2)",
    "GF(3^2)",
    "Z<Q",
    "set:complementQ",
    "set:realsUnionImag",
];

fn ctx(spec: &str) -> FieldContext {
    FieldContext::parse_spec(spec).expect("context")
}

/// A random element built by combining up to three pool picks, so the
/// sample space is richer than the pool itself.
fn sample(ctx: &FieldContext, pool: &[Element], rng: &mut ChaCha8Rng) -> Element {
    let pick = |rng: &mut ChaCha8Rng| pool[rng.random_range(0..pool.len())].clone();
    let a = pick(rng);
    match rng.random_range(0..4) {
        0 => a,
        1 => ctx.add(&a, &pick(rng)).unwrap(),
        2 => ctx.mul(&a, &pick(rng)).unwrap(),
        _ => {
            let b = ctx.mul(&a, &pick(rng)).unwrap();
            ctx.sub(&b, &pick(rng)).unwrap()
        }
    }
}

#[test]
fn ring_axioms_hold_on_seeded_triples_in_every_context() {
    for spec in CONTEXTS {
        let k = ctx(spec);
        let pool = default_pool(&k).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0xA11CE);
        for _ in 0..200 {
            let a = sample(&k, &pool, &mut rng);
            let b = sample(&k, &pool, &mut rng);
            let c = sample(&k, &pool, &mut rng);

            let ab = k.add(&a, &b).unwrap();
            assert_eq!(ab, k.add(&b, &a).unwrap(), "add comm on {spec}");
            assert_eq!(
                k.add(&ab, &c).unwrap(),
                k.add(&a, &k.add(&b, &c).unwrap()).unwrap(),
                "add assoc on {spec}"
            );
            assert_eq!(k.add(&a, &k.zero()).unwrap(), a, "zero identity on {spec}");
            assert_eq!(
                k.add(&a, &k.neg(&a).unwrap()).unwrap(),
                k.zero(),
                "additive inverse on {spec}"
            );

            let mul_ab = k.mul(&a, &b).unwrap();
            assert_eq!(mul_ab, k.mul(&b, &a).unwrap(), "mul comm on {spec}");
            assert_eq!(
                k.mul(&mul_ab, &c).unwrap(),
                k.mul(&a, &k.mul(&b, &c).unwrap()).unwrap(),
                "mul assoc on {spec}"
            );
            assert_eq!(k.mul(&a, &k.one()).unwrap(), a, "one identity on {spec}");
            assert_eq!(
                k.mul(&a, &k.add(&b, &c).unwrap()).unwrap(),
                k.add(&k.mul(&a, &b).unwrap(), &k.mul(&a, &c).unwrap())
                    .unwrap(),
                "distributivity on {spec}"
            );

            let cubed = k.pow(&a, 3).unwrap();
            assert_eq!(
                cubed,
                k.mul(&a, &k.mul(&a, &a).unwrap()).unwrap(),
                "pow agrees with repeated mul on {spec}"
            );
        }
    }
}

#[test]
fn multiplicative_inverses_resolve_wherever_division_is_total() {
    // Hosts where K is a field with total division: everything except the
    // polynomial host Q[t] (where t has no inverse).
    for spec in [
        "Q",
        "Q(sqrt 2)",
        "Q(sqrt 2, sqrt 3)",
        "Q(sqrt -1)",
        "GF(2^2)",
        "GF(3^2)",
        "Z<Q",
        "set:realsUnionImag",
    ] {
        let k = ctx(spec);
        let pool = default_pool(&k).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0xB0B);
        let mut tested = 0;
        for _ in 0..200 {
            let a = sample(&k, &pool, &mut rng);
            if a.is_zero() {
                continue;
            }
            let inverse = k.inv(&a).unwrap();
            assert_eq!(
                k.mul(&a, &inverse).unwrap(),
                k.one(),
                "a * a^-1 = 1 on {spec}"
            );
            assert_eq!(
                k.div(&k.one(), &a).unwrap(),
                inverse,
                "div matches inv on {spec}"
            );
            tested += 1;
        }
        // Tiny fields hit zero often; still insist on a healthy sample.
        assert!(tested >= 100, "inverse law barely exercised on {spec}");
    }
}

#[test]
fn the_polynomial_host_rejects_only_genuinely_non_representable_quotients() {
    let k = ctx("Q[t]");
    let t = k.t_atom().unwrap();
    let one = k.one();
    // 1/t leaves Q[t].
    assert_eq!(k.inv(&t).unwrap_err().code(), "NOT_DIVISIBLE");
    // (t^2 + t) / t = t + 1 stays inside.
    let numer = k.add(&k.mul(&t, &t).unwrap(), &t).unwrap();
    let expect = k.add(&t, &one).unwrap();
    assert_eq!(k.div(&numer, &t).unwrap(), expect);
    // Rational constants always invert.
    let half = k.inv(&k.from_i64(2)).unwrap();
    assert_eq!(k.mul(&half, &k.from_i64(2)).unwrap(), one);
}

#[test]
fn the_sub_domain_is_closed_under_ring_operations() {
    for spec in CONTEXTS {
        let k = ctx(spec);
        let pool = default_pool(&k).unwrap();
        let f_pool = subfield_pool(&k, &pool).unwrap();
        if f_pool.is_empty() {
            // Set contexts exclude 0 and may exclude every pool member;
            // closure is then vacuous and not a field law anyway.
            continue;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0xC10);
        for _ in 0..200 {
            let a = f_pool[rng.random_range(0..f_pool.len())].clone();
            let b = f_pool[rng.random_range(0..f_pool.len())].clone();
            if !k.f_is_field() && spec.starts_with("set:") {
                continue;
            }
            if k.f_is_field() || spec == "Z<Q" {
                for (label, value) in [
                    ("sum", k.add(&a, &b).unwrap()),
                    ("product", k.mul(&a, &b).unwrap()),
                    ("negation", k.neg(&a).unwrap()),
                ] {
                    assert!(
                        k.is_in_subfield(&value).unwrap(),
                        "{label} of F-members left F on {spec}"
                    );
                }
            }
            if k.f_is_field() && !a.is_zero() && spec != "Q[t]" && spec != "set:complementQ" {
                let inverse = k.inv(&a).unwrap();
                assert!(
                    k.is_in_subfield(&inverse).unwrap(),
                    "inverse of an F-member left F on {spec}"
                );
            }
        }
    }
}

#[test]
fn frobenius_membership_marks_exactly_the_small_field() {
    // Inside GF(9) ⊃ GF(3): the constants 0, 1, 2 are members, anything
    // involving the generator is not.
    let k = ctx("GF(3^2)");
    for value in 0..3i64 {
        assert!(k.is_in_subfield(&k.from_i64(value)).unwrap());
    }
    let g = k.generator().unwrap();
    assert!(!k.is_in_subfield(&g).unwrap());
    assert!(!k.is_in_subfield(&k.add(&g, &k.one()).unwrap()).unwrap());
    // Lagrange: every nonzero element of GF(9) satisfies x^8 = 1.
    assert_eq!(k.pow(&g, 8).unwrap(), k.one());
    // x ∈ GF(3) iff x^3 = x: verify both directions on a few elements.
    for value in [k.from_i64(2), g.clone(), k.add(&g, &k.from_i64(2)).unwrap()] {
        let cubed = k.pow(&value, 3).unwrap();
        assert_eq!(
            cubed == value,
            k.is_in_subfield(&value).unwrap(),
            "Frobenius characterization"
        );
    }
}
