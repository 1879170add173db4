//! Coefficient domains: a field (or ring, or predicate set) `K` together
//! with a designated sub-domain `F` and a decidable membership test.
//!
//! Supported pairs:
//!
//! * `Q` — the trivial pair F = K = Q,
//! * `Q(sqrt d1, ..., sqrt dk)` — multi-quadratic towers over Q (radicals
//!   may be negative; `-1` gives the Gaussian field),
//! * `Q[t]` — polynomials in one transcendental symbol over Q,
//! * `GF(p^n)` with subfield `GF(p^m)`, `m | n`,
//! * `Z<Q` — the integers inside the rationals (F is only a ring),
//! * `set:complementQ`, `set:realsUnionImag` — membership predicates that
//!   are not subfields, hosted in `Q[t]` and `Q(i)` respectively.

use num::bigint::BigInt;
use num::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Membership predicates that are not subfields.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SetId {
    /// S = K \ Q inside the transcendental host: everything not rational.
    ComplementQ,
    /// S = reals ∪ imaginaries inside Q(i): a + bi with a = 0 or b = 0.
    RealsUnionImag,
}

/// Blueprint for a coefficient domain.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum ContextSpec {
    /// F = K = Q.
    Rationals,
    /// K = Q(√d1, ..., √dk), F = Q. Radicals are square-free integers,
    /// nonzero, ≠ 1, pairwise distinct, jointly independent.
    MultiQuadratic { radicals: Vec<i64> },
    /// K = Q[t] for a single transcendental symbol t, F = Q.
    Transcendental,
    /// K = GF(p^n), F = GF(p^m) with m | n. `modulus` is the monic
    /// irreducible of degree n over GF(p) used for the representation,
    /// stored low-to-high including the leading 1; `None` selects the
    /// lexicographically smallest one deterministically.
    FiniteField {
        p: u64,
        n: usize,
        m: usize,
        modulus: Option<Vec<u64>>,
    },
    /// K = Q, F = Z. F is a ring, not a field.
    RingZInQ,
    /// Host-field arithmetic with a swapped membership predicate.
    SetContext { set: SetId },
}

/// Identity of a context: equal specs produce equal ids, so elements built
/// from two separately constructed but identical contexts interoperate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CtxId(u64);

/// A validated coefficient domain, ready for arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldContext {
    spec: ContextSpec,
    id: CtxId,
    /// 0 for characteristic-zero contexts, p for finite fields.
    characteristic: u64,
    /// False exactly for `Z<Q` and the set contexts.
    f_is_field: bool,
    /// Number of coordinates per element; `None` for the transcendental
    /// host, whose basis 1, t, t², ... is unbounded.
    basis_size: Option<usize>,
    /// Monic modulus of the finite-field representation (empty otherwise),
    /// low-to-high with leading coefficient 1.
    modulus: Vec<u64>,
}

/// Builds and validates a context. See [`FieldContext::new`].
pub fn make_context(spec: ContextSpec) -> Result<FieldContext> {
    FieldContext::new(spec)
}

impl FieldContext {
    /// Validates `spec` and builds the context. Finite fields with no
    /// explicit modulus get the lexicographically smallest monic
    /// irreducible of degree n (coefficients compared low-to-high), so
    /// construction is deterministic.
    pub fn new(spec: ContextSpec) -> Result<Self> {
        match &spec {
            ContextSpec::Rationals | ContextSpec::Transcendental | ContextSpec::RingZInQ => {}
            ContextSpec::MultiQuadratic { radicals } => validate_radicals(radicals)?,
            ContextSpec::FiniteField { p, n, m, modulus } => {
                validate_finite_field(*p, *n, *m, modulus.as_deref())?
            }
            ContextSpec::SetContext { .. } => {}
        }

        let characteristic = match &spec {
            ContextSpec::FiniteField { p, .. } => *p,
            _ => 0,
        };
        let f_is_field = !matches!(spec, ContextSpec::RingZInQ | ContextSpec::SetContext { .. });
        let basis_size = match &spec {
            ContextSpec::Rationals | ContextSpec::RingZInQ => Some(1),
            ContextSpec::MultiQuadratic { radicals } => Some(1usize << radicals.len()),
            ContextSpec::Transcendental => None,
            ContextSpec::FiniteField { n, .. } => Some(*n),
            ContextSpec::SetContext {
                set: SetId::ComplementQ,
            } => None,
            ContextSpec::SetContext {
                set: SetId::RealsUnionImag,
            } => Some(2),
        };
        let modulus = match &spec {
            ContextSpec::FiniteField { p, n, modulus, .. } => match modulus {
                Some(m) => m.clone(),
                None => smallest_irreducible(*p, *n),
            },
            _ => Vec::new(),
        };

        // Canonicalize: an explicitly given modulus that equals the default
        // one names the same representation.
        let spec = match spec {
            ContextSpec::FiniteField {
                p,
                n,
                m,
                modulus: Some(given),
            } if given == smallest_irreducible(p, n) => ContextSpec::FiniteField {
                p,
                n,
                m,
                modulus: None,
            },
            other => other,
        };

        let id = CtxId(fingerprint(&canonical_name_of(&spec)));
        Ok(FieldContext {
            spec,
            id,
            characteristic,
            f_is_field,
            basis_size,
            modulus,
        })
    }

    /// Parses the field-spec mini-language. Whitespace is ignored.
    ///
    /// `Q` | `Q(sqrt D1, sqrt D2, ...)` | `Q[t]` | `GF(P^N)` |
    /// `GF(P^N; sub M)` | `GF(P^N; mod c0,c1,...,cN)` | `Z<Q` |
    /// `set:complementQ` | `set:realsUnionImag`
    pub fn parse_spec(text: &str) -> Result<Self> {
        let spec = parse_spec_text(text)?;
        Self::new(spec)
    }

    pub fn spec(&self) -> &ContextSpec {
        &self.spec
    }

    pub fn id(&self) -> CtxId {
        self.id
    }

    /// 0 for characteristic-zero contexts, p for finite fields.
    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    /// Whether the sub-domain F is an actual field (false for `Z<Q` and
    /// the predicate-set contexts).
    pub fn f_is_field(&self) -> bool {
        self.f_is_field
    }

    /// Coordinates per element, or `None` when the host basis is unbounded.
    pub fn basis_size(&self) -> Option<usize> {
        self.basis_size
    }

    /// Monic representation modulus of a finite field, low-to-high.
    /// Empty for every other kind.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// The canonical spec string this context round-trips through.
    pub fn name(&self) -> String {
        canonical_name_of(&self.spec)
    }

    /// The kind whose arithmetic rules apply: set contexts answer with
    /// their host representation.
    pub(crate) fn host_kind(&self) -> HostKind {
        match &self.spec {
            ContextSpec::Rationals | ContextSpec::RingZInQ => HostKind::Rational,
            ContextSpec::MultiQuadratic { .. } => HostKind::Tower,
            ContextSpec::Transcendental => HostKind::PolyT,
            ContextSpec::FiniteField { .. } => HostKind::Residue,
            ContextSpec::SetContext {
                set: SetId::ComplementQ,
            } => HostKind::PolyT,
            ContextSpec::SetContext {
                set: SetId::RealsUnionImag,
            } => HostKind::Tower,
        }
    }

    /// Radicals of the tower that hosts this context's elements.
    pub(crate) fn host_radicals(&self) -> &[i64] {
        const GAUSSIAN: &[i64] = &[-1];
        match &self.spec {
            ContextSpec::MultiQuadratic { radicals } => radicals,
            ContextSpec::SetContext {
                set: SetId::RealsUnionImag,
            } => GAUSSIAN,
            _ => &[],
        }
    }

    pub(crate) fn finite_field_params(&self) -> Option<(u64, usize, usize)> {
        match &self.spec {
            ContextSpec::FiniteField { p, n, m, .. } => Some((*p, *n, *m)),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum HostKind {
    Rational,
    Tower,
    PolyT,
    Residue,
}

/// Canonical, whitespace-free rendering of a spec; doubles as the context
/// name in reports and as the fingerprint input for [`CtxId`].
fn canonical_name_of(spec: &ContextSpec) -> String {
    match spec {
        ContextSpec::Rationals => "Q".to_string(),
        ContextSpec::MultiQuadratic { radicals } => {
            let rads: Vec<String> = radicals.iter().map(|d| format!("sqrt {d}")).collect();
            format!("Q({})", rads.join(", "))
        }
        ContextSpec::Transcendental => "Q[t]".to_string(),
        ContextSpec::FiniteField { p, n, m, modulus } => {
            let mut s = format!("GF({p}^{n})");
            match (m, modulus) {
                (1, None) => {}
                (m, None) => s = format!("GF({p}^{n}; sub {m})"),
                (1, Some(c)) => {
                    let cs: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                    s = format!("GF({p}^{n}; mod {})", cs.join(","));
                }
                (m, Some(c)) => {
                    let cs: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                    s = format!("GF({p}^{n}; sub {m}; mod {})", cs.join(","));
                }
            }
            s
        }
        ContextSpec::RingZInQ => "Z<Q".to_string(),
        ContextSpec::SetContext {
            set: SetId::ComplementQ,
        } => "set:complementQ".to_string(),
        ContextSpec::SetContext {
            set: SetId::RealsUnionImag,
        } => "set:realsUnionImag".to_string(),
    }
}

fn fingerprint(name: &str) -> u64 {
    // FNV-1a, fixed so ids are stable across runs and platforms.
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in name.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x1000_0000_01b3);
    }
    h
}

const MAX_RADICALS: usize = 6;

fn validate_radicals(radicals: &[i64]) -> Result<()> {
    if radicals.len() > MAX_RADICALS {
        return Err(Error::RejectSpec {
            reason: format!("at most {MAX_RADICALS} radicals are supported"),
        });
    }
    for &d in radicals {
        if d == 0 || d == 1 {
            return Err(Error::RejectSpec {
                reason: format!("radical {d} must be a nonzero integer other than 1"),
            });
        }
        if !is_square_free(d) {
            return Err(Error::RejectSpec {
                reason: format!("radical {d} is not square-free"),
            });
        }
    }
    for (i, &a) in radicals.iter().enumerate() {
        if radicals[..i].contains(&a) {
            return Err(Error::RejectSpec {
                reason: format!("radical {a} appears twice"),
            });
        }
    }
    // Independence: no nonempty subset of radicals multiplies to a perfect
    // square. 2^k subsets with k ≤ 6 — brute force.
    for mask in 1u32..(1 << radicals.len()) {
        let mut prod = BigInt::one();
        for (j, &d) in radicals.iter().enumerate() {
            if mask & (1 << j) != 0 {
                prod *= BigInt::from(d);
            }
        }
        if !prod.is_negative() {
            let root = prod.sqrt();
            if &root * &root == prod {
                let subset: Vec<String> = radicals
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| mask & (1 << *j) != 0)
                    .map(|(_, d)| d.to_string())
                    .collect();
                return Err(Error::RejectSpec {
                    reason: format!(
                        "radical subset product {{{}}} is a perfect square",
                        subset.join(", ")
                    ),
                });
            }
        }
    }
    Ok(())
}

fn is_square_free(d: i64) -> bool {
    let mut n = d.unsigned_abs();
    let mut f = 2u64;
    while f * f <= n {
        if n % f == 0 {
            n /= f;
            if n % f == 0 {
                return false;
            }
        }
        f += 1;
    }
    true
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut f = 2u64;
    while f * f <= p {
        if p % f == 0 {
            return false;
        }
        f += 1;
    }
    true
}

/// Cap on p^n when we must enumerate polynomials over GF(p).
const MAX_ENUMERATION: u128 = 1 << 20;

fn validate_finite_field(p: u64, n: usize, m: usize, modulus: Option<&[u64]>) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::RejectSpec {
            reason: format!("{p} is composite"),
        });
    }
    if n == 0 {
        return Err(Error::RejectSpec {
            reason: "extension degree n must be at least 1".to_string(),
        });
    }
    if m == 0 || m > n || n % m != 0 {
        return Err(Error::RejectSpec {
            reason: format!("subfield degree {m} does not divide extension degree {n}"),
        });
    }
    let order = (p as u128).checked_pow(n as u32);
    match order {
        Some(o) if o <= MAX_ENUMERATION => {}
        _ if n == 1 => {}
        _ => {
            return Err(Error::RejectSpec {
                reason: format!("field order {p}^{n} is too large for this tool"),
            });
        }
    }
    if let Some(c) = modulus {
        if c.len() != n + 1 {
            return Err(Error::RejectSpec {
                reason: format!("modulus must list {} coefficients c0..c{n}", n + 1),
            });
        }
        if c[n] != 1 {
            return Err(Error::RejectSpec {
                reason: "modulus must be monic".to_string(),
            });
        }
        if c.iter().any(|&x| x >= p) {
            return Err(Error::RejectSpec {
                reason: format!("modulus coefficients must lie in 0..{p}"),
            });
        }
        if !is_irreducible(c, p) {
            return Err(Error::RejectSpec {
                reason: "modulus is reducible over the prime field".to_string(),
            });
        }
    }
    Ok(())
}

/// Trial division by every monic polynomial of degree 1..=deg/2.
/// Field orders are capped, so the enumeration stays small.
fn is_irreducible(f: &[u64], p: u64) -> bool {
    let deg = f.len() - 1;
    if deg == 1 {
        return true;
    }
    for d in 1..=deg / 2 {
        // Enumerate monic divisor candidates of degree d via an odometer
        // over the d free coefficients.
        let mut g = vec![0u64; d + 1];
        g[d] = 1;
        'candidates: loop {
            if poly_rem_is_zero(f, &g, p) {
                return false;
            }
            // Advance the low d coefficients; a full wrap means every
            // candidate of this degree has been tried.
            let mut i = 0;
            loop {
                if i == d {
                    break 'candidates;
                }
                g[i] += 1;
                if g[i] < p {
                    break;
                }
                g[i] = 0;
                i += 1;
            }
        }
    }
    true
}

/// Does g (monic) divide f exactly over GF(p)?
fn poly_rem_is_zero(f: &[u64], g: &[u64], p: u64) -> bool {
    let dg = g.len() - 1;
    let mut r: Vec<u64> = f.to_vec();
    while r.len() > dg {
        let lead = *r.last().unwrap() % p;
        let shift = r.len() - 1 - dg;
        if lead != 0 {
            for i in 0..=dg {
                let prod = (lead as u128 * g[i] as u128) % p as u128;
                let idx = shift + i;
                r[idx] = ((r[idx] as u128 + p as u128 * p as u128 - prod) % p as u128) as u64;
            }
        }
        r.pop();
    }
    r.iter().all(|&x| x % p == 0)
}

/// Lexicographically smallest monic irreducible of degree n over GF(p),
/// coefficients compared low-to-high as integers.
fn smallest_irreducible(p: u64, n: usize) -> Vec<u64> {
    let mut c = vec![0u64; n + 1];
    c[n] = 1;
    // Odometer with c0 most significant: iterate in lexicographic order
    // of (c0, c1, ..., c_{n-1}).
    let mut coords = vec![0u64; n];
    loop {
        for (i, &x) in coords.iter().enumerate() {
            c[i] = x;
        }
        if is_irreducible(&c, p) {
            return c;
        }
        // Increment the last coordinate first so earlier ones change slowest.
        let mut i = n;
        loop {
            if i == 0 {
                unreachable!("no monic irreducible of degree {n} over GF({p})");
            }
            i -= 1;
            coords[i] += 1;
            if coords[i] < p {
                break;
            }
            coords[i] = 0;
        }
    }
}

fn parse_spec_text(text: &str) -> Result<ContextSpec> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s == "Q" {
        return Ok(ContextSpec::Rationals);
    }
    if s == "Q[t]" {
        return Ok(ContextSpec::Transcendental);
    }
    if s == "Z<Q" {
        return Ok(ContextSpec::RingZInQ);
    }
    if s == "set:complementQ" {
        return Ok(ContextSpec::SetContext {
            set: SetId::ComplementQ,
        });
    }
    if s == "set:realsUnionImag" {
        return Ok(ContextSpec::SetContext {
            set: SetId::RealsUnionImag,
        });
    }
    if let Some(inner) = s.strip_prefix("Q(").and_then(|r| r.strip_suffix(')')) {
        let mut radicals = Vec::new();
        for part in inner.split(',') {
            let d = part
                .strip_prefix("sqrt")
                .and_then(|v| v.parse::<i64>().ok())
                .ok_or_else(|| Error::RejectSpec {
                    reason: format!("bad radical `{part}` (expected `sqrt D`)"),
                })?;
            radicals.push(d);
        }
        return Ok(ContextSpec::MultiQuadratic { radicals });
    }
    if let Some(inner) = s.strip_prefix("GF(").and_then(|r| r.strip_suffix(')')) {
        let mut pieces = inner.split(';');
        let head = pieces.next().unwrap_or("");
        let (p_str, n_str) = head.split_once('^').ok_or_else(|| Error::RejectSpec {
            reason: format!("bad field order `{head}` (expected P^N)"),
        })?;
        let p: u64 = p_str.parse().map_err(|_| Error::RejectSpec {
            reason: format!("bad prime `{p_str}`"),
        })?;
        let n: usize = n_str.parse().map_err(|_| Error::RejectSpec {
            reason: format!("bad degree `{n_str}`"),
        })?;
        let mut m = 1usize;
        let mut modulus = None;
        for piece in pieces {
            if let Some(v) = piece.strip_prefix("sub") {
                m = v.parse().map_err(|_| Error::RejectSpec {
                    reason: format!("bad subfield degree `{v}`"),
                })?;
            } else if let Some(v) = piece.strip_prefix("mod") {
                let coeffs: Result<Vec<u64>> = v
                    .split(',')
                    .map(|c| {
                        c.parse::<u64>().map_err(|_| Error::RejectSpec {
                            reason: format!("bad modulus coefficient `{c}`"),
                        })
                    })
                    .collect();
                modulus = Some(coeffs?);
            } else {
                return Err(Error::RejectSpec {
                    reason: format!("unknown field option `{piece}`"),
                });
            }
        }
        return Ok(ContextSpec::FiniteField { p, n, m, modulus });
    }
    Err(Error::RejectSpec {
        reason: format!("unrecognized field spec `{text}`"),
    })
}
