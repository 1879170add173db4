//! Elements of a coefficient domain and their exact arithmetic.
//!
//! Every element carries the [`CtxId`] of the context it was built from;
//! binary operations refuse to mix elements from different contexts.
//! Representations by host kind:
//!
//! * rationals / `Z<Q`: one `BigRational`,
//! * multi-quadratic towers: 2^k rational coordinates, one per subset of
//!   the radicals (index = subset bitmask, bit j ↔ radical j),
//! * `Q[t]`: dense rational coefficients low-to-high, no trailing zeros,
//! * `GF(p^n)`: n coefficients mod p of the residue class, low-to-high.

use num::bigint::{BigInt, BigUint};
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::context::{CtxId, FieldContext, HostKind};
use crate::error::{Error, Result};

/// An exact element of some context's host domain K.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Element {
    ctx: CtxId,
    repr: Repr,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Repr {
    Rat(BigRational),
    Tower(Vec<BigRational>),
    PolyT(Vec<BigRational>),
    Residue(Vec<u64>),
}

impl Element {
    pub(crate) fn new(ctx: CtxId, repr: Repr) -> Self {
        Element { ctx, repr }
    }

    pub(crate) fn repr(&self) -> &Repr {
        &self.repr
    }

    /// Identity of the context this element belongs to.
    pub fn ctx_id(&self) -> CtxId {
        self.ctx
    }

    /// True for the additive identity. Representation-level query; no
    /// context needed.
    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Rat(r) => r.is_zero(),
            Repr::Tower(c) => c.iter().all(Zero::is_zero),
            Repr::PolyT(c) => c.is_empty(),
            Repr::Residue(c) => c.iter().all(|&x| x == 0),
        }
    }

    /// True for the multiplicative identity.
    pub fn is_one(&self) -> bool {
        match &self.repr {
            Repr::Rat(r) => r.is_one(),
            Repr::Tower(c) => c[0].is_one() && c[1..].iter().all(Zero::is_zero),
            Repr::PolyT(c) => c.len() == 1 && c[0].is_one(),
            Repr::Residue(c) => c[0] == 1 && c[1..].iter().all(|&x| x == 0),
        }
    }
}

impl FieldContext {
    fn check(&self, a: &Element) -> Result<()> {
        if a.ctx == self.id() {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    fn wrap(&self, repr: Repr) -> Element {
        Element::new(self.id(), repr)
    }

    pub fn zero(&self) -> Element {
        self.from_i64(0)
    }

    pub fn one(&self) -> Element {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Element {
        self.from_bigint(&BigInt::from(v))
    }

    pub fn from_bigint(&self, v: &BigInt) -> Element {
        let repr = match self.host_kind() {
            HostKind::Rational => Repr::Rat(BigRational::from_integer(v.clone())),
            HostKind::Tower => {
                let size = 1 << self.host_radicals().len();
                let mut c = vec![BigRational::zero(); size];
                c[0] = BigRational::from_integer(v.clone());
                Repr::Tower(c)
            }
            HostKind::PolyT => {
                if v.is_zero() {
                    Repr::PolyT(Vec::new())
                } else {
                    Repr::PolyT(vec![BigRational::from_integer(v.clone())])
                }
            }
            HostKind::Residue => {
                let (p, n, _) = self.finite_field_params().unwrap();
                let mut c = vec![0u64; n];
                c[0] = bigint_mod(v, p);
                Repr::Residue(c)
            }
        };
        self.wrap(repr)
    }

    pub fn from_biguint(&self, v: &BigUint) -> Element {
        self.from_bigint(&BigInt::from(v.clone()))
    }

    /// Injects a rational. In a finite field this maps numerator and
    /// denominator mod p and divides, so it fails with `DIVISION_BY_ZERO`
    /// when p divides the denominator.
    pub fn from_rational(&self, v: &BigRational) -> Result<Element> {
        match self.host_kind() {
            HostKind::Rational => Ok(self.wrap(Repr::Rat(v.clone()))),
            HostKind::Tower => {
                let size = 1 << self.host_radicals().len();
                let mut c = vec![BigRational::zero(); size];
                c[0] = v.clone();
                Ok(self.wrap(Repr::Tower(c)))
            }
            HostKind::PolyT => {
                if v.is_zero() {
                    Ok(self.wrap(Repr::PolyT(Vec::new())))
                } else {
                    Ok(self.wrap(Repr::PolyT(vec![v.clone()])))
                }
            }
            HostKind::Residue => {
                let (p, _, _) = self.finite_field_params().unwrap();
                let num = bigint_mod(v.numer(), p);
                let den = bigint_mod(v.denom(), p);
                if den == 0 {
                    return Err(Error::DivisionByZero);
                }
                let num_elt = self.from_bigint(&BigInt::from(num));
                let den_elt = self.from_bigint(&BigInt::from(den));
                self.div(&num_elt, &den_elt)
            }
        }
    }

    /// The element √d, available when d is one of this context's host
    /// radicals.
    pub fn sqrt_atom(&self, d: i64) -> Result<Element> {
        let radicals = self.host_radicals();
        match radicals.iter().position(|&r| r == d) {
            Some(j) => {
                let mut c = vec![BigRational::zero(); 1 << radicals.len()];
                c[1 << j] = BigRational::one();
                Ok(self.wrap(Repr::Tower(c)))
            }
            None => Err(Error::UnknownSymbol {
                symbol: format!("sqrt({d})"),
                position: 0,
            }),
        }
    }

    /// The transcendental symbol t, available in contexts hosted by Q[t].
    pub fn t_atom(&self) -> Result<Element> {
        if self.host_kind() == HostKind::PolyT {
            Ok(self.wrap(Repr::PolyT(vec![BigRational::zero(), BigRational::one()])))
        } else {
            Err(Error::UnknownSymbol {
                symbol: "t".to_string(),
                position: 0,
            })
        }
    }

    /// The generator g of a finite-field extension (the residue class of
    /// the modulus variable). Only meaningful for extension degree ≥ 2.
    pub fn generator(&self) -> Result<Element> {
        match self.finite_field_params() {
            Some((_, n, _)) if n >= 2 => {
                let mut c = vec![0u64; n];
                c[1] = 1;
                Ok(self.wrap(Repr::Residue(c)))
            }
            _ => Err(Error::UnknownSymbol {
                symbol: "g".to_string(),
                position: 0,
            }),
        }
    }

    pub fn add(&self, a: &Element, b: &Element) -> Result<Element> {
        self.check(a)?;
        self.check(b)?;
        let repr = match (&a.repr, &b.repr) {
            (Repr::Rat(x), Repr::Rat(y)) => Repr::Rat(x + y),
            (Repr::Tower(x), Repr::Tower(y)) => {
                Repr::Tower(x.iter().zip(y).map(|(u, v)| u + v).collect())
            }
            (Repr::PolyT(x), Repr::PolyT(y)) => Repr::PolyT(qpoly_add(x, y)),
            (Repr::Residue(x), Repr::Residue(y)) => {
                let p = self.characteristic();
                Repr::Residue(x.iter().zip(y).map(|(&u, &v)| (u + v) % p).collect())
            }
            _ => return Err(Error::ContextMismatch),
        };
        Ok(self.wrap(repr))
    }

    pub fn neg(&self, a: &Element) -> Result<Element> {
        self.check(a)?;
        let repr = match &a.repr {
            Repr::Rat(x) => Repr::Rat(-x),
            Repr::Tower(x) => Repr::Tower(x.iter().map(|u| -u).collect()),
            Repr::PolyT(x) => Repr::PolyT(x.iter().map(|u| -u).collect()),
            Repr::Residue(x) => {
                let p = self.characteristic();
                Repr::Residue(x.iter().map(|&u| (p - u) % p).collect())
            }
        };
        Ok(self.wrap(repr))
    }

    pub fn sub(&self, a: &Element, b: &Element) -> Result<Element> {
        let nb = self.neg(b)?;
        self.add(a, &nb)
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Result<Element> {
        self.check(a)?;
        self.check(b)?;
        let repr = match (&a.repr, &b.repr) {
            (Repr::Rat(x), Repr::Rat(y)) => Repr::Rat(x * y),
            (Repr::Tower(x), Repr::Tower(y)) => Repr::Tower(tower_mul(self.host_radicals(), x, y)),
            (Repr::PolyT(x), Repr::PolyT(y)) => Repr::PolyT(qpoly_mul(x, y)),
            (Repr::Residue(x), Repr::Residue(y)) => {
                Repr::Residue(residue_mul(self.modulus(), self.characteristic(), x, y))
            }
            _ => return Err(Error::ContextMismatch),
        };
        Ok(self.wrap(repr))
    }

    /// Multiplicative inverse. `DIVISION_BY_ZERO` on zero; `NOT_DIVISIBLE`
    /// for a nonconstant element of Q[t], which has no inverse there.
    pub fn inv(&self, a: &Element) -> Result<Element> {
        self.check(a)?;
        let repr = match &a.repr {
            Repr::Rat(x) => {
                if x.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Repr::Rat(x.recip())
            }
            Repr::Tower(x) => Repr::Tower(tower_inv(self.host_radicals(), x)?),
            Repr::PolyT(x) => match x.len() {
                0 => return Err(Error::DivisionByZero),
                1 => Repr::PolyT(vec![x[0].recip()]),
                _ => return Err(Error::NotDivisible),
            },
            Repr::Residue(x) => {
                Repr::Residue(residue_inv(self.modulus(), self.characteristic(), x)?)
            }
        };
        Ok(self.wrap(repr))
    }

    /// Division. Over Q[t] this is exact polynomial division and fails
    /// with `NOT_DIVISIBLE` when the quotient would leave a remainder.
    pub fn div(&self, a: &Element, b: &Element) -> Result<Element> {
        self.check(a)?;
        self.check(b)?;
        if let (Repr::PolyT(x), Repr::PolyT(y)) = (&a.repr, &b.repr) {
            if y.is_empty() {
                return Err(Error::DivisionByZero);
            }
            let (q, r) = qpoly_divmod(x, y);
            if !r.is_empty() {
                return Err(Error::NotDivisible);
            }
            return Ok(self.wrap(Repr::PolyT(q)));
        }
        let ib = self.inv(b)?;
        self.mul(a, &ib)
    }

    /// a^e by binary exponentiation; a^0 = 1 including for a = 0.
    pub fn pow(&self, a: &Element, e: u64) -> Result<Element> {
        self.check(a)?;
        let mut base = a.clone();
        let mut exp = e;
        let mut acc = self.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base)?;
            }
            exp >>= 1;
            if exp > 0 {
                base = self.mul(&base, &base)?;
            }
        }
        Ok(acc)
    }

    /// The membership predicate that the deficit is measured against:
    /// does `a` belong to the designated sub-domain F (or, for set
    /// contexts, to the set S)?
    pub fn is_in_subfield(&self, a: &Element) -> Result<bool> {
        use crate::context::{ContextSpec, SetId};
        self.check(a)?;
        Ok(match (self.spec(), &a.repr) {
            (ContextSpec::Rationals, _) => true,
            (ContextSpec::MultiQuadratic { .. }, Repr::Tower(c)) => {
                c[1..].iter().all(Zero::is_zero)
            }
            (ContextSpec::Transcendental, Repr::PolyT(c)) => c.len() <= 1,
            (ContextSpec::FiniteField { .. }, Repr::Residue(c)) => {
                let (p, n, m) = self.finite_field_params().unwrap();
                if m == n {
                    true
                } else if m == 1 {
                    // The prime field is exactly the set of constant residues.
                    c[1..].iter().all(|&d| d == 0)
                } else {
                    // Frobenius fixed-point test: a ∈ GF(p^m) ⟺ a^(p^m) = a.
                    let q = (p as u128).pow(m as u32);
                    let power = residue_pow(self.modulus(), p, c, q);
                    power == *c
                }
            }
            (ContextSpec::RingZInQ, Repr::Rat(r)) => r.denom().is_one(),
            (
                ContextSpec::SetContext {
                    set: SetId::ComplementQ,
                },
                Repr::PolyT(c),
            ) => c.len() > 1,
            (
                ContextSpec::SetContext {
                    set: SetId::RealsUnionImag,
                },
                Repr::Tower(c),
            ) => c[0].is_zero() || c[1].is_zero(),
            _ => return Err(Error::ContextMismatch),
        })
    }

    /// The rational value of an element, when it has one.
    pub fn as_rational(&self, a: &Element) -> Option<BigRational> {
        match &a.repr {
            Repr::Rat(r) => Some(r.clone()),
            Repr::Tower(c) if c[1..].iter().all(Zero::is_zero) => Some(c[0].clone()),
            Repr::PolyT(c) if c.is_empty() => Some(BigRational::zero()),
            Repr::PolyT(c) if c.len() == 1 => Some(c[0].clone()),
            _ => None,
        }
    }
}

fn bigint_mod(v: &BigInt, p: u64) -> u64 {
    use num::ToPrimitive;
    let p_big = BigInt::from(p);
    let mut r = v % &p_big;
    if r.is_negative() {
        r += &p_big;
    }
    r.to_u64().unwrap()
}

// ---- tower arithmetic --------------------------------------------------

/// Basis products: e_S · e_T = (∏_{j ∈ S∩T} d_j) · e_{S xor T}.
fn tower_mul(radicals: &[i64], a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let size = a.len();
    let mut out = vec![BigRational::zero(); size];
    for s in 0..size {
        if a[s].is_zero() {
            continue;
        }
        for t in 0..size {
            if b[t].is_zero() {
                continue;
            }
            let mut term = &a[s] * &b[t];
            let overlap = s & t;
            if overlap != 0 {
                let mut factor = BigInt::one();
                for (j, &d) in radicals.iter().enumerate() {
                    if overlap & (1 << j) != 0 {
                        factor *= BigInt::from(d);
                    }
                }
                term *= BigRational::from_integer(factor);
            }
            out[s ^ t] += term;
        }
    }
    out
}

/// Inverse by conjugation down the tower: writing x = u + v·√d over the
/// subtower, x⁻¹ = (u − v·√d) / (u² − d·v²), and the denominator lives one
/// level down. Radical independence guarantees the denominator vanishes
/// only for x = 0.
fn tower_inv(radicals: &[i64], a: &[BigRational]) -> Result<Vec<BigRational>> {
    if a.len() == 1 {
        if a[0].is_zero() {
            return Err(Error::DivisionByZero);
        }
        return Ok(vec![a[0].recip()]);
    }
    let half = a.len() / 2;
    let (lo, hi) = a.split_at(half);
    let sub = &radicals[..radicals.len() - 1];
    let d = BigRational::from_integer(BigInt::from(radicals[radicals.len() - 1]));
    let lo_sq = tower_mul(sub, lo, lo);
    let hi_sq = tower_mul(sub, hi, hi);
    let denom: Vec<BigRational> = lo_sq
        .iter()
        .zip(&hi_sq)
        .map(|(u, v)| u - &(v * &d))
        .collect();
    let denom_inv = tower_inv(sub, &denom)?;
    let mut out = tower_mul(sub, lo, &denom_inv);
    let hi_part = tower_mul(sub, hi, &denom_inv);
    out.extend(hi_part.into_iter().map(|x| -x));
    Ok(out)
}

// ---- rational polynomial arithmetic (Q[t] host) ------------------------

fn qpoly_trim(mut c: Vec<BigRational>) -> Vec<BigRational> {
    while c.last().is_some_and(Zero::is_zero) {
        c.pop();
    }
    c
}

fn qpoly_add(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] += x;
    }
    qpoly_trim(out)
}

fn qpoly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    qpoly_trim(out)
}

/// Long division over Q; callers decide whether a nonzero remainder is an
/// error.
fn qpoly_divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let db = b.len() - 1;
    if a.len() <= db {
        return (Vec::new(), a.to_vec());
    }
    let mut rem: Vec<BigRational> = a.to_vec();
    let mut quo = vec![BigRational::zero(); a.len() - db];
    let lead = &b[db];
    for k in (0..quo.len()).rev() {
        let c = &rem[k + db] / lead;
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            let prod = &c * bj;
            rem[k + j] -= prod;
        }
        quo[k] = c;
    }
    (qpoly_trim(quo), qpoly_trim(rem))
}

// ---- residue arithmetic (GF(p^n) host) ---------------------------------

fn residue_mul(modulus: &[u64], p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    let n = a.len();
    let mut buf = vec![0u64; 2 * n - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            buf[i + j] = ((buf[i + j] as u128 + x as u128 * y as u128) % p as u128) as u64;
        }
    }
    // Reduce by the monic modulus of degree n, top coefficient first.
    for i in (n..buf.len()).rev() {
        let c = buf[i];
        if c == 0 {
            continue;
        }
        buf[i] = 0;
        for (j, &mj) in modulus.iter().enumerate().take(n) {
            let sub = (c as u128 * mj as u128) % p as u128;
            let idx = i - n + j;
            buf[idx] = ((buf[idx] as u128 + p as u128 - sub) % p as u128) as u64;
        }
    }
    buf.truncate(n);
    buf
}

fn residue_pow(modulus: &[u64], p: u64, a: &[u64], mut e: u128) -> Vec<u64> {
    let n = a.len();
    let mut acc = vec![0u64; n];
    acc[0] = 1;
    let mut base = a.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            acc = residue_mul(modulus, p, &acc, &base);
        }
        e >>= 1;
        if e > 0 {
            base = residue_mul(modulus, p, &base, &base);
        }
    }
    acc
}

/// Extended Euclid over GF(p)[x] against the (irreducible) modulus.
fn residue_inv(modulus: &[u64], p: u64, a: &[u64]) -> Result<Vec<u64>> {
    let n = a.len();
    let trimmed = ppoly_trim(a.to_vec());
    if trimmed.is_empty() {
        return Err(Error::DivisionByZero);
    }
    // Invariant: old_s·a ≡ old_r and s·a ≡ r (mod modulus).
    let mut old_r = ppoly_trim(modulus.to_vec());
    let mut r = trimmed;
    let mut old_s: Vec<u64> = Vec::new();
    let mut s: Vec<u64> = vec![1];
    while !r.is_empty() {
        let (q, rem) = ppoly_divmod(&old_r, &r, p);
        old_r = std::mem::replace(&mut r, rem);
        let qs = ppoly_mul(&q, &s, p);
        let new_s = ppoly_sub(&old_s, &qs, p);
        old_s = std::mem::replace(&mut s, new_s);
    }
    // Irreducible modulus and nonzero a make the gcd a nonzero constant.
    debug_assert_eq!(old_r.len(), 1);
    let scale = scalar_inv(old_r[0], p);
    let mut out: Vec<u64> = old_s
        .iter()
        .map(|&c| ((c as u128 * scale as u128) % p as u128) as u64)
        .collect();
    out.resize(n, 0);
    Ok(out)
}

fn scalar_inv(a: u64, p: u64) -> u64 {
    // Extended Euclid on integers; p is prime and a ≢ 0.
    let (mut old_r, mut r) = (a as i128, p as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        old_r -= q * r;
        std::mem::swap(&mut old_r, &mut r);
        old_s -= q * s;
        std::mem::swap(&mut old_s, &mut s);
    }
    (old_s.rem_euclid(p as i128)) as u64
}

fn ppoly_trim(mut c: Vec<u64>) -> Vec<u64> {
    while c.last() == Some(&0) {
        c.pop();
    }
    c
}

fn ppoly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = ((out[i + j] as u128 + x as u128 * y as u128) % p as u128) as u64;
        }
    }
    ppoly_trim(out)
}

fn ppoly_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len().max(b.len())];
    for (i, &x) in a.iter().enumerate() {
        out[i] = x % p;
    }
    for (i, &x) in b.iter().enumerate() {
        out[i] = (out[i] + p - x % p) % p;
    }
    ppoly_trim(out)
}

fn ppoly_divmod(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let db = b.len() - 1;
    if a.len() <= db {
        return (Vec::new(), a.to_vec());
    }
    let lead_inv = scalar_inv(b[db], p);
    let mut rem = a.to_vec();
    let mut quo = vec![0u64; a.len() - db];
    for k in (0..quo.len()).rev() {
        let c = ((rem[k + db] as u128 * lead_inv as u128) % p as u128) as u64;
        if c == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            let sub = (c as u128 * bj as u128) % p as u128;
            rem[k + j] = ((rem[k + j] as u128 + p as u128 - sub) % p as u128) as u64;
        }
        quo[k] = c;
    }
    (ppoly_trim(quo), ppoly_trim(rem))
}
