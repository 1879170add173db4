//! Bivariate polynomials stored by homogeneous components, the
//! two-variable deficit, and diagonal substitutions p(q(x), q(x)).

use std::collections::BTreeMap;

use crate::context::{CtxId, FieldContext};
use crate::element::Element;
use crate::error::{Error, Result};
use crate::poly::{self, DeficitReport, Poly1, DEFAULT_COEFF_CAP};

/// A bivariate polynomial; `parts[k]` is the homogeneous component of
/// total degree k, stored as (exponent of x, coefficient) pairs with
/// strictly increasing exponents and no zero coefficients. The exponent
/// of y is implied as k minus the exponent of x. The top part is
/// nonempty (the zero polynomial has no parts at all); components below
/// the top may be empty.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly2 {
    ctx: CtxId,
    parts: Vec<Vec<(usize, Element)>>,
}

impl Poly2 {
    /// Builds a polynomial from (x exponent, y exponent, coefficient)
    /// monomials; repeated exponent pairs are summed and zero terms
    /// dropped.
    pub fn new(ctx: &FieldContext, monomials: Vec<(usize, usize, Element)>) -> Result<Self> {
        let mut acc: BTreeMap<(usize, usize), Element> = BTreeMap::new();
        for (xe, ye, c) in monomials {
            if c.ctx_id() != ctx.id() {
                return Err(Error::ContextMismatch);
            }
            let key = (xe + ye, xe);
            match acc.remove(&key) {
                Some(prev) => {
                    acc.insert(key, ctx.add(&prev, &c)?);
                }
                None => {
                    acc.insert(key, c);
                }
            }
        }
        let mut parts: Vec<Vec<(usize, Element)>> = Vec::new();
        for ((k, xe), c) in acc {
            if c.is_zero() {
                continue;
            }
            if parts.len() <= k {
                parts.resize_with(k + 1, Vec::new);
            }
            parts[k].push((xe, c));
        }
        while parts.last().is_some_and(Vec::is_empty) {
            parts.pop();
        }
        Ok(Poly2 {
            ctx: ctx.id(),
            parts,
        })
    }

    pub fn zero(ctx: &FieldContext) -> Self {
        Poly2 {
            ctx: ctx.id(),
            parts: Vec::new(),
        }
    }

    pub fn constant(ctx: &FieldContext, c: Element) -> Result<Self> {
        Self::new(ctx, vec![(0, 0, c)])
    }

    /// c·x^a·y^b.
    pub fn monomial(ctx: &FieldContext, c: Element, xe: usize, ye: usize) -> Result<Self> {
        Self::new(ctx, vec![(xe, ye, c)])
    }

    /// The coordinate polynomial x.
    pub fn var_x(ctx: &FieldContext) -> Self {
        Poly2 {
            ctx: ctx.id(),
            parts: vec![Vec::new(), vec![(1, ctx.one())]],
        }
    }

    /// The coordinate polynomial y.
    pub fn var_y(ctx: &FieldContext) -> Self {
        Poly2 {
            ctx: ctx.id(),
            parts: vec![Vec::new(), vec![(0, ctx.one())]],
        }
    }

    pub fn ctx_id(&self) -> CtxId {
        self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.parts.len() <= 1
    }

    /// Total degree of a nonzero polynomial.
    pub fn total_degree(&self) -> Result<usize> {
        if self.parts.is_empty() {
            Err(Error::ZeroPolynomial)
        } else {
            Ok(self.parts.len() - 1)
        }
    }

    pub fn parts(&self) -> &[Vec<(usize, Element)>] {
        &self.parts
    }

    /// All monomials as (x exponent, y exponent, coefficient), ordered by
    /// total degree and then by x exponent.
    pub fn monomials(&self) -> Vec<(usize, usize, &Element)> {
        let mut out = Vec::new();
        for (k, part) in self.parts.iter().enumerate() {
            for (xe, c) in part {
                out.push((*xe, k - xe, c));
            }
        }
        out
    }
}

fn check_ctx2(ctx: &FieldContext, p: &Poly2) -> Result<()> {
    if p.ctx == ctx.id() {
        Ok(())
    } else {
        Err(Error::ContextMismatch)
    }
}

fn owned_monomials(p: &Poly2) -> Vec<(usize, usize, Element)> {
    p.monomials()
        .into_iter()
        .map(|(xe, ye, c)| (xe, ye, c.clone()))
        .collect()
}

pub fn add2(ctx: &FieldContext, a: &Poly2, b: &Poly2) -> Result<Poly2> {
    check_ctx2(ctx, a)?;
    check_ctx2(ctx, b)?;
    let mut monomials = owned_monomials(a);
    monomials.extend(owned_monomials(b));
    Poly2::new(ctx, monomials)
}

pub fn neg2(ctx: &FieldContext, a: &Poly2) -> Result<Poly2> {
    check_ctx2(ctx, a)?;
    let mut monomials = Vec::new();
    for (xe, ye, c) in a.monomials() {
        monomials.push((xe, ye, ctx.neg(c)?));
    }
    Poly2::new(ctx, monomials)
}

pub fn sub2(ctx: &FieldContext, a: &Poly2, b: &Poly2) -> Result<Poly2> {
    let nb = neg2(ctx, b)?;
    add2(ctx, a, &nb)
}

pub fn mul2(ctx: &FieldContext, a: &Poly2, b: &Poly2) -> Result<Poly2> {
    check_ctx2(ctx, a)?;
    check_ctx2(ctx, b)?;
    let mut monomials = Vec::new();
    for (xa, ya, ca) in a.monomials() {
        for (xb, yb, cb) in b.monomials() {
            monomials.push((xa + xb, ya + yb, ctx.mul(ca, cb)?));
        }
    }
    Poly2::new(ctx, monomials)
}

/// Multiplies every coefficient by `s`.
pub fn scale2(ctx: &FieldContext, a: &Poly2, s: &Element) -> Result<Poly2> {
    check_ctx2(ctx, a)?;
    let mut monomials = Vec::new();
    for (xe, ye, c) in a.monomials() {
        monomials.push((xe, ye, ctx.mul(c, s)?));
    }
    Poly2::new(ctx, monomials)
}

/// The nonzero homogeneous components of `p`, each tagged with its total
/// degree and whether every one of its coefficients lies in F.
pub fn homogeneous_parts(ctx: &FieldContext, p: &Poly2) -> Result<Vec<(usize, Poly2, bool)>> {
    check_ctx2(ctx, p)?;
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut out = Vec::new();
    for (k, part) in p.parts.iter().enumerate() {
        if part.is_empty() {
            continue;
        }
        let monomials = part
            .iter()
            .map(|(xe, c)| (*xe, k - xe, c.clone()))
            .collect();
        let component = Poly2::new(ctx, monomials)?;
        let mut in_f = true;
        for (_, c) in part {
            if !ctx.is_in_subfield(c)? {
                in_f = false;
                break;
            }
        }
        out.push((k, component, in_f));
    }
    Ok(out)
}

/// The two-variable deficit: scan homogeneous components from the top
/// for the largest degree whose component has a coefficient outside F.
pub fn deficit2(ctx: &FieldContext, p: &Poly2) -> Result<DeficitReport> {
    check_ctx2(ctx, p)?;
    let n = p.total_degree()?;
    for k in (0..=n).rev() {
        let mut part_in_f = true;
        for (_, c) in &p.parts[k] {
            if !ctx.is_in_subfield(c)? {
                part_in_f = false;
                break;
            }
        }
        if !part_in_f {
            return Ok(DeficitReport {
                degree: n,
                in_f: false,
                top_non_f_index: Some(k),
                deficit: n - k,
            });
        }
    }
    Ok(DeficitReport {
        degree: n,
        in_f: true,
        top_non_f_index: None,
        deficit: n,
    })
}

/// True when every coefficient of `p` lies in F (vacuously for zero).
pub fn is_in_f_poly2(ctx: &FieldContext, p: &Poly2) -> Result<bool> {
    check_ctx2(ctx, p)?;
    for part in &p.parts {
        for (_, c) in part {
            if !ctx.is_in_subfield(c)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// p(q(x,y)) for univariate p, by Horner in the bivariate ring, with an
/// explicit cap on the number of monomials the result could hold.
pub fn compose_uni_bi_capped(
    ctx: &FieldContext,
    p: &Poly1,
    q: &Poly2,
    cap: usize,
) -> Result<Poly2> {
    if p.ctx_id() != ctx.id() {
        return Err(Error::ContextMismatch);
    }
    check_ctx2(ctx, q)?;
    if let (Ok(n), Ok(m)) = (p.degree(), q.total_degree()) {
        if n >= 1 && m >= 1 {
            let d = n as u128 * m as u128;
            let needed = ((d + 1) * (d + 2) / 2).min(usize::MAX as u128) as usize;
            if needed > cap {
                return Err(Error::DegreeOverflow { needed, cap });
            }
        }
    }
    let mut acc = Poly2::zero(ctx);
    for a_k in p.coeffs().iter().rev() {
        acc = mul2(ctx, &acc, q)?;
        let constant = Poly2::constant(ctx, a_k.clone())?;
        acc = add2(ctx, &acc, &constant)?;
    }
    Ok(acc)
}

/// [`compose_uni_bi_capped`] with the default cap.
pub fn compose_uni_bi(ctx: &FieldContext, p: &Poly1, q: &Poly2) -> Result<Poly2> {
    compose_uni_bi_capped(ctx, p, q, DEFAULT_COEFF_CAP)
}

/// Substituting the same value for both variables turns each homogeneous
/// component p_k into (sum of its coefficients)·z^k; the diagonal
/// substitution is that univariate polynomial evaluated at q.
fn collapse_diagonal(ctx: &FieldContext, p: &Poly2) -> Result<Poly1> {
    let mut coeffs = vec![ctx.zero(); p.parts.len()];
    for (k, part) in p.parts.iter().enumerate() {
        for (_, c) in part {
            coeffs[k] = ctx.add(&coeffs[k], c)?;
        }
    }
    Poly1::new(ctx, coeffs)
}

/// p(q(x), q(x)) for bivariate p and univariate q.
pub fn diag_subst_uni(ctx: &FieldContext, p: &Poly2, q: &Poly1) -> Result<Poly1> {
    check_ctx2(ctx, p)?;
    if q.ctx_id() != ctx.id() {
        return Err(Error::ContextMismatch);
    }
    let s = collapse_diagonal(ctx, p)?;
    poly::compose(ctx, &s, q)
}

/// p(q(x,y), q(x,y)) for bivariate p and q.
pub fn diag_subst_bi(ctx: &FieldContext, p: &Poly2, q: &Poly2) -> Result<Poly2> {
    check_ctx2(ctx, p)?;
    check_ctx2(ctx, q)?;
    let s = collapse_diagonal(ctx, p)?;
    let mut acc = Poly2::zero(ctx);
    for a_k in s.coeffs().iter().rev() {
        acc = mul2(ctx, &acc, q)?;
        let constant = Poly2::constant(ctx, a_k.clone())?;
        acc = add2(ctx, &acc, &constant)?;
    }
    Ok(acc)
}
