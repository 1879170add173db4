//! Dense univariate polynomials over a context: arithmetic, composition,
//! iteration, and the subfield deficit.

use serde::Serialize;

use crate::context::{CtxId, FieldContext};
use crate::element::Element;
use crate::error::{Error, Result};

/// Default cap on result coefficient counts for operations that can blow
/// up (iteration, oracle composition).
pub const DEFAULT_COEFF_CAP: usize = 4096;

/// A univariate polynomial; `coeffs[k]` is the coefficient of x^k.
/// The vector carries no trailing zeros; the zero polynomial is empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly1 {
    ctx: CtxId,
    coeffs: Vec<Element>,
}

impl Poly1 {
    /// Builds a polynomial from low-to-high coefficients, trimming
    /// trailing zeros. Every coefficient must belong to `ctx`.
    pub fn new(ctx: &FieldContext, mut coeffs: Vec<Element>) -> Result<Self> {
        if coeffs.iter().any(|c| c.ctx_id() != ctx.id()) {
            return Err(Error::ContextMismatch);
        }
        while coeffs.last().is_some_and(Element::is_zero) {
            coeffs.pop();
        }
        Ok(Poly1 {
            ctx: ctx.id(),
            coeffs,
        })
    }

    pub fn zero(ctx: &FieldContext) -> Self {
        Poly1 {
            ctx: ctx.id(),
            coeffs: Vec::new(),
        }
    }

    pub fn constant(ctx: &FieldContext, c: Element) -> Result<Self> {
        Self::new(ctx, vec![c])
    }

    /// The identity polynomial x.
    pub fn identity(ctx: &FieldContext) -> Self {
        Poly1 {
            ctx: ctx.id(),
            coeffs: vec![ctx.zero(), ctx.one()],
        }
    }

    /// c·x^k.
    pub fn monomial(ctx: &FieldContext, c: Element, k: usize) -> Result<Self> {
        let mut coeffs = vec![ctx.zero(); k];
        coeffs.push(c);
        Self::new(ctx, coeffs)
    }

    pub fn ctx_id(&self) -> CtxId {
        self.ctx
    }

    pub fn coeffs(&self) -> &[Element] {
        &self.coeffs
    }

    /// Coefficient of x^k (zero beyond the degree is not materialized;
    /// use [`Poly1::coeff_or_zero`] for that).
    pub fn coeff(&self, k: usize) -> Option<&Element> {
        self.coeffs.get(k)
    }

    pub fn coeff_or_zero(&self, ctx: &FieldContext, k: usize) -> Element {
        self.coeffs.get(k).cloned().unwrap_or_else(|| ctx.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree of a nonzero polynomial.
    pub fn degree(&self) -> Result<usize> {
        if self.coeffs.is_empty() {
            Err(Error::ZeroPolynomial)
        } else {
            Ok(self.coeffs.len() - 1)
        }
    }

    /// Leading coefficient of a nonzero polynomial.
    pub fn leading(&self) -> Result<&Element> {
        self.coeffs.last().ok_or(Error::ZeroPolynomial)
    }
}

/// Degree, leading coefficient, and constant term of a nonzero polynomial.
pub fn poly_basics(ctx: &FieldContext, p: &Poly1) -> Result<(usize, Element, Element)> {
    let degree = p.degree()?;
    let lead = p.leading()?.clone();
    let constant = p.coeff_or_zero(ctx, 0);
    Ok((degree, lead, constant))
}

fn check_ctx(ctx: &FieldContext, p: &Poly1) -> Result<()> {
    if p.ctx == ctx.id() {
        Ok(())
    } else {
        Err(Error::ContextMismatch)
    }
}

pub fn add(ctx: &FieldContext, a: &Poly1, b: &Poly1) -> Result<Poly1> {
    check_ctx(ctx, a)?;
    check_ctx(ctx, b)?;
    let len = a.coeffs.len().max(b.coeffs.len());
    let mut out = Vec::with_capacity(len);
    for k in 0..len {
        let x = a.coeff_or_zero(ctx, k);
        let y = b.coeff_or_zero(ctx, k);
        out.push(ctx.add(&x, &y)?);
    }
    Poly1::new(ctx, out)
}

pub fn neg(ctx: &FieldContext, a: &Poly1) -> Result<Poly1> {
    check_ctx(ctx, a)?;
    let out: Result<Vec<Element>> = a.coeffs.iter().map(|c| ctx.neg(c)).collect();
    Poly1::new(ctx, out?)
}

pub fn sub(ctx: &FieldContext, a: &Poly1, b: &Poly1) -> Result<Poly1> {
    let nb = neg(ctx, b)?;
    add(ctx, a, &nb)
}

pub fn mul(ctx: &FieldContext, a: &Poly1, b: &Poly1) -> Result<Poly1> {
    check_ctx(ctx, a)?;
    check_ctx(ctx, b)?;
    if a.is_zero() || b.is_zero() {
        return Ok(Poly1::zero(ctx));
    }
    let mut out = vec![ctx.zero(); a.coeffs.len() + b.coeffs.len() - 1];
    for (i, x) in a.coeffs.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.coeffs.iter().enumerate() {
            let term = ctx.mul(x, y)?;
            out[i + j] = ctx.add(&out[i + j], &term)?;
        }
    }
    Poly1::new(ctx, out)
}

/// Multiplies every coefficient by `s`.
pub fn scale(ctx: &FieldContext, a: &Poly1, s: &Element) -> Result<Poly1> {
    check_ctx(ctx, a)?;
    let out: Result<Vec<Element>> = a.coeffs.iter().map(|c| ctx.mul(c, s)).collect();
    Poly1::new(ctx, out?)
}

/// p∘q by Horner evaluation of p at q: fold from the top coefficient,
/// acc ← acc·q + a_k.
pub fn compose(ctx: &FieldContext, p: &Poly1, q: &Poly1) -> Result<Poly1> {
    check_ctx(ctx, p)?;
    check_ctx(ctx, q)?;
    let mut acc = Poly1::zero(ctx);
    for a_k in p.coeffs.iter().rev() {
        acc = mul(ctx, &acc, q)?;
        let constant = Poly1::constant(ctx, a_k.clone())?;
        acc = add(ctx, &acc, &constant)?;
    }
    Ok(acc)
}

/// The r-th iterate p ∘ p ∘ ... ∘ p (r copies), r ≥ 1, with an explicit
/// cap on the result's coefficient count.
pub fn iterate_capped(ctx: &FieldContext, p: &Poly1, r: u32, cap: usize) -> Result<Poly1> {
    assert!(r >= 1, "iterate requires r >= 1");
    check_ctx(ctx, p)?;
    if let Ok(n) = p.degree() {
        if n >= 2 {
            let needed = (n as u128)
                .checked_pow(r)
                .and_then(|d| d.checked_add(1))
                .unwrap_or(u128::MAX);
            if needed > cap as u128 {
                return Err(Error::DegreeOverflow {
                    needed: needed.min(usize::MAX as u128) as usize,
                    cap,
                });
            }
        }
    }
    let mut acc = p.clone();
    for _ in 1..r {
        acc = compose(ctx, p, &acc)?;
    }
    Ok(acc)
}

/// [`iterate_capped`] with the default cap.
pub fn iterate(ctx: &FieldContext, p: &Poly1, r: u32) -> Result<Poly1> {
    iterate_capped(ctx, p, r, DEFAULT_COEFF_CAP)
}

/// How a polynomial sits relative to the designated sub-domain F.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeficitReport {
    /// Degree (total degree for bivariate polynomials).
    pub degree: usize,
    /// True when every coefficient (or homogeneous part) lies in F.
    #[serde(rename = "in_F")]
    pub in_f: bool,
    /// Largest index whose coefficient (or part) lies outside F.
    #[serde(rename = "top_non_F_index")]
    pub top_non_f_index: Option<usize>,
    /// degree − top_non_F_index, or degree when everything is in F.
    pub deficit: usize,
}

/// The F-deficit of a nonzero polynomial: scan from the top for the
/// largest index with a coefficient outside F.
pub fn deficit1(ctx: &FieldContext, p: &Poly1) -> Result<DeficitReport> {
    check_ctx(ctx, p)?;
    let n = p.degree()?;
    for k in (0..=n).rev() {
        let c = &p.coeffs[k];
        if !ctx.is_in_subfield(c)? {
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
pub fn is_in_f_poly(ctx: &FieldContext, p: &Poly1) -> Result<bool> {
    check_ctx(ctx, p)?;
    for c in &p.coeffs {
        if !ctx.is_in_subfield(c)? {
            return Ok(false);
        }
    }
    Ok(true)
}
