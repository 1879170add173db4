//! Quick rejection for polynomial decomposition questions: given r and a
//! candidate inner q, the deficit sometimes rules out any outer p with
//! r = p ∘ q before any system of equations is attempted.

use serde::Serialize;

use crate::context::FieldContext;
use crate::error::{Error, Result};
use crate::poly::{deficit1, is_in_f_poly, poly_basics, Poly1};
use crate::theorems::some_non_f_at_ge1;

/// What the deficit says about the existence of an outer factor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict")]
pub enum Obstruction {
    /// No outer polynomial p over K can satisfy r = p ∘ q.
    #[serde(rename = "IMPOSSIBLE")]
    Impossible {
        /// Which invariant clash rules it out.
        reason: String,
    },
    /// The deficit raises no objection; a decomposition may or may not
    /// exist.
    #[serde(rename = "INCONCLUSIVE")]
    Inconclusive,
}

/// Tests whether the deficit obstructs writing `r` as p ∘ q for any outer
/// p. Degrees must be compatible (deg q ≥ 2, dividing deg r) or the
/// question is rejected outright; past that, when the forced leading
/// coefficient of p and the leading coefficient of q both lie in F and q
/// carries a non-F coefficient at index ≥ 1, a composition would have to
/// preserve q's deficit — so differing deficits rule every candidate out.
pub fn decomposition_obstruction(ctx: &FieldContext, r: &Poly1, q: &Poly1) -> Result<Obstruction> {
    let (deg_r, lead_r, _) = poly_basics(ctx, r)?;
    let (deg_q, lead_q, _) = poly_basics(ctx, q)?;
    if deg_q < 2 || deg_q > deg_r || deg_r % deg_q != 0 {
        return Err(Error::DegreeIncompatible {
            outer: deg_r,
            inner: deg_q,
        });
    }
    if !(ctx.f_is_field() && ctx.characteristic() == 0) {
        return Ok(Obstruction::Inconclusive);
    }
    let n = deg_r / deg_q;
    // Any p with r = p ∘ q has degree n and leading coefficient
    // lead(r) / lead(q)^n.
    let forced_lead = ctx.div(&lead_r, &ctx.pow(&lead_q, n as u64)?)?;
    let forced_in_f = ctx.is_in_subfield(&forced_lead)?
        && ctx.is_in_subfield(&lead_q)?
        && !is_in_f_poly(ctx, q)?
        && some_non_f_at_ge1(ctx, q)?;
    if forced_in_f {
        let d_r = deficit1(ctx, r)?.deficit;
        let d_q = deficit1(ctx, q)?.deficit;
        if d_r != d_q {
            return Ok(Obstruction::Impossible {
                reason: format!(
                    "any outer factor would have leading coefficient in F, \
                     forcing the composition to preserve the inner deficit; \
                     but the target has deficit {d_r} while the inner \
                     candidate has deficit {d_q}"
                ),
            });
        }
    }
    Ok(Obstruction::Inconclusive)
}
