//! Group-generic multiplication primitives on classes `[R(A)]`.
//!
//! These work in any supported group. The hypothesis of the decomposition
//! lemma is checked on every call, so outside `A2` a product may come back as
//! [`Error::LemmaNotApplicable`].

use crate::coxeter::{CoxeterGroup, Elem, ElemSet};
use crate::error::{Error, Result};
use crate::laurent::{Coefficient, Laurent};

use super::RingElement;

/// How `B_t ⊗ R(A)` decomposes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LemmaCase {
    /// `tA = A`: `R(A) ⊕ R(A)(-2)`, contributing `(v + v^-1)[R(A)]`.
    Stable,
    /// `A = {w}`: `B_t R_w = v[R({w, tw})]` by twisting.
    Singleton,
    /// `A \ tA` has two elements swapped by the reflection `partner ≠ t`.
    Split { partner: Elem },
}

/// All reflections `t` with `tA = A`.
pub fn stabilizing_reflections(group: &CoxeterGroup, a: ElemSet) -> ElemSet {
    ElemSet::from_elems(
        group
            .reflections()
            .iter()
            .filter(|&t| group.act_left(t, a) == a),
    )
}

pub fn lemma_case(group: &CoxeterGroup, t: Elem, a: ElemSet) -> Result<LemmaCase> {
    let not_applicable = |reason: String| Error::LemmaNotApplicable {
        set: group.format_set(a),
        reflection: group.format_elem(t),
        reason,
    };
    if !group.is_reflection(t) {
        return Err(Error::Usage(format!("{} is not a reflection", group.format_elem(t))));
    }
    if a.is_empty() {
        return Err(not_applicable("empty set".into()));
    }
    let ta = group.act_left(t, a);
    if ta == a {
        return Ok(LemmaCase::Stable);
    }
    if a.len() == 1 {
        return Ok(LemmaCase::Singleton);
    }
    if stabilizing_reflections(group, a).is_empty() {
        return Err(not_applicable("no reflection stabilizes A".into()));
    }
    let diff = a.difference(ta);
    if diff.len() != 2 {
        return Err(not_applicable(format!(
            "|A \\ (A ∩ tA)| = {}, expected 2",
            diff.len()
        )));
    }
    group
        .reflections()
        .iter()
        .find(|&r| r != t && group.act_left(r, diff) == diff)
        .map(|partner| LemmaCase::Split { partner })
        .ok_or_else(|| {
            not_applicable(format!(
                "A \\ (A ∩ tA) = {} is not stable under a reflection other than t",
                group.format_set(diff)
            ))
        })
}

/// `[B_t] * x` where `[B_t] = v[R({e,t})]`.
pub fn lmul_b<C: Coefficient>(
    group: &CoxeterGroup,
    t: Elem,
    x: &RingElement<C>,
) -> Result<RingElement<C>> {
    let mut out = RingElement::zero();
    for (a, c) in x.terms() {
        match lemma_case(group, t, a)? {
            LemmaCase::Stable => out.add_term(a, c * &Laurent::quantum_two()),
            LemmaCase::Singleton | LemmaCase::Split { .. } => {
                let ta = group.act_left(t, a);
                out.add_term(a.union(ta), c.shift(1));
                let meet = a.intersection(ta);
                if !meet.is_empty() {
                    out.add_term(meet, c.shift(-1));
                }
            }
        }
    }
    Ok(out)
}

/// `[R_w] * x`
pub fn lmul_r<C: Coefficient>(group: &CoxeterGroup, w: Elem, x: &RingElement<C>) -> RingElement<C> {
    x.map_sets(|a| group.act_left(w, a))
}

/// `x * [R_w]`
pub fn rmul_r<C: Coefficient>(group: &CoxeterGroup, x: &RingElement<C>, w: Elem) -> RingElement<C> {
    x.map_sets(|a| group.act_right(a, w))
}

/// The anti-automorphism `[R(A)] -> [R(A^-1)]`.
pub fn transpose<C: Coefficient>(group: &CoxeterGroup, x: &RingElement<C>) -> RingElement<C> {
    x.map_sets(|a| group.invert_set(a))
}

/// `x * [B_t]`, defined as `transpose([B_t] * transpose(x))`.
pub fn rmul_b<C: Coefficient>(
    group: &CoxeterGroup,
    x: &RingElement<C>,
    t: Elem,
) -> Result<RingElement<C>> {
    Ok(transpose(group, &lmul_b(group, t, &transpose(group, x))?))
}
