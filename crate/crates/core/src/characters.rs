//! The ungraded standard character: a bimodule with a filtration by twisted
//! bimodules `R_x` (shifts forgotten) maps to `Σ mult_x δ_x` in `Z[W]`.

use std::collections::BTreeMap;

use crate::coxeter::{CoxeterGroup, Elem, ElemSet};
use crate::grotring::{Generator, RingElement};
use crate::laurent::Coefficient;

/// An element of the group ring `C[W]`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GroupRing<C> {
    coeffs: BTreeMap<Elem, C>,
}

impl<C: Coefficient> GroupRing<C> {
    pub fn zero() -> Self {
        GroupRing {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn delta(w: Elem) -> Self {
        let mut out = Self::zero();
        out.add(w, C::one());
        out
    }

    pub fn one() -> Self {
        Self::delta(Elem::IDENTITY)
    }

    /// `Σ_{x ∈ A} δ_x`
    pub fn indicator(a: ElemSet) -> Self {
        let mut out = Self::zero();
        for x in a.iter() {
            out.add(x, C::one());
        }
        out
    }

    pub fn add(&mut self, w: Elem, c: C) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(w).or_insert_with(C::zero);
        *slot = slot.clone() + c;
        if slot.is_zero() {
            self.coeffs.remove(&w);
        }
    }

    pub fn coeff(&self, w: Elem) -> C {
        self.coeffs.get(&w).cloned().unwrap_or_else(C::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (Elem, &C)> {
        self.coeffs.iter().map(|(&w, c)| (w, c))
    }

    pub fn support(&self) -> ElemSet {
        ElemSet::from_elems(self.coeffs.keys().copied())
    }

    /// Sum of all coefficients.
    pub fn mass(&self) -> C {
        self.coeffs.values().fold(C::zero(), |acc, c| acc + c.clone())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add(w, c.clone());
        }
        out
    }

    pub fn convolve(&self, other: &Self, group: &CoxeterGroup) -> Self {
        let mut out = Self::zero();
        for (x, a) in self.terms() {
            for (y, b) in other.terms() {
                out.add(group.mul(x, y), a.clone() * b.clone());
            }
        }
        out
    }

    /// `1*e + 1*t + ...`, elements in canonical order.
    pub fn format(&self, group: &CoxeterGroup) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        let parts: Vec<_> = self
            .terms()
            .map(|(w, c)| format!("{c}*{}", group.format_elem(w)))
            .collect();
        parts.join(" + ")
    }

    pub fn to_json(&self, group: &CoxeterGroup) -> serde_json::Value {
        let map: serde_json::Map<_, _> = self
            .terms()
            .map(|(w, c)| (group.format_elem(w), crate::laurent::coefficient_json(c)))
            .collect();
        serde_json::Value::Object(map)
    }
}

/// `B_t ↦ δ_e + δ_t`, `R_w ↦ δ_w`.
pub fn uch_of_generator<C: Coefficient>(g: Generator) -> GroupRing<C> {
    match g {
        Generator::B(t) => GroupRing::indicator(ElemSet::from_elems([Elem::IDENTITY, t])),
        Generator::R(w) => GroupRing::delta(w),
    }
}

/// Convolution of generator characters in word order.
pub fn uch_of_word<C: Coefficient>(group: &CoxeterGroup, word: &[Generator]) -> GroupRing<C> {
    word.iter().fold(GroupRing::one(), |acc, &g| acc.convolve(&uch_of_generator(g), group))
}

/// `[R(A)] ↦ Σ_{x∈A} δ_x` with `v ↦ 1`.
pub fn uch_of_class<C: Coefficient>(x: &RingElement<C>) -> GroupRing<C> {
    let mut out = GroupRing::zero();
    for (a, c) in x.terms() {
        let at_one = c.eval_at_one();
        for w in a.iter() {
            out.add(w, at_one.clone());
        }
    }
    out
}
