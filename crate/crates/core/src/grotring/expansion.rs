//! Expressions of basis classes as Laurent combinations of generator words.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use crate::coxeter::{CoxeterGroup, Elem, ElemSet};
use crate::error::{Error, Result};
use crate::laurent::{Coefficient, Laurent};

use super::primitives::{self, LemmaCase};
use super::{BasisClass, RingElement, Variant};

/// A generator of the extended category: `B_t` or the twist `R_w`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    B(Elem),
    R(Elem),
}

impl Generator {
    pub fn format(self, group: &CoxeterGroup) -> String {
        match self {
            Generator::B(t) => format!("B:{}", group.format_elem(t)),
            Generator::R(w) => format!("Rw:{}", group.format_elem(w)),
        }
    }

    /// Left-multiplies `x` by the class of this generator.
    pub fn apply<C: Coefficient>(
        self,
        group: &CoxeterGroup,
        x: &RingElement<C>,
    ) -> Result<RingElement<C>> {
        match self {
            Generator::B(t) => primitives::lmul_b(group, t, x),
            Generator::R(w) => Ok(primitives::lmul_r(group, w, x)),
        }
    }
}

/// Evaluates `g_1 g_2 ... g_k * x`, applying `g_k` first.
pub fn apply_word<C: Coefficient>(
    group: &CoxeterGroup,
    word: &[Generator],
    x: &RingElement<C>,
) -> Result<RingElement<C>> {
    word.iter()
        .rev()
        .try_fold(x.clone(), |acc, g| g.apply(group, &acc))
}

/// A formal `Z[v^±1]`-combination of generator words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorWordExpr<C> {
    terms: BTreeMap<Vec<Generator>, Laurent<C>>,
}

impl<C: Coefficient> GeneratorWordExpr<C> {
    pub fn zero() -> Self {
        GeneratorWordExpr {
            terms: BTreeMap::new(),
        }
    }

    pub fn word(word: Vec<Generator>) -> Self {
        let mut out = Self::zero();
        out.add_word(word, Laurent::one());
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[Generator], &Laurent<C>)> {
        self.terms.iter().map(|(w, c)| (w.as_slice(), c))
    }

    pub fn add_word(&mut self, word: Vec<Generator>, c: Laurent<C>) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(word.clone()).or_default();
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&word);
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &Laurent<C>) {
        for (w, d) in &other.terms {
            self.add_word(w.clone(), d * c);
        }
    }

    pub fn prepend(&self, g: Generator) -> Self {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            let mut word = Vec::with_capacity(w.len() + 1);
            word.push(g);
            word.extend_from_slice(w);
            out.add_word(word, c.clone());
        }
        out
    }

    /// Applies the expression to `x` by left multiplication.
    pub fn apply(&self, group: &CoxeterGroup, x: &RingElement<C>) -> Result<RingElement<C>> {
        let mut out = RingElement::zero();
        for (w, c) in &self.terms {
            out += &apply_word(group, w, x)?.scale(c);
        }
        Ok(out)
    }

    /// Evaluates on the unit `[R({e})]`.
    pub fn evaluate(&self, group: &CoxeterGroup) -> Result<RingElement<C>> {
        self.apply(group, &RingElement::basis(ElemSet::singleton(Elem::IDENTITY)))
    }

    pub fn max_word_len(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    pub fn format(&self, group: &CoxeterGroup) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                out.push_str(" + ");
            }
            let word = if w.is_empty() {
                "1".to_string()
            } else {
                w.iter().map(|g| g.format(group)).collect::<Vec<_>>().join("*")
            };
            if c.is_one() {
                out.push_str(&word);
            } else {
                let _ = write!(out, "({c})*{word}");
            }
        }
        out
    }
}

/// Solves for a word expression of every basis class by triangular
/// back-substitution through `[B_t][R(A)] = v[R(A ∪ tA)] + v^-1[R(A ∩ tA)]`.
pub fn generator_expansion<C: Coefficient>(
    group: &CoxeterGroup,
    variant: Variant,
    basis: &[BasisClass],
) -> Result<HashMap<BasisClass, GeneratorWordExpr<C>>> {
    let mut exprs: HashMap<BasisClass, GeneratorWordExpr<C>> = HashMap::new();
    exprs.insert(
        BasisClass(ElemSet::singleton(Elem::IDENTITY)),
        GeneratorWordExpr::word(Vec::new()),
    );
    if variant == Variant::Extended {
        for w in group.elements().filter(|&w| w != Elem::IDENTITY) {
            exprs.insert(
                BasisClass(ElemSet::singleton(w)),
                GeneratorWordExpr::word(vec![Generator::R(w)]),
            );
        }
    }
    let reflections: Vec<Elem> = group.reflections().iter().collect();
    loop {
        let mut progress = false;
        for &a in basis {
            let Some(expr_a) = exprs.get(&a).cloned() else {
                continue;
            };
            for &t in &reflections {
                if primitives::lemma_case(group, t, a.0)? == LemmaCase::Stable {
                    continue;
                }
                let image = primitives::lmul_b(group, t, &RingElement::<C>::basis(a.0))?;
                let unknown: Vec<_> = image.terms().filter(|(k, _)| !exprs.contains_key(&BasisClass(*k))).collect();
                let [(target, coeff)] = unknown.as_slice() else {
                    continue;
                };
                let target = BasisClass(*target);
                if !variant.is_valid(group, target.0) {
                    return Err(Error::Internal(format!(
                        "decomposition produced {} outside the {} basis",
                        group.format_set(target.0),
                        variant.name()
                    )));
                }
                let inverse = coeff
                    .is_unit_monomial()
                    .map(|(sign, k)| match sign {
                        crate::laurent::Sign::Plus => Laurent::v_pow(-k),
                        crate::laurent::Sign::Minus => -Laurent::v_pow(-k),
                    })
                    .ok_or_else(|| Error::Internal(format!("non-unit coefficient {coeff}")))?;
                let mut solved = expr_a.prepend(Generator::B(t));
                for (k, c) in image.terms() {
                    if BasisClass(k) != target {
                        solved.add_scaled(&exprs[&BasisClass(k)], &-c);
                    }
                }
                let mut scaled = GeneratorWordExpr::zero();
                scaled.add_scaled(&solved, &inverse);
                exprs.insert(target, scaled);
                progress = true;
            }
        }
        if !progress {
            break;
        }
    }
    if let Some(missing) = basis.iter().find(|a| !exprs.contains_key(a)) {
        return Err(Error::Internal(format!(
            "generator expansion reached a fixpoint without {}",
            group.format_set(missing.0)
        )));
    }
    Ok(exprs)
}
