//! Split Grothendieck rings of the categories generated by the `B_t` (the
//! plain variant, rank 20) and by the `B_t` together with the twists `R_w`
//! (the extended variant, rank 25), for `W` of type `A2`.
//!
//! Both are free `Z[v^±1]`-modules on classes `[R(A)]`, where `A` runs over the
//! reflection-stable subsets of `W` plus singletons. `[M(1)] = v[M]`, so
//! `[B_t] = v[R({e,t})]`.

mod expansion;
pub mod primitives;
mod relations;
mod table;

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::ops::{Add, AddAssign, Neg, Sub};

use rayon::prelude::*;
use serde::Serialize;

use crate::coxeter::{CoxeterGroup, Elem, ElemSet};
use crate::error::{Error, Result};
use crate::laurent::{Coefficient, Laurent};

pub use expansion::{apply_word, generator_expansion, Generator, GeneratorWordExpr};
pub use primitives::{lemma_case, stabilizing_reflections, LemmaCase};
pub use relations::{RelationCheck, RelationReport};
pub use table::{StructureTable, TableFormat};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Plain,
    Extended,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::Plain => "plain",
            Variant::Extended => "extended",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "plain" => Ok(Variant::Plain),
            "extended" | "ext" => Ok(Variant::Extended),
            _ => Err(Error::Usage(format!("unknown category variant '{s}'"))),
        }
    }

    /// Whether `[R(A)]` is a basis class of this variant.
    pub fn is_valid(self, group: &CoxeterGroup, a: ElemSet) -> bool {
        match a.len() {
            0 => false,
            1 => self == Variant::Extended || a.contains(Elem::IDENTITY),
            _ => !stabilizing_reflections(group, a).is_empty(),
        }
    }
}

/// Index of the class `[R(A)]`. Ordered by cardinality, then bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BasisClass(pub ElemSet);

impl Ord for BasisClass {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.0.len(), self.0 .0).cmp(&(other.0.len(), other.0 .0))
    }
}

impl PartialOrd for BasisClass {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// The set `X` of nonempty subsets stabilized by some reflection, in basis order.
pub fn enumerate_x(group: &CoxeterGroup) -> Result<Vec<ElemSet>> {
    if group.order() > 16 {
        return Err(Error::Usage(format!(
            "enumerating X is limited to groups of order at most 16, {} has order {}",
            group.descriptor(),
            group.order()
        )));
    }
    let mut out: Vec<BasisClass> = (1u32..1 << group.order())
        .map(ElemSet)
        .filter(|&a| !stabilizing_reflections(group, a).is_empty())
        .map(BasisClass)
        .collect();
    out.sort();
    Ok(out.into_iter().map(|b| b.0).collect())
}

/// `X ∪ {{e}}` (plain) or `X ∪ {singletons}` (extended), sorted.
pub fn basis(group: &CoxeterGroup, variant: Variant) -> Result<Vec<BasisClass>> {
    let mut out: Vec<BasisClass> = enumerate_x(group)?.into_iter().map(BasisClass).collect();
    for w in group.elements() {
        if variant == Variant::Extended || w == Elem::IDENTITY {
            out.push(BasisClass(ElemSet::singleton(w)));
        }
    }
    out.sort();
    Ok(out)
}

/// A finite `Z[v^±1]`-combination of classes `[R(A)]`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RingElement<C> {
    terms: BTreeMap<BasisClass, Laurent<C>>,
}

impl<C: Coefficient> RingElement<C> {
    pub fn zero() -> Self {
        RingElement {
            terms: BTreeMap::new(),
        }
    }

    /// `[R(A)]`; the empty set gives zero.
    pub fn basis(a: ElemSet) -> Self {
        let mut out = Self::zero();
        out.add_term(a, Laurent::one());
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, a: ElemSet, c: Laurent<C>) {
        if c.is_zero() || a.is_empty() {
            return;
        }
        let key = BasisClass(a);
        let slot = self.terms.entry(key).or_default();
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// Terms in basis order.
    pub fn terms(&self) -> impl Iterator<Item = (ElemSet, &Laurent<C>)> {
        self.terms.iter().map(|(k, c)| (k.0, c))
    }

    pub fn coeff(&self, a: ElemSet) -> Laurent<C> {
        self.terms.get(&BasisClass(a)).cloned().unwrap_or_default()
    }

    pub fn support(&self) -> Vec<ElemSet> {
        self.terms.keys().map(|k| k.0).collect()
    }

    pub fn scale(&self, c: &Laurent<C>) -> Self {
        let mut out = Self::zero();
        for (a, d) in self.terms() {
            out.add_term(a, d * c);
        }
        out
    }

    pub fn map_sets(&self, f: impl Fn(ElemSet) -> ElemSet) -> Self {
        let mut out = Self::zero();
        for (a, c) in self.terms() {
            out.add_term(f(a), c.clone());
        }
        out
    }

    /// Every coefficient lies in `N[v^±1]`.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(Laurent::is_nonnegative)
    }

    /// E.g. `v*R{e,s1} + (v + v^-1)*R{s2}`.
    pub fn format(&self, group: &CoxeterGroup) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (a, c)) in self.terms().enumerate() {
            if i > 0 {
                out.push_str(" + ");
            }
            let set = format!("R{}", group.format_set(a));
            if c.is_one() {
                out.push_str(&set);
            } else if c.num_terms() == 1 {
                let _ = write!(out, "{c}*{set}");
            } else {
                let _ = write!(out, "({c})*{set}");
            }
        }
        out
    }

    /// `[{"set": [...], "coeff": {exp: int}}, ...]`
    pub fn to_json(&self, group: &CoxeterGroup) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms()
                .map(|(a, c)| {
                    let set: Vec<_> = a.iter().map(|x| group.format_elem(x)).collect();
                    serde_json::json!({ "set": set, "coeff": c.to_json() })
                })
                .collect(),
        )
    }
}

impl<C: Coefficient> AddAssign<&RingElement<C>> for RingElement<C> {
    fn add_assign(&mut self, rhs: &RingElement<C>) {
        for (a, c) in rhs.terms() {
            self.add_term(a, c.clone());
        }
    }
}

impl<C: Coefficient> Add for &RingElement<C> {
    type Output = RingElement<C>;
    fn add(self, rhs: &RingElement<C>) -> RingElement<C> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<C: Coefficient> Neg for &RingElement<C> {
    type Output = RingElement<C>;
    fn neg(self) -> RingElement<C> {
        self.scale(&-Laurent::one())
    }
}

impl<C: Coefficient> Sub for &RingElement<C> {
    type Output = RingElement<C>;
    fn sub(self, rhs: &RingElement<C>) -> RingElement<C> {
        self + &(-rhs)
    }
}

/// The ring `⟨C⟩` or `⟨C^ext⟩` for `W = A2`, with its generator expansions and
/// full structure constants computed at construction.
#[derive(Debug, Clone)]
pub struct GrothendieckRing<C> {
    group: CoxeterGroup,
    variant: Variant,
    basis: Vec<BasisClass>,
    position: HashMap<BasisClass, usize>,
    expansions: Vec<GeneratorWordExpr<C>>,
    // products[i][j] = [R(A_i)][R(A_j)]
    products: Vec<Vec<RingElement<C>>>,
}

impl<C: Coefficient> GrothendieckRing<C> {
    pub fn new(variant: Variant) -> Result<Self> {
        Self::with_group(CoxeterGroup::a2(), variant)
    }

    pub fn with_group(group: CoxeterGroup, variant: Variant) -> Result<Self> {
        if !group.is_a2() {
            return Err(Error::Usage(format!(
                "the Grothendieck ring is only available for a2, not {}",
                group.descriptor()
            )));
        }
        let basis = self::basis(&group, variant)?;
        let position = basis.iter().enumerate().map(|(i, &b)| (b, i)).collect();
        let mut exprs = generator_expansion::<C>(&group, variant, &basis)?;
        let expansions: Vec<_> = basis.iter().map(|b| exprs.remove(b).unwrap()).collect();
        let mut ring = GrothendieckRing {
            group,
            variant,
            basis,
            position,
            expansions,
            products: Vec::new(),
        };
        let products: Result<Vec<Vec<_>>> = (0..ring.rank())
            .into_par_iter()
            .map(|i| {
                (0..ring.rank())
                    .map(|j| {
                        let y = RingElement::basis(ring.basis[j].0);
                        ring.expansions[i].apply(&ring.group, &y)
                    })
                    .collect()
            })
            .collect();
        ring.products = products?;
        for row in &ring.products {
            for p in row {
                ring.check_valid(p)?;
            }
        }
        Ok(ring)
    }

    pub fn group(&self) -> &CoxeterGroup {
        &self.group
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisClass] {
        &self.basis
    }

    pub fn position(&self, a: ElemSet) -> Option<usize> {
        self.position.get(&BasisClass(a)).copied()
    }

    fn check_valid(&self, x: &RingElement<C>) -> Result<()> {
        match x.terms().find(|(a, _)| self.position(*a).is_none()) {
            Some((a, _)) => Err(Error::InvalidClass(
                format!("R{}", self.group.format_set(a)),
                self.variant.name(),
            )),
            None => Ok(()),
        }
    }

    pub fn unit(&self) -> RingElement<C> {
        RingElement::basis(ElemSet::singleton(Elem::IDENTITY))
    }

    /// `[R(A)]`, validated against the basis.
    pub fn class(&self, a: ElemSet) -> Result<RingElement<C>> {
        let x = RingElement::basis(a);
        if a.is_empty() {
            return Err(Error::InvalidClass("R{}".into(), self.variant.name()));
        }
        self.check_valid(&x)?;
        Ok(x)
    }

    /// `[B_t] = v[R({e,t})]`.
    pub fn b_class(&self, t: Elem) -> Result<RingElement<C>> {
        if !self.group.is_reflection(t) {
            return Err(Error::Usage(format!("{} is not a reflection", self.group.format_elem(t))));
        }
        Ok(RingElement::basis(ElemSet::from_elems([Elem::IDENTITY, t])).scale(&Laurent::v_pow(1)))
    }

    /// `[R_w]`; only `w = e` exists in the plain variant.
    pub fn r_class(&self, w: Elem) -> Result<RingElement<C>> {
        self.class(ElemSet::singleton(w))
    }

    /// `C_i = [B_{t_i}]` for `i` in `1..=3`.
    pub fn c_gen(&self, i: usize) -> RingElement<C> {
        let ts = self.group.a2_reflections().expect("a2");
        self.b_class(ts[i - 1]).expect("t_i is a reflection")
    }

    pub fn expansion(&self, a: ElemSet) -> Option<&GeneratorWordExpr<C>> {
        self.position(a).map(|i| &self.expansions[i])
    }

    pub fn lmul_b(&self, t: Elem, x: &RingElement<C>) -> Result<RingElement<C>> {
        let out = primitives::lmul_b(&self.group, t, x)?;
        self.check_valid(&out)?;
        Ok(out)
    }

    pub fn rmul_b(&self, x: &RingElement<C>, t: Elem) -> Result<RingElement<C>> {
        let out = primitives::rmul_b(&self.group, x, t)?;
        self.check_valid(&out)?;
        Ok(out)
    }

    pub fn lmul_r(&self, w: Elem, x: &RingElement<C>) -> Result<RingElement<C>> {
        let out = primitives::lmul_r(&self.group, w, x);
        self.check_valid(&out)?;
        Ok(out)
    }

    pub fn rmul_r(&self, x: &RingElement<C>, w: Elem) -> Result<RingElement<C>> {
        let out = primitives::rmul_r(&self.group, x, w);
        self.check_valid(&out)?;
        Ok(out)
    }

    pub fn transpose(&self, x: &RingElement<C>) -> Result<RingElement<C>> {
        let out = primitives::transpose(&self.group, x);
        self.check_valid(&out)?;
        Ok(out)
    }

    /// Product computed from scratch: expand each class of `x` into generator
    /// words and apply them to `y`.
    pub fn product_by_expansion(&self, x: &RingElement<C>, y: &RingElement<C>) -> Result<RingElement<C>> {
        self.check_valid(x)?;
        self.check_valid(y)?;
        let mut out = RingElement::zero();
        for (a, c) in x.terms() {
            let i = self.position(a).expect("validated");
            out += &self.expansions[i].apply(&self.group, y)?.scale(c);
        }
        Ok(out)
    }

    /// Product through the precomputed structure constants.
    pub fn mul(&self, x: &RingElement<C>, y: &RingElement<C>) -> RingElement<C> {
        let mut out = RingElement::zero();
        for (a, c) in x.terms() {
            let i = self.position(a).expect("x is not an element of this ring");
            for (b, d) in y.terms() {
                let j = self.position(b).expect("y is not an element of this ring");
                out += &self.products[i][j].scale(&(c * d));
            }
        }
        out
    }

    /// Left-to-right product of a sequence of elements.
    pub fn mul_all<'a, I>(&self, factors: I) -> RingElement<C>
    where
        I: IntoIterator<Item = &'a RingElement<C>>,
    {
        factors
            .into_iter()
            .fold(self.unit(), |acc, f| self.mul(&acc, f))
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &RingElement<C> {
        &self.products[i][j]
    }

    /// `c_{AB}^C`
    pub fn structure_constant(&self, a: ElemSet, b: ElemSet, c: ElemSet) -> Option<Laurent<C>> {
        let (i, j) = (self.position(a)?, self.position(b)?);
        self.position(c)?;
        Some(self.products[i][j].coeff(c))
    }

    pub fn structure_constants(&self) -> StructureTable<'_, C> {
        StructureTable::new(self)
    }

    pub fn verify_relations(&self) -> RelationReport {
        relations::verify(self)
    }

    /// Coordinates of `x` in basis order.
    pub fn coordinates(&self, x: &RingElement<C>) -> Vec<Laurent<C>> {
        self.basis.iter().map(|b| x.coeff(b.0)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{LaurentPoly, Ring};

    fn ring(variant: Variant) -> Ring {
        Ring::new(variant).unwrap()
    }

    #[test]
    fn x_has_nineteen_members() {
        let g = CoxeterGroup::a2();
        let x = enumerate_x(&g).unwrap();
        assert_eq!(x.len(), 19);
        assert_eq!(x.iter().filter(|a| a.len() == 2).count(), 9);
        assert_eq!(x.iter().filter(|a| a.len() == 4).count(), 9);
        assert_eq!(x.iter().filter(|a| a.len() == 6).count(), 1);
        let t1 = g.a2_reflections().unwrap()[0];
        let et1 = ElemSet::from_elems([Elem::IDENTITY, t1]);
        assert!(x.contains(&et1));
        assert_eq!(stabilizing_reflections(&g, et1), ElemSet::singleton(t1));
        for &a in &x {
            if a.len() < g.order() {
                assert!(x.contains(&a.complement(g.order())));
            }
            assert!(x.contains(&g.invert_set(a)));
        }
    }

    #[test]
    fn ranks() {
        assert_eq!(ring(Variant::Plain).rank(), 20);
        assert_eq!(ring(Variant::Extended).rank(), 25);
    }

    #[test]
    fn enumerate_x_rejects_large_groups() {
        assert!(enumerate_x(&CoxeterGroup::a3()).is_err());
        assert!(Ring::with_group(CoxeterGroup::b2(), Variant::Plain).is_err());
    }

    #[test]
    fn expansions_evaluate_to_their_classes() {
        for variant in [Variant::Plain, Variant::Extended] {
            let r = ring(variant);
            for b in r.basis() {
                let e = r.expansion(b.0).unwrap();
                assert_eq!(e.evaluate(r.group()).unwrap(), RingElement::basis(b.0));
            }
        }
    }

    #[test]
    fn expansion_examples() {
        let r = ring(Variant::Plain);
        let g = r.group();
        let e = Elem::IDENTITY;
        for t in g.reflections().iter() {
            let expr = r.expansion(ElemSet::from_elems([e, t])).unwrap();
            let mut want = GeneratorWordExpr::zero();
            want.add_word(vec![Generator::B(t)], LaurentPoly::v_pow(-1));
            assert_eq!(expr, &want);
        }
        // {e, t, t1, t t1} is reached from {e, t1} by B_t
        let [t1, t2, _] = g.a2_reflections().unwrap();
        let a = ElemSet::from_elems([e, t2, t1, g.mul(t2, t1)]);
        let expr = r.expansion(a).unwrap();
        assert_eq!(expr.terms().count(), 1);
        let (word, c) = expr.terms().next().unwrap();
        assert_eq!(word.len(), 2);
        assert_eq!(c, &LaurentPoly::v_pow(-2));
    }

    #[test]
    fn products_from_decomposition_lemmas() {
        let r = ring(Variant::Plain);
        let g = r.group().clone();
        let e = Elem::IDENTITY;
        let [t1, t2, t3] = g.a2_reflections().unwrap();
        let v2 = LaurentPoly::v_pow(2);
        // B_t B_t1 = v^2 R({e, t, t1, t t1})
        for (t, u) in [(t2, t1), (t1, t3), (t3, t2)] {
            let got = r.mul(&r.b_class(t).unwrap(), &r.b_class(u).unwrap());
            let want = RingElement::basis(ElemSet::from_elems([e, t, u, g.mul(t, u)])).scale(&v2);
            assert_eq!(got, want);
        }
        // B_t1 B_{t1 t t1} = v^2 R({t1, t1 t t1, e, t t1})
        let t = t2;
        let c = g.conj(t1, t);
        let got = r.mul(&r.b_class(t1).unwrap(), &r.b_class(c).unwrap());
        let want = RingElement::basis(ElemSet::from_elems([t1, c, e, g.mul(t, t1)])).scale(&v2);
        assert_eq!(got, want);
        // B_t B_t = (v + v^-1) v R({e,t})
        let bt = r.b_class(t).unwrap();
        assert_eq!(r.mul(&bt, &bt), bt.scale(&LaurentPoly::quantum_two()));
        let q = LaurentPoly::quantum_two().shift(1);
        let et = ElemSet::from_elems([e, t]);
        assert_eq!(r.structure_constant(et, et, et), Some(q.shift(-2)));
        assert_eq!(r.mul(&bt, &r.unit()), bt);
    }

    #[test]
    fn unit_row_is_identity() {
        for variant in [Variant::Plain, Variant::Extended] {
            let r = ring(variant);
            let unit = r.unit();
            for b in r.basis() {
                let x = RingElement::basis(b.0);
                assert_eq!(r.mul(&unit, &x), x);
                assert_eq!(r.mul(&x, &unit), x);
            }
        }
    }

    #[test]
    fn table_agrees_with_expansion_route() {
        let r = ring(Variant::Extended);
        let [t1, t2, t3] = r.group().a2_reflections().unwrap();
        let x = &r.b_class(t1).unwrap() + &r.r_class(t2).unwrap().scale(&"2*v - 1".parse().unwrap());
        let y = &r.b_class(t3).unwrap() + &r.class(r.group().full_set()).unwrap();
        assert_eq!(r.mul(&x, &y), r.product_by_expansion(&x, &y).unwrap());
    }

    #[test]
    fn noncommutative() {
        let r = ring(Variant::Plain);
        let g = r.group();
        let e = Elem::IDENTITY;
        let [t1, _, t3] = g.a2_reflections().unwrap();
        let ab = r.mul(&r.c_gen(1), &r.c_gen(3));
        let ba = r.mul(&r.c_gen(3), &r.c_gen(1));
        assert_ne!(ab, ba);
        assert_eq!(ab.support(), vec![ElemSet::from_elems([e, t1, t3, g.mul(t1, t3)])]);
        assert_eq!(ba.support(), vec![ElemSet::from_elems([e, t1, t3, g.mul(t3, t1)])]);
    }

    #[test]
    fn plain_ring_rejects_twists() {
        let r = ring(Variant::Plain);
        let w = r.group().parse_elem("s1*s2").unwrap();
        assert!(matches!(r.r_class(w), Err(Error::InvalidClass(..))));
        assert!(r.r_class(Elem::IDENTITY).is_ok());
        let bad = r.rmul_r(&r.unit(), w);
        assert!(bad.is_err());
        let ok = r.rmul_r(&r.class(r.group().full_set()).unwrap(), w).unwrap();
        assert_eq!(ok.support(), vec![r.group().full_set()]);
    }

    #[test]
    fn transpose_examples() {
        let r = ring(Variant::Extended);
        let g = r.group().clone();
        let [t1, t2, _] = g.a2_reflections().unwrap();
        let et = r.class(ElemSet::from_elems([Elem::IDENTITY, t2])).unwrap();
        assert_eq!(r.transpose(&et).unwrap(), et);
        let w = g.parse_elem("s1*s2").unwrap();
        assert_eq!(r.transpose(&r.r_class(w).unwrap()).unwrap(), r.r_class(g.inv(w)).unwrap());
        let a = ElemSet::from_elems([t1, g.mul(t2, t1)]);
        let want = ElemSet::from_elems([t1, g.mul(t1, t2)]);
        assert_eq!(r.transpose(&r.class(a).unwrap()).unwrap(), RingElement::basis(want));
    }
}
