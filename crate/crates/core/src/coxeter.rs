//! Finite Coxeter groups: dihedral `I2(m)` (so `A2 = I2(3)`, `B2 = I2(4)`) and
//! `A3` realized as the symmetric group on four letters.
//!
//! A [`CoxeterGroup`] enumerates its elements once in a fixed canonical order and
//! precomputes the multiplication table, so elements are handled as small
//! indices ([`Elem`]) and subsets as bitmasks ([`ElemSet`]).

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupKind {
    Dihedral(u32),
    SymmetricA3,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupDescriptor {
    pub kind: GroupKind,
    pub labels: Vec<String>,
}

impl GroupDescriptor {
    pub fn a2() -> Self {
        Self::dihedral(3)
    }

    pub fn b2() -> Self {
        GroupDescriptor {
            kind: GroupKind::Dihedral(4),
            labels: vec!["s".into(), "t".into()],
        }
    }

    pub fn dihedral(m: u32) -> Self {
        GroupDescriptor {
            kind: GroupKind::Dihedral(m),
            labels: vec!["s1".into(), "s2".into()],
        }
    }

    pub fn a3() -> Self {
        GroupDescriptor {
            kind: GroupKind::SymmetricA3,
            labels: vec!["s".into(), "t".into(), "u".into()],
        }
    }

    pub fn order(&self) -> usize {
        match self.kind {
            GroupKind::Dihedral(m) => 2 * m as usize,
            GroupKind::SymmetricA3 => 24,
        }
    }

    pub fn name(&self) -> String {
        match (self.kind, self.labels[0].as_str()) {
            (GroupKind::Dihedral(3), _) => "a2".into(),
            (GroupKind::Dihedral(4), "s") => "b2".into(),
            (GroupKind::Dihedral(m), _) => format!("i2:{m}"),
            (GroupKind::SymmetricA3, _) => "a3".into(),
        }
    }

    /// Parses a CLI group selector: `a2`, `b2`, `a3` or `i2:<m>` with `m >= 3`.
    pub fn parse(selector: &str) -> Result<Self> {
        match selector.trim().to_ascii_lowercase().as_str() {
            "a2" => Ok(Self::a2()),
            "b2" => Ok(Self::b2()),
            "a3" => Ok(Self::a3()),
            other => {
                let m = other
                    .strip_prefix("i2:")
                    .and_then(|m| m.parse::<u32>().ok())
                    .ok_or_else(|| Error::Usage(format!("unknown group '{selector}'")))?;
                if !(3..=16).contains(&m) {
                    return Err(Error::Usage(format!(
                        "dihedral order m must lie in 3..=16, got {m}"
                    )));
                }
                Ok(Self::dihedral(m))
            }
        }
    }
}

/// Structural encoding of a group element.
///
/// Dihedral elements are `s^flip * r^rotation` with `r = s1 s2` and `s = s1`;
/// `A3` elements are permutations of `{0,1,2,3}` in one-line notation, composed
/// right to left (`(p*q)(i) = p(q(i))`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupElement {
    Dihedral { m: u32, rotation: u32, flip: bool },
    Perm([u8; 4]),
}

impl GroupElement {
    pub fn multiply(&self, other: &GroupElement) -> Result<GroupElement> {
        match (*self, *other) {
            (
                GroupElement::Dihedral {
                    m,
                    rotation: k,
                    flip: a,
                },
                GroupElement::Dihedral {
                    m: m2,
                    rotation: l,
                    flip: b,
                },
            ) if m == m2 => {
                // (s^a r^k)(s^b r^l) = s^(a+b) r^(l + (-1)^b k)
                let k = if b { (m - k) % m } else { k };
                Ok(GroupElement::Dihedral {
                    m,
                    rotation: (k + l) % m,
                    flip: a ^ b,
                })
            }
            (GroupElement::Perm(p), GroupElement::Perm(q)) => {
                let mut out = [0u8; 4];
                for (i, o) in out.iter_mut().enumerate() {
                    *o = p[q[i] as usize];
                }
                Ok(GroupElement::Perm(out))
            }
            _ => Err(Error::Usage(format!(
                "cannot multiply elements of different groups: {self:?} * {other:?}"
            ))),
        }
    }

    pub fn inverse(&self) -> GroupElement {
        match *self {
            GroupElement::Dihedral { m, rotation, flip } => GroupElement::Dihedral {
                m,
                rotation: if flip { rotation } else { (m - rotation) % m },
                flip,
            },
            GroupElement::Perm(p) => {
                let mut out = [0u8; 4];
                for (i, &pi) in p.iter().enumerate() {
                    out[pi as usize] = i as u8;
                }
                GroupElement::Perm(out)
            }
        }
    }

    /// Coxeter length, by closed form.
    pub fn length(&self) -> usize {
        match *self {
            GroupElement::Dihedral { m, rotation, flip } => {
                let (m, k) = (m as usize, rotation as usize);
                match (flip, k) {
                    (false, _) => 2 * k.min(m - k),
                    (true, 0) => 1,
                    (true, _) => (2 * k - 1).min(2 * (m - k) + 1),
                }
            }
            GroupElement::Perm(p) => {
                let mut inv = 0;
                for i in 0..4 {
                    for j in i + 1..4 {
                        if p[i] > p[j] {
                            inv += 1;
                        }
                    }
                }
                inv
            }
        }
    }

    /// Odd length and order two; validated against conjugation closure in tests.
    pub fn is_reflection(&self) -> bool {
        self.length() % 2 == 1 && self.multiply(self).ok() == Some(self.identity_like())
    }

    fn identity_like(&self) -> GroupElement {
        match *self {
            GroupElement::Dihedral { m, .. } => GroupElement::Dihedral {
                m,
                rotation: 0,
                flip: false,
            },
            GroupElement::Perm(_) => GroupElement::Perm([0, 1, 2, 3]),
        }
    }
}

/// Index of an element in its group's canonical enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elem(pub u8);

impl Elem {
    pub const IDENTITY: Elem = Elem(0);

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A subset of `W` as a bitmask over the canonical enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ElemSet(pub u32);

impl ElemSet {
    pub const EMPTY: ElemSet = ElemSet(0);

    pub fn singleton(x: Elem) -> Self {
        ElemSet(1 << x.0)
    }

    pub fn from_elems<I: IntoIterator<Item = Elem>>(iter: I) -> Self {
        ElemSet(iter.into_iter().fold(0, |m, x| m | (1 << x.0)))
    }

    pub fn full(order: usize) -> Self {
        ElemSet(if order >= 32 { u32::MAX } else { (1u32 << order) - 1 })
    }

    pub fn contains(self, x: Elem) -> bool {
        self.0 & (1 << x.0) != 0
    }

    pub fn insert(&mut self, x: Elem) {
        self.0 |= 1 << x.0;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: ElemSet) -> ElemSet {
        ElemSet(self.0 | other.0)
    }

    pub fn intersection(self, other: ElemSet) -> ElemSet {
        ElemSet(self.0 & other.0)
    }

    pub fn difference(self, other: ElemSet) -> ElemSet {
        ElemSet(self.0 & !other.0)
    }

    pub fn complement(self, order: usize) -> ElemSet {
        ElemSet(!self.0 & ElemSet::full(order).0)
    }

    pub fn is_subset(self, other: ElemSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = Elem> {
        (0..32u8).filter(move |&i| self.0 & (1 << i) != 0).map(Elem)
    }
}

#[derive(Debug, Clone)]
pub struct CoxeterGroup {
    descriptor: GroupDescriptor,
    elements: Vec<GroupElement>,
    index: HashMap<GroupElement, Elem>,
    table: Vec<Elem>,
    inverses: Vec<Elem>,
    generators: Vec<Elem>,
    words: Vec<Vec<usize>>,
    reflections: ElemSet,
}

impl PartialEq for CoxeterGroup {
    fn eq(&self, other: &Self) -> bool {
        self.descriptor == other.descriptor
    }
}

impl Eq for CoxeterGroup {}

impl CoxeterGroup {
    pub fn new(descriptor: GroupDescriptor) -> Self {
        let elements = canonical_elements(descriptor.kind);
        let index: HashMap<_, _> = elements
            .iter()
            .enumerate()
            .map(|(i, &g)| (g, Elem(i as u8)))
            .collect();
        let n = elements.len();
        let mut table = Vec::with_capacity(n * n);
        for a in &elements {
            for b in &elements {
                table.push(index[&a.multiply(b).expect("same group")]);
            }
        }
        let inverses = elements.iter().map(|g| index[&g.inverse()]).collect();
        let generators = simple_generators(descriptor.kind)
            .iter()
            .map(|g| index[g])
            .collect();
        let mut group = CoxeterGroup {
            descriptor,
            elements,
            index,
            table,
            inverses,
            generators,
            words: Vec::new(),
            reflections: ElemSet::EMPTY,
        };
        group.words = group.shortlex_words();
        group.reflections = ElemSet::from_elems(
            group
                .elements()
                .filter(|&x| group.element(x).is_reflection()),
        );
        group
    }

    pub fn a2() -> Self {
        Self::new(GroupDescriptor::a2())
    }

    pub fn b2() -> Self {
        Self::new(GroupDescriptor::b2())
    }

    pub fn dihedral(m: u32) -> Self {
        Self::new(GroupDescriptor::dihedral(m))
    }

    pub fn a3() -> Self {
        Self::new(GroupDescriptor::a3())
    }

    pub fn parse(selector: &str) -> Result<Self> {
        Ok(Self::new(GroupDescriptor::parse(selector)?))
    }

    pub fn descriptor(&self) -> &GroupDescriptor {
        &self.descriptor
    }

    pub fn is_a2(&self) -> bool {
        self.descriptor.kind == GroupKind::Dihedral(3)
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.elements.len()).map(|i| Elem(i as u8))
    }

    pub fn element(&self, x: Elem) -> GroupElement {
        self.elements[x.index()]
    }

    pub fn elem_of(&self, g: &GroupElement) -> Result<Elem> {
        self.index
            .get(g)
            .copied()
            .ok_or_else(|| Error::Usage(format!("{g:?} is not an element of {}", self.descriptor.name())))
    }

    pub fn identity(&self) -> Elem {
        Elem::IDENTITY
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.table[a.index() * self.order() + b.index()]
    }

    pub fn inv(&self, a: Elem) -> Elem {
        self.inverses[a.index()]
    }

    pub fn conj(&self, w: Elem, t: Elem) -> Elem {
        self.mul(self.mul(w, t), self.inv(w))
    }

    pub fn mul_word(&self, word: &[Elem]) -> Elem {
        word.iter().fold(Elem::IDENTITY, |acc, &x| self.mul(acc, x))
    }

    pub fn length(&self, x: Elem) -> usize {
        self.element(x).length()
    }

    pub fn is_reflection(&self, x: Elem) -> bool {
        self.reflections.contains(x)
    }

    pub fn reflections(&self) -> ElemSet {
        self.reflections
    }

    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    pub fn generator(&self, i: usize) -> Elem {
        self.generators[i]
    }

    /// Multiplicative order of `x`.
    pub fn element_order(&self, x: Elem) -> usize {
        let mut acc = x;
        let mut k = 1;
        while acc != Elem::IDENTITY {
            acc = self.mul(acc, x);
            k += 1;
        }
        k
    }

    /// The shortlex-least reduced word of `x`, as generator positions.
    pub fn reduced_word(&self, x: Elem) -> &[usize] {
        &self.words[x.index()]
    }

    /// Length of the shortlex reduced word, i.e. BFS distance in the Cayley graph.
    pub fn word_length(&self, x: Elem) -> usize {
        self.words[x.index()].len()
    }

    /// `e` or the reduced word with `*` separators, e.g. `s1*s2*s1`.
    pub fn format_elem(&self, x: Elem) -> String {
        let w = self.reduced_word(x);
        if w.is_empty() {
            return "e".into();
        }
        w.iter()
            .map(|&i| self.descriptor.labels[i].as_str())
            .collect::<Vec<_>>()
            .join("*")
    }

    pub fn format_set(&self, a: ElemSet) -> String {
        let parts: Vec<_> = a.iter().map(|x| self.format_elem(x)).collect();
        format!("{{{}}}", parts.join(","))
    }

    /// Names of the reflections of `A2`: `t1 = s1`, `t2 = s1 s2 s1`, `t3 = s2`.
    pub fn a2_reflections(&self) -> Option<[Elem; 3]> {
        if !self.is_a2() {
            return None;
        }
        let (s1, s2) = (self.generators[0], self.generators[1]);
        Some([s1, self.mul_word(&[s1, s2, s1]), s2])
    }

    /// Parses a word such as `s1*s2*s1`, `e`, `t2` (A2 only), or `tst` when
    /// every generator label is a single character.
    pub fn parse_elem(&self, text: &str) -> Result<Elem> {
        self.parse_elem_at(text, 0)
    }

    pub(crate) fn parse_elem_at(&self, text: &str, offset: usize) -> Result<Elem> {
        let trimmed = text.trim();
        let lead = offset + (text.len() - text.trim_start().len());
        if trimmed.is_empty() {
            return Err(Error::parse(lead, "expected a group element"));
        }
        let single_char = self.descriptor.labels.iter().all(|l| l.chars().count() == 1);
        let mut acc = Elem::IDENTITY;
        let mut col = lead;
        for token in trimmed.split('*') {
            let tok = token.trim();
            let tok_col = col + (token.len() - token.trim_start().len());
            col += token.len() + 1;
            let x = self
                .parse_token(tok, single_char)
                .ok_or_else(|| Error::parse(tok_col, format!("unknown group element '{tok}'")))?;
            acc = self.mul(acc, x);
        }
        Ok(acc)
    }

    fn parse_token(&self, tok: &str, single_char: bool) -> Option<Elem> {
        if tok == "e" || tok == "1" {
            return Some(Elem::IDENTITY);
        }
        if let Some(i) = self.descriptor.labels.iter().position(|l| l == tok) {
            return Some(self.generators[i]);
        }
        if let Some(ts) = self.a2_reflections() {
            match tok {
                "t1" => return Some(ts[0]),
                "t2" => return Some(ts[1]),
                "t3" => return Some(ts[2]),
                _ => {}
            }
        }
        if single_char && !tok.is_empty() {
            let mut acc = Elem::IDENTITY;
            for ch in tok.chars() {
                let i = self
                    .descriptor
                    .labels
                    .iter()
                    .position(|l| l.chars().next() == Some(ch))?;
                acc = self.mul(acc, self.generators[i]);
            }
            return Some(acc);
        }
        None
    }

    /// Parses `W`, `{}`/`{e,s1}` or a bare comma list `e,s1`.
    pub fn parse_set(&self, text: &str) -> Result<ElemSet> {
        self.parse_set_at(text, 0)
    }

    pub(crate) fn parse_set_at(&self, text: &str, offset: usize) -> Result<ElemSet> {
        let t = text.trim();
        let lead = offset + (text.len() - text.trim_start().len());
        if t == "W" {
            return Ok(ElemSet::full(self.order()));
        }
        let (inner, inner_off) = match (t.strip_prefix('{'), t.ends_with('}')) {
            (Some(rest), true) => (&rest[..rest.len() - 1], lead + 1),
            (Some(_), false) => return Err(Error::parse(lead + t.len(), "expected '}'")),
            _ => (t, lead),
        };
        let mut set = ElemSet::EMPTY;
        if inner.trim().is_empty() {
            return Ok(set);
        }
        let mut col = inner_off;
        for part in inner.split(',') {
            set.insert(self.parse_elem_at(part, col)?);
            col += part.len() + 1;
        }
        Ok(set)
    }

    pub fn act_left(&self, g: Elem, a: ElemSet) -> ElemSet {
        ElemSet::from_elems(a.iter().map(|x| self.mul(g, x)))
    }

    pub fn act_right(&self, a: ElemSet, g: Elem) -> ElemSet {
        ElemSet::from_elems(a.iter().map(|x| self.mul(x, g)))
    }

    pub fn invert_set(&self, a: ElemSet) -> ElemSet {
        ElemSet::from_elems(a.iter().map(|x| self.inv(x)))
    }

    /// `{a*b : a in A, b in B}`
    pub fn product_set(&self, a: ElemSet, b: ElemSet) -> ElemSet {
        let mut out = ElemSet::EMPTY;
        for x in a.iter() {
            out = out.union(self.act_left(x, b));
        }
        out
    }

    pub fn full_set(&self) -> ElemSet {
        ElemSet::full(self.order())
    }

    fn shortlex_words(&self) -> Vec<Vec<usize>> {
        let mut words: Vec<Option<Vec<usize>>> = vec![None; self.order()];
        words[0] = Some(Vec::new());
        let mut queue = VecDeque::from([Elem::IDENTITY]);
        while let Some(x) = queue.pop_front() {
            for (i, &s) in self.generators.iter().enumerate() {
                let y = self.mul(x, s);
                if words[y.index()].is_none() {
                    let mut w = words[x.index()].clone().unwrap();
                    w.push(i);
                    words[y.index()] = Some(w);
                    queue.push_back(y);
                }
            }
        }
        words.into_iter().map(|w| w.expect("generators generate W")).collect()
    }
}

fn canonical_elements(kind: GroupKind) -> Vec<GroupElement> {
    match kind {
        GroupKind::Dihedral(m) => [false, true]
            .into_iter()
            .flat_map(|flip| {
                (0..m).map(move |rotation| GroupElement::Dihedral { m, rotation, flip })
            })
            .collect(),
        GroupKind::SymmetricA3 => {
            let mut perms = Vec::with_capacity(24);
            for a in 0..4u8 {
                for b in 0..4u8 {
                    for c in 0..4u8 {
                        for d in 0..4u8 {
                            let p = [a, b, c, d];
                            let mut seen = [false; 4];
                            p.iter().for_each(|&i| seen[i as usize] = true);
                            if seen.iter().all(|&s| s) {
                                perms.push(GroupElement::Perm(p));
                            }
                        }
                    }
                }
            }
            perms
        }
    }
}

fn simple_generators(kind: GroupKind) -> Vec<GroupElement> {
    match kind {
        GroupKind::Dihedral(m) => vec![
            GroupElement::Dihedral {
                m,
                rotation: 0,
                flip: true,
            },
            GroupElement::Dihedral {
                m,
                rotation: 1,
                flip: true,
            },
        ],
        // s = (1 2), t = (2 3), u = (3 4)
        GroupKind::SymmetricA3 => vec![
            GroupElement::Perm([1, 0, 2, 3]),
            GroupElement::Perm([0, 2, 1, 3]),
            GroupElement::Perm([0, 1, 3, 2]),
        ],
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn all_groups() -> Vec<CoxeterGroup> {
        let mut gs: Vec<_> = (3..=8).map(CoxeterGroup::dihedral).collect();
        gs.push(CoxeterGroup::b2());
        gs.push(CoxeterGroup::a3());
        gs
    }

    /// Union of `w S w^-1` over all `w`.
    fn conjugation_closure(g: &CoxeterGroup) -> ElemSet {
        let mut out = ElemSet::EMPTY;
        for w in g.elements() {
            for &s in g.generators() {
                out.insert(g.conj(w, s));
            }
        }
        out
    }

    /// Lengths by BFS over all words of growing length, independent of the
    /// shortlex table.
    fn brute_force_lengths(g: &CoxeterGroup) -> Vec<usize> {
        let mut len = vec![usize::MAX; g.order()];
        let mut frontier: HashSet<Elem> = HashSet::from([Elem::IDENTITY]);
        len[0] = 0;
        let mut depth = 0;
        while !frontier.is_empty() {
            depth += 1;
            let mut next = HashSet::new();
            for &x in &frontier {
                for &s in g.generators() {
                    let y = g.mul(x, s);
                    if len[y.index()] == usize::MAX {
                        len[y.index()] = depth;
                        next.insert(y);
                    }
                }
            }
            frontier = next;
        }
        len
    }

    #[test]
    fn group_orders_and_reflection_counts() {
        for m in 3..=8 {
            let g = CoxeterGroup::dihedral(m);
            assert_eq!(g.order(), 2 * m as usize);
            assert_eq!(g.reflections().len(), m as usize);
            let (s1, s2) = (g.generator(0), g.generator(1));
            assert_eq!(g.element_order(g.mul(s1, s2)), m as usize);
        }
        let a3 = CoxeterGroup::a3();
        assert_eq!(a3.order(), 24);
        assert_eq!(a3.reflections().len(), 6);
    }

    #[test]
    fn reflections_match_conjugation_closure() {
        for g in all_groups() {
            assert_eq!(g.reflections(), conjugation_closure(&g), "{}", g.descriptor());
        }
        assert_eq!(conjugation_closure(&CoxeterGroup::b2()).len(), 4);
        assert_eq!(conjugation_closure(&CoxeterGroup::a3()).len(), 6);
    }

    #[test]
    fn closed_form_length_matches_brute_force() {
        for g in all_groups() {
            let bf = brute_force_lengths(&g);
            for x in g.elements() {
                assert_eq!(g.length(x), bf[x.index()]);
                assert_eq!(g.word_length(x), bf[x.index()]);
            }
        }
    }

    #[test]
    fn a2_basics() {
        let g = CoxeterGroup::a2();
        let (s1, s2) = (g.generator(0), g.generator(1));
        assert_eq!(g.mul(s1, s1), Elem::IDENTITY);
        let r = g.mul(s1, s2);
        assert_eq!(g.mul_word(&[r, r, r]), Elem::IDENTITY);
        assert_eq!(g.length(Elem::IDENTITY), 0);
        assert_eq!(g.length(s1), 1);
        assert_eq!(g.length(s2), 1);
        let [t1, t2, t3] = g.a2_reflections().unwrap();
        assert_eq!(g.format_elem(t1), "s1");
        assert_eq!(g.format_elem(t2), "s1*s2*s1");
        assert_eq!(g.format_elem(t3), "s2");
        assert_eq!(ElemSet::from_elems([t1, t2, t3]), g.reflections());
    }

    #[test]
    fn longest_element_of_b2_has_length_four() {
        let g = CoxeterGroup::b2();
        let max = g.elements().map(|x| g.length(x)).max().unwrap();
        assert_eq!(max, 4);
        let w0 = g.parse_elem("stst").unwrap();
        assert_eq!(g.length(w0), 4);
        assert_eq!(w0, g.parse_elem("tsts").unwrap());
    }

    #[test]
    fn a3_transpositions() {
        let g = CoxeterGroup::a3();
        let s = g.element(g.generator(0));
        let t = g.element(g.generator(1));
        let u = g.element(g.generator(2));
        let st = s.multiply(&t).unwrap();
        assert_eq!(st.multiply(&st).unwrap().multiply(&st).unwrap(), GroupElement::Perm([0, 1, 2, 3]));
        assert_ne!(st, GroupElement::Perm([0, 1, 2, 3]));
        assert_eq!(s.multiply(&u).unwrap(), u.multiply(&s).unwrap());
        assert_eq!(g.length(g.elem_of(&GroupElement::Perm([3, 2, 1, 0])).unwrap()), 6);
    }

    #[test]
    fn mismatched_groups_rejected() {
        let a = CoxeterGroup::a2();
        let b = CoxeterGroup::a3();
        let x = a.element(a.generator(0));
        let y = b.element(b.generator(0));
        assert!(matches!(x.multiply(&y), Err(Error::Usage(_))));
        let z = CoxeterGroup::b2().element(Elem(1));
        assert!(x.multiply(&z).is_err());
    }

    #[test]
    fn subset_actions() {
        let g = CoxeterGroup::a2();
        let [t1, t2, t3] = g.a2_reflections().unwrap();
        let et = ElemSet::from_elems([Elem::IDENTITY, t2]);
        assert_eq!(g.act_left(t2, et), et);
        let a = ElemSet::from_elems([t1, g.mul(t3, t1)]);
        assert_eq!(g.invert_set(a), ElemSet::from_elems([t1, g.mul(t1, t3)]));
        for w in g.elements() {
            assert_eq!(g.act_left(g.inv(w), g.act_left(w, a)), a);
            assert_eq!(g.act_right(g.act_right(a, w), g.inv(w)), a);
        }
    }

    #[test]
    fn parsing_and_formatting() {
        let g = CoxeterGroup::a2();
        for x in g.elements() {
            assert_eq!(g.parse_elem(&g.format_elem(x)).unwrap(), x);
        }
        assert_eq!(g.parse_elem("t2").unwrap(), g.parse_elem("s2*s1*s2").unwrap());
        let err = g.parse_elem("s1*q").unwrap_err();
        assert_eq!(err, Error::parse(3, "unknown group element 'q'"));
        let b2 = CoxeterGroup::b2();
        assert_eq!(b2.parse_elem("tst").unwrap(), b2.parse_elem("t*s*t").unwrap());
        assert_eq!(b2.parse_set("W").unwrap().len(), 8);
        let set = g.parse_set("{e, t1}").unwrap();
        assert_eq!(g.format_set(set), "{e,s1}");
        assert!(g.parse_set("{e,t1").is_err());
    }
}
