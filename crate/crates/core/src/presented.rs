//! The algebra on generators `C1, C2, C3` subject to
//!
//! 1. `C_i^2 = (v + v^-1) C_i`,
//! 2. `C_i C_j C_i + C_j = C_i + C_j C_i C_j` for `i ≠ j`,
//! 3. `C_i C_j C_i = C_i C_k C_i` for `{i,j,k} = {1,2,3}`,
//! 4. `C_i C_j C_k C_i = C_i C_k C_j C_i` for `{i,j,k} = {1,2,3}`,
//!
//! with a normal form on 20 canonical monomials and the map to the
//! Grothendieck ring sending `C_i` to `[B_{t_i}]`.
//!
//! Relations (1) and (2) alone present the Hecke algebra of the affine Weyl
//! group of type `Ã2` in its Kazhdan–Lusztig generators, so this algebra is a
//! quotient of it.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::grotring::{GrothendieckRing, RingElement, Variant};
use crate::laurent::{Coefficient, Laurent, Sign};
use crate::linalg;

/// The 20 canonical monomials, in the order used for matrices and output.
pub const CANONICAL: [&[u8]; 20] = [
    &[],
    &[1],
    &[2],
    &[3],
    &[1, 2],
    &[2, 1],
    &[2, 3],
    &[3, 2],
    &[1, 3],
    &[3, 1],
    &[1, 2, 1],
    &[1, 2, 3],
    &[1, 3, 2],
    &[2, 1, 3],
    &[2, 3, 1],
    &[3, 1, 2],
    &[3, 2, 1],
    &[1, 2, 3, 1],
    &[2, 1, 3, 2],
    &[3, 1, 2, 3],
];

/// A word in the generators; letters are `1..=3`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GenWord(Vec<u8>);

impl GenWord {
    pub fn new(letters: Vec<u8>) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|&&l| !(1..=3).contains(&l)) {
            return Err(Error::Usage(format!("generator index {bad} is not in 1..=3")));
        }
        Ok(GenWord(letters))
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// All `3^n` words of length `n`, lexicographically.
    pub fn all_of_length(n: usize) -> impl Iterator<Item = GenWord> {
        (0..3usize.pow(n as u32)).map(move |mut code| {
            let mut letters = vec![0u8; n];
            for slot in letters.iter_mut().rev() {
                *slot = (code % 3) as u8 + 1;
                code /= 3;
            }
            GenWord(letters)
        })
    }
}

impl fmt::Display for GenWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<_> = self.0.iter().map(|l| format!("C{l}")).collect();
        write!(f, "{}", parts.join("*"))
    }
}

impl FromStr for GenWord {
    type Err = Error;

    /// `C1*C2*C1`, `C1 C2`, `C1C2`, or `1` for the empty word.
    fn from_str(s: &str) -> Result<Self> {
        let bytes = s.as_bytes();
        let mut letters = Vec::new();
        let mut i = 0;
        while i < bytes.len() {
            match bytes[i] {
                b' ' | b'*' | b'\t' => i += 1,
                b'1' if letters.is_empty() && s.trim() == "1" => i += 1,
                b'C' | b'c' => match bytes.get(i + 1) {
                    Some(d @ b'1'..=b'3') => {
                        letters.push(d - b'0');
                        i += 2;
                    }
                    _ => return Err(Error::parse(i + 1, "expected 1, 2 or 3 after 'C'")),
                },
                _ => return Err(Error::parse(i, format!("unexpected character '{}'", bytes[i] as char))),
            }
        }
        Ok(GenWord(letters))
    }
}

/// Index into [`CANONICAL`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalMonomial(u8);

impl CanonicalMonomial {
    pub fn all() -> impl Iterator<Item = CanonicalMonomial> {
        (0..CANONICAL.len() as u8).map(CanonicalMonomial)
    }

    pub fn lookup(letters: &[u8]) -> Option<Self> {
        CANONICAL
            .iter()
            .position(|&m| m == letters)
            .map(|i| CanonicalMonomial(i as u8))
    }

    pub fn letters(self) -> &'static [u8] {
        CANONICAL[self.0 as usize]
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn word(self) -> GenWord {
        GenWord(self.letters().to_vec())
    }
}

/// A `Z[v^±1]`-combination of canonical monomials.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AlgebraElement<C> {
    terms: BTreeMap<CanonicalMonomial, Laurent<C>>,
}

impl<C: Coefficient> AlgebraElement<C> {
    pub fn zero() -> Self {
        AlgebraElement {
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(m: CanonicalMonomial) -> Self {
        let mut out = Self::zero();
        out.add_term(m, Laurent::one());
        out
    }

    pub fn one() -> Self {
        Self::monomial(CanonicalMonomial(0))
    }

    /// The generator `C_i`.
    pub fn generator(i: u8) -> Self {
        Self::monomial(CanonicalMonomial::lookup(&[i]).expect("i in 1..=3"))
    }

    pub fn add_term(&mut self, m: CanonicalMonomial, c: Laurent<C>) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_default();
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &Laurent<C>) {
        for (&m, d) in &other.terms {
            self.add_term(m, d * c);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (CanonicalMonomial, &Laurent<C>)> {
        self.terms.iter().map(|(&m, c)| (m, c))
    }

    pub fn coeff(&self, m: CanonicalMonomial) -> Laurent<C> {
        self.terms.get(&m).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms()
                .map(|(m, c)| serde_json::json!({ "monomial": m.word().to_string(), "coeff": c.to_json() }))
                .collect(),
        )
    }
}

impl<C: Coefficient> fmt::Display for AlgebraElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let word = m.word();
            let (negative, magnitude) = match c.is_unit_monomial() {
                Some((Sign::Minus, _)) => (true, -c),
                _ if c.num_terms() == 1 && c.terms().next().unwrap().1.is_negative() => (true, -c),
                _ => (false, c.clone()),
            };
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.letters().is_empty() {
                if magnitude.num_terms() > 1 {
                    write!(f, "({magnitude})")?;
                } else {
                    write!(f, "{magnitude}")?;
                }
            } else if magnitude.is_one() {
                write!(f, "{word}")?;
            } else if magnitude.num_terms() == 1 {
                write!(f, "{magnitude}*{word}")?;
            } else {
                write!(f, "({magnitude})*{word}")?;
            }
        }
        Ok(())
    }
}

/// Rewrites words onto canonical monomials, following the case analysis that
/// shows every word of length five reduces to shorter ones. Results are cached
/// per word.
#[derive(Debug, Default)]
pub struct Normalizer<C> {
    cache: HashMap<Vec<u8>, AlgebraElement<C>>,
}

impl<C: Coefficient> Normalizer<C> {
    pub fn new() -> Self {
        Normalizer {
            cache: HashMap::new(),
        }
    }

    pub fn normalize(&mut self, w: &GenWord) -> AlgebraElement<C> {
        self.norm(w.letters())
    }

    fn norm(&mut self, w: &[u8]) -> AlgebraElement<C> {
        if let Some(m) = CanonicalMonomial::lookup(w) {
            return AlgebraElement::monomial(m);
        }
        if let Some(hit) = self.cache.get(w) {
            return hit.clone();
        }
        let out = self.reduce(w);
        self.cache.insert(w.to_vec(), out.clone());
        out
    }

    /// `Σ c_k norm(words_k)`
    fn combine(&mut self, parts: &[(Laurent<C>, Vec<u8>)]) -> AlgebraElement<C> {
        let mut out = AlgebraElement::zero();
        for (c, word) in parts {
            let n = self.norm(word);
            out.add_scaled(&n, c);
        }
        out
    }

    /// Normalizes `head`, then multiplies every resulting monomial by `tail`
    /// (on the right) or `head_letter` (on the left) and normalizes again.
    fn through_prefix(&mut self, prefix: &[u8], tail: &[u8], max_len: usize) -> AlgebraElement<C> {
        let head = self.norm(prefix);
        let parts: Vec<_> = head
            .terms()
            .map(|(m, c)| {
                debug_assert!(m.letters().len() <= max_len, "prefix did not shrink");
                let mut word = m.letters().to_vec();
                word.extend_from_slice(tail);
                (c.clone(), word)
            })
            .collect();
        self.combine(&parts)
    }

    fn reduce(&mut self, w: &[u8]) -> AlgebraElement<C> {
        let one = Laurent::<C>::one;
        // (1) at the leftmost square
        if let Some(p) = w.windows(2).position(|p| p[0] == p[1]) {
            let mut shorter = w.to_vec();
            shorter.remove(p);
            return self.combine(&[(Laurent::quantum_two(), shorter)]);
        }
        match *w {
            [i, j, k] => {
                debug_assert_eq!(i, k, "length-3 words without squares and distinct letters are canonical");
                if i == 1 {
                    // C1 C3 C1 = C1 C2 C1 by (3)
                    self.combine(&[(one(), vec![1, 2, 1])])
                } else if j != 1 {
                    // C_i C_j C_i = C_i C1 C_i by (3)
                    self.combine(&[(one(), vec![i, 1, i])])
                } else {
                    // C_i C1 C_i = C1 C_i C1 + C_i - C1 by (2)
                    self.combine(&[(one(), vec![1, i, 1]), (one(), vec![i]), (-one(), vec![1])])
                }
            }
            [i, j, k, l] => {
                if i == l {
                    // (4): both middle orders agree; exactly one is canonical
                    let swapped = [i, k, j, i];
                    debug_assert!(CanonicalMonomial::lookup(&swapped).is_some());
                    self.combine(&[(one(), swapped.to_vec())])
                } else if k == i && l == j {
                    // C_i (C_j C_i C_j) = C_i (C_i C_j C_i + C_j - C_i) by (2)
                    self.combine(&[
                        (one(), vec![i, i, j, i]),
                        (one(), vec![i, j]),
                        (-one(), vec![i, i]),
                    ])
                } else if k == i {
                    // C_i C_j C_i C_l = C_i C_l C_i C_l by (3)
                    self.combine(&[(one(), vec![i, l, i, l])])
                } else {
                    // C_i C_j C_k C_j = C_i C_j C_i C_j by (3) on the suffix
                    self.combine(&[(one(), vec![i, j, i, j])])
                }
            }
            [i, j, k, l, m] => {
                if i != l {
                    return self.through_prefix(&w[..4], &w[4..], 3);
                }
                // {i, j, k} = {1, 2, 3} and m is j or k; use (4) to make m = k
                let (a, b) = if m == k { (j, k) } else { (k, j) };
                // C_i C_a C_b C_i C_b = C_i (C_a C_b C_a C_b) by (3)
                let inner = self.norm(&[a, b, a, b]);
                let parts: Vec<_> = inner
                    .terms()
                    .map(|(mono, c)| {
                        let mut word = vec![i];
                        word.extend_from_slice(mono.letters());
                        (c.clone(), word)
                    })
                    .collect();
                self.combine(&parts)
            }
            _ => self.through_prefix(&w[..5], &w[5..], 4),
        }
    }

    pub fn multiply(&mut self, a: &AlgebraElement<C>, b: &AlgebraElement<C>) -> AlgebraElement<C> {
        let mut out = AlgebraElement::zero();
        for (m1, c1) in a.terms() {
            for (m2, c2) in b.terms() {
                let mut word = m1.letters().to_vec();
                word.extend_from_slice(m2.letters());
                let n = self.norm(&word);
                out.add_scaled(&n, &(c1 * c2));
            }
        }
        out
    }
}

pub fn normalize<C: Coefficient>(w: &GenWord) -> AlgebraElement<C> {
    Normalizer::new().normalize(w)
}

pub fn multiply<C: Coefficient>(a: &AlgebraElement<C>, b: &AlgebraElement<C>) -> AlgebraElement<C> {
    Normalizer::new().multiply(a, b)
}

/// `C_{w_1} ... C_{w_n}` evaluated directly in the Grothendieck ring.
pub fn evaluate_word<C: Coefficient>(ring: &GrothendieckRing<C>, w: &GenWord) -> RingElement<C> {
    let ts = ring.group().a2_reflections().expect("a2");
    w.letters().iter().rev().fold(ring.unit(), |acc, &l| {
        ring.lmul_b(ts[l as usize - 1], &acc).expect("lemma applies in a2")
    })
}

/// The algebra map `C_i -> [B_{t_i}]`.
pub struct Phi<'a, C> {
    ring: &'a GrothendieckRing<C>,
    images: Vec<RingElement<C>>,
}

impl<'a, C: Coefficient> Phi<'a, C> {
    pub fn new(ring: &'a GrothendieckRing<C>) -> Self {
        let images = CanonicalMonomial::all()
            .map(|m| evaluate_word(ring, &m.word()))
            .collect();
        Phi { ring, images }
    }

    pub fn ring(&self) -> &GrothendieckRing<C> {
        self.ring
    }

    pub fn image(&self, m: CanonicalMonomial) -> &RingElement<C> {
        &self.images[m.index()]
    }

    pub fn apply(&self, a: &AlgebraElement<C>) -> RingElement<C> {
        let mut out = RingElement::zero();
        for (m, c) in a.terms() {
            out += &self.images[m.index()].scale(c);
        }
        out
    }

    /// Coordinates of the canonical-monomial images: `matrix[class][monomial]`.
    pub fn change_of_basis(&self) -> Vec<Vec<Laurent<C>>> {
        let cols: Vec<_> = self.images.iter().map(|x| self.ring.coordinates(x)).collect();
        (0..self.ring.rank())
            .map(|row| cols.iter().map(|col| col[row].clone()).collect())
            .collect()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct IsoReport {
    pub matrix_size: (usize, usize),
    pub determinant: String,
    pub determinant_unit: Option<(Sign, i32)>,
    pub max_word_len: usize,
    pub words_checked: usize,
    pub disagreement: Option<String>,
}

impl IsoReport {
    pub fn passed(&self) -> bool {
        self.matrix_size == (20, 20) && self.determinant_unit.is_some() && self.disagreement.is_none()
    }
}

/// Determinant of the monomial images in the `[R(A)]` basis, plus agreement of
/// `phi(normalize(w))` with direct evaluation for every word up to `max_len`.
pub fn verify_iso<C: Coefficient>(ring: &GrothendieckRing<C>, max_len: usize) -> Result<IsoReport> {
    if ring.variant() != Variant::Plain {
        return Err(Error::Usage("the presentation check runs in the plain ring".into()));
    }
    let phi = Phi::new(ring);
    let matrix = phi.change_of_basis();
    let size = (matrix.len(), matrix.first().map_or(0, Vec::len));
    let det = linalg::determinant(matrix);
    let words: Vec<GenWord> = (0..=max_len).flat_map(GenWord::all_of_length).collect();
    let disagreement = words
        .par_iter()
        .map_init(Normalizer::<C>::new, |norm, w| {
            let via_normal_form = phi.apply(&norm.normalize(w));
            let direct = evaluate_word(ring, w);
            (via_normal_form != direct).then(|| {
                format!(
                    "{w}: normal form {} maps to {} but direct evaluation gives {}",
                    norm.normalize(w),
                    via_normal_form.format(ring.group()),
                    direct.format(ring.group())
                )
            })
        })
        .find_first(Option::is_some)
        .flatten();
    Ok(IsoReport {
        matrix_size: size,
        determinant: det.to_string(),
        determinant_unit: det.is_unit_monomial(),
        max_word_len: max_len,
        words_checked: words.len(),
        disagreement,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{LaurentPoly, Ring};
    use num_bigint::BigInt;

    type Elt = AlgebraElement<BigInt>;

    fn word(s: &str) -> GenWord {
        s.parse().unwrap()
    }

    fn norm(s: &str) -> Elt {
        normalize(&word(s))
    }

    fn mono(s: &str) -> Elt {
        Elt::monomial(CanonicalMonomial::lookup(word(s).letters()).unwrap())
    }

    #[test]
    fn twenty_distinct_canonical_monomials() {
        let set: std::collections::HashSet<_> = CANONICAL.iter().collect();
        assert_eq!(set.len(), 20);
    }

    #[test]
    fn quadratic_relation() {
        let mut want = Elt::zero();
        want.add_scaled(&mono("C1"), &LaurentPoly::quantum_two());
        assert_eq!(norm("C1*C1"), want);
        assert_eq!(norm("C1*C1").to_string(), "(v + v^-1)*C1");
    }

    #[test]
    fn fourth_relation() {
        assert_eq!(norm("C1*C3*C2*C1"), mono("C1*C2*C3*C1"));
        assert_eq!(norm("C2*C3*C1*C2"), mono("C2*C1*C3*C2"));
        assert_eq!(norm("C3*C2*C1*C3"), mono("C3*C1*C2*C3"));
    }

    #[test]
    fn braid_words_reduce_to_c1c2c1() {
        let mut want = mono("C1*C2*C1");
        want.add_scaled(&mono("C2"), &LaurentPoly::one());
        want.add_scaled(&mono("C1"), &-LaurentPoly::one());
        assert_eq!(norm("C2*C3*C2"), want);
        assert_eq!(norm("C2*C3*C2").to_string(), "-C1 + C2 + C1*C2*C1");
        assert_eq!(norm("C1*C3*C1"), mono("C1*C2*C1"));
    }

    #[test]
    fn multiplication() {
        let c1 = Elt::generator(1);
        assert_eq!(multiply(&Elt::one(), &c1), c1);
        assert_eq!(multiply(&c1, &c1), norm("C1C1"));
        assert_eq!(multiply(&mono("C1C2"), &c1), mono("C1C2C1"));
    }

    #[test]
    fn normal_forms_are_fixed_points() {
        let mut n = Normalizer::<BigInt>::new();
        for len in 0..=7 {
            for w in GenWord::all_of_length(len) {
                let nf = n.normalize(&w);
                let mut again = Elt::zero();
                for (m, c) in nf.terms() {
                    again.add_scaled(&n.normalize(&m.word()), c);
                }
                assert_eq!(again, nf, "{w}");
            }
        }
    }

    #[test]
    fn phi_examples() {
        let ring = Ring::new(Variant::Plain).unwrap();
        let phi = Phi::new(&ring);
        let g = ring.group();
        let [t1, t2, _] = g.a2_reflections().unwrap();
        let e = crate::Elem::IDENTITY;
        let v = LaurentPoly::v_pow(1);
        assert_eq!(phi.apply(&Elt::one()), ring.unit());
        assert_eq!(
            phi.apply(&Elt::generator(1)),
            crate::RingElement::basis(crate::ElemSet::from_elems([e, t1])).scale(&v)
        );
        assert_eq!(
            phi.apply(&mono("C1C2")),
            crate::RingElement::basis(crate::ElemSet::from_elems([e, t1, t2, g.mul(t1, t2)])).scale(&LaurentPoly::v_pow(2))
        );
    }

    #[test]
    fn parse_errors() {
        assert!("C4".parse::<GenWord>().is_err());
        assert!("C1*X".parse::<GenWord>().is_err());
        assert_eq!("1".parse::<GenWord>().unwrap(), GenWord::default());
        assert!(GenWord::new(vec![0]).is_err());
    }
}
