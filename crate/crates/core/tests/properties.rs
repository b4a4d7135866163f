use std::sync::OnceLock;

use proptest::prelude::*;
use soergel_core::characters::{uch_of_class, uch_of_word};
use soergel_core::grotring::Generator;
use soergel_core::hilbert::HilbertOracle;
use soergel_core::presented::{CanonicalMonomial, GenWord, Normalizer, Phi};
use soergel_core::{
    AlgebraElement, CoxeterGroup, Elem, ElemSet, LaurentPoly, Ring, RingElement, UngradedCharacter, Variant,
};

fn plain() -> &'static Ring {
    static R: OnceLock<Ring> = OnceLock::new();
    R.get_or_init(|| Ring::new(Variant::Plain).unwrap())
}

fn extended() -> &'static Ring {
    static R: OnceLock<Ring> = OnceLock::new();
    R.get_or_init(|| Ring::new(Variant::Extended).unwrap())
}

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-4i32..=4, -3i64..=3), 0..4)
        .prop_map(|terms| LaurentPoly::from_terms(terms.into_iter().map(|(e, c)| (e, c.into()))))
}

fn ring_element(rank: usize) -> impl Strategy<Value = Vec<(usize, LaurentPoly)>> {
    prop::collection::vec((0..rank, laurent()), 0..4)
}

fn build(ring: &Ring, terms: &[(usize, LaurentPoly)]) -> RingElement {
    let mut x = RingElement::zero();
    for (i, c) in terms {
        x.add_term(ring.basis()[*i].0, c.clone());
    }
    x
}

fn algebra_element() -> impl Strategy<Value = AlgebraElement> {
    prop::collection::vec((0..20usize, laurent()), 0..4).prop_map(|terms| {
        let mut a = AlgebraElement::zero();
        for (i, c) in terms {
            a.add_term(CanonicalMonomial::all().nth(i).unwrap(), c);
        }
        a
    })
}

proptest! {
    #[test]
    fn laurent_ring_laws(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
        prop_assert_eq!(a.bar().bar(), a.clone());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn laurent_text_parses_back(a in laurent()) {
        prop_assert_eq!(a.to_string().parse::<LaurentPoly>().unwrap(), a);
    }

    #[test]
    fn extended_ring_is_associative(terms in (ring_element(25), ring_element(25), ring_element(25))) {
        let r = extended();
        let (x, y, z) = (build(r, &terms.0), build(r, &terms.1), build(r, &terms.2));
        prop_assert_eq!(r.mul(&r.mul(&x, &y), &z), r.mul(&x, &r.mul(&y, &z)));
    }

    #[test]
    fn product_table_agrees_with_expansions(i in 0..25usize, j in 0..25usize) {
        let r = extended();
        let (x, y) = (RingElement::basis(r.basis()[i].0), RingElement::basis(r.basis()[j].0));
        prop_assert_eq!(r.product_by_expansion(&x, &y).unwrap(), r.mul(&x, &y));
    }

    #[test]
    fn transpose_reverses_products(terms in (ring_element(25), ring_element(25))) {
        let r = extended();
        let (x, y) = (build(r, &terms.0), build(r, &terms.1));
        let lhs = r.transpose(&r.mul(&x, &y)).unwrap();
        let rhs = r.mul(&r.transpose(&y).unwrap(), &r.transpose(&x).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn phi_is_multiplicative(a in algebra_element(), b in algebra_element()) {
        let r = plain();
        let phi = Phi::new(r);
        let mut n = Normalizer::new();
        prop_assert_eq!(phi.apply(&n.multiply(&a, &b)), r.mul(&phi.apply(&a), &phi.apply(&b)));
    }

    #[test]
    fn normalization_is_stable(letters in prop::collection::vec(1u8..=3, 0..12)) {
        let w = GenWord::new(letters).unwrap();
        let mut n = Normalizer::<soergel_core::Integer>::new();
        let nf = n.normalize(&w);
        let mut again = AlgebraElement::zero();
        for (m, c) in nf.terms() {
            again.add_scaled(&n.normalize(&m.word()), c);
        }
        prop_assert_eq!(again, nf);
    }

    #[test]
    fn characters_multiply(i in 0..25usize, j in 0..25usize) {
        let r = extended();
        let (x, y) = (RingElement::basis(r.basis()[i].0), RingElement::basis(r.basis()[j].0));
        let lhs: UngradedCharacter = uch_of_class(&r.mul(&x, &y));
        prop_assert_eq!(lhs, uch_of_class(&x).convolve(&uch_of_class(&y), r.group()));
    }

    #[test]
    fn twisted_words_have_twisted_characters(
        w in 0..24u8,
        word in prop::collection::vec(0..6usize, 0..4),
    ) {
        let g = CoxeterGroup::a3();
        let ts: Vec<Elem> = g.reflections().iter().collect();
        let word: Vec<Generator> = word.into_iter().map(|i| Generator::B(ts[i])).collect();
        let mut twisted = vec![Generator::R(Elem(w))];
        twisted.extend_from_slice(&word);
        let plain_ch: UngradedCharacter = uch_of_word(&g, &word);
        prop_assert!(plain_ch.is_nonnegative());
        prop_assert_eq!(uch_of_word(&g, &twisted), UngradedCharacter::delta(Elem(w)).convolve(&plain_ch, &g));
    }

    #[test]
    fn character_supports_multiply(
        a in prop::collection::vec(0..6usize, 0..3),
        b in prop::collection::vec(0..6usize, 0..3),
    ) {
        let g = CoxeterGroup::a3();
        let ts: Vec<Elem> = g.reflections().iter().collect();
        let wa: Vec<_> = a.into_iter().map(|i| Generator::B(ts[i])).collect();
        let wb: Vec<_> = b.into_iter().map(|i| Generator::B(ts[i])).collect();
        let (ca, cb): (UngradedCharacter, UngradedCharacter) = (uch_of_word(&g, &wa), uch_of_word(&g, &wb));
        let both: Vec<_> = wa.iter().chain(&wb).copied().collect();
        let support = uch_of_word::<soergel_core::Integer>(&g, &both).support();
        prop_assert!(support.is_subset(g.product_set(ca.support(), cb.support())));
    }
}

fn a2_oracle() -> &'static HilbertOracle {
    static O: OnceLock<HilbertOracle> = OnceLock::new();
    O.get_or_init(|| HilbertOracle::new(&CoxeterGroup::a2()).unwrap())
}

fn b2_oracle() -> &'static HilbertOracle {
    static O: OnceLock<HilbertOracle> = OnceLock::new();
    O.get_or_init(|| HilbertOracle::new(&CoxeterGroup::b2()).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hilbert_functions_are_twist_invariant(mask in 1u32..256, w in 0..8u8, k in 0..5usize, b2 in any::<bool>()) {
        let o = if b2 { b2_oracle() } else { a2_oracle() };
        let g = o.group();
        let a = ElemSet(mask & g.full_set().0);
        prop_assume!(!a.is_empty());
        let w = Elem(w % g.order() as u8);
        let hf = o.hilbert_function(a, k);
        prop_assert_eq!(o.hilbert_function(g.act_left(w, a), k), hf);
        prop_assert_eq!(o.hilbert_function(g.act_right(a, w), k), hf);
        prop_assert_eq!(o.hilbert_function(a, 0), 1);
    }

    #[test]
    fn hilbert_functions_are_bounded(m1 in 1u32..64, m2 in 1u32..64, k in 0..5usize) {
        let o = a2_oracle();
        let (a, b) = (ElemSet(m1), ElemSet(m2));
        let hf = o.hilbert_function(a, k);
        prop_assert!(hf <= a.len() * (k + 1));
        let joint = o.hilbert_function(a.union(b), k);
        prop_assert!(joint >= hf.max(o.hilbert_function(b, k)));
    }
}
