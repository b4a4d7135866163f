use serde::Serialize;

use crate::coxeter::{Elem, ElemSet};
use crate::laurent::{Coefficient, Laurent};

use super::{GrothendieckRing, RingElement, Variant};

#[derive(Debug, Clone, Serialize)]
pub struct RelationCheck {
    pub relation: String,
    pub instance: String,
    pub holds: bool,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct RelationReport {
    pub variant: Variant,
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn first_failure(&self) -> Option<&RelationCheck> {
        self.checks.iter().find(|c| !c.holds)
    }
}

struct Recorder<'a, C> {
    ring: &'a GrothendieckRing<C>,
    checks: Vec<RelationCheck>,
}

impl<C: Coefficient> Recorder<'_, C> {
    fn check(&mut self, relation: &str, instance: String, lhs: RingElement<C>, rhs: RingElement<C>) {
        let g = self.ring.group();
        self.checks.push(RelationCheck {
            relation: relation.into(),
            instance,
            holds: lhs == rhs,
            lhs: lhs.format(g),
            rhs: rhs.format(g),
        });
    }
}

/// Checks the four defining relations on `C_i = [B_{t_i}]`; in the extended
/// variant also the twisting identities between `R_w` and `B_t`.
pub(super) fn verify<C: Coefficient>(ring: &GrothendieckRing<C>) -> RelationReport {
    let mut rec = Recorder {
        ring,
        checks: Vec::new(),
    };
    let c = |i: usize| ring.c_gen(i);
    let prod = |xs: &[usize]| {
        let factors: Vec<_> = xs.iter().map(|&i| c(i)).collect();
        ring.mul_all(&factors)
    };
    let quantum = Laurent::quantum_two();

    for i in 1..=3 {
        rec.check("(1) C_i^2 = (v+v^-1)C_i", format!("i={i}"), prod(&[i, i]), c(i).scale(&quantum));
    }
    for i in 1..=3 {
        for j in (1..=3).filter(|&j| j != i) {
            let k = 6 - i - j;
            rec.check(
                "(2) C_iC_jC_i + C_j = C_i + C_jC_iC_j",
                format!("i={i} j={j}"),
                &prod(&[i, j, i]) + &c(j),
                &c(i) + &prod(&[j, i, j]),
            );
            rec.check(
                "(3) C_iC_jC_i = C_iC_kC_i",
                format!("i={i} j={j} k={k}"),
                prod(&[i, j, i]),
                prod(&[i, k, i]),
            );
            rec.check(
                "(4) C_iC_jC_kC_i = C_iC_kC_jC_i",
                format!("i={i} j={j} k={k}"),
                prod(&[i, j, k, i]),
                prod(&[i, k, j, i]),
            );
        }
    }

    if ring.variant() == Variant::Extended {
        verify_twists(&mut rec);
    }
    RelationReport {
        variant: ring.variant(),
        checks: rec.checks,
    }
}

fn verify_twists<C: Coefficient>(rec: &mut Recorder<'_, C>) {
    let ring = rec.ring;
    let g = ring.group().clone();
    let name = |x: Elem| g.format_elem(x);
    let b = |t: Elem| ring.b_class(t).expect("reflection");
    let r = |w: Elem| ring.r_class(w).expect("extended variant");
    let reflections: Vec<Elem> = g.reflections().iter().collect();

    for x in g.elements() {
        for y in g.elements() {
            rec.check(
                "R_x R_y = R_xy",
                format!("x={} y={}", name(x), name(y)),
                ring.mul(&r(x), &r(y)),
                r(g.mul(x, y)),
            );
        }
    }
    for &t in &reflections {
        let bt = b(t);
        rec.check("(1) B_t R_t = B_t", format!("t={}", name(t)), ring.mul(&bt, &r(t)), bt.clone());
        rec.check("(1) R_t B_t = B_t", format!("t={}", name(t)), ring.mul(&r(t), &bt), bt.clone());
    }
    for w in g.elements() {
        for &t in &reflections {
            let lhs = ring.mul(&r(w), &b(t));
            let rhs = ring.mul(&b(g.conj(w, t)), &r(w));
            let expected = RingElement::basis(ElemSet::from_elems([w, g.mul(w, t)])).scale(&Laurent::v_pow(1));
            let instance = format!("w={} t={}", name(w), name(t));
            rec.check("(2) R_w B_t = B_{wtw^-1} R_w", instance.clone(), lhs.clone(), rhs);
            rec.check("(2) R_w B_t = v R({w, wt})", instance, lhs, expected);
        }
    }
    // B_s B_t1 ... B_tk B_s = B_s B_{s t1 s} ... B_{s tk s} B_s for k <= 2
    for &s in &reflections {
        for &t1 in &reflections {
            let lhs = ring.mul_all(&[b(s), b(t1), b(s)]);
            let rhs = ring.mul_all(&[b(s), b(g.conj(s, t1)), b(s)]);
            rec.check("(3) conjugation inside B_s ... B_s", format!("s={} t1={}", name(s), name(t1)), lhs, rhs);
            for &t2 in &reflections {
                let lhs = ring.mul_all(&[b(s), b(t1), b(t2), b(s)]);
                let rhs = ring.mul_all(&[b(s), b(g.conj(s, t1)), b(g.conj(s, t2)), b(s)]);
                rec.check(
                    "(3) conjugation inside B_s ... B_s",
                    format!("s={} t1={} t2={}", name(s), name(t1), name(t2)),
                    lhs,
                    rhs,
                );
            }
        }
    }
    for basis_class in ring.basis() {
        let a = basis_class.0;
        let x = RingElement::basis(a);
        for w in g.elements() {
            let instance = format!("w={} A={}", name(w), g.format_set(a));
            rec.check("(4) R_w R(A) = R(wA)", instance.clone(), ring.mul(&r(w), &x), RingElement::basis(g.act_left(w, a)));
            rec.check("(4) R(A) R_w = R(Aw)", instance, ring.mul(&x, &r(w)), RingElement::basis(g.act_right(a, w)));
        }
    }
}

#[cfg(test)]
mod tests {
    use crate::grotring::Variant;
    use crate::Ring;

    #[test]
    fn plain_relations_hold() {
        let report = Ring::new(Variant::Plain).unwrap().verify_relations();
        assert_eq!(report.checks.len(), 3 + 3 * 6);
        assert!(report.passed(), "{:?}", report.first_failure());
    }

    #[test]
    fn extended_relations_hold() {
        let report = Ring::new(Variant::Extended).unwrap().verify_relations();
        assert!(report.passed(), "{:?}", report.first_failure());
        assert!(report.checks.iter().any(|c| c.relation.starts_with("(2) R_w B_t")));
    }
}
