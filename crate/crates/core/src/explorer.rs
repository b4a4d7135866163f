//! Finite verifications in `B2` and `A3`, the search for `R_w B_{s_1}...B_{s_k} R_{w'}`
//! forms in `A2`, and closure experiments where the decomposition lemmas are
//! only partially applicable.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::Serialize;

use crate::characters::{uch_of_word, GroupRing};
use crate::coxeter::{CoxeterGroup, Elem, ElemSet};
use crate::error::{Error, Result};
use crate::grotring::{primitives, BasisClass, Generator, GrothendieckRing, RingElement, Variant};
use crate::hilbert::{self, HilbertOracle};
use crate::laurent::{Laurent, Sign};

/// Label for verdicts that treat ungraded characters as isomorphism invariants.
pub const CHARACTER_ASSUMPTION: &str = "under character-invariance assumption";

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub assumption: Option<&'static str>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub title: String,
    pub checks: Vec<Check>,
    pub data: serde_json::Value,
}

impl Report {
    fn new(title: &str) -> Self {
        Report {
            title: title.into(),
            checks: Vec::new(),
            data: serde_json::Value::Null,
        }
    }

    fn check(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail: detail.into(),
            assumption: None,
        });
    }

    fn check_assuming(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.check(name, passed, detail);
        self.checks.last_mut().unwrap().assumption = Some(CHARACTER_ASSUMPTION);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.title);
        for c in &self.checks {
            let mark = if c.passed { "ok  " } else { "FAIL" };
            let _ = write!(out, "  [{mark}] {}: {}", c.name, c.detail);
            if let Some(a) = c.assumption {
                let _ = write!(out, " ({a})");
            }
            out.push('\n');
        }
        out
    }
}

fn word_of(group: &CoxeterGroup, parts: &[(&str, &str)]) -> Vec<Generator> {
    parts.iter()
        .map(|&(kind, elem)| {
            let x = group.parse_elem(elem).expect("fixed element name");
            match kind {
                "B" => Generator::B(x),
                _ => Generator::R(x),
            }
        })
        .collect()
}

fn format_word(group: &CoxeterGroup, word: &[Generator]) -> String {
    word.iter().map(|g| g.format(group)).collect::<Vec<_>>().join(" * ")
}

/// `B = B_tst B_s B_t` in `B2`.
pub fn b2_counterexample(max_degree: i32, window: i32) -> Result<Report> {
    let g = CoxeterGroup::b2();
    let mut report = Report::new("B2: B = B_tst * B_s * B_t");
    let word = word_of(&g, &[("B", "tst"), ("B", "s"), ("B", "t")]);
    let ch: GroupRing<BigInt> = uch_of_word(&g, &word);

    let full = ch.support() == g.full_set() && ch.terms().all(|(_, m)| *m == BigInt::from(1));
    report.check(
        "full support, multiplicity one",
        full,
        format!("uch(B) = {} ({} elements)", ch.format(&g), ch.support().len()),
    );

    let moved = g
        .elements()
        .find(|&w| GroupRing::delta(w).convolve(&ch, &g) != ch);
    report.check(
        "twist invariance of uch(B)",
        moved.is_none(),
        match moved {
            None => "delta_w * uch(B) = uch(B) for all 8 w".to_string(),
            Some(w) => format!("delta_{} * uch(B) differs", g.format_elem(w)),
        },
    );

    let oracle = HilbertOracle::new(&g)?;
    let cmp = hilbert::graded_dim_compare_b2(&oracle, max_degree, window)?;
    let matched: Vec<_> = cmp.shifts.iter().filter(|s| s.degree.is_none()).map(|s| s.shift).collect();
    report.check(
        "graded dimensions differ from every shift of R(W)",
        matched.is_empty(),
        if matched.is_empty() {
            format!("no |n| <= {window} matches up to internal degree {max_degree}")
        } else {
            format!("shifts {matched:?} agree up to internal degree {max_degree}")
        },
    );

    // B_s B_t = v^2 R({e,s,t,st}); the lemma must fail for B_tst on that class
    let tst = g.parse_elem("tst")?;
    let inner = crate::grotring::apply_word::<BigInt>(
        &g,
        &word[1..],
        &RingElement::basis(ElemSet::singleton(Elem::IDENTITY)),
    )?;
    let probe = g.parse_set("{e,s,t,st}")?;
    let single = inner.terms().count() == 1 && inner.coeff(probe) == Laurent::v_pow(2);
    let verdict = primitives::lemma_case(&g, tst, probe);
    report.check(
        "first decomposition step is blocked",
        single && verdict.is_err(),
        match &verdict {
            Err(e) => format!("B_s B_t = {}; {e}", inner.format(&g)),
            Ok(case) => format!("lemma applies to (tst, {{e,s,t,st}}) as {case:?}"),
        },
    );
    report.data = serde_json::json!({
        "character": ch.to_json(&g),
        "graded_comparison": cmp,
    });
    Ok(report)
}

/// All `(t1, t2)` in `T × T` with `{e, t1, t2, t1 t2} = set`.
fn square_shapes(g: &CoxeterGroup, set: ElemSet) -> Vec<(Elem, Elem)> {
    let ts: Vec<Elem> = g.reflections().iter().collect();
    let mut out = Vec::new();
    for &t1 in &ts {
        for &t2 in &ts {
            if ElemSet::from_elems([Elem::IDENTITY, t1, t2, g.mul(t1, t2)]) == set {
                out.push((t1, t2));
            }
        }
    }
    out
}

/// Checks in `A3` with generators `s = (12)`, `t = (23)`, `u = (34)`.
pub fn a3_checks() -> Result<Report> {
    let g = CoxeterGroup::a3();
    let mut report = Report::new("A3: B_t B_u B_t against B_t B_sts B_t");
    let uch = |parts: &[(&str, &str)]| uch_of_word::<BigInt>(&g, &word_of(&g, parts));

    let tut_word = uch(&[("B", "t"), ("B", "u"), ("B", "t")]);
    let sts_word = uch(&[("B", "t"), ("B", "sts"), ("B", "t")]);
    let conj_word = uch(&[("B", "t"), ("B", "tut"), ("B", "t")]);

    let expected_support = g.parse_set("{e,t,u,tu,ut,tut}")?;
    report.check(
        "support of uch(B_t B_u B_t)",
        tut_word.support() == expected_support,
        g.format_set(tut_word.support()),
    );
    report.check_assuming(
        "B_t B_u B_t and B_t B_sts B_t are distinguished",
        tut_word.support() != sts_word.support(),
        format!(
            "supports {} and {}",
            g.format_set(tut_word.support()),
            g.format_set(sts_word.support())
        ),
    );
    report.check(
        "uch(B_t B_u B_t) = uch(B_t B_tut B_t)",
        tut_word == conj_word,
        conj_word.format(&g),
    );

    let filtered = uch(&[("B", "s"), ("R", "t"), ("B", "u")]);
    let want = g.parse_set("{t,st,tu,stu}")?;
    report.check(
        "uch(B_s R_t B_u) = d_t + d_st + d_tu + d_stu",
        filtered == GroupRing::indicator(want),
        filtered.format(&g),
    );

    let mut hits = Vec::new();
    for w in want.iter() {
        let shifted = g.act_left(g.inv(w), want);
        for (t1, t2) in square_shapes(&g, shifted) {
            hits.push((w, shifted, t1, t2));
        }
    }
    let witnesses: Vec<_> = hits
        .iter()
        .map(|&(w, shifted, t1, t2)| {
            serde_json::json!({
                "w": g.format_elem(w),
                "w_inv_A": g.format_set(shifted),
                "t1": g.format_elem(t1),
                "t2": g.format_elem(t2),
            })
        })
        .collect();
    let detail = if hits.is_empty() {
        "no w in A has w^-1 A = {e,t1,t2,t1t2}".to_string()
    } else {
        let ws: BTreeSet<Elem> = hits.iter().map(|h| h.0).collect();
        let parts: Vec<_> = hits
            .iter()
            .map(|&(w, shifted, t1, t2)| {
                format!(
                    "w={}: w^-1 A = {} with t1={}, t2={}",
                    g.format_elem(w),
                    g.format_set(shifted),
                    g.format_elem(t1),
                    g.format_elem(t2)
                )
            })
            .collect();
        format!("{} of 4 values of w have the shape; {}", ws.len(), parts.join("; "))
    };
    report.check("w^-1 A is never {e,t1,t2,t1t2} for A = {t,st,tu,stu}", witnesses.is_empty(), detail);
    report.data = serde_json::json!({
        "uch_BtBuBt": tut_word.to_json(&g),
        "uch_BtBstsBt": sts_word.to_json(&g),
        "uch_BsRtBu": filtered.to_json(&g),
        "square_shape_witnesses": witnesses,
    });
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum WitnessForm {
    /// `[R(A)] = v^n [R_w][B_{s_1}]...[R_{w'}]`
    Exact,
    /// `[R(A)]` occurs in `v^n [R_w][B_{s_1}]...[R_{w'}]` with coefficient 1.
    Summand,
}

#[derive(Debug, Clone, Serialize)]
pub struct CombWitness {
    pub class: String,
    pub form: WitnessForm,
    pub word: String,
    pub shift: i32,
}

#[derive(Debug, Clone, Serialize)]
pub struct CombReport {
    pub max_word_len: usize,
    pub window: i32,
    pub witnesses: Vec<CombWitness>,
    pub uncovered: Vec<String>,
}

impl CombReport {
    pub fn passed(&self) -> bool {
        self.uncovered.is_empty()
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "R_w B_s1 ... B_sk R_w' search (simple s_i, k <= {}, |n| <= {})\n",
            self.max_word_len, self.window
        );
        for w in &self.witnesses {
            let form = match w.form {
                WitnessForm::Exact => "exact",
                WitnessForm::Summand => "appears as a summand",
            };
            let _ = writeln!(out, "  {}: v^{} * {} ({form})", w.class, w.shift, w.word);
        }
        for c in &self.uncovered {
            let _ = writeln!(out, "  {c}: no witness");
        }
        out
    }
}

/// For every extended basis class, the first word `R_w B_{s_1}...B_{s_k} R_{w'}`
/// (ordered by `k`, then the `s_i`, then `w'`, then `w`) whose product is a unit
/// multiple `v^-n [R(A)]` with `|n| <= window`, or failing that contains
/// `[R(A)]` with such a coefficient.
pub fn remark_comb_check(ring: &GrothendieckRing<BigInt>, max_word_len: usize, window: i32) -> Result<CombReport> {
    if ring.variant() != Variant::Extended {
        return Err(Error::Usage("the normal-form search runs in the extended ring".into()));
    }
    let g = ring.group();
    let simple = g.generators().to_vec();
    let mut exact: BTreeMap<BasisClass, CombWitness> = BTreeMap::new();
    let mut summand: BTreeMap<BasisClass, CombWitness> = BTreeMap::new();
    for k in 0..=max_word_len {
        let words: Vec<Vec<Elem>> = (0..simple.len().pow(k as u32))
            .map(|mut code| {
                let mut w = vec![simple[0]; k];
                for slot in w.iter_mut().rev() {
                    *slot = simple[code % simple.len()];
                    code /= simple.len();
                }
                w
            })
            .collect();
        for word in &words {
            let middle = word
                .iter()
                .fold(ring.unit(), |acc, &s| ring.mul(&acc, &ring.b_class(s).expect("simple reflection")));
            for w2 in g.elements() {
                let right = ring.rmul_r(&middle, w2)?;
                for w1 in g.elements() {
                    let product = ring.lmul_r(w1, &right)?;
                    let mut gens = Vec::new();
                    if w1 != Elem::IDENTITY {
                        gens.push(Generator::R(w1));
                    }
                    gens.extend(word.iter().map(|&s| Generator::B(s)));
                    if w2 != Elem::IDENTITY {
                        gens.push(Generator::R(w2));
                    }
                    let text = if gens.is_empty() {
                        "Rw:e".to_string()
                    } else {
                        format_word(g, &gens)
                    };
                    let single = product.terms().count() == 1;
                    for (a, c) in product.terms() {
                        let Some((Sign::Plus, m)) = c.is_unit_monomial() else {
                            continue;
                        };
                        if m.abs() > window {
                            continue;
                        }
                        let (form, table) = if single {
                            (WitnessForm::Exact, &mut exact)
                        } else {
                            (WitnessForm::Summand, &mut summand)
                        };
                        table.entry(BasisClass(a)).or_insert_with(|| CombWitness {
                            class: g.format_set(a),
                            form,
                            word: text.clone(),
                            shift: -m,
                        });
                    }
                }
            }
        }
    }
    let mut witnesses = Vec::new();
    let mut uncovered = Vec::new();
    for class in ring.basis() {
        match exact.remove(class).or_else(|| summand.remove(class)) {
            Some(w) => witnesses.push(w),
            None => uncovered.push(g.format_set(class.0)),
        }
    }
    Ok(CombReport {
        max_word_len,
        window,
        witnesses,
        uncovered,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct OpaqueProduct {
    pub reflection: String,
    pub set: String,
    /// A generator word whose class is `v^m [R(set)]` plus other terms.
    pub reached_by: String,
    pub reason: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct GrowthPoint {
    pub depth: usize,
    pub steps: usize,
    pub reached: usize,
    pub opaque: usize,
}

/// BFS state over classes `[R(A)]` reachable from `[R({e})]` by left
/// multiplication with the chosen `B_t`.
#[derive(Debug, Clone, Serialize)]
pub struct ClosureState {
    pub group: String,
    pub generators: Vec<String>,
    pub budget: usize,
    pub steps: usize,
    pub exhausted_budget: bool,
    pub reached: Vec<String>,
    pub opaque: Vec<OpaqueProduct>,
    pub growth: Vec<GrowthPoint>,
    #[serde(skip)]
    pub reached_sets: Vec<ElemSet>,
}

impl ClosureState {
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "closure in {} from B_t for t in {{{}}}: {} classes reached, {} opaque products, {} steps{}\n",
            self.group,
            self.generators.join(","),
            self.reached.len(),
            self.opaque.len(),
            self.steps,
            if self.exhausted_budget { " (budget exhausted)" } else { "" }
        );
        for p in &self.growth {
            let _ = writeln!(out, "  depth {}: {} reached, {} opaque after {} steps", p.depth, p.reached, p.opaque, p.steps);
        }
        for o in self.opaque.iter().take(20) {
            let _ = writeln!(out, "  opaque: B:{} * R{} (reached by {})", o.reflection, o.set, o.reached_by);
        }
        if self.opaque.len() > 20 {
            let _ = writeln!(out, "  ... {} more opaque products", self.opaque.len() - 20);
        }
        out
    }
}

pub fn closure_explore(group: &CoxeterGroup, generators: &[Elem], budget: usize) -> Result<ClosureState> {
    if let Some(&bad) = generators.iter().find(|&&t| !group.is_reflection(t)) {
        return Err(Error::Usage(format!("{} is not a reflection", group.format_elem(bad))));
    }
    let start = ElemSet::singleton(Elem::IDENTITY);
    let mut words: BTreeMap<BasisClass, Vec<Generator>> = BTreeMap::new();
    words.insert(BasisClass(start), Vec::new());
    let mut queue = VecDeque::from([(start, 0usize)]);
    let mut opaque = Vec::new();
    let mut growth = Vec::new();
    let mut steps = 0;
    let mut exhausted = false;
    let mut depth_done = 0;
    'bfs: while let Some((a, depth)) = queue.pop_front() {
        if depth > depth_done {
            growth.push(GrowthPoint {
                depth: depth_done,
                steps,
                reached: words.len(),
                opaque: opaque.len(),
            });
            depth_done = depth;
        }
        for &t in generators {
            if steps == budget {
                exhausted = true;
                break 'bfs;
            }
            steps += 1;
            let mut word = vec![Generator::B(t)];
            word.extend_from_slice(&words[&BasisClass(a)]);
            match primitives::lmul_b::<BigInt>(group, t, &RingElement::basis(a)) {
                Ok(product) => {
                    for (b, _) in product.terms() {
                        if let std::collections::btree_map::Entry::Vacant(slot) = words.entry(BasisClass(b)) {
                            slot.insert(word.clone());
                            queue.push_back((b, depth + 1));
                        }
                    }
                }
                Err(e) => opaque.push(OpaqueProduct {
                    reflection: group.format_elem(t),
                    set: group.format_set(a),
                    reached_by: if word.len() == 1 { "Rw:e".into() } else { format_word(group, &word[1..]) },
                    reason: e.to_string(),
                }),
            }
        }
    }
    growth.push(GrowthPoint {
        depth: depth_done,
        steps,
        reached: words.len(),
        opaque: opaque.len(),
    });
    let reached_sets: Vec<ElemSet> = words.keys().map(|c| c.0).collect();
    for &a in &reached_sets {
        if a.len() > 1 && primitives::stabilizing_reflections(group, a).is_empty() {
            return Err(Error::Internal(format!("reached {} which no reflection stabilizes", group.format_set(a))));
        }
    }
    Ok(ClosureState {
        group: group.descriptor().name(),
        generators: generators.iter().map(|&t| group.format_elem(t)).collect(),
        budget,
        steps,
        exhausted_budget: exhausted,
        reached: reached_sets.iter().map(|&a| group.format_set(a)).collect(),
        opaque,
        growth,
        reached_sets,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grotring::enumerate_x;
    use crate::Ring;

    #[test]
    fn b2_report_passes() {
        let r = b2_counterexample(10, 6).unwrap();
        assert!(r.passed(), "{}", r.to_text());
    }

    #[test]
    fn a3_character_checks() {
        let r = a3_checks().unwrap();
        for c in &r.checks[..4] {
            assert!(c.passed, "{}", r.to_text());
        }
        assert!(r.to_text().contains(CHARACTER_ASSUMPTION));
    }

    #[test]
    fn a2_closure_reaches_x() {
        let g = CoxeterGroup::a2();
        let ts = g.a2_reflections().unwrap();
        let state = closure_explore(&g, &ts, 10_000).unwrap();
        assert!(state.opaque.is_empty());
        assert!(!state.exhausted_budget);
        let x: BTreeSet<_> = enumerate_x(&g).unwrap().into_iter().collect();
        let reached: BTreeSet<_> = state.reached_sets.iter().copied().filter(|a| a.len() > 1).collect();
        assert_eq!(reached, x);
    }

    #[test]
    fn b2_closure_has_opaque_products() {
        let g = CoxeterGroup::b2();
        let ts: Vec<_> = g.reflections().iter().collect();
        let state = closure_explore(&g, &ts, 10_000).unwrap();
        assert!(!state.opaque.is_empty());
    }

    #[test]
    fn budget_is_respected() {
        let g = CoxeterGroup::a3();
        let gens = [g.parse_elem("sts").unwrap(), g.parse_elem("t").unwrap(), g.parse_elem("u").unwrap()];
        let state = closure_explore(&g, &gens, 5).unwrap();
        assert_eq!(state.steps, 5);
        assert!(state.exhausted_budget);
    }

    #[test]
    fn remark_search_small_cases() {
        let ring = Ring::new(Variant::Extended).unwrap();
        let g = ring.group();
        let report = remark_comb_check(&ring, 1, 6).unwrap();
        let find = |s: &str| report.witnesses.iter().find(|w| w.class == s).unwrap();
        let e_t1 = find(&g.format_set(g.parse_set("{e,t1}").unwrap()));
        assert_eq!((e_t1.form, e_t1.shift, e_t1.word.as_str()), (WitnessForm::Exact, -1, "B:s1"));
        let s1 = find("{s1}");
        assert_eq!((s1.form, s1.shift, s1.word.as_str()), (WitnessForm::Exact, 0, "Rw:s1"));
    }
}
