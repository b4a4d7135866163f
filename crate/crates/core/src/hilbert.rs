//! Hilbert functions of `R(A)`, the ring of functions on `⋃_{x∈A} Gr(x)` with
//! `Gr(x) = {(xv, v)} ⊂ V × V`, computed as ranks of restriction maps.
//!
//! Degrees: the oracle is indexed by polynomial degree `k`; the bimodule
//! grading puts `V*` in degree 2, so polynomial degree `k` is internal degree
//! `2k`. Everything user-facing (CSV fixtures, `--maxdeg`, series in `v`) uses
//! the internal degree.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::coxeter::{CoxeterGroup, Elem, ElemSet, GroupKind};
use crate::error::{Error, Result};
use crate::grotring::{primitives, GrothendieckRing, LemmaCase};
use crate::laurent::Laurent;
use crate::linalg;

type Matrix = Vec<Vec<i64>>;

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect())
        .collect()
}

fn identity(n: usize) -> Matrix {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

fn det(m: &Matrix) -> i64 {
    let big: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    i64::try_from(linalg::determinant(big)).expect("small determinant")
}

/// Simple reflections of type `A_r` on the simple-root basis of the sum-zero
/// subspace: `s_i(α_j) = α_j - a_ij α_i` for the Cartan matrix `a`.
fn type_a_simple_reflections(r: usize) -> Vec<Matrix> {
    let cartan = |i: usize, j: usize| match i.abs_diff(j) {
        0 => 2,
        1 => -1,
        _ => 0,
    };
    (0..r)
        .map(|i| {
            let mut m = identity(r);
            for j in 0..r {
                m[i][j] -= cartan(i, j);
            }
            m
        })
        .collect()
}

/// An integral reflection representation `V` of a finite Coxeter group.
#[derive(Debug, Clone)]
pub struct ReflectionRep {
    dim: usize,
    generators: Vec<Matrix>,
    elements: Vec<Matrix>,
}

impl ReflectionRep {
    /// `A2`, `A3`: sum-zero subspace of the permutation representation.
    /// `B2`: signed permutations of the plane with `s` swapping the
    /// coordinates and `t` negating the second one.
    pub fn for_group(group: &CoxeterGroup) -> Result<Self> {
        let generators = match group.descriptor().kind {
            GroupKind::Dihedral(3) => type_a_simple_reflections(2),
            GroupKind::Dihedral(4) => vec![vec![vec![0, 1], vec![1, 0]], vec![vec![1, 0], vec![0, -1]]],
            GroupKind::SymmetricA3 => type_a_simple_reflections(3),
            _ => {
                return Err(Error::Usage(format!(
                    "no integral reflection representation for {}",
                    group.descriptor().name()
                )))
            }
        };
        let dim = generators[0].len();
        let elements: Vec<Matrix> = group
            .elements()
            .map(|x| {
                group
                    .reduced_word(x)
                    .iter()
                    .fold(identity(dim), |acc, &i| mat_mul(&acc, &generators[i]))
            })
            .collect();
        let rep = ReflectionRep {
            dim,
            generators,
            elements,
        };
        rep.validate(group)?;
        Ok(rep)
    }

    fn validate(&self, group: &CoxeterGroup) -> Result<()> {
        for x in group.elements() {
            for y in group.elements() {
                if mat_mul(self.matrix(x), self.matrix(y)) != *self.matrix(group.mul(x, y)) {
                    return Err(Error::Internal("representation is not a homomorphism".into()));
                }
            }
        }
        let distinct: std::collections::HashSet<_> = self.elements.iter().collect();
        if distinct.len() != self.elements.len() {
            return Err(Error::Internal("representation is not faithful".into()));
        }
        for t in group.reflections().iter() {
            let m = self.matrix(t);
            let fixed = (0..self.dim)
                .map(|i| (0..self.dim).map(|j| m[i][j] - i64::from(i == j)).collect())
                .collect::<Vec<Vec<i64>>>();
            let fixed_rank = linalg::rank(fixed.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect());
            if det(m) != -1 || fixed_rank != 1 {
                return Err(Error::Internal("a reflection does not act as a reflection".into()));
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Matrix] {
        &self.generators
    }

    pub fn matrix(&self, x: Elem) -> &Matrix {
        &self.elements[x.index()]
    }
}

/// Exponent vectors of degree `k` in `m` variables, lexicographically
/// descending, with their positions.
#[derive(Debug)]
struct Monomials {
    list: Vec<Vec<u8>>,
    index: HashMap<Vec<u8>, usize>,
}

impl Monomials {
    fn new(m: usize, k: usize) -> Self {
        fn rec(m: usize, k: usize, prefix: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
            if prefix.len() + 1 == m {
                prefix.push(k as u8);
                out.push(prefix.clone());
                prefix.pop();
                return;
            }
            for first in (0..=k).rev() {
                prefix.push(first as u8);
                rec(m, k - first, prefix, out);
                prefix.pop();
            }
        }
        let mut list = Vec::new();
        rec(m, k, &mut Vec::new(), &mut list);
        let index = list.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect();
        Monomials { list, index }
    }
}

/// `C(k + n - 1, n - 1)`: dimension of degree-`k` polynomials in `n` variables.
pub fn polynomial_count(n: usize, k: usize) -> usize {
    (1..n).fold(1usize, |acc, i| acc * (k + i) / i)
}

/// Hilbert functions with caching; safe to share across threads.
pub struct HilbertOracle {
    group: CoxeterGroup,
    rep: ReflectionRep,
    monomials: Mutex<HashMap<(usize, usize), Arc<Monomials>>>,
    images: Mutex<HashMap<(Elem, usize), Arc<Matrix>>>,
    values: Mutex<HashMap<(ElemSet, usize), usize>>,
}

impl HilbertOracle {
    pub fn new(group: &CoxeterGroup) -> Result<Self> {
        Ok(HilbertOracle {
            group: group.clone(),
            rep: ReflectionRep::for_group(group)?,
            monomials: Mutex::new(HashMap::new()),
            images: Mutex::new(HashMap::new()),
            values: Mutex::new(HashMap::new()),
        })
    }

    pub fn group(&self) -> &CoxeterGroup {
        &self.group
    }

    pub fn rep(&self) -> &ReflectionRep {
        &self.rep
    }

    fn monomials(&self, m: usize, k: usize) -> Arc<Monomials> {
        if let Some(hit) = self.monomials.lock().unwrap().get(&(m, k)) {
            return hit.clone();
        }
        let built = Arc::new(Monomials::new(m, k));
        self.monomials.lock().unwrap().entry((m, k)).or_insert(built).clone()
    }

    /// Row `i`: the degree-`k` monomial `i` on `V × V` restricted to `Gr(x)`,
    /// as coordinates in degree-`k` monomials on `V`.
    fn images(&self, x: Elem, k: usize) -> Arc<Matrix> {
        if let Some(hit) = self.images.lock().unwrap().get(&(x, k)) {
            return hit.clone();
        }
        let n = self.rep.dim;
        let big = self.monomials(2 * n, k);
        let small = self.monomials(n, k);
        let rows: Matrix = if k == 0 {
            vec![vec![1]]
        } else {
            let prev_big = self.monomials(2 * n, k - 1);
            let prev_small = self.monomials(n, k - 1);
            let prev = self.images(x, k - 1);
            let m = self.rep.matrix(x);
            // first block coordinate i restricts to Σ_j m[i][j] v_j, second block j to v_j
            let linear = |var: usize| -> Vec<i64> {
                if var < n {
                    m[var].clone()
                } else {
                    (0..n).map(|j| i64::from(j == var - n)).collect()
                }
            };
            big.list
                .iter()
                .map(|e| {
                    let var = e.iter().position(|&a| a > 0).expect("positive degree");
                    let mut lower = e.clone();
                    lower[var] -= 1;
                    let source = &prev[prev_big.index[&lower]];
                    let form = linear(var);
                    let mut row = vec![0i64; small.list.len()];
                    for (f, &c) in source.iter().enumerate() {
                        if c == 0 {
                            continue;
                        }
                        for (j, &l) in form.iter().enumerate() {
                            if l == 0 {
                                continue;
                            }
                            let mut target = prev_small.list[f].clone();
                            target[j] += 1;
                            let slot = &mut row[small.index[&target]];
                            *slot = slot
                                .checked_add(c.checked_mul(l).expect("coefficient overflow"))
                                .expect("coefficient overflow");
                        }
                    }
                    row
                })
                .collect()
        };
        let rows = Arc::new(rows);
        self.images.lock().unwrap().entry((x, k)).or_insert(rows).clone()
    }

    /// `dim R(A)` in polynomial degree `k` (internal degree `2k`).
    pub fn hilbert_function(&self, a: ElemSet, k: usize) -> usize {
        if a.is_empty() {
            return 0;
        }
        if a.len() == 1 {
            return polynomial_count(self.rep.dim, k);
        }
        if let Some(&hit) = self.values.lock().unwrap().get(&(a, k)) {
            return hit;
        }
        let blocks: Vec<_> = a.iter().map(|x| self.images(x, k)).collect();
        let matrix: Vec<Vec<BigInt>> = (0..blocks[0].len())
            .map(|row| {
                blocks
                    .iter()
                    .flat_map(|b| b[row].iter().map(|&c| BigInt::from(c)))
                    .collect()
            })
            .collect();
        let value = linalg::rank(matrix);
        self.values.lock().unwrap().insert((a, k), value);
        value
    }

    /// `HF(A, k)` for `k` in `-∞..`, with negative degrees zero.
    fn hf(&self, a: ElemSet, k: isize) -> usize {
        if k < 0 {
            0
        } else {
            self.hilbert_function(a, k as usize)
        }
    }

    /// Values for every pair, computed in parallel, in canonical order.
    pub fn table(&self, sets: &[ElemSet], max_k: usize) -> HilbertTable {
        let jobs: Vec<(ElemSet, usize)> = sets
            .iter()
            .flat_map(|&a| (0..=max_k).map(move |k| (a, k)))
            .collect();
        let values: Vec<usize> = jobs.par_iter().map(|&(a, k)| self.hilbert_function(a, k)).collect();
        HilbertTable {
            rows: jobs
                .into_iter()
                .zip(values)
                .map(|((a, k), dim)| HilbertRow {
                    set: self.group.format_set(a),
                    degree: 2 * k,
                    dim,
                })
                .collect(),
        }
    }

    /// `Σ_k HF(A, k) v^{2k}` for `k <= max_k`.
    pub fn series(&self, a: ElemSet, max_k: usize) -> Laurent<BigInt> {
        Laurent::from_terms((0..=max_k).map(|k| (2 * k as i32, BigInt::from(self.hilbert_function(a, k)))))
    }

    /// Degreewise check of `R ⊗_{R^s} R(A) ≅ R(A ∪ sA) ⊕ R(A ∩ sA)(-2)`:
    /// `HF(A,k) + HF(A,k-1) = HF(A∪sA,k) + HF(A∩sA,k-1)` for `k <= max_k`.
    pub fn check_soergel_lemma(&self, a: ElemSet, s: Elem, max_k: usize) -> Result<LemmaCheck> {
        let g = &self.group;
        let case = primitives::lemma_case(g, s, a)?;
        let sa = g.act_left(s, a);
        let (union, meet) = (a.union(sa), a.intersection(sa));
        let mut first_failure = None;
        for k in 0..=max_k as isize {
            let lhs = self.hf(a, k) + self.hf(a, k - 1);
            let rhs = self.hf(union, k) + self.hf(meet, k - 1);
            if lhs != rhs {
                first_failure = Some(LemmaFailure {
                    degree: 2 * k as usize,
                    lhs,
                    rhs,
                });
                break;
            }
        }
        Ok(LemmaCheck {
            set: g.format_set(a),
            reflection: g.format_elem(s),
            case: format!("{case:?}"),
            max_degree: 2 * max_k,
            first_failure,
        })
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct HilbertRow {
    pub set: String,
    /// Internal degree `2k`.
    pub degree: usize,
    pub dim: usize,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct HilbertTable {
    pub rows: Vec<HilbertRow>,
}

impl HilbertTable {
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        for row in &self.rows {
            w.serialize(row).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct LemmaFailure {
    pub degree: usize,
    pub lhs: usize,
    pub rhs: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct LemmaCheck {
    pub set: String,
    pub reflection: String,
    pub case: String,
    /// Internal degree.
    pub max_degree: usize,
    pub first_failure: Option<LemmaFailure>,
}

impl LemmaCheck {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }
}

/// `Σ_k C(k+n-1, n-1) v^{2k}` up to internal degree `max_degree`.
pub fn polynomial_series(n: usize, max_degree: i32) -> Laurent<BigInt> {
    Laurent::from_terms(
        (0..=max_degree.max(0) / 2).map(|k| (2 * k, BigInt::from(polynomial_count(n, k as usize)))),
    )
}

/// Hilbert series of a class predicted from its generator expansion: a word
/// with `b` factors `B_t` has series `(v + v^-1)^b HS(R)`, and `[M(1)] = v[M]`
/// lowers degrees, so a coefficient `c` contributes `bar(c)`. Truncated at
/// internal degree `max_degree`.
pub fn propagated_series(
    ring: &GrothendieckRing<BigInt>,
    a: ElemSet,
    n: usize,
    max_degree: i32,
) -> Result<Laurent<BigInt>> {
    let expr = ring
        .expansion(a)
        .ok_or_else(|| Error::Usage(format!("{} is not a basis class", ring.group().format_set(a))))?;
    let mut prefactor = Laurent::<BigInt>::zero();
    for (word, c) in expr.terms() {
        let b = word.iter().filter(|g| matches!(g, crate::grotring::Generator::B(_))).count();
        prefactor = &prefactor + &(&c.bar() * &Laurent::quantum_two().pow(b as u32));
    }
    let lowest = prefactor.min_exp().unwrap_or(0).min(0);
    let base = polynomial_series(n, max_degree - lowest);
    Ok((&prefactor * &base).truncate_above(max_degree))
}

#[derive(Debug, Clone, Serialize)]
pub struct ShiftWitness {
    pub shift: i32,
    /// First internal degree where `HS(B)` and `HS(R(W)(shift))` differ.
    pub degree: Option<i32>,
    pub b_dim: String,
    pub shifted_dim: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct GradedComparison {
    pub max_degree: i32,
    pub window: i32,
    pub prefactor: String,
    pub b_series: String,
    pub w_series: String,
    pub shifts: Vec<ShiftWitness>,
}

impl GradedComparison {
    /// True iff no shift in the window makes the series agree.
    pub fn all_mismatch(&self) -> bool {
        self.shifts.iter().all(|s| s.degree.is_some())
    }
}

/// Compares `HS(B_tst B_s B_t) = (v+v^-1)^3 HS(R)` in `B2` with
/// `HS(R(W)(n)) = v^-n HS(R(W))` for `|n| <= window`, on all internal degrees
/// `<= max_degree` where both truncations are exact.
pub fn graded_dim_compare_b2(oracle: &HilbertOracle, max_degree: i32, window: i32) -> Result<GradedComparison> {
    if oracle.group().descriptor().kind != GroupKind::Dihedral(4) {
        return Err(Error::Usage("the graded comparison runs in b2".into()));
    }
    let n = oracle.rep().dim();
    let prefactor = Laurent::<BigInt>::quantum_two().pow(3);
    let b = (&prefactor * &polynomial_series(n, max_degree + 3)).truncate_above(max_degree);
    let w = oracle.series(oracle.group().full_set(), (max_degree / 2) as usize);
    let lowest = -3 - window;
    let shifts = (-window..=window)
        .map(|shift| {
            let top = max_degree - shift.max(0);
            let differs = (lowest..=top).find(|&d| b.coeff(d) != w.coeff(d + shift));
            ShiftWitness {
                shift,
                degree: differs,
                b_dim: differs.map_or(String::new(), |d| b.coeff(d).to_string()),
                shifted_dim: differs.map_or(String::new(), |d| w.coeff(d + shift).to_string()),
            }
        })
        .collect();
    Ok(GradedComparison {
        max_degree,
        window,
        prefactor: prefactor.to_string(),
        b_series: b.to_string(),
        w_series: w.to_string(),
        shifts,
    })
}

/// Lemma checks for every `(A, t)` with `A` a nonsingleton basis class and
/// `tA ≠ A` where the lemma applies.
pub fn applicable_pairs(group: &CoxeterGroup, sets: &[ElemSet]) -> Vec<(ElemSet, Elem)> {
    let mut out = Vec::new();
    for &a in sets {
        for t in group.reflections().iter() {
            match primitives::lemma_case(group, t, a) {
                Ok(LemmaCase::Stable) | Err(_) => {}
                Ok(_) => out.push((a, t)),
            }
        }
    }
    out
}

/// `check_soergel_lemma` on every applicable pair, in parallel, in pair order.
pub fn lemma_sweep(oracle: &HilbertOracle, sets: &[ElemSet], max_k: usize) -> Result<Vec<LemmaCheck>> {
    applicable_pairs(oracle.group(), sets)
        .par_iter()
        .map(|&(a, t)| oracle.check_soergel_lemma(a, t, max_k))
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct SeriesCheck {
    pub set: String,
    pub oracle: String,
    pub propagated: String,
}

impl SeriesCheck {
    pub fn agrees(&self) -> bool {
        self.oracle == self.propagated
    }
}

/// Oracle series against [`propagated_series`] for every basis class of `ring`.
pub fn compare_with_ring(ring: &GrothendieckRing<BigInt>, oracle: &HilbertOracle, max_k: usize) -> Result<Vec<SeriesCheck>> {
    let n = oracle.rep().dim();
    ring.basis()
        .par_iter()
        .map(|class| {
            let a = class.0;
            Ok(SeriesCheck {
                set: ring.group().format_set(a),
                oracle: oracle.series(a, max_k).to_string(),
                propagated: propagated_series(ring, a, n, 2 * max_k as i32)?.to_string(),
            })
        })
        .collect()
}
