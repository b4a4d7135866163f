//! Fraction-free (Bareiss) elimination over exact integral domains.
//!
//! Used for integer ranks in the Hilbert oracle and for determinants over
//! `Z[v, v^-1]` in the presentation check.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::laurent::{Coefficient, Laurent};

/// An integral domain in which exact quotients can be computed.
pub trait ExactDomain: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn ring_mul(&self, other: &Self) -> Self;
    fn ring_sub(&self, other: &Self) -> Self;
    fn ring_neg(&self) -> Self;
    /// `Some(q)` with `q * other == self`, or `None` if no such `q` exists.
    fn div_exact(&self, other: &Self) -> Option<Self>;
}

macro_rules! impl_exact_int {
    ($($t:ty),*) => {$(
        impl ExactDomain for $t {
            fn zero() -> Self { Zero::zero() }
            fn one() -> Self { One::one() }
            fn is_zero(&self) -> bool { Zero::is_zero(self) }
            fn ring_mul(&self, other: &Self) -> Self { self.clone() * other.clone() }
            fn ring_sub(&self, other: &Self) -> Self { self.clone() - other.clone() }
            fn ring_neg(&self) -> Self { -self.clone() }
            fn div_exact(&self, other: &Self) -> Option<Self> {
                if Zero::is_zero(other) || !Zero::is_zero(&(self.clone() % other.clone())) {
                    None
                } else {
                    Some(self.clone() / other.clone())
                }
            }
        }
    )*};
}

impl_exact_int!(BigInt, i64, i128);

impl<C: Coefficient> ExactDomain for Laurent<C> {
    fn zero() -> Self {
        Laurent::zero()
    }
    fn one() -> Self {
        Laurent::one()
    }
    fn is_zero(&self) -> bool {
        Laurent::is_zero(self)
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn ring_sub(&self, other: &Self) -> Self {
        self - other
    }
    fn ring_neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, other: &Self) -> Option<Self> {
        self.exact_div(other)
    }
}

/// One elimination step on rows below `r`, pivoting at `(r, col)`.
fn eliminate_below<T: ExactDomain>(a: &mut [Vec<T>], r: usize, col: usize, prev: &T) {
    let (top, rest) = a.split_at_mut(r + 1);
    let pivot_row = &top[r];
    let pivot = &pivot_row[col];
    for row in rest.iter_mut() {
        let factor = row[col].clone();
        for j in col + 1..row.len() {
            let num = pivot.ring_mul(&row[j]).ring_sub(&factor.ring_mul(&pivot_row[j]));
            row[j] = if num.is_zero() {
                T::zero()
            } else {
                num.div_exact(prev)
                    .expect("Bareiss quotients are exact in an integral domain")
            };
        }
        row[col] = T::zero();
    }
}

fn swap_in_pivot<T: ExactDomain>(a: &mut [Vec<T>], r: usize, col: usize) -> Option<bool> {
    let p = (r..a.len()).find(|&i| !a[i][col].is_zero())?;
    if p != r {
        a.swap(p, r);
    }
    Some(p != r)
}

/// Rank of a rectangular matrix (rows may be any common length).
pub fn rank<T: ExactDomain>(mut a: Vec<Vec<T>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = T::one();
    let mut r = 0;
    for col in 0..cols {
        if r == rows {
            break;
        }
        if swap_in_pivot(&mut a, r, col).is_none() {
            continue;
        }
        eliminate_below(&mut a, r, col, &prev);
        prev = a[r][col].clone();
        r += 1;
    }
    r
}

/// Determinant of a square matrix.
pub fn determinant<T: ExactDomain>(mut a: Vec<Vec<T>>) -> T {
    let n = a.len();
    assert!(a.iter().all(|row| row.len() == n), "determinant of a non-square matrix");
    if n == 0 {
        return T::one();
    }
    let mut prev = T::one();
    let mut negate = false;
    for k in 0..n {
        match swap_in_pivot(&mut a, k, k) {
            None => return T::zero(),
            Some(swapped) => negate ^= swapped,
        }
        eliminate_below(&mut a, k, k, &prev);
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        det.ring_neg()
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Cofactor expansion, for small matrices only.
    fn leibniz(a: &[Vec<i64>]) -> i64 {
        let n = a.len();
        if n == 0 {
            return 1;
        }
        (0..n)
            .map(|j| {
                let minor: Vec<Vec<i64>> = a[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * a[0][j] * leibniz(&minor)
            })
            .sum()
    }

    /// Size of the largest nonzero minor.
    fn rank_by_minors(a: &[Vec<i64>]) -> usize {
        let rows = a.len();
        let cols = a.first().map_or(0, Vec::len);
        for k in (1..=rows.min(cols)).rev() {
            for rs in subsets(rows, k) {
                for cs in subsets(cols, k) {
                    let m: Vec<Vec<i64>> = rs.iter().map(|&i| cs.iter().map(|&j| a[i][j]).collect()).collect();
                    if leibniz(&m) != 0 {
                        return k;
                    }
                }
            }
        }
        0
    }

    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        (0u32..1 << n)
            .filter(|m| m.count_ones() as usize == k)
            .map(|m| (0..n).filter(|&i| m & (1 << i) != 0).collect())
            .collect()
    }

    #[test]
    fn known_determinants() {
        assert_eq!(determinant::<i64>(vec![]), 1);
        assert_eq!(determinant(vec![vec![0i64, 1], vec![1, 0]]), -1);
        assert_eq!(determinant(vec![vec![2i64, 3], vec![4, 6]]), 0);
        let a = vec![vec![2i64, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]];
        assert_eq!(determinant(a), 4);
    }

    #[test]
    fn laurent_determinant() {
        type L = Laurent<BigInt>;
        let q = L::quantum_two();
        // [[q, 1], [1, q]] has determinant q^2 - 1 = v^2 + 1 + v^-2
        let m = vec![vec![q.clone(), L::one()], vec![L::one(), q]];
        assert_eq!(determinant(m), "v^2 + 1 + v^-2".parse().unwrap());
        let tri = vec![
            vec![L::v_pow(2), L::quantum_two(), L::one()],
            vec![L::zero(), L::v_pow(-1), L::v_pow(3)],
            vec![L::zero(), L::zero(), -L::one()],
        ];
        assert_eq!(determinant(tri), -L::v_pow(1));
    }

    proptest! {
        #[test]
        fn determinant_matches_cofactor_expansion(
            a in proptest::collection::vec(proptest::collection::vec(-4i64..5, 4), 4)
        ) {
            prop_assert_eq!(determinant(a.clone()), leibniz(&a));
            let big: Vec<Vec<BigInt>> = a.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
            prop_assert_eq!(determinant(big), BigInt::from(leibniz(&a)));
        }

        #[test]
        fn rank_matches_minors(
            a in proptest::collection::vec(proptest::collection::vec(-2i64..3, 5), 3)
        ) {
            prop_assert_eq!(rank(a.clone()), rank_by_minors(&a));
        }
    }
}
