//! Laurent polynomials in one variable `v` with exact coefficients.
//!
//! `Laurent<C>` is generic over the coefficient ring. Everything in this crate
//! instantiates it with [`num_bigint::BigInt`] (see [`crate::LaurentPoly`]);
//! machine integers are accepted for tests and quick experiments.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_traits::Signed;

use crate::error::Error;

/// Exact coefficient ring for Laurent polynomials and group-ring elements.
pub trait Coefficient:
    Clone + fmt::Debug + fmt::Display + Signed + Ord + Send + Sync + 'static
{
}

impl<T> Coefficient for T where
    T: Clone + fmt::Debug + fmt::Display + Signed + Ord + Send + Sync + 'static
{
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum Sign {
    Plus,
    Minus,
}

/// An element of `C[v, v^-1]`, stored as exponent -> nonzero coefficient.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Laurent<C> {
    terms: BTreeMap<i32, C>,
}

impl<C: Coefficient> Default for Laurent<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient> Laurent<C> {
    pub fn zero() -> Self {
        Laurent {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(C::one(), 0)
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: C, exp: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Laurent { terms }
    }

    /// `v^k`
    pub fn v_pow(exp: i32) -> Self {
        Self::monomial(C::one(), exp)
    }

    /// `v + v^-1`, the quantum two.
    pub fn quantum_two() -> Self {
        Self::from_terms([(1, C::one()), (-1, C::one())])
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, C)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (e, c) in iter {
            out.add_term(e, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, &C)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, exp: i32) -> C {
        self.terms.get(&exp).cloned().unwrap_or_else(C::zero)
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, exp: i32, c: C) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(C::zero);
        *slot = slot.clone() + c;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Laurent {
            terms: self
                .terms
                .iter()
                .map(|(&e, a)| (e, a.clone() * c.clone()))
                .collect(),
        }
    }

    /// Multiplication by `v^k`.
    pub fn shift(&self, k: i32) -> Self {
        Laurent {
            terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// The ring involution `v -> v^-1`.
    pub fn bar(&self) -> Self {
        Laurent {
            terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn eval_at_one(&self) -> C {
        self.terms.values().fold(C::zero(), |acc, c| acc + c.clone())
    }

    /// `Some((sign, k))` iff `self == ±v^k`.
    pub fn is_unit_monomial(&self) -> Option<(Sign, i32)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (&e, c) = self.terms.iter().next()?;
        if c.is_one() {
            Some((Sign::Plus, e))
        } else if (-c.clone()).is_one() {
            Some((Sign::Minus, e))
        } else {
            None
        }
    }

    /// All coefficients nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Drops every term with exponent above `max_exp`.
    pub fn truncate_above(&self, max_exp: i32) -> Self {
        Laurent {
            terms: self
                .terms
                .range(..=max_exp)
                .map(|(&e, c)| (e, c.clone()))
                .collect(),
        }
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a
    /// remainder or the divisor is zero.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        let (d_lo, d_hi) = (divisor.min_exp()?, divisor.max_exp()?);
        if self.is_zero() {
            return Some(Self::zero());
        }
        let lead = divisor.terms[&d_hi].clone();
        let mut rem = self.clone();
        let mut quot = Self::zero();
        // Each step kills the top term of `rem`; the bottom exponent of `rem`
        // may never drop below what the divisor's bottom term can reach.
        let floor = self.min_exp()? - d_lo;
        while let Some(r_hi) = rem.max_exp() {
            let q_exp = r_hi - d_hi;
            if q_exp < floor {
                return None;
            }
            let r_lead = rem.terms[&r_hi].clone();
            if !(r_lead.clone() % lead.clone()).is_zero() {
                return None;
            }
            let q = r_lead / lead.clone();
            let step = Self::monomial(q.clone(), q_exp);
            rem = &rem - &(&step * divisor);
            quot.add_term(q_exp, q);
        }
        Some(quot)
    }

    /// Text form with exponents descending, e.g. `2*v^3 - v + 1 + v^-2`.
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    /// JSON object `{exponent: coefficient}`.
    pub fn to_json(&self) -> serde_json::Value {
        let map = self
            .terms
            .iter()
            .map(|(e, c)| (e.to_string(), coefficient_json(c)))
            .collect();
        serde_json::Value::Object(map)
    }

    pub fn map_coefficients<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> Laurent<D> {
        Laurent::from_terms(self.terms.iter().map(|(&e, c)| (e, f(c))))
    }
}

pub(crate) fn coefficient_json<C: fmt::Display>(c: &C) -> serde_json::Value {
    let s = c.to_string();
    match s.parse::<i64>() {
        Ok(i) => serde_json::Value::from(i),
        Err(_) => serde_json::Value::String(s),
    }
}

impl<C: Coefficient> From<C> for Laurent<C> {
    fn from(c: C) -> Self {
        Self::constant(c)
    }
}

impl<'a, C: Coefficient> Add<&'a Laurent<C>> for &'a Laurent<C> {
    type Output = Laurent<C>;
    fn add(self, rhs: &'a Laurent<C>) -> Laurent<C> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<C: Coefficient> Add for Laurent<C> {
    type Output = Laurent<C>;
    fn add(mut self, rhs: Laurent<C>) -> Laurent<C> {
        self += &rhs;
        self
    }
}

impl<C: Coefficient> AddAssign<&Laurent<C>> for Laurent<C> {
    fn add_assign(&mut self, rhs: &Laurent<C>) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c.clone());
        }
    }
}

impl<C: Coefficient> SubAssign<&Laurent<C>> for Laurent<C> {
    fn sub_assign(&mut self, rhs: &Laurent<C>) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, -c.clone());
        }
    }
}

impl<'a, C: Coefficient> Sub<&'a Laurent<C>> for &'a Laurent<C> {
    type Output = Laurent<C>;
    fn sub(self, rhs: &'a Laurent<C>) -> Laurent<C> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<C: Coefficient> Sub for Laurent<C> {
    type Output = Laurent<C>;
    fn sub(mut self, rhs: Laurent<C>) -> Laurent<C> {
        self -= &rhs;
        self
    }
}

impl<C: Coefficient> Neg for &Laurent<C> {
    type Output = Laurent<C>;
    fn neg(self) -> Laurent<C> {
        Laurent {
            terms: self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }
}

impl<C: Coefficient> Neg for Laurent<C> {
    type Output = Laurent<C>;
    fn neg(self) -> Laurent<C> {
        -&self
    }
}

impl<'a, C: Coefficient> Mul<&'a Laurent<C>> for &'a Laurent<C> {
    type Output = Laurent<C>;
    fn mul(self, rhs: &'a Laurent<C>) -> Laurent<C> {
        let mut out = Laurent::zero();
        for (&ea, ca) in &self.terms {
            for (&eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<C: Coefficient> Mul for Laurent<C> {
    type Output = Laurent<C>;
    fn mul(self, rhs: Laurent<C>) -> Laurent<C> {
        &self * &rhs
    }
}

fn fmt_power(f: &mut fmt::Formatter<'_>, exp: i32) -> fmt::Result {
    match exp {
        1 => write!(f, "v"),
        _ => write!(f, "v^{exp}"),
    }
}

impl<C: Coefficient> fmt::Display for Laurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (&e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if e == 0 {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                fmt_power(f, e)?;
            } else {
                write!(f, "{abs}*")?;
                fmt_power(f, e)?;
            }
        }
        Ok(())
    }
}

impl<C: fmt::Debug> fmt::Debug for Laurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

impl<C: Coefficient> FromStr for Laurent<C> {
    type Err = Error;

    /// Accepts the text form produced by `Display`, optionally parenthesized:
    /// `v + v^-1`, `(2*v^3 - 1)`, `-v^-2`, `7`.
    fn from_str(s: &str) -> Result<Self, Error> {
        LaurentParser::new(s).parse()
    }
}

struct LaurentParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> LaurentParser<'a> {
    fn new(s: &'a str) -> Self {
        LaurentParser {
            src: s.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn parse<C: Coefficient>(mut self) -> Result<Laurent<C>, Error> {
        if self.peek().is_none() {
            return Err(Error::parse(0, "empty Laurent polynomial"));
        }
        let wrapped = self.eat(b'(');
        let out = self.sum()?;
        if wrapped && !self.eat(b')') {
            return Err(Error::parse(self.pos, "expected ')'"));
        }
        if self.peek().is_some() {
            return Err(Error::parse(self.pos, "unexpected trailing input"));
        }
        Ok(out)
    }

    fn sum<C: Coefficient>(&mut self) -> Result<Laurent<C>, Error> {
        let mut out = Laurent::zero();
        let mut negate = self.eat(b'-');
        loop {
            let (e, c) = self.term::<C>()?;
            out.add_term(e, if negate { -c } else { c });
            if self.eat(b'+') {
                negate = false;
            } else if self.eat(b'-') {
                negate = true;
            } else {
                return Ok(out);
            }
        }
    }

    fn term<C: Coefficient>(&mut self) -> Result<(i32, C), Error> {
        let start = self.pos;
        let coeff = match self.digits() {
            Some(d) => Some(
                C::from_str_radix(d, 10)
                    .map_err(|_| Error::parse(start, "coefficient out of range"))?,
            ),
            None => None,
        };
        if coeff.is_some() && !self.eat(b'*') {
            return Ok((0, coeff.unwrap()));
        }
        if !self.eat(b'v') {
            return Err(Error::parse(self.pos, "expected coefficient or 'v'"));
        }
        let mut exp = 1i32;
        if self.eat(b'^') {
            let neg = self.eat(b'-');
            let at = self.pos;
            let d = self
                .digits()
                .ok_or_else(|| Error::parse(at, "expected exponent"))?;
            exp = d
                .parse::<i32>()
                .map_err(|_| Error::parse(at, "exponent out of range"))?;
            if neg {
                exp = -exp;
            }
        }
        Ok((exp, coeff.unwrap_or_else(C::one)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type L = Laurent<BigInt>;

    fn q2() -> L {
        L::quantum_two()
    }

    #[test]
    fn quantum_two_powers() {
        let sq = &q2() * &q2();
        assert_eq!(sq, L::from_terms([(2, 1.into()), (0, 2.into()), (-2, 1.into())]));
        let cube = &sq * &q2();
        // (v + v^-1)^3 by repeated multiplication
        assert_eq!(
            cube,
            L::from_terms([(3, 1.into()), (1, 3.into()), (-1, 3.into()), (-3, 1.into())])
        );
        assert_eq!(q2().pow(3), cube);
    }

    #[test]
    fn additive_inverse() {
        let a: L = "3*v^2 - v + 7 - v^-4".parse().unwrap();
        assert!((&a + &(-&a)).is_zero());
    }

    #[test]
    fn bar_examples() {
        assert_eq!(L::v_pow(1).bar(), L::v_pow(-1));
        assert_eq!(q2().bar(), q2());
        let a: L = "2*v^5 - 3*v^-1".parse().unwrap();
        assert_eq!(a.bar().bar(), a);
    }

    #[test]
    fn eval_and_units() {
        assert_eq!(q2().eval_at_one(), BigInt::from(2));
        assert_eq!((-L::v_pow(3)).is_unit_monomial(), Some((Sign::Minus, 3)));
        assert_eq!(L::v_pow(-2).is_unit_monomial(), Some((Sign::Plus, -2)));
        assert_eq!((L::v_pow(1) + L::one()).is_unit_monomial(), None);
        assert_eq!(L::monomial(2.into(), 0).is_unit_monomial(), None);
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(q2().to_string(), "v + v^-1");
        assert_eq!(L::zero().to_string(), "0");
        let a = L::from_terms([(3, 2.into()), (1, (-1).into()), (0, 1.into()), (-2, (-5).into())]);
        assert_eq!(a.to_string(), "2*v^3 - v + 1 - 5*v^-2");
        assert_eq!(a.to_string().parse::<L>().unwrap(), a);
        assert_eq!("(v + v^-1)".parse::<L>().unwrap(), q2());
        assert_eq!("-v".parse::<L>().unwrap(), -L::v_pow(1));
        assert!("v^".parse::<L>().is_err());
        assert!("".parse::<L>().is_err());
        assert!("(v".parse::<L>().is_err());
    }

    #[test]
    fn json_form() {
        let a = L::from_terms([(1, 1.into()), (-1, 2.into())]);
        assert_eq!(a.to_json(), serde_json::json!({"-1": 2, "1": 1}));
    }

    #[test]
    fn exact_division() {
        let a: L = "v^3 + 3*v + 3*v^-1 + v^-3".parse().unwrap();
        assert_eq!(a.exact_div(&q2()), Some(q2().pow(2)));
        assert_eq!(a.exact_div(&L::v_pow(-3)), Some(a.shift(3)));
        assert_eq!(q2().exact_div(&(L::v_pow(1) + L::one())), None);
        assert_eq!(L::monomial(3.into(), 0).exact_div(&L::monomial(2.into(), 0)), None);
        assert_eq!(a.exact_div(&L::zero()), None);
        assert_eq!(L::zero().exact_div(&a), Some(L::zero()));
    }

    #[test]
    fn machine_integer_coefficients_agree() {
        let a = Laurent::<i64>::quantum_two().pow(4);
        let b = q2().pow(4);
        assert_eq!(a.to_string(), b.to_string());
    }
}
