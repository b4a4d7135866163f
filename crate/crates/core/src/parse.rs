//! Text expressions for ring elements and generator words.
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := 'R{' set '}' | 'B:' elem | 'Rw:' elem | scalar
//! scalar := '(' laurent ')' | integer | 'v' ['^' ['-'] integer]
//! ```
//!
//! After `B:` or `Rw:`, following `*`-separated tokens that are not factors
//! themselves extend the element word, so `Rw:s1*s2` is `R_{s1 s2}`.

use std::str::FromStr;

use crate::characters::{self, GroupRing};
use crate::coxeter::{CoxeterGroup, ElemSet};
use crate::error::{Error, Result};
use crate::grotring::{GrothendieckRing, Generator, RingElement};
use crate::laurent::{Coefficient, Laurent};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Factor {
    Class(ElemSet),
    Gen(Generator),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term<C> {
    pub coeff: Laurent<C>,
    pub factors: Vec<Factor>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expr<C> {
    pub terms: Vec<Term<C>>,
}

impl<C: Coefficient> Expr<C> {
    /// Evaluates every product in `ring`, left to right.
    pub fn evaluate(&self, ring: &GrothendieckRing<C>) -> Result<RingElement<C>> {
        let mut out = RingElement::zero();
        for term in &self.terms {
            let mut acc = ring.unit();
            for f in &term.factors {
                let x = match *f {
                    Factor::Class(a) => ring.class(a)?,
                    Factor::Gen(Generator::B(t)) => ring.b_class(t)?,
                    Factor::Gen(Generator::R(w)) => ring.r_class(w)?,
                };
                acc = ring.mul(&acc, &x);
            }
            out += &acc.scale(&term.coeff);
        }
        Ok(out)
    }

    /// Ungraded character, with scalars evaluated at `v = 1`.
    pub fn character(&self, group: &CoxeterGroup) -> GroupRing<C> {
        let mut out = GroupRing::zero();
        for term in &self.terms {
            let mut acc = GroupRing::<C>::one();
            for f in &term.factors {
                let x = match *f {
                    Factor::Class(a) => GroupRing::indicator(a),
                    Factor::Gen(g) => characters::uch_of_generator(g),
                };
                acc = acc.convolve(&x, group);
            }
            let c = term.coeff.eval_at_one();
            for (w, m) in acc.terms() {
                out.add(w, m.clone() * c.clone());
            }
        }
        out
    }

    /// The generator word of a single-term, unit-coefficient expression.
    pub fn as_word(&self) -> Option<Vec<Generator>> {
        match self.terms.as_slice() {
            [term] if term.coeff.is_one() => term
                .factors
                .iter()
                .map(|f| match f {
                    Factor::Gen(g) => Some(*g),
                    Factor::Class(_) => None,
                })
                .collect(),
            _ => None,
        }
    }
}

struct Parser<'a> {
    group: &'a CoxeterGroup,
    text: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn skip_ws(&mut self) {
        let rest = self.rest();
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn eat(&mut self, s: &str) -> bool {
        if self.rest().starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn token_end(&self) -> usize {
        let rest = self.rest();
        self.pos
            + rest
                .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
                .unwrap_or(rest.len())
    }

    fn expr<C: Coefficient>(&mut self) -> Result<Expr<C>> {
        let mut terms = Vec::new();
        self.skip_ws();
        let mut negate = self.eat("-");
        loop {
            let mut term = self.term::<C>()?;
            if negate {
                term.coeff = -term.coeff;
            }
            terms.push(term);
            self.skip_ws();
            match self.peek() {
                None => break,
                Some('+') => negate = false,
                Some('-') => negate = true,
                Some(c) => return Err(Error::parse(self.pos, format!("unexpected '{c}'"))),
            }
            self.pos += 1;
        }
        Ok(Expr { terms })
    }

    fn term<C: Coefficient>(&mut self) -> Result<Term<C>> {
        let mut term = Term {
            coeff: Laurent::one(),
            factors: Vec::new(),
        };
        loop {
            self.skip_ws();
            self.factor(&mut term)?;
            self.skip_ws();
            if !self.eat("*") {
                return Ok(term);
            }
        }
    }

    fn factor<C: Coefficient>(&mut self, term: &mut Term<C>) -> Result<()> {
        let start = self.pos;
        if self.eat("R{") {
            let close = self.rest().find('}').ok_or_else(|| Error::parse(self.text.len(), "expected '}'"))?;
            let inner = &self.rest()[..close];
            let set = self.group.parse_set_at(inner, self.pos)?;
            if set.is_empty() {
                return Err(Error::parse(start, "R{} of the empty set is zero; write 0 instead"));
            }
            self.pos += close + 1;
            term.factors.push(Factor::Class(set));
        } else if self.eat("B:") {
            let (t, at) = self.element_word()?;
            if !self.group.is_reflection(t) {
                return Err(Error::parse(at, format!("{} is not a reflection", self.group.format_elem(t))));
            }
            term.factors.push(Factor::Gen(Generator::B(t)));
        } else if self.eat("Rw:") {
            let (w, _) = self.element_word()?;
            term.factors.push(Factor::Gen(Generator::R(w)));
        } else if self.eat("(") {
            let close = self.rest().find(')').ok_or_else(|| Error::parse(self.text.len(), "expected ')'"))?;
            let c = Laurent::<C>::from_str(&self.rest()[..close]).map_err(|e| shift(e, self.pos))?;
            self.pos += close + 1;
            term.coeff = &term.coeff * &c;
        } else if matches!(self.peek(), Some('v' | '0'..='9')) {
            let mut end = self.token_end();
            if self.text[end..].starts_with('^') {
                end += 1;
                if self.text[end..].starts_with('-') {
                    end += 1;
                }
                end += self.text[end..].find(|c: char| !c.is_ascii_digit()).unwrap_or(self.text.len() - end);
            }
            let c = Laurent::<C>::from_str(&self.text[self.pos..end]).map_err(|e| shift(e, start))?;
            self.pos = end;
            term.coeff = &term.coeff * &c;
        } else if self.peek().is_none() {
            return Err(Error::parse(start, "expected a factor"));
        } else {
            let end = self.token_end().max(self.pos + 1);
            return Err(Error::parse(start, format!("unknown factor '{}'", &self.text[start..end])));
        }
        Ok(())
    }

    /// An element word after `B:` / `Rw:`, continuing across `*` while the next
    /// token is not itself a factor.
    fn element_word(&mut self) -> Result<(crate::coxeter::Elem, usize)> {
        let start = self.pos;
        let mut acc = self.group.identity();
        loop {
            let end = self.token_end();
            let x = self.group.parse_elem_at(&self.text[self.pos..end], self.pos)?;
            acc = self.group.mul(acc, x);
            self.pos = end;
            let save = self.pos;
            self.skip_ws();
            if self.eat("*") {
                self.skip_ws();
                let next = self.rest();
                let is_factor = next.starts_with("R{")
                    || next.starts_with("B:")
                    || next.starts_with("Rw:")
                    || next.starts_with('(')
                    || next.starts_with('v')
                    || next.starts_with(|c: char| c.is_ascii_digit());
                if !is_factor {
                    continue;
                }
            }
            self.pos = save;
            return Ok((acc, start));
        }
    }
}

fn shift(e: Error, by: usize) -> Error {
    match e {
        Error::Parse { pos, msg } => Error::parse(pos + by, msg),
        other => other,
    }
}

pub fn parse_expr<C: Coefficient>(group: &CoxeterGroup, text: &str) -> Result<Expr<C>> {
    let mut p = Parser { group, text, pos: 0 };
    let expr = p.expr()?;
    Ok(expr)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Elem, LaurentPoly, Ring, Variant};
    use num_bigint::BigInt;

    fn ring() -> Ring {
        Ring::new(Variant::Extended).unwrap()
    }

    #[test]
    fn products_and_sums() {
        let r = ring();
        let g = r.group();
        let x = parse_expr::<BigInt>(g, "R{e,t1} * B:t2 + (v + v^-1)*R{e,t3}").unwrap();
        assert_eq!(x.terms.len(), 2);
        let [t1, t2, t3] = g.a2_reflections().unwrap();
        let mut want = r.mul(&r.class(ElemSet::from_elems([Elem::IDENTITY, t1])).unwrap(), &r.b_class(t2).unwrap());
        want += &r.class(ElemSet::from_elems([Elem::IDENTITY, t3])).unwrap().scale(&LaurentPoly::quantum_two());
        assert_eq!(x.evaluate(&r).unwrap(), want);
    }

    #[test]
    fn twist_words_continue() {
        let r = ring();
        let g = r.group();
        let x = parse_expr::<BigInt>(g, "Rw:s1*s2 * B:t1").unwrap();
        let s12 = g.parse_elem("s1*s2").unwrap();
        assert_eq!(
            x.as_word().unwrap(),
            vec![Generator::R(s12), Generator::B(g.a2_reflections().unwrap()[0])]
        );
        let y = parse_expr::<BigInt>(g, "-v^-1*Rw:e - 2").unwrap();
        assert_eq!(y.terms[0].coeff, -LaurentPoly::v_pow(-1));
        assert_eq!(y.terms[1].coeff, LaurentPoly::constant((-2).into()));
    }

    #[test]
    fn errors_carry_positions() {
        let g = crate::CoxeterGroup::a2();
        match parse_expr::<BigInt>(&g, "B:t1 * Q") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 7),
            other => panic!("{other:?}"),
        }
        match parse_expr::<BigInt>(&g, "B:s1*s2") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 2),
            other => panic!("{other:?}"),
        }
        assert!(parse_expr::<BigInt>(&g, "R{e,x9}").is_err());
    }

    #[test]
    fn b2_character_word() {
        let g = crate::CoxeterGroup::b2();
        let x = parse_expr::<BigInt>(&g, "B:tst * B:s * B:t").unwrap();
        assert_eq!(x.character(&g).support(), g.full_set());
    }
}
