//! Structure-constant tables and their text renderings.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::laurent::{Coefficient, Laurent};

use super::GrothendieckRing;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Csv,
    Json,
    Latex,
}

impl TableFormat {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(TableFormat::Csv),
            "json" => Ok(TableFormat::Json),
            "latex" => Ok(TableFormat::Latex),
            _ => Err(Error::Usage(format!("unknown table format '{s}'"))),
        }
    }
}

/// `c_{AB}^C` with `[R(A)][R(B)] = Σ_C c_{AB}^C [R(C)]`.
pub struct StructureTable<'a, C> {
    ring: &'a GrothendieckRing<C>,
}

impl<'a, C: Coefficient> StructureTable<'a, C> {
    pub(super) fn new(ring: &'a GrothendieckRing<C>) -> Self {
        StructureTable { ring }
    }

    pub fn dimension(&self) -> usize {
        self.ring.rank()
    }

    pub fn get(&self, a: usize, b: usize, c: usize) -> Laurent<C> {
        self.ring.basis_product(a, b).coeff(self.ring.basis()[c].0)
    }

    /// All `rank^3` entries in basis order, zeros included.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, Laurent<C>)> + '_ {
        let n = self.dimension();
        (0..n).flat_map(move |a| {
            (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c, self.get(a, b, c))))
        })
    }

    fn set_name(&self, i: usize) -> String {
        self.ring.group().format_set(self.ring.basis()[i].0)
    }

    pub fn render(&self, format: TableFormat) -> String {
        match format {
            TableFormat::Csv => self.to_csv(),
            TableFormat::Json => serde_json::to_string_pretty(&self.to_json()).expect("json"),
            TableFormat::Latex => self.to_latex(),
        }
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["a", "b", "c", "coefficient"]).expect("in-memory write");
        for (a, b, c, coeff) in self.entries() {
            w.write_record([self.set_name(a), self.set_name(b), self.set_name(c), coeff.to_string()])
                .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
    }

    /// Nonzero entries only.
    pub fn to_json(&self) -> serde_json::Value {
        let basis: Vec<_> = (0..self.dimension()).map(|i| self.set_name(i)).collect();
        let entries: Vec<_> = self
            .entries()
            .filter(|e| !e.3.is_zero())
            .map(|(a, b, c, coeff)| {
                serde_json::json!({
                    "a": basis[a], "b": basis[b], "c": basis[c], "coeff": coeff.to_json()
                })
            })
            .collect();
        serde_json::json!({
            "group": self.ring.group().descriptor().name(),
            "variant": self.ring.variant().name(),
            "rank": self.dimension(),
            "basis": basis,
            "entries": entries,
        })
    }

    pub fn to_latex(&self) -> String {
        let latex_set = |i: usize| {
            let g = self.ring.group();
            let names: Vec<_> = self.ring.basis()[i]
                .0
                .iter()
                .map(|x| g.format_elem(x).replace('*', ""))
                .collect();
            format!("R(\\{{{}\\}})", names.join(","))
        };
        let latex_coeff = |c: &Laurent<C>| {
            let s = c.to_string();
            let mut out = String::new();
            let mut chars = s.chars().peekable();
            // v^-1 -> v^{-1}
            while let Some(ch) = chars.next() {
                if ch == '^' {
                    out.push_str("^{");
                    while let Some(&d) = chars.peek() {
                        if d == '-' || d.is_ascii_digit() {
                            out.push(d);
                            chars.next();
                        } else {
                            break;
                        }
                    }
                    out.push('}');
                } else if ch != '*' {
                    out.push(ch);
                }
            }
            out
        };
        let n = self.dimension();
        let mut out = String::new();
        out.push_str("\\begin{longtable}{lll}\n$A$ & $B$ & $[R(A)][R(B)]$ \\\\\n\\hline\n");
        for a in 0..n {
            for b in 0..n {
                let terms: Vec<String> = (0..n)
                    .filter_map(|c| {
                        let coeff = self.get(a, b, c);
                        (!coeff.is_zero()).then(|| format!("({}){}", latex_coeff(&coeff), latex_set(c)))
                    })
                    .collect();
                let _ = writeln!(
                    out,
                    "${}$ & ${}$ & ${}$ \\\\",
                    latex_set(a),
                    latex_set(b),
                    terms.join(" + ")
                );
            }
        }
        out.push_str("\\end{longtable}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grotring::Variant;
    use crate::Ring;

    #[test]
    fn csv_has_all_rows() {
        let r = Ring::new(Variant::Plain).unwrap();
        let csv = r.structure_constants().to_csv();
        assert_eq!(csv.lines().count(), 20 * 20 * 20 + 1);
        assert_eq!(csv.lines().next(), Some("a,b,c,coefficient"));
        assert!(csv.lines().nth(1).unwrap().starts_with("{e},{e},{e},1"));
    }

    #[test]
    fn json_and_latex_render() {
        let r = Ring::new(Variant::Extended).unwrap();
        let t = r.structure_constants();
        let json = t.to_json();
        assert_eq!(json["rank"], 25);
        assert_eq!(json["basis"].as_array().unwrap().len(), 25);
        let latex = t.to_latex();
        assert!(latex.contains("v^{-2}"));
        assert_eq!(latex.lines().filter(|l| l.ends_with("\\\\")).count(), 25 * 25 + 1);
    }

    #[test]
    fn format_names() {
        assert_eq!(TableFormat::parse("latex").unwrap(), TableFormat::Latex);
        assert!(TableFormat::parse("xml").is_err());
    }
}
