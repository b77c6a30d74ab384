//! Text formats: the TOML algebra file, the element syntax, and structured reports.
//!
//! An algebra file looks like
//!
//! ```toml
//! version = "v1"
//! name = "Z2"
//! cyclotomic_order = 1
//! basis = ["e", "g"]
//! unital = true
//! unit = [[0, "1"]]
//! counit = ["1", "1"]
//! product = [
//!   { i = 0, j = 0, terms = [[0, "1"]] },
//!   { i = 0, j = 1, terms = [[1, "1"]] },
//!   { i = 1, j = 0, terms = [[1, "1"]] },
//!   { i = 1, j = 1, terms = [[0, "1"]] },
//! ]
//! coproduct = [
//!   { i = 0, terms = [[0, 0, "1"]] },
//!   { i = 1, terms = [[1, 1, "1"]] },
//! ]
//! antipode = [
//!   { i = 0, terms = [[0, "1"]] },
//!   { i = 1, terms = [[1, "1"]] },
//! ]
//! ```
//!
//! Scalars are strings in the exact syntax (`-1/2*z3^2 + 3`). Absent product
//! entries are zero; coproduct and antipode need one entry per basis vector.

use std::collections::BTreeSet;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, Basis};
use crate::cyclotomic::{Cyclotomic, MAX_PARSE_ORDER};
use crate::element::{BasisId, Element, Tensor};
use crate::error::{Error, Result};
use crate::hopf::HopfAlgebra;
use crate::integrals::Functional;
use crate::report::Report;
use crate::scalar::Scalar;

pub const FORMAT_VERSION: &str = "v1";

/// Largest basis accepted from a file; the product table is dense in memory.
pub const MAX_FILE_DIM: usize = 256;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductEntry {
    pub i: usize,
    pub j: usize,
    pub terms: Vec<(usize, String)>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoproductEntry {
    pub i: usize,
    pub terms: Vec<(usize, usize, String)>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapEntry {
    pub i: usize,
    pub terms: Vec<(usize, String)>,
}

/// The raw document, before any validation beyond its shape.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub version: String,
    pub name: String,
    pub cyclotomic_order: u32,
    pub basis: Vec<String>,
    pub unital: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<Vec<(usize, String)>>,
    pub counit: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub integral: Option<Vec<String>>,
    #[serde(default)]
    pub product: Vec<ProductEntry>,
    pub coproduct: Vec<CoproductEntry>,
    pub antipode: Vec<MapEntry>,
}

/// Structure data checked against the declared field and basis.
#[derive(Clone, Debug)]
pub struct ParsedAlgebra {
    pub name: String,
    pub order: u32,
    pub labels: Vec<String>,
    pub unit: Option<Element<Cyclotomic>>,
    pub product: Vec<Vec<Element<Cyclotomic>>>,
    pub coproduct: Vec<Tensor<Cyclotomic>>,
    pub counit: Vec<Cyclotomic>,
    pub antipode: Vec<Element<Cyclotomic>>,
    pub integral: Option<Vec<Cyclotomic>>,
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidFile(msg.into())
}

fn line_of(text: &str, offset: usize) -> usize {
    text[..offset.min(text.len())].matches('\n').count() + 1
}

/// Parses and validates an algebra file.
pub fn parse_algebra_file(text: &str) -> Result<ParsedAlgebra> {
    let file: AlgebraFile = toml::from_str(text).map_err(|e| {
        let line = e.span().map(|s| line_of(text, s.start)).unwrap_or(1);
        Error::parse(line, e.message().to_string())
    })?;
    file.validate()
}

impl AlgebraFile {
    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("algebra files always serialize")
    }

    pub fn validate(&self) -> Result<ParsedAlgebra> {
        if self.version != FORMAT_VERSION {
            return Err(invalid(format!(
                "unsupported version `{}`, expected `{FORMAT_VERSION}`",
                self.version
            )));
        }
        let order = self.cyclotomic_order;
        if order == 0 || order > MAX_PARSE_ORDER {
            return Err(invalid(format!("cyclotomic_order {order} out of range")));
        }
        let n = self.basis.len();
        if n == 0 || n > MAX_FILE_DIM {
            return Err(invalid(format!(
                "basis size {n} outside 1..={MAX_FILE_DIM}"
            )));
        }
        let distinct: BTreeSet<&String> = self.basis.iter().collect();
        if distinct.len() != n {
            return Err(invalid("duplicate basis labels"));
        }
        let scalar = |s: &str, at: &str| -> Result<Cyclotomic> {
            let c = Cyclotomic::from_str(s).map_err(|e| invalid(format!("{at}: {e}")))?;
            if !order.is_multiple_of(c.order()) {
                return Err(invalid(format!(
                    "{at}: `{s}` is not in the declared field Q(z{order})"
                )));
            }
            Ok(c)
        };
        let index = |i: usize, at: &str| -> Result<BasisId> {
            if i < n {
                Ok(BasisId(i as i64))
            } else {
                Err(invalid(format!(
                    "{at}: index {i} out of range for {n} basis vectors"
                )))
            }
        };
        let element = |terms: &[(usize, String)], at: &str| -> Result<Element<Cyclotomic>> {
            let mut e = Element::zero();
            for (k, c) in terms {
                e.add_term(index(*k, at)?, scalar(c, at)?);
            }
            Ok(e)
        };

        let unit = match (self.unital, &self.unit) {
            (true, Some(u)) => Some(element(u, "unit")?),
            (true, None) => return Err(invalid("unital algebra without `unit`")),
            (false, Some(_)) => return Err(invalid("`unit` given for a non-unital algebra")),
            (false, None) => None,
        };

        let mut product = vec![vec![Element::zero(); n]; n];
        let mut seen = BTreeSet::new();
        for p in &self.product {
            let at = format!("product ({}, {})", p.i, p.j);
            index(p.i, &at)?;
            index(p.j, &at)?;
            if !seen.insert((p.i, p.j)) {
                return Err(invalid(format!("{at} listed twice")));
            }
            product[p.i][p.j] = element(&p.terms, &at)?;
        }

        let mut coproduct: Vec<Option<Tensor<Cyclotomic>>> = vec![None; n];
        for d in &self.coproduct {
            let at = format!("coproduct {}", d.i);
            index(d.i, &at)?;
            let mut t = Tensor::zero(2);
            for (j, k, c) in &d.terms {
                t.add_term(vec![index(*j, &at)?, index(*k, &at)?], scalar(c, &at)?);
            }
            if coproduct[d.i].replace(t).is_some() {
                return Err(invalid(format!("{at} listed twice")));
            }
        }
        let coproduct = coproduct
            .into_iter()
            .enumerate()
            .map(|(i, t)| t.ok_or_else(|| invalid(format!("coproduct {i} missing"))))
            .collect::<Result<Vec<_>>>()?;

        let mut antipode: Vec<Option<Element<Cyclotomic>>> = vec![None; n];
        for s in &self.antipode {
            let at = format!("antipode {}", s.i);
            index(s.i, &at)?;
            if antipode[s.i].replace(element(&s.terms, &at)?).is_some() {
                return Err(invalid(format!("{at} listed twice")));
            }
        }
        let antipode = antipode
            .into_iter()
            .enumerate()
            .map(|(i, t)| t.ok_or_else(|| invalid(format!("antipode {i} missing"))))
            .collect::<Result<Vec<_>>>()?;

        if self.counit.len() != n {
            return Err(invalid(format!(
                "counit has {} entries, expected {n}",
                self.counit.len()
            )));
        }
        let counit = self
            .counit
            .iter()
            .map(|c| scalar(c, "counit"))
            .collect::<Result<Vec<_>>>()?;
        let integral = match &self.integral {
            Some(v) if v.len() != n => {
                return Err(invalid(format!(
                    "integral has {} entries, expected {n}",
                    v.len()
                )))
            }
            Some(v) => Some(
                v.iter()
                    .map(|c| scalar(c, "integral"))
                    .collect::<Result<Vec<_>>>()?,
            ),
            None => None,
        };

        Ok(ParsedAlgebra {
            name: self.name.clone(),
            order,
            labels: self.basis.clone(),
            unit,
            product,
            coproduct,
            counit,
            antipode,
            integral,
        })
    }

    /// The file describing a finite-dimensional exact Hopf algebra.
    pub fn from_hopf(
        h: &HopfAlgebra<Cyclotomic>,
        integral: Option<&Functional<Cyclotomic>>,
    ) -> Result<Self> {
        let n = h.algebra().require_dim()?;
        let ids: Vec<BasisId> = (0..n as i64).map(BasisId).collect();
        let mut order = 1u32;
        let mut note = |c: &Cyclotomic| -> String {
            order = num_integer::lcm(order, c.order());
            c.to_string()
        };
        let mut terms = |e: &Element<Cyclotomic>| -> Vec<(usize, String)> {
            e.terms().map(|(k, c)| (k.index(), note(c))).collect()
        };
        let unit = h.algebra().unit().map(&mut terms);
        let mut product = Vec::new();
        for &i in &ids {
            for &j in &ids {
                let p = h.algebra().basis_product(i, j);
                if !p.is_zero() {
                    product.push(ProductEntry {
                        i: i.index(),
                        j: j.index(),
                        terms: terms(&p),
                    });
                }
            }
        }
        let antipode = ids
            .iter()
            .map(|&i| MapEntry {
                i: i.index(),
                terms: terms(&h.antipode_basis(i)),
            })
            .collect();
        let mut coproduct = Vec::new();
        for &i in &ids {
            let t = h.coproduct(&Element::basis(i))?;
            coproduct.push(CoproductEntry {
                i: i.index(),
                terms: t
                    .terms()
                    .map(|(jk, c)| (jk[0].index(), jk[1].index(), note(c)))
                    .collect(),
            });
        }
        let counit = ids.iter().map(|&i| note(&h.counit_basis(i))).collect();
        let integral = integral.map(|f| f.coords(n).iter().map(&mut note).collect());
        Ok(AlgebraFile {
            version: FORMAT_VERSION.to_string(),
            name: h.name().to_string(),
            cyclotomic_order: order,
            basis: ids.iter().map(|&i| h.label(i)).collect(),
            unital: unit.is_some(),
            unit,
            counit,
            integral,
            product,
            coproduct,
            antipode,
        })
    }
}

impl ParsedAlgebra {
    /// Builds the Hopf algebra in the scalar field `F`.
    pub fn build<F: Scalar>(&self) -> Result<HopfAlgebra<F>> {
        let conv_e = |e: &Element<Cyclotomic>| {
            Element::from_terms(e.terms().map(|(k, c)| (k, F::from_cyclotomic(c))))
        };
        let table = self
            .product
            .iter()
            .map(|row| row.iter().map(conv_e).collect())
            .collect();
        let unit = self.unit.as_ref().map(conv_e);
        let algebra = Algebra::from_table(self.name.clone(), self.labels.clone(), table, unit);
        let coproduct = self
            .coproduct
            .iter()
            .map(|t| {
                let mut out = Tensor::zero(2);
                for (ids, c) in t.terms() {
                    out.add_term(ids.to_vec(), F::from_cyclotomic(c));
                }
                out
            })
            .collect();
        let counit = self.counit.iter().map(F::from_cyclotomic).collect();
        let antipode = self.antipode.iter().map(conv_e).collect();
        HopfAlgebra::from_tables(algebra, coproduct, counit, antipode, None)
    }

    pub fn integral<F: Scalar>(&self) -> Option<Functional<F>> {
        self.integral
            .as_ref()
            .map(|v| Functional::from_coords(v.iter().map(F::from_cyclotomic).collect()))
    }
}

/// Splits at top-level `+`/`-`, keeping each sign with its term.
fn split_terms(text: &str) -> Result<Vec<(bool, String)>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut negative = false;
    let mut signed = false;
    let mut current = String::new();
    let mut prev: Option<char> = None;
    for ch in text.chars() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(Error::parse(1, "unbalanced `)`"));
                }
            }
            _ => {}
        }
        // A sign right after `_` belongs to a label such as `d_-3`.
        let is_sign = (ch == '+' || ch == '-') && depth == 0 && prev != Some('_');
        if is_sign {
            if !current.trim().is_empty() {
                out.push((negative, std::mem::take(&mut current)));
            } else if signed || !out.is_empty() {
                return Err(Error::parse(1, "missing term before sign"));
            }
            negative = ch == '-';
            signed = true;
            current.clear();
        } else {
            current.push(ch);
        }
        if !ch.is_whitespace() {
            prev = Some(ch);
        }
    }
    if depth != 0 {
        return Err(Error::parse(1, "unbalanced `(`"));
    }
    if current.trim().is_empty() {
        return Err(Error::parse(1, "missing term"));
    }
    out.push((negative, current));
    Ok(out)
}

fn last_top_level_star(s: &str) -> Option<usize> {
    let mut depth = 0i32;
    let mut found = None;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '*' if depth == 0 => found = Some(i),
            _ => {}
        }
    }
    found
}

/// Parses `coef*label` terms joined by `+`/`-`; a bare label has coefficient 1.
/// Coefficients may be parenthesized, e.g. `(1 + z3)*g - 1/2*x`.
pub fn parse_element(text: &str, basis: &Basis) -> Result<Element<Cyclotomic>> {
    let mut out = Element::zero();
    for (negative, term) in split_terms(text)? {
        let term = term.trim();
        let (coef, label) = match last_top_level_star(term) {
            Some(i) => {
                let raw = term[..i].trim();
                let inner = raw
                    .strip_prefix('(')
                    .and_then(|r| r.strip_suffix(')'))
                    .unwrap_or(raw);
                (Cyclotomic::from_str(inner)?, term[i + 1..].trim())
            }
            None => (Cyclotomic::one(), term),
        };
        let id = basis
            .resolve(label)
            .ok_or_else(|| Error::parse(1, format!("unknown basis label `{label}`")))?;
        out.add_term(id, if negative { -coef } else { coef });
    }
    Ok(out)
}

/// Decodes a structured report.
pub fn parse_report(text: &str) -> Result<Report> {
    serde_json::from_str(text).map_err(|e| Error::parse(e.line(), e.to_string()))
}

/// Encodes a report as pretty-printed JSON with a trailing newline.
pub fn write_report(r: &Report) -> String {
    let mut s = serde_json::to_string_pretty(r).expect("reports always serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{self, Builtin};

    fn finite(name: &str) -> HopfAlgebra<Cyclotomic> {
        let Builtin::Hopf(h) = catalog::builtin::<Cyclotomic>(name, 3).unwrap() else {
            unreachable!()
        };
        h
    }

    #[test]
    fn builtins_round_trip_through_files() {
        for name in ["group:z2", "group:s3", "function:s3", "h4", "taft:3"] {
            let h = finite(name);
            let file = AlgebraFile::from_hopf(&h, None).unwrap();
            let text = file.to_toml();
            let parsed = parse_algebra_file(&text).unwrap();
            let back: HopfAlgebra<Cyclotomic> = parsed.build().unwrap();
            assert_eq!(AlgebraFile::from_hopf(&back, None).unwrap(), file, "{name}");
            assert!(back.check_axioms().passed(), "{name}");
        }
    }

    #[test]
    fn taft_file_declares_its_root_of_unity() {
        let file = AlgebraFile::from_hopf(&finite("taft:3"), None).unwrap();
        assert_eq!(file.cyclotomic_order, 3);
    }

    #[test]
    fn doc_example_parses() {
        let text = r#"
version = "v1"
name = "Z2"
cyclotomic_order = 1
basis = ["e", "g"]
unital = true
unit = [[0, "1"]]
counit = ["1", "1"]
product = [
  { i = 0, j = 0, terms = [[0, "1"]] },
  { i = 0, j = 1, terms = [[1, "1"]] },
  { i = 1, j = 0, terms = [[1, "1"]] },
  { i = 1, j = 1, terms = [[0, "1"]] },
]
coproduct = [
  { i = 0, terms = [[0, 0, "1"]] },
  { i = 1, terms = [[1, 1, "1"]] },
]
antipode = [
  { i = 0, terms = [[0, "1"]] },
  { i = 1, terms = [[1, "1"]] },
]
"#;
        let h: HopfAlgebra<Cyclotomic> = parse_algebra_file(text).unwrap().build().unwrap();
        assert!(h.check_axioms().passed());
    }

    #[test]
    fn validation_errors() {
        let good = AlgebraFile::from_hopf(&finite("group:z2"), None).unwrap();
        let mut f = good.clone();
        f.version = "v2".into();
        assert!(matches!(f.validate(), Err(Error::InvalidFile(_))));
        let mut f = good.clone();
        f.product[0].terms[0].0 = 7;
        assert!(matches!(f.validate(), Err(Error::InvalidFile(_))));
        let mut f = good.clone();
        f.counit[0] = "z3".into();
        assert!(matches!(f.validate(), Err(Error::InvalidFile(_))));
        let mut f = good.clone();
        f.antipode.pop();
        assert!(matches!(f.validate(), Err(Error::InvalidFile(_))));
        let mut f = good;
        f.coproduct.push(f.coproduct[0].clone());
        assert!(matches!(f.validate(), Err(Error::InvalidFile(_))));
    }

    #[test]
    fn toml_errors_carry_lines() {
        let err = parse_algebra_file("version = \"v1\"\nname = \n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err:?}");
    }

    #[test]
    fn element_syntax() {
        let h = finite("h4");
        let b = h.algebra().basis();
        let x = parse_element("2*g - 1/2*x + gx", b).unwrap();
        let expected = Element::from_terms([
            (BasisId(1), Cyclotomic::integer(2)),
            (BasisId(2), Cyclotomic::fraction(-1, 2)),
            (BasisId(3), Cyclotomic::one()),
        ]);
        assert_eq!(x, expected);
        assert_eq!(
            parse_element("-1", b).unwrap(),
            Element::term(BasisId(0), -Cyclotomic::one())
        );
        let y = parse_element("(1 + z3)*g", b).unwrap();
        assert_eq!(
            y.coeff(BasisId(1)),
            Cyclotomic::one() + Cyclotomic::root_of_unity(3)
        );
        for bad in ["", "2*", "g +", "+ - g", "q", "(2*g", "2)*g", "3**g"] {
            assert!(parse_element(bad, b).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn shown_elements_parse_back() {
        let h = finite("taft:3");
        let a = h.algebra();
        let x = Element::from_terms([
            (
                BasisId(1),
                Cyclotomic::root_of_unity(3) - Cyclotomic::fraction(1, 2),
            ),
            (BasisId(4), Cyclotomic::integer(-3)),
        ]);
        assert_eq!(parse_element(&a.show(&x), a.basis()).unwrap(), x);
    }

    #[test]
    fn integer_labels_with_signs() {
        let h = catalog::functions_on_integers::<Cyclotomic>();
        let x = parse_element("d_-3 - 2*d_4", h.algebra().basis()).unwrap();
        assert_eq!(x.coeff(BasisId(-3)), Cyclotomic::one());
        assert_eq!(x.coeff(BasisId(4)), Cyclotomic::integer(-2));
    }

    #[test]
    fn reports_round_trip() {
        let r = finite("h4").check_axioms();
        assert_eq!(parse_report(&write_report(&r)).unwrap(), r);
        assert!(parse_report("{").is_err());
    }
}
