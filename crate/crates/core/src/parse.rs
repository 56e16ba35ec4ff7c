//! Text format for rings, ideals, and polynomial generators.
//!
//! ```text
//! # comment
//! ring a b c
//! field 32003
//! ideal I = a^4, a^3*b, a*b^3, b^4, a^2*b^2*c
//! ideal F = 2*a^2 + a*b - c^2
//! ```
//!
//! Positions in errors are 1-based line and column numbers counted in characters.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::gb::{FieldSpec, Polynomial};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::ring::Ring;

/// A generator as written: signed integer coefficients on monomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedGenerator {
    pub line: usize,
    pub col: usize,
    pub terms: Vec<(i64, Monomial)>,
}

impl ParsedGenerator {
    fn as_monomial(&self) -> Option<&Monomial> {
        match self.terms.as_slice() {
            [(1, m)] => Some(m),
            _ => None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct IdealFile {
    ring: Ring,
    field: Option<FieldSpec>,
    ideals: BTreeMap<String, Vec<ParsedGenerator>>,
}

impl IdealFile {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn field(&self) -> Option<FieldSpec> {
        self.field
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.ideals.keys().map(String::as_str)
    }

    pub fn generators(&self, name: &str) -> Result<&[ParsedGenerator]> {
        self.ideals
            .get(name)
            .map(Vec::as_slice)
            .ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    /// The named ideal, which must be generated by monomials.
    pub fn monomial_ideal(&self, name: &str) -> Result<MonomialIdeal> {
        let gens = self.generators(name)?;
        let mut out = Vec::with_capacity(gens.len());
        for g in gens {
            match g.as_monomial() {
                Some(m) => out.push(m.clone()),
                None => {
                    return Err(Error::Parse {
                        line: g.line,
                        col: g.col,
                        expected: "monomial generator".into(),
                        found: "polynomial".into(),
                    })
                }
            }
        }
        MonomialIdeal::new(self.ring.clone(), out)
    }

    /// The named generators as polynomials over the declared field, or over `field` if given.
    pub fn polynomials(&self, name: &str, field: Option<FieldSpec>) -> Result<Vec<Polynomial>> {
        let field = field.or(self.field).ok_or_else(|| {
            Error::InvalidParameter("polynomial input needs a `field <p>` line".into())
        })?;
        self.generators(name)?
            .iter()
            .map(|g| {
                let terms = g.terms.iter().map(|(c, m)| (m.clone(), *c)).collect();
                Polynomial::new(self.ring.clone(), field, terms)
            })
            .collect()
    }
}

struct Cursor<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    ring: Option<&'a Ring>,
}

fn describe(c: Option<char>) -> String {
    match c {
        None => "end of line".into(),
        Some(c) => format!("`{c}`"),
    }
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

impl<'a> Cursor<'a> {
    fn new(text: &str, line: usize, ring: Option<&'a Ring>) -> Self {
        Cursor {
            chars: text.chars().collect(),
            pos: 0,
            line,
            ring,
        }
    }

    fn col(&self) -> usize {
        self.pos + 1
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn error(&self, expected: &str) -> Error {
        Error::Parse {
            line: self.line,
            col: self.col(),
            expected: expected.into(),
            found: describe(self.peek()),
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.peek().is_none()
    }

    fn expect_end(&mut self) -> Result<()> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.error("end of line"))
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("`{c}`")))
        }
    }

    fn ident(&mut self, what: &str) -> Result<(usize, String)> {
        self.skip_ws();
        let start = self.pos;
        if !self.peek().is_some_and(is_ident_start) {
            return Err(self.error(what));
        }
        while self.peek().is_some_and(is_ident_char) {
            self.pos += 1;
        }
        Ok((start + 1, self.chars[start..self.pos].iter().collect()))
    }

    fn integer(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("integer"));
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        text.parse().map_err(|_| Error::Parse {
            line: self.line,
            col: start + 1,
            expected: "integer below 2^64".into(),
            found: text,
        })
    }

    fn exponent(&mut self) -> Result<u32> {
        self.skip_ws();
        let col = self.col();
        let v = self.integer()?;
        u32::try_from(v).map_err(|_| Error::Parse {
            line: self.line,
            col,
            expected: "exponent below 2^32".into(),
            found: v.to_string(),
        })
    }

    fn factor(&mut self, exps: &mut [u32]) -> Result<()> {
        let ring = self.ring.expect("ring declared");
        let (col, name) = self.ident("variable")?;
        let i = ring.index_of(&name).ok_or_else(|| Error::Parse {
            line: self.line,
            col,
            expected: format!("variable of {ring}"),
            found: format!("`{name}`"),
        })?;
        let e = if self.eat('^') { self.exponent()? } else { 1 };
        exps[i] = exps[i].checked_add(e).ok_or(Error::Overflow)?;
        Ok(())
    }

    fn term(&mut self) -> Result<(i64, Monomial)> {
        let nvars = self.ring.expect("ring declared").nvars();
        let mut exps = vec![0u32; nvars];
        self.skip_ws();
        let mut coeff = 1i64;
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let col = self.col();
            let v = self.integer()?;
            coeff = i64::try_from(v).map_err(|_| Error::Parse {
                line: self.line,
                col,
                expected: "coefficient below 2^63".into(),
                found: v.to_string(),
            })?;
            if !self.eat('*') {
                return Ok((coeff, Monomial::new(exps)));
            }
        }
        self.factor(&mut exps)?;
        while self.eat('*') {
            self.skip_ws();
            if self.peek().is_some_and(|c| c.is_ascii_digit()) {
                let v = self.integer()?;
                if v != 1 {
                    return Err(Error::Parse {
                        line: self.line,
                        col: self.col() - v.to_string().len(),
                        expected: "variable".into(),
                        found: format!("`{v}`"),
                    });
                }
            } else {
                self.factor(&mut exps)?;
            }
        }
        Ok((coeff, Monomial::new(exps)))
    }

    fn generator(&mut self) -> Result<ParsedGenerator> {
        self.skip_ws();
        let col = self.col();
        let mut terms = Vec::new();
        let mut sign = if self.eat('-') { -1 } else { 1 };
        loop {
            let (c, m) = self.term()?;
            terms.push((sign * c, m));
            if self.eat('+') {
                sign = 1;
            } else if self.eat('-') {
                sign = -1;
            } else {
                break;
            }
        }
        Ok(ParsedGenerator {
            line: self.line,
            col,
            terms,
        })
    }

    fn generator_list(&mut self) -> Result<Vec<ParsedGenerator>> {
        let mut out = vec![self.generator()?];
        while self.eat(',') {
            out.push(self.generator()?);
        }
        if !self.at_end() {
            return Err(self.error("`,`, `+`, `-`, `*` or end of line"));
        }
        Ok(out)
    }
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

/// Parse a whole ideal file.
pub fn parse_ideal_file(text: &str) -> Result<IdealFile> {
    let mut ring: Option<Ring> = None;
    let mut field = None;
    let mut ideals = BTreeMap::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let body = strip_comment(raw);
        let mut cur = Cursor::new(body, line, ring.as_ref());
        if cur.at_end() {
            continue;
        }
        let (col, keyword) = cur.ident("`ring`, `field` or `ideal`")?;
        match keyword.as_str() {
            "ring" => {
                if ring.is_some() {
                    return Err(Error::Parse {
                        line,
                        col,
                        expected: "a single ring declaration".into(),
                        found: "second `ring` line".into(),
                    });
                }
                let mut names: Vec<String> = vec![cur.ident("variable name")?.1];
                while !cur.at_end() {
                    let (vcol, name) = cur.ident("variable name")?;
                    if names.contains(&name) {
                        return Err(Error::Parse {
                            line,
                            col: vcol,
                            expected: "distinct variable name".into(),
                            found: format!("`{name}`"),
                        });
                    }
                    names.push(name);
                }
                ring = Some(Ring::new(&names)?);
            }
            "field" => {
                cur.skip_ws();
                let pcol = cur.col();
                let p = cur.integer()?;
                cur.expect_end()?;
                field = Some(FieldSpec::new(p).map_err(|_| Error::Parse {
                    line,
                    col: pcol,
                    expected: "prime characteristic below 2^31".into(),
                    found: p.to_string(),
                })?);
            }
            "ideal" => {
                if ring.is_none() {
                    return Err(Error::Parse {
                        line,
                        col,
                        expected: "`ring` declaration before ideals".into(),
                        found: "`ideal`".into(),
                    });
                }
                let (ncol, name) = cur.ident("ideal name")?;
                cur.expect('=')?;
                let gens = cur.generator_list()?;
                if ideals.insert(name.clone(), gens).is_some() {
                    return Err(Error::Parse {
                        line,
                        col: ncol,
                        expected: "unused ideal name".into(),
                        found: format!("`{name}`"),
                    });
                }
            }
            other => {
                return Err(Error::Parse {
                    line,
                    col,
                    expected: "`ring`, `field` or `ideal`".into(),
                    found: format!("`{other}`"),
                })
            }
        }
    }
    let ring = ring.ok_or_else(|| Error::Parse {
        line: text.lines().count().max(1),
        col: 1,
        expected: "`ring` declaration".into(),
        found: "end of input".into(),
    })?;
    Ok(IdealFile {
        ring,
        field,
        ideals,
    })
}

fn parse_generators(ring: &Ring, text: &str) -> Result<Vec<ParsedGenerator>> {
    Cursor::new(text, 1, Some(ring)).generator_list()
}

/// Parse a comma-separated list of monomials, e.g. `x^2, x*y`.
pub fn parse_monomial_ideal(ring: &Ring, text: &str) -> Result<MonomialIdeal> {
    let file = IdealFile {
        ring: ring.clone(),
        field: None,
        ideals: BTreeMap::from([(String::new(), parse_generators(ring, text)?)]),
    };
    file.monomial_ideal("")
}

/// Parse a comma-separated list of polynomials over `field`.
pub fn parse_polynomials(ring: &Ring, field: FieldSpec, text: &str) -> Result<Vec<Polynomial>> {
    let file = IdealFile {
        ring: ring.clone(),
        field: Some(field),
        ideals: BTreeMap::from([(String::new(), parse_generators(ring, text)?)]),
    };
    file.polynomials("", None)
}

/// Parse a single polynomial over `field`.
pub fn parse_polynomial(ring: &Ring, field: FieldSpec, text: &str) -> Result<Polynomial> {
    let mut cur = Cursor::new(text, 1, Some(ring));
    let g = cur.generator()?;
    cur.expect_end()?;
    Polynomial::new(
        ring.clone(),
        field,
        g.terms.into_iter().map(|(c, m)| (m, c)).collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mixed_support_ideal() {
        let f =
            parse_ideal_file("ring a b c\nideal I = a^4, a^3*b, a*b^3, b^4, a^2*b^2*c").unwrap();
        let i = f.monomial_ideal("I").unwrap();
        assert_eq!(i.to_string(), "(a^4, a^3*b, a*b^3, b^4, a^2*b^2*c)");
    }

    #[test]
    fn single_variable() {
        let f = parse_ideal_file("ring x\nideal I = x^2").unwrap();
        assert_eq!(f.monomial_ideal("I").unwrap().to_string(), "(x^2)");
    }

    #[test]
    fn malformed_exponent_position() {
        let err = parse_ideal_file("ring x y\nideal I = x^^2").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 2,
                col: 13,
                expected: "integer".into(),
                found: "`^`".into()
            }
        );
    }

    #[test]
    fn comments_blank_lines_and_polynomials() {
        let text = "# header\n\nring x y z  # vars\nfield 7\nideal F = 3*x^2 - y*z + 1*x*y, x*y\n";
        let f = parse_ideal_file(text).unwrap();
        let polys = f.polynomials("F", None).unwrap();
        assert_eq!(polys[0].to_string(), "3*x^2 + x*y + 6*y*z");
        assert!(f.monomial_ideal("F").is_err());
        assert_eq!(f.names().collect::<Vec<_>>(), ["F"]);
    }

    #[test]
    fn errors() {
        assert!(matches!(
            parse_ideal_file("ring x\nideal I = w"),
            Err(Error::Parse {
                line: 2,
                col: 11,
                ..
            })
        ));
        assert!(matches!(
            parse_ideal_file("ideal I = x"),
            Err(Error::Parse {
                line: 1,
                col: 1,
                ..
            })
        ));
        assert!(matches!(
            parse_ideal_file("ring x x"),
            Err(Error::Parse { col: 8, .. })
        ));
        assert!(matches!(
            parse_ideal_file("ring x\nfield 4"),
            Err(Error::Parse {
                line: 2,
                col: 7,
                ..
            })
        ));
        assert!(matches!(
            parse_ideal_file("ring x\nideal I = x\nideal I = x"),
            Err(Error::Parse {
                line: 3,
                col: 7,
                ..
            })
        ));
        assert!(matches!(
            parse_ideal_file("ring x\nideal I = x y"),
            Err(Error::Parse { col: 13, .. })
        ));
        assert!(matches!(parse_ideal_file(""), Err(Error::Parse { .. })));
        let f = parse_ideal_file("ring x\nideal I = x").unwrap();
        assert_eq!(f.monomial_ideal("J"), Err(Error::UnknownName("J".into())));
    }

    #[test]
    fn helpers() {
        let r = Ring::new(&["x", "y"]).unwrap();
        let i = parse_monomial_ideal(&r, "x*y, x^2, x^3").unwrap();
        assert_eq!(i.to_string(), "(x^2, x*y)");
        let p = parse_polynomial(&r, FieldSpec::new(5).unwrap(), "-x^2 + 7*y^2").unwrap();
        assert_eq!(p.to_string(), "4*x^2 + 2*y^2");
        assert_eq!(parse_monomial_ideal(&r, "1").unwrap().to_string(), "(1)");
    }
}
