//! Text form of tower elements and polynomials.
//!
//! Grammar (whitespace free-form, `*` optional between factors):
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/')? unary)*
//! unary   := ('-' | '+') unary | power
//! power   := primary ('^' '-'? integer)?
//! primary := integer | identifier | '(' expr ')'
//! ```
//!
//! Identifiers are `x` (the polynomial variable), `t` (the transcendental of
//! an `F_p(t)` base) and generator names. Printing is canonical: descending
//! powers, zero terms dropped, unit coefficients omitted.

use super::{Tower, TowerElement};
use crate::arith::{BaseField, Field, Poly, PolyRing, Scalar};
use crate::error::{Error, Result};
use num_bigint::BigInt;

pub(crate) struct Term {
    negative: bool,
    body: String,
    compound: bool,
}

impl Term {
    pub(crate) fn new(base: &BaseField, c: &Scalar, mono: String) -> Term {
        let (negative, mag, parens) = base.format_parts(c);
        if mono.is_empty() {
            return Term {
                negative,
                body: mag,
                compound: parens,
            };
        }
        let body = if mag == "1" {
            mono
        } else if parens {
            format!("({mag})*{mono}")
        } else {
            format!("{mag}*{mono}")
        };
        Term {
            negative,
            body,
            compound: false,
        }
    }
}

pub(crate) fn join_terms(terms: &[Term]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut s = String::new();
    for (i, t) in terms.iter().enumerate() {
        match (i, t.negative) {
            (0, true) => s.push('-'),
            (0, false) => {}
            (_, true) => s.push_str(" - "),
            (_, false) => s.push_str(" + "),
        }
        s.push_str(&t.body);
    }
    s
}

fn x_power(k: usize) -> String {
    match k {
        0 => String::new(),
        1 => "x".into(),
        _ => format!("x^{k}"),
    }
}

impl Tower {
    fn element_terms(&self, x: &TowerElement) -> Vec<Term> {
        let mut terms = Vec::new();
        for (idx, c) in x.coeffs().iter().enumerate().rev() {
            if self.base().is_zero(c) {
                continue;
            }
            let exps = self.monomial_exponents(idx);
            let mono: Vec<String> = self
                .generators()
                .iter()
                .zip(&exps)
                .filter(|(_, &e)| e > 0)
                .map(|(g, &e)| {
                    if e == 1 {
                        g.name().to_string()
                    } else {
                        format!("{}^{e}", g.name())
                    }
                })
                .collect();
            terms.push(Term::new(self.base(), c, mono.join("*")));
        }
        terms
    }

    /// Canonical text of an element, e.g. `a1*a2 - 3/4`.
    pub fn format_element(&self, x: &TowerElement) -> String {
        join_terms(&self.element_terms(x))
    }

    /// Canonical text of a polynomial in `x`, e.g. `x^2 - 2*a1*x - 1`.
    pub fn format_poly(&self, f: &Poly<TowerElement>) -> String {
        let mut terms = Vec::new();
        for (k, c) in f.coeffs().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mut inner = self.element_terms(c);
            if k == 0 {
                terms.append(&mut inner);
                continue;
            }
            if inner.len() == 1 && !inner[0].compound {
                let t = inner.pop().expect("one term");
                let body = if t.body == "1" {
                    x_power(k)
                } else {
                    format!("{}*{}", t.body, x_power(k))
                };
                terms.push(Term {
                    negative: t.negative,
                    body,
                    compound: false,
                });
            } else {
                terms.push(Term {
                    negative: false,
                    body: format!("({})*{}", join_terms(&inner), x_power(k)),
                    compound: false,
                });
            }
        }
        join_terms(&terms)
    }

    /// Parses a polynomial in `x` whose coefficients may involve `t` and the
    /// generator names.
    pub fn parse_poly(&self, s: &str) -> Result<Poly<TowerElement>> {
        Parser::new(self, s, true)?.parse_all()
    }

    /// Parses an element (no `x` allowed).
    pub fn parse_element(&self, s: &str) -> Result<TowerElement> {
        let p = Parser::new(self, s, false)?.parse_all()?;
        debug_assert!(p.degree().unwrap_or(0) == 0);
        Ok(p.coeffs().first().cloned().unwrap_or_else(|| self.from_int(0)))
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            out.push(Tok::Num(text.parse().expect("digits")));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else if c == '\u{2212}' {
            out.push(Tok::Op('-'));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character {c:?} in {s:?}")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tower: &'a Tower,
    toks: Vec<Tok>,
    pos: usize,
    allow_x: bool,
    src: &'a str,
}

type P = Poly<TowerElement>;

impl<'a> Parser<'a> {
    fn new(tower: &'a Tower, src: &'a str, allow_x: bool) -> Result<Self> {
        Ok(Parser {
            tower,
            toks: tokenize(src)?,
            pos: 0,
            allow_x,
            src,
        })
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} in {:?}", self.src))
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn parse_all(mut self) -> Result<P> {
        if self.toks.is_empty() {
            return Err(self.err("empty expression"));
        }
        let v = self.expr()?;
        if self.pos != self.toks.len() {
            return Err(self.err("trailing input"));
        }
        Ok(v)
    }

    fn expr(&mut self) -> Result<P> {
        let top = self.tower.top();
        let ring = PolyRing::new(&top);
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                let t = self.term()?;
                acc = ring.add(&acc, &t);
            } else if self.eat('-') {
                let t = self.term()?;
                acc = ring.sub(&acc, &t);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<P> {
        let top = self.tower.top();
        let ring = PolyRing::new(&top);
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                let f = self.unary()?;
                acc = ring.mul(&acc, &f);
            } else if self.eat('/') {
                let f = self.unary()?;
                if f.degree() != Some(0) {
                    return Err(self.err("division by zero or by a non-constant"));
                }
                let inv = top.inv(&f.coeffs()[0]).ok_or(Error::DivisionByZero)?;
                acc = ring.scale(&inv, &acc);
            } else if matches!(self.peek(), Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::Op('('))) {
                let f = self.unary()?;
                acc = ring.mul(&acc, &f);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<P> {
        if self.eat('-') {
            let top = self.tower.top();
            let v = self.unary()?;
            return Ok(PolyRing::new(&top).neg(&v));
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<P> {
        let top = self.tower.top();
        let ring = PolyRing::new(&top);
        let base = self.primary()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let negative = self.eat('-');
        let Some(Tok::Num(n)) = self.peek().cloned() else {
            return Err(self.err("exponent must be an integer"));
        };
        self.pos += 1;
        let e: u32 = n
            .try_into()
            .map_err(|_| self.err("exponent too large"))?;
        let mut b = base;
        if negative {
            if b.degree() != Some(0) {
                return Err(self.err("negative power of a non-constant"));
            }
            let inv = top.inv(&b.coeffs()[0]).ok_or(Error::DivisionByZero)?;
            b = ring.constant(inv);
        }
        Ok(ring.pow(&b, e))
    }

    fn primary(&mut self) -> Result<P> {
        let top = self.tower.top();
        let ring = PolyRing::new(&top);
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                let s = self.tower.base().rational(n, BigInt::from(1))?;
                Ok(ring.constant(self.tower.scalar(s)))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                if name == "x" {
                    if !self.allow_x {
                        return Err(self.err("the variable x is not allowed in an element"));
                    }
                    return Ok(ring.x());
                }
                if name == "t" {
                    let t = self
                        .tower
                        .base()
                        .t()
                        .ok_or_else(|| self.err("t is only defined over F_p(t)"))?;
                    return Ok(ring.constant(self.tower.scalar(t)));
                }
                match self.tower.gen_index(&name) {
                    Some(i) => Ok(ring.constant(self.tower.gen(i))),
                    None => Err(self.err(&format!("unknown name {name:?}"))),
                }
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err("missing ')'"));
                }
                Ok(v)
            }
            _ => Err(self.err("expected a number, a name or '('")),
        }
    }
}
