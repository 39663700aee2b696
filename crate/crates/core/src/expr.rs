//! Textual expressions for functions, multivector fields, forms and chains,
//! and a small evaluator applying named operations to them.
//!
//! The grammar is documented in `docs/grammar.md`.

use crate::cartan::{contract, de_rham, divergence, lie_derivative, schouten, wedge, DiffForm, MultiVector, VolumeForm};
use crate::error::{Error, Result};
use crate::hochschild::{chain_boundary, connes_b, hkr_chains, HochChain};
use crate::ring::{q, LaurentPoly, Linear, Rational};
use num_bigint::BigInt;
use std::fmt;

/// A parsed operand.
#[derive(Clone, Debug, PartialEq)]
pub enum Parsed {
    Function(LaurentPoly),
    Vector(MultiVector),
    Form(DiffForm),
    Chain(HochChain),
}

impl fmt::Display for Parsed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parsed::Function(x) => write!(f, "{x}"),
            Parsed::Vector(x) => write!(f, "{x}"),
            Parsed::Form(x) => write!(f, "{x}"),
            Parsed::Chain(x) => write!(f, "{x}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Tensor,
}

fn is_ident_start(c: char) -> bool {
    c.is_alphabetic() || c == '_' || c == '∂'
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c == '(' && chars.get(i + 1) == Some(&'x') && chars.get(i + 2) == Some(&')') {
            out.push((start, Tok::Tensor));
            i += 3;
            continue;
        }
        let simple = match c {
            '+' => Some(Tok::Plus),
            '-' | '−' => Some(Tok::Minus),
            '*' | '·' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' | '∧' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            '[' => Some(Tok::LBracket),
            ']' => Some(Tok::RBracket),
            ',' => Some(Tok::Comma),
            '⊗' => Some(Tok::Tensor),
            _ => None,
        };
        if let Some(t) = simple {
            out.push((start, t));
            i += 1;
        } else if c.is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push((start, Tok::Num(s.parse().expect("digits"))));
        } else if is_ident_start(c) {
            // an identifier is letters followed by an optional run of digits
            while i < chars.len() && (chars[i].is_alphabetic() || chars[i] == '_' || chars[i] == '∂') {
                i += 1;
            }
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            out.push((start, Tok::Ident(chars[start..i].iter().collect())));
        } else {
            return Err(parse_err(start, format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

fn parse_err(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse { pos, msg: msg.into() }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum BasisKind {
    Vector,
    Form,
}

/// One monomial term `c · t^e · (basis)`.
struct Term {
    coef: Rational,
    exp: Vec<i32>,
    basis: Option<(BasisKind, Vec<usize>)>,
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    dim: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<()> {
        let at = self.here();
        match self.next() {
            Some(t) if t == want => Ok(()),
            _ => Err(parse_err(at, format!("expected {what}"))),
        }
    }

    fn int(&mut self) -> Result<i32> {
        let at = self.here();
        let neg = if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            true
        } else {
            false
        };
        match self.next() {
            Some(Tok::Num(n)) => {
                let v: i32 = n.try_into().map_err(|_| parse_err(at, "integer out of range"))?;
                Ok(if neg { -v } else { v })
            }
            _ => Err(parse_err(at, "expected an integer")),
        }
    }

    fn axis(&self, name: &str, digits: &str, at: usize) -> Result<usize> {
        let i: usize = digits
            .parse()
            .map_err(|_| parse_err(at, format!("`{name}` needs an axis number")))?;
        if i == 0 || i > self.dim {
            return Err(parse_err(at, format!("axis {i} out of range for dimension {}", self.dim)));
        }
        Ok(i - 1)
    }

    /// Parses one basis element name, returning its kind and axis.
    fn basis_name(&self, name: &str, at: usize) -> Result<Option<(BasisKind, usize)>> {
        for (prefix, kind) in [("dt", BasisKind::Form), ("d", BasisKind::Vector), ("∂", BasisKind::Vector)] {
            if let Some(rest) = name.strip_prefix(prefix) {
                if !rest.is_empty() && rest.chars().all(|c| c.is_ascii_digit()) {
                    return Ok(Some((kind, self.axis(name, rest, at)?)));
                }
            }
        }
        Ok(None)
    }

    fn term(&mut self) -> Result<Term> {
        let mut t = Term { coef: q(1), exp: vec![0; self.dim], basis: None };
        loop {
            let at = self.here();
            match self.next() {
                Some(Tok::Num(n)) => {
                    let mut c = Rational::from_integer(n);
                    if self.peek() == Some(&Tok::Slash) {
                        self.pos += 1;
                        let d_at = self.here();
                        match self.next() {
                            Some(Tok::Num(d)) if d != BigInt::from(0) => c /= Rational::from_integer(d),
                            _ => return Err(parse_err(d_at, "expected a nonzero denominator")),
                        }
                    }
                    t.coef *= c;
                }
                Some(Tok::Ident(name)) if name == "t" => {
                    self.expect(Tok::Caret, "`^` after `t`")?;
                    self.expect(Tok::LBracket, "`[`")?;
                    let mut e = Vec::new();
                    loop {
                        e.push(self.int()?);
                        if self.peek() == Some(&Tok::Comma) {
                            self.pos += 1;
                        } else {
                            break;
                        }
                    }
                    self.expect(Tok::RBracket, "`]`")?;
                    if e.len() != self.dim {
                        return Err(parse_err(at, format!("exponent has {} entries, dimension is {}", e.len(), self.dim)));
                    }
                    for (x, y) in t.exp.iter_mut().zip(e) {
                        *x += y;
                    }
                }
                Some(Tok::Ident(name)) => {
                    if let Some((kind, i)) = self.basis_name(&name, at)? {
                        if t.basis.is_some() {
                            return Err(parse_err(at, "a term carries at most one basis product"));
                        }
                        let mut idx = vec![i];
                        while self.peek() == Some(&Tok::Caret) {
                            self.pos += 1;
                            let b_at = self.here();
                            let Some(Tok::Ident(n2)) = self.next() else {
                                return Err(parse_err(b_at, "expected a basis element after `^`"));
                            };
                            match self.basis_name(&n2, b_at)? {
                                Some((k2, j)) if k2 == kind => idx.push(j),
                                _ => return Err(parse_err(b_at, "basis elements of one kind expected")),
                            }
                        }
                        t.basis = Some((kind, idx));
                    } else if let Some(rest) = name.strip_prefix('t') {
                        let i = self.axis(&name, rest, at)?;
                        let p = if self.peek() == Some(&Tok::Caret) {
                            self.pos += 1;
                            self.int()?
                        } else {
                            1
                        };
                        t.exp[i] += p;
                    } else {
                        return Err(parse_err(at, format!("unknown name `{name}`")));
                    }
                }
                _ => return Err(parse_err(at, "expected a coefficient, monomial or basis element")),
            }
            if self.peek() == Some(&Tok::Star) {
                self.pos += 1;
            } else {
                return Ok(t);
            }
        }
    }

    /// Signed sum of terms.
    fn sum(&mut self) -> Result<Vec<Term>> {
        let mut out = Vec::new();
        let mut sign = 1;
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            sign = -1;
        }
        loop {
            let mut t = self.term()?;
            if sign < 0 {
                t.coef = -t.coef;
            }
            out.push(t);
            match self.peek() {
                Some(Tok::Plus) => sign = 1,
                Some(Tok::Minus) => sign = -1,
                _ => return Ok(out),
            }
            self.pos += 1;
        }
    }

    fn value(&mut self) -> Result<Parsed> {
        let at = self.here();
        let first = self.sum()?;
        if self.peek() != Some(&Tok::Tensor) {
            return self.assemble(first, at);
        }
        let mut slots = vec![self.function(first, at)?];
        while self.peek() == Some(&Tok::Tensor) {
            self.pos += 1;
            let s_at = self.here();
            let s = self.sum()?;
            slots.push(self.function(s, s_at)?);
        }
        Ok(Parsed::Chain(HochChain::tensor(&slots)?))
    }

    fn function(&self, terms: Vec<Term>, at: usize) -> Result<LaurentPoly> {
        match self.assemble(terms, at)? {
            Parsed::Function(f) => Ok(f),
            _ => Err(parse_err(at, "tensor slots must be functions")),
        }
    }

    fn assemble(&self, terms: Vec<Term>, at: usize) -> Result<Parsed> {
        let kinds: Vec<BasisKind> = terms.iter().filter_map(|t| t.basis.as_ref().map(|b| b.0)).collect();
        let kind = kinds.first().copied();
        if kinds.iter().any(|&k| Some(k) != kind) {
            return Err(parse_err(at, "cannot add multivectors and forms"));
        }
        let mono = |t: &Term| LaurentPoly::monomial(t.coef.clone(), t.exp.clone());
        Ok(match kind {
            None => Parsed::Function(terms.iter().fold(LaurentPoly::zero(self.dim), |acc, t| acc.plus(&mono(t)))),
            Some(BasisKind::Vector) => {
                let mut acc = MultiVector::zero(self.dim);
                for t in &terms {
                    let idx = t.basis.as_ref().map(|b| b.1.clone()).unwrap_or_default();
                    acc = acc.plus(&MultiVector::term(mono(t), &idx)?);
                }
                Parsed::Vector(acc)
            }
            Some(BasisKind::Form) => {
                let mut acc = DiffForm::zero(self.dim);
                for t in &terms {
                    let idx = t.basis.as_ref().map(|b| b.1.clone()).unwrap_or_default();
                    acc = acc.plus(&DiffForm::term(mono(t), &idx)?);
                }
                Parsed::Form(acc)
            }
        })
    }

    /// Parenthesized operand.
    fn arg(&mut self) -> Result<(usize, Parsed)> {
        self.expect(Tok::LParen, "`(` opening an operand")?;
        let at = self.here();
        let v = self.value()?;
        self.expect(Tok::RParen, "`)`")?;
        Ok((at, v))
    }

    fn volume(&mut self) -> Result<VolumeForm> {
        let at = self.here();
        match self.next() {
            Some(Tok::Ident(n)) if n == "ω_std" || n == "omega_std" => Ok(VolumeForm::standard(self.dim)),
            Some(Tok::Ident(n)) if n == "ω" || n == "omega" => {
                self.expect(Tok::LParen, "`(` after `ω`")?;
                let d_at = self.here();
                let terms = self.sum()?;
                self.expect(Tok::RParen, "`)`")?;
                match terms.as_slice() {
                    [t] if t.basis.is_none() && !t.coef.is_zero() => {
                        VolumeForm::new(t.coef.clone(), t.exp.iter().map(|e| e + 1).collect())
                    }
                    _ => Err(parse_err(d_at, "volume density must be a single nonzero monomial")),
                }
            }
            _ => Err(parse_err(at, "expected a volume form (`ω_std` or `ω(c * t^[..])`)")),
        }
    }
}

fn as_vector(p: Parsed, at: usize, dim: usize) -> Result<MultiVector> {
    match p {
        Parsed::Vector(v) => Ok(v),
        Parsed::Function(f) => MultiVector::term(f, &[]).or_else(|_| Ok(MultiVector::zero(dim))),
        _ => Err(parse_err(at, "expected a multivector field")),
    }
}

fn as_form(p: Parsed, at: usize, dim: usize) -> Result<DiffForm> {
    match p {
        Parsed::Form(v) => Ok(v),
        Parsed::Function(f) => DiffForm::term(f, &[]).or_else(|_| Ok(DiffForm::zero(dim))),
        _ => Err(parse_err(at, "expected a differential form")),
    }
}

fn as_chain(p: Parsed, at: usize) -> Result<HochChain> {
    match p {
        Parsed::Chain(c) => Ok(c),
        Parsed::Function(f) => HochChain::tensor(&[f]),
        _ => Err(parse_err(at, "expected a chain `a0 (x) a1 (x) …`")),
    }
}

/// Parses a bare operand in dimension `dim`.
pub fn parse(src: &str, dim: usize) -> Result<Parsed> {
    let mut p = parser(src, dim)?;
    let v = p.value()?;
    finish(&p)?;
    Ok(v)
}

fn parser(src: &str, dim: usize) -> Result<Parser> {
    if dim == 0 {
        return Err(Error::Config("dimension must be at least 1".into()));
    }
    Ok(Parser { toks: lex(src)?, pos: 0, end: src.chars().count(), dim })
}

fn finish(p: &Parser) -> Result<()> {
    if p.pos < p.toks.len() {
        return Err(parse_err(p.here(), "unexpected trailing input"));
    }
    Ok(())
}

const OPS: [&str; 9] = ["div", "schouten", "wedge", "iota", "lie", "d", "b", "B", "hkr"];

/// Evaluates `op operand…` (or a bare operand) and returns the canonical form.
///
/// Operations: `div VOL (X)`, `schouten (X) (Y)`, `wedge (X) (Y)`,
/// `iota (X) (α)`, `lie (X) (α)`, `d (α)`, `b (c)`, `B (c)`, `hkr (c)`.
pub fn eval(src: &str, dim: usize) -> Result<String> {
    let mut p = parser(src, dim)?;
    let op = match p.peek() {
        Some(Tok::Ident(n)) if OPS.contains(&n.as_str()) => {
            let n = n.clone();
            p.pos += 1;
            Some(n)
        }
        _ => None,
    };
    let out = match op.as_deref() {
        None if p.peek() == Some(&Tok::LParen) => p.arg()?.1,
        None => p.value()?,
        Some("div") => {
            let vol = p.volume()?;
            let (at, x) = p.arg()?;
            Parsed::Vector(divergence(&vol, &as_vector(x, at, dim)?)?)
        }
        Some("schouten") => {
            let (a1, x) = p.arg()?;
            let (a2, y) = p.arg()?;
            Parsed::Vector(schouten(&as_vector(x, a1, dim)?, &as_vector(y, a2, dim)?)?)
        }
        Some("wedge") => {
            let (a1, x) = p.arg()?;
            let (a2, y) = p.arg()?;
            match (x, y) {
                (Parsed::Function(f), Parsed::Function(g)) => Parsed::Function(f.checked_mul(&g)?),
                (x @ Parsed::Form(_), y) | (x, y @ Parsed::Form(_)) => {
                    Parsed::Form(wedge(&as_form(x, a1, dim)?, &as_form(y, a2, dim)?)?)
                }
                (x, y) => Parsed::Vector(wedge(&as_vector(x, a1, dim)?, &as_vector(y, a2, dim)?)?),
            }
        }
        Some("iota") | Some("lie") => {
            let (a1, x) = p.arg()?;
            let (a2, y) = p.arg()?;
            let (g, a) = (as_vector(x, a1, dim)?, as_form(y, a2, dim)?);
            Parsed::Form(if op.as_deref() == Some("iota") { contract(&g, &a)? } else { lie_derivative(&g, &a)? })
        }
        Some("d") => {
            let (at, x) = p.arg()?;
            Parsed::Form(de_rham(&as_form(x, at, dim)?))
        }
        Some(name @ ("b" | "B" | "hkr")) => {
            let (at, x) = p.arg()?;
            let c = as_chain(x, at)?;
            match name {
                "b" => Parsed::Chain(chain_boundary(&c)),
                "B" => Parsed::Chain(connes_b(&c)),
                _ => Parsed::Form(hkr_chains(&c)),
            }
        }
        Some(other) => return Err(parse_err(0, format!("unknown operation `{other}`"))),
    };
    finish(&p)?;
    Ok(out.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divergence_of_coordinate_field() {
        assert_eq!(eval("div ω_std (∂1)", 2).unwrap(), "-1 * t^[-1,0]");
    }

    #[test]
    fn connes_b_of_a_two_tensor() {
        assert_eq!(eval("B (t1 (x) t2)", 2).unwrap(), "1 (x) t1 (x) t2 - 1 (x) t2 (x) t1");
    }

    #[test]
    fn schouten_of_functions_vanishes() {
        assert_eq!(eval("schouten (t1) (t2^-1)", 2).unwrap(), "0");
    }

    #[test]
    fn round_trip_of_canonical_forms() {
        for src in ["3/2 * t^[1,-2] * d1^d2 - t^[0,1] * d2", "-1 * t^[2,0] * dt1 + 1/3 * t^[0,0] * dt2"] {
            let once = eval(src, 2).unwrap();
            assert_eq!(eval(&once, 2).unwrap(), once);
        }
    }

    #[test]
    fn basis_order_is_signed() {
        assert_eq!(parse("d2^d1", 2).unwrap(), parse("-d1^d2", 2).unwrap());
    }

    #[test]
    fn errors_carry_positions() {
        match eval("div ω_std (∂3)", 2) {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 11),
            other => panic!("{other:?}"),
        }
        assert!(matches!(eval("schouten (t1)", 2), Err(Error::Parse { .. })));
        assert!(matches!(eval("d1 + dt1", 2), Err(Error::Parse { .. })));
    }
}
