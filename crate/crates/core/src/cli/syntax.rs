//! Expression grammar, lowest precedence first:
//!
//! ```text
//! sum     := tensor ("(+)" tensor)*
//! tensor  := compose ("(x)" compose)*
//! compose := power ("o" endo)*
//! power   := atom ("^" n)*
//! atom    := "P(" N ";" letters ["|" letters] ")" | "(" sum ")"
//! endo    := name | "endo:" path | "(" endo ("(x)" endo)* ")"
//! ```

use std::fmt;

use thiserror::Error;

use crate::repcalc::RepClass;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.start, self.end)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("syntax error at {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

/// An expression node; equality ignores spans.
#[derive(Clone, Debug)]
pub struct Expr {
    pub kind: ExprKind,
    pub span: Span,
}

impl PartialEq for Expr {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

impl Eq for Expr {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExprKind {
    Rep(RepClass),
    Tensor(Box<Expr>, Box<Expr>),
    Sum(Box<Expr>, Box<Expr>),
    Power(Box<Expr>, usize),
    Compose(Box<Expr>, EndoExpr),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EndoExpr {
    Named(String),
    File(String),
    Tensor(Box<EndoExpr>, Box<EndoExpr>),
}

impl Expr {
    fn new(kind: ExprKind, start: usize, end: usize) -> Self {
        Expr { kind, span: Span { start, end } }
    }

    fn precedence(&self) -> u8 {
        match self.kind {
            ExprKind::Sum(..) => 0,
            ExprKind::Tensor(..) => 1,
            ExprKind::Compose(..) => 2,
            ExprKind::Power(..) => 3,
            ExprKind::Rep(_) => 4,
        }
    }

    /// Literals in the expression, left to right.
    pub fn literals(&self) -> Vec<&RepClass> {
        let mut out = Vec::new();
        self.visit(&mut |e| {
            if let ExprKind::Rep(r) = &e.kind {
                out.push(r);
            }
        });
        out
    }

    fn visit<'a>(&'a self, f: &mut impl FnMut(&'a Expr)) {
        f(self);
        match &self.kind {
            ExprKind::Rep(_) => {}
            ExprKind::Tensor(a, b) | ExprKind::Sum(a, b) => {
                a.visit(f);
                b.visit(f);
            }
            ExprKind::Power(a, _) | ExprKind::Compose(a, _) => a.visit(f),
        }
    }
}

fn write_child(f: &mut fmt::Formatter<'_>, e: &Expr, min: u8) -> fmt::Result {
    if e.precedence() < min {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ExprKind::Rep(r) => write!(f, "{r}"),
            ExprKind::Sum(a, b) => {
                write_child(f, a, 0)?;
                write!(f, " (+) ")?;
                write_child(f, b, 1)
            }
            ExprKind::Tensor(a, b) => {
                write_child(f, a, 1)?;
                write!(f, " (x) ")?;
                write_child(f, b, 2)
            }
            ExprKind::Compose(a, e) => {
                write_child(f, a, 2)?;
                write!(f, " o {e}")
            }
            ExprKind::Power(a, n) => {
                write_child(f, a, 3)?;
                write!(f, "^{n}")
            }
        }
    }
}

impl fmt::Display for EndoExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EndoExpr::Named(n) => write!(f, "{n}"),
            EndoExpr::File(p) => write!(f, "endo:{p}"),
            EndoExpr::Tensor(a, b) => {
                write!(f, "(")?;
                write_endo_tensor(f, a)?;
                write!(f, " (x) {b})")
            }
        }
    }
}

// left operands of an endo tensor print without their own parentheses
fn write_endo_tensor(f: &mut fmt::Formatter<'_>, e: &EndoExpr) -> fmt::Result {
    match e {
        EndoExpr::Tensor(a, b) => {
            write_endo_tensor(f, a)?;
            write!(f, " (x) {b}")
        }
        _ => write!(f, "{e}"),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Num(u64),
    Path(String),
    LParen,
    RParen,
    Semi,
    Bar,
    Caret,
    Otimes,
    Oplus,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Num(n) => write!(f, "`{n}`"),
            Tok::Path(p) => write!(f, "`endo:{p}`"),
            Tok::LParen => write!(f, "`(`"),
            Tok::RParen => write!(f, "`)`"),
            Tok::Semi => write!(f, "`;`"),
            Tok::Bar => write!(f, "`|`"),
            Tok::Caret => write!(f, "`^`"),
            Tok::Otimes => write!(f, "`(x)`"),
            Tok::Oplus => write!(f, "`(+)`"),
        }
    }
}

fn lex(src: &str) -> Result<Vec<(Tok, usize, usize)>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let tok = if src[i..].starts_with("(x)") {
            i += 3;
            Tok::Otimes
        } else if src[i..].starts_with("(+)") {
            i += 3;
            Tok::Oplus
        } else if src[i..].starts_with("endo:") {
            i += 5;
            while i < bytes.len() && !bytes[i].is_ascii_whitespace() && bytes[i] != b')' {
                i += 1;
            }
            if i == start + 5 {
                return Err(ParseError { pos: start, msg: "empty endomorphism path".into() });
            }
            Tok::Path(src[start + 5..i].to_string())
        } else if c.is_ascii_digit() {
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n = src[start..i]
                .parse()
                .map_err(|_| ParseError { pos: start, msg: "number too large".into() })?;
            Tok::Num(n)
        } else if c.is_ascii_alphabetic() || c == b'_' {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            Tok::Ident(src[start..i].to_string())
        } else {
            i += 1;
            match c {
                b'(' => Tok::LParen,
                b')' => Tok::RParen,
                b';' => Tok::Semi,
                b'|' => Tok::Bar,
                b'^' => Tok::Caret,
                _ => {
                    let ch = src[start..].chars().next().unwrap_or('?');
                    return Err(ParseError { pos: start, msg: format!("unexpected character {ch:?}") });
                }
            }
        };
        out.push((tok, start, i));
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize, usize)>,
    pos: usize,
    len: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.len, |t| t.1)
    }

    fn last_end(&self) -> usize {
        self.pos.checked_sub(1).map_or(0, |p| self.toks[p].2)
    }

    fn error<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { pos: self.here(), msg: msg.into() })
    }

    fn expect(&mut self, t: Tok) -> Result<(), ParseError> {
        match self.peek() {
            Some(x) if *x == t => {
                self.pos += 1;
                Ok(())
            }
            Some(x) => {
                let x = x.to_string();
                self.error(format!("expected {t}, found {x}"))
            }
            None => self.error(format!("expected {t}, found end of input")),
        }
    }

    fn sum(&mut self) -> Result<Expr, ParseError> {
        let start = self.here();
        let mut e = self.tensor()?;
        while self.peek() == Some(&Tok::Oplus) {
            self.pos += 1;
            let r = self.tensor()?;
            e = Expr::new(ExprKind::Sum(Box::new(e), Box::new(r)), start, self.last_end());
        }
        Ok(e)
    }

    fn tensor(&mut self) -> Result<Expr, ParseError> {
        let start = self.here();
        let mut e = self.compose()?;
        while self.peek() == Some(&Tok::Otimes) {
            self.pos += 1;
            let r = self.compose()?;
            e = Expr::new(ExprKind::Tensor(Box::new(e), Box::new(r)), start, self.last_end());
        }
        Ok(e)
    }

    fn compose(&mut self) -> Result<Expr, ParseError> {
        let start = self.here();
        let mut e = self.power()?;
        while matches!(self.peek(), Some(Tok::Ident(s)) if s == "o") {
            self.pos += 1;
            let endo = self.endo()?;
            e = Expr::new(ExprKind::Compose(Box::new(e), endo), start, self.last_end());
        }
        Ok(e)
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let start = self.here();
        let mut e = self.atom()?;
        while self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            match self.peek() {
                Some(&Tok::Num(n)) if n >= 1 => {
                    self.pos += 1;
                    let n = usize::try_from(n).or_else(|_| self.error("exponent too large"))?;
                    e = Expr::new(ExprKind::Power(Box::new(e), n), start, self.last_end());
                }
                Some(&Tok::Num(_)) => return self.error("exponent must be at least 1"),
                _ => return self.error("expected an exponent after `^`"),
            }
        }
        Ok(e)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let start = self.here();
        match self.peek() {
            Some(Tok::LParen) => {
                self.pos += 1;
                let mut e = self.sum()?;
                self.expect(Tok::RParen)?;
                e.span = Span { start, end: self.last_end() };
                Ok(e)
            }
            Some(Tok::Ident(s)) if s == "P" => {
                self.pos += 1;
                self.literal(start)
            }
            Some(t) => {
                let t = t.to_string();
                self.error(format!("expected a representation, found {t}"))
            }
            None => self.error("expected a representation, found end of input"),
        }
    }

    fn letters(&mut self) -> Vec<(u64, usize)> {
        let mut out = Vec::new();
        while let Some(&Tok::Num(n)) = self.peek() {
            out.push((n, self.here()));
            self.pos += 1;
        }
        out
    }

    fn literal(&mut self, start: usize) -> Result<Expr, ParseError> {
        self.expect(Tok::LParen)?;
        let n = match self.peek() {
            Some(&Tok::Num(n)) => {
                self.pos += 1;
                n
            }
            _ => return self.error("expected the alphabet size"),
        };
        let n = u32::try_from(n).or_else(|_| self.error("alphabet too large"))?;
        self.expect(Tok::Semi)?;
        let first = self.letters();
        let chain = if self.peek() == Some(&Tok::Bar) {
            self.pos += 1;
            Some(self.letters())
        } else {
            None
        };
        self.expect(Tok::RParen)?;
        let end = self.last_end();
        let conv = |ls: &[(u64, usize)]| -> Result<Vec<u32>, ParseError> {
            ls.iter()
                .map(|&(l, pos)| match u32::try_from(l) {
                    Ok(l) if l >= 1 && l <= n => Ok(l),
                    _ => Err(ParseError { pos, msg: format!("letter {l} outside 1..={n}") }),
                })
                .collect()
        };
        let bad = |e: crate::Error| ParseError { pos: start, msg: e.to_string() };
        let class = match chain {
            None => RepClass::cycle(n, &conv(&first)?).map_err(bad)?,
            Some(cycle) => RepClass::chain(n, &conv(&first)?, &conv(&cycle)?).map_err(bad)?,
        };
        Ok(Expr::new(ExprKind::Rep(class), start, end))
    }

    fn endo(&mut self) -> Result<EndoExpr, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Ident(s)) if s != "o" && s != "P" => {
                self.pos += 1;
                Ok(EndoExpr::Named(s))
            }
            Some(Tok::Path(p)) => {
                self.pos += 1;
                Ok(EndoExpr::File(p))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let mut e = self.endo()?;
                while self.peek() == Some(&Tok::Otimes) {
                    self.pos += 1;
                    e = EndoExpr::Tensor(Box::new(e), Box::new(self.endo()?));
                }
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            _ => self.error("expected an endomorphism name or `endo:<path>`"),
        }
    }
}

pub fn parse(src: &str) -> Result<Expr, ParseError> {
    let toks = lex(src)?;
    let mut p = Parser { toks, pos: 0, len: src.len() };
    let e = p.sum()?;
    if let Some(t) = p.peek() {
        let t = t.to_string();
        return p.error(format!("unexpected {t}"));
    }
    Ok(e)
}
