//! Recursive-descent parser for the textual grammar
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ['^' integer]
//! atom   := integer ['/' integer] | 'x' | 'x'N | 'tr' '(' expr ')' | '(' expr ')'
//! ```
//!
//! `x` is a synonym for `x1`.

use num_bigint::BigInt;

use super::poly::TracePoly;
use crate::error::{Error, Result};
use crate::rational::Q;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Var(u32),
    Tr,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<(usize, Tok)>> {
    let b = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let err = |offset, message: &str| Error::Parse { offset, message: message.to_string() };
    while i < b.len() {
        let c = b[i];
        let start = i;
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => out.push((start, Tok::Plus)),
            b'-' => out.push((start, Tok::Minus)),
            b'*' => out.push((start, Tok::Star)),
            b'/' => out.push((start, Tok::Slash)),
            b'^' => out.push((start, Tok::Caret)),
            b'(' => out.push((start, Tok::LParen)),
            b')' => out.push((start, Tok::RParen)),
            b'0'..=b'9' => {
                while i < b.len() && b[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Int(s[start..i].parse().unwrap())));
                continue;
            }
            b'a'..=b'z' => {
                while i < b.len() && b[i].is_ascii_alphabetic() {
                    i += 1;
                }
                let name = &s[start..i];
                match name {
                    "tr" => out.push((start, Tok::Tr)),
                    "x" => {
                        let ds = i;
                        while i < b.len() && b[i].is_ascii_digit() {
                            i += 1;
                        }
                        let v = if ds == i {
                            1
                        } else {
                            s[ds..i].parse::<u32>().map_err(|_| err(ds, "variable index too large"))?
                        };
                        if v == 0 {
                            return Err(err(ds, "variable indices start at 1"));
                        }
                        out.push((start, Tok::Var(v)));
                    }
                    _ => return Err(err(start, &format!("unknown identifier `{name}`"))),
                }
                continue;
            }
            _ => return Err(err(start, &format!("unexpected character `{}`", c as char))),
        }
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(o, _)| *o).unwrap_or(self.end)
    }

    fn err<T>(&self, message: &str) -> Result<T> {
        Err(Error::Parse { offset: self.offset(), message: message.to_string() })
    }

    fn expect(&mut self, t: Tok, what: &str) -> Result<()> {
        if self.peek() == Some(&t) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(&format!("expected {what}"))
        }
    }

    fn expr(&mut self) -> Result<TracePoly> {
        let mut neg = false;
        match self.peek() {
            Some(Tok::Plus) => self.pos += 1,
            Some(Tok::Minus) => {
                neg = true;
                self.pos += 1
            }
            _ => {}
        }
        let mut acc = self.term()?;
        if neg {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<TracePoly> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<TracePoly> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            match self.peek().cloned() {
                Some(Tok::Int(k)) => {
                    self.pos += 1;
                    let k: usize = k.to_string().parse().or_else(|_| self.err("exponent too large"))?;
                    Ok(base.pow(k))
                }
                _ => self.err("expected integer exponent"),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<TracePoly> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                if self.peek() == Some(&Tok::Slash) {
                    self.pos += 1;
                    match self.peek().cloned() {
                        Some(Tok::Int(d)) if d != BigInt::from(0) => {
                            self.pos += 1;
                            Ok(TracePoly::constant(Q::new(n, d)))
                        }
                        _ => self.err("expected nonzero denominator"),
                    }
                } else {
                    Ok(TracePoly::constant(Q::from_integer(n)))
                }
            }
            Some(Tok::Var(v)) => {
                self.pos += 1;
                Ok(TracePoly::var(v))
            }
            Some(Tok::Tr) => {
                self.pos += 1;
                self.expect(Tok::LParen, "`(` after tr")?;
                let inner = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(inner.formal_trace())
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(inner)
            }
            _ => self.err("expected a number, variable, tr(...) or (...)"),
        }
    }
}

/// Parses a trace polynomial and returns its normal form.
pub fn parse(s: &str) -> Result<TracePoly> {
    let mut p = Parser { toks: tokenize(s)?, pos: 0, end: s.len() };
    let r = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("unexpected trailing input");
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freetrace::{CyclicWord, Word};

    #[test]
    fn parses_nested_traces() {
        let p = parse("tr(tr(x1)*x2)").unwrap();
        let want = TracePoly::var(1).formal_trace().mul(&TracePoly::var(2).formal_trace());
        assert_eq!(p, want);
        let p = parse("tr(x2*x1) - tr(x1*x2)").unwrap();
        assert!(p.is_zero());
        assert_eq!(parse("tr(x3*x1*x2)").unwrap(), TracePoly::trace_of_word(&Word(vec![1, 2, 3])));
        let _ = CyclicWord::unit();
    }

    #[test]
    fn parse_errors_carry_offsets() {
        match parse("x1 + y") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 5),
            other => panic!("{other:?}"),
        }
        assert!(parse("x0").is_err());
        assert!(parse("tr(x").is_err());
        assert!(parse("1/0").is_err());
        assert!(parse("x1 x2").is_err());
    }

    #[test]
    fn parentheses_and_powers() {
        let a = parse("(x1 + x2)^2").unwrap();
        let b = parse("x1^2 + x1*x2 + x2*x1 + x2^2").unwrap();
        assert_eq!(a, b);
        assert_eq!(parse("-x").unwrap(), TracePoly::var(1).neg());
    }
}
