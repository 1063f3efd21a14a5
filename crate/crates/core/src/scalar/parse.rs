//! Plain-text grammar for scalar literals used in files and CLI arguments:
//! integers, fractions a/b, the symbol q, parameters by name, the operators
//! `+ - * / ^` and parentheses. `Display` output of a [`Scalar`] re-parses
//! to the same canonical value.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{Scalar, VarId};
use crate::error::{Error, Result};
use crate::scalar::vars;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(input: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let mut chars = input.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' => {
                chars.next();
            }
            '+' => {
                chars.next();
                out.push(Tok::Plus);
            }
            '-' | '−' => {
                chars.next();
                out.push(Tok::Minus);
            }
            '*' => {
                chars.next();
                out.push(Tok::Star);
            }
            '/' => {
                chars.next();
                out.push(Tok::Slash);
            }
            '^' => {
                chars.next();
                out.push(Tok::Caret);
            }
            '(' => {
                chars.next();
                out.push(Tok::LParen);
            }
            ')' => {
                chars.next();
                out.push(Tok::RParen);
            }
            '0'..='9' => {
                let mut digits = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        digits.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Tok::Int(digits.parse().unwrap()));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut name = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        name.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Tok::Ident(name));
            }
            other => {
                return Err(Error::Parse(format!("unexpected character '{other}'")));
            }
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, t: Tok) -> Result<()> {
        match self.next() {
            Some(got) if got == t => Ok(()),
            got => Err(Error::Parse(format!("expected {t:?}, found {got:?}"))),
        }
    }

    fn expr(&mut self) -> Result<Scalar> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.next();
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.next();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Scalar> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.next();
                    acc = acc.mul(&self.factor()?);
                }
                Some(Tok::Slash) => {
                    self.next();
                    let d = self.factor()?;
                    if d.is_zero() {
                        return Err(Error::Parse("division by zero".into()));
                    }
                    acc = acc.div(&d);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Scalar> {
        let mut signs = 0;
        while matches!(self.peek(), Some(Tok::Minus)) {
            self.next();
            signs += 1;
        }
        let mut base = self.atom()?;
        if matches!(self.peek(), Some(Tok::Caret)) {
            self.next();
            let e = self.exponent()?;
            if base.is_zero() && e < 0 {
                return Err(Error::Parse("zero to a negative power".into()));
            }
            base = base.pow(e);
        }
        if signs % 2 == 1 {
            base = base.neg();
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<i64> {
        // integer, -integer, or a parenthesized form of either
        match self.next() {
            Some(Tok::Int(n)) => int_to_i64(&n),
            Some(Tok::Minus) => match self.next() {
                Some(Tok::Int(n)) => Ok(-int_to_i64(&n)?),
                got => Err(Error::Parse(format!("expected integer exponent, found {got:?}"))),
            },
            Some(Tok::LParen) => {
                let mut neg = false;
                let n = loop {
                    match self.next() {
                        Some(Tok::Minus) => neg = !neg,
                        Some(Tok::Int(n)) => break n,
                        got => {
                            return Err(Error::Parse(format!(
                                "expected integer exponent, found {got:?}"
                            )))
                        }
                    }
                };
                self.expect(Tok::RParen)?;
                let v = int_to_i64(&n)?;
                Ok(if neg { -v } else { v })
            }
            got => Err(Error::Parse(format!("expected exponent, found {got:?}"))),
        }
    }

    fn atom(&mut self) -> Result<Scalar> {
        match self.next() {
            Some(Tok::Int(n)) => Ok(Scalar::from_rational(BigRational::from_integer(n))),
            Some(Tok::Ident(name)) => {
                if name == "q" {
                    Ok(Scalar::q())
                } else {
                    Ok(Scalar::param(&name))
                }
            }
            Some(Tok::LParen) => {
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            got => Err(Error::Parse(format!("expected value, found {got:?}"))),
        }
    }
}

fn int_to_i64(n: &BigInt) -> Result<i64> {
    use num_traits::ToPrimitive;
    n.to_i64()
        .ok_or_else(|| Error::Parse(format!("exponent {n} out of range")))
}

/// Parse a scalar expression. Parameter names other than `q` are interned
/// as central commuting parameters.
pub fn parse_scalar(input: &str) -> Result<Scalar> {
    let toks = tokenize(input)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser { toks, pos: 0 };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!(
            "trailing input at token {:?}",
            p.toks[p.pos]
        )));
    }
    Ok(e)
}

/// Parse a parameter name into its variable id (interning it).
pub fn parse_param(name: &str) -> VarId {
    if name == "q" {
        vars::q_var()
    } else {
        vars::intern(name)
    }
}
