//! Parser for the operator text format produced by `Display`.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := '-' unary | power
//! power := atom ('^' '-'? digits)?
//! atom  := digits | name | '(' expr ')'
//! ```
//!
//! `*` is the Ore product taken in the written order; `/` only accepts a
//! nonzero scalar on its right.

use std::str::FromStr;

use num_bigint::BigInt;

use super::poly::OrePoly;
use super::shift::Shift;
use crate::arith::{RatFunc, Rational, Var};
use crate::error::{Error, Result};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
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

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(text.parse().unwrap())
    }

    fn expr(&mut self) -> Result<OrePoly> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<OrePoly> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = &acc * &self.unary()?;
            } else if self.eat(b'/') {
                let at = self.pos;
                let d = self.unary()?;
                let Some(c) = d.as_scalar().filter(|c| !c.is_zero()) else {
                    return Err(Error::Parse { pos: at, msg: "divisor must be a nonzero scalar".into() });
                };
                acc = &acc * &OrePoly::constant(c.inv()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<OrePoly> {
        if self.eat(b'-') {
            Ok(-&self.unary()?)
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<OrePoly> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let neg = self.eat(b'-');
        let at = self.pos;
        let k: u32 = match u32::try_from(self.digits()?) {
            Ok(k) => k,
            Err(_) => return Err(Error::Parse { pos: at, msg: "exponent too large".into() }),
        };
        if !neg {
            return Ok(base.pow(k));
        }
        match base.as_scalar() {
            Some(c) if !c.is_zero() => Ok(OrePoly::constant(c.pow(-(k as i32))?)),
            _ => Err(Error::Parse { pos: at, msg: "negative power of a non-scalar".into() }),
        }
    }

    fn atom(&mut self) -> Result<OrePoly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return self.err("expected ')'");
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.digits()?;
                Ok(OrePoly::constant(RatFunc::from_rational(&Rational::from_integer(n))))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                if let Some(v) = Var::from_name(name) {
                    Ok(OrePoly::var(v))
                } else if let Some(e) = Shift::from_name(name) {
                    Ok(OrePoly::shift(e))
                } else {
                    self.pos = start;
                    self.err(format!("unknown symbol '{}'", name))
                }
            }
            Some(c) => self.err(format!("unexpected '{}'", c as char)),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses an operator in the canonical text format (or any expression in the
/// same grammar).
pub fn parse_operator(text: &str) -> Result<OrePoly> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let out = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(out)
}

impl FromStr for OrePoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<OrePoly> {
        parse_operator(s)
    }
}
