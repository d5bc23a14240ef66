//! Text form of polynomials.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := base ('^' uint)?
//! base   := int | var | '(' expr ')'
//! ```
//!
//! Variable names match `[A-Za-z][A-Za-z0-9_]*`; whitespace is ignored. Formatting with
//! `Display` produces text this parser reads back to the same polynomial.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::ring::PolyRing;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a Arc<PolyRing>,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -&self.term()?
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = acc.try_mul(&self.factor()?)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.base()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            if start == self.pos {
                return self.err("expected exponent");
            }
            let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
            let e: u32 = text.parse().map_err(|_| Error::ExponentOverflow)?;
            return base.try_pow(e);
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.err("expected `)`");
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let field = *self.ring.field();
                let p = field.characteristic() as u64;
                let mut v = 0u64;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    v = (v * 10 + (self.src[self.pos] - b'0') as u64) % p;
                    self.pos += 1;
                }
                Ok(Polynomial::constant(self.ring, v as i64))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                Polynomial::var(self.ring, name)
            }
            Some(c) => self.err(format!("unexpected `{}`", c as char)),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses `text` into a polynomial of `ring`.
pub fn parse_polynomial(text: &str, ring: &Arc<PolyRing>) -> Result<Polynomial> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        ring,
    };
    let out = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(out)
}

/// Formats a polynomial; identical to its `Display` output.
pub fn format_polynomial(f: &Polynomial) -> String {
    f.to_string()
}
