//! Recursive-descent parser for elements of `Q(t)`.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := ('-' | '+') unary | power
//! power := atom ('^' digits)*
//! atom  := digits | 't' | '(' expr ')'
//! ```
//!
//! So `-t^2` is `-(t^2)` and `1/2/t` is `(1/2)/t`.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::numkernel::RatFunc;
use crate::ring::{Field, Ring};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    base: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, at: usize, msg: impl Into<String>) -> Error {
        Error::parse(self.base + at, msg)
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

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err(start, "expected a number"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("ascii digits parse"))
    }

    fn expr(&mut self) -> Result<RatFunc> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add_ref(&self.term()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.sub_ref(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RatFunc> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc.mul_ref(&self.unary()?);
                }
                Some(b'/') => {
                    let at = self.pos;
                    self.pos += 1;
                    let d = self.unary()?;
                    acc = acc.div_ref(&d).ok_or_else(|| self.err(at, "division by zero"))?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<RatFunc> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(self.unary()?.neg_ref())
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<RatFunc> {
        let mut base = self.atom()?;
        while self.peek() == Some(b'^') {
            self.pos += 1;
            let at = self.pos;
            let e = self.digits()?;
            let e: u32 = e
                .try_into()
                .map_err(|_| self.err(at, "exponent too large"))?;
            base = base.pow_ref(e);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<RatFunc> {
        match self.peek() {
            Some(b't') => {
                self.pos += 1;
                Ok(RatFunc::t())
            }
            Some(b'(') => {
                let open = self.pos;
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err(self.pos.max(open), "expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => Ok(RatFunc::from_bigint(&self.digits()?)),
            Some(c) => Err(self.err(self.pos, format!("unexpected {:?}", c as char))),
            None => Err(self.err(self.pos, "unexpected end of input")),
        }
    }
}

/// Parses one expression; error offsets are shifted by `base`.
pub fn parse_ratfunc_at(src: &str, base: usize) -> Result<RatFunc> {
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
        base,
    };
    let v = p.expr()?;
    if let Some(c) = p.peek() {
        return Err(p.err(p.pos, format!("unexpected {:?}", c as char)));
    }
    Ok(v)
}

pub fn parse_ratfunc(src: &str) -> Result<RatFunc> {
    parse_ratfunc_at(src, 0)
}

/// Comma-separated pieces with their byte offsets.
pub fn split_list(src: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = 0;
    for (i, c) in src.char_indices() {
        if c == ',' {
            out.push((start, &src[start..i]));
            start = i + 1;
        }
    }
    out.push((start, &src[start..]));
    out
}
