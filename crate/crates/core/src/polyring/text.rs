//! Canonical text form for polynomials, and a small parser for it.
//!
//! Terms are printed ascending in the canonical monomial order (so by
//! `x`-degree first): `1 - 3*x + x^2`, `2*t*x`, `a + b*x - a*p*x`. Within a
//! monomial the variable factors appear alphabetically. The parser accepts
//! the same grammar plus parentheses, `^` powers, and juxtaposition
//! (`x*(1-x)` may be written `x(1-x)`), which keeps transcribed table
//! factors readable.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed};

use crate::error::Error;
use crate::exactnum::Integer;

use super::poly::{Polynomial, Var};

/// Alphabetical order used for the factors inside one printed monomial.
const DISPLAY_ORDER: [Var; 6] = [Var::A, Var::B, Var::P, Var::Q, Var::T, Var::X];

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (mono, coeff)) in self.terms().enumerate() {
            if i == 0 {
                if coeff.is_negative() {
                    write!(f, "-")?;
                }
            } else if coeff.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = coeff.abs();
            let mut factors: Vec<String> = Vec::new();
            if mono.is_constant() || !mag.is_one() {
                factors.push(mag.to_string());
            }
            for v in DISPLAY_ORDER {
                match mono.exponent(v) {
                    0 => {}
                    1 => factors.push(v.symbol().to_string()),
                    e => factors.push(format!("{}^{}", v.symbol(), e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Polynomial {
    type Err = Error;
    fn from_str(s: &str) -> Result<Polynomial, Error> {
        parse(s)
    }
}

/// Parse a polynomial expression over `(x, p, q, a, b, t)` with integer
/// literals, `+ - * ^`, and parentheses.
pub fn parse(text: &str) -> Result<Polynomial, Error> {
    let mut p = Parser {
        bytes: text.as_bytes(),
        pos: 0,
    };
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.error("trailing input"));
    }
    Ok(poly)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn error(&self, msg: &str) -> Error {
        Error::PolyParse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Polynomial, Error> {
        let mut acc = Polynomial::zero();
        let mut negate = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            let term = self.term()?;
            if negate {
                acc -= term;
            } else {
                acc += term;
            }
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    negate = false;
                }
                Some(b'-') => {
                    self.pos += 1;
                    negate = true;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, Error> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc * self.factor()?;
                }
                // Juxtaposition: a variable or '(' directly after a factor.
                Some(c) if c == b'(' || Var::from_symbol(c as char).is_some() => {
                    acc = acc * self.factor()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial, Error> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.uint()?;
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial, Error> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let text = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
                let value: Integer = text.parse().map_err(|_| self.error("bad integer"))?;
                Ok(Polynomial::constant(value))
            }
            Some(c) => match Var::from_symbol(c as char) {
                Some(v) => {
                    self.pos += 1;
                    Ok(Polynomial::var(v))
                }
                None => Err(self.error("expected integer, variable, or `(`")),
            },
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn uint(&mut self) -> Result<u32, Error> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let text = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
                text.parse().map_err(|_| self.error("exponent out of range"))
            }
            _ => Err(self.error("expected exponent")),
        }
    }
}
