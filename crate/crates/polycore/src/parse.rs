use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::poly::IntPoly;

/// Parse failure with the byte offset where it happened.
#[derive(Debug, Error, PartialEq, Eq)]
#[error("parse error at position {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

fn err<T>(position: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        position,
        message: message.into(),
    })
}

/// Parses either expression syntax (`x^2+5x+9`, unary minus, implicit
/// coefficient * power multiplication, optional `*`) or a bracketed
/// coefficient list in descending order (`[1, 2, 1, 1]`).
pub fn parse(text: &str) -> Result<IntPoly, ParseError> {
    let trimmed_start = text.len() - text.trim_start().len();
    let body = text.trim();
    if body.is_empty() {
        return err(0, "empty input");
    }
    if body.starts_with('[') {
        parse_bracketed(body, trimmed_start)
    } else {
        parse_expression(body, trimmed_start)
    }
}

fn parse_bracketed(body: &str, base: usize) -> Result<IntPoly, ParseError> {
    let inner = &body[1..];
    let close = match inner.find(']') {
        Some(i) => i,
        None => return err(base + body.len(), "missing closing bracket"),
    };
    if !inner[close + 1..].trim().is_empty() {
        return err(base + close + 2, "trailing text after bracket");
    }
    let list = inner[..close].trim();
    if list.is_empty() {
        return Ok(IntPoly::zero());
    }
    let mut coeffs = Vec::new();
    let mut offset = base + 1;
    for part in list.split(',') {
        let t = part.trim();
        if t.is_empty() {
            return err(offset, "empty coefficient");
        }
        match t.parse::<BigInt>() {
            Ok(v) => coeffs.push(v),
            Err(_) => return err(offset, format!("bad integer `{t}`")),
        }
        offset += part.len() + 1;
    }
    Ok(IntPoly::from_descending(coeffs))
}

struct Lexer<'a> {
    bytes: &'a [u8],
    pos: usize,
    base: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn here(&self) -> usize {
        self.base + self.pos
    }

    fn number(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_digit())
        {
            self.pos += 1;
        }
        if start == self.pos {
            return err(self.here(), "expected a number");
        }
        let s = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }
}

fn parse_expression(body: &str, base: usize) -> Result<IntPoly, ParseError> {
    let mut lex = Lexer {
        bytes: body.as_bytes(),
        pos: 0,
        base,
    };
    let mut acc = IntPoly::zero();
    let mut first = true;
    loop {
        let sign = match lex.peek() {
            None if first => return err(lex.here(), "empty input"),
            None => break,
            Some(b'+') => {
                lex.bump();
                false
            }
            Some(b'-') => {
                lex.bump();
                true
            }
            Some(_) if first => false,
            Some(c) => {
                return err(lex.here(), format!("expected `+` or `-`, found `{}`", c as char))
            }
        };
        first = false;
        let term = parse_term(&mut lex)?;
        acc = if sign { &acc - &term } else { &acc + &term };
    }
    Ok(acc)
}

fn parse_term(lex: &mut Lexer) -> Result<IntPoly, ParseError> {
    let mut coeff = BigInt::one();
    let mut saw_number = false;
    if lex.peek().is_some_and(|c| c.is_ascii_digit()) {
        coeff = lex.number()?;
        saw_number = true;
        if lex.peek() == Some(b'*') {
            lex.bump();
        }
    }
    let mut exp = 0usize;
    if lex.peek() == Some(b'x') || lex.peek() == Some(b'X') {
        lex.bump();
        exp = 1;
        if lex.peek() == Some(b'^') {
            lex.bump();
            let e = lex.number()?;
            exp = match e.to_string().parse::<usize>() {
                Ok(v) => v,
                Err(_) => return err(lex.here(), "exponent too large"),
            };
        }
    } else if !saw_number {
        return err(lex.here(), "expected a coefficient or `x`");
    }
    Ok(IntPoly::monomial(coeff, exp))
}

/// Expression rendering, descending powers: `2x^8 + 2x^7 - 4x^6 + ... + 5`.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for i in (0..self.coeffs().len()).rev() {
            let c = &self.coeffs()[i];
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit = mag.is_one();
            match (i, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{mag}x^{i}")?,
            }
        }
        Ok(())
    }
}

impl IntPoly {
    /// Descending bracketed coefficient list: `[1, 2, 1, 1]`.
    pub fn to_bracketed(&self) -> String {
        if self.is_zero() {
            return "[0]".to_string();
        }
        let parts: Vec<String> = self
            .coeffs_descending()
            .iter()
            .map(|c| c.to_string())
            .collect();
        format!("[{}]", parts.join(", "))
    }
}

/// Canonical JSON form. Coefficients are decimal strings because they exceed
/// 2^53 in routine use.
#[derive(Serialize, Deserialize)]
pub struct PolyJson {
    pub coeffs_desc: Vec<String>,
}

impl From<&IntPoly> for PolyJson {
    fn from(p: &IntPoly) -> Self {
        PolyJson {
            coeffs_desc: p.coeffs_descending().iter().map(|c| c.to_string()).collect(),
        }
    }
}

impl TryFrom<&PolyJson> for IntPoly {
    type Error = ParseError;
    fn try_from(j: &PolyJson) -> Result<IntPoly, ParseError> {
        let mut coeffs = Vec::with_capacity(j.coeffs_desc.len());
        for (i, s) in j.coeffs_desc.iter().enumerate() {
            match s.trim().parse::<BigInt>() {
                Ok(v) => coeffs.push(v),
                Err(_) => return err(i, format!("bad integer `{s}`")),
            }
        }
        Ok(IntPoly::from_descending(coeffs))
    }
}
