//! Text form of polynomials.
//!
//! ```text
//! poly := term (('+' | '-') term)*
//! term := int | int '*' 't' ('^' uint)? | 't' ('^' uint)?
//! ```
//!
//! Whitespace is insignificant and the leading term may carry a sign.
//! Formatting emits terms in ascending degree, e.g. `1 - 2*t + t^2`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{CoeffRing, Poly, RingError};

/// Largest exponent accepted by the parser.
const MAX_EXPONENT: usize = 1 << 16;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("syntax error at position {pos}: {message}")]
pub struct ParseError {
    pub pos: usize,
    pub message: String,
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            pos: self.pos,
            message: message.into(),
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.bytes[start..self.pos]).unwrap())
    }

    fn exponent(&mut self) -> Result<usize, ParseError> {
        if !self.eat(b'^') {
            return Ok(1);
        }
        if self.peek() == Some(b'-') {
            return Err(self.err("negative exponent"));
        }
        let d = self.digits().ok_or_else(|| self.err("expected exponent"))?;
        match d.parse::<usize>() {
            Ok(e) if e <= MAX_EXPONENT => Ok(e),
            _ => Err(self.err(format!("exponent exceeds {MAX_EXPONENT}"))),
        }
    }

    /// One unsigned term: `(coefficient, exponent)`.
    fn term(&mut self) -> Result<(BigInt, usize), ParseError> {
        match self.peek() {
            Some(b't') => {
                self.pos += 1;
                Ok((BigInt::one(), self.exponent()?))
            }
            Some(c) if c.is_ascii_digit() => {
                let n: BigInt = self.digits().unwrap().parse().unwrap();
                if self.eat(b'*') {
                    if !self.eat(b't') {
                        return Err(self.err("expected 't' after '*'"));
                    }
                    Ok((n, self.exponent()?))
                } else {
                    Ok((n, 0))
                }
            }
            Some(_) => Err(self.err("expected integer or 't'")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

/// Parse integer-coefficient polynomial text.
pub fn parse_integer_poly(text: &str) -> Result<Vec<BigInt>, ParseError> {
    let mut cur = Cursor {
        bytes: text.as_bytes(),
        pos: 0,
    };
    let mut coeffs: Vec<BigInt> = Vec::new();
    let mut negate = if cur.eat(b'-') {
        true
    } else {
        cur.eat(b'+');
        false
    };
    loop {
        let (c, e) = cur.term()?;
        if coeffs.len() <= e {
            coeffs.resize(e + 1, BigInt::zero());
        }
        if negate {
            coeffs[e] -= c;
        } else {
            coeffs[e] += c;
        }
        match cur.peek() {
            None => break,
            Some(b'+') => negate = false,
            Some(b'-') => negate = true,
            Some(_) => return Err(cur.err("expected '+' or '-'")),
        }
        cur.pos += 1;
    }
    Ok(coeffs)
}

impl Poly {
    /// Parse text into a polynomial over `ring` (coefficients are reduced for prime fields).
    pub fn parse(text: &str, ring: CoeffRing) -> Result<Poly, RingError> {
        Ok(Poly::from_bigints(ring, parse_integer_poly(text)?))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coeffs = self.to_bigints();
        let mut first = true;
        for (e, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match (e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag}*t")?,
                (_, true) => write!(f, "t^{e}")?,
                (_, false) => write!(f, "{mag}*t^{e}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
