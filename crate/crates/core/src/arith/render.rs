//! Canonical text form of polynomials.
//!
//! Terms are printed by descending total degree; within one degree the
//! monomials are ordered lexicographically with `lambda` before `x` before
//! `y` (so `lambda^2` precedes `lambda*x` precedes `x^2`). Coefficients are
//! printed as `p/q`, or `p` for integers, and a unit coefficient is omitted in
//! front of a non-constant monomial: `x^2 - lambda*x + 3/2*y - 1`.

use std::cmp::Reverse;
use std::fmt;
use std::str::FromStr;

use num::{BigInt, One, Signed, Zero};

use super::poly::{Monomial, MultiPoly, Symbol};
use super::Rational;

impl Monomial {
    fn display_key(&self) -> (Reverse<u32>, Reverse<u32>, Reverse<u32>) {
        (
            Reverse(self.total_degree()),
            Reverse(self.lambda),
            Reverse(self.x),
        )
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for symbol in [Symbol::Lambda, Symbol::X, Symbol::Y] {
            let e = self.exp(symbol);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(symbol.name())?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl MultiPoly {
    /// Terms in canonical display order.
    pub fn sorted_terms(&self) -> Vec<(Monomial, Rational)> {
        let mut terms: Vec<_> = self.terms().map(|(m, c)| (*m, c.clone())).collect();
        terms.sort_by_key(|(m, _)| m.display_key());
        terms
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let magnitude = c.abs();
            if m.is_one() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{magnitude}*{m}")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse polynomial at byte {offset}: {reason}")]
pub struct ParsePolyError {
    pub offset: usize,
    pub reason: &'static str,
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn fail<T>(&self, reason: &'static str) -> Result<T, ParsePolyError> {
        Err(ParsePolyError {
            offset: self.pos,
            reason,
        })
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

    fn eat(&mut self, byte: u8) -> bool {
        if self.peek() == Some(byte) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Result<BigInt, ParsePolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.fail("expected digits");
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(digits.parse().unwrap())
    }

    fn small_integer(&mut self) -> Result<u32, ParsePolyError> {
        let value = self.integer()?;
        u32::try_from(value).or_else(|_| self.fail("exponent out of range"))
    }

    fn ident(&mut self) -> Result<Symbol, ParsePolyError> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        for symbol in [Symbol::Lambda, Symbol::X, Symbol::Y] {
            let name = symbol.name().as_bytes();
            let boundary = rest
                .get(name.len())
                .is_none_or(|b| !b.is_ascii_alphanumeric());
            if rest.starts_with(name) && boundary {
                self.pos += name.len();
                return Ok(symbol);
            }
        }
        self.fail("unknown symbol")
    }

    fn factor(&mut self, coeff: &mut Rational, mono: &mut Monomial) -> Result<(), ParsePolyError> {
        match self.peek() {
            Some(b) if b.is_ascii_digit() => {
                let num = self.integer()?;
                let den = if self.eat(b'/') {
                    self.integer()?
                } else {
                    BigInt::one()
                };
                if den.is_zero() {
                    return self.fail("zero denominator");
                }
                *coeff *= Rational::new(num, den);
            }
            Some(_) => {
                let symbol = self.ident()?;
                let exp = if self.eat(b'^') {
                    self.small_integer()?
                } else {
                    1
                };
                *mono = mono.mul(&Monomial::of(symbol, exp));
            }
            None => return self.fail("unexpected end of input"),
        }
        Ok(())
    }

    fn poly(&mut self) -> Result<MultiPoly, ParsePolyError> {
        let mut out = MultiPoly::zero();
        let mut first = true;
        loop {
            let negative = if self.eat(b'-') {
                true
            } else if first || self.eat(b'+') {
                false
            } else {
                break;
            };
            first = false;
            let mut coeff = Rational::one();
            let mut mono = Monomial::ONE;
            self.factor(&mut coeff, &mut mono)?;
            while self.eat(b'*') {
                self.factor(&mut coeff, &mut mono)?;
            }
            out.add_term(mono, if negative { -coeff } else { coeff });
        }
        if self.peek().is_some() {
            return self.fail("trailing input");
        }
        Ok(out)
    }
}

impl FromStr for MultiPoly {
    type Err = ParsePolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Parser {
            src: s.as_bytes(),
            pos: 0,
        }
        .poly()
    }
}
