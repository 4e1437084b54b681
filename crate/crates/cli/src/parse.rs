//! Polynomial expression parser.
//!
//! ```text
//! expr := [sign] term (('+' | '-') term)*
//! term := INT | [INT ['*']] 'x' ['^' UINT]
//! ```
//!
//! Whitespace between tokens is ignored and like terms are combined.

use std::fmt;

use irreducible_core::IntegerPolynomial;
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Exponents above this are rejected before any allocation happens.
pub const MAX_EXPONENT: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the source text.
    pub offset: usize,
    pub expected: Vec<&'static str>,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: expected ", self.offset)?;
        match self.expected.as_slice() {
            [one] => f.write_str(one)?,
            many => write!(f, "one of {}", many.join(", "))?,
        }
        write!(f, ", found {}", self.found)
    }
}

impl std::error::Error for ParseError {}

/// Parsed input together with its source text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolynomialExpression {
    pub source: String,
    pub parsed: IntegerPolynomial,
}

impl PolynomialExpression {
    pub fn parse(source: &str) -> Result<Self, ParseError> {
        Ok(PolynomialExpression { source: source.to_owned(), parsed: parse_polynomial(source)? })
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

const INTEGER: &str = "integer";
const X: &str = "'x'";
const PLUS: &str = "'+'";
const MINUS: &str = "'-'";
const STAR: &str = "'*'";
const CARET: &str = "'^'";
const END: &str = "end of input";
const UINT: &str = "unsigned integer";

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.peek_raw() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek_raw(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.peek_raw()
    }

    fn error(&mut self, expected: &[&'static str]) -> ParseError {
        self.skip_ws();
        let found = match self.peek_raw() {
            Some(c) => format!("'{c}'"),
            None => END.to_owned(),
        };
        ParseError { offset: self.pos, expected: expected.to_vec(), found }
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        let len = self.src[start..].bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return None;
        }
        self.pos += len;
        Some(&self.src[start..start + len])
    }

    /// One term, returning `(coefficient, exponent)`.
    fn term(&mut self) -> Result<(BigInt, usize), ParseError> {
        let coeff = self.digits().map(|d| d.parse::<BigInt>().expect("ascii digits"));
        let mut saw_star = false;
        if coeff.is_some() && self.peek() == Some('*') {
            self.pos += 1;
            saw_star = true;
        }
        match self.peek() {
            Some('x') => {
                self.pos += 1;
            }
            _ if saw_star => return Err(self.error(&[X])),
            _ => {
                return match coeff {
                    Some(c) => Ok((c, 0)),
                    None => Err(self.error(&[INTEGER, X])),
                };
            }
        }
        let coeff = coeff.unwrap_or_else(BigInt::one);
        if self.peek() != Some('^') {
            return Ok((coeff, 1));
        }
        self.pos += 1;
        let at = {
            self.skip_ws();
            self.pos
        };
        let Some(d) = self.digits() else {
            return Err(self.error(&[UINT]));
        };
        match d.parse::<usize>() {
            Ok(e) if e <= MAX_EXPONENT => Ok((coeff, e)),
            _ => Err(ParseError {
                offset: at,
                expected: vec!["exponent at most 100000"],
                found: d.to_owned(),
            }),
        }
    }
}

/// Parses an expression such as `x^4 + 5x^3 - 2*x + 150`.
pub fn parse_polynomial(text: &str) -> Result<IntegerPolynomial, ParseError> {
    let mut p = Parser { src: text, pos: 0 };
    let mut coeffs: Vec<BigInt> = Vec::new();
    let mut negative = match p.peek() {
        Some('-') => {
            p.pos += 1;
            true
        }
        Some('+') => {
            p.pos += 1;
            false
        }
        None => return Err(p.error(&[INTEGER, X, PLUS, MINUS])),
        _ => false,
    };
    loop {
        let (c, e) = p.term()?;
        if coeffs.len() <= e {
            coeffs.resize(e + 1, BigInt::zero());
        }
        if negative {
            coeffs[e] -= c;
        } else {
            coeffs[e] += c;
        }
        negative = match p.peek() {
            None => break,
            Some('+') => false,
            Some('-') => true,
            Some(_) => {
                // After a bare integer a variable or '*' could have continued the term.
                return Err(p.error(&[PLUS, MINUS, STAR, X, CARET, END]));
            }
        };
        p.pos += 1;
    }
    Ok(IntegerPolynomial::new(coeffs))
}

/// Parses an ascending, comma-separated coefficient list `a0,a1,...,an`.
pub fn parse_coefficients(text: &str) -> Result<IntegerPolynomial, ParseError> {
    let mut coeffs = Vec::new();
    let mut offset = 0;
    for piece in text.split(',') {
        let trimmed = piece.trim();
        let lead = piece.len() - piece.trim_start().len();
        let value = trimmed.strip_prefix('+').unwrap_or(trimmed);
        match value.parse::<BigInt>() {
            Ok(v) if !value.starts_with('+') => coeffs.push(v),
            _ => {
                return Err(ParseError {
                    offset: offset + lead,
                    expected: vec![INTEGER],
                    found: if trimmed.is_empty() { "empty item".to_owned() } else { format!("'{trimmed}'") },
                })
            }
        }
        offset += piece.len() + 1;
    }
    Ok(IntegerPolynomial::new(coeffs))
}
