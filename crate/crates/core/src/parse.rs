//! Text grammar for elements and tensors, the inverse of their `Display`.
//!
//! ```text
//! expr  := "0" | term (("+" | "-") term)*
//! term  := ["+" | "-"] [rational] key
//! key   := gen ("(x)" gen)*
//! gen   := ("L" | "T" | "G") "[" halfint "]"
//! ```
//!
//! A missing coefficient means 1. Whitespace is free between tokens. Every
//! term of one expression must have the same number of tensor factors.

use std::fmt;

use crate::algebra::{Generator, Kind};
use crate::error::{Error, Result};
use crate::linear::{Element, Tensor2, Tensor3};
use crate::scalar::{HalfInt, Rational};

/// A parsed value of any supported arity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expression {
    Element(Element),
    Tensor2(Tensor2),
    Tensor3(Tensor3),
}

impl Expression {
    pub fn arity(&self) -> usize {
        match self {
            Expression::Element(_) => 1,
            Expression::Tensor2(_) => 2,
            Expression::Tensor3(_) => 3,
        }
    }
}

impl fmt::Display for Expression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expression::Element(e) => e.fmt(f),
            Expression::Tensor2(t) => t.fmt(f),
            Expression::Tensor3(t) => t.fmt(f),
        }
    }
}

struct Term {
    start: usize,
    coeff: Rational,
    factors: Vec<Generator>,
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    text: &'a str,
    at: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser { chars: text.chars().enumerate().collect(), text, at: 0 }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.at).map(|c| c.1)
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.at += 1;
        }
    }

    fn err<T>(&self, at: usize, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse { position: at + 1, message: message.into() })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.eat(c) {
            Ok(())
        } else {
            self.err(self.at, format!("expected '{c}'"))
        }
    }

    fn digits(&mut self) -> &'a str {
        let start = self.at;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.at += 1;
        }
        self.slice(start, self.at)
    }

    fn slice(&self, from: usize, to: usize) -> &'a str {
        let byte = |i: usize| self.text.char_indices().nth(i).map_or(self.text.len(), |(b, _)| b);
        &self.text[byte(from)..byte(to)]
    }

    /// `digits ["/" digits]`, unsigned.
    fn rational(&mut self) -> Result<Option<Rational>> {
        let start = self.at;
        if self.digits().is_empty() {
            return Ok(None);
        }
        if self.eat('/') && self.digits().is_empty() {
            return self.err(self.at, "expected denominator digits");
        }
        match self.slice(start, self.at).parse::<Rational>() {
            Ok(q) => Ok(Some(q)),
            Err(_) => self.err(start, format!("invalid rational '{}'", self.slice(start, self.at))),
        }
    }

    fn generator(&mut self) -> Result<Generator> {
        self.skip_ws();
        let start = self.at;
        let kind = match self.peek() {
            Some('L') => Kind::L,
            Some('T') => Kind::T,
            Some('G') => Kind::G,
            _ => return self.err(start, "expected generator L, T or G"),
        };
        self.at += 1;
        self.expect('[')?;
        self.skip_ws();
        let idx_start = self.at;
        if !self.eat('-') {
            self.eat('+');
        }
        if self.digits().is_empty() {
            return self.err(self.at, "expected index digits");
        }
        if self.eat('/') && self.digits().is_empty() {
            return self.err(self.at, "expected index denominator");
        }
        let token = self.slice(idx_start, self.at);
        let index: HalfInt = match token.parse() {
            Ok(i) => i,
            Err(_) => return self.err(idx_start, format!("index '{token}' is not a half-integer")),
        };
        self.expect(']')?;
        Generator::new(kind, index)
    }

    fn term(&mut self, first: bool) -> Result<Term> {
        self.skip_ws();
        let start = self.at;
        let negative = if first {
            match self.peek() {
                Some('-') => {
                    self.at += 1;
                    true
                }
                Some('+') => {
                    self.at += 1;
                    false
                }
                _ => false,
            }
        } else {
            false
        };
        self.skip_ws();
        let coeff = self.rational()?.unwrap_or_else(Rational::one);
        let mut factors = vec![self.generator()?];
        loop {
            self.skip_ws();
            if self.peek() != Some('(') {
                break;
            }
            self.at += 1;
            self.expect('x')?;
            self.expect(')')?;
            factors.push(self.generator()?);
        }
        Ok(Term { start, coeff: if negative { -coeff } else { coeff }, factors })
    }

    fn terms(&mut self) -> Result<Option<Vec<Term>>> {
        self.skip_ws();
        if self.peek().is_none() {
            return self.err(self.at, "empty expression");
        }
        // a bare "0" is the zero vector of any arity
        let save = self.at;
        if self.eat('0') {
            self.skip_ws();
            if self.peek().is_none() {
                return Ok(None);
            }
            self.at = save;
        }
        let mut terms = vec![self.term(true)?];
        loop {
            self.skip_ws();
            let negative = match self.peek() {
                None => break,
                Some('+') => false,
                Some('-') => true,
                Some(c) => return self.err(self.at, format!("unexpected '{c}'")),
            };
            self.at += 1;
            let mut t = self.term(false)?;
            if negative {
                t.coeff = -t.coeff;
            }
            terms.push(t);
        }
        let arity = terms[0].factors.len();
        if let Some(t) = terms.iter().find(|t| t.factors.len() != arity) {
            return self.err(
                t.start,
                format!("term has {} factors, expected {arity}", t.factors.len()),
            );
        }
        Ok(Some(terms))
    }
}

fn parse_arity(text: &str, arity: usize) -> Result<Option<Vec<Term>>> {
    let terms = Parser::new(text).terms()?;
    if let Some(ts) = &terms {
        if ts[0].factors.len() != arity {
            return Err(Error::Parse {
                position: ts[0].start + 1,
                message: format!("expected {arity} tensor factors, found {}", ts[0].factors.len()),
            });
        }
    }
    Ok(terms)
}

pub fn parse_element(text: &str) -> Result<Element> {
    let terms = parse_arity(text, 1)?.unwrap_or_default();
    Ok(terms.into_iter().map(|t| (t.factors[0], t.coeff)).collect())
}

pub fn parse_tensor2(text: &str) -> Result<Tensor2> {
    let terms = parse_arity(text, 2)?.unwrap_or_default();
    Ok(terms.into_iter().map(|t| ((t.factors[0], t.factors[1]), t.coeff)).collect())
}

pub fn parse_tensor3(text: &str) -> Result<Tensor3> {
    let terms = parse_arity(text, 3)?.unwrap_or_default();
    Ok(terms
        .into_iter()
        .map(|t| ((t.factors[0], t.factors[1], t.factors[2]), t.coeff))
        .collect())
}

/// Parses a value whose arity is read off the first term. A bare `0` is
/// the zero element.
pub fn parse_expression(text: &str) -> Result<Expression> {
    let Some(terms) = Parser::new(text).terms()? else {
        return Ok(Expression::Element(Element::zero()));
    };
    match terms[0].factors.len() {
        1 => parse_element(text).map(Expression::Element),
        2 => parse_tensor2(text).map(Expression::Tensor2),
        3 => parse_tensor3(text).map(Expression::Tensor3),
        n => Err(Error::Parse {
            position: terms[0].start + 1,
            message: format!("{n} tensor factors are not supported"),
        }),
    }
}
