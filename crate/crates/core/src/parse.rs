//! Text grammars for surds, continued fractions and 2x2 matrices.
//!
//! ```text
//! surd    (p+sqrt(d))/q | (p-sqrt(d))/q | sqrt(d)/q | (p+sqrt(d))
//! cf      [a1,a2,...;(b1,b2,...)]     [;(b1,...)] when purely periodic
//! matrix  [[a,b],[c,d]]
//! ```
//!
//! Whitespace is ignored everywhere.

use crate::cf::CFExpansion;
use crate::error::{CfError, ParseError, SurdError, TorusError};
use crate::matrix::IntMatrix;
use crate::surd::QuadraticSurd;
use crate::torus::ToralAutomorphism;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InputError {
    #[error(transparent)]
    Syntax(#[from] ParseError),
    #[error("{0} is rational; its continued fraction terminates, so there is no period to analyse")]
    Rational(String),
    #[error(transparent)]
    Surd(#[from] SurdError),
    #[error(transparent)]
    Cf(#[from] CfError),
    #[error(transparent)]
    Torus(#[from] TorusError),
}

/// A surd as typed, split into integer part and a value in (0, 1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurdInput {
    pub value: QuadraticSurd,
    pub integer_part: BigInt,
    pub fractional: QuadraticSurd,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Input {
    Surd(SurdInput),
    Cf(CFExpansion),
    Matrix(ToralAutomorphism),
}

impl Input {
    /// The expansion behind the input; `None` for a raw matrix.
    pub fn cf(&self) -> Result<Option<CFExpansion>, InputError> {
        match self {
            Input::Surd(s) => Ok(Some(CFExpansion::expand(&s.fractional)?)),
            Input::Cf(cf) => Ok(Some(cf.clone())),
            Input::Matrix(_) => Ok(None),
        }
    }

    pub fn automorphism(&self) -> Result<ToralAutomorphism, InputError> {
        match self {
            Input::Matrix(t) => Ok(t.clone()),
            _ => Ok(ToralAutomorphism::from_quadratic(&self.cf()?.expect("not a matrix"))),
        }
    }
}

/// Picks the grammar from the leading characters.
pub fn parse_input(text: &str) -> Result<Input, InputError> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.starts_with("[[") {
        Ok(Input::Matrix(parse_matrix(text)?))
    } else if compact.starts_with('[') {
        Ok(Input::Cf(parse_cf(text)?))
    } else {
        let value = parse_surd(text)?;
        let (integer_part, fractional) = value.split_integer();
        Ok(Input::Surd(SurdInput { value, integer_part, fractional }))
    }
}

pub fn parse_surd(text: &str) -> Result<QuadraticSurd, InputError> {
    let mut c = Cursor::new(text);
    let (p, neg_root, d) = if c.peek() == Some('(') {
        c.bump();
        let p = if c.at_root() { BigInt::zero() } else { c.integer()? };
        if c.peek() == Some(')') {
            // "(p)/q" is a plain fraction
            c.bump();
            let q = c.opt_denominator()?;
            c.end()?;
            return Err(InputError::Rational(fraction_text(&p, &q)));
        }
        if !c.at_root() {
            return Err(c.error("expected 'sqrt(', '+sqrt(' or '-sqrt('").into());
        }
        let neg = c.peek() == Some('-');
        if matches!(c.peek(), Some('+') | Some('-')) {
            c.bump();
        }
        let d = c.sqrt_call()?;
        c.expect(')')?;
        (p, neg, d)
    } else if c.at_root() && c.peek() == Some('s') {
        (BigInt::zero(), false, c.sqrt_call()?)
    } else {
        let p = c.integer()?;
        let q = c.opt_denominator()?;
        c.end()?;
        return Err(InputError::Rational(fraction_text(&p, &q)));
    };
    let q = c.opt_denominator()?;
    c.end()?;
    if q.is_zero() {
        return Err(SurdError::ZeroDenominator.into());
    }
    if crate::surd::is_perfect_square(&d) && d >= BigInt::zero() {
        let root = crate::surd::isqrt(&d);
        let top = if neg_root { &p - root } else { &p + root };
        return Err(InputError::Rational(fraction_text(&top, &q)));
    }
    // (p - sqrt d)/q == (-p + sqrt d)/(-q)
    let s = if neg_root { QuadraticSurd::new(-p, -q, d) } else { QuadraticSurd::new(p, q, d) };
    Ok(s?)
}

pub fn parse_cf(text: &str) -> Result<CFExpansion, InputError> {
    let mut c = Cursor::new(text);
    c.expect('[')?;
    let mut pre = Vec::new();
    if c.peek() != Some(';') {
        pre = c.quotient_list(';')?;
    }
    c.expect(';')?;
    c.expect('(')?;
    let period = c.quotient_list(')')?;
    c.expect(')')?;
    c.expect(']')?;
    c.end()?;
    Ok(CFExpansion::new(pre, period)?)
}

pub fn parse_matrix(text: &str) -> Result<ToralAutomorphism, InputError> {
    let mut c = Cursor::new(text);
    c.expect('[')?;
    let mut rows = Vec::new();
    for i in 0..2 {
        if i > 0 {
            c.expect(',')?;
        }
        c.expect('[')?;
        let a = c.integer()?;
        c.expect(',')?;
        let b = c.integer()?;
        c.expect(']')?;
        rows.push(vec![a, b]);
    }
    c.expect(']')?;
    c.end()?;
    Ok(ToralAutomorphism::new(IntMatrix::from_rows(rows))?)
}

fn fraction_text(p: &BigInt, q: &BigInt) -> String {
    if q.is_one() {
        p.to_string()
    } else {
        format!("{p}/{q}")
    }
}

struct Cursor<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    text: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        let chars = text.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        Cursor { chars, pos: 0, text }
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.text.len(), |&(i, _)| i)
    }

    fn error(&self, message: impl fmt::Display) -> ParseError {
        let found = match self.peek() {
            Some(ch) => format!("found '{ch}'"),
            None => "found end of input".to_string(),
        };
        ParseError { position: self.offset(), message: format!("{message}, {found}") }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn bump(&mut self) {
        self.pos += 1;
    }

    /// At `sqrt`, `+sqrt` or `-sqrt`.
    fn at_root(&self) -> bool {
        let skip = usize::from(matches!(self.peek(), Some('+') | Some('-')));
        "sqrt".chars().enumerate().all(|(i, k)| self.chars.get(self.pos + skip + i).map(|&(_, c)| c) == Some(k))
    }

    fn expect(&mut self, ch: char) -> Result<(), ParseError> {
        if self.peek() == Some(ch) {
            self.bump();
            Ok(())
        } else {
            Err(self.error(format!("expected '{ch}'")))
        }
    }

    fn end(&self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(_) => Err(self.error("unexpected trailing input")),
        }
    }

    fn digits(&mut self) -> Result<BigInt, ParseError> {
        let start = self.pos;
        let mut s = String::new();
        while let Some(ch) = self.peek().filter(char::is_ascii_digit) {
            s.push(ch);
            self.bump();
        }
        if s.is_empty() {
            self.pos = start;
            return Err(self.error("expected digits"));
        }
        Ok(s.parse().expect("ascii digits"))
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        let neg = match self.peek() {
            Some('-') => {
                self.bump();
                true
            }
            Some('+') => {
                self.bump();
                false
            }
            _ => false,
        };
        let n = self.digits()?;
        Ok(if neg { -n } else { n })
    }

    fn sqrt_call(&mut self) -> Result<BigInt, ParseError> {
        for k in "sqrt".chars() {
            self.expect(k)?;
        }
        self.expect('(')?;
        let d = self.integer()?;
        self.expect(')')?;
        Ok(d)
    }

    fn opt_denominator(&mut self) -> Result<BigInt, ParseError> {
        if self.peek() == Some('/') {
            self.bump();
            self.integer()
        } else {
            Ok(BigInt::one())
        }
    }

    fn quotient_list(&mut self, close: char) -> Result<Vec<u64>, ParseError> {
        let mut out = Vec::new();
        loop {
            let at = self.pos;
            let n = self.digits()?;
            match u64::try_from(&n) {
                Ok(v) if v > 0 => out.push(v),
                _ => {
                    self.pos = at;
                    return Err(self.error("partial quotients must be integers in 1..2^64"));
                }
            }
            match self.peek() {
                Some(',') => self.bump(),
                Some(ch) if ch == close => return Ok(out),
                _ => return Err(self.error(format!("expected ',' or '{close}'"))),
            }
        }
    }
}
