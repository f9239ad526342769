//! Text syntax shared by polynomials, skew elements and free polynomials.
//!
//! The grammar is a small arithmetic language:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := ('-' | '+') unary | power
//! power  := atom ('^' integer)?
//! atom   := integer ('/' integer)? | name ('(' integer ')')? | 's' | '(' expr ')'
//! ```
//!
//! `name(j)` is the commutative variable with that letter at place `j`, a bare
//! `name` is a letter of the free algebra and `s` is the skew variable. Which
//! of these are allowed depends on what is being parsed.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::field::{Field, FieldElement};
use crate::poly::{Monomial, MonomialOrder, Polynomial, Variable};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("column {column}: {message}")]
pub struct ParseError {
    /// 1-based character column of the offending token.
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(column: usize, message: impl Into<String>) -> ParseError {
        ParseError {
            column,
            message: message.into(),
        }
    }
}

/// Names for the letters of the alphabet.
///
/// The default alphabet has no fixed size and names letter `i` as
/// `x{i+1}`; an explicit alphabet lists its names.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Alphabet {
    names: Vec<String>,
}

impl Alphabet {
    /// An alphabet with the given names. Names must be identifiers, distinct,
    /// and different from the reserved skew variable `s`.
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Alphabet, String> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, n) in names.iter().enumerate() {
            let mut chars = n.chars();
            let ok = chars
                .next()
                .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && chars.all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !ok {
                return Err(format!("`{n}` is not a valid letter name"));
            }
            if n == "s" {
                return Err("`s` is reserved for the skew variable".into());
            }
            if names[..i].contains(n) {
                return Err(format!("letter `{n}` listed twice"));
            }
        }
        Ok(Alphabet { names })
    }

    /// The letters `x1, ..., xn`.
    pub fn numbered(n: usize) -> Alphabet {
        Alphabet {
            names: (1..=n).map(|i| format!("x{i}")).collect(),
        }
    }

    /// Parses either a letter count (`3`) or a comma separated name list
    /// (`x, y`).
    pub fn from_spec(spec: &str) -> Result<Alphabet, String> {
        let spec = spec.trim();
        if let Ok(n) = spec.parse::<usize>() {
            if n == 0 {
                return Err("the alphabet needs at least one letter".into());
            }
            return Ok(Alphabet::numbered(n));
        }
        Alphabet::new(spec.split(',').map(|s| s.trim().to_string()))
    }

    /// Number of letters, or `None` for the unbounded default alphabet.
    pub fn len(&self) -> Option<usize> {
        (!self.names.is_empty()).then_some(self.names.len())
    }

    pub fn name(&self, letter: u32) -> String {
        match self.names.get(letter as usize) {
            Some(n) => n.clone(),
            None => format!("x{}", letter + 1),
        }
    }

    pub fn letter(&self, name: &str) -> Option<u32> {
        if self.names.is_empty() {
            let k: u32 = name.strip_prefix('x')?.parse().ok()?;
            if k == 0 || name.starts_with("x0") {
                return None;
            }
            return Some(k - 1);
        }
        self.names.iter().position(|n| n == name).map(|i| i as u32)
    }

    /// Writes a monomial, largest variable first: `x1(2)*x1(0)`.
    pub fn write_monomial(&self, f: &mut impl fmt::Write, m: &Monomial) -> fmt::Result {
        if m.is_one() {
            return write!(f, "1");
        }
        for (k, (v, e)) in m.exponents().iter().rev().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            write!(f, "{}({})", self.name(v.letter), v.place)?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }

    pub fn monomial_to_string(&self, m: &Monomial) -> String {
        let mut s = String::new();
        self.write_monomial(&mut s, m).expect("writing to a string");
        s
    }

    pub fn write_polynomial(&self, f: &mut impl fmt::Write, p: &Polynomial) -> fmt::Result {
        write_terms(
            f,
            p.terms()
                .iter()
                .map(|(c, m)| (c, (!m.is_one()).then(|| self.monomial_to_string(m)))),
        )
    }

    pub fn polynomial_to_string(&self, p: &Polynomial) -> String {
        let mut s = String::new();
        self.write_polynomial(&mut s, p).expect("writing to a string");
        s
    }
}

/// Writes `c1*m1 + c2*m2 - ...`; a `None` monomial stands for 1. An empty
/// sum is written `0`.
pub(crate) fn write_terms<'a>(
    f: &mut impl fmt::Write,
    terms: impl Iterator<Item = (&'a FieldElement, Option<String>)>,
) -> fmt::Result {
    let mut first = true;
    for (c, mono) in terms {
        let negative = c.is_negative();
        let abs = if negative { -c } else { c.clone() };
        if first {
            if negative {
                write!(f, "-")?;
            }
        } else if negative {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        first = false;
        match mono {
            None => write!(f, "{abs}")?,
            Some(m) if abs.is_one() => write!(f, "{m}")?,
            Some(m) => write!(f, "{abs}*{m}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(BigInt),
    Ident(String),
    LParen,
    RParen,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

fn tokenize(src: &str) -> Result<Vec<(Token, usize)>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let single = match c {
            '(' => Some(Token::LParen),
            ')' => Some(Token::RParen),
            '+' => Some(Token::Plus),
            '-' => Some(Token::Minus),
            '*' => Some(Token::Star),
            '/' => Some(Token::Slash),
            '^' => Some(Token::Caret),
            _ => None,
        };
        if let Some(t) = single {
            out.push((t, col));
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push((Token::Int(digits.parse().expect("digits")), col));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Token::Ident(chars[start..i].iter().collect()), col));
        } else {
            return Err(ParseError::new(col, format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

/// A parsed expression, before it is interpreted in a particular ring.
#[derive(Debug, Clone)]
pub(crate) enum Expr {
    Number(BigInt, BigInt, usize),
    Letter {
        letter: u32,
        place: Option<u32>,
        column: usize,
    },
    Skew(usize),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

struct Parser<'a> {
    tokens: Vec<(Token, usize)>,
    pos: usize,
    end: usize,
    alphabet: &'a Alphabet,
}

pub(crate) fn parse_expr(src: &str, alphabet: &Alphabet) -> Result<Expr, ParseError> {
    let tokens = tokenize(src)?;
    if tokens.is_empty() {
        return Err(ParseError::new(1, "empty expression"));
    }
    let mut p = Parser {
        tokens,
        pos: 0,
        end: src.chars().count() + 1,
        alphabet,
    };
    let e = p.expr()?;
    if let Some((t, col)) = p.tokens.get(p.pos) {
        return Err(ParseError::new(*col, format!("unexpected {}", describe(t))));
    }
    Ok(e)
}

fn describe(t: &Token) -> String {
    match t {
        Token::Int(n) => format!("number `{n}`"),
        Token::Ident(s) => format!("name `{s}`"),
        Token::LParen => "`(`".into(),
        Token::RParen => "`)`".into(),
        Token::Plus => "`+`".into(),
        Token::Minus => "`-`".into(),
        Token::Star => "`*`".into(),
        Token::Slash => "`/`".into(),
        Token::Caret => "`^`".into(),
    }
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn column(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(_, c)| *c)
    }

    fn eat(&mut self, t: &Token) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect_int(&mut self, what: &str) -> Result<BigInt, ParseError> {
        match self.tokens.get(self.pos) {
            Some((Token::Int(n), _)) => {
                let n = n.clone();
                self.pos += 1;
                Ok(n)
            }
            Some((t, col)) => Err(ParseError::new(
                *col,
                format!("expected {what}, found {}", describe(t)),
            )),
            None => Err(ParseError::new(self.end, format!("expected {what}"))),
        }
    }

    fn small_int(&mut self, what: &str) -> Result<u32, ParseError> {
        let col = self.column();
        let n = self.expect_int(what)?;
        u32::try_from(n).map_err(|_| ParseError::new(col, format!("{what} too large")))
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat(&Token::Plus) {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat(&Token::Minus) {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        while self.eat(&Token::Star) {
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.eat(&Token::Minus) {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        if self.eat(&Token::Plus) {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if self.eat(&Token::Caret) {
            let e = self.small_int("exponent")?;
            return Ok(Expr::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let col = self.column();
        let Some((tok, _)) = self.tokens.get(self.pos).cloned() else {
            return Err(ParseError::new(self.end, "unexpected end of expression"));
        };
        self.pos += 1;
        match tok {
            Token::Int(n) => {
                if self.eat(&Token::Slash) {
                    let dcol = self.column();
                    let d = self.expect_int("denominator")?;
                    if d.is_zero() {
                        return Err(ParseError::new(dcol, "zero denominator"));
                    }
                    Ok(Expr::Number(n, d, col))
                } else {
                    Ok(Expr::Number(n, BigInt::one(), col))
                }
            }
            Token::Ident(name) => {
                let place = if self.eat(&Token::LParen) {
                    let j = self.small_int("place index")?;
                    if !self.eat(&Token::RParen) {
                        return Err(ParseError::new(self.column(), "expected `)`"));
                    }
                    Some(j)
                } else {
                    None
                };
                if name == "s" {
                    if place.is_some() {
                        return Err(ParseError::new(col, "`s` takes no place index"));
                    }
                    return Ok(Expr::Skew(col));
                }
                let letter = self
                    .alphabet
                    .letter(&name)
                    .ok_or_else(|| ParseError::new(col, format!("unknown letter `{name}`")))?;
                Ok(Expr::Letter {
                    letter,
                    place,
                    column: col,
                })
            }
            Token::LParen => {
                let e = self.expr()?;
                if !self.eat(&Token::RParen) {
                    return Err(ParseError::new(self.column(), "expected `)`"));
                }
                Ok(e)
            }
            t => Err(ParseError::new(col, format!("unexpected {}", describe(&t)))),
        }
    }
}

/// Interprets parsed expressions in a concrete ring.
pub(crate) trait Evaluator {
    type Value: Clone;

    fn number(&self, num: &BigInt, den: &BigInt, column: usize) -> Result<Self::Value, ParseError>;
    fn letter(&self, letter: u32, place: Option<u32>, column: usize)
        -> Result<Self::Value, ParseError>;
    fn skew(&self, column: usize) -> Result<Self::Value, ParseError>;
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn neg(&self, a: &Self::Value) -> Self::Value;
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn one(&self) -> Self::Value;

    fn eval(&self, e: &Expr) -> Result<Self::Value, ParseError> {
        Ok(match e {
            Expr::Number(n, d, col) => self.number(n, d, *col)?,
            Expr::Letter {
                letter,
                place,
                column,
            } => self.letter(*letter, *place, *column)?,
            Expr::Skew(col) => self.skew(*col)?,
            Expr::Add(a, b) => self.add(&self.eval(a)?, &self.eval(b)?),
            Expr::Sub(a, b) => self.add(&self.eval(a)?, &self.neg(&self.eval(b)?)),
            Expr::Neg(a) => self.neg(&self.eval(a)?),
            Expr::Mul(a, b) => self.mul(&self.eval(a)?, &self.eval(b)?),
            Expr::Pow(a, k) => {
                let base = self.eval(a)?;
                let mut acc = self.one();
                for _ in 0..*k {
                    acc = self.mul(&acc, &base);
                }
                acc
            }
        })
    }
}

pub(crate) fn field_number(
    field: Field,
    num: &BigInt,
    den: &BigInt,
    column: usize,
) -> Result<FieldElement, ParseError> {
    field
        .from_fraction(num, den)
        .map_err(|e| ParseError::new(column, e.to_string()))
}

struct PolyEval {
    field: Field,
    order: MonomialOrder,
}

impl Evaluator for PolyEval {
    type Value = Polynomial;

    fn number(&self, num: &BigInt, den: &BigInt, column: usize) -> Result<Polynomial, ParseError> {
        Ok(Polynomial::constant(
            field_number(self.field, num, den, column)?,
            self.order,
        ))
    }

    fn letter(&self, letter: u32, place: Option<u32>, column: usize) -> Result<Polynomial, ParseError> {
        let place = place.ok_or_else(|| {
            ParseError::new(column, "a commutative variable needs a place, as in `x1(0)`")
        })?;
        Ok(Polynomial::term(
            self.field.one(),
            Monomial::var(Variable::new(letter, place)),
            self.order,
        ))
    }

    fn skew(&self, column: usize) -> Result<Polynomial, ParseError> {
        Err(ParseError::new(column, "`s` is not allowed in a commutative polynomial"))
    }

    fn add(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        a.add(b)
    }

    fn neg(&self, a: &Polynomial) -> Polynomial {
        a.neg()
    }

    fn mul(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        a.mul(b)
    }

    fn one(&self) -> Polynomial {
        Polynomial::one(self.field, self.order)
    }
}

/// Parses a commutative polynomial such as `x1(2)*x1(0) - x1(1)`.
pub fn parse_polynomial(
    src: &str,
    alphabet: &Alphabet,
    field: Field,
    order: MonomialOrder,
) -> Result<Polynomial, ParseError> {
    let e = parse_expr(src, alphabet)?;
    PolyEval { field, order }.eval(&e)
}
