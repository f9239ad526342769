use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;

use crate::field::{Field, FieldElement};
use crate::text::{field_number, parse_expr, write_terms, Alphabet, Evaluator, ParseError};

/// A word of the free algebra: a finite sequence of letters. The empty word
/// is the unit.
///
/// Words are ordered by length, then by comparing letters from the last
/// position backwards. This is the ordering induced on the free algebra by
/// the letterplace embedding, under both lex and deglex on `P`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    letters: Vec<u32>,
}

impl Word {
    pub fn new(letters: impl Into<Vec<u32>>) -> Word {
        Word {
            letters: letters.into(),
        }
    }

    pub fn empty() -> Word {
        Word::default()
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Word) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.letters.iter().rev().cmp(other.letters.iter().rev()))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Word) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// An element of the free associative algebra `K⟨X⟩`, with terms sorted by
/// decreasing word.
#[derive(Clone, PartialEq, Eq)]
pub struct FreePolynomial {
    terms: Vec<(FieldElement, Word)>,
}

impl FreePolynomial {
    pub fn zero() -> FreePolynomial {
        FreePolynomial { terms: Vec::new() }
    }

    pub fn term(c: FieldElement, w: Word) -> FreePolynomial {
        FreePolynomial::from_terms([(c, w)])
    }

    pub fn word(field: Field, w: Word) -> FreePolynomial {
        FreePolynomial::term(field.one(), w)
    }

    /// Sorts, merges equal words and drops zero coefficients.
    pub fn from_terms(terms: impl IntoIterator<Item = (FieldElement, Word)>) -> FreePolynomial {
        let mut terms: Vec<(FieldElement, Word)> = terms.into_iter().collect();
        terms.sort_by(|a, b| b.1.cmp(&a.1));
        let mut out: Vec<(FieldElement, Word)> = Vec::with_capacity(terms.len());
        for (c, w) in terms {
            match out.last_mut() {
                Some((d, v)) if *v == w => *d = &*d + &c,
                _ => out.push((c, w)),
            }
        }
        out.retain(|(c, _)| !c.is_zero());
        FreePolynomial { terms: out }
    }

    pub fn terms(&self) -> &[(FieldElement, Word)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Leading word; panics on zero.
    pub fn lm(&self) -> &Word {
        &self.terms.first().expect("leading word of zero").1
    }

    /// Leading coefficient; panics on zero.
    pub fn lc(&self) -> &FieldElement {
        &self.terms.first().expect("leading coefficient of zero").0
    }

    /// Length of the longest word, `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.iter().map(|(_, w)| w.len()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut lens = self.terms.iter().map(|(_, w)| w.len());
        match lens.next() {
            None => true,
            Some(l) => lens.all(|m| m == l),
        }
    }

    pub fn add(&self, other: &FreePolynomial) -> FreePolynomial {
        FreePolynomial::from_terms(self.terms.iter().chain(&other.terms).cloned())
    }

    pub fn neg(&self) -> FreePolynomial {
        FreePolynomial {
            terms: self.terms.iter().map(|(c, w)| (-c, w.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &FreePolynomial) -> FreePolynomial {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &FieldElement) -> FreePolynomial {
        FreePolynomial::from_terms(self.terms.iter().map(|(d, w)| (d * c, w.clone())))
    }

    /// Noncommutative product.
    pub fn mul(&self, other: &FreePolynomial) -> FreePolynomial {
        FreePolynomial::from_terms(self.terms.iter().flat_map(|(c, u)| {
            other.terms.iter().map(move |(d, v)| (c * d, u.concat(v)))
        }))
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> FreePolynomial {
        match self.terms.first() {
            None => self.clone(),
            Some((c, _)) => self.scale(&c.inv().expect("nonzero leading coefficient")),
        }
    }
}

impl fmt::Debug for FreePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Alphabet::default().write_free(f, self)
    }
}

impl fmt::Display for FreePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Alphabet::default().write_free(f, self)
    }
}

impl Alphabet {
    /// Writes a word as `x1*x2*x1`; the empty word is `1`.
    pub fn word_to_string(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        let names: Vec<String> = w.letters().iter().map(|&l| self.name(l)).collect();
        names.join("*")
    }

    pub fn write_free(&self, f: &mut impl fmt::Write, p: &FreePolynomial) -> fmt::Result {
        write_terms(
            f,
            p.terms()
                .iter()
                .map(|(c, w)| (c, (!w.is_empty()).then(|| self.word_to_string(w)))),
        )
    }

    pub fn free_to_string(&self, p: &FreePolynomial) -> String {
        let mut s = String::new();
        self.write_free(&mut s, p).expect("writing to a string");
        s
    }
}

struct FreeEval {
    field: Field,
}

impl Evaluator for FreeEval {
    type Value = FreePolynomial;

    fn number(&self, num: &BigInt, den: &BigInt, column: usize) -> Result<FreePolynomial, ParseError> {
        Ok(FreePolynomial::term(
            field_number(self.field, num, den, column)?,
            Word::empty(),
        ))
    }

    fn letter(&self, letter: u32, place: Option<u32>, column: usize) -> Result<FreePolynomial, ParseError> {
        if place.is_some() {
            return Err(ParseError::new(column, "letters of the free algebra take no place"));
        }
        Ok(FreePolynomial::word(self.field, Word::new([letter])))
    }

    fn skew(&self, column: usize) -> Result<FreePolynomial, ParseError> {
        Err(ParseError::new(column, "`s` is not allowed in a free polynomial"))
    }

    fn add(&self, a: &FreePolynomial, b: &FreePolynomial) -> FreePolynomial {
        a.add(b)
    }

    fn neg(&self, a: &FreePolynomial) -> FreePolynomial {
        a.neg()
    }

    fn mul(&self, a: &FreePolynomial, b: &FreePolynomial) -> FreePolynomial {
        a.mul(b)
    }

    fn one(&self) -> FreePolynomial {
        FreePolynomial::word(self.field, Word::empty())
    }
}

/// Parses a free polynomial such as `x1*x2 - 2*x2*x1`. Powers and
/// parentheses are expanded noncommutatively: `(x + y)^2` is
/// `x*x + x*y + y*x + y*y`.
pub fn parse_free_polynomial(
    src: &str,
    alphabet: &Alphabet,
    field: Field,
) -> Result<FreePolynomial, ParseError> {
    let e = parse_expr(src, alphabet)?;
    FreeEval { field }.eval(&e)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> Alphabet {
        Alphabet::new(["x", "y"]).unwrap()
    }

    fn parse(s: &str) -> FreePolynomial {
        parse_free_polynomial(s, &xy(), Field::Rationals).unwrap()
    }

    #[test]
    fn induced_order_reads_from_the_right() {
        let w = |s: &[u32]| Word::new(s.to_vec());
        assert!(w(&[0]) < w(&[1]));
        assert!(w(&[1, 0]) < w(&[0, 1]));
        assert!(w(&[1, 1]) < w(&[0, 0, 0]));
        assert!(Word::empty() < w(&[0]));
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(xy().free_to_string(&parse("y*x - x*y")), "-x*y + y*x");
        assert_eq!(xy().free_to_string(&parse("(x + y)^2")), "y*y + x*y + y*x + x*x");
        assert_eq!(xy().free_to_string(&parse("2 - 1/2*x*y*x")), "-1/2*x*y*x + 2");
        assert_eq!(xy().free_to_string(&parse("x*y - x*y")), "0");
        assert!(parse_free_polynomial("x(1)", &xy(), Field::Rationals).is_err());
        assert!(parse_free_polynomial("x*s", &xy(), Field::Rationals).is_err());
    }

    #[test]
    fn numbered_letters() {
        let p = parse_free_polynomial("x1*x2 - 2*x2*x1", &Alphabet::default(), Field::Rationals).unwrap();
        assert_eq!(p.to_string(), "x1*x2 - 2*x2*x1");
        assert!(p.is_homogeneous());
        assert_eq!(p.degree(), Some(2));
    }
}
