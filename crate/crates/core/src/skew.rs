//! The skew polynomial ring `S = P[s;σ]`.
//!
//! An element is a finite sum `Σ f_i s^i` with `f_i ∈ P`, multiplied by the
//! rule `s·f = σ(f)·s`. Monomials `m s^i` are ordered s-degree first and by
//! the ordering of `P` within one s-degree.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::endo::MonomialEndomorphism;
use crate::field::{Field, FieldElement};
use crate::poly::{Monomial, MonomialOrder, Polynomial};
use crate::text::{field_number, parse_expr, write_terms, Alphabet, Evaluator, ParseError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SkewError {
    #[error("the zero element has no leading monomial")]
    LeadingOfZero,
}

/// A monomial `m s^sdeg` of `S`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewMonomial {
    pub mono: Monomial,
    pub sdeg: u32,
}

impl SkewMonomial {
    pub fn new(mono: Monomial, sdeg: u32) -> SkewMonomial {
        SkewMonomial { mono, sdeg }
    }

    /// Compares under the ordering of `S`: s-degree first, then `order`.
    pub fn compare(&self, other: &SkewMonomial, order: MonomialOrder) -> Ordering {
        self.sdeg
            .cmp(&other.sdeg)
            .then_with(|| order.compare(&self.mono, &other.mono))
    }
}

/// An element `Σ f_i s^i` of `S`, stored as its nonzero components.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SkewElement {
    comps: BTreeMap<u32, Polynomial>,
}

impl SkewElement {
    pub fn zero() -> SkewElement {
        SkewElement::default()
    }

    /// `f s^i`.
    pub fn homogeneous(f: Polynomial, i: u32) -> SkewElement {
        let mut comps = BTreeMap::new();
        if !f.is_zero() {
            comps.insert(i, f);
        }
        SkewElement { comps }
    }

    pub fn from_components(parts: impl IntoIterator<Item = (u32, Polynomial)>) -> SkewElement {
        let mut out = SkewElement::zero();
        for (i, f) in parts {
            out = out.add(&SkewElement::homogeneous(f, i));
        }
        out
    }

    pub fn components(&self) -> &BTreeMap<u32, Polynomial> {
        &self.comps
    }

    pub fn component(&self, i: u32) -> Option<&Polynomial> {
        self.comps.get(&i)
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    /// True for elements lying in a single `P s^i` (zero included).
    pub fn is_s_homogeneous(&self) -> bool {
        self.comps.len() <= 1
    }

    /// Largest s-degree of a component; `None` for zero.
    pub fn sdeg(&self) -> Option<u32> {
        self.comps.keys().next_back().copied()
    }

    fn top(&self) -> Result<(u32, &Polynomial), SkewError> {
        self.comps
            .iter()
            .next_back()
            .map(|(i, f)| (*i, f))
            .ok_or(SkewError::LeadingOfZero)
    }

    /// Leading monomial: the top s-degree component's leading monomial.
    pub fn lm(&self) -> Result<SkewMonomial, SkewError> {
        let (i, f) = self.top()?;
        Ok(SkewMonomial::new(f.lm().clone(), i))
    }

    pub fn lc(&self) -> Result<&FieldElement, SkewError> {
        Ok(self.top()?.1.lc())
    }

    /// Leading term as (coefficient, monomial).
    pub fn lt(&self) -> Result<(FieldElement, SkewMonomial), SkewError> {
        let (i, f) = self.top()?;
        Ok((f.lc().clone(), SkewMonomial::new(f.lm().clone(), i)))
    }

    pub fn add(&self, other: &SkewElement) -> SkewElement {
        let mut comps = self.comps.clone();
        for (i, g) in &other.comps {
            let sum = match comps.get(i) {
                Some(f) => f.add(g),
                None => g.clone(),
            };
            if sum.is_zero() {
                comps.remove(i);
            } else {
                comps.insert(*i, sum);
            }
        }
        SkewElement { comps }
    }

    pub fn neg(&self) -> SkewElement {
        SkewElement {
            comps: self.comps.iter().map(|(i, f)| (*i, f.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &SkewElement) -> SkewElement {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &FieldElement) -> SkewElement {
        if c.is_zero() {
            return SkewElement::zero();
        }
        SkewElement {
            comps: self.comps.iter().map(|(i, f)| (*i, f.scale(c))).collect(),
        }
    }

    /// `c·m·self` for `m ∈ Mon(P)`.
    pub fn mul_p_term(&self, c: &FieldElement, m: &Monomial) -> SkewElement {
        if c.is_zero() {
            return SkewElement::zero();
        }
        SkewElement {
            comps: self
                .comps
                .iter()
                .map(|(i, f)| (*i, f.mul_term(c, m)))
                .collect(),
        }
    }

    /// `self·s^k`, which only raises s-degrees.
    pub fn mul_s_right(&self, k: u32) -> SkewElement {
        SkewElement {
            comps: self.comps.iter().map(|(i, f)| (i + k, f.clone())).collect(),
        }
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> SkewElement {
        match self.lc() {
            Err(_) => self.clone(),
            Ok(c) if c.is_one() => self.clone(),
            Ok(c) => self.scale(&c.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Drops `s`: `Σ f_i s^i ↦ Σ f_i`.
    pub fn project(&self) -> Option<Polynomial> {
        let mut it = self.comps.values();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, f| acc.add(f)))
    }
}

impl fmt::Debug for SkewElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SkewElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Alphabet::default().write_skew(f, self)
    }
}

impl Alphabet {
    /// Writes `Σ f_i s^i` from the top s-degree down, e.g.
    /// `(x1(2)*x1(0) - x1(1))*s^2`.
    pub fn write_skew(&self, f: &mut impl fmt::Write, a: &SkewElement) -> fmt::Result {
        if a.is_zero() {
            return write!(f, "0");
        }
        for (k, (i, p)) in a.comps.iter().rev().enumerate() {
            let s_part = match *i {
                0 => None,
                1 => Some("s".to_string()),
                i => Some(format!("s^{i}")),
            };
            let single = p.len() == 1;
            let negative = single && p.lc().is_negative();
            if k > 0 {
                write!(f, "{}", if negative { " - " } else { " + " })?;
            } else if negative {
                write!(f, "-")?;
            }
            match s_part {
                None if single => write_terms(f, std::iter::once((&p.lc().abs_value(), mono_str(self, p))))?,
                None if k > 0 => {
                    write!(f, "(")?;
                    self.write_polynomial(f, p)?;
                    write!(f, ")")?;
                }
                None => self.write_polynomial(f, p)?,
                Some(s) if single => {
                    let c = p.lc().abs_value();
                    let m = &p.lm();
                    match (c.is_one(), m.is_one()) {
                        (true, true) => write!(f, "{s}")?,
                        (true, false) => write!(f, "{}*{s}", self.monomial_to_string(m))?,
                        (false, true) => write!(f, "{c}*{s}")?,
                        (false, false) => write!(f, "{c}*{}*{s}", self.monomial_to_string(m))?,
                    }
                }
                Some(s) => {
                    write!(f, "(")?;
                    self.write_polynomial(f, p)?;
                    write!(f, ")*{s}")?;
                }
            }
        }
        Ok(())
    }

    pub fn skew_to_string(&self, a: &SkewElement) -> String {
        let mut s = String::new();
        self.write_skew(&mut s, a).expect("writing to a string");
        s
    }
}

fn mono_str(alphabet: &Alphabet, p: &Polynomial) -> Option<String> {
    (!p.lm().is_one()).then(|| alphabet.monomial_to_string(p.lm()))
}

impl FieldElement {
    /// Absolute value for rationals; prime field elements are returned as is.
    pub fn abs_value(&self) -> FieldElement {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }
}

/// The ring `S`: the monomial ordering of `P` together with `σ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewRing {
    pub order: MonomialOrder,
    pub endo: MonomialEndomorphism,
}

impl SkewRing {
    pub fn new(order: MonomialOrder, endo: MonomialEndomorphism) -> SkewRing {
        SkewRing { order, endo }
    }

    /// `(f s^i)(g s^j) = f·σ^i(g) s^{i+j}`, extended bilinearly.
    pub fn mul(&self, a: &SkewElement, b: &SkewElement) -> SkewElement {
        let mut out = SkewElement::zero();
        for (i, f) in &a.comps {
            for (j, g) in &b.comps {
                let prod = f.mul(&self.endo.apply(*i, g));
                out = out.add(&SkewElement::homogeneous(prod, i + j));
            }
        }
        out
    }

    /// `s^k·a`.
    pub fn mul_s_left(&self, k: u32, a: &SkewElement) -> SkewElement {
        SkewElement {
            comps: a
                .comps
                .iter()
                .map(|(i, f)| (i + k, self.endo.apply(k, f)))
                .collect(),
        }
    }

    /// The product of two monomials: `(m s^i)(n s^j) = m σ^i(n) s^{i+j}`.
    pub fn mul_monomials(&self, v: &SkewMonomial, w: &SkewMonomial) -> SkewMonomial {
        SkewMonomial::new(
            v.mono.mul(&self.endo.apply_monomial(v.sdeg, &w.mono)),
            v.sdeg + w.sdeg,
        )
    }

    /// The quotient `a` with `w = a·v`, which exists iff `i ≤ j` and
    /// `σ^{j−i}(m) | n` for `v = m s^i`, `w = n s^j`.
    pub fn left_divides(&self, v: &SkewMonomial, w: &SkewMonomial) -> Option<SkewMonomial> {
        let k = w.sdeg.checked_sub(v.sdeg)?;
        let shifted = self.endo.apply_monomial(k, &v.mono);
        shifted
            .divide_into(&w.mono)
            .map(|q| SkewMonomial::new(q, k))
    }

    /// The quotient `q ∈ Mon(P)` with `w = q·v` and equal s-degrees.
    pub fn p_divides(&self, v: &SkewMonomial, w: &SkewMonomial) -> Option<Monomial> {
        if v.sdeg != w.sdeg {
            return None;
        }
        v.mono.divide_into(&w.mono)
    }

    /// A witness `(i, j, q)` with `w = q·s^i·v·s^j`, taking the smallest
    /// `i`.
    pub fn two_sided_divides(
        &self,
        v: &SkewMonomial,
        w: &SkewMonomial,
    ) -> Option<(u32, u32, Monomial)> {
        let gap = w.sdeg.checked_sub(v.sdeg)?;
        (0..=gap).find_map(|i| {
            self.endo
                .apply_monomial(i, &v.mono)
                .divide_into(&w.mono)
                .map(|q| (i, gap - i, q))
        })
    }

    /// Parses an element such as `(x1(2)*x1(0) - x1(1))*s^2`.
    pub fn parse(
        &self,
        src: &str,
        alphabet: &Alphabet,
        field: Field,
    ) -> Result<SkewElement, ParseError> {
        let e = parse_expr(src, alphabet)?;
        SkewEval { ring: self, field }.eval(&e)
    }
}

struct SkewEval<'a> {
    ring: &'a SkewRing,
    field: Field,
}

impl Evaluator for SkewEval<'_> {
    type Value = SkewElement;

    fn number(&self, num: &BigInt, den: &BigInt, column: usize) -> Result<SkewElement, ParseError> {
        let c = field_number(self.field, num, den, column)?;
        Ok(SkewElement::homogeneous(
            Polynomial::constant(c, self.ring.order),
            0,
        ))
    }

    fn letter(&self, letter: u32, place: Option<u32>, column: usize) -> Result<SkewElement, ParseError> {
        let place = place.ok_or_else(|| {
            ParseError::new(column, "a commutative variable needs a place, as in `x1(0)`")
        })?;
        Ok(SkewElement::homogeneous(
            Polynomial::term(
                self.field.one(),
                Monomial::var(crate::poly::Variable::new(letter, place)),
                self.ring.order,
            ),
            0,
        ))
    }

    fn skew(&self, _column: usize) -> Result<SkewElement, ParseError> {
        Ok(SkewElement::homogeneous(
            Polynomial::one(self.field, self.ring.order),
            1,
        ))
    }

    fn add(&self, a: &SkewElement, b: &SkewElement) -> SkewElement {
        a.add(b)
    }

    fn neg(&self, a: &SkewElement) -> SkewElement {
        a.neg()
    }

    fn mul(&self, a: &SkewElement, b: &SkewElement) -> SkewElement {
        self.ring.mul(a, b)
    }

    fn one(&self) -> SkewElement {
        SkewElement::homogeneous(Polynomial::one(self.field, self.ring.order), 0)
    }
}
