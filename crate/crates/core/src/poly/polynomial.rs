use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use super::{Monomial, MonomialOrder, Weight};
use crate::field::{Field, FieldElement};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("the zero polynomial has no leading term")]
    LeadingOfZero,
}

/// A polynomial of `P`: nonzero terms sorted strictly descending under the
/// polynomial's monomial ordering. The first term is the leading term.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    order: MonomialOrder,
    terms: Vec<(FieldElement, Monomial)>,
}

impl Polynomial {
    pub fn zero(order: MonomialOrder) -> Polynomial {
        Polynomial {
            order,
            terms: Vec::new(),
        }
    }

    pub fn constant(c: FieldElement, order: MonomialOrder) -> Polynomial {
        Polynomial::term(c, Monomial::one(), order)
    }

    pub fn one(field: Field, order: MonomialOrder) -> Polynomial {
        Polynomial::constant(field.one(), order)
    }

    pub fn term(c: FieldElement, m: Monomial, order: MonomialOrder) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(order);
        }
        Polynomial {
            order,
            terms: vec![(c, m)],
        }
    }

    /// Normalizes an arbitrary list of terms: sorts, merges equal monomials
    /// and drops zero coefficients.
    pub fn from_terms(
        terms: impl IntoIterator<Item = (FieldElement, Monomial)>,
        order: MonomialOrder,
    ) -> Polynomial {
        let mut terms: Vec<(FieldElement, Monomial)> = terms.into_iter().collect();
        terms.sort_by(|a, b| order.compare(&b.1, &a.1));
        let mut out: Vec<(FieldElement, Monomial)> = Vec::with_capacity(terms.len());
        for (c, m) in terms {
            match out.last_mut() {
                Some((d, n)) if *n == m => *d = &*d + &c,
                _ => {
                    if let Some((d, _)) = out.last() {
                        if d.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((c, m));
                }
            }
        }
        if matches!(out.last(), Some((d, _)) if d.is_zero()) {
            out.pop();
        }
        Polynomial { order, terms: out }
    }

    /// Wraps terms that are already sorted strictly descending with nonzero
    /// coefficients.
    pub(crate) fn from_sorted_terms(
        terms: Vec<(FieldElement, Monomial)>,
        order: MonomialOrder,
    ) -> Polynomial {
        debug_assert!(terms.iter().all(|(c, _)| !c.is_zero()));
        debug_assert!(terms
            .windows(2)
            .all(|w| order.compare(&w[0].1, &w[1].1) == Ordering::Greater));
        Polynomial { order, terms }
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn terms(&self) -> &[(FieldElement, Monomial)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(FieldElement, Monomial)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True for a nonzero constant.
    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].1.is_one()
    }

    /// The leading term as (coefficient, monomial).
    pub fn leading(&self) -> Result<(&FieldElement, &Monomial), PolyError> {
        self.terms
            .first()
            .map(|(c, m)| (c, m))
            .ok_or(PolyError::LeadingOfZero)
    }

    /// Leading monomial. Panics on zero; use [`Polynomial::leading`] to
    /// handle that case.
    pub fn lm(&self) -> &Monomial {
        &self.terms.first().expect("leading monomial of zero").1
    }

    pub fn lc(&self) -> &FieldElement {
        &self.terms.first().expect("leading coefficient of zero").0
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&FieldElement> {
        self.terms
            .binary_search_by(|(_, n)| self.order.compare(m, n))
            .ok()
            .map(|i| &self.terms[i].0)
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.iter().map(|(_, m)| m)
    }

    /// Re-sorts the terms under another ordering.
    pub fn with_order(&self, order: MonomialOrder) -> Polynomial {
        if order == self.order {
            return self.clone();
        }
        Polynomial::from_terms(self.terms.iter().cloned(), order)
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.merge(other, None)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let minus_one = match other.terms.first() {
            None => return self.clone(),
            Some((c, _)) => -&c.field().one(),
        };
        self.merge(other, Some((&minus_one, &Monomial::one())))
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            order: self.order,
            terms: self.terms.iter().map(|(c, m)| (-c, m.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &FieldElement) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.order);
        }
        Polynomial {
            order: self.order,
            terms: self.terms.iter().map(|(d, m)| (d * c, m.clone())).collect(),
        }
    }

    /// `c·m·self`. Multiplying by a monomial preserves the term order.
    pub fn mul_term(&self, c: &FieldElement, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.order);
        }
        Polynomial {
            order: self.order,
            terms: self.terms.iter().map(|(d, n)| (d * c, n.mul(m))).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero(self.order);
        for (c, m) in &other.terms {
            acc = acc.merge(self, Some((c, m)));
        }
        acc
    }

    /// `self + c·m·other` in a single merge pass.
    pub fn add_scaled(&self, c: &FieldElement, m: &Monomial, other: &Polynomial) -> Polynomial {
        self.merge(other, Some((c, m)))
    }

    /// Divides by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            None => self.clone(),
            Some((c, _)) if c.is_one() => self.clone(),
            Some((c, _)) => self.scale(&c.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Applies a map on monomials that need not preserve the ordering and
    /// renormalizes.
    pub fn map_monomials(&self, f: impl Fn(&Monomial) -> Monomial) -> Polynomial {
        Polynomial::from_terms(self.terms.iter().map(|(c, m)| (c.clone(), f(m))), self.order)
    }

    /// Like [`Polynomial::map_monomials`] for maps known to be strictly
    /// monotone, which keeps the terms sorted.
    pub(crate) fn map_monomials_monotone(&self, f: impl Fn(&Monomial) -> Monomial) -> Polynomial {
        Polynomial::from_sorted_terms(
            self.terms.iter().map(|(c, m)| (c.clone(), f(m))).collect(),
            self.order,
        )
    }

    /// The largest total degree of a term; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(_, m)| m.degree()).max()
    }

    /// True if every term has the same total degree (zero counts as
    /// homogeneous).
    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.iter().map(|(_, m)| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// The largest weight of a monomial of `self` (`−∞` for zero and for
    /// constants).
    pub fn weight(&self) -> Weight {
        self.terms
            .iter()
            .map(|(_, m)| m.weight())
            .max()
            .unwrap_or(Weight::NegInfinity)
    }

    pub fn is_weight_homogeneous(&self) -> bool {
        let mut ws = self.terms.iter().map(|(_, m)| m.weight());
        match ws.next() {
            None => true,
            Some(w) => ws.all(|v| v == w),
        }
    }

    /// Splits `self` into weight-homogeneous pieces.
    pub fn weight_components(&self) -> BTreeMap<Weight, Polynomial> {
        let mut parts: BTreeMap<Weight, Vec<(FieldElement, Monomial)>> = BTreeMap::new();
        for (c, m) in &self.terms {
            parts.entry(m.weight()).or_default().push((c.clone(), m.clone()));
        }
        parts
            .into_iter()
            .map(|(w, terms)| (w, Polynomial::from_sorted_terms(terms, self.order)))
            .collect()
    }

    /// Merges `self + c·m·other`, or `self + other` when `scale` is `None`.
    fn merge(&self, other: &Polynomial, scale: Option<(&FieldElement, &Monomial)>) -> Polynomial {
        let order = self.order;
        let scaled = |(d, n): &(FieldElement, Monomial)| match scale {
            None => (d.clone(), n.clone()),
            Some((c, m)) => (d * c, n.mul(m)),
        };
        if let Some((c, _)) = scale {
            if c.is_zero() {
                return self.clone();
            }
        }
        let a = &self.terms;
        let b = &other.terms;
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let mut pending = b.first().map(scaled);
        while i < a.len() {
            let Some((bc, bm)) = pending.take() else { break };
            match order.compare(&a[i].1, &bm) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                    pending = Some((bc, bm));
                }
                Ordering::Less => {
                    out.push((bc, bm));
                    j += 1;
                    pending = b.get(j).map(scaled);
                }
                Ordering::Equal => {
                    let s = &a[i].0 + &bc;
                    if !s.is_zero() {
                        out.push((s, bm));
                    }
                    i += 1;
                    j += 1;
                    pending = b.get(j).map(scaled);
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        if let Some(t) = pending {
            out.push(t);
            out.extend(b[j + 1..].iter().map(scaled));
        }
        Polynomial { order, terms: out }
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Renders with the default letter names, e.g. `x1(2)*x1(0) - x1(1)`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::text::Alphabet::default().write_polynomial(f, self)
    }
}
