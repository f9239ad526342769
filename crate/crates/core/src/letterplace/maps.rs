use thiserror::Error;

use super::word::{FreePolynomial, Word};
use crate::field::FieldElement;
use crate::poly::{Monomial, MonomialOrder, Polynomial, Variable, Weight};
use crate::skew::{SkewElement, SkewMonomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LetterplaceError {
    #[error("monomial {0} is not the image of a word")]
    NotInV(String),
    #[error("component of s-degree {0} is not the image of words of length {0}")]
    NotInR(u32),
    #[error("the polynomial has a nonzero constant term")]
    ConstantPart,
}

/// `x_{i_1}(1)···x_{i_d}(d)`.
pub fn word_monomial(w: &Word) -> Monomial {
    Monomial::from_exponents(
        w.letters()
            .iter()
            .enumerate()
            .map(|(k, &l)| (Variable::new(l, k as u32 + 1), 1)),
    )
}

/// `ι(w) = x_{i_1}(1)···x_{i_d}(d)·s^d`.
pub fn iota_word(w: &Word) -> SkewMonomial {
    SkewMonomial::new(word_monomial(w), w.len() as u32)
}

/// The letterplace embedding `ι` of the free algebra into `S`.
pub fn iota(f: &FreePolynomial, order: MonomialOrder) -> SkewElement {
    let mut parts: std::collections::BTreeMap<u32, Vec<(FieldElement, Monomial)>> =
        Default::default();
    for (c, w) in f.terms() {
        parts
            .entry(w.len() as u32)
            .or_default()
            .push((c.clone(), word_monomial(w)));
    }
    SkewElement::from_components(
        parts
            .into_iter()
            .map(|(k, terms)| (k, Polynomial::from_terms(terms, order))),
    )
}

/// `ι′ = π∘ι`: the word `x_{i_1}···x_{i_d}` goes to `x_{i_1}(1)···x_{i_d}(d)`.
pub fn iota_prime(f: &FreePolynomial, order: MonomialOrder) -> Polynomial {
    Polynomial::from_terms(
        f.terms().iter().map(|(c, w)| (c.clone(), word_monomial(w))),
        order,
    )
}

/// Reads the word off a monomial of multidegree `1^d`.
pub fn monomial_word(m: &Monomial) -> Option<Word> {
    let d = m.degree();
    if !m.multidegree().is_ones(d) {
        return None;
    }
    // Exponents are sorted by place, and each place occurs once.
    Some(Word::new(
        m.exponents().iter().map(|(v, _)| v.letter).collect::<Vec<u32>>(),
    ))
}

/// Inverse of `ι′` on `V`.
pub fn iota_prime_inv(p: &Polynomial) -> Result<FreePolynomial, LetterplaceError> {
    let terms = p
        .terms()
        .iter()
        .map(|(c, m)| {
            monomial_word(m)
                .map(|w| (c.clone(), w))
                .ok_or_else(|| LetterplaceError::NotInV(m.to_string()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(FreePolynomial::from_terms(terms))
}

/// Inverse of `ι` on `R`.
pub fn iota_inv(a: &SkewElement) -> Result<FreePolynomial, LetterplaceError> {
    let mut out = FreePolynomial::zero();
    for (&k, p) in a.components() {
        if !p.monomials().all(|m| m.multidegree().is_ones(k)) {
            return Err(LetterplaceError::NotInR(k));
        }
        out = out.add(&iota_prime_inv(p)?);
    }
    Ok(out)
}

/// `π: S → P`, `s ↦ 1`.
pub fn pi(a: &SkewElement, order: MonomialOrder) -> Polynomial {
    a.components()
        .values()
        .fold(Polynomial::zero(order), |acc, p| acc.add(&p.with_order(order)))
}

/// `ξ(f) = Σ_i f_i s^i`, where `f_i` is the weight-`i` piece of `f`.
pub fn xi(f: &Polynomial) -> Result<SkewElement, LetterplaceError> {
    let mut parts = Vec::new();
    for (w, piece) in f.weight_components() {
        match w {
            Weight::NegInfinity => return Err(LetterplaceError::ConstantPart),
            Weight::Finite(i) => parts.push((i, piece)),
        }
    }
    Ok(SkewElement::from_components(parts))
}

/// Generator of the skew analogue attached to `f`: `f·s^{w(f)}`, with
/// `w(f)` the largest weight of a term. Agrees with [`xi`] on
/// weight-homogeneous `f`.
pub fn skew_lift(f: &Polynomial) -> Result<SkewElement, LetterplaceError> {
    match f.weight() {
        Weight::Finite(i) if !f.is_constant() => Ok(SkewElement::homogeneous(f.clone(), i)),
        _ => Err(LetterplaceError::ConstantPart),
    }
}

/// Membership in `R = ι(F)`: each component of s-degree `i` has
/// multidegree `1^i`.
pub fn in_r(a: &SkewElement) -> bool {
    a.components()
        .iter()
        .all(|(&k, p)| p.monomials().all(|m| m.multidegree().is_ones(k)))
}

/// Membership in `V = ι′(F)`: each monomial of degree `d` has multidegree
/// `1^d`.
pub fn in_v(p: &Polynomial) -> bool {
    p.monomials().all(|m| m.multidegree().is_ones(m.degree()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::endo::MonomialEndomorphism;
    use crate::field::Field;
    use crate::letterplace::parse_free_polynomial;
    use crate::skew::SkewRing;
    use crate::text::{parse_polynomial, Alphabet};

    fn free(s: &str) -> FreePolynomial {
        parse_free_polynomial(s, &Alphabet::default(), Field::Rationals).unwrap()
    }

    fn poly(s: &str) -> Polynomial {
        parse_polynomial(s, &Alphabet::default(), Field::Rationals, MonomialOrder::DegLex).unwrap()
    }

    fn ring() -> SkewRing {
        SkewRing::new(MonomialOrder::DegLex, MonomialEndomorphism::shift())
    }

    fn skew(s: &str) -> SkewElement {
        ring().parse(s, &Alphabet::default(), Field::Rationals).unwrap()
    }

    #[test]
    fn embeddings() {
        assert_eq!(
            iota(&free("x1*x2*x1"), MonomialOrder::DegLex),
            skew("x1(1)*x2(2)*x1(3)*s^3")
        );
        assert_eq!(iota(&free("1"), MonomialOrder::DegLex), skew("1"));
        assert_eq!(iota_prime(&free("x1*x2"), MonomialOrder::DegLex), poly("x1(1)*x2(2)"));
        assert_eq!(iota_prime_inv(&poly("x1(1)*x2(2)")).unwrap(), free("x1*x2"));
        assert!(iota_prime_inv(&poly("x1(1)^2")).is_err());
        let (u, v) = (free("x1*x2 - x2"), free("3*x2*x2*x1 + x1"));
        assert_eq!(
            iota(&u.mul(&v), MonomialOrder::DegLex),
            ring().mul(&iota(&u, MonomialOrder::DegLex), &iota(&v, MonomialOrder::DegLex))
        );
        assert_eq!(iota_inv(&iota(&u, MonomialOrder::DegLex)).unwrap(), u);
    }

    #[test]
    fn projections() {
        let o = MonomialOrder::Lex;
        let g1 = parse_polynomial("x(2)*x(0) - x(1)", &Alphabet::new(["x"]).unwrap(), Field::Rationals, o)
            .unwrap();
        let lifted = skew_lift(&g1).unwrap();
        assert_eq!(lifted, SkewElement::homogeneous(g1.clone(), 2));
        assert_eq!(pi(&lifted, o), g1);
        let split = xi(&g1).unwrap();
        assert_eq!(split.components().len(), 2);
        assert_eq!(pi(&split, o), g1);
        assert_eq!(xi(&poly("x1(1) + 2")), Err(LetterplaceError::ConstantPart));
    }

    #[test]
    fn membership_filters() {
        assert!(in_r(&skew("x1(1)*x2(2)*s^2")));
        assert!(!in_r(&skew("x1(1)^2*s^2")));
        assert!(!in_r(&skew("x1(2)*s")));
        assert!(in_v(&poly("x1(1)*x2(2) - x2(1)*x2(2) + x1(1)")));
        assert!(!in_v(&poly("x1(2)")));
    }
}
