//! Fraction-free reduction over `ℚ`. Coefficients are kept as integers and
//! the rational scalar relating the integer form to the true remainder is
//! tracked separately, so no gcd is taken per coefficient operation.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::field::FieldElement;
use crate::poly::{Monomial, MonomialOrder, Polynomial};

/// Content removal runs after this many reduction steps.
const CONTENT_PERIOD: usize = 8;

/// A polynomial with integer coefficients, terms sorted descending.
#[derive(Debug, Clone)]
pub(crate) struct IntPoly {
    terms: Vec<(BigInt, Monomial)>,
}

impl IntPoly {
    /// The primitive integer multiple `λ·p` of a rational polynomial,
    /// returned with `λ`. `None` if `p` is not over `ℚ`.
    pub fn primitive(p: &Polynomial) -> Option<(IntPoly, BigRational)> {
        let mut den = BigInt::one();
        for (c, _) in p.terms() {
            let FieldElement::Rational(q) = c else { return None };
            den = den.lcm(q.denom());
        }
        let mut terms: Vec<(BigInt, Monomial)> = p
            .terms()
            .iter()
            .map(|(c, m)| match c {
                FieldElement::Rational(q) => (q.numer() * (&den / q.denom()), m.clone()),
                FieldElement::Modular { .. } => unreachable!(),
            })
            .collect();
        let content = content(&terms);
        if !content.is_one() && !content.is_zero() {
            for (c, _) in &mut terms {
                *c /= &content;
            }
        }
        let lambda = if content.is_zero() {
            BigRational::one()
        } else {
            BigRational::new(den, content)
        };
        Some((IntPoly { terms }, lambda))
    }
}

fn content(terms: &[(BigInt, Monomial)]) -> BigInt {
    let mut g = BigInt::zero();
    for (c, _) in terms {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Reduction state: the rational remainder equals `mu · poly`.
pub(crate) struct Remainder {
    order: MonomialOrder,
    terms: Vec<(BigInt, Monomial)>,
    mu: BigRational,
    steps: usize,
}

impl Remainder {
    /// `None` unless `p` is over `ℚ`.
    pub fn new(p: &Polynomial) -> Option<Remainder> {
        let (ip, lambda) = IntPoly::primitive(p)?;
        Some(Remainder {
            order: p.order(),
            terms: ip.terms,
            mu: lambda.recip(),
            steps: 0,
        })
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn monomial(&self, i: usize) -> &Monomial {
        &self.terms[i].1
    }

    /// Cancels term `i` against `q·r`, where `lm(q·r)` equals its monomial.
    /// Terms before `i` are only rescaled.
    pub fn cancel(&mut self, i: usize, q: &Monomial, r: &IntPoly) {
        let a = &self.terms[i].0;
        let b = &r.terms[0].0;
        let g = a.gcd(b);
        let mut fa = a / &g;
        let mut fb = b / &g;
        if fb.is_negative() {
            fa = -fa;
            fb = -fb;
        }
        let order = self.order;
        let mut out: Vec<(BigInt, Monomial)> =
            Vec::with_capacity(self.terms.len() + r.terms.len());
        let scale = |c: &BigInt| if fb.is_one() { c.clone() } else { c * &fb };
        out.extend(self.terms[..i].iter().map(|(c, m)| (scale(c), m.clone())));
        let rest = &self.terms[i + 1..];
        let (mut j, mut k) = (0, 1);
        let mut pending = r.terms.get(k).map(|(c, m)| (c, m.mul(q)));
        while j < rest.len() {
            let Some((rc, rm)) = pending.take() else { break };
            match order.compare(&rest[j].1, &rm) {
                Ordering::Greater => {
                    out.push((scale(&rest[j].0), rest[j].1.clone()));
                    j += 1;
                    pending = Some((rc, rm));
                }
                Ordering::Less => {
                    out.push((-(rc * &fa), rm));
                    k += 1;
                    pending = r.terms.get(k).map(|(c, m)| (c, m.mul(q)));
                }
                Ordering::Equal => {
                    let s = scale(&rest[j].0) - rc * &fa;
                    if !s.is_zero() {
                        out.push((s, rm));
                    }
                    j += 1;
                    k += 1;
                    pending = r.terms.get(k).map(|(c, m)| (c, m.mul(q)));
                }
            }
        }
        out.extend(rest[j..].iter().map(|(c, m)| (scale(c), m.clone())));
        if let Some((rc, rm)) = pending {
            out.push((-(rc * &fa), rm));
            k += 1;
            out.extend(r.terms[k.min(r.terms.len())..].iter().map(|(c, m)| (-(c * &fa), m.mul(q))));
        }
        self.terms = out;
        self.mu /= BigRational::from_integer(fb);
        self.steps += 1;
        if self.steps % CONTENT_PERIOD == 0 {
            self.remove_content();
        }
    }

    fn remove_content(&mut self) {
        let g = content(&self.terms);
        if g.is_zero() || g.is_one() {
            return;
        }
        for (c, _) in &mut self.terms {
            *c /= &g;
        }
        self.mu *= BigRational::from_integer(g);
    }

    /// The rational remainder.
    pub fn finish(mut self) -> Polynomial {
        self.remove_content();
        let mu = self.mu;
        Polynomial::from_sorted_terms(
            self.terms
                .into_iter()
                .map(|(c, m)| (FieldElement::Rational(BigRational::from_integer(c) * &mu), m))
                .collect(),
            self.order,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::text::{parse_polynomial, Alphabet};

    fn p(s: &str) -> Polynomial {
        let a = Alphabet::new(["x", "y"]).unwrap();
        parse_polynomial(s, &a, Field::Rationals, MonomialOrder::DegLex).unwrap()
    }

    #[test]
    fn primitive_form() {
        let (ip, lambda) = IntPoly::primitive(&p("2/3*x(0) - 4/9*y(0)")).unwrap();
        let mut coeffs: Vec<i64> = ip.terms.iter().map(|(c, _)| c.try_into().unwrap()).collect();
        coeffs.sort();
        assert_eq!(coeffs, [-2, 3]);
        assert_eq!(lambda, BigRational::new(9.into(), 2.into()));
    }

    #[test]
    fn cancel_matches_rational_arithmetic() {
        let f = p("1/2*x(0)^2 + 3*x(0)*y(0) - 5/7*y(0)^2");
        let r = p("3/4*x(0) + 2/5*y(0)");
        let (ir, _) = IntPoly::primitive(&r).unwrap();
        let mut rem = Remainder::new(&f).unwrap();
        let q = r.lm().divide_into(f.lm()).unwrap();
        rem.cancel(0, &q, &ir);
        let c = f.lc().checked_div(r.lc()).unwrap();
        let expect = f.add_scaled(&-&c, &q, &r);
        assert_eq!(rem.finish(), expect);
    }
}
