//! Seeded random instances shared by the integration tests.

#![allow(dead_code)]

pub mod invariants;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use skewgb::field::Field;
use skewgb::letterplace::{FreePolynomial, Word};
use skewgb::poly::{Monomial, MonomialOrder, Polynomial, Variable};
use skewgb::skew::SkewElement;

/// Shape of a random instance.
#[derive(Debug, Clone, Copy)]
pub struct Shape {
    pub letters: u32,
    /// Places are drawn from `min_place..=max_place`.
    pub min_place: u32,
    pub max_place: u32,
    pub max_degree: u32,
    pub max_terms: usize,
}

fn coefficient(rng: &mut ChaCha8Rng) -> i64 {
    let c = rng.gen_range(1..=3);
    if rng.gen_bool(0.5) {
        -c
    } else {
        c
    }
}

pub fn monomial(rng: &mut ChaCha8Rng, shape: &Shape, degree: u32) -> Monomial {
    Monomial::from_exponents((0..degree).map(|_| {
        let v = Variable::new(
            rng.gen_range(0..shape.letters),
            rng.gen_range(shape.min_place..=shape.max_place),
        );
        (v, 1)
    }))
}

/// A nonconstant polynomial with up to `max_terms` terms.
pub fn polynomial(rng: &mut ChaCha8Rng, shape: &Shape, order: MonomialOrder) -> Polynomial {
    loop {
        let n = rng.gen_range(1..=shape.max_terms);
        let terms = (0..n).map(|_| {
            let deg = rng.gen_range(1..=shape.max_degree);
            (Field::Rationals.from_i64(coefficient(rng)), monomial(rng, shape, deg))
        });
        let p = Polynomial::from_terms(terms, order);
        if !p.is_zero() && !p.is_constant() {
            return p;
        }
    }
}

/// A polynomial all of whose terms have the same degree.
pub fn homogeneous(rng: &mut ChaCha8Rng, shape: &Shape, degree: u32, order: MonomialOrder) -> Polynomial {
    loop {
        let n = rng.gen_range(1..=shape.max_terms);
        let terms = (0..n).map(|_| (Field::Rationals.from_i64(coefficient(rng)), monomial(rng, shape, degree)));
        let p = Polynomial::from_terms(terms, order);
        if !p.is_zero() {
            return p;
        }
    }
}

pub fn generators(rng: &mut ChaCha8Rng, shape: &Shape, order: MonomialOrder) -> Vec<Polynomial> {
    let n = rng.gen_range(1..=3);
    (0..n).map(|_| polynomial(rng, shape, order)).collect()
}

/// s-homogeneous elements `p·s^k` with `k ≤ max_sdeg`.
pub fn skew_generators(
    rng: &mut ChaCha8Rng,
    shape: &Shape,
    max_sdeg: u32,
    order: MonomialOrder,
) -> Vec<SkewElement> {
    let n = rng.gen_range(1..=3);
    (0..n)
        .map(|_| SkewElement::homogeneous(polynomial(rng, shape, order), rng.gen_range(0..=max_sdeg)))
        .collect()
}

/// Elements with one or two components of s-degree at most `max_sdeg`.
pub fn left_generators(
    rng: &mut ChaCha8Rng,
    shape: &Shape,
    max_sdeg: u32,
    order: MonomialOrder,
) -> Vec<SkewElement> {
    let n = rng.gen_range(1..=3);
    (0..n)
        .map(|_| {
            let parts = rng.gen_range(1..=2);
            SkewElement::from_components(
                (0..parts).map(|_| (rng.gen_range(0..=max_sdeg), polynomial(rng, shape, order))),
            )
        })
        .filter(|a| !a.is_zero())
        .collect()
}

/// Homogeneous free polynomials in `letters` letters, of degree at most
/// `max_degree`.
pub fn free_generators(
    rng: &mut ChaCha8Rng,
    letters: u32,
    max_degree: usize,
    max_terms: usize,
) -> Vec<FreePolynomial> {
    let n = rng.gen_range(1..=3);
    let mut out = Vec::new();
    while out.len() < n {
        let degree = rng.gen_range(1..=max_degree);
        let terms = rng.gen_range(1..=max_terms);
        let f = FreePolynomial::from_terms((0..terms).map(|_| {
            let w = Word::new((0..degree).map(|_| rng.gen_range(0..letters)).collect::<Vec<_>>());
            (Field::Rationals.from_i64(coefficient(rng)), w)
        }));
        if !f.is_zero() {
            out.push(f);
        }
    }
    out
}
