//! Randomized algebraic invariants, shared by the `invariants` tests and the
//! acceptance run. Each suite runs [`CASES`] cases and reports the first
//! counterexample.

use std::cmp::Ordering;

use proptest::prelude::*;
use proptest::test_runner::{TestCaseError, TestRunner};
use skewgb::endo::MonomialEndomorphism;
use skewgb::engine::spoly;
use skewgb::field::Field;
use skewgb::letterplace::{in_r, iota, iota_prime, iota_prime_inv, xi, FreePolynomial, Word};
use skewgb::poly::{Monomial, MonomialOrder, Polynomial, Variable, Weight};
use skewgb::skew::{SkewElement, SkewRing};

pub const CASES: u32 = 10_000;

fn run<S: Strategy>(
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    let config = ProptestConfig {
        cases: CASES,
        failure_persistence: None,
        ..ProptestConfig::default()
    };
    TestRunner::new(config)
        .run(&strategy, test)
        .map_err(|e| e.to_string())
}

fn monomial() -> impl Strategy<Value = Monomial> {
    prop::collection::vec((0u32..3, 0u32..5, 1u32..3), 0..4).prop_map(|vs| {
        Monomial::from_exponents(vs.into_iter().map(|(l, p, e)| (Variable::new(l, p), e)))
    })
}

fn order() -> impl Strategy<Value = MonomialOrder> {
    prop_oneof![Just(MonomialOrder::Lex), Just(MonomialOrder::DegLex)]
}

fn endo() -> impl Strategy<Value = MonomialEndomorphism> {
    prop_oneof![
        Just(MonomialEndomorphism::shift()),
        Just(MonomialEndomorphism::power(2).unwrap()),
    ]
}

fn polynomial(order: MonomialOrder) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((-3i64..=3, monomial()), 1..4).prop_map(move |ts| {
        Polynomial::from_terms(
            ts.into_iter().map(|(c, m)| (Field::Rationals.from_i64(c), m)),
            order,
        )
    })
}

fn nonzero_polynomial(order: MonomialOrder) -> impl Strategy<Value = Polynomial> {
    polynomial(order).prop_filter("nonzero", |p| !p.is_zero())
}

fn skew_element(order: MonomialOrder) -> impl Strategy<Value = SkewElement> {
    prop::collection::vec((0u32..3, polynomial(order)), 1..3).prop_map(SkewElement::from_components)
}

fn word() -> impl Strategy<Value = Word> {
    prop::collection::vec(0u32..3, 0..4).prop_map(Word::new)
}

fn free_polynomial() -> impl Strategy<Value = FreePolynomial> {
    prop::collection::vec((-3i64..=3, word()), 0..4).prop_map(|ts| {
        FreePolynomial::from_terms(ts.into_iter().map(|(c, w)| (Field::Rationals.from_i64(c), w)))
    })
}

fn homogeneous_free_polynomial() -> impl Strategy<Value = FreePolynomial> {
    (1usize..4).prop_flat_map(|len| {
        prop::collection::vec((-3i64..=3, prop::collection::vec(0u32..3, len)), 1..4).prop_map(|ts| {
            FreePolynomial::from_terms(
                ts.into_iter().map(|(c, w)| (Field::Rationals.from_i64(c), Word::new(w))),
            )
        })
    })
}

/// Totality, transitivity, multiplicativity and `1 ⪯ m`.
pub fn ordering_axioms() -> Result<(), String> {
    run((order(), monomial(), monomial(), monomial()), |(o, a, b, c)| {
        prop_assert_eq!(o.compare(&a, &b), o.compare(&b, &a).reverse());
        prop_assert_eq!(o.compare(&a, &b) == Ordering::Equal, a == b);
        if o.compare(&a, &b) != Ordering::Greater && o.compare(&b, &c) != Ordering::Greater {
            prop_assert_ne!(o.compare(&a, &c), Ordering::Greater);
        }
        prop_assert_eq!(o.compare(&a.mul(&c), &b.mul(&c)), o.compare(&a, &b));
        prop_assert_ne!(o.compare(&Monomial::one(), &a), Ordering::Greater);
        Ok(())
    })
}

pub fn gcd_lcm_divisibility() -> Result<(), String> {
    run((monomial(), monomial()), |(m, n)| {
        let (g, l) = (m.gcd(&n), m.lcm(&n));
        prop_assert_eq!(g.mul(&l), m.mul(&n));
        prop_assert!(g.divides(&m) && g.divides(&n));
        prop_assert!(m.divides(&l) && n.divides(&l));
        prop_assert_eq!(m.divides(&n), m.lcm(&n) == n);
        prop_assert_eq!(m.is_coprime(&n), g.is_one());
        if let Some(q) = m.divide_into(&n) {
            prop_assert_eq!(q.mul(&m), n);
        }
        Ok(())
    })
}

/// `σ^k` preserves gcd, lcm, divisibility and the ordering, and `m ⪯ σ(m)`.
pub fn endomorphism_lattice_map() -> Result<(), String> {
    run((endo(), order(), 0u32..3, monomial(), monomial()), |(s, o, k, m, n)| {
        let (sm, sn) = (s.apply_monomial(k, &m), s.apply_monomial(k, &n));
        prop_assert_eq!(sm.gcd(&sn), s.apply_monomial(k, &m.gcd(&n)));
        prop_assert_eq!(sm.lcm(&sn), s.apply_monomial(k, &m.lcm(&n)));
        prop_assert_eq!(sm.divides(&sn), m.divides(&n));
        prop_assert_eq!(o.compare(&sm, &sn), o.compare(&m, &n));
        prop_assert_ne!(o.compare(&m, &s.apply_monomial(1, &m)), Ordering::Greater);
        Ok(())
    })
}

pub fn skew_associativity() -> Result<(), String> {
    let elements = order().prop_flat_map(|o| (Just(o), skew_element(o), skew_element(o), skew_element(o)));
    run((endo(), elements), |(s, (o, a, b, c))| {
        let ring = SkewRing::new(o, s);
        prop_assert_eq!(ring.mul(&ring.mul(&a, &b), &c), ring.mul(&a, &ring.mul(&b, &c)));
        Ok(())
    })
}

/// `lm(ab) = lm(a)·lm(b)`.
pub fn leading_monomials_multiply() -> Result<(), String> {
    let elements = order().prop_flat_map(|o| (Just(o), skew_element(o), skew_element(o)));
    run((endo(), elements), |(s, (o, a, b))| {
        if a.is_zero() || b.is_zero() {
            return Ok(());
        }
        let ring = SkewRing::new(o, s);
        let ab = ring.mul(&a, &b);
        prop_assert_eq!(ab.lm().unwrap(), ring.mul_monomials(&a.lm().unwrap(), &b.lm().unwrap()));
        Ok(())
    })
}

/// `spoly(s^i f, s^j g) = s^i spoly(f, s^{j−i} g)` and
/// `spoly(f s^i, g s^j) = spoly(f, g s^{j−i}) s^i`.
pub fn spoly_shift_identities() -> Result<(), String> {
    let pair = order().prop_flat_map(|o| (Just(o), nonzero_polynomial(o), nonzero_polynomial(o)));
    run((endo(), pair, 0u32..3, 0u32..3, 0u32..3), |(s, (o, f, g), a, b, i)| {
        let ring = SkewRing::new(o, s);
        // s-degrees k ≥ l, and j ≥ i with k + i = l + j.
        let (k, l) = (a.max(b), a.min(b));
        let j = k - l + i;
        let (f, g) = (SkewElement::homogeneous(f, k), SkewElement::homogeneous(g, l));
        let left = spoly(&ring.mul_s_left(i, &f), &ring.mul_s_left(j, &g)).unwrap();
        let inner = spoly(&f, &ring.mul_s_left(j - i, &g)).unwrap();
        prop_assert_eq!(left, ring.mul_s_left(i, &inner));
        let right = spoly(&f.mul_s_right(i), &g.mul_s_right(j)).unwrap();
        let inner = spoly(&f, &g.mul_s_right(j - i)).unwrap();
        prop_assert_eq!(right, inner.mul_s_right(i));
        Ok(())
    })
}

/// `ι` is an injective algebra map into `R`, `ι′⁻¹ ι′ = id`, words keep
/// their length as s-degree, and `ι = ξ ι′` on homogeneous elements.
pub fn letterplace_embedding() -> Result<(), String> {
    let inputs = (order(), free_polynomial(), free_polynomial(), word(), homogeneous_free_polynomial());
    run(inputs, |(o, u, v, w, h)| {
        let ring = SkewRing::new(o, MonomialEndomorphism::shift());
        let (a, b) = (iota(&u, o), iota(&v, o));
        let ab = ring.mul(&a, &b);
        prop_assert_eq!(&iota(&u.mul(&v), o), &ab);
        prop_assert!(in_r(&a) && in_r(&ab));
        prop_assert_eq!(a == b, u == v);
        prop_assert_eq!(iota_prime_inv(&iota_prime(&u, o)).unwrap(), u);
        let word = FreePolynomial::word(Field::Rationals, w.clone());
        prop_assert_eq!(iota(&word, o).sdeg(), Some(w.len() as u32));
        prop_assert_eq!(xi(&iota_prime(&h, o)).unwrap(), iota(&h, o));
        Ok(())
    })
}

/// `w(lcm(m, n)) = max(w(m), w(n))`, and `σ^k m | n` implies
/// `w(n) − k ≥ w(m)`.
pub fn weight_lemmas() -> Result<(), String> {
    run((monomial(), monomial(), monomial(), 0u32..4), |(m, q, n, k)| {
        prop_assert_eq!(m.lcm(&n).weight(), m.weight().max(n.weight()));
        prop_assert_eq!(m.mul(&n).weight(), m.weight().max(n.weight()));
        let sm = MonomialEndomorphism::shift().apply_monomial(k, &m);
        prop_assert_eq!(sm.weight(), m.weight().add(k));
        for n in [q.mul(&sm), n] {
            if sm.divides(&n) {
                match (n.weight(), m.weight()) {
                    (Weight::Finite(wn), Weight::Finite(wm)) => prop_assert!(wn - k >= wm),
                    (_, Weight::NegInfinity) => {}
                    (Weight::NegInfinity, Weight::Finite(_)) => prop_assert!(false),
                }
            }
        }
        Ok(())
    })
}

/// Products of elements of `R` stay in `R`, including non-homogeneous ones.
pub fn letterplace_subalgebra() -> Result<(), String> {
    run((order(), free_polynomial(), free_polynomial()), |(o, u, v)| {
        let ring = SkewRing::new(o, MonomialEndomorphism::shift());
        prop_assert!(in_r(&ring.mul(&iota(&u, o), &iota(&v, o))));
        Ok(())
    })
}

/// Every suite, by name.
pub const SUITES: [(&str, fn() -> Result<(), String>); 9] = [
    ("ordering axioms", ordering_axioms),
    ("gcd and lcm", gcd_lcm_divisibility),
    ("endomorphism lattice map", endomorphism_lattice_map),
    ("skew associativity", skew_associativity),
    ("lm multiplicativity", leading_monomials_multiply),
    ("spoly shift identities", spoly_shift_identities),
    ("letterplace embedding", letterplace_embedding),
    ("letterplace subalgebra", letterplace_subalgebra),
    ("weight lemmas", weight_lemmas),
];
