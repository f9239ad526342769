//! Free-algebra bases through the letterplace embeddings.

mod common;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use skewgb::engine::GbConfig;
use skewgb::field::Field;
use skewgb::letterplace::{
    certify_free, compare_free, free_gbasis, free_gbasis2, parse_free_polynomial, FreePolynomial,
};
use skewgb::text::Alphabet;

/// Generators of a corpus problem file: the lines after the first blank line.
fn corpus_generators(src: &str) -> Vec<FreePolynomial> {
    src.split_once("\n\n")
        .expect("header and generators")
        .1
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| parse_free_polynomial(l, &Alphabet::default(), Field::Rationals).unwrap())
        .collect()
}

#[test]
fn c41w() {
    let h = corpus_generators(include_str!("../../../corpus/c41w.gb"));
    assert_eq!(h.len(), 6);
    for d in 3..=6 {
        let cfg = GbConfig::free(d);
        let r = free_gbasis(&h, &cfg).unwrap();
        if d <= 5 {
            let report = compare_free(&h, &r, &cfg).unwrap();
            assert!(report.matches, "{report:?}");
        }
        assert!(certify_free(&r, &cfg).passed());
    }
}

#[test]
fn c41w_both_embeddings_agree() {
    let h = corpus_generators(include_str!("../../../corpus/c41w.gb"));
    let a = free_gbasis(&h, &GbConfig::free(6)).unwrap();
    let b = free_gbasis2(&h, &GbConfig::free2(6)).unwrap();
    assert_eq!(a.basis, b.basis);
    let four = free_gbasis(&h, &GbConfig::free(6).with_threads(4)).unwrap();
    assert_eq!(a.basis, four.basis);
    assert_eq!(a.stats, four.stats);
}

#[test]
fn random_instances_against_oracle() {
    for seed in 5000..5000 + 200 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let letters = rng.gen_range(1..=3);
        let h = common::free_generators(&mut rng, letters, 3, 3);
        let d = rng.gen_range(2..=5);
        let cfg = GbConfig::free(d);
        let a = free_gbasis(&h, &cfg).unwrap();
        let b = free_gbasis2(&h, &GbConfig::free2(d)).unwrap();
        assert_eq!(a.basis, b.basis, "seed {seed}: {h:?}");
        let cert = certify_free(&a, &cfg);
        assert!(cert.passed(), "seed {seed}: {:?}", cert.failures);
        let report = compare_free(&h, &a, &cfg).unwrap();
        assert!(report.matches, "seed {seed}: {h:?} {report:?}");
    }
}
