//! The main algorithms against the brute-force oracle on seeded random
//! instances, with post-hoc certification of every basis.

mod common;

use common::Shape;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use skewgb::endo::MonomialEndomorphism;
use skewgb::engine::{
    certify_left, certify_sigma, certify_skew, compare_left, compare_sigma, compare_skew,
    left_gbasis, sigma_gbasis, skew_gbasis, GbConfig,
};
use skewgb::poly::MonomialOrder;

const INSTANCES: u64 = 60;

fn random_order(rng: &mut ChaCha8Rng) -> MonomialOrder {
    if rng.gen_bool(0.5) {
        MonomialOrder::Lex
    } else {
        MonomialOrder::DegLex
    }
}

/// Binomial generators under the shift. Random trinomials routinely make the
/// lex elimination in places 0 and 1 blow up, in the main run and the oracle
/// alike.
fn sigma_shift(order: MonomialOrder, seed_base: u64) {
    for seed in seed_base..seed_base + INSTANCES {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let letters = rng.gen_range(1..=3);
        let shape = Shape { letters, min_place: 0, max_place: 2, max_degree: 3, max_terms: 2 };
        let h = common::generators(&mut rng, &shape, order);
        let cfg = GbConfig::sigma(rng.gen_range(2..=5)).with_order(order);
        let r = sigma_gbasis(&h, &cfg).unwrap();
        let cert = certify_sigma(&r, &cfg);
        assert!(cert.passed(), "seed {seed}: {:?}", cert.failures);
        let report = compare_sigma(&h, &r, &cfg).unwrap();
        assert!(report.matches, "seed {seed}: {h:?} {report:?}");
    }
}

#[test]
fn sigma_shift_lex() {
    sigma_shift(MonomialOrder::Lex, 0);
}

#[test]
fn sigma_shift_deglex() {
    sigma_shift(MonomialOrder::DegLex, 500);
}

#[test]
fn sigma_power() {
    for seed in 1000..1000 + INSTANCES {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let letters = rng.gen_range(1..=3);
        let shape = Shape { letters, min_place: 0, max_place: 1, max_degree: 2, max_terms: 3 };
        let h = common::generators(&mut rng, &shape, MonomialOrder::DegLex);
        let cfg = GbConfig::sigma(rng.gen_range(1..=2))
            .with_order(MonomialOrder::DegLex)
            .with_endo(MonomialEndomorphism::power(2).unwrap());
        let r = sigma_gbasis(&h, &cfg).unwrap();
        let cert = certify_sigma(&r, &cfg);
        assert!(cert.passed(), "seed {seed}: {:?}", cert.failures);
        let report = compare_sigma(&h, &r, &cfg).unwrap();
        assert!(report.matches, "seed {seed}: {h:?} {report:?}");
    }
}

#[test]
fn two_sided() {
    for seed in 2000..2000 + INSTANCES {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let letters = rng.gen_range(1..=3);
        let shape = Shape { letters, min_place: 0, max_place: 1, max_degree: 2, max_terms: 3 };
        let order = random_order(&mut rng);
        let h = common::skew_generators(&mut rng, &shape, 2, order);
        let cfg = GbConfig::skew(rng.gen_range(2..=4)).with_order(order);
        let r = skew_gbasis(&h, &cfg).unwrap();
        let cert = certify_skew(&r, &cfg);
        assert!(cert.passed(), "seed {seed}: {:?}", cert.failures);
        let report = compare_skew(&h, &r, &cfg).unwrap();
        assert!(report.matches, "seed {seed}: {h:?} {report:?}");
    }
}

#[test]
fn left() {
    for seed in 3000..3000 + INSTANCES {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let letters = rng.gen_range(1..=2);
        let shape = Shape { letters, min_place: 0, max_place: 1, max_degree: 2, max_terms: 2 };
        let order = random_order(&mut rng);
        let h = common::left_generators(&mut rng, &shape, 2, order);
        let cfg = GbConfig::left(rng.gen_range(2..=3)).with_order(order);
        let r = left_gbasis(&h, &cfg).unwrap();
        let cert = certify_left(&r, &cfg);
        assert!(cert.passed(), "seed {seed}: {:?}", cert.failures);
        let report = compare_left(&h, &r, &cfg).unwrap();
        assert!(report.matches, "seed {seed}: {h:?} {report:?}");
    }
}

#[test]
fn results_do_not_depend_on_thread_count() {
    for seed in 4000..4010 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let shape = Shape { letters: 2, min_place: 0, max_place: 2, max_degree: 3, max_terms: 2 };
        let h = common::generators(&mut rng, &shape, MonomialOrder::Lex);
        let base = GbConfig::sigma(4).with_trace(true);
        let one = sigma_gbasis(&h, &base.clone().with_threads(1)).unwrap();
        let four = sigma_gbasis(&h, &base.with_threads(4)).unwrap();
        assert_eq!(one.basis, four.basis, "seed {seed}");
        assert_eq!(one.trace, four.trace, "seed {seed}");
        assert_eq!(one.stats, four.stats, "seed {seed}");
    }
}
