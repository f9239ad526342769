//! Homogeneous Gröbner bases of two-sided ideals of the free algebra.
//!
//! [`free_gbasis`] works in `P` on the letterplace images `ι′(h)` and only
//! forms the pairs `(f, σ^b g)` whose lcm has multidegree `1^w`, `w` its
//! weight; these are exactly the pairs whose S-polynomial lies in `V`, and
//! they correspond to overlaps of words. [`free_gbasis2`] does the same
//! inside `S` on the images `ι(h)`, keeping the S-polynomials that lie in
//! `R`. A word of length `k` has weight `k` and s-degree `k`, so both runs
//! are truncated at word length `d`.

use std::collections::BTreeSet;

use super::maps::{iota_prime, iota_prime_inv};
use super::word::FreePolynomial;
use crate::engine::graded::{complete, interreduce_graded, PairFilter};
use crate::engine::{
    certify_graded, check_endomorphism, engine_spec, expect_mode, oracle_gbasis_truncated,
    CertReport, GbConfig, GbError, GbResult, Mode, OracleInput, OracleProblem, OracleReport,
};
use crate::engine::{graded_lm_set, oracle_lm_set};
use crate::poly::{Monomial, Polynomial};
use crate::skew::SkewElement;

fn check_free_config(cfg: &GbConfig, mode: Mode) -> Result<(), GbError> {
    expect_mode(cfg, mode)?;
    if !cfg.endo.is_shift() {
        return Err(GbError::NeedsShift);
    }
    check_endomorphism(cfg)
}

/// Letterplace images of the nonzero inputs, with their degrees. Inputs
/// longer than the bound are dropped with a warning.
fn letterplace_inputs(
    h: &[FreePolynomial],
    cfg: &GbConfig,
    warnings: &mut Vec<String>,
) -> Result<Vec<(Polynomial, u32)>, GbError> {
    let d = cfg.degree_bound;
    let mut out = Vec::new();
    for (i, f) in h.iter().enumerate() {
        if f.is_zero() {
            continue;
        }
        if !f.is_homogeneous() {
            return Err(GbError::NotHomogeneous(i + 1));
        }
        let k = f.degree().expect("nonzero") as u32;
        if k == 0 {
            return Err(GbError::ConstantInput(i + 1));
        }
        if k > d {
            warnings.push(format!(
                "input {} has degree {k} above the bound {d} and was dropped",
                i + 1
            ));
            continue;
        }
        out.push((iota_prime(f, cfg.order).monic(), k));
    }
    Ok(out)
}

fn run(h: &[FreePolynomial], cfg: &GbConfig, product: bool) -> Result<GbResult<FreePolynomial>, GbError> {
    let mut warnings = Vec::new();
    let inputs = letterplace_inputs(h, cfg, &mut warnings)?;
    let d = cfg.degree_bound;
    // Weight and pair grade agree on multi-homogeneous elements of `V`.
    let spec = engine_spec(cfg, false, false, product, PairFilter::Letterplace);
    let done = complete(inputs, &spec);
    let elements = if cfg.interreduce {
        interreduce_graded(done.elements, cfg.order, &cfg.endo, d, false)
    } else {
        done.elements
    };
    let mut basis = elements
        .iter()
        .map(|(p, _)| iota_prime_inv(p).map_err(|e| GbError::Embedding(e.to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    sort_free(&mut basis);
    let grades = basis.iter().map(|f| f.degree().expect("nonzero") as u32).collect();
    Ok(GbResult {
        basis,
        grades,
        degree_bound: d,
        stats: done.stats,
        trace: done.trace,
        warnings,
        unit_ideal: false,
    })
}

/// Sorts by degree, then by decreasing leading word.
pub fn sort_free(basis: &mut [FreePolynomial]) {
    basis.sort_by(|a, b| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| b.lm().cmp(a.lm()))
    });
}

/// Truncated homogeneous Gröbner basis of the two-sided ideal generated by
/// the homogeneous `h`, computed in `P` through `ι′`. Elements of degree up
/// to `cfg.degree_bound` are correct.
pub fn free_gbasis(h: &[FreePolynomial], cfg: &GbConfig) -> Result<GbResult<FreePolynomial>, GbError> {
    check_free_config(cfg, Mode::Free)?;
    run(h, cfg, cfg.product_enabled())
}

/// Same contract as [`free_gbasis`], computed in the skew ring `S`
/// through `ι`, without the product criterion.
pub fn free_gbasis2(h: &[FreePolynomial], cfg: &GbConfig) -> Result<GbResult<FreePolynomial>, GbError> {
    check_free_config(cfg, Mode::Free2)?;
    run(h, cfg, false)
}

/// Minimal, tail-reduced, monic form of homogeneous free polynomials,
/// sorted like the output of [`free_gbasis`].
pub fn interreduce_free(g: &[FreePolynomial], cfg: &GbConfig) -> Result<Vec<FreePolynomial>, GbError> {
    let mut warnings = Vec::new();
    let items = letterplace_inputs(g, cfg, &mut warnings)?;
    let out = interreduce_graded(items, cfg.order, &cfg.endo, cfg.degree_bound, false);
    let mut basis = out
        .iter()
        .map(|(p, _)| iota_prime_inv(p).map_err(|e| GbError::Embedding(e.to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    sort_free(&mut basis);
    Ok(basis)
}

fn letterplace_elements(result: &GbResult<FreePolynomial>, cfg: &GbConfig) -> Vec<(Polynomial, u32)> {
    result
        .basis
        .iter()
        .zip(&result.grades)
        .map(|(f, &k)| (iota_prime(f, cfg.order), k))
        .collect()
}

/// Certifies a truncated free basis: every pair of window shifts whose lcm
/// has each place at most once must reduce to zero.
pub fn certify_free(result: &GbResult<FreePolynomial>, cfg: &GbConfig) -> CertReport {
    certify_graded(
        &letterplace_elements(result, cfg),
        cfg.order,
        &cfg.endo,
        result.degree_bound,
        true,
        &cfg.alphabet,
    )
}

impl OracleInput for FreePolynomial {
    /// `σ^i ι′(h)` of weight at most `d`, with pairs restricted to lcms in
    /// which every place occurs at most once.
    fn oracle_problem(h: &[FreePolynomial], cfg: &GbConfig) -> Result<OracleProblem, GbError> {
        if !matches!(cfg.mode, Mode::Free | Mode::Free2) {
            return Err(GbError::ModeMismatch {
                expected: Mode::Free,
                found: cfg.mode,
            });
        }
        check_free_config(cfg, cfg.mode)?;
        let mut warnings = Vec::new();
        let d = cfg.degree_bound;
        let mut generators = Vec::new();
        for (p, k) in letterplace_inputs(h, cfg, &mut warnings)? {
            for i in 0..=d - k {
                generators.push(SkewElement::homogeneous(cfg.endo.apply(i, &p), 0));
            }
        }
        Ok(OracleProblem {
            generators,
            squarefree_places: true,
            sigma_closure: false,
        })
    }
}

/// Compares the window leading monomials `σ^c lm ι′(g)` of a free basis
/// with the oracle's.
pub fn compare_free(
    h: &[FreePolynomial],
    result: &GbResult<FreePolynomial>,
    cfg: &GbConfig,
) -> Result<OracleReport, GbError> {
    let oracle = oracle_gbasis_truncated(h, cfg)?;
    let d = result.degree_bound;
    let elements: Vec<(Monomial, u32)> = letterplace_elements(result, cfg)
        .into_iter()
        .map(|(p, k)| (p.lm().clone(), k))
        .collect();
    let main: BTreeSet<(u32, Monomial)> = graded_lm_set(&elements, cfg, &[d])
        .into_iter()
        .map(|(_, m)| (0, m))
        .collect();
    Ok(OracleReport::from_sets(
        &main,
        &oracle_lm_set(&oracle.basis),
        oracle.basis.len(),
        &cfg.alphabet,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::letterplace::parse_free_polynomial;
    use crate::text::Alphabet;

    fn xy() -> Alphabet {
        Alphabet::new(["x", "y"]).unwrap()
    }

    fn free(s: &str) -> FreePolynomial {
        parse_free_polynomial(s, &xy(), Field::Rationals).unwrap()
    }

    fn show(basis: &[FreePolynomial]) -> Vec<String> {
        basis.iter().map(|f| xy().free_to_string(f)).collect()
    }

    #[test]
    fn commutator() {
        let h = [free("y*x - x*y")];
        for cfg in [GbConfig::free(4), GbConfig::free2(4)] {
            let cfg = cfg.with_alphabet(xy());
            let r = if cfg.mode == Mode::Free {
                free_gbasis(&h, &cfg).unwrap()
            } else {
                free_gbasis2(&h, &cfg).unwrap()
            };
            assert_eq!(show(&r.basis), ["x*y - y*x"]);
            assert!(certify_free(&r, &cfg).passed());
            assert!(compare_free(&h, &r, &cfg).unwrap().matches);
        }
    }

    #[test]
    fn monomial_and_empty_inputs() {
        let cfg = GbConfig::free(4);
        let r = free_gbasis(&[free("x*x")], &cfg).unwrap();
        assert_eq!(show(&r.basis), ["x*x"]);
        assert!(free_gbasis(&[], &cfg).unwrap().basis.is_empty());
        assert!(free_gbasis2(&[], &GbConfig::free2(4)).unwrap().basis.is_empty());
    }

    #[test]
    fn overlaps_produce_new_elements() {
        // x*y*x - y*x*y has the self overlap x*y*x*y*x of length 5.
        let h = [free("x*y*x - y*x*y"), free("x*x - y*y")];
        let cfg = GbConfig::free(5);
        let a = free_gbasis(&h, &cfg).unwrap();
        let b = free_gbasis2(&h, &GbConfig::free2(5)).unwrap();
        assert_eq!(a.basis, b.basis);
        assert!(a.basis.len() > 2);
        assert!(certify_free(&a, &cfg).passed());
        let report = compare_free(&h, &a, &cfg).unwrap();
        assert!(report.matches, "{report:?}");
    }

    #[test]
    fn rejects_bad_inputs() {
        let cfg = GbConfig::free(3);
        assert_eq!(
            free_gbasis(&[free("x*y - x")], &cfg).unwrap_err(),
            GbError::NotHomogeneous(1)
        );
        assert_eq!(free_gbasis(&[free("2")], &cfg).unwrap_err(), GbError::ConstantInput(1));
        let power = crate::endo::MonomialEndomorphism::power(2).unwrap();
        assert_eq!(
            free_gbasis(&[free("x*y")], &cfg.clone().with_endo(power)).unwrap_err(),
            GbError::NeedsShift
        );
        let r = free_gbasis(&[free("x*y*x*y")], &cfg).unwrap();
        assert!(r.basis.is_empty());
        assert_eq!(r.warnings.len(), 1);
    }
}
