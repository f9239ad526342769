//! Buchberger completion in `S` and in `P`: S-polynomials, reduction,
//! truncated two-sided, left and Σ-bases, interreduction, membership, the
//! brute-force oracle and post-hoc certification.
//!
//! All computations are truncated: `degree_bound` bounds the weight in
//! [`Mode::Sigma`] and the s-degree in the skew modes.

mod certify;
mod config;
pub(crate) mod graded;
mod integral;
mod left;
mod ops;
mod oracle;

pub use certify::{certify_left, certify_sigma, certify_skew, CertReport};
pub use config::{Criteria, GbConfig, GbError, GbResult, Mode, PairStats};
pub use ops::{reduce, spoly, spoly_poly, SigmaReducers};
pub use oracle::{
    compare_left, compare_sigma, compare_skew, oracle_gbasis_truncated, OracleInput, OracleReport,
};

pub(crate) use certify::certify_graded;
pub(crate) use oracle::{graded_lm_set, oracle_lm_set, OracleProblem};

use crate::poly::{MonomialOrder, Polynomial};
use crate::skew::{SkewElement, SkewRing};
use graded::{complete, interreduce_graded, EngineSpec, PairFilter};
use left::{complete_left, interreduce_left as interreduce_left_impl, LeftBasis};
use ops::input_grade;

/// Degree bound used when sampling monomials to refute order compatibility.
const ORDER_SAMPLE_BOUND: u32 = 4;

/// Refuses endomorphisms the criteria are not valid for.
pub(crate) fn check_endomorphism(cfg: &GbConfig) -> Result<(), GbError> {
    if cfg.endo.is_flagged() {
        return Err(GbError::FlaggedEndomorphism);
    }
    if !cfg.endo.moves_some_variable() {
        return Err(GbError::TrivialEndomorphism);
    }
    if !cfg.endo.check_order_compatible(cfg.order, ORDER_SAMPLE_BOUND) {
        return Err(GbError::OrderIncompatible(cfg.order));
    }
    Ok(())
}

pub(crate) fn expect_mode(cfg: &GbConfig, expected: Mode) -> Result<(), GbError> {
    if cfg.mode != expected {
        return Err(GbError::ModeMismatch {
            expected,
            found: cfg.mode,
        });
    }
    Ok(())
}

pub(crate) fn engine_spec<'a>(
    cfg: &'a GbConfig,
    stop_on_constant: bool,
    weight_grades: bool,
    product: bool,
    filter: PairFilter,
) -> EngineSpec<'a> {
    EngineSpec {
        order: cfg.order,
        endo: &cfg.endo,
        bound: cfg.degree_bound,
        stop_on_constant,
        weight_grades,
        product,
        chain: cfg.criteria.chain,
        filter,
        threads: cfg.threads,
        trace: cfg.trace,
        alphabet: &cfg.alphabet,
    }
}

fn unit_result(cfg: &GbConfig, mut warnings: Vec<String>) -> GbResult<Polynomial> {
    warnings.push("the ideal contains a nonzero constant; the basis is {1}".to_string());
    GbResult {
        basis: vec![Polynomial::one(cfg.field, cfg.order)],
        grades: vec![0],
        warnings,
        unit_ideal: true,
        ..GbResult::empty(cfg.degree_bound)
    }
}

/// Truncated Gröbner Σ-basis of the difference ideal generated by `h`.
///
/// Under the shift every element is graded by its weight and stands for
/// its shifts `σ^c(g)` of weight at most the bound `d`; inputs of larger
/// weight are dropped with a warning. With the lex ordering the result is
/// a Gröbner basis of the truncated difference ideal: the smallest ideal of
/// `P^(d)` (places at most `d`) that contains the inputs and contains
/// `σ(f)` for each of its elements `f` of weight below `d`.
///
/// Under other endomorphisms the inputs get grade `0`, an element found
/// from a pair of grade `D` gets grade `D`, and it stands for its shifts
/// `σ^c`, `c ≤ d − D`.
///
/// The basis is sorted by leading monomial.
pub fn sigma_gbasis(h: &[Polynomial], cfg: &GbConfig) -> Result<GbResult<Polynomial>, GbError> {
    expect_mode(cfg, Mode::Sigma)?;
    check_endomorphism(cfg)?;
    let d = cfg.degree_bound;
    let mut warnings = Vec::new();
    let mut inputs = Vec::new();
    for (i, p) in h.iter().enumerate() {
        if p.is_zero() {
            continue;
        }
        let p = p.with_order(cfg.order);
        if p.is_constant() {
            return Ok(unit_result(cfg, warnings));
        }
        let grade = input_grade(&p, &cfg.endo);
        if grade > d {
            warnings.push(format!(
                "input {} has weight {grade} above the bound {d} and was dropped",
                i + 1
            ));
            continue;
        }
        inputs.push((p, grade));
    }
    let weight_grades = cfg.endo.is_shift();
    let spec = engine_spec(cfg, true, weight_grades, cfg.product_enabled(), PairFilter::All);
    let done = complete(inputs, &spec);
    if done.unit {
        let mut r = unit_result(cfg, warnings);
        r.stats = done.stats;
        r.trace = done.trace;
        return Ok(r);
    }
    let mut elements = if cfg.interreduce {
        interreduce_graded(done.elements, cfg.order, &cfg.endo, d, weight_grades)
    } else {
        done.elements
    };
    ops::sort_by_lm(&mut elements, cfg.order);
    let (basis, grades) = elements.into_iter().unzip();
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

/// Truncated two-sided Gröbner basis of the ideal of `S` generated by the
/// s-homogeneous elements `h`. The basis is sorted by s-degree, then by
/// leading monomial.
pub fn skew_gbasis(h: &[SkewElement], cfg: &GbConfig) -> Result<GbResult<SkewElement>, GbError> {
    expect_mode(cfg, Mode::TwoSidedSkew)?;
    check_endomorphism(cfg)?;
    let d = cfg.degree_bound;
    let mut warnings = Vec::new();
    let mut inputs = Vec::new();
    for (i, a) in h.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        if !a.is_s_homogeneous() {
            return Err(GbError::NotSHomogeneous(i + 1));
        }
        let k = a.sdeg().expect("nonzero");
        let p = a.component(k).expect("component").with_order(cfg.order);
        if k > d {
            warnings.push(format!(
                "input {} has s-degree {k} above the bound {d} and was dropped",
                i + 1
            ));
            continue;
        }
        if k == 0 && p.is_constant() {
            let unit = unit_result(cfg, warnings);
            return Ok(GbResult {
                basis: vec![SkewElement::homogeneous(unit.basis[0].clone(), 0)],
                grades: unit.grades,
                degree_bound: d,
                stats: unit.stats,
                trace: unit.trace,
                warnings: unit.warnings,
                unit_ideal: true,
            });
        }
        inputs.push((p, k));
    }
    let spec = engine_spec(cfg, false, false, cfg.product_enabled(), PairFilter::All);
    let done = complete(inputs, &spec);
    let elements = if cfg.interreduce {
        interreduce_graded(done.elements, cfg.order, &cfg.endo, d, false)
    } else {
        done.elements
    };
    let mut basis: Vec<SkewElement> = elements
        .into_iter()
        .map(|(p, k)| SkewElement::homogeneous(p, k))
        .collect();
    sort_skew(&mut basis, cfg.order);
    let grades = basis.iter().map(|a| a.sdeg().expect("nonzero")).collect();
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

/// Truncated left Gröbner basis of the left ideal of `S` generated by `h`.
///
/// Inputs whose leading s-degree exceeds the bound are dropped with a
/// warning. Every element carries a label in `grades`: the leading
/// s-degree for inputs, the pair grade for elements found during
/// completion; `s^c·g` counts as in the window while `label + c` is at most
/// the bound. The basis is sorted by leading monomial under `≺′`.
pub fn left_gbasis(h: &[SkewElement], cfg: &GbConfig) -> Result<GbResult<SkewElement>, GbError> {
    expect_mode(cfg, Mode::LeftSkew)?;
    check_endomorphism(cfg)?;
    let d = cfg.degree_bound;
    let ring = SkewRing::new(cfg.order, cfg.endo.clone());
    let mut warnings = Vec::new();
    let mut inputs = Vec::new();
    for (i, a) in h.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let a = with_skew_order(a, cfg.order);
        let lm = a.lm().expect("nonzero");
        if lm.sdeg > d {
            warnings.push(format!(
                "input {} has leading s-degree {} above the bound {d} and was dropped",
                i + 1,
                lm.sdeg
            ));
            continue;
        }
        if lm.sdeg == 0 && lm.mono.is_one() {
            let one = Polynomial::one(cfg.field, cfg.order);
            warnings.push("the left ideal contains a nonzero constant; the basis is {1}".to_string());
            return Ok(GbResult {
                basis: vec![SkewElement::homogeneous(one, 0)],
                grades: vec![0],
                warnings,
                unit_ideal: true,
                ..GbResult::empty(d)
            });
        }
        inputs.push((a.monic(), lm.sdeg));
    }
    let done = complete_left(inputs, &ring, d, cfg.criteria.chain, cfg.trace, &cfg.alphabet);
    let mut elements = if cfg.interreduce {
        interreduce_left_impl(done.elements, &ring, d)
    } else {
        done.elements
    };
    sort_labeled(&mut elements, cfg.order);
    let (basis, grades) = elements.into_iter().unzip();
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

/// Minimal, tail-reduced, monic form of a truncated Σ-basis, using
/// Σ-divisibility `m = q·σ^i(lm g)` within the window. Elements get their
/// input grade (see [`sigma_gbasis`]).
pub fn interreduce(g: &[Polynomial], cfg: &GbConfig) -> Vec<Polynomial> {
    let items = g
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| {
            let p = p.with_order(cfg.order);
            let grade = input_grade(&p, &cfg.endo).min(cfg.degree_bound);
            (p, grade)
        })
        .collect();
    let mut out =
        interreduce_graded(items, cfg.order, &cfg.endo, cfg.degree_bound, cfg.endo.is_shift());
    ops::sort_by_lm(&mut out, cfg.order);
    out.into_iter().map(|(p, _)| p).collect()
}

/// Minimal, tail-reduced, monic form of s-homogeneous elements under
/// two-sided divisibility.
pub fn interreduce_skew(g: &[SkewElement], cfg: &GbConfig) -> Vec<SkewElement> {
    let items = g
        .iter()
        .filter(|a| !a.is_zero())
        .map(|a| {
            let k = a.sdeg().expect("nonzero");
            (a.component(k).expect("component").with_order(cfg.order), k)
        })
        .collect();
    let out = interreduce_graded(items, cfg.order, &cfg.endo, cfg.degree_bound, false);
    let mut basis: Vec<SkewElement> = out
        .into_iter()
        .map(|(p, k)| SkewElement::homogeneous(p, k))
        .collect();
    sort_skew(&mut basis, cfg.order);
    basis
}

/// Minimal, tail-reduced, monic form under left divisibility, each element
/// labeled by its leading s-degree.
pub fn interreduce_left(g: &[SkewElement], cfg: &GbConfig) -> Vec<SkewElement> {
    let ring = SkewRing::new(cfg.order, cfg.endo.clone());
    let items = g
        .iter()
        .filter(|a| !a.is_zero())
        .map(|a| {
            let a = with_skew_order(a, cfg.order);
            let k = a.lm().expect("nonzero").sdeg;
            (a, k)
        })
        .filter(|(_, k)| *k <= cfg.degree_bound)
        .collect();
    let mut out = interreduce_left_impl(items, &ring, cfg.degree_bound);
    sort_labeled(&mut out, cfg.order);
    out.into_iter().map(|(a, _)| a).collect()
}

/// Membership of `f` in the difference ideal with truncated Σ-basis `g`.
///
/// Under the shift, `f` must have weight at most the bound of `g`.
pub fn member(f: &Polynomial, g: &GbResult<Polynomial>, cfg: &GbConfig) -> Result<bool, GbError> {
    if f.is_zero() {
        return Ok(true);
    }
    if g.unit_ideal {
        return Ok(true);
    }
    let d = g.degree_bound;
    let f = f.with_order(cfg.order);
    if cfg.endo.is_shift() {
        let w = f.weight().finite().unwrap_or(0);
        if w > d {
            return Err(GbError::AboveWindow(w, d));
        }
    }
    let cfg = GbConfig {
        degree_bound: d,
        ..cfg.clone()
    };
    let reducers = graded_reducers(g, &cfg);
    Ok(reducers.reduce(&f, d).is_zero())
}

/// Membership in the two-sided ideal with truncated basis `g`; every
/// component of `f` must have s-degree at most the bound.
pub fn member_skew(
    f: &SkewElement,
    g: &GbResult<SkewElement>,
    cfg: &GbConfig,
) -> Result<bool, GbError> {
    if f.is_zero() || g.unit_ideal {
        return Ok(true);
    }
    let d = g.degree_bound;
    let top = f.sdeg().expect("nonzero");
    if top > d {
        return Err(GbError::AboveWindow(top, d));
    }
    let items: Vec<(Polynomial, u32)> = g
        .basis
        .iter()
        .map(|a| {
            let k = a.sdeg().expect("nonzero");
            (a.component(k).expect("component").clone(), k)
        })
        .collect();
    let cfg = GbConfig {
        degree_bound: d,
        ..cfg.clone()
    };
    let reducers = SigmaReducers::with_grades(items, &cfg);
    Ok(f.components()
        .iter()
        .all(|(&k, p)| reducers.reduce(&p.with_order(cfg.order), k).is_zero()))
}

/// Membership in the left ideal with truncated basis `g`; the leading
/// s-degree of `f` must be at most the bound.
pub fn member_left(
    f: &SkewElement,
    g: &GbResult<SkewElement>,
    cfg: &GbConfig,
) -> Result<bool, GbError> {
    if f.is_zero() || g.unit_ideal {
        return Ok(true);
    }
    let d = g.degree_bound;
    let f = with_skew_order(f, cfg.order);
    let top = f.lm().expect("nonzero").sdeg;
    if top > d {
        return Err(GbError::AboveWindow(top, d));
    }
    let ring = SkewRing::new(cfg.order, cfg.endo.clone());
    let mut basis = LeftBasis::new(&ring, d);
    for (a, &label) in g.basis.iter().zip(&g.grades) {
        basis.push(with_skew_order(a, cfg.order).monic(), label);
    }
    Ok(basis.reduce(f, d).is_zero())
}

fn graded_reducers<'a>(g: &GbResult<Polynomial>, cfg: &'a GbConfig) -> SigmaReducers<'a> {
    let items = g
        .basis
        .iter()
        .cloned()
        .zip(g.grades.iter().copied())
        .collect();
    SigmaReducers::with_grades(items, cfg)
}

pub(crate) fn with_skew_order(a: &SkewElement, order: MonomialOrder) -> SkewElement {
    SkewElement::from_components(
        a.components()
            .iter()
            .map(|(&k, p)| (k, p.with_order(order))),
    )
}

fn sort_labeled(items: &mut [(SkewElement, u32)], order: MonomialOrder) {
    items.sort_by(|a, b| {
        a.0.lm()
            .expect("nonzero")
            .compare(&b.0.lm().expect("nonzero"), order)
            .then(a.1.cmp(&b.1))
    });
}

pub(crate) fn sort_skew(basis: &mut [SkewElement], order: MonomialOrder) {
    basis.sort_by(|a, b| {
        a.lm()
            .expect("nonzero")
            .compare(&b.lm().expect("nonzero"), order)
    });
}
