//! Brute-force reference computation.
//!
//! The input is expanded into the finite set of its decorated copies that
//! lie in the truncation window, and a plain Buchberger algorithm is run on
//! that set as a submodule of a free `P`-module whose components are
//! indexed by s-degree. No Σ-criterion and no lazy shifting is involved;
//! only the ordinary product criterion for elements living in a single
//! component.

use std::collections::BTreeSet;

use super::config::{GbConfig, GbError, GbResult, Mode, PairStats};
use super::ops::input_grade;
use crate::endo::MonomialEndomorphism;
use crate::poly::{Monomial, MonomialOrder, Polynomial};
use crate::skew::{SkewElement, SkewMonomial, SkewRing};
use crate::text::Alphabet;

/// Finite generating set handed to the reference Buchberger run.
#[doc(hidden)]
pub struct OracleProblem {
    pub generators: Vec<SkewElement>,
    /// Skip pairs whose lcm has a place of multidegree above 1.
    pub squarefree_places: bool,
    /// Saturate under `σ` for elements of weight below the bound.
    pub sigma_closure: bool,
}

/// Inputs the oracle knows how to expand.
pub trait OracleInput: Sized {
    #[doc(hidden)]
    fn oracle_problem(h: &[Self], cfg: &GbConfig) -> Result<OracleProblem, GbError>;
}

impl OracleInput for Polynomial {
    /// Under the shift: `σ^i h` of weight at most `d` in component 0, then
    /// saturated under `σ` below weight `d`. Otherwise: `σ^i h` in every
    /// component `D ≥ i`.
    fn oracle_problem(h: &[Polynomial], cfg: &GbConfig) -> Result<OracleProblem, GbError> {
        super::expect_mode(cfg, Mode::Sigma)?;
        super::check_endomorphism(cfg)?;
        let d = cfg.degree_bound;
        let shift = cfg.endo.is_shift();
        let mut generators = Vec::new();
        for p in h.iter().filter(|p| !p.is_zero()) {
            let p = p.with_order(cfg.order);
            if shift {
                let w = input_grade(&p, &cfg.endo);
                for i in 0..=d.saturating_sub(w) {
                    if w + i <= d {
                        generators.push(SkewElement::homogeneous(cfg.endo.apply(i, &p), 0));
                    }
                }
            } else {
                for big_d in 0..=d {
                    for i in 0..=big_d {
                        generators.push(SkewElement::homogeneous(cfg.endo.apply(i, &p), big_d));
                    }
                }
            }
        }
        Ok(OracleProblem {
            generators,
            squarefree_places: false,
            sigma_closure: shift,
        })
    }
}

impl OracleInput for SkewElement {
    /// Two-sided: `σ^i p` in component `D` for `p s^k`, `k + i ≤ D ≤ d`.
    /// Left: `s^i h` with leading s-degree at most `d`.
    fn oracle_problem(h: &[SkewElement], cfg: &GbConfig) -> Result<OracleProblem, GbError> {
        super::check_endomorphism(cfg)?;
        let d = cfg.degree_bound;
        let mut generators = Vec::new();
        match cfg.mode {
            Mode::TwoSidedSkew => {
                for (i, a) in h.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
                    if !a.is_s_homogeneous() {
                        return Err(GbError::NotSHomogeneous(i + 1));
                    }
                    let k = a.sdeg().expect("nonzero");
                    let p = a.component(k).expect("component").with_order(cfg.order);
                    for big_d in k..=d {
                        for c in 0..=big_d - k {
                            generators
                                .push(SkewElement::homogeneous(cfg.endo.apply(c, &p), big_d));
                        }
                    }
                }
            }
            Mode::LeftSkew => {
                let ring = SkewRing::new(cfg.order, cfg.endo.clone());
                for a in h.iter().filter(|a| !a.is_zero()) {
                    let a = super::with_skew_order(a, cfg.order);
                    let top = a.lm().expect("nonzero").sdeg;
                    for i in 0..=d.saturating_sub(top) {
                        if top + i <= d {
                            generators.push(ring.mul_s_left(i, &a));
                        }
                    }
                }
            }
            found => {
                return Err(GbError::ModeMismatch {
                    expected: Mode::TwoSidedSkew,
                    found,
                })
            }
        }
        Ok(OracleProblem {
            generators,
            squarefree_places: false,
            sigma_closure: false,
        })
    }
}

/// Reduced Gröbner basis, computed by brute force, of the truncated
/// submodule spanned by the in-window decorated copies of `h`. Basis
/// elements live in a single component except in the left mode; `grades`
/// holds the leading s-degrees.
pub fn oracle_gbasis_truncated<T: OracleInput>(
    h: &[T],
    cfg: &GbConfig,
) -> Result<GbResult<SkewElement>, GbError> {
    let problem = T::oracle_problem(h, cfg)?;
    let closure = problem.sigma_closure.then_some((&cfg.endo, cfg.degree_bound));
    let (basis, stats) = module_buchberger(
        problem.generators,
        cfg.order,
        problem.squarefree_places,
        closure,
    );
    let grades = basis.iter().map(|a| a.lm().expect("nonzero").sdeg).collect();
    Ok(GbResult {
        basis,
        grades,
        stats,
        ..GbResult::empty(cfg.degree_bound)
    })
}

struct Reducers {
    elems: Vec<SkewElement>,
    lms: Vec<SkewMonomial>,
    order: MonomialOrder,
}

impl Reducers {
    fn find(&self, t: &SkewMonomial, skip: Option<usize>) -> Option<usize> {
        (0..self.elems.len()).find(|&k| {
            Some(k) != skip && self.lms[k].sdeg == t.sdeg && self.lms[k].mono.divides(&t.mono)
        })
    }

    /// Full reduction, ignoring the element `skip`.
    fn reduce(&self, f: SkewElement, skip: Option<usize>) -> SkewElement {
        let mut rest = f;
        let mut done = SkewElement::zero();
        while let Ok((c, t)) = rest.lt() {
            match self.find(&t, skip) {
                Some(k) => {
                    let q = self.lms[k].mono.divide_into(&t.mono).expect("divides");
                    let lc = self.elems[k].lc().expect("nonzero");
                    let coeff = -&c.checked_div(lc).expect("nonzero");
                    rest = rest.add(&self.elems[k].mul_p_term(&coeff, &q));
                }
                None => {
                    let lead =
                        SkewElement::homogeneous(Polynomial::term(c, t.mono, self.order), t.sdeg);
                    rest = rest.sub(&lead);
                    done = done.add(&lead);
                }
            }
        }
        done
    }
}

fn squarefree_places(m: &Monomial) -> bool {
    m.multidegree().counts().iter().all(|&(_, c)| c <= 1)
}

/// Plain Buchberger algorithm for submodules of `⊕_i P·s^i`, returning the
/// reduced basis sorted by leading monomial.
///
/// With `closure = Some((σ, d))` every element is treated as a polynomial
/// of component 0 and the ideal is saturated under `σ` for elements of
/// weight below `d`: after each completion, `σ(b)` is added for every basis
/// element `b` of weight below `d` until nothing new appears.
pub(crate) fn module_buchberger(
    generators: Vec<SkewElement>,
    order: MonomialOrder,
    squarefree: bool,
    closure: Option<(&MonomialEndomorphism, u32)>,
) -> (Vec<SkewElement>, PairStats) {
    let mut run = Buchberger {
        red: Reducers {
            elems: Vec::new(),
            lms: Vec::new(),
            order,
        },
        pairs: Vec::new(),
        stats: PairStats::default(),
        squarefree,
    };
    run.complete(generators);
    if let Some((endo, d)) = closure {
        let mut shifted = 0;
        loop {
            let n = run.red.elems.len();
            let images: Vec<SkewElement> = run.red.elems[shifted..n]
                .iter()
                .filter_map(|e| {
                    let p = e.component(0)?;
                    let w = p.weight().finite().unwrap_or(0);
                    (w < d).then(|| SkewElement::homogeneous(endo.apply(1, p), 0))
                })
                .collect();
            shifted = n;
            run.complete(images);
            if run.red.elems.len() == n {
                break;
            }
        }
    }
    (run.reduced_basis(), run.stats)
}

struct Buchberger {
    red: Reducers,
    pairs: Vec<(u32, usize, usize)>,
    stats: PairStats,
    squarefree: bool,
}

impl Buchberger {
    fn complete(&mut self, generators: Vec<SkewElement>) {
        let mut pending = generators;
        pending.reverse();
        loop {
            if let Some(g) = pending.pop() {
                let r = self.red.reduce(g, None);
                if !r.is_zero() {
                    self.push(r.monic());
                }
                continue;
            }
            // Normal strategy: smallest lcm degree first.
            let pairs = &self.pairs;
            let Some(pos) = (0..pairs.len()).min_by_key(|&i| pairs[i]) else {
                break;
            };
            let (_, i, j) = self.pairs.swap_remove(pos);
            let red = &self.red;
            let (f, g) = (&red.elems[i], &red.elems[j]);
            let l = red.lms[i].mono.lcm(&red.lms[j].mono);
            let qf = red.lms[i].mono.divide_into(&l).expect("lcm");
            let qg = red.lms[j].mono.divide_into(&l).expect("lcm");
            let one = f.lc().expect("nonzero").field().one();
            let s = f.mul_p_term(&one, &qf).sub(&g.mul_p_term(&one, &qg));
            let r = self.red.reduce(s, None);
            if r.is_zero() {
                self.stats.reduced_to_zero += 1;
            } else {
                self.stats.new_elements += 1;
                self.push(r.monic());
            }
        }
    }

    fn push(&mut self, e: SkewElement) {
        let lm = e.lm().expect("nonzero");
        let single = e.is_s_homogeneous();
        let n = self.red.elems.len();
        for k in 0..n {
            let other = &self.red.lms[k];
            if other.sdeg != lm.sdeg {
                continue;
            }
            let l = other.mono.lcm(&lm.mono);
            if self.squarefree && !squarefree_places(&l) {
                self.stats.letterplace_filter += 1;
                continue;
            }
            self.stats.considered += 1;
            if single && self.red.elems[k].is_s_homogeneous() && other.mono.is_coprime(&lm.mono) {
                self.stats.product_criterion += 1;
                continue;
            }
            self.pairs.push((l.degree(), k, n));
        }
        self.red.elems.push(e);
        self.red.lms.push(lm);
    }

    /// Minimalizes, then tail-reduces.
    fn reduced_basis(&self) -> Vec<SkewElement> {
        let red = &self.red;
        let order = red.order;
        let n = red.elems.len();
        let keep: Vec<usize> = (0..n)
            .filter(|&k| {
                !(0..n).any(|j| {
                    j != k
                        && red.lms[j].sdeg == red.lms[k].sdeg
                        && red.lms[j].mono.divides(&red.lms[k].mono)
                        && (red.lms[j].mono != red.lms[k].mono || j < k)
                })
            })
            .collect();
        let minimal = Reducers {
            elems: keep.iter().map(|&k| red.elems[k].clone()).collect(),
            lms: keep.iter().map(|&k| red.lms[k].clone()).collect(),
            order,
        };
        let mut out: Vec<SkewElement> = (0..minimal.elems.len())
            .map(|k| {
                let e = &minimal.elems[k];
                let (c, t) = e.lt().expect("nonzero");
                let lead = SkewElement::homogeneous(Polynomial::term(c, t.mono, order), t.sdeg);
                lead.add(&minimal.reduce(e.sub(&lead), Some(k)))
            })
            .collect();
        out.sort_by(|a, b| a.lm().expect("nonzero").compare(&b.lm().expect("nonzero"), order));
        out
    }
}

/// Outcome of comparing window-restricted leading monomial ideals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub matches: bool,
    /// Minimal generators found only by the main algorithm.
    pub main_only: Vec<String>,
    /// Minimal generators found only by the oracle.
    pub oracle_only: Vec<String>,
    /// Size of the oracle's reduced basis.
    pub oracle_size: usize,
}

impl OracleReport {
    pub(crate) fn from_sets(
        main: &BTreeSet<(u32, Monomial)>,
        oracle: &BTreeSet<(u32, Monomial)>,
        oracle_size: usize,
        alphabet: &Alphabet,
    ) -> OracleReport {
        let show = |(k, m): &(u32, Monomial)| format!("{} [s^{k}]", alphabet.monomial_to_string(m));
        OracleReport {
            matches: main == oracle,
            main_only: main.difference(oracle).map(show).collect(),
            oracle_only: oracle.difference(main).map(show).collect(),
            oracle_size,
        }
    }
}

/// Keeps the divisibility-minimal monomials of each component.
pub(crate) fn minimize(set: Vec<(u32, Monomial)>) -> BTreeSet<(u32, Monomial)> {
    let mut out = BTreeSet::new();
    for (k, m) in &set {
        let dominated = set.iter().any(|(j, n)| j == k && n != m && n.divides(m));
        if !dominated {
            out.insert((*k, m.clone()));
        }
    }
    out
}

pub(crate) fn oracle_lm_set(basis: &[SkewElement]) -> BTreeSet<(u32, Monomial)> {
    minimize(
        basis
            .iter()
            .map(|a| {
                let lm = a.lm().expect("nonzero");
                (lm.sdeg, lm.mono)
            })
            .collect(),
    )
}

/// Window leading monomials `σ^c lm(g)`, `γ(g) + c ≤ D`, per component `D`.
pub(crate) fn graded_lm_set(
    elements: &[(Monomial, u32)],
    cfg: &GbConfig,
    components: &[u32],
) -> BTreeSet<(u32, Monomial)> {
    let mut all = Vec::new();
    for &big_d in components {
        for (lm, grade) in elements {
            if *grade > big_d {
                continue;
            }
            for c in 0..=(big_d - grade) {
                all.push((big_d, cfg.endo.apply_monomial(c, lm)));
            }
        }
    }
    minimize(all)
}

/// Compares the window-restricted leading monomial ideal of a Σ-basis with
/// the oracle's.
pub fn compare_sigma(
    h: &[Polynomial],
    result: &GbResult<Polynomial>,
    cfg: &GbConfig,
) -> Result<OracleReport, GbError> {
    let oracle = oracle_gbasis_truncated(h, cfg)?;
    let d = result.degree_bound;
    let shift = cfg.endo.is_shift();
    let components: Vec<u32> = if shift { vec![d] } else { (0..=d).collect() };
    let elements: Vec<(Monomial, u32)> = result
        .basis
        .iter()
        .zip(&result.grades)
        .map(|(p, &g)| (p.lm().clone(), g))
        .collect();
    // Under the shift everything lives in component 0.
    let top = if shift { 0 } else { d };
    if result.unit_ideal {
        // Only the top piece is known to contain 1.
        let main = BTreeSet::from([(top, Monomial::one())]);
        let oracle_top = oracle_lm_set(&oracle.basis)
            .into_iter()
            .filter(|(k, _)| *k == top)
            .collect();
        return Ok(OracleReport::from_sets(&main, &oracle_top, oracle.basis.len(), &cfg.alphabet));
    }
    let mut main = graded_lm_set(&elements, cfg, &components);
    if shift {
        main = main.into_iter().map(|(_, m)| (0, m)).collect();
    }
    Ok(OracleReport::from_sets(
        &main,
        &oracle_lm_set(&oracle.basis),
        oracle.basis.len(),
        &cfg.alphabet,
    ))
}

/// Compares the per-s-degree leading monomial ideals of a two-sided basis
/// with the oracle's.
pub fn compare_skew(
    h: &[SkewElement],
    result: &GbResult<SkewElement>,
    cfg: &GbConfig,
) -> Result<OracleReport, GbError> {
    let oracle = oracle_gbasis_truncated(h, cfg)?;
    let d = result.degree_bound;
    let components: Vec<u32> = (0..=d).collect();
    let elements: Vec<(Monomial, u32)> = result
        .basis
        .iter()
        .map(|a| {
            let lm = a.lm().expect("nonzero");
            (lm.mono, lm.sdeg)
        })
        .collect();
    let main = graded_lm_set(&elements, cfg, &components);
    Ok(OracleReport::from_sets(
        &main,
        &oracle_lm_set(&oracle.basis),
        oracle.basis.len(),
        &cfg.alphabet,
    ))
}

/// Compares the leading monomials of the left shifts `s^c g` within the
/// labels with the oracle's, per s-degree.
pub fn compare_left(
    h: &[SkewElement],
    result: &GbResult<SkewElement>,
    cfg: &GbConfig,
) -> Result<OracleReport, GbError> {
    let oracle = oracle_gbasis_truncated(h, cfg)?;
    let d = result.degree_bound;
    let mut all = Vec::new();
    for (a, &label) in result.basis.iter().zip(&result.grades) {
        let lm = a.lm().expect("nonzero");
        for c in 0..=d.saturating_sub(label) {
            all.push((lm.sdeg + c, cfg.endo.apply_monomial(c, &lm.mono)));
        }
    }
    Ok(OracleReport::from_sets(
        &minimize(all),
        &oracle_lm_set(&oracle.basis),
        oracle.basis.len(),
        &cfg.alphabet,
    ))
}
