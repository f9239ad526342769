//! Post-hoc Buchberger check of a returned basis: every critical pair of
//! decorated copies inside the window is formed, with no criterion, and its
//! S-polynomial must reduce to zero.

use rayon::prelude::*;

use super::config::{GbConfig, GbResult};
use super::graded::{spoly_monic, Basis};
use super::left::LeftBasis;
use crate::endo::MonomialEndomorphism;
use crate::poly::{Monomial, MonomialOrder, Polynomial};
use crate::skew::{SkewElement, SkewRing};
use crate::text::Alphabet;

/// Result of a certification run.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CertReport {
    /// Critical pairs checked.
    pub pairs: usize,
    /// One line per pair whose S-polynomial did not reduce to zero.
    pub failures: Vec<String>,
}

impl CertReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn squarefree_places(m: &Monomial) -> bool {
    m.multidegree().counts().iter().all(|&(_, c)| c <= 1)
}

/// Checks all pairs `(σ^a f, σ^b g)` with `γ(f) + a`, `γ(g) + b ≤ bound`,
/// reducing modulo the reducers of grade at most the pair grade. With
/// `squarefree` only pairs whose lcm has every place at most once are
/// formed.
pub(crate) fn certify_graded(
    elements: &[(Polynomial, u32)],
    order: MonomialOrder,
    endo: &MonomialEndomorphism,
    bound: u32,
    squarefree: bool,
    alphabet: &Alphabet,
) -> CertReport {
    let mut basis = Basis::new(order, endo, bound);
    for (p, g) in elements {
        if !p.is_zero() && *g <= bound {
            basis.push(p.with_order(order).monic(), *g);
        }
    }
    let n = basis.entries.len();
    let mut jobs = Vec::new();
    for k in 0..n {
        for l in k..n {
            let (gk, gl) = (basis.entries[k].grade, basis.entries[l].grade);
            for a in 0..=bound - gk {
                for b in 0..=bound - gl {
                    if k == l && a >= b {
                        continue;
                    }
                    let lcm = basis.entries[k].lm_shifts[a as usize]
                        .lcm(&basis.entries[l].lm_shifts[b as usize]);
                    if squarefree && !squarefree_places(&lcm) {
                        continue;
                    }
                    jobs.push((k, a, l, b, (gk + a).max(gl + b), lcm));
                }
            }
        }
    }
    let failures: Vec<String> = jobs
        .par_iter()
        .filter_map(|(k, a, l, b, grade, lcm)| {
            let s = spoly_monic(basis.shifted(*k, *a), basis.shifted(*l, *b), lcm);
            let r = basis.reduce(s, *grade);
            (!r.is_zero()).then(|| {
                format!(
                    "(s^{a} g{}, s^{b} g{}) at grade {grade} leaves {}",
                    k + 1,
                    l + 1,
                    alphabet.polynomial_to_string(&r)
                )
            })
        })
        .collect();
    CertReport {
        pairs: jobs.len(),
        failures,
    }
}

/// Certifies a truncated Σ-basis.
pub fn certify_sigma(result: &GbResult<Polynomial>, cfg: &GbConfig) -> CertReport {
    if result.unit_ideal {
        return CertReport::default();
    }
    let elements: Vec<(Polynomial, u32)> = result
        .basis
        .iter()
        .cloned()
        .zip(result.grades.iter().copied())
        .collect();
    certify_graded(
        &elements,
        cfg.order,
        &cfg.endo,
        result.degree_bound,
        false,
        &cfg.alphabet,
    )
}

/// Certifies a truncated two-sided basis of s-homogeneous elements.
pub fn certify_skew(result: &GbResult<SkewElement>, cfg: &GbConfig) -> CertReport {
    if result.unit_ideal {
        return CertReport::default();
    }
    let elements: Vec<(Polynomial, u32)> = result
        .basis
        .iter()
        .map(|a| {
            let k = a.sdeg().expect("nonzero");
            (a.component(k).expect("component").clone(), k)
        })
        .collect();
    certify_graded(
        &elements,
        cfg.order,
        &cfg.endo,
        result.degree_bound,
        false,
        &cfg.alphabet,
    )
}

/// Certifies a truncated left basis: all pairs `(s^a e, s^b e')` within
/// the labels whose leading monomials share an s-degree.
pub fn certify_left(result: &GbResult<SkewElement>, cfg: &GbConfig) -> CertReport {
    if result.unit_ideal {
        return CertReport::default();
    }
    let d = result.degree_bound;
    let ring = SkewRing::new(cfg.order, cfg.endo.clone());
    let mut basis = LeftBasis::new(&ring, d);
    for (a, &label) in result.basis.iter().zip(&result.grades) {
        basis.push(super::with_skew_order(a, cfg.order).monic(), label);
    }
    let n = basis.len();
    let mut jobs = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let (ki, kj) = (basis.sdeg(i), basis.sdeg(j));
            for top in ki.max(kj)..=d {
                let (a, b) = (top - ki, top - kj);
                let grade = (basis.label(i) + a).max(basis.label(j) + b);
                if grade <= d {
                    jobs.push((i, a, j, b, grade));
                }
            }
        }
    }
    let failures: Vec<String> = jobs
        .par_iter()
        .filter_map(|&(i, a, j, b, grade)| {
            let (s, _) = basis.spoly(i, a, j, b);
            let r = basis.reduce(s, grade);
            (!r.is_zero()).then(|| {
                format!(
                    "(s^{a} g{}, s^{b} g{}) leaves {}",
                    i + 1,
                    j + 1,
                    cfg.alphabet.skew_to_string(&r)
                )
            })
        })
        .collect();
    CertReport {
        pairs: jobs.len(),
        failures,
    }
}
