//! Left Gröbner bases of left ideals of `S`.
//!
//! Elements need not be s-homogeneous. The reducers are the left shifts
//! `s^c·g`, whose leading monomial is `σ^c(lm g)` at s-degree `c + deg_s(g)`.
//! Every element carries a label: its leading s-degree for inputs, the pair
//! grade for elements found during completion. The shift `s^c·g` is only
//! used while `label(g) + c` stays within the bound, so the computation
//! stays inside the `P`-module spanned by the in-window shifts of the input.

use std::cmp::Ordering;
use std::sync::OnceLock;

use super::config::PairStats;
use crate::field::FieldElement;
use crate::poly::{Monomial, MonomialOrder, Polynomial};
use crate::skew::{SkewElement, SkewRing};
use crate::text::Alphabet;

struct Entry {
    elem: SkewElement,
    /// Leading s-degree.
    sdeg: u32,
    label: u32,
    /// `σ^c(lm)` for `c = 0..=bound - label`.
    lm_shifts: Vec<Monomial>,
    shifted: Vec<OnceLock<SkewElement>>,
}

pub(crate) struct LeftBasis<'a> {
    entries: Vec<Entry>,
    ring: &'a SkewRing,
    bound: u32,
}

impl<'a> LeftBasis<'a> {
    pub fn new(ring: &'a SkewRing, bound: u32) -> LeftBasis<'a> {
        LeftBasis {
            entries: Vec::new(),
            ring,
            bound,
        }
    }

    /// Adds a monic element with `lm s-degree ≤ label ≤ bound`.
    pub fn push(&mut self, elem: SkewElement, label: u32) -> usize {
        let lm = elem.lm().expect("nonzero");
        debug_assert!(lm.sdeg <= label && label <= self.bound);
        let span = self.bound - label;
        let lm_shifts = (0..=span)
            .map(|c| self.ring.endo.apply_monomial(c, &lm.mono))
            .collect();
        self.entries.push(Entry {
            elem,
            sdeg: lm.sdeg,
            label,
            lm_shifts,
            shifted: (0..=span).map(|_| OnceLock::new()).collect(),
        });
        self.entries.len() - 1
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn element(&self, k: usize) -> &SkewElement {
        &self.entries[k].elem
    }

    pub fn sdeg(&self, k: usize) -> u32 {
        self.entries[k].sdeg
    }

    pub fn label(&self, k: usize) -> u32 {
        self.entries[k].label
    }

    pub fn lm_shift(&self, k: usize, c: u32) -> &Monomial {
        &self.entries[k].lm_shifts[c as usize]
    }

    /// `s^c·g_k`.
    pub fn shifted(&self, k: usize, c: u32) -> &SkewElement {
        let e = &self.entries[k];
        if c == 0 {
            return &e.elem;
        }
        e.shifted[c as usize].get_or_init(|| self.ring.mul_s_left(c, &e.elem))
    }

    /// Reducer `s^c g_k`, `label(g_k) + c ≤ limit`, whose leading monomial
    /// divides `t s^sdeg`; the smallest such leading monomial wins.
    pub fn find_reducer(&self, t: &Monomial, sdeg: u32, limit: u32) -> Option<(usize, u32)> {
        let order = self.ring.order;
        let mut best: Option<(usize, u32)> = None;
        for (k, e) in self.entries.iter().enumerate() {
            if e.sdeg > sdeg {
                continue;
            }
            let c = sdeg - e.sdeg;
            if e.label + c > limit {
                continue;
            }
            let lm = &e.lm_shifts[c as usize];
            if lm.divides(t) {
                let better = best.map_or(true, |(bk, bc)| {
                    order.compare(lm, self.lm_shift(bk, bc)) == Ordering::Less
                });
                if better {
                    best = Some((k, c));
                }
            }
        }
        best
    }

    /// Full reduction with the reducers within `limit`, from the top down.
    pub fn reduce(&self, f: SkewElement, limit: u32) -> SkewElement {
        let mut rest = f;
        let mut done = SkewElement::zero();
        while let Ok((c, t)) = rest.lt() {
            match self.find_reducer(&t.mono, t.sdeg, limit) {
                Some((k, sh)) => {
                    let r = self.shifted(k, sh);
                    let q = self.lm_shift(k, sh).divide_into(&t.mono).expect("divides");
                    rest = rest.add(&r.mul_p_term(&-&c, &q));
                }
                None => {
                    let lead = SkewElement::homogeneous(
                        Polynomial::term(c, t.mono, self.ring.order),
                        t.sdeg,
                    );
                    rest = rest.sub(&lead);
                    done = done.add(&lead);
                }
            }
        }
        done
    }

    /// Tail reduction: the leading term is kept.
    pub fn reduce_tail(&self, f: &SkewElement, limit: u32) -> SkewElement {
        let (c, t) = f.lt().expect("nonzero");
        let lead = SkewElement::homogeneous(Polynomial::term(c, t.mono, self.ring.order), t.sdeg);
        lead.add(&self.reduce(f.sub(&lead), limit))
    }

    /// `(L/lm a)·a − (L/lm b)·b` for `a = s^sa g_i`, `b = s^sb g_j`.
    pub fn spoly(&self, i: usize, sa: u32, j: usize, sb: u32) -> (SkewElement, Monomial) {
        let (lf, lg) = (self.lm_shift(i, sa), self.lm_shift(j, sb));
        let lcm = lf.lcm(lg);
        let one: FieldElement = self.element(i).lc().expect("nonzero").field().one();
        let qf = lf.divide_into(&lcm).expect("lcm");
        let qg = lg.divide_into(&lcm).expect("lcm");
        let s = self
            .shifted(i, sa)
            .mul_p_term(&one, &qf)
            .sub(&self.shifted(j, sb).mul_p_term(&one, &qg));
        (s, lcm)
    }
}

struct Pair {
    left: usize,
    right: usize,
    shift: u32,
    grade: u32,
    lcm: Monomial,
    seq: u64,
}

pub(crate) struct LeftCompletion {
    /// Elements with their labels.
    pub elements: Vec<(SkewElement, u32)>,
    pub stats: PairStats,
    pub trace: Vec<String>,
}

struct LeftEngine<'a> {
    basis: LeftBasis<'a>,
    queue: Vec<Pair>,
    seq: u64,
    stats: PairStats,
}

impl LeftEngine<'_> {
    /// Adds an element and forms its pair with every earlier one: the
    /// element of smaller leading s-degree is shifted up to match.
    fn add(&mut self, e: SkewElement, label: u32) {
        let n = self.basis.push(e, label);
        for k in 0..n {
            let b = &self.basis;
            let (left, right) = if b.sdeg(k) >= b.sdeg(n) { (k, n) } else { (n, k) };
            let shift = b.sdeg(left) - b.sdeg(right);
            let grade = b.label(left).max(b.label(right) + shift);
            if grade > b.bound {
                continue;
            }
            let lcm = b.lm_shift(left, 0).lcm(b.lm_shift(right, shift));
            self.seq += 1;
            self.stats.considered += 1;
            self.queue.push(Pair {
                left,
                right,
                shift,
                grade,
                lcm,
                seq: self.seq,
            });
        }
    }

    /// Strict chain test: some `s^c g_k` within the pair grade has a leading
    /// monomial dividing the lcm, with both partial lcms proper divisors.
    fn chain_kills(&self, pair: &Pair) -> bool {
        let b = &self.basis;
        let top = b.sdeg(pair.left);
        let lf = b.lm_shift(pair.left, 0);
        let lg = b.lm_shift(pair.right, pair.shift);
        (0..b.len()).any(|k| {
            if b.sdeg(k) > top {
                return false;
            }
            let c = top - b.sdeg(k);
            if b.label(k) + c > pair.grade {
                return false;
            }
            let r = b.lm_shift(k, c);
            r.divides(&pair.lcm) && lf.lcm(r) != pair.lcm && r.lcm(lg) != pair.lcm
        })
    }
}

/// Completes monic inputs, each given with its label.
pub(crate) fn complete_left(
    inputs: Vec<(SkewElement, u32)>,
    ring: &SkewRing,
    bound: u32,
    chain: bool,
    trace: bool,
    alphabet: &Alphabet,
) -> LeftCompletion {
    let mut engine = LeftEngine {
        basis: LeftBasis::new(ring, bound),
        queue: Vec::new(),
        seq: 0,
        stats: PairStats::default(),
    };
    let mut lines = Vec::new();

    for (h, label) in inputs {
        let r = engine.basis.reduce(h, label);
        if r.is_zero() {
            continue;
        }
        let r = r.monic();
        if trace {
            let line = format!(
                "input: new g{} = {}",
                engine.basis.len() + 1,
                alphabet.skew_to_string(&r)
            );
            lines.push(line);
        }
        engine.stats.new_elements += 1;
        let label = label.max(r.lm().expect("nonzero").sdeg);
        engine.add(r, label);
    }

    let order: MonomialOrder = ring.order;
    while !engine.queue.is_empty() {
        let queue = &engine.queue;
        let best = (0..queue.len())
            .min_by(|&a, &b| {
                let (p, q) = (&queue[a], &queue[b]);
                (p.grade, p.lcm.degree())
                    .cmp(&(q.grade, q.lcm.degree()))
                    .then_with(|| order.compare(&p.lcm, &q.lcm))
                    .then(p.seq.cmp(&q.seq))
            })
            .expect("nonempty");
        let pair = engine.queue.swap_remove(best);
        let label = format!(
            "pair {}: (g{}, s^{} g{}) grade {} lcm {}",
            pair.seq,
            pair.left + 1,
            pair.shift,
            pair.right + 1,
            pair.grade,
            alphabet.monomial_to_string(&pair.lcm)
        );
        if chain && engine.chain_kills(&pair) {
            engine.stats.chain_criterion += 1;
            if trace {
                lines.push(format!("{label}: chain criterion"));
            }
            continue;
        }
        let (s, _) = engine.basis.spoly(pair.left, 0, pair.right, pair.shift);
        let r = engine.basis.reduce(s, pair.grade);
        if r.is_zero() {
            engine.stats.reduced_to_zero += 1;
            if trace {
                lines.push(format!("{label}: reduces to 0"));
            }
            continue;
        }
        let r = r.monic();
        engine.stats.new_elements += 1;
        if trace {
            lines.push(format!(
                "{label}: new g{} = {}",
                engine.basis.len() + 1,
                alphabet.skew_to_string(&r)
            ));
        }
        engine.add(r, pair.grade);
    }
    LeftCompletion {
        elements: engine
            .basis
            .entries
            .into_iter()
            .map(|e| (e.elem, e.label))
            .collect(),
        stats: engine.stats,
        trace: lines,
    }
}

/// Minimal, tail-reduced, monic left basis. An element is dropped when a
/// shift of an element kept earlier, within its label, reduces its leading
/// monomial; candidates are visited by increasing leading monomial and
/// label.
pub(crate) fn interreduce_left(
    elements: Vec<(SkewElement, u32)>,
    ring: &SkewRing,
    bound: u32,
) -> Vec<(SkewElement, u32)> {
    let order = ring.order;
    let mut items: Vec<(usize, SkewElement, u32)> = elements
        .into_iter()
        .filter(|(e, _)| !e.is_zero())
        .enumerate()
        .map(|(i, (e, l))| (i, e.monic(), l))
        .collect();
    items.sort_by(|a, b| {
        let (la, lb) = (a.1.lm().expect("nonzero"), b.1.lm().expect("nonzero"));
        la.compare(&lb, order)
            .then(a.2.cmp(&b.2))
            .then(a.0.cmp(&b.0))
    });
    let mut kept = LeftBasis::new(ring, bound);
    for (_, e, label) in items {
        let lm = e.lm().expect("nonzero");
        if kept.find_reducer(&lm.mono, lm.sdeg, label).is_none() {
            kept.push(e, label);
        }
    }
    (0..kept.len())
        .map(|k| (kept.reduce_tail(kept.element(k), kept.label(k)), kept.label(k)))
        .collect()
}
