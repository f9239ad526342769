//! Completion for generators that live in a single graded piece.
//!
//! Every mode except the left one reduces to the same problem: a set of
//! monic polynomials `g ∈ P`, each with a grade `γ(g) ≤ d`, whose decorated
//! copies `q·σ^c(g)` with `γ(g) + c ≤ D` span the piece `J_D` of grade `D`
//! of the ideal. Inputs carry their own grade (the weight for difference
//! ideals under the shift, the s-degree in the skew modes). An element
//! found while reducing a pair of grade `D` gets grade `D`, or its own
//! weight when grades are weights; the latter makes the window closed
//! under `σ` for elements of weight below the bound.
//!
//! Only the pairs `(f, σ^b g)` are formed: the pair `(σ^a f, σ^{a+b} g)` is
//! the `σ^a` image of that one and reduces to zero along with it.

use std::cmp::Ordering;
use std::sync::OnceLock;

use rayon::prelude::*;

use super::config::PairStats;
use super::integral::{IntPoly, Remainder};
use crate::endo::MonomialEndomorphism;
use crate::poly::{Monomial, MonomialOrder, Polynomial};
use crate::text::Alphabet;

/// Which pairs are admitted into the queue.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum PairFilter {
    All,
    /// Keep pairs whose lcm has multidegree `1^w`, `w` its weight.
    Letterplace,
}

#[derive(Debug, Clone)]
pub(crate) struct EngineSpec<'a> {
    pub order: MonomialOrder,
    pub endo: &'a MonomialEndomorphism,
    pub bound: u32,
    /// A nonzero constant means the unit ideal (ideals of `P`); in the skew
    /// modes a constant `c·s^D` is an ordinary element.
    pub stop_on_constant: bool,
    /// New elements are graded by weight instead of by pair grade.
    pub weight_grades: bool,
    pub product: bool,
    pub chain: bool,
    pub filter: PairFilter,
    pub threads: Option<usize>,
    pub trace: bool,
    pub alphabet: &'a Alphabet,
}

pub(crate) struct Entry {
    pub poly: Polynomial,
    pub grade: u32,
    /// `σ^c(lm)` for `c = 0..=bound - grade`.
    pub lm_shifts: Vec<Monomial>,
    shifted: Vec<OnceLock<Polynomial>>,
    /// Primitive integer forms of the shifted copies, over `ℚ` only.
    integral: Vec<OnceLock<IntPoly>>,
}

/// The current basis together with lazily materialized shifted copies.
pub(crate) struct Basis<'a> {
    pub entries: Vec<Entry>,
    order: MonomialOrder,
    endo: &'a MonomialEndomorphism,
    bound: u32,
}

impl<'a> Basis<'a> {
    pub fn new(order: MonomialOrder, endo: &'a MonomialEndomorphism, bound: u32) -> Basis<'a> {
        Basis {
            entries: Vec::new(),
            order,
            endo,
            bound,
        }
    }

    /// Adds a monic polynomial of the given grade (`grade ≤ bound`).
    pub fn push(&mut self, poly: Polynomial, grade: u32) -> usize {
        debug_assert!(grade <= self.bound);
        let span = (self.bound - grade) as usize;
        let lm = poly.lm().clone();
        let lm_shifts = (0..=span as u32)
            .map(|c| self.endo.apply_monomial(c, &lm))
            .collect();
        self.entries.push(Entry {
            poly,
            grade,
            lm_shifts,
            shifted: (0..=span).map(|_| OnceLock::new()).collect(),
            integral: (0..=span).map(|_| OnceLock::new()).collect(),
        });
        self.entries.len() - 1
    }

    /// `σ^c(g_k)`, computed once.
    pub fn shifted(&self, k: usize, c: u32) -> &Polynomial {
        let e = &self.entries[k];
        if c == 0 {
            return &e.poly;
        }
        e.shifted[c as usize].get_or_init(|| self.endo.apply(c, &e.poly))
    }

    /// The reducer for `t` among `σ^c(g)` with `γ(g) + c ≤ limit`: the one
    /// with the smallest leading monomial, ties broken by insertion index
    /// and then by `c`.
    pub fn find_reducer(&self, t: &Monomial, limit: u32) -> Option<(usize, u32)> {
        let mut best: Option<(usize, u32)> = None;
        for (k, e) in self.entries.iter().enumerate() {
            if e.grade > limit {
                continue;
            }
            let top = (limit - e.grade) as usize;
            for (c, lm) in e.lm_shifts[..=top].iter().enumerate() {
                if lm.divides(t) {
                    let better = match best {
                        None => true,
                        Some((bk, bc)) => {
                            self.order.compare(lm, &self.entries[bk].lm_shifts[bc as usize])
                                == Ordering::Less
                        }
                    };
                    if better {
                        best = Some((k, c as u32));
                    }
                }
            }
        }
        best
    }

    /// True if some reducer within `limit` divides `t`.
    pub fn is_reducible(&self, t: &Monomial, limit: u32) -> bool {
        self.entries.iter().any(|e| {
            e.grade <= limit
                && e.lm_shifts[..=(limit - e.grade) as usize]
                    .iter()
                    .any(|lm| lm.divides(t))
        })
    }

    fn integral(&self, k: usize, c: u32) -> &IntPoly {
        self.entries[k].integral[c as usize].get_or_init(|| {
            IntPoly::primitive(self.shifted(k, c)).expect("rational reducer").0
        })
    }

    /// Full reduction of `p` by the reducers within `limit`.
    pub fn reduce(&self, p: Polynomial, limit: u32) -> Polynomial {
        let Some(mut rem) = Remainder::new(&p) else {
            return self.reduce_generic(p, limit);
        };
        let mut i = 0;
        while i < rem.len() {
            match self.find_reducer(rem.monomial(i), limit) {
                None => i += 1,
                Some((k, c)) => {
                    let r = self.integral(k, c);
                    let lm = &self.entries[k].lm_shifts[c as usize];
                    let q = lm.divide_into(rem.monomial(i)).expect("reducer divides");
                    rem.cancel(i, &q, r);
                }
            }
        }
        rem.finish()
    }

    fn reduce_generic(&self, mut p: Polynomial, limit: u32) -> Polynomial {
        let mut i = 0;
        while i < p.len() {
            let t = p.terms()[i].1.clone();
            match self.find_reducer(&t, limit) {
                None => i += 1,
                Some((k, c)) => {
                    let r = self.shifted(k, c);
                    let q = r.lm().divide_into(&t).expect("reducer divides");
                    let coeff = -&p.terms()[i].0;
                    p = p.add_scaled(&coeff, &q, r);
                }
            }
        }
        p
    }

    /// Reduces only until the leading monomial is irreducible.
    pub fn top_reduce(&self, mut p: Polynomial, limit: u32) -> Polynomial {
        while !p.is_zero() {
            let t = p.lm().clone();
            let Some((k, c)) = self.find_reducer(&t, limit) else { break };
            let r = self.shifted(k, c);
            let q = r.lm().divide_into(&t).expect("reducer divides");
            let coeff = -p.lc();
            p = p.add_scaled(&coeff, &q, r);
        }
        p
    }
}

/// `(L/lm f)·f − (L/lm g)·g` for monic `f`, `g` with `L = lcm`.
pub(crate) fn spoly_monic(f: &Polynomial, g: &Polynomial, lcm: &Monomial) -> Polynomial {
    let one = f.lc().field().one();
    let mf = f.lm().divide_into(lcm).expect("lm f divides lcm");
    let mg = g.lm().divide_into(lcm).expect("lm g divides lcm");
    f.mul_term(&one, &mf).add_scaled(&-&one, &mg, g)
}

#[derive(Debug, Clone)]
enum PairKind {
    Input(Polynomial),
    Critical { left: usize, right: usize, shift: u32 },
}

#[derive(Debug, Clone)]
struct Pair {
    kind: PairKind,
    grade: u32,
    lcm: Monomial,
    seq: u64,
}

pub(crate) struct Completion {
    pub elements: Vec<(Polynomial, u32)>,
    pub stats: PairStats,
    pub trace: Vec<String>,
    /// A nonzero constant was found in the ideal (ideal modes only).
    pub unit: bool,
}

enum Outcome {
    Zero,
    Nonzero(Polynomial),
}

struct Engine<'a> {
    spec: &'a EngineSpec<'a>,
    basis: Basis<'a>,
    queue: Vec<Pair>,
    seq: u64,
    stats: PairStats,
    trace: Vec<String>,
}

impl<'a> Engine<'a> {
    fn next_seq(&mut self) -> u64 {
        self.seq += 1;
        self.seq
    }

    fn g(&self, k: usize) -> String {
        format!("g{}", k + 1)
    }

    fn render(&self, p: &Polynomial) -> String {
        self.spec.alphabet.polynomial_to_string(p)
    }

    /// Adds a new element and forms its pairs with everything present.
    fn add_element(&mut self, poly: Polynomial, grade: u32) -> usize {
        let n = self.basis.push(poly, grade);
        let d = self.spec.bound;
        let mut fresh = Vec::new();
        for e in 0..=n {
            let ge = self.basis.entries[e].grade;
            // (g_e, σ^b g_n)
            let first = if e == n { 1 } else { 0 };
            for b in first..=(d - grade) {
                fresh.push((e, n, b, ge.max(grade + b)));
            }
            if e != n {
                // (g_n, σ^b g_e)
                for b in 1..=(d - ge) {
                    fresh.push((n, e, b, grade.max(ge + b)));
                }
            }
        }
        for (left, right, shift, pair_grade) in fresh {
            self.enqueue(left, right, shift, pair_grade);
        }
        n
    }

    fn enqueue(&mut self, left: usize, right: usize, shift: u32, grade: u32) {
        let lf = &self.basis.entries[left].lm_shifts[0];
        let lg = &self.basis.entries[right].lm_shifts[shift as usize];
        let lcm = lf.lcm(lg);
        let coprime = lf.is_coprime(lg);
        if self.spec.filter == PairFilter::Letterplace {
            let w = lcm.weight().finite().unwrap_or(0);
            if !lcm.multidegree().is_ones(w) {
                self.stats.letterplace_filter += 1;
                return;
            }
        }
        self.stats.considered += 1;
        let seq = self.next_seq();
        if self.spec.product && coprime {
            self.stats.product_criterion += 1;
            if self.spec.trace {
                let line = format!(
                    "pair {seq}: ({}, s^{shift} {}) grade {grade}: product criterion",
                    self.g(left),
                    self.g(right)
                );
                self.trace.push(line);
            }
            return;
        }
        self.queue.push(Pair {
            kind: PairKind::Critical { left, right, shift },
            grade,
            lcm,
            seq,
        });
    }

    /// Strict Gebauer–Möller chain test: some in-window `σ^c lm(g_k)`
    /// divides the lcm while both partial lcms are proper divisors.
    fn chain_kills(&self, left: usize, right: usize, shift: u32, lcm: &Monomial, grade: u32) -> bool {
        let lf = &self.basis.entries[left].lm_shifts[0];
        let lg = &self.basis.entries[right].lm_shifts[shift as usize];
        for e in &self.basis.entries {
            if e.grade > grade {
                continue;
            }
            for r in &e.lm_shifts[..=(grade - e.grade) as usize] {
                if r.divides(lcm) && lf.lcm(r) != *lcm && r.lcm(lg) != *lcm {
                    return true;
                }
            }
        }
        false
    }

    fn pair_polynomial(&self, pair: &Pair) -> Polynomial {
        match &pair.kind {
            PairKind::Input(p) => p.clone(),
            PairKind::Critical { left, right, shift } => {
                let f = self.basis.shifted(*left, 0);
                let g = self.basis.shifted(*right, *shift);
                spoly_monic(f, g, &pair.lcm)
            }
        }
    }

    fn describe(&self, pair: &Pair) -> String {
        match &pair.kind {
            PairKind::Input(p) => format!("input {}", self.render(p)),
            PairKind::Critical { left, right, shift } => format!(
                "pair {}: ({}, s^{shift} {}) grade {} lcm {}",
                pair.seq,
                self.g(*left),
                self.g(*right),
                pair.grade,
                self.spec.alphabet.monomial_to_string(&pair.lcm)
            ),
        }
    }

    /// Removes and returns the pending pairs of smallest (grade, lcm degree),
    /// sorted by lcm and creation order.
    fn next_batch(&mut self) -> Vec<Pair> {
        let key = |p: &Pair| (p.grade, p.lcm.degree());
        let Some(min) = self.queue.iter().map(key).min() else {
            return Vec::new();
        };
        let (mut batch, rest): (Vec<Pair>, Vec<Pair>) =
            std::mem::take(&mut self.queue).into_iter().partition(|p| key(p) == min);
        self.queue = rest;
        let order = self.spec.order;
        batch.sort_by(|a, b| order.compare(&a.lcm, &b.lcm).then(a.seq.cmp(&b.seq)));
        batch
    }

    fn run(&mut self) -> bool {
        loop {
            let batch = self.next_batch();
            if batch.is_empty() {
                return false;
            }
            let mut live = Vec::with_capacity(batch.len());
            for pair in batch {
                if let PairKind::Critical { left, right, shift } = pair.kind {
                    if self.spec.chain && self.chain_kills(left, right, shift, &pair.lcm, pair.grade)
                    {
                        self.stats.chain_criterion += 1;
                        if self.spec.trace {
                            let line = format!("{}: chain criterion", self.describe(&pair));
                            self.trace.push(line);
                        }
                        continue;
                    }
                }
                live.push(pair);
            }
            let reduce_one = |pair: &Pair| -> Outcome {
                let p = self.pair_polynomial(pair);
                let r = self.basis.reduce(p, pair.grade);
                if r.is_zero() {
                    Outcome::Zero
                } else {
                    Outcome::Nonzero(r)
                }
            };
            let outcomes: Vec<Outcome> = if live.len() > 1 {
                live.par_iter().map(reduce_one).collect()
            } else {
                live.iter().map(reduce_one).collect()
            };
            let snapshot = self.basis.entries.len();
            for (pair, outcome) in live.iter().zip(outcomes) {
                let reduced = match outcome {
                    Outcome::Nonzero(r) if self.basis.entries.len() > snapshot => {
                        self.basis.reduce(r, pair.grade)
                    }
                    Outcome::Nonzero(r) => r,
                    Outcome::Zero => Polynomial::zero(self.spec.order),
                };
                if reduced.is_zero() {
                    if matches!(pair.kind, PairKind::Critical { .. }) {
                        self.stats.reduced_to_zero += 1;
                    }
                    if self.spec.trace {
                        let line = format!("{}: reduces to 0", self.describe(pair));
                        self.trace.push(line);
                    }
                    continue;
                }
                let monic = reduced.monic();
                if self.spec.stop_on_constant && monic.is_constant() {
                    if self.spec.trace {
                        let line = format!("{}: unit ideal", self.describe(pair));
                        self.trace.push(line);
                    }
                    return true;
                }
                let grade = if self.spec.weight_grades {
                    monic.weight().finite().unwrap_or(0).min(pair.grade)
                } else {
                    pair.grade
                };
                self.stats.new_elements += 1;
                if self.spec.trace {
                    let line = format!(
                        "{}: new {} = {}",
                        self.describe(pair),
                        self.g(self.basis.entries.len()),
                        self.render(&monic)
                    );
                    self.trace.push(line);
                }
                self.add_element(monic, grade);
            }
        }
    }
}

/// Completes `inputs` (nonzero polynomials with grades `≤ spec.bound`).
pub(crate) fn complete(inputs: Vec<(Polynomial, u32)>, spec: &EngineSpec<'_>) -> Completion {
    let mut engine = Engine {
        spec,
        basis: Basis::new(spec.order, spec.endo, spec.bound),
        queue: Vec::new(),
        seq: 0,
        stats: PairStats::default(),
        trace: Vec::new(),
    };
    for (p, grade) in inputs {
        let seq = engine.next_seq();
        let lcm = p.lm().clone();
        engine.queue.push(Pair {
            kind: PairKind::Input(p),
            grade,
            lcm,
            seq,
        });
    }
    let unit = match spec.threads {
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build()
                .expect("thread pool");
            pool.install(|| engine.run())
        }
        None => engine.run(),
    };
    Completion {
        elements: engine
            .basis
            .entries
            .into_iter()
            .map(|e| (e.poly, e.grade))
            .collect(),
        stats: engine.stats,
        trace: engine.trace,
        unit,
    }
}

/// Minimal, tail-reduced, monic version of a graded basis.
///
/// An element is dropped when its leading monomial is divisible by an
/// in-window shift `σ^c lm(g')`, `γ(g') + c ≤ γ(g)`, of an element kept
/// earlier; candidates are visited by increasing leading monomial, which
/// puts every possible divisor first since `m ⪯ σ(m)`.
pub(crate) fn interreduce_graded(
    elements: Vec<(Polynomial, u32)>,
    order: MonomialOrder,
    endo: &MonomialEndomorphism,
    bound: u32,
    weight_grades: bool,
) -> Vec<(Polynomial, u32)> {
    let mut items: Vec<(usize, Polynomial, u32)> = elements
        .into_iter()
        .filter(|(p, _)| !p.is_zero())
        .enumerate()
        .map(|(i, (p, g))| (i, p.monic(), g))
        .collect();
    items.sort_by(|a, b| {
        order
            .compare(a.1.lm(), b.1.lm())
            .then(a.2.cmp(&b.2))
            .then(a.0.cmp(&b.0))
    });
    let mut kept = Basis::new(order, endo, bound);
    for (_, p, g) in items {
        if !kept.is_reducible(p.lm(), g) {
            kept.push(p, g);
        }
    }
    let mut out = Vec::with_capacity(kept.entries.len());
    for e in &kept.entries {
        let lm_term = Polynomial::term(e.poly.lc().clone(), e.poly.lm().clone(), order);
        let tail = e.poly.sub(&lm_term);
        let tail = kept.reduce(tail, e.grade);
        let p = lm_term.add(&tail);
        let grade = if weight_grades {
            p.weight().finite().unwrap_or(0).min(e.grade)
        } else {
            e.grade
        };
        out.push((p, grade));
    }
    out
}
