use std::cmp::Ordering;

use super::config::{GbConfig, GbError};
use crate::endo::MonomialEndomorphism;
use super::graded::Basis;
use crate::poly::{Monomial, MonomialOrder, Polynomial};
use crate::skew::{SkewElement, SkewMonomial};

/// The S-polynomial `(l/αm)·f − (l/βn)·g` of two elements whose leading
/// monomials `m s^i`, `n s^i` share the s-degree `i`; `l = lcm(m, n)`.
pub fn spoly(f: &SkewElement, g: &SkewElement) -> Result<SkewElement, GbError> {
    let (a, m) = f.lt().map_err(|_| GbError::ZeroOperand)?;
    let (b, n) = g.lt().map_err(|_| GbError::ZeroOperand)?;
    if m.sdeg != n.sdeg {
        return Err(GbError::SDegreeMismatch(m.sdeg, n.sdeg));
    }
    let l = m.mono.lcm(&n.mono);
    let qf = m.mono.divide_into(&l).expect("lcm");
    let qg = n.mono.divide_into(&l).expect("lcm");
    let left = f.mul_p_term(&a.inv().expect("nonzero"), &qf);
    let right = g.mul_p_term(&b.inv().expect("nonzero"), &qg);
    Ok(left.sub(&right))
}

/// [`spoly`] for elements of `P`.
pub fn spoly_poly(f: &Polynomial, g: &Polynomial) -> Result<Polynomial, GbError> {
    let s = spoly(
        &SkewElement::homogeneous(f.clone(), 0),
        &SkewElement::homogeneous(g.clone(), 0),
    )?;
    Ok(s
        .component(0)
        .cloned()
        .unwrap_or_else(|| Polynomial::zero(f.order())))
}

/// Top reduction of `f` modulo the `P`-module generated by `reducers`: the
/// result is zero or has a leading monomial that no `lm(g)` `P`-divides.
/// Among applicable reducers the one with the smallest leading monomial
/// wins, ties going to the earlier one.
pub fn reduce(f: &SkewElement, reducers: &[SkewElement]) -> SkewElement {
    let lms: Vec<Option<(crate::field::FieldElement, SkewMonomial)>> =
        reducers.iter().map(|g| g.lt().ok()).collect();
    let mut f = f.clone();
    while let Ok((c, t)) = f.lt() {
        let mut best: Option<(usize, &Monomial)> = None;
        for (k, lt) in lms.iter().enumerate() {
            let Some((_, v)) = lt else { continue };
            if v.sdeg == t.sdeg && v.mono.divides(&t.mono) {
                let order = reducers[k].component(v.sdeg).expect("lm component").order();
                let better = best.map_or(true, |(_, bm)| order.compare(&v.mono, bm) == Ordering::Less);
                if better {
                    best = Some((k, &v.mono));
                }
            }
        }
        let Some((k, _)) = best else { break };
        let (lc, v) = lms[k].as_ref().expect("present");
        let q = v.mono.divide_into(&t.mono).expect("divides");
        let coeff = -&c.checked_div(lc).expect("nonzero");
        f = f.add(&reducers[k].mul_p_term(&coeff, &q));
    }
    f
}

/// The lazily enumerated reducer set `Σ·G` of a Σ-basis, restricted to the
/// truncation window.
pub struct SigmaReducers<'a> {
    basis: Basis<'a>,
}

impl<'a> SigmaReducers<'a> {
    /// Reducers `σ^c(g)` with `γ(g) + c ≤ cfg.degree_bound`, each `g` with
    /// its input grade (see [`sigma_gbasis`](super::sigma_gbasis)).
    pub fn new(generators: &[Polynomial], cfg: &'a GbConfig) -> SigmaReducers<'a> {
        let graded = generators
            .iter()
            .filter(|g| !g.is_zero())
            .map(|g| {
                let g = g.with_order(cfg.order).monic();
                let grade = input_grade(&g, &cfg.endo);
                (g, grade)
            })
            .collect::<Vec<_>>();
        SigmaReducers::with_grades(graded, cfg)
    }

    /// Reducers with explicit grades.
    pub fn with_grades(generators: Vec<(Polynomial, u32)>, cfg: &'a GbConfig) -> SigmaReducers<'a> {
        let mut basis = Basis::new(cfg.order, &cfg.endo, cfg.degree_bound);
        for (g, grade) in generators {
            if grade <= cfg.degree_bound && !g.is_zero() {
                basis.push(g.with_order(cfg.order).monic(), grade);
            }
        }
        SigmaReducers { basis }
    }

    /// Top reduction using reducers of grade at most `limit`.
    pub fn top_reduce(&self, f: &Polynomial, limit: u32) -> Polynomial {
        self.basis.top_reduce(f.clone(), limit)
    }

    /// Full reduction using reducers of grade at most `limit`.
    pub fn reduce(&self, f: &Polynomial, limit: u32) -> Polynomial {
        self.basis.reduce(f.clone(), limit)
    }

    /// True if some in-window `σ^c lm(g)` divides `m`.
    pub fn lm_reducible(&self, m: &Monomial, limit: u32) -> bool {
        self.basis.is_reducible(m, limit)
    }
}

/// Grade of an input of a difference ideal: its weight under the shift,
/// `0` otherwise.
pub(crate) fn input_grade(p: &Polynomial, endo: &MonomialEndomorphism) -> u32 {
    if endo.is_shift() {
        p.weight().finite().unwrap_or(0)
    } else {
        0
    }
}

/// Sorts polynomials by leading monomial, ascending.
pub(crate) fn sort_by_lm(items: &mut [(Polynomial, u32)], order: MonomialOrder) {
    items.sort_by(|a, b| order.compare(a.0.lm(), b.0.lm()).then(a.1.cmp(&b.1)));
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::endo::MonomialEndomorphism;
    use crate::field::Field;
    use crate::skew::SkewRing;
    use crate::text::{parse_polynomial, Alphabet};

    fn p(s: &str) -> Polynomial {
        let x = Alphabet::new(["x"]).unwrap();
        parse_polynomial(s, &x, Field::Rationals, MonomialOrder::Lex).unwrap()
    }

    fn sk(s: &str) -> SkewElement {
        SkewRing::new(MonomialOrder::Lex, MonomialEndomorphism::shift())
            .parse(s, &Alphabet::new(["x"]).unwrap(), Field::Rationals)
            .unwrap()
    }

    #[test]
    fn spoly_of_shifted_generator() {
        let g1 = p("x(2)*x(0) - x(1)");
        let g1s = MonomialEndomorphism::shift().apply(2, &g1);
        assert_eq!(spoly_poly(&g1, &g1s).unwrap(), p("-x(4)*x(1) + x(3)*x(0)"));
    }

    #[test]
    fn spoly_degenerate_cases() {
        let f = sk("(x(2)*x(0) - x(1))*s^2");
        assert!(spoly(&f, &f).unwrap().is_zero());
        assert!(spoly(&f, &f.scale(&Field::Rationals.from_i64(-3))).unwrap().is_zero());
        assert_eq!(
            spoly(&f, &sk("x(0)*s")),
            Err(GbError::SDegreeMismatch(2, 1))
        );
    }

    #[test]
    fn reduce_examples() {
        let g = sk("(x(2)*x(0) - x(1))*s");
        assert!(reduce(&g, &[g.clone()]).is_zero());
        assert!(reduce(&SkewElement::zero(), &[g.clone()]).is_zero());
        let f = sk("x(3)*x(2)*x(0)*s + x(0)*s");
        let r = reduce(&f, &[g.clone()]);
        assert_eq!(r, sk("(x(3)*x(1) + x(0))*s"));
    }

    #[test]
    fn sigma_reducers_reach_g2() {
        let cfg = GbConfig::sigma(6);
        let g1 = p("x(2)*x(0) - x(1)");
        let g1s = cfg.endo.apply(2, &g1);
        let s = spoly_poly(&g1, &g1s).unwrap();
        let red = SigmaReducers::new(&[g1], &cfg);
        let r = red.reduce(&s, 4);
        assert_eq!(r.monic(), p("x(4)*x(1) - x(3)*x(0)"));
    }
}
