use std::cmp::Ordering;
use std::fmt;

/// A variable `x_letter(place)`.
///
/// The derived ordering compares the place first and the letter second,
/// which is the fixed variable precedence used by every monomial ordering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Variable {
    pub place: u32,
    pub letter: u32,
}

impl Variable {
    pub fn new(letter: u32, place: u32) -> Variable {
        Variable { place, letter }
    }

    fn mask_bit(self) -> u64 {
        1 << ((self.place.wrapping_mul(5).wrapping_add(self.letter)) % 64)
    }
}

/// A value of `{−∞} ∪ ℕ`. The monomial 1 has weight `NegInfinity`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Weight {
    NegInfinity,
    Finite(u32),
}

impl Weight {
    pub fn max(self, other: Weight) -> Weight {
        std::cmp::max(self, other)
    }

    /// `−∞ + k = −∞`.
    pub fn add(self, k: u32) -> Weight {
        match self {
            Weight::NegInfinity => Weight::NegInfinity,
            Weight::Finite(w) => Weight::Finite(w + k),
        }
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Weight::NegInfinity => None,
            Weight::Finite(w) => Some(w),
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Weight::NegInfinity => write!(f, "-inf"),
            Weight::Finite(w) => write!(f, "{w}"),
        }
    }
}

/// Per-place variable counts of a monomial, sorted by place.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Multidegree {
    counts: Vec<(u32, u32)>,
}

impl Multidegree {
    pub fn counts(&self) -> &[(u32, u32)] {
        &self.counts
    }

    pub fn get(&self, place: u32) -> u32 {
        self.counts
            .iter()
            .find(|(p, _)| *p == place)
            .map_or(0, |(_, c)| *c)
    }

    pub fn total(&self) -> u32 {
        self.counts.iter().map(|(_, c)| c).sum()
    }

    /// The multidegree `1^d`: one variable at each place `1..=d`.
    pub fn ones(d: u32) -> Multidegree {
        Multidegree {
            counts: (1..=d).map(|p| (p, 1)).collect(),
        }
    }

    pub fn is_ones(&self, d: u32) -> bool {
        self.counts.len() == d as usize
            && self
                .counts
                .iter()
                .enumerate()
                .all(|(i, &(p, c))| p == i as u32 + 1 && c == 1)
    }
}

/// A monomial of `P`, stored as a sparse exponent list sorted by variable.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<(Variable, u32)>,
    degree: u32,
    mask: u64,
}

impl Monomial {
    pub fn one() -> Monomial {
        Monomial {
            exps: Vec::new(),
            degree: 0,
            mask: 0,
        }
    }

    pub fn var(v: Variable) -> Monomial {
        Monomial::var_pow(v, 1)
    }

    pub fn var_pow(v: Variable, e: u32) -> Monomial {
        if e == 0 {
            return Monomial::one();
        }
        Monomial {
            exps: vec![(v, e)],
            degree: e,
            mask: v.mask_bit(),
        }
    }

    /// Builds a monomial from arbitrary (variable, exponent) pairs; repeated
    /// variables are multiplied together and zero exponents ignored.
    pub fn from_exponents(pairs: impl IntoIterator<Item = (Variable, u32)>) -> Monomial {
        let mut exps: Vec<(Variable, u32)> = pairs.into_iter().filter(|(_, e)| *e > 0).collect();
        exps.sort_by_key(|(v, _)| *v);
        let mut merged: Vec<(Variable, u32)> = Vec::with_capacity(exps.len());
        for (v, e) in exps {
            match merged.last_mut() {
                Some((w, f)) if *w == v => *f = checked_exp(*f, e),
                _ => merged.push((v, e)),
            }
        }
        Monomial::from_sorted(merged)
    }

    fn from_sorted(exps: Vec<(Variable, u32)>) -> Monomial {
        let mut degree = 0u32;
        let mut mask = 0;
        for (v, e) in &exps {
            degree = checked_exp(degree, *e);
            mask |= v.mask_bit();
        }
        Monomial { exps, degree, mask }
    }

    /// The (variable, exponent) pairs in ascending variable order.
    pub fn exponents(&self) -> &[(Variable, u32)] {
        &self.exps
    }

    pub fn exponent(&self, v: Variable) -> u32 {
        self.exps
            .binary_search_by_key(&v, |(w, _)| *w)
            .map_or(0, |i| self.exps[i].1)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    /// The largest variable occurring, if any.
    pub fn max_variable(&self) -> Option<Variable> {
        self.exps.last().map(|(v, _)| *v)
    }

    /// `w(m)`: the largest place occurring in `m`, or `−∞` for `m = 1`.
    pub fn weight(&self) -> Weight {
        match self.exps.last() {
            None => Weight::NegInfinity,
            Some((v, _)) => Weight::Finite(v.place),
        }
    }

    pub fn multidegree(&self) -> Multidegree {
        let mut counts: Vec<(u32, u32)> = Vec::new();
        for (v, e) in &self.exps {
            match counts.last_mut() {
                Some((p, c)) if *p == v.place => *c += e,
                _ => counts.push((v.place, *e)),
            }
        }
        Multidegree { counts }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        if other.is_one() {
            return self.clone();
        }
        if self.is_one() {
            return other.clone();
        }
        let mut out = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.exps, &other.exps);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, checked_exp(a[i].1, b[j].1)));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial {
            exps: out,
            degree: checked_exp(self.degree, other.degree),
            mask: self.mask | other.mask,
        }
    }

    /// True iff `self` divides `other` (exponentwise ≤).
    pub fn divides(&self, other: &Monomial) -> bool {
        if self.degree > other.degree || self.mask & !other.mask != 0 {
            return false;
        }
        let b = &other.exps;
        let mut j = 0;
        for &(v, e) in &self.exps {
            while j < b.len() && b[j].0 < v {
                j += 1;
            }
            if j == b.len() || b[j].0 != v || b[j].1 < e {
                return false;
            }
            j += 1;
        }
        true
    }

    /// The exact quotient `other / self`, when `self` divides `other`.
    pub fn divide_into(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let mut out = Vec::with_capacity(other.exps.len());
        let a = &self.exps;
        let mut i = 0;
        for &(v, e) in &other.exps {
            if i < a.len() && a[i].0 == v {
                if e > a[i].1 {
                    out.push((v, e - a[i].1));
                }
                i += 1;
            } else {
                out.push((v, e));
            }
        }
        Some(Monomial::from_sorted(out))
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::new();
        let (a, b) = (&self.exps, &other.exps);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1.min(b[j].1)));
                    i += 1;
                    j += 1;
                }
            }
        }
        Monomial::from_sorted(out)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        if self.mask & other.mask == 0 {
            return true;
        }
        let (a, b) = (&self.exps, &other.exps);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => return false,
            }
        }
        true
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (a, b) = (&self.exps, &other.exps);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1.max(b[j].1)));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial::from_sorted(out)
    }

    /// Adds `k` to every place. This is the `k`-th power of the shift.
    pub fn shift_places(&self, k: u32) -> Monomial {
        if k == 0 {
            return self.clone();
        }
        Monomial::from_sorted(
            self.exps
                .iter()
                .map(|&(v, e)| (Variable::new(v.letter, v.place + k), e))
                .collect(),
        )
    }

    /// Raises every exponent to the `k`-th multiple (the power map `x ↦ x^k`
    /// applied to each variable).
    pub fn scale_exponents(&self, k: u32) -> Monomial {
        Monomial::from_sorted(
            self.exps
                .iter()
                .map(|&(v, e)| {
                    let scaled = e
                        .checked_mul(k)
                        .unwrap_or_else(|| panic!("exponent overflow raising {e} by factor {k}"));
                    (v, scaled)
                })
                .collect(),
        )
    }

    /// Lexicographic comparison: the largest variable in which the two
    /// monomials differ decides, the larger exponent being larger.
    pub fn cmp_lex(&self, other: &Monomial) -> Ordering {
        let (a, b) = (&self.exps, &other.exps);
        let (mut i, mut j) = (a.len(), b.len());
        while i > 0 && j > 0 {
            let (va, ea) = a[i - 1];
            let (vb, eb) = b[j - 1];
            match va.cmp(&vb) {
                Ordering::Greater => return Ordering::Greater,
                Ordering::Less => return Ordering::Less,
                Ordering::Equal => match ea.cmp(&eb) {
                    Ordering::Equal => {
                        i -= 1;
                        j -= 1;
                    }
                    ord => return ord,
                },
            }
        }
        i.cmp(&j)
    }
}

fn checked_exp(a: u32, b: u32) -> u32 {
    a.checked_add(b)
        .unwrap_or_else(|| panic!("exponent overflow adding {a} and {b}"))
}

/// Orders monomials lexicographically.
impl Ord for Monomial {
    fn cmp(&self, other: &Monomial) -> Ordering {
        self.cmp_lex(other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Monomial) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Renders with the default letter names `x1, x2, ...`, largest variable
/// first, e.g. `x1(2)*x1(0)`.
impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::text::Alphabet::default().write_monomial(f, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(p: u32) -> Monomial {
        Monomial::var(Variable::new(0, p))
    }

    fn prod(ms: &[Monomial]) -> Monomial {
        ms.iter().fold(Monomial::one(), |acc, m| acc.mul(m))
    }

    #[test]
    fn multiplication() {
        assert_eq!(x(0).mul(&x(0)), Monomial::var_pow(Variable::new(0, 0), 2));
        assert_eq!(Monomial::one().mul(&x(3)), x(3));
        let x2x0 = x(2).mul(&x(0));
        assert_eq!(x2x0.mul(&x(1)), prod(&[x(0), x(1), x(2)]));
    }

    #[test]
    fn gcd_lcm() {
        let a = x(2).mul(&x(0));
        let b = x(2).mul(&x(1));
        assert_eq!(a.gcd(&b), x(2));
        let c = x(4).mul(&x(2));
        assert_eq!(a.lcm(&c), prod(&[x(4), x(2), x(0)]));
        assert_eq!(a.gcd(&Monomial::one()), Monomial::one());
        assert!(a.is_coprime(&x(1)));
        assert!(!a.is_coprime(&c));
    }

    #[test]
    fn division() {
        let a = prod(&[x(4), x(2), x(0)]);
        assert!(x(2).divides(&a));
        assert_eq!(x(2).mul(&x(0)).divide_into(&a), Some(x(4)));
        assert_eq!(x(1).divide_into(&a), None);
        assert!(!x(0).mul(&x(0)).divides(&a));
    }

    #[test]
    fn weight_and_multidegree() {
        assert_eq!(Monomial::one().weight(), Weight::NegInfinity);
        let m = Monomial::var(Variable::new(0, 1)).mul(&Monomial::var(Variable::new(1, 3)));
        assert_eq!(m.weight(), Weight::Finite(3));
        assert_eq!(m.shift_places(1).weight(), Weight::Finite(4));

        let n = Monomial::var(Variable::new(0, 1)).mul(&Monomial::var(Variable::new(1, 2)));
        assert_eq!(n.multidegree(), Multidegree::ones(2));
        assert!(n.multidegree().is_ones(2));
        let sq = Monomial::var_pow(Variable::new(0, 1), 2);
        assert_eq!(sq.multidegree().counts(), &[(1, 2)]);
        assert!(!sq.multidegree().is_ones(1));
        assert_eq!(Monomial::one().multidegree().counts(), &[]);
        assert!(Monomial::one().multidegree().is_ones(0));
    }

    #[test]
    fn weight_arithmetic() {
        assert_eq!(Weight::NegInfinity.max(Weight::Finite(0)), Weight::Finite(0));
        assert_eq!(Weight::NegInfinity.add(5), Weight::NegInfinity);
        assert_eq!(Weight::Finite(2).add(5), Weight::Finite(7));
    }

    #[test]
    fn rendering() {
        assert_eq!(x(2).mul(&x(0)).to_string(), "x1(2)*x1(0)");
        assert_eq!(Monomial::var_pow(Variable::new(1, 3), 2).to_string(), "x2(3)^2");
        assert_eq!(Monomial::one().to_string(), "1");
    }

    #[test]
    #[should_panic(expected = "exponent overflow")]
    fn overflow_panics() {
        Monomial::var_pow(Variable::new(0, 0), u32::MAX).mul(&x(0));
    }
}
