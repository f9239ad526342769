//! Monomial endomorphisms `σ` of `P` and their compatibility checks.
//!
//! The Gröbner machinery needs two properties of `σ`: it must preserve the
//! monomial ordering (`m ≺ n ⇒ σm ≺ σn`) and it must send distinct
//! variables to coprime monomials, which makes it a lattice map for gcd and
//! lcm. The shift and the power maps have both properties for the built-in
//! orderings. Table rules are checked on construction for coprimality and
//! can be probed for order compatibility by random sampling.

use std::collections::BTreeMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::poly::{Monomial, MonomialOrder, Polynomial, Variable};
use crate::text::{parse_expr, Alphabet, Expr, ParseError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EndoError {
    #[error("invalid endomorphism `{0}` (expected shift, power:<e> or table:<file>)")]
    BadSpec(String),
    #[error("power endomorphism needs an exponent of at least 2, got {0}")]
    BadPower(u32),
    #[error("line {line}: {message}")]
    Table { line: usize, message: String },
}

/// Image rule for the variables a table does not list.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TailRule {
    Identity,
    Shift,
    Power(u32),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Rule {
    Shift,
    Power(u32),
    Table {
        images: BTreeMap<Variable, Monomial>,
        tail: TailRule,
    },
}

/// A ring endomorphism of `P` sending each variable to a monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialEndomorphism {
    rule: Rule,
    div_compatible: bool,
}

impl MonomialEndomorphism {
    /// `x_i(j) ↦ x_i(j+1)`.
    pub fn shift() -> MonomialEndomorphism {
        MonomialEndomorphism {
            rule: Rule::Shift,
            div_compatible: true,
        }
    }

    /// `x ↦ x^e` on every variable, `e ≥ 2`.
    pub fn power(e: u32) -> Result<MonomialEndomorphism, EndoError> {
        if e < 2 {
            return Err(EndoError::BadPower(e));
        }
        Ok(MonomialEndomorphism {
            rule: Rule::Power(e),
            div_compatible: true,
        })
    }

    /// Explicit images for finitely many variables, with `tail` applied to
    /// every other variable. The result may fail the coprimality check; it
    /// is then flagged and the Gröbner engine refuses to use it.
    pub fn table(images: BTreeMap<Variable, Monomial>, tail: TailRule) -> MonomialEndomorphism {
        let div_compatible = table_coprime(&images, tail);
        MonomialEndomorphism {
            rule: Rule::Table { images, tail },
            div_compatible,
        }
    }

    /// Parses `shift` or `power:<e>`. Tables come from
    /// [`MonomialEndomorphism::parse_table`].
    pub fn from_spec(spec: &str) -> Result<MonomialEndomorphism, EndoError> {
        let s = spec.trim();
        if s.eq_ignore_ascii_case("shift") {
            return Ok(MonomialEndomorphism::shift());
        }
        if let Some(e) = s.strip_prefix("power:") {
            let e: u32 = e
                .trim()
                .parse()
                .map_err(|_| EndoError::BadSpec(s.to_string()))?;
            return MonomialEndomorphism::power(e);
        }
        Err(EndoError::BadSpec(s.to_string()))
    }

    /// Parses a table file: one `variable -> monomial` line per listed
    /// variable and an optional `default: identity | shift | power:<e>`
    /// line (shift if omitted). `#` starts a comment.
    pub fn parse_table(src: &str, alphabet: &Alphabet) -> Result<MonomialEndomorphism, EndoError> {
        let mut images = BTreeMap::new();
        let mut tail = TailRule::Shift;
        for (k, raw) in src.lines().enumerate() {
            let line_no = k + 1;
            let err = |message: String| EndoError::Table {
                line: line_no,
                message,
            };
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("default:") {
                tail = match rest.trim() {
                    "identity" => TailRule::Identity,
                    "shift" => TailRule::Shift,
                    other => match other.strip_prefix("power:").map(|e| e.trim().parse::<u32>()) {
                        Some(Ok(e)) if e >= 2 => TailRule::Power(e),
                        _ => return Err(err(format!("unknown default rule `{other}`"))),
                    },
                };
                continue;
            }
            let (lhs, rhs) = line
                .split_once("->")
                .ok_or_else(|| err("expected `variable -> monomial`".into()))?;
            let v = match parse_monomial(lhs, alphabet).map_err(|e| err(e.to_string()))? {
                m if m.degree() == 1 => m.max_variable().expect("degree one"),
                _ => return Err(err(format!("`{}` is not a single variable", lhs.trim()))),
            };
            let image = parse_monomial(rhs, alphabet).map_err(|e| err(e.to_string()))?;
            if images.insert(v, image).is_some() {
                return Err(err(format!("variable `{}` listed twice", lhs.trim())));
            }
        }
        Ok(MonomialEndomorphism::table(images, tail))
    }

    pub fn is_shift(&self) -> bool {
        self.rule == Rule::Shift
    }

    /// True when the images of distinct variables are pairwise coprime.
    pub fn check_div_compatible(&self) -> bool {
        self.div_compatible
    }

    /// A flagged endomorphism fails the coprimality check.
    pub fn is_flagged(&self) -> bool {
        !self.div_compatible
    }

    /// Order compatibility. Exact for the shift and power maps; for tables
    /// a seeded random search for a counterexample among monomials of degree
    /// at most `sample_bound`, so `false` is a proof of incompatibility while
    /// `true` only means none was found.
    pub fn check_order_compatible(&self, order: MonomialOrder, sample_bound: u32) -> bool {
        let Rule::Table { images, .. } = &self.rule else {
            return true;
        };
        let vars = self.sample_variables(images);
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        for _ in 0..2000 {
            let m = random_monomial(&mut rng, &vars, sample_bound);
            let n = random_monomial(&mut rng, &vars, sample_bound);
            let (sm, sn) = (self.apply_monomial(1, &m), self.apply_monomial(1, &n));
            if order.compare(&m, &sm).is_gt() || order.compare(&n, &sn).is_gt() {
                return false;
            }
            if order.compare(&m, &n) != order.compare(&sm, &sn) {
                return false;
            }
        }
        true
    }

    /// True when `σ` moves some variable in the sampled range. Infinite
    /// order cannot be checked for tables in general; this is the necessary
    /// condition we can test.
    pub fn moves_some_variable(&self) -> bool {
        match &self.rule {
            Rule::Shift | Rule::Power(_) => true,
            Rule::Table { images, tail } => {
                *tail != TailRule::Identity
                    || images.iter().any(|(v, m)| *m != Monomial::var(*v))
            }
        }
    }

    fn sample_variables(&self, images: &BTreeMap<Variable, Monomial>) -> Vec<Variable> {
        let mut vars: Vec<Variable> = images.keys().copied().collect();
        for m in images.values() {
            vars.extend(m.exponents().iter().map(|(v, _)| *v));
        }
        let max_letter = vars.iter().map(|v| v.letter).max().unwrap_or(0);
        let max_place = vars.iter().map(|v| v.place).max().unwrap_or(0);
        for l in 0..=max_letter {
            for p in 0..=max_place + 1 {
                vars.push(Variable::new(l, p));
            }
        }
        vars.sort();
        vars.dedup();
        vars
    }

    fn image_of(&self, v: Variable) -> Monomial {
        match &self.rule {
            Rule::Shift => Monomial::var(Variable::new(v.letter, v.place + 1)),
            Rule::Power(e) => Monomial::var_pow(v, *e),
            Rule::Table { images, tail } => match images.get(&v) {
                Some(m) => m.clone(),
                None => tail_image(*tail, v),
            },
        }
    }

    /// `σ^k(m)`.
    pub fn apply_monomial(&self, k: u32, m: &Monomial) -> Monomial {
        if k == 0 || m.is_one() {
            return m.clone();
        }
        match &self.rule {
            Rule::Shift => m.shift_places(k),
            Rule::Power(e) => {
                let factor = e
                    .checked_pow(k)
                    .unwrap_or_else(|| panic!("exponent overflow computing {e}^{k}"));
                m.scale_exponents(factor)
            }
            Rule::Table { .. } => {
                let mut cur = m.clone();
                for _ in 0..k {
                    let mut next = Monomial::one();
                    for &(v, e) in cur.exponents() {
                        next = next.mul(&self.image_of(v).scale_exponents(e));
                    }
                    cur = next;
                }
                cur
            }
        }
    }

    /// `σ^k(f)`.
    pub fn apply(&self, k: u32, f: &Polynomial) -> Polynomial {
        if k == 0 {
            return f.clone();
        }
        match &self.rule {
            // Both maps are strictly monotone for lex and deglex, so the
            // term order survives.
            Rule::Shift | Rule::Power(_) => f.map_monomials_monotone(|m| self.apply_monomial(k, m)),
            Rule::Table { .. } => f.map_monomials(|m| self.apply_monomial(k, m)),
        }
    }
}

impl fmt::Display for MonomialEndomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.rule {
            Rule::Shift => write!(f, "shift"),
            Rule::Power(e) => write!(f, "power:{e}"),
            Rule::Table { images, .. } => write!(f, "table ({} listed variables)", images.len()),
        }
    }
}

fn tail_image(tail: TailRule, v: Variable) -> Monomial {
    match tail {
        TailRule::Identity => Monomial::var(v),
        TailRule::Shift => Monomial::var(Variable::new(v.letter, v.place + 1)),
        TailRule::Power(e) => Monomial::var_pow(v, e),
    }
}

/// Coprimality of the images of distinct variables. Listed images are
/// compared pairwise; a listed image clashes with the tail exactly when it
/// contains the tail image of some unlisted variable. Tail images of distinct
/// variables never share a variable.
fn table_coprime(images: &BTreeMap<Variable, Monomial>, tail: TailRule) -> bool {
    let listed: Vec<&Monomial> = images.values().collect();
    for (i, a) in listed.iter().enumerate() {
        if listed[i + 1..].iter().any(|b| !a.is_coprime(b)) {
            return false;
        }
    }
    for m in images.values() {
        for &(u, _) in m.exponents() {
            let preimage = match tail {
                TailRule::Identity | TailRule::Power(_) => Some(u),
                TailRule::Shift => u.place.checked_sub(1).map(|p| Variable::new(u.letter, p)),
            };
            if let Some(v) = preimage {
                if !images.contains_key(&v) {
                    return false;
                }
            }
        }
    }
    true
}

fn parse_monomial(src: &str, alphabet: &Alphabet) -> Result<Monomial, ParseError> {
    fn walk(e: &Expr, out: &mut Vec<(Variable, u32)>, mult: u32) -> Result<(), ParseError> {
        match e {
            Expr::Letter {
                letter,
                place: Some(p),
                ..
            } => {
                out.push((Variable::new(*letter, *p), mult));
                Ok(())
            }
            Expr::Number(n, d, _) if n == d => Ok(()),
            Expr::Mul(a, b) => {
                walk(a, out, mult)?;
                walk(b, out, mult)
            }
            Expr::Pow(a, k) => walk(a, out, mult * k),
            Expr::Letter { column, .. } | Expr::Number(_, _, column) | Expr::Skew(column) => Err(
                ParseError::new(*column, "expected a monomial such as `x1(1)*x2(0)`"),
            ),
            _ => Err(ParseError::new(1, "expected a monomial such as `x1(1)*x2(0)`")),
        }
    }
    let e = parse_expr(src.trim(), alphabet)?;
    let mut out = Vec::new();
    walk(&e, &mut out, 1)?;
    Ok(Monomial::from_exponents(out))
}

fn random_monomial(rng: &mut ChaCha8Rng, vars: &[Variable], max_degree: u32) -> Monomial {
    let deg = rng.gen_range(0..=max_degree);
    Monomial::from_exponents((0..deg).map(|_| (vars[rng.gen_range(0..vars.len())], 1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::text::parse_polynomial;

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s, &Alphabet::default(), Field::Rationals, MonomialOrder::Lex).unwrap()
    }

    fn x(letter: u32, place: u32) -> Monomial {
        Monomial::var(Variable::new(letter, place))
    }

    #[test]
    fn shift_squared() {
        let s = MonomialEndomorphism::shift();
        assert_eq!(s.apply(2, &p("x1(2)*x1(0) - x1(1)")), p("x1(4)*x1(2) - x1(3)"));
        assert_eq!(s.apply(0, &p("x1(2) + 3")), p("x1(2) + 3"));
    }

    #[test]
    fn power_map() {
        let s = MonomialEndomorphism::power(2).unwrap();
        assert_eq!(s.apply(1, &p("x1(0)*x2(0)")), p("x1(0)^2*x2(0)^2"));
        assert_eq!(s.apply(2, &p("x1(0)")), p("x1(0)^4"));
        assert!(MonomialEndomorphism::power(1).is_err());
    }

    #[test]
    #[should_panic(expected = "exponent overflow")]
    fn power_overflow_panics() {
        MonomialEndomorphism::power(2).unwrap().apply(40, &p("x1(0)"));
    }

    #[test]
    fn compatibility_flags() {
        assert!(MonomialEndomorphism::shift().check_div_compatible());
        assert!(MonomialEndomorphism::power(3).unwrap().check_div_compatible());
        let mut images = BTreeMap::new();
        images.insert(Variable::new(0, 0), x(0, 0).mul(&x(1, 0)));
        images.insert(Variable::new(1, 0), x(1, 0).mul(&x(2, 0)));
        let t = MonomialEndomorphism::table(images, TailRule::Identity);
        assert!(!t.check_div_compatible());
        assert!(t.is_flagged());
    }

    #[test]
    fn table_tail_clash() {
        // x1(0) -> x1(2) collides with the shifted image of the unlisted x1(1).
        let mut images = BTreeMap::new();
        images.insert(Variable::new(0, 0), x(0, 2));
        assert!(!MonomialEndomorphism::table(images.clone(), TailRule::Shift).check_div_compatible());
        images.insert(Variable::new(0, 1), x(0, 0));
        let t = MonomialEndomorphism::table(images, TailRule::Shift);
        assert!(t.check_div_compatible());
    }

    #[test]
    fn order_sampler_refutes() {
        let mut images = BTreeMap::new();
        images.insert(Variable::new(0, 1), x(0, 0));
        images.insert(Variable::new(0, 0), x(0, 1));
        let t = MonomialEndomorphism::table(images, TailRule::Identity);
        assert!(t.check_div_compatible());
        assert!(!t.check_order_compatible(MonomialOrder::Lex, 3));
        assert!(MonomialEndomorphism::shift().check_order_compatible(MonomialOrder::Lex, 3));
        assert!(MonomialEndomorphism::shift().check_order_compatible(MonomialOrder::DegLex, 3));
    }

    #[test]
    fn table_matching_shift_is_accepted() {
        let t = MonomialEndomorphism::parse_table(
            "# a shift written out\nx1(0) -> x1(1)\ndefault: shift\n",
            &Alphabet::default(),
        )
        .unwrap();
        assert!(t.check_div_compatible());
        assert!(t.check_order_compatible(MonomialOrder::Lex, 4));
        assert!(t.moves_some_variable());
        let f = p("x1(2)*x1(0) - x1(1)");
        assert_eq!(t.apply(2, &f), MonomialEndomorphism::shift().apply(2, &f));
    }

    #[test]
    fn table_parse_errors() {
        let a = Alphabet::default();
        let e = MonomialEndomorphism::parse_table("x1(0) -> x1(1)\nx1(0)*x1(1) -> x1(2)", &a)
            .unwrap_err();
        assert!(matches!(e, EndoError::Table { line: 2, .. }));
        assert!(MonomialEndomorphism::parse_table("x1(0) => x1(1)", &a).is_err());
        assert!(MonomialEndomorphism::parse_table("x1(0) -> x1(1)\nx1(0) -> x1(2)", &a).is_err());
        assert!(MonomialEndomorphism::parse_table("default: rotate", &a).is_err());
        assert!(MonomialEndomorphism::parse_table("x1(0) -> 2*x1(1)", &a).is_err());
    }

    #[test]
    fn identity_table_does_not_move() {
        let t = MonomialEndomorphism::table(BTreeMap::new(), TailRule::Identity);
        assert!(!t.moves_some_variable());
    }

    #[test]
    fn specs() {
        assert!(MonomialEndomorphism::from_spec("shift").unwrap().is_shift());
        assert_eq!(
            MonomialEndomorphism::from_spec("power:3").unwrap(),
            MonomialEndomorphism::power(3).unwrap()
        );
        assert!(MonomialEndomorphism::from_spec("rotate").is_err());
    }
}
