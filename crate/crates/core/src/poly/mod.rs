//! Monomials and polynomials of the commutative ring `P = K[X×ℕ]`.
//!
//! A variable `x_i(j)` carries a letter `i` from a finite alphabet and a
//! place `j`. Variables are ordered place-major, letter-minor, so that the
//! shift `x_i(j) ↦ x_i(j+1)` preserves the variable order.

mod monomial;
mod polynomial;

pub use monomial::{Monomial, Multidegree, Variable, Weight};
pub use polynomial::{PolyError, Polynomial};

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

/// The monomial orderings on `P`.
///
/// Both are built on the fixed variable precedence (place, letter). `Lex`
/// compares the largest variable in which two monomials differ; `DegLex`
/// compares total degree first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    #[default]
    Lex,
    DegLex,
}

impl MonomialOrder {
    pub fn compare(self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => a.cmp_lex(b),
            MonomialOrder::DegLex => a.degree().cmp(&b.degree()).then_with(|| a.cmp_lex(b)),
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Lex => write!(f, "lex"),
            MonomialOrder::DegLex => write!(f, "deglex"),
        }
    }
}

impl FromStr for MonomialOrder {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim().to_ascii_lowercase().as_str() {
            "lex" => Ok(MonomialOrder::Lex),
            "deglex" | "dlex" | "grlex" => Ok(MonomialOrder::DegLex),
            other => Err(format!("unknown ordering `{other}` (expected lex or deglex)")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(vars: &[(u32, u32, u32)]) -> Monomial {
        Monomial::from_exponents(vars.iter().map(|&(l, p, e)| (Variable::new(l, p), e)))
    }

    #[test]
    fn lex_examples() {
        let x = |p| m(&[(0, p, 1)]);
        assert_eq!(MonomialOrder::Lex.compare(&x(0), &x(1)), Ordering::Less);
        assert_eq!(
            MonomialOrder::Lex.compare(&Monomial::one(), &x(0)),
            Ordering::Less
        );
        let x2x0 = m(&[(0, 2, 1), (0, 0, 1)]);
        assert_eq!(MonomialOrder::Lex.compare(&x2x0, &x(1)), Ordering::Greater);
        assert_eq!(MonomialOrder::DegLex.compare(&x2x0, &x(3)), Ordering::Greater);
        assert_eq!(MonomialOrder::Lex.compare(&x2x0, &x(3)), Ordering::Less);
    }

    #[test]
    fn letters_break_place_ties() {
        let a = m(&[(1, 0, 1)]);
        let b = m(&[(0, 0, 3)]);
        assert_eq!(MonomialOrder::Lex.compare(&a, &b), Ordering::Greater);
        let c = m(&[(0, 1, 1)]);
        assert_eq!(MonomialOrder::Lex.compare(&a, &c), Ordering::Less);
    }

    #[test]
    fn parse_order() {
        assert_eq!("lex".parse::<MonomialOrder>().unwrap(), MonomialOrder::Lex);
        assert_eq!("DegLex".parse::<MonomialOrder>().unwrap(), MonomialOrder::DegLex);
        assert!("degrevlex".parse::<MonomialOrder>().is_err());
    }
}
