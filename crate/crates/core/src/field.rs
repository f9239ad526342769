//! Exact coefficient arithmetic.
//!
//! Two coefficient domains are supported: the rationals with arbitrary
//! precision integers, and prime fields `Z/p` for word-sized primes. A
//! [`FieldElement`] remembers which domain it belongs to, so mixing elements
//! of different fields is detected rather than silently producing garbage.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields ({0} and {1})")]
    MixedFields(Field, Field),
    #[error("{0} is not a prime below 2^32")]
    NotPrime(u64),
    #[error("invalid field description `{0}`")]
    BadDescription(String),
}

/// A coefficient field configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    Rationals,
    Prime(u64),
}

impl Field {
    /// The prime field `Z/p`. Rejects composites and primes of 32 bits or more
    /// (products must fit in a `u64`).
    pub fn prime(p: u64) -> Result<Field, FieldError> {
        if p < 2 || p >= 1 << 32 || !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(self) -> FieldElement {
        self.from_i64(0)
    }

    pub fn one(self) -> FieldElement {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> FieldElement {
        match self {
            Field::Rationals => FieldElement::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => FieldElement::Modular {
                value: n.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    pub fn from_bigint(self, n: &BigInt) -> FieldElement {
        match self {
            Field::Rationals => FieldElement::Rational(BigRational::from_integer(n.clone())),
            Field::Prime(p) => {
                let r = n.mod_floor(&BigInt::from(p));
                FieldElement::Modular {
                    value: r.to_u64().expect("residue fits in u64"),
                    modulus: p,
                }
            }
        }
    }

    /// Maps the fraction `num/den` into the field.
    pub fn from_fraction(self, num: &BigInt, den: &BigInt) -> Result<FieldElement, FieldError> {
        let n = self.from_bigint(num);
        let d = self.from_bigint(den);
        n.checked_div(&d)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "QQ"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

impl FromStr for Field {
    type Err = FieldError;

    /// Accepts `QQ`, `rational`, `0` for the rationals and `p`, `prime:p`,
    /// `GF(p)` for prime fields.
    fn from_str(s: &str) -> Result<Field, FieldError> {
        let t = s.trim();
        let lower = t.to_ascii_lowercase();
        match lower.as_str() {
            "qq" | "q" | "rational" | "rationals" | "0" => return Ok(Field::Rationals),
            _ => {}
        }
        let digits = lower
            .strip_prefix("prime:")
            .or_else(|| lower.strip_prefix("gf(").and_then(|r| r.strip_suffix(')')))
            .unwrap_or(&lower);
        let p: u64 = digits
            .trim()
            .parse()
            .map_err(|_| FieldError::BadDescription(t.to_string()))?;
        Field::prime(p)
    }
}

fn is_prime(p: u64) -> bool {
    if p < 4 {
        return p >= 2;
    }
    if p % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// An element of the rationals or of a prime field.
///
/// Rationals are kept in lowest terms with a positive denominator (this is
/// what [`BigRational`] maintains); prime field values are canonical
/// representatives in `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FieldElement {
    Rational(BigRational),
    Modular { value: u64, modulus: u64 },
}

impl FieldElement {
    pub fn field(&self) -> Field {
        match self {
            FieldElement::Rational(_) => Field::Rationals,
            FieldElement::Modular { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Rational(r) => r.is_zero(),
            FieldElement::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElement::Rational(r) => r.is_one(),
            FieldElement::Modular { value, .. } => *value == 1,
        }
    }

    /// True for rationals with a negative value. Prime field elements are
    /// never negative.
    pub fn is_negative(&self) -> bool {
        match self {
            FieldElement::Rational(r) => r.is_negative(),
            FieldElement::Modular { .. } => false,
        }
    }

    pub fn checked_add(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        use FieldElement::*;
        match (self, other) {
            (Rational(a), Rational(b)) => Ok(Rational(a + b)),
            (Modular { value: a, modulus: p }, Modular { value: b, modulus: q }) if p == q => {
                Ok(Modular { value: (a + b) % p, modulus: *p })
            }
            _ => Err(FieldError::MixedFields(self.field(), other.field())),
        }
    }

    pub fn checked_sub(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        use FieldElement::*;
        match (self, other) {
            (Rational(a), Rational(b)) => Ok(Rational(a - b)),
            (Modular { value: a, modulus: p }, Modular { value: b, modulus: q }) if p == q => {
                Ok(Modular { value: (a + p - b) % p, modulus: *p })
            }
            _ => Err(FieldError::MixedFields(self.field(), other.field())),
        }
    }

    pub fn checked_mul(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        use FieldElement::*;
        match (self, other) {
            (Rational(a), Rational(b)) => Ok(Rational(a * b)),
            (Modular { value: a, modulus: p }, Modular { value: b, modulus: q }) if p == q => {
                Ok(Modular { value: (a * b) % p, modulus: *p })
            }
            _ => Err(FieldError::MixedFields(self.field(), other.field())),
        }
    }

    pub fn checked_div(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        if self.field() != other.field() {
            return Err(FieldError::MixedFields(self.field(), other.field()));
        }
        let inv = other.inv()?;
        self.checked_mul(&inv)
    }

    pub fn inv(&self) -> Result<FieldElement, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(match self {
            FieldElement::Rational(r) => FieldElement::Rational(r.recip()),
            FieldElement::Modular { value, modulus } => FieldElement::Modular {
                value: mod_pow(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }
}

fn mod_pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

// The operator impls are for internal use where both operands are known to
// come from one computation; they panic on mixed fields.

impl Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        self.checked_add(rhs).expect("field mismatch")
    }
}

impl Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        self.checked_sub(rhs).expect("field mismatch")
    }
}

impl Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        self.checked_mul(rhs).expect("field mismatch")
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        match self {
            FieldElement::Rational(r) => FieldElement::Rational(-r),
            FieldElement::Modular { value, modulus } => FieldElement::Modular {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            FieldElement::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> FieldElement {
        Field::Rationals
            .from_fraction(&BigInt::from(n), &BigInt::from(d))
            .unwrap()
    }

    #[test]
    fn rational_sum() {
        assert_eq!(q(1, 2).checked_add(&q(1, 3)).unwrap(), q(5, 6));
        assert_eq!(q(5, 6).to_string(), "5/6");
        assert_eq!(q(-4, -2).to_string(), "2");
        assert_eq!(q(3, -6).to_string(), "-1/2");
    }

    #[test]
    fn modular_product() {
        let f = Field::prime(7).unwrap();
        assert_eq!(f.from_i64(3).checked_mul(&f.from_i64(5)).unwrap(), f.one());
        assert_eq!(f.from_i64(-1).to_string(), "6");
    }

    #[test]
    fn inverses() {
        let f = Field::prime(101).unwrap();
        for n in 1..101 {
            let a = f.from_i64(n);
            assert!(a.checked_mul(&a.inv().unwrap()).unwrap().is_one());
        }
        assert!(q(-7, 3).checked_mul(&q(-7, 3).inv().unwrap()).unwrap().is_one());
    }

    #[test]
    fn errors() {
        let f = Field::prime(5).unwrap();
        assert_eq!(q(1, 1).checked_div(&q(0, 1)), Err(FieldError::DivisionByZero));
        assert_eq!(f.zero().inv(), Err(FieldError::DivisionByZero));
        assert!(matches!(
            q(1, 1).checked_add(&f.one()),
            Err(FieldError::MixedFields(..))
        ));
        let g = Field::prime(7).unwrap();
        assert!(f.one().checked_mul(&g.one()).is_err());
        assert_eq!(Field::prime(91), Err(FieldError::NotPrime(91)));
        assert!(Field::Rationals
            .from_fraction(&BigInt::from(1), &BigInt::from(0))
            .is_err());
    }

    #[test]
    fn parse_field() {
        assert_eq!("QQ".parse::<Field>().unwrap(), Field::Rationals);
        assert_eq!("prime:32003".parse::<Field>().unwrap(), Field::Prime(32003));
        assert_eq!("GF(7)".parse::<Field>().unwrap(), Field::Prime(7));
        assert!("prime:8".parse::<Field>().is_err());
        assert!("reals".parse::<Field>().is_err());
    }

    #[test]
    fn modular_fraction() {
        let f = Field::prime(7).unwrap();
        // 1/3 = 5 mod 7
        let a = f.from_fraction(&BigInt::from(1), &BigInt::from(3)).unwrap();
        assert_eq!(a, f.from_i64(5));
    }
}
