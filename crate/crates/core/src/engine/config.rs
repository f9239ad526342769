use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::endo::MonomialEndomorphism;
use crate::field::Field;
use crate::poly::MonomialOrder;
use crate::text::Alphabet;

/// Which Gröbner basis is computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Gröbner Σ-bases of difference ideals of `P`, truncated by weight.
    Sigma,
    /// Two-sided Gröbner bases of ideals of `S` generated by s-homogeneous
    /// elements, truncated by s-degree.
    TwoSidedSkew,
    /// Left Gröbner bases of left ideals of `S`, truncated by s-degree.
    LeftSkew,
    /// Free algebra bases through the commutative letterplace ring `P`.
    Free,
    /// Free algebra bases through the skew ring `S`.
    Free2,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Mode::Sigma => "sigma",
            Mode::TwoSidedSkew => "skew",
            Mode::LeftSkew => "left",
            Mode::Free => "free",
            Mode::Free2 => "free2",
        };
        write!(f, "{name}")
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Mode, String> {
        match s.trim() {
            "sigma" => Ok(Mode::Sigma),
            "skew" => Ok(Mode::TwoSidedSkew),
            "left" => Ok(Mode::LeftSkew),
            "free" => Ok(Mode::Free),
            "free2" => Ok(Mode::Free2),
            other => Err(format!(
                "unknown mode `{other}` (expected free, free2, sigma, skew or left)"
            )),
        }
    }
}

/// Pair criteria toggles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Criteria {
    /// Coprime leading monomials. Only honored in the ideal modes (`Sigma`
    /// and `Free`); ignored elsewhere.
    pub product: bool,
    pub chain: bool,
}

impl Default for Criteria {
    fn default() -> Criteria {
        Criteria {
            product: true,
            chain: true,
        }
    }
}

/// Configuration of a truncated Gröbner basis computation.
#[derive(Debug, Clone)]
pub struct GbConfig {
    pub mode: Mode,
    /// Truncation bound: weight in `Sigma` mode, s-degree in the skew modes,
    /// word length in the free modes.
    pub degree_bound: u32,
    pub order: MonomialOrder,
    pub endo: MonomialEndomorphism,
    pub field: Field,
    pub criteria: Criteria,
    /// Return a minimal, tail-reduced, monic basis.
    pub interreduce: bool,
    /// Record one line per critical pair in the result.
    pub trace: bool,
    /// Worker threads for batch reduction; `None` uses the global pool.
    pub threads: Option<usize>,
    /// Letter names used when rendering trace lines.
    pub alphabet: Alphabet,
}

impl GbConfig {
    pub fn new(mode: Mode, degree_bound: u32) -> GbConfig {
        let order = match mode {
            Mode::Free | Mode::Free2 => MonomialOrder::DegLex,
            _ => MonomialOrder::Lex,
        };
        GbConfig {
            mode,
            degree_bound,
            order,
            endo: MonomialEndomorphism::shift(),
            field: Field::Rationals,
            criteria: Criteria::default(),
            interreduce: true,
            trace: false,
            threads: None,
            alphabet: Alphabet::default(),
        }
    }

    pub fn sigma(degree_bound: u32) -> GbConfig {
        GbConfig::new(Mode::Sigma, degree_bound)
    }

    pub fn skew(degree_bound: u32) -> GbConfig {
        GbConfig::new(Mode::TwoSidedSkew, degree_bound)
    }

    pub fn left(degree_bound: u32) -> GbConfig {
        GbConfig::new(Mode::LeftSkew, degree_bound)
    }

    pub fn free(degree_bound: u32) -> GbConfig {
        GbConfig::new(Mode::Free, degree_bound)
    }

    pub fn free2(degree_bound: u32) -> GbConfig {
        GbConfig::new(Mode::Free2, degree_bound)
    }

    pub fn with_order(mut self, order: MonomialOrder) -> GbConfig {
        self.order = order;
        self
    }

    pub fn with_endo(mut self, endo: MonomialEndomorphism) -> GbConfig {
        self.endo = endo;
        self
    }

    pub fn with_field(mut self, field: Field) -> GbConfig {
        self.field = field;
        self
    }

    pub fn with_criteria(mut self, criteria: Criteria) -> GbConfig {
        self.criteria = criteria;
        self
    }

    pub fn with_interreduce(mut self, on: bool) -> GbConfig {
        self.interreduce = on;
        self
    }

    pub fn with_trace(mut self, on: bool) -> GbConfig {
        self.trace = on;
        self
    }

    pub fn with_threads(mut self, threads: usize) -> GbConfig {
        self.threads = Some(threads);
        self
    }

    pub fn with_alphabet(mut self, alphabet: Alphabet) -> GbConfig {
        self.alphabet = alphabet;
        self
    }

    /// Product criterion as actually applied: only in the ideal modes.
    pub(crate) fn product_enabled(&self) -> bool {
        self.criteria.product && matches!(self.mode, Mode::Sigma | Mode::Free)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GbError {
    #[error("the endomorphism sends distinct variables to monomials with a common factor")]
    FlaggedEndomorphism,
    #[error("the endomorphism is not compatible with the {0} ordering")]
    OrderIncompatible(MonomialOrder),
    #[error("the endomorphism fixes every variable")]
    TrivialEndomorphism,
    #[error("input {0} is not s-homogeneous")]
    NotSHomogeneous(usize),
    #[error("input {0} is not homogeneous")]
    NotHomogeneous(usize),
    #[error("input {0} has degree zero")]
    ConstantInput(usize),
    #[error("the free modes need the shift endomorphism")]
    NeedsShift,
    #[error("S-polynomial of elements with leading s-degrees {0} and {1}")]
    SDegreeMismatch(u32, u32),
    #[error("S-polynomial of a zero element")]
    ZeroOperand,
    #[error("element of degree {0} lies above the truncation bound {1}")]
    AboveWindow(u32, u32),
    #[error("configuration is for mode {found}, expected {expected}")]
    ModeMismatch { expected: Mode, found: Mode },
    #[error("{0}")]
    Embedding(String),
}

/// Pair bookkeeping of one run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PairStats {
    /// Critical pairs formed within the truncation window.
    pub considered: usize,
    pub product_criterion: usize,
    pub chain_criterion: usize,
    /// Pairs whose lcm is outside the letterplace subspace.
    pub letterplace_filter: usize,
    pub reduced_to_zero: usize,
    pub new_elements: usize,
}

impl fmt::Display for PairStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "pairs_considered: {}", self.considered)?;
        writeln!(f, "product_criterion: {}", self.product_criterion)?;
        writeln!(f, "chain_criterion: {}", self.chain_criterion)?;
        writeln!(f, "letterplace_filter: {}", self.letterplace_filter)?;
        writeln!(f, "reduced_to_zero: {}", self.reduced_to_zero)?;
        write!(f, "new_elements: {}", self.new_elements)
    }
}

/// Output of a truncated Gröbner basis computation.
#[derive(Debug, Clone)]
pub struct GbResult<T> {
    pub basis: Vec<T>,
    /// Truncation grade of each basis element (weight, s-degree or word
    /// length, depending on the mode).
    pub grades: Vec<u32>,
    pub degree_bound: u32,
    pub stats: PairStats,
    pub trace: Vec<String>,
    pub warnings: Vec<String>,
    /// Set when the input generates the whole ring.
    pub unit_ideal: bool,
}

impl<T> GbResult<T> {
    pub(crate) fn empty(degree_bound: u32) -> GbResult<T> {
        GbResult {
            basis: Vec::new(),
            grades: Vec::new(),
            degree_bound,
            stats: PairStats::default(),
            trace: Vec::new(),
            warnings: Vec::new(),
            unit_ideal: false,
        }
    }
}
