//! Gröbner bases in the skew polynomial ring `S = P[s;σ]`, where
//! `P = K[X×ℕ]` is a commutative polynomial ring in the variables `x_i(j)`
//! and `σ` is a monomial endomorphism of `P`.
//!
//! The crate covers three closely related computations, all truncated at a
//! degree bound:
//!
//! * two-sided and left Gröbner bases of ideals of `S`,
//! * Gröbner Σ-bases of difference ideals of `P` (ideals closed under `σ`),
//! * homogeneous Gröbner bases of two-sided ideals of the free associative
//!   algebra, via the letterplace embedding.
//!
//! ```
//! use skewgb::prelude::*;
//!
//! let x = Alphabet::new(["x"]).unwrap();
//! let g1 = parse_polynomial("x(2)*x(0) - x(1)", &x, Field::Rationals, MonomialOrder::Lex).unwrap();
//! let cfg = GbConfig::sigma(6);
//! let basis = sigma_gbasis(&[g1], &cfg).unwrap().basis;
//! let printed: Vec<String> = basis.iter().map(|g| x.polynomial_to_string(g)).collect();
//! assert_eq!(printed, [
//!     "x(2)*x(0) - x(1)",
//!     "x(3)^2*x(0) - x(3)",
//!     "x(4)*x(1) - x(3)*x(0)",
//!     "x(4)*x(3)*x(0) - x(4)",
//!     "x(5) - x(4)*x(0)",
//! ]);
//! ```

pub mod endo;
pub mod engine;
pub mod field;
pub mod letterplace;
pub mod poly;
pub mod skew;
pub mod text;

pub mod prelude {
    pub use crate::endo::MonomialEndomorphism;
    pub use crate::engine::{
        interreduce, left_gbasis, member, oracle_gbasis_truncated, reduce, sigma_gbasis,
        skew_gbasis, spoly, GbConfig, GbError, GbResult, Mode,
    };
    pub use crate::field::{Field, FieldElement};
    pub use crate::letterplace::{free_gbasis, free_gbasis2, FreePolynomial, Word};
    pub use crate::poly::{Monomial, MonomialOrder, Polynomial, Variable, Weight};
    pub use crate::skew::{SkewElement, SkewMonomial, SkewRing};
    pub use crate::text::{parse_polynomial, Alphabet};
}

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/polynomials.md")]
    mod polynomials {}
    #[doc = include_str!("../../../book/src/endomorphisms.md")]
    mod endomorphisms {}
    #[doc = include_str!("../../../book/src/skew-ring.md")]
    mod skew_ring {}
    #[doc = include_str!("../../../book/src/difference-ideals.md")]
    mod difference_ideals {}
    #[doc = include_str!("../../../book/src/letterplace.md")]
    mod letterplace {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
