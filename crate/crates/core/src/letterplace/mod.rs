//! The free associative algebra `K⟨X⟩` and its letterplace embeddings.
//!
//! A word `x_{i_1}···x_{i_d}` is sent by `ι` to `x_{i_1}(1)···x_{i_d}(d)·s^d`
//! in the skew ring and by `ι′ = π∘ι` to `x_{i_1}(1)···x_{i_d}(d)` in `P`.
//! Places start at 1 here. Homogeneous two-sided Gröbner bases of the free
//! algebra are computed through either image.

mod gbasis;
mod maps;
mod word;

pub use gbasis::{
    certify_free, compare_free, free_gbasis, free_gbasis2, interreduce_free, sort_free,
};
pub use maps::{
    in_r, in_v, iota, iota_inv, iota_prime, iota_prime_inv, iota_word, monomial_word, pi,
    skew_lift, word_monomial, xi, LetterplaceError,
};
pub use word::{parse_free_polynomial, FreePolynomial, Word};
