//! Words and noncommutative polynomials over weighted generators.

mod parse;
mod poly;
mod word;

pub use parse::parse_polynomial;
pub(crate) use poly::ReducerIndex;
pub use poly::{reduce, NcPolynomial};
pub(crate) use word::is_identifier;
pub use word::{monomial_compare, GeneratorSet, Word};
