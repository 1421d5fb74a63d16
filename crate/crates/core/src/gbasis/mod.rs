//! Truncated noncommutative Gröbner bases, normal words and graded
//! dimensions.

pub(crate) mod builder;
mod cache;
mod groebner;
mod presentation;

pub(crate) use builder::GbBuilder;
pub use cache::{cache_key, CachedGroebner};
pub use groebner::{compute_groebner, hilbert_series, mult_matrices, mult_matrices_on, GroebnerData, Side};
pub use presentation::AlgebraPresentation;
