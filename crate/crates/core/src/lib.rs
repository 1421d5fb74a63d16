//! Exact computation of graded homological invariants of connected graded
//! algebras and their modules.

pub mod error;
pub mod exactlin;
pub mod freealg;
pub mod gbasis;
pub mod modpres;
pub mod regularity;
pub mod resolution;
pub mod verify;

pub use error::{Error, Result};
pub use exactlin::{Field, Scalar, SparseMatrix, SparseVec};
pub use freealg::{GeneratorSet, NcPolynomial, Word};
pub use gbasis::{compute_groebner, AlgebraPresentation, GroebnerData, Side};
pub use modpres::{FreeModule, GradedModule, ModulePresentation};
pub use regularity::{ASType, Ext, ExtendedValue, Status, Weight};
pub use resolution::{dualize, minimal_free_resolution, BettiTable, FreeComplex};
