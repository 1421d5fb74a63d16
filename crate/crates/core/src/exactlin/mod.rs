//! Exact scalars and deterministic sparse linear algebra over ℚ and F_p.

mod scalar;
mod sparse;

pub use scalar::{Field, Scalar};
pub use sparse::{kernel_basis, left_kernel_basis, row_reduce, Echelon, RowReduction, SparseMatrix, SparseVec};
