//! Graded module presentations and constructions on them: shifts,
//! truncations, restriction of scalars, Veronese and subalgebra
//! presentations, tensor products of algebras.

mod free;
mod graded;
mod maps;
mod presentation;
mod subalgebra;

#[cfg(test)]
mod tests;

pub use free::FreeModule;
pub use graded::{graded_dims, GradedModule, PresentedModule, RestrictedModule, ShiftedModule, TruncatedModule};
pub use maps::{present_module, restrict_scalars, tensor_algebra, truncate_module, AlgebraMap};
pub use presentation::{shift_module, ModulePresentation};
pub use subalgebra::{subalgebra_presentation, veronese_presentation, WindowedPresentation};
