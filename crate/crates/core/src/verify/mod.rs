//! Theorem suites run over a built-in corpus, with pass/fail reports.

mod corpus;
mod random;
mod report;
mod suites;


pub use corpus::{cube_root, default_corpus, downup, jordan, jordan_subalgebra, kx, kxy, kz, Expected, Subject};
pub use random::{direct_sum, random_minimal_complexes};
pub use report::{Outcome, Report, Suite, VerificationCase};
pub use suites::{default_weights, run_suite, run_suites, thm45_sides, Prepared, THM45_COUNT, THM45_SEED};

use crate::error::Result;
use crate::exactlin::Field;

/// Runs `suites` on the default corpus over `field` with the default grid.
pub fn verify_default(suites: &[Suite], field: Field) -> Result<Report> {
    let corpus = default_corpus(field)?;
    let cases = run_suites(suites, &corpus, &default_weights())?;
    Ok(Report::new(field.name(), cases))
}
