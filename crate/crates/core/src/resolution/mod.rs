//! Minimal graded free resolutions, Betti tables, dual complexes and their
//! cohomology.

mod betti;
mod cohomology;
mod complex;
mod engine;

#[cfg(test)]
mod tests;

pub use betti::BettiTable;
pub use cohomology::{complex_cohomology, DegreeBound, ExtDegreeTable};
pub use complex::{dualize, FreeComplex};

pub(crate) use engine::{resolve_step, FreeSpace, ModuleSpace, StepOut, Wanted};

use crate::error::{Error, Result};
use crate::freealg::NcPolynomial;
use crate::gbasis::GroebnerData;
use crate::modpres::{FreeModule, GradedModule, ModulePresentation, PresentedModule};

/// Minimal free resolution of a presented module through homological degree
/// `hmax` and internal degree `dmax`.
pub fn minimal_free_resolution(
    m: &ModulePresentation,
    gd: &GroebnerData,
    hmax: usize,
    dmax: i64,
) -> Result<(FreeComplex, BettiTable)> {
    if m.algebra().gens() != gd.gens() || m.algebra().relations() != gd.algebra().relations() {
        return Err(Error::Input(format!(
            "module is over `{}` but the Gröbner data is for `{}`",
            m.algebra().label(),
            gd.algebra().label()
        )));
    }
    let dmax = match m.window() {
        Some(w) => dmax.min(w),
        None => dmax,
    };
    let module = PresentedModule::new(m, gd, dmax);
    resolve_module(&module, gd, hmax, dmax)
}

/// Minimal free resolution of any degreewise-known module. The internal
/// window is clamped to what both the module and `gd` support; the table
/// records the window actually used.
pub fn resolve_module(
    module: &dyn GradedModule,
    gd: &GroebnerData,
    hmax: usize,
    dmax: i64,
) -> Result<(FreeComplex, BettiTable)> {
    let side = module.side();
    let lo = module.min_degree();
    let dmax = dmax.min(module.max_degree()).min(gd.dmax() as i64 + lo);
    if dmax < lo {
        return Err(Error::Window(format!("degree window ends at {dmax}, below the module's first degree {lo}")));
    }
    let mut table = BettiTable::new(hmax as i64, dmax);
    let mut frees: Vec<FreeModule> = Vec::new();
    let mut diffs: Vec<Vec<Vec<NcPolynomial>>> = Vec::new();

    let target = ModuleSpace(module);
    let mut step = resolve_step(gd, side, &target, Wanted::Everything, lo, dmax);
    let mut terminated = None;
    for i in 0..=hmax {
        let free = step.free();
        for &s in &step.shifts {
            table.add(i as i64, s, 1);
        }
        if i > 0 {
            diffs.push(polynomial_rows(gd, &frees[i - 1], &step));
        }
        frees.push(free);
        if step.kernel.is_empty() {
            terminated = Some(i as i64);
            break;
        }
        if i == hmax {
            break;
        }
        let kernel = std::mem::take(&mut step.kernel);
        let prev = &frees[i];
        let space = FreeSpace { gd, side, module: prev };
        step = resolve_step(gd, side, &space, Wanted::Given(&kernel), lo, dmax);
    }
    table.set_terminated(terminated);
    if let Some(t) = terminated {
        if euler_holds(module, gd, &frees, lo, dmax) && dmax - table.t(t).unwrap_or(lo) >= margin(&table, gd) {
            table.certify_rows(0..=t);
        }
    }

    let top = frees.len() as i64 - 1;
    frees.reverse();
    diffs.reverse();
    let complex = FreeComplex::new(gd.algebra(), side, -top, frees, diffs)?;
    Ok((complex, table))
}

/// The differential `F_i -> F_{i-1}` as polynomial rows.
pub(crate) fn polynomial_rows(gd: &GroebnerData, target: &FreeModule, step: &StepOut) -> Vec<Vec<NcPolynomial>> {
    step.shifts
        .iter()
        .zip(&step.images)
        .map(|(&n, v)| {
            target
                .blocks(gd, n, v)
                .iter()
                .zip(target.shifts())
                .map(|(b, &s)| if b.is_zero() { NcPolynomial::zero() } else { gd.element((n - s) as u32, b) })
                .collect()
        })
        .collect()
}

/// How far past the last generator degree the window must reach before an
/// empty kernel counts as termination: the largest step between
/// consecutive Tor degrees, and at least the largest relation degree.
fn margin(table: &BettiTable, gd: &GroebnerData) -> i64 {
    let ts: Vec<i64> = table.indices().iter().filter_map(|&i| table.t(i)).collect();
    let step = ts.windows(2).map(|w| w[1] - w[0]).max().unwrap_or(0);
    step.max(gd.algebra().max_relation_degree() as i64).max(1)
}

/// `Σ_i (-1)^i dim F_{i,n} = dim M_n` for every `n` through `dmax`.
fn euler_holds(module: &dyn GradedModule, gd: &GroebnerData, frees: &[FreeModule], lo: i64, dmax: i64) -> bool {
    (lo..=dmax).all(|n| {
        let alt: i64 = frees.iter().enumerate().map(|(i, f)| (1 - 2 * (i as i64 % 2)) * f.dim(gd, n) as i64).sum();
        alt == module.dim(n) as i64
    })
}

/// Betti table read off the generator shifts of a minimal complex: the term
/// at position `-s` contributes to homological index `s`.
pub fn tor_table_of_minimal_complex(f: &FreeComplex) -> Result<BettiTable> {
    if !f.is_minimal() {
        return Err(Error::Hypothesis("the complex is not minimal".into()));
    }
    let dmax = f.shift_range().map_or(0, |r| r.1);
    if f.terms().is_empty() {
        return Ok(BettiTable::new(0, dmax));
    }
    let hmax = -f.lo();
    let mut table = BettiTable::new(hmax, dmax);
    for p in f.positions() {
        for &j in f.term(p).shifts() {
            table.add(-p, j, 1);
        }
    }
    table.set_terminated(Some(hmax));
    table.certify_rows(-f.hi()..=hmax);
    Ok(table)
}
