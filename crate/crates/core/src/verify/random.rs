use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::freealg::NcPolynomial;
use crate::gbasis::{GroebnerData, Side};
use crate::modpres::{FreeModule, ModulePresentation};
use crate::resolution::{minimal_free_resolution, FreeComplex};

/// A random homogeneous element of degree `e` (zero for `e ≤ 0`).
fn random_element(rng: &mut ChaCha8Rng, gd: &GroebnerData, e: i64) -> NcPolynomial {
    if e <= 0 || e > gd.dmax() as i64 {
        return NcPolynomial::zero();
    }
    let field = gd.field();
    let mut p = NcPolynomial::zero();
    for w in gd.normal_words(e as u32) {
        let c: i64 = rng.gen_range(-2..=2);
        if c != 0 {
            p.add_term(w.clone(), field.from_i64(c));
        }
    }
    p
}

/// A module presented by a random matrix with entries in the maximal ideal.
fn random_presentation(rng: &mut ChaCha8Rng, gd: &GroebnerData) -> Result<ModulePresentation> {
    let r0 = rng.gen_range(1..=2);
    let shifts: Vec<i64> = (0..r0).map(|_| rng.gen_range(-5..=0)).collect();
    let top = *shifts.iter().max().unwrap();
    let r1 = rng.gen_range(1..=3);
    let mut rows = Vec::new();
    while rows.len() < r1 {
        let tau = top + rng.gen_range(1..=3);
        let row: Vec<NcPolynomial> = shifts.iter().map(|&s| random_element(rng, gd, tau - s)).collect();
        if row.iter().any(|p| !p.is_zero()) {
            rows.push(row);
        }
    }
    ModulePresentation::new("random", gd.algebra(), Side::Left, FreeModule::new(shifts), rows)
}

fn resolution(rng: &mut ChaCha8Rng, gd: &GroebnerData) -> Result<FreeComplex> {
    let m = random_presentation(rng, gd)?;
    Ok(minimal_free_resolution(&m, gd, 3, gd.dmax() as i64)?.0)
}

/// `X ⊕ Y`, padded with zero terms.
pub fn direct_sum(x: &FreeComplex, y: &FreeComplex) -> Result<FreeComplex> {
    if x.is_empty() {
        return Ok(y.clone());
    }
    if y.is_empty() {
        return Ok(x.clone());
    }
    let lo = x.lo().min(y.lo());
    let hi = x.hi().max(y.hi());
    let terms: Vec<FreeModule> = (lo..=hi)
        .map(|p| {
            let mut s = x.term(p).shifts().to_vec();
            s.extend_from_slice(y.term(p).shifts());
            FreeModule::new(s)
        })
        .collect();
    let mut diffs = Vec::new();
    for p in lo..hi {
        let (xs, xt) = (x.term(p).rank(), x.term(p + 1).rank());
        let (ys, yt) = (y.term(p).rank(), y.term(p + 1).rank());
        let mut d = vec![vec![NcPolynomial::zero(); xt + yt]; xs + ys];
        if let Some(dx) = x.differential(p) {
            for (i, row) in dx.iter().enumerate() {
                d[i][..xt].clone_from_slice(row);
            }
        }
        if let Some(dy) = y.differential(p) {
            for (i, row) in dy.iter().enumerate() {
                d[xs + i][xt..].clone_from_slice(row);
            }
        }
        diffs.push(d);
    }
    FreeComplex::new(x.algebra(), x.side(), lo, terms, diffs)
}

/// `X` without its term at position 0, moved up so that it ends at 0.
fn drop_top(x: &FreeComplex) -> Result<FreeComplex> {
    let n = x.terms().len();
    if n < 2 {
        return Ok(x.clone());
    }
    let terms = x.terms()[..n - 1].to_vec();
    let diffs = (x.lo()..x.hi() - 1).map(|p| x.differential(p).unwrap().to_vec()).collect();
    FreeComplex::new(x.algebra(), x.side(), x.lo() + 1, terms, diffs)
}

/// `count` minimal complexes `0 -> F^{-s} -> ... -> F^0 -> 0` with
/// `F^0 ≠ 0`, `s ≤ 3` and generator degrees in `[-5, 5]`: minimal
/// resolutions of random presentations, truncated and summed with
/// homological shifts.
pub fn random_minimal_complexes(gd: &GroebnerData, count: usize, seed: u64) -> Result<Vec<FreeComplex>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let mut f = resolution(&mut rng, gd)?;
        if rng.gen_bool(0.3) {
            f = drop_top(&f)?;
        }
        if rng.gen_bool(0.5) {
            let mut g = resolution(&mut rng, gd)?;
            if rng.gen_bool(0.5) {
                g = drop_top(&g)?;
            }
            let k = rng.gen_range(0..=1);
            f = direct_sum(&f, &g.homological_shift(k))?;
        }
        let ok = !f.is_empty()
            && f.hi() == 0
            && !f.term(0).is_zero()
            && f.lo() >= -3
            && f.is_minimal()
            && f.shift_range().is_some_and(|(a, b)| a >= -5 && b <= 5);
        if ok {
            out.push(f);
        }
    }
    Ok(out)
}
