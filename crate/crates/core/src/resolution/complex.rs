use crate::error::{Error, Result};
use crate::exactlin::SparseVec;
use crate::freealg::NcPolynomial;
use crate::gbasis::{AlgebraPresentation, GroebnerData, Side};
use crate::modpres::FreeModule;

use super::engine::{FreeSpace, ImageDp};

/// A bounded complex of graded free modules `X^lo -> ... -> X^hi`
/// (cohomological positions).
///
/// `differential(p)[i][j]` is the coefficient of target generator `j` in the
/// image of source generator `i` of `X^p`, on the module's acting side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeComplex {
    algebra: AlgebraPresentation,
    side: Side,
    lo: i64,
    terms: Vec<FreeModule>,
    differentials: Vec<Vec<Vec<NcPolynomial>>>,
}

impl FreeComplex {
    /// `terms[k]` sits at position `lo + k`; `differentials[k]` maps
    /// `terms[k]` to `terms[k + 1]`.
    pub fn new(
        algebra: &AlgebraPresentation,
        side: Side,
        lo: i64,
        terms: Vec<FreeModule>,
        differentials: Vec<Vec<Vec<NcPolynomial>>>,
    ) -> Result<Self> {
        if differentials.len() + 1 != terms.len().max(1) {
            return Err(Error::Input("a complex needs one differential between consecutive terms".into()));
        }
        for (k, d) in differentials.iter().enumerate() {
            let (src, tgt) = (&terms[k], &terms[k + 1]);
            if d.len() != src.rank() || d.iter().any(|r| r.len() != tgt.rank()) {
                return Err(Error::Input(format!("differential at position {} has the wrong shape", lo + k as i64)));
            }
            for (i, row) in d.iter().enumerate() {
                for (j, p) in row.iter().enumerate() {
                    if p.is_zero() {
                        continue;
                    }
                    let want = src.shift(i) - tgt.shift(j);
                    if p.homogeneous_degree().map(i64::from) != Some(want) {
                        return Err(Error::NotHomogeneous(format!(
                            "entry ({i}, {j}) of the differential at position {} should have degree {want}",
                            lo + k as i64
                        )));
                    }
                }
            }
        }
        Ok(FreeComplex { algebra: algebra.clone(), side, lo, terms, differentials })
    }

    pub fn empty(algebra: &AlgebraPresentation, side: Side) -> Self {
        FreeComplex { algebra: algebra.clone(), side, lo: 0, terms: Vec::new(), differentials: Vec::new() }
    }

    /// A single free module at position `p`.
    pub fn single(algebra: &AlgebraPresentation, side: Side, p: i64, module: FreeModule) -> Self {
        FreeComplex { algebra: algebra.clone(), side, lo: p, terms: vec![module], differentials: Vec::new() }
    }

    pub fn algebra(&self) -> &AlgebraPresentation {
        &self.algebra
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn is_empty(&self) -> bool {
        self.terms.iter().all(FreeModule::is_zero)
    }

    /// Lowest position.
    pub fn lo(&self) -> i64 {
        self.lo
    }

    /// Highest position.
    pub fn hi(&self) -> i64 {
        self.lo + self.terms.len() as i64 - 1
    }

    pub fn positions(&self) -> std::ops::RangeInclusive<i64> {
        self.lo..=self.hi()
    }

    pub fn terms(&self) -> &[FreeModule] {
        &self.terms
    }

    /// The term at position `p` (zero outside the range).
    pub fn term(&self, p: i64) -> FreeModule {
        if p < self.lo || p > self.hi() {
            return FreeModule::default();
        }
        self.terms[(p - self.lo) as usize].clone()
    }

    /// The differential leaving position `p`, if both ends are in range.
    pub fn differential(&self, p: i64) -> Option<&[Vec<NcPolynomial>]> {
        if p < self.lo || p >= self.hi() {
            return None;
        }
        Some(&self.differentials[(p - self.lo) as usize])
    }

    /// Every differential entry lies in `𝔪`.
    pub fn is_minimal(&self) -> bool {
        self.differentials.iter().flatten().flatten().all(|p| p.constant_term().is_none())
    }

    /// Largest and smallest generator degree over all terms.
    pub fn shift_range(&self) -> Option<(i64, i64)> {
        let all: Vec<i64> = self.terms.iter().flat_map(|t| t.shifts().iter().copied()).collect();
        Some((*all.iter().min()?, *all.iter().max()?))
    }

    /// `X[ℓ]`: `X[ℓ]^p = X^{p+ℓ}`, differentials multiplied by `(-1)^ℓ`.
    pub fn homological_shift(&self, ell: i64) -> FreeComplex {
        let mut out = self.clone();
        out.lo = self.lo - ell;
        if ell.rem_euclid(2) == 1 {
            for d in &mut out.differentials {
                for row in d.iter_mut() {
                    for p in row.iter_mut() {
                        *p = p.neg();
                    }
                }
            }
        }
        out
    }

    /// `X(ℓ)`: every generator degree drops by `ℓ`.
    pub fn twisted(&self, ell: i64) -> FreeComplex {
        let mut out = self.clone();
        out.terms = self.terms.iter().map(|t| t.twisted(ell)).collect();
        out
    }

    /// Image of source generator `i` of the differential at `p`, as a vector
    /// of the target in degree `σ_i`.
    pub(crate) fn generator_image(&self, gd: &GroebnerData, p: i64, i: usize) -> SparseVec {
        let src = self.term(p);
        let tgt = self.term(p + 1);
        let n = src.shift(i);
        let row = &self.differential(p).expect("differential in range")[i];
        let blocks: Vec<SparseVec> = row
            .iter()
            .enumerate()
            .map(|(j, q)| if q.is_zero() { SparseVec::new() } else { gd.coords(q, (n - tgt.shift(j)) as u32) })
            .collect();
        tgt.join(gd, n, &blocks)
    }

    /// Matrix of the differential at `p` in internal degree `n`: the images
    /// of the basis of `X^p_n` in `X^{p+1}_n`.
    pub fn slice(&self, gd: &GroebnerData, p: i64, n: i64) -> Vec<SparseVec> {
        let mut dp = self.slicer(gd, p);
        let tgt = self.term(p + 1);
        let space = FreeSpace { gd, side: self.side, module: &tgt };
        dp.at(gd, &space, n).to_vec()
    }

    pub(crate) fn slicer(&self, gd: &GroebnerData, p: i64) -> ImageDp {
        let src = self.term(p);
        let images = if self.differential(p).is_some() {
            (0..src.rank()).map(|i| self.generator_image(gd, p, i)).collect()
        } else {
            vec![SparseVec::new(); src.rank()]
        };
        ImageDp::new(self.side, src.shifts().to_vec(), images)
    }

    /// Checks `d ∘ d = 0` on generators, for every composite whose degree
    /// lies inside the window of `gd`.
    #[allow(clippy::needless_range_loop)]
    pub fn check_dd(&self, gd: &GroebnerData) -> bool {
        for p in self.lo..self.hi() - 1 {
            let (src, mid, tgt) = (self.term(p), self.term(p + 1), self.term(p + 2));
            let d1 = self.differential(p).unwrap();
            let d2 = self.differential(p + 1).unwrap();
            for i in 0..src.rank() {
                for k in 0..tgt.rank() {
                    if src.shift(i) - tgt.shift(k) > gd.dmax() as i64 {
                        continue;
                    }
                    let mut acc = NcPolynomial::zero();
                    for j in 0..mid.rank() {
                        let prod = match self.side {
                            Side::Left => d1[i][j].mul(&d2[j][k]),
                            Side::Right => d2[j][k].mul(&d1[i][j]),
                        };
                        acc = acc.add(&prod);
                    }
                    if !gd.normal_form(&acc).is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn to_text(&self) -> String {
        let gens = self.algebra.gens();
        let mut out = format!("complex {} over {}\n", self.side.name(), self.algebra.label());
        for p in self.positions() {
            let t = self.term(p);
            let shifts: Vec<String> = t.shifts().iter().map(|s| s.to_string()).collect();
            out.push_str(&format!("term {p}: [{}]\n", shifts.join(" ")));
            if let Some(d) = self.differential(p) {
                for row in d {
                    let cells: Vec<String> = row.iter().map(|q| q.to_text(gens)).collect();
                    out.push_str(&format!("  {}\n", cells.join(" | ")));
                }
            }
        }
        out
    }
}

/// `Hom_A(-, A)`: the term at `p` becomes the term at `-p` with negated
/// shifts, differentials transpose and the acting side switches.
pub fn dualize(f: &FreeComplex) -> FreeComplex {
    if f.terms.is_empty() {
        return FreeComplex::empty(&f.algebra, f.side.opposite());
    }
    let hi = f.hi();
    let terms: Vec<FreeModule> = f.terms.iter().rev().map(|t| t.negated()).collect();
    let mut differentials = Vec::new();
    for k in 0..f.differentials.len() {
        // new position -(hi - k) -> -(hi - k - 1) is dual to old hi-k-1 -> hi-k
        let old = &f.differentials[f.differentials.len() - 1 - k];
        let transposed: Vec<Vec<NcPolynomial>> =
            (0..f.terms[f.terms.len() - 1 - k].rank()).map(|j| old.iter().map(|r| r[j].clone()).collect()).collect();
        differentials.push(transposed);
    }
    FreeComplex { algebra: f.algebra.clone(), side: f.side.opposite(), lo: -hi, terms, differentials }
}

impl FreeModule {
    /// `Hom_A(F, A)` on generators: shifts negated.
    pub fn negated(&self) -> FreeModule {
        FreeModule::new(self.shifts().iter().map(|s| -s).collect())
    }
}
