use serde::{Deserialize, Serialize};

use crate::exactlin::SparseVec;
use crate::gbasis::{GroebnerData, Side};

/// The graded free module `⊕_j A(-σ_j)`; generator `j` sits in degree `σ_j`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FreeModule {
    shifts: Vec<i64>,
}

impl FreeModule {
    pub fn new(shifts: Vec<i64>) -> Self {
        FreeModule { shifts }
    }

    pub fn rank(&self) -> usize {
        self.shifts.len()
    }

    pub fn is_zero(&self) -> bool {
        self.shifts.is_empty()
    }

    pub fn shifts(&self) -> &[i64] {
        &self.shifts
    }

    pub fn shift(&self, j: usize) -> i64 {
        self.shifts[j]
    }

    pub fn min_shift(&self) -> Option<i64> {
        self.shifts.iter().copied().min()
    }

    pub fn max_shift(&self) -> Option<i64> {
        self.shifts.iter().copied().max()
    }

    /// `F(ℓ)`: every generator degree drops by `ℓ`.
    pub fn twisted(&self, ell: i64) -> FreeModule {
        FreeModule { shifts: self.shifts.iter().map(|s| s - ell).collect() }
    }

    /// `dim F_n = Σ_j dim A_{n-σ_j}`.
    pub fn dim(&self, gd: &GroebnerData, n: i64) -> usize {
        self.shifts.iter().map(|s| gd.dim(n - s)).sum()
    }

    /// Start of each generator's block in `F_n`, plus the total dimension.
    pub fn offsets(&self, gd: &GroebnerData, n: i64) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.shifts.len() + 1);
        let mut acc = 0;
        out.push(0);
        for s in &self.shifts {
            acc += gd.dim(n - s);
            out.push(acc);
        }
        out
    }

    /// Splits a vector of `F_n` into per-generator blocks.
    pub fn blocks(&self, gd: &GroebnerData, n: i64, v: &SparseVec) -> Vec<SparseVec> {
        let off = self.offsets(gd, n);
        let mut parts: Vec<Vec<_>> = vec![Vec::new(); self.shifts.len()];
        let mut j = 0;
        for (i, c) in v.entries() {
            while off[j + 1] <= *i {
                j += 1;
            }
            parts[j].push((i - off[j], c.clone()));
        }
        parts.into_iter().map(SparseVec::from_sorted).collect()
    }

    /// Assembles blocks (one per generator) into a vector of `F_n`.
    pub fn join(&self, gd: &GroebnerData, n: i64, blocks: &[SparseVec]) -> SparseVec {
        let off = self.offsets(gd, n);
        let mut entries = Vec::new();
        for (j, b) in blocks.iter().enumerate() {
            entries.extend(b.entries().iter().map(|(i, c)| (i + off[j], c.clone())));
        }
        SparseVec::from_sorted(entries)
    }

    /// Action of generator `g` of `A` on `F_n`, blockwise.
    pub fn act(&self, gd: &GroebnerData, side: Side, g: usize, n: i64, v: &SparseVec) -> SparseVec {
        if v.is_zero() {
            return SparseVec::new();
        }
        let dg = gd.gens().degree(g) as i64;
        let blocks = self.blocks(gd, n, v);
        let moved: Vec<SparseVec> = blocks
            .iter()
            .zip(&self.shifts)
            .map(|(b, s)| if b.is_zero() { SparseVec::new() } else { gd.act(side, g, (n - s) as u32, b) })
            .collect();
        self.join(gd, n + dg, &moved)
    }
}
