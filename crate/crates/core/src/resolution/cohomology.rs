use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactlin::Echelon;
use crate::gbasis::GroebnerData;

use super::complex::FreeComplex;
use super::engine::FreeSpace;

/// An extremal degree read from a window, with whether the window proves it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeBound {
    /// `None` when no nonzero degree was seen.
    pub value: Option<i64>,
    pub certified: bool,
}

/// `dim H^p(X)_n` for a window of internal degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtDegreeTable {
    n_lo: i64,
    n_hi: i64,
    dims: BTreeMap<(i64, i64), usize>,
    floors: BTreeMap<i64, Option<i64>>,
    ceilings: BTreeMap<i64, Option<i64>>,
}

impl ExtDegreeTable {
    pub fn window(&self) -> (i64, i64) {
        (self.n_lo, self.n_hi)
    }

    pub fn dim(&self, p: i64, n: i64) -> usize {
        self.dims.get(&(p, n)).copied().unwrap_or(0)
    }

    /// Nonzero entries `(p, n, dim)`.
    pub fn entries(&self) -> impl Iterator<Item = (i64, i64, usize)> + '_ {
        self.dims.iter().map(|(&(p, n), &d)| (p, n, d))
    }

    pub fn is_zero(&self) -> bool {
        self.dims.is_empty()
    }

    /// Positions with a nonzero entry in the window.
    pub fn positions(&self) -> Vec<i64> {
        let mut out: Vec<i64> = self.dims.keys().map(|k| k.0).collect();
        out.dedup();
        out
    }

    fn floor(&self, p: i64) -> Option<i64> {
        self.floors.get(&p).copied().flatten()
    }

    /// `ged H^p`: certified when the window starts at or below the first
    /// degree where the term at `p` is nonzero.
    pub fn ged(&self, p: i64) -> DegreeBound {
        let value = self.dims.range((p, i64::MIN)..=(p, i64::MAX)).next().map(|(k, _)| k.1);
        let certified = match self.floor(p) {
            None => true,
            Some(f) => self.n_lo <= f && (value.is_some() || self.deg(p).certified),
        };
        DegreeBound { value, certified }
    }

    /// `deg H^p`: certified when the window reaches past the last degree in
    /// which the term at `p` can be nonzero.
    pub fn deg(&self, p: i64) -> DegreeBound {
        let value = self.dims.range((p, i64::MIN)..=(p, i64::MAX)).next_back().map(|(k, _)| k.1);
        let certified = match (self.floor(p), self.ceilings.get(&p).copied().flatten()) {
            (None, _) => true,
            (Some(f), Some(c)) => self.n_lo <= f && self.n_hi >= c,
            (Some(_), None) => false,
        };
        DegreeBound { value, certified }
    }

    /// `H^p` vanishes in every degree, provably.
    pub fn certified_zero(&self, p: i64) -> bool {
        let d = self.deg(p);
        d.value.is_none() && d.certified
    }

    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = self.entries().map(|(p, n, d)| json!({"i": p, "n": n, "dim": d})).collect();
        json!({"window": [self.n_lo, self.n_hi], "entries": entries})
    }
}

/// Cohomology of a bounded free complex by rank-nullity on each degree
/// slice of the differentials.
pub fn complex_cohomology(f: &FreeComplex, gd: &GroebnerData, n_lo: i64, n_hi: i64) -> Result<ExtDegreeTable> {
    let mut table =
        ExtDegreeTable { n_lo, n_hi, dims: BTreeMap::new(), floors: BTreeMap::new(), ceilings: BTreeMap::new() };
    if f.terms().is_empty() || n_hi < n_lo {
        return Ok(table);
    }
    let top = gd.top_degree();
    for p in f.positions() {
        let t = f.term(p);
        if let Some(lo) = t.min_shift() {
            if n_hi - lo > gd.dmax() as i64 {
                return Err(Error::Window(format!(
                    "degree {n_hi} of the term at position {p} needs the algebra through degree {}",
                    n_hi - lo
                )));
            }
        }
        table.floors.insert(p, t.min_shift());
        table.ceilings.insert(p, t.max_shift().and_then(|s| top.map(|d| s + d as i64)));
    }
    let field = gd.field();
    // rank of d^{p-1} in degree n, from the previous position
    let mut incoming: BTreeMap<i64, usize> = BTreeMap::new();
    for p in f.positions() {
        let src = f.term(p);
        let tgt = f.term(p + 1);
        let mut dp = f.slicer(gd, p);
        let space = FreeSpace { gd, side: f.side(), module: &tgt };
        let floor = src.min_shift().unwrap_or(n_hi + 1);
        let mut outgoing = BTreeMap::new();
        for n in floor..=n_hi {
            let imgs = dp.at(gd, &space, n);
            let mut ech = Echelon::new(tgt.dim(gd, n), field);
            for v in imgs {
                ech.insert(v);
            }
            let rank = ech.rank();
            outgoing.insert(n, rank);
            if n >= n_lo {
                let h = src.dim(gd, n) - rank - incoming.get(&n).copied().unwrap_or(0);
                if h > 0 {
                    table.dims.insert((p, n), h);
                }
            }
        }
        incoming = outgoing;
    }
    Ok(table)
}
