use std::collections::{BTreeMap, BTreeSet};

use serde_json::{json, Value};

/// Graded Betti numbers `β_{i,j} = dim Tor_i(k, M)_j` inside a window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(i64, i64), usize>,
    hmax: i64,
    dmax: i64,
    terminated_at: Option<i64>,
    complete_rows: BTreeSet<i64>,
}

impl BettiTable {
    pub fn new(hmax: i64, dmax: i64) -> Self {
        BettiTable { entries: BTreeMap::new(), hmax, dmax, terminated_at: None, complete_rows: BTreeSet::new() }
    }

    /// Table of generator degrees: `rows[i]` lists the degrees of the
    /// generators of the `i`-th term.
    pub fn from_shifts(rows: &[Vec<i64>], hmax: i64, dmax: i64) -> Self {
        let mut t = BettiTable::new(hmax, dmax);
        for (i, row) in rows.iter().enumerate() {
            for &j in row {
                t.add(i as i64, j, 1);
            }
        }
        t
    }

    pub fn add(&mut self, i: i64, j: i64, count: usize) {
        if count > 0 {
            *self.entries.entry((i, j)).or_insert(0) += count;
        }
    }

    pub fn set_terminated(&mut self, at: Option<i64>) {
        self.terminated_at = at;
    }

    pub fn certify_rows(&mut self, rows: impl IntoIterator<Item = i64>) {
        self.complete_rows.extend(rows);
    }

    pub fn beta(&self, i: i64, j: i64) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (i64, i64, usize)> + '_ {
        self.entries.iter().map(|(&(i, j), &b)| (i, j, b))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn hmax(&self) -> i64 {
        self.hmax
    }

    pub fn dmax(&self) -> i64 {
        self.dmax
    }

    pub fn terminated_at(&self) -> Option<i64> {
        self.terminated_at
    }

    pub fn complete_rows(&self) -> &BTreeSet<i64> {
        &self.complete_rows
    }

    /// Whether every row is certified (terminated with all rows complete).
    pub fn is_exact(&self) -> bool {
        match self.terminated_at {
            Some(p) => (self.min_index().unwrap_or(0)..=p).all(|i| self.complete_rows.contains(&i)),
            None => false,
        }
    }

    pub fn row(&self, i: i64) -> Vec<(i64, usize)> {
        self.entries.range((i, i64::MIN)..=(i, i64::MAX)).map(|(&(_, j), &b)| (j, b)).collect()
    }

    pub fn rank(&self, i: i64) -> usize {
        self.row(i).iter().map(|(_, b)| b).sum()
    }

    /// Homological indices with a nonzero entry, ascending.
    pub fn indices(&self) -> Vec<i64> {
        let mut out: Vec<i64> = self.entries.keys().map(|k| k.0).collect();
        out.dedup();
        out
    }

    pub fn min_index(&self) -> Option<i64> {
        self.entries.keys().next().map(|k| k.0)
    }

    pub fn max_index(&self) -> Option<i64> {
        self.entries.keys().next_back().map(|k| k.0)
    }

    /// `t_i = deg Tor_i`: the largest `j` with `β_{i,j} ≠ 0`.
    pub fn t(&self, i: i64) -> Option<i64> {
        self.row(i).last().map(|e| e.0)
    }

    /// `ged Tor_i`: the smallest `j` with `β_{i,j} ≠ 0`.
    pub fn ged(&self, i: i64) -> Option<i64> {
        self.row(i).first().map(|e| e.0)
    }

    /// The same table for `M(ℓ)`.
    pub fn twisted(&self, ell: i64) -> BettiTable {
        let mut out = self.clone();
        out.entries = self.entries.iter().map(|(&(i, j), &b)| ((i, j - ell), b)).collect();
        out.dmax = self.dmax - ell;
        out
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .indices()
            .into_iter()
            .map(|i| {
                let entries: Vec<Value> = self.row(i).into_iter().map(|(j, b)| json!({"j": j, "beta": b})).collect();
                json!({"i": i, "entries": entries})
            })
            .collect();
        json!({
            "hmax": self.hmax,
            "dmax": self.dmax,
            "terminated_at": self.terminated_at,
            "complete_rows": self.complete_rows.iter().collect::<Vec<_>>(),
            "rows": rows,
        })
    }

    /// Aligned table: columns are homological indices, rows are `j - i`.
    pub fn to_text(&self) -> String {
        let Some((lo_i, hi_i)) = self.min_index().zip(self.max_index()) else {
            return "(zero)\n".to_string();
        };
        let lo_r = self.entries.keys().map(|(i, j)| j - i).min().unwrap();
        let hi_r = self.entries.keys().map(|(i, j)| j - i).max().unwrap();
        let width =
            self.entries.values().map(|b| b.to_string().len()).max().unwrap().max(hi_i.to_string().len()).max(2);
        let label_w = lo_r.to_string().len().max(hi_r.to_string().len()) + 1;
        let mut out = format!("{:>label_w$} ", "");
        for i in lo_i..=hi_i {
            out.push_str(&format!(" {i:>width$}"));
        }
        out.push('\n');
        for r in lo_r..=hi_r {
            out.push_str(&format!("{:>label_w$}:", r));
            for i in lo_i..=hi_i {
                let b = self.beta(i, i + r);
                let cell = if b == 0 { "-".to_string() } else { b.to_string() };
                out.push_str(&format!(" {cell:>width$}"));
            }
            out.push('\n');
        }
        let status = match self.terminated_at {
            Some(p) if self.is_exact() => format!("terminated at {p} (certified)"),
            Some(p) => format!("terminated at {p} (observed)"),
            None => "not terminated".to_string(),
        };
        out.push_str(&format!("window: hmax = {}, dmax = {}; {status}\n", self.hmax, self.dmax));
        out
    }
}
