use std::collections::BTreeMap;

use super::scalar::{Field, Scalar};

/// Sparse vector: entries sorted by index, no stored zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SparseVec {
    entries: Vec<(usize, Scalar)>,
}

impl SparseVec {
    pub fn new() -> Self {
        SparseVec { entries: Vec::new() }
    }

    pub fn unit(index: usize, field: Field) -> Self {
        SparseVec { entries: vec![(index, field.one())] }
    }

    /// Builds a vector from arbitrary `(index, value)` pairs, summing
    /// duplicates and dropping zeros.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, Scalar)>) -> Self {
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (i, v) in pairs {
            match acc.get_mut(&i) {
                Some(x) => *x = x.add(&v),
                None => {
                    acc.insert(i, v);
                }
            }
        }
        SparseVec { entries: acc.into_iter().filter(|(_, v)| !v.is_zero()).collect() }
    }

    pub fn from_sorted(entries: Vec<(usize, Scalar)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|(_, v)| !v.is_zero()));
        SparseVec { entries }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[(usize, Scalar)] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<(usize, Scalar)> {
        self.entries
    }

    pub fn get(&self, index: usize) -> Option<&Scalar> {
        self.entries.binary_search_by_key(&index, |(i, _)| *i).ok().map(|k| &self.entries[k].1)
    }

    pub fn leading(&self) -> Option<&(usize, Scalar)> {
        self.entries.first()
    }

    pub fn scale(&self, c: &Scalar) -> SparseVec {
        if c.is_zero() {
            return SparseVec::new();
        }
        SparseVec { entries: self.entries.iter().map(|(i, v)| (*i, v.mul(c))).collect() }
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, c: &Scalar, other: &SparseVec) -> SparseVec {
        if c.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (0, 0);
        while a < self.entries.len() || b < other.entries.len() {
            let ia = self.entries.get(a).map(|e| e.0);
            let ib = other.entries.get(b).map(|e| e.0);
            match (ia, ib) {
                (Some(x), Some(y)) if x == y => {
                    let v = self.entries[a].1.add(&c.mul(&other.entries[b].1));
                    if !v.is_zero() {
                        out.push((x, v));
                    }
                    a += 1;
                    b += 1;
                }
                (Some(x), Some(y)) if x < y => {
                    out.push(self.entries[a].clone());
                    a += 1;
                }
                (Some(_), None) => {
                    out.push(self.entries[a].clone());
                    a += 1;
                }
                (_, Some(y)) => {
                    out.push((y, c.mul(&other.entries[b].1)));
                    b += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        SparseVec { entries: out }
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        if other.entries.is_empty() {
            return self.clone();
        }
        let one = other.entries[0].1.field().one();
        self.add_scaled(&one, other)
    }

    /// Re-indexes every entry by `offset`.
    pub fn shifted(&self, offset: usize) -> SparseVec {
        SparseVec { entries: self.entries.iter().map(|(i, v)| (i + offset, v.clone())).collect() }
    }

    pub fn to_dense(&self, len: usize, field: Field) -> Vec<Scalar> {
        let mut out = vec![field.zero(); len];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }
}

/// Row-major sparse matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, data: vec![SparseVec::new(); rows] }
    }

    pub fn from_rows(cols: usize, data: Vec<SparseVec>) -> Self {
        debug_assert!(data.iter().all(|r| r.entries().iter().all(|(c, _)| *c < cols)));
        SparseMatrix { rows: data.len(), cols, data }
    }

    pub fn from_dense(field: Field, rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .map(|r| {
                SparseVec::from_sorted(
                    r.iter().enumerate().filter(|(_, v)| **v != 0).map(|(i, v)| (i, field.from_i64(*v))).collect(),
                )
            })
            .collect();
        SparseMatrix { rows: rows.len(), cols, data }
    }

    pub fn identity(n: usize, field: Field) -> Self {
        SparseMatrix { rows: n, cols: n, data: (0..n).map(|i| SparseVec::unit(i, field)).collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &SparseVec {
        &self.data[r]
    }

    pub fn row_vecs(&self) -> &[SparseVec] {
        &self.data
    }

    pub fn get(&self, r: usize, c: usize) -> Option<&Scalar> {
        self.data[r].get(c)
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(SparseVec::nnz).sum()
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut cols: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); self.cols];
        for (r, row) in self.data.iter().enumerate() {
            for (c, v) in row.entries() {
                cols[*c].push((r, v.clone()));
            }
        }
        SparseMatrix { rows: self.cols, cols: self.rows, data: cols.into_iter().map(SparseVec::from_sorted).collect() }
    }

    /// `x ↦ M x` for a column vector `x` of length `cols`.
    pub fn apply(&self, x: &SparseVec) -> SparseVec {
        let mut pairs = Vec::new();
        for (r, row) in self.data.iter().enumerate() {
            let mut acc: Option<Scalar> = None;
            let (mut a, mut b) = (0, 0);
            let (re, xe) = (row.entries(), x.entries());
            while a < re.len() && b < xe.len() {
                match re[a].0.cmp(&xe[b].0) {
                    std::cmp::Ordering::Less => a += 1,
                    std::cmp::Ordering::Greater => b += 1,
                    std::cmp::Ordering::Equal => {
                        let t = re[a].1.mul(&xe[b].1);
                        acc = Some(match acc {
                            Some(s) => s.add(&t),
                            None => t,
                        });
                        a += 1;
                        b += 1;
                    }
                }
            }
            if let Some(s) = acc {
                if !s.is_zero() {
                    pairs.push((r, s));
                }
            }
        }
        SparseVec::from_sorted(pairs)
    }
}

/// Incrementally maintained row-echelon basis of a subspace.
///
/// Rows are kept in semi-echelon form (each row has a distinct leading
/// column with coefficient 1). Reduction of a vector modulo the span is
/// canonical: the remainder is the unique representative vanishing on all
/// pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: Field,
    ncols: usize,
    rows: Vec<SparseVec>,
    pivot_row: BTreeMap<usize, usize>,
}

impl Echelon {
    pub fn new(ncols: usize, field: Field) -> Self {
        Echelon { field, ncols, rows: Vec::new(), pivot_row: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_row.contains_key(&col)
    }

    pub fn pivot_cols(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivot_row.keys().copied()
    }

    /// Reduces `v` modulo the current span.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut cur = v.clone();
        let mut i = 0;
        while i < cur.entries.len() {
            let (c, coef) = {
                let e = &cur.entries[i];
                (e.0, e.1.clone())
            };
            match self.pivot_row.get(&c) {
                Some(&r) => {
                    cur = cur.add_scaled(&coef.neg(), &self.rows[r]);
                }
                None => i += 1,
            }
        }
        cur
    }

    /// Inserts `v`; returns its new pivot column if it enlarged the span.
    pub fn insert(&mut self, v: &SparseVec) -> Option<usize> {
        let r = self.reduce(v);
        let (col, lead) = r.leading().cloned()?;
        let normalized = r.scale(&lead.inv().expect("nonzero leading entry"));
        self.pivot_row.insert(col, self.rows.len());
        self.rows.push(normalized);
        Some(col)
    }

    /// Basis rows in insertion order (semi-echelon, not fully reduced).
    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Rows of the unique reduced row-echelon basis, ordered by pivot column.
    pub fn reduced_rows(&self) -> Vec<SparseVec> {
        let mut out: BTreeMap<usize, SparseVec> = BTreeMap::new();
        // Back-substitute from the rightmost pivot leftwards.
        for (&col, &r) in self.pivot_row.iter().rev() {
            let mut row = self.rows[r].clone();
            let mut i = 1;
            while i < row.entries.len() {
                let (c, coef) = {
                    let e = &row.entries[i];
                    (e.0, e.1.clone())
                };
                match out.get(&c) {
                    Some(p) => row = row.add_scaled(&coef.neg(), p),
                    None => i += 1,
                }
            }
            out.insert(col, row);
        }
        out.into_values().collect()
    }

    pub fn field(&self) -> Field {
        self.field
    }
}

/// Reduced row-echelon form with pivot positions and rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowReduction {
    pub reduced: SparseMatrix,
    pub pivots: Vec<(usize, usize)>,
    pub rank: usize,
}

pub fn row_reduce(m: &SparseMatrix, field: Field) -> RowReduction {
    let mut ech = Echelon::new(m.cols(), field);
    for row in m.row_vecs() {
        ech.insert(row);
    }
    let rows = ech.reduced_rows();
    let rank = rows.len();
    let pivots = rows.iter().enumerate().map(|(i, r)| (i, r.leading().expect("nonzero row").0)).collect();
    let mut data = rows;
    data.resize(m.rows(), SparseVec::new());
    RowReduction { reduced: SparseMatrix::from_rows(m.cols(), data), pivots, rank }
}

/// Basis of the right null space `{x : M x = 0}`: one vector per free
/// column, in increasing column order, with that free variable set to 1.
pub fn kernel_basis(m: &SparseMatrix, field: Field) -> Vec<SparseVec> {
    let mut ech = Echelon::new(m.cols(), field);
    for row in m.row_vecs() {
        ech.insert(row);
    }
    kernel_from_echelon(&ech)
}

pub(crate) fn kernel_from_echelon(ech: &Echelon) -> Vec<SparseVec> {
    let field = ech.field();
    let rows = ech.reduced_rows();
    let pivots: Vec<usize> = rows.iter().map(|r| r.leading().unwrap().0).collect();
    // For each free column f collect -R[r][f] at pivot column of r.
    let mut by_free: BTreeMap<usize, Vec<(usize, Scalar)>> = BTreeMap::new();
    for (r, row) in rows.iter().enumerate() {
        for (c, v) in row.entries().iter().skip(1) {
            by_free.entry(*c).or_default().push((pivots[r], v.neg()));
        }
    }
    let mut out = Vec::new();
    for f in 0..ech.ncols() {
        if ech.is_pivot(f) {
            continue;
        }
        let mut pairs = by_free.remove(&f).unwrap_or_default();
        pairs.push((f, field.one()));
        pairs.sort_by_key(|p| p.0);
        out.push(SparseVec::from_sorted(pairs));
    }
    out
}

/// Basis of the left null space `{y : yᵀ M = 0}` of a matrix given by rows.
pub fn left_kernel_basis(rows: &[SparseVec], ncols: usize, field: Field) -> Vec<SparseVec> {
    let m = SparseMatrix::from_rows(ncols, rows.to_vec());
    kernel_basis(&m.transpose(), field)
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    #[test]
    fn empty_matrix() {
        let r = row_reduce(&SparseMatrix::zeros(0, 0), Q);
        assert_eq!(r.rank, 0);
        assert!(r.pivots.is_empty());
    }

    #[test]
    fn identity_is_reduced() {
        let id = SparseMatrix::identity(2, Q);
        let r = row_reduce(&id, Q);
        assert_eq!(r.reduced, id);
        assert_eq!(r.rank, 2);
        assert!(kernel_basis(&id, Q).is_empty());
    }

    #[test]
    fn dependent_rows() {
        let m = SparseMatrix::from_dense(Q, &[vec![1, 2], vec![2, 4]]);
        let r = row_reduce(&m, Q);
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivots, vec![(0, 0)]);
        assert_eq!(r.reduced, SparseMatrix::from_dense(Q, &[vec![1, 2], vec![0, 0]]));
    }

    #[test]
    fn kernel_examples() {
        let z = SparseMatrix::zeros(1, 3);
        let k = kernel_basis(&z, Q);
        assert_eq!(k, (0..3).map(|i| SparseVec::unit(i, Q)).collect::<Vec<_>>());

        let m = SparseMatrix::from_dense(Q, &[vec![1, 1]]);
        let k = kernel_basis(&m, Q);
        assert_eq!(k, vec![SparseVec::from_sorted(vec![(0, Q.from_i64(-1)), (1, Q.one())])]);
    }

    #[test]
    fn left_kernel() {
        let rows = SparseMatrix::from_dense(Q, &[vec![1, 0], vec![0, 1], vec![1, 1]]);
        let k = left_kernel_basis(rows.row_vecs(), 2, Q);
        assert_eq!(k.len(), 1);
        assert_eq!(k[0].to_dense(3, Q), vec![Q.from_i64(-1), Q.from_i64(-1), Q.one()]);
    }
}
