use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::exactlin::{Field, SparseMatrix, SparseVec};
use crate::freealg::{GeneratorSet, NcPolynomial, ReducerIndex, Word};

use super::builder::GbBuilder;
use super::presentation::AlgebraPresentation;

/// Which side ring elements act on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
        }
    }
}

type Table = Vec<Vec<OnceLock<Vec<SparseVec>>>>;

/// A degree-truncated reduced Gröbner basis together with the normal-word
/// basis of every graded piece through `dmax`.
#[derive(Clone)]
pub struct GroebnerData {
    algebra: AlgebraPresentation,
    dmax: u32,
    gb: Vec<NcPolynomial>,
    normal_words: Vec<Vec<Word>>,
    index: Vec<HashMap<Vec<u16>, usize>>,
    left: Table,
    right: Table,
}

impl fmt::Debug for GroebnerData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroebnerData")
            .field("algebra", &self.algebra.label())
            .field("dmax", &self.dmax)
            .field("gb", &self.gb.len())
            .field("dims", &self.dims())
            .finish()
    }
}

/// Computes the reduced Gröbner basis of `a` truncated at degree `dmax`.
pub fn compute_groebner(a: &AlgebraPresentation, dmax: u32) -> Result<GroebnerData> {
    for r in a.relations() {
        if !r.is_homogeneous() {
            return Err(Error::NotHomogeneous(r.to_text(a.gens())));
        }
    }
    if dmax < a.max_relation_degree() {
        return Err(Error::Window(format!(
            "dmax = {dmax} is below the largest relation degree {}",
            a.max_relation_degree()
        )));
    }
    let mut b = GbBuilder::new(a.gens().clone(), a.field(), dmax);
    for m in 1..=dmax {
        let pre = b.prenormal(m);
        let mut cands: Vec<NcPolynomial> = a
            .relations()
            .iter()
            .filter(|r| r.degree() == Some(m))
            .map(|r| b.reduce(r))
            .filter(|r| !r.is_zero())
            .collect();
        cands.extend(b.overlap_candidates(m));
        let new = if cands.is_empty() { Vec::new() } else { b.echelonize(&cands, &pre) };
        b.close_degree(m, pre, new);
    }
    Ok(GroebnerData::from_parts(a.clone(), dmax, b.gb, b.normal))
}

impl GroebnerData {
    pub(crate) fn from_parts(
        algebra: AlgebraPresentation,
        dmax: u32,
        gb: Vec<NcPolynomial>,
        normal_words: Vec<Vec<Word>>,
    ) -> Self {
        let index = normal_words
            .iter()
            .map(|ws| ws.iter().enumerate().map(|(i, w)| (w.letters().to_vec(), i)).collect())
            .collect();
        let ngens = algebra.gens().len();
        let table = || (0..=dmax).map(|_| (0..ngens).map(|_| OnceLock::new()).collect()).collect();
        GroebnerData { algebra, dmax, gb, normal_words, index, left: table(), right: table() }
    }

    pub fn algebra(&self) -> &AlgebraPresentation {
        &self.algebra
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn gens(&self) -> &GeneratorSet {
        self.algebra.gens()
    }

    pub fn dmax(&self) -> u32 {
        self.dmax
    }

    pub fn gb(&self) -> &[NcPolynomial] {
        &self.gb
    }

    pub fn dims(&self) -> Vec<usize> {
        self.normal_words.iter().map(Vec::len).collect()
    }

    /// `dim A_n`; zero for negative `n`. Panics beyond the window.
    pub fn dim(&self, n: i64) -> usize {
        if n < 0 {
            return 0;
        }
        assert!(n <= self.dmax as i64, "degree {n} beyond the window dmax = {}", self.dmax);
        self.normal_words[n as usize].len()
    }

    pub fn normal_words(&self, n: u32) -> &[Word] {
        &self.normal_words[n as usize]
    }

    pub fn word_index(&self, w: &Word) -> Option<usize> {
        self.index.get(w.degree() as usize)?.get(w.letters()).copied()
    }

    /// Largest degree with `A_n != 0`, when the window proves that `A` is
    /// finite dimensional: `A_n` vanishes for as many consecutive degrees as
    /// the largest generator degree.
    pub fn top_degree(&self) -> Option<u32> {
        let span = self.gens().max_degree().max(1) as usize;
        let dims = self.dims();
        let mut run = 0;
        for (n, &d) in dims.iter().enumerate() {
            if d == 0 {
                run += 1;
                if run == span {
                    let start = n + 1 - span;
                    return Some(dims[..start].iter().rposition(|&d| d > 0).unwrap_or(0) as u32);
                }
            } else {
                run = 0;
            }
        }
        None
    }

    /// Full reduction modulo the truncated basis.
    pub fn normal_form(&self, p: &NcPolynomial) -> NcPolynomial {
        ReducerIndex::new(&self.gb).reduce(self.gens(), p)
    }

    /// Coordinates in the normal-word basis of `A_n` of a polynomial that is
    /// zero or homogeneous of degree `n`.
    pub fn coords(&self, p: &NcPolynomial, n: u32) -> SparseVec {
        let r = self.normal_form(p);
        SparseVec::from_pairs(r.terms().map(|(w, c)| {
            assert_eq!(w.degree(), n, "polynomial is not homogeneous of degree {n}");
            (self.index[n as usize][w.letters()], c.clone())
        }))
    }

    /// The polynomial with coordinates `v` in `A_n`.
    pub fn element(&self, n: u32, v: &SparseVec) -> NcPolynomial {
        let ws = &self.normal_words[n as usize];
        NcPolynomial::from_terms(v.entries().iter().map(|(i, c)| (ws[*i].clone(), c.clone())))
    }

    /// Images of the normal words of degree `n` under multiplication by
    /// generator `g` on the given side, as coordinate vectors of degree
    /// `n + deg g`.
    pub fn images(&self, side: Side, g: usize, n: u32) -> &[SparseVec] {
        let target = n + self.gens().degree(g);
        assert!(target <= self.dmax, "degree {target} beyond the window dmax = {}", self.dmax);
        let table = match side {
            Side::Left => &self.left,
            Side::Right => &self.right,
        };
        table[n as usize][g].get_or_init(|| {
            let gw = self.gens().letter(g);
            let field = self.field();
            self.normal_words[n as usize]
                .iter()
                .map(|w| {
                    let prod = match side {
                        Side::Left => gw.concat(w),
                        Side::Right => w.concat(&gw),
                    };
                    match self.index[target as usize].get(prod.letters()) {
                        Some(&i) => SparseVec::unit(i, field),
                        None => self.coords(&NcPolynomial::monomial(prod, field.one()), target),
                    }
                })
                .collect()
        })
    }

    /// Multiplies `v` in `A_n` by generator `g` on the given side.
    pub fn act(&self, side: Side, g: usize, n: u32, v: &SparseVec) -> SparseVec {
        if v.is_zero() {
            return SparseVec::new();
        }
        let imgs = self.images(side, g, n);
        let mut out = SparseVec::new();
        for (j, c) in v.entries() {
            out = out.add_scaled(c, &imgs[*j]);
        }
        out
    }

    /// Multiplies `v` in `A_n` by the homogeneous polynomial `p` on the
    /// given side (`p·v` for `Left`, `v·p` for `Right`).
    pub fn mul_poly(&self, side: Side, p: &NcPolynomial, n: u32, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (w, c) in p.terms() {
            let mut cur = v.clone();
            let mut deg = n;
            let letters: Vec<u16> = match side {
                Side::Left => w.letters().iter().rev().copied().collect(),
                Side::Right => w.letters().to_vec(),
            };
            for l in letters {
                cur = self.act(side, l as usize, deg, &cur);
                deg += self.gens().degree(l as usize);
            }
            out = out.add_scaled(c, &cur);
        }
        out
    }

    /// Generator action as a matrix `A_n -> A_{n + deg g}`: column `j` holds
    /// the coordinates of the product with the `j`-th normal word.
    pub fn mult_matrix(&self, side: Side, g: usize, n: u32) -> Result<SparseMatrix> {
        let target = n + self.gens().degree(g);
        if target > self.dmax {
            return Err(Error::Window(format!("degree {target} beyond the window dmax = {}", self.dmax)));
        }
        let cols = SparseMatrix::from_rows(self.dim(target as i64), self.images(side, g, n).to_vec());
        Ok(cols.transpose())
    }
}

/// Coefficients `dim A_0, ..., dim A_dmax`.
pub fn hilbert_series(g: &GroebnerData) -> Vec<usize> {
    g.dims()
}

/// Left multiplication matrices `A_n -> A_{n + deg g}`, one per generator.
pub fn mult_matrices(g: &GroebnerData, n: u32) -> Result<Vec<SparseMatrix>> {
    mult_matrices_on(g, Side::Left, n)
}

pub fn mult_matrices_on(g: &GroebnerData, side: Side, n: u32) -> Result<Vec<SparseMatrix>> {
    if n + g.gens().max_degree() > g.dmax() {
        return Err(Error::Window(format!(
            "n + max generator degree = {} exceeds dmax = {}",
            n + g.gens().max_degree(),
            g.dmax()
        )));
    }
    (0..g.gens().len()).map(|i| g.mult_matrix(side, i, n)).collect()
}
