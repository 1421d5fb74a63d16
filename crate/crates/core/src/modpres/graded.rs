use std::collections::HashMap;

use crate::exactlin::{Echelon, Field, SparseVec};
use crate::freealg::NcPolynomial;
use crate::gbasis::{GroebnerData, Side};

use super::free::FreeModule;
use super::presentation::ModulePresentation;

/// A graded module known degreewise through a window, with the action of
/// the algebra generators.
pub trait GradedModule: Send + Sync {
    fn side(&self) -> Side;

    fn field(&self) -> Field;

    /// `M_n = 0` for every `n` below this degree.
    fn min_degree(&self) -> i64;

    /// Largest degree whose graded piece is available.
    fn max_degree(&self) -> i64;

    fn dim(&self, n: i64) -> usize;

    /// Generator `g` acting on `v ∈ M_n`; the result lies in `M_{n + deg g}`.
    fn act(&self, g: usize, n: i64, v: &SparseVec) -> SparseVec;
}

struct Piece {
    ech: Echelon,
    /// Non-pivot columns of `F_n`, the basis of `M_n`.
    basis: Vec<usize>,
    pos: HashMap<usize, usize>,
}

/// `coker(F_1 -> F_0)` computed degreewise as `F_0,n / V_n`, with
/// `V_n = Σ_g g·V_{n - deg g} + span(relations of degree n)`.
pub struct PresentedModule<'a> {
    gd: &'a GroebnerData,
    side: Side,
    cover: FreeModule,
    lo: i64,
    hi: i64,
    pieces: Vec<Piece>,
}

impl<'a> PresentedModule<'a> {
    /// Builds graded pieces through degree `hi`, clamped to what `gd`
    /// supports.
    pub fn new(m: &ModulePresentation, gd: &'a GroebnerData, hi: i64) -> Self {
        let cover = m.cover().clone();
        let lo = cover.min_shift().unwrap_or(0);
        let hi = hi.min(gd.dmax() as i64 + lo);
        let field = gd.field();
        let rel_degrees = m.relation_degrees();
        let mut pieces: Vec<Piece> = Vec::new();
        let mut rows_by_degree: Vec<Vec<SparseVec>> = Vec::new();
        for n in lo..=hi {
            let dim = cover.dim(gd, n);
            let mut ech = Echelon::new(dim, field);
            for g in 0..gd.gens().len() {
                let src = n - gd.gens().degree(g) as i64;
                if src < lo {
                    continue;
                }
                for v in &rows_by_degree[(src - lo) as usize] {
                    ech.insert(&cover.act(gd, m.side(), g, src, v));
                }
            }
            for (row, &d) in m.relations().iter().zip(&rel_degrees) {
                if d == n {
                    let blocks: Vec<SparseVec> = row
                        .iter()
                        .enumerate()
                        .map(
                            |(j, p)| {
                                if p.is_zero() {
                                    SparseVec::new()
                                } else {
                                    gd.coords(p, (n - cover.shift(j)) as u32)
                                }
                            },
                        )
                        .collect();
                    ech.insert(&cover.join(gd, n, &blocks));
                }
            }
            let basis: Vec<usize> = (0..dim).filter(|&c| !ech.is_pivot(c)).collect();
            let pos = basis.iter().enumerate().map(|(i, &c)| (c, i)).collect();
            rows_by_degree.push(ech.rows().to_vec());
            pieces.push(Piece { ech, basis, pos });
        }
        PresentedModule { gd, side: m.side(), cover, lo, hi, pieces }
    }

    fn piece(&self, n: i64) -> Option<&Piece> {
        if n < self.lo {
            return None;
        }
        assert!(n <= self.hi, "degree {n} beyond the module window {}", self.hi);
        Some(&self.pieces[(n - self.lo) as usize])
    }

    /// Image in `M_n` of an element of the cover.
    pub fn project(&self, n: i64, v: &SparseVec) -> SparseVec {
        let Some(p) = self.piece(n) else {
            return SparseVec::new();
        };
        let r = p.ech.reduce(v);
        SparseVec::from_sorted(r.into_entries().into_iter().map(|(c, x)| (p.pos[&c], x)).collect())
    }

    /// A preimage in the cover of `v ∈ M_n`.
    pub fn lift(&self, n: i64, v: &SparseVec) -> SparseVec {
        let p = self.piece(n).expect("nonzero piece");
        SparseVec::from_sorted(v.entries().iter().map(|(i, x)| (p.basis[*i], x.clone())).collect())
    }

    pub fn cover(&self) -> &FreeModule {
        &self.cover
    }
}

impl GradedModule for PresentedModule<'_> {
    fn side(&self) -> Side {
        self.side
    }

    fn field(&self) -> Field {
        self.gd.field()
    }

    fn min_degree(&self) -> i64 {
        self.lo
    }

    fn max_degree(&self) -> i64 {
        self.hi
    }

    fn dim(&self, n: i64) -> usize {
        self.piece(n).map_or(0, |p| p.basis.len())
    }

    fn act(&self, g: usize, n: i64, v: &SparseVec) -> SparseVec {
        if v.is_zero() {
            return SparseVec::new();
        }
        let lifted = self.lift(n, v);
        let moved = self.cover.act(self.gd, self.side, g, n, &lifted);
        self.project(n + self.gd.gens().degree(g) as i64, &moved)
    }
}

/// `M_{≥s}`.
pub struct TruncatedModule<'a> {
    inner: Box<dyn GradedModule + 'a>,
    s: i64,
}

impl<'a> TruncatedModule<'a> {
    pub fn new(inner: Box<dyn GradedModule + 'a>, s: i64) -> Self {
        TruncatedModule { inner, s }
    }
}

impl GradedModule for TruncatedModule<'_> {
    fn side(&self) -> Side {
        self.inner.side()
    }

    fn field(&self) -> Field {
        self.inner.field()
    }

    fn min_degree(&self) -> i64 {
        self.inner.min_degree().max(self.s)
    }

    fn max_degree(&self) -> i64 {
        self.inner.max_degree()
    }

    fn dim(&self, n: i64) -> usize {
        if n < self.s {
            0
        } else {
            self.inner.dim(n)
        }
    }

    fn act(&self, g: usize, n: i64, v: &SparseVec) -> SparseVec {
        if n < self.s {
            SparseVec::new()
        } else {
            self.inner.act(g, n, v)
        }
    }
}

/// `M(ℓ)` with `M(ℓ)_n = M_{n+ℓ}`.
pub struct ShiftedModule<'a> {
    inner: Box<dyn GradedModule + 'a>,
    ell: i64,
}

impl<'a> ShiftedModule<'a> {
    pub fn new(inner: Box<dyn GradedModule + 'a>, ell: i64) -> Self {
        ShiftedModule { inner, ell }
    }
}

impl GradedModule for ShiftedModule<'_> {
    fn side(&self) -> Side {
        self.inner.side()
    }

    fn field(&self) -> Field {
        self.inner.field()
    }

    fn min_degree(&self) -> i64 {
        self.inner.min_degree() - self.ell
    }

    fn max_degree(&self) -> i64 {
        self.inner.max_degree() - self.ell
    }

    fn dim(&self, n: i64) -> usize {
        self.inner.dim(n + self.ell)
    }

    fn act(&self, g: usize, n: i64, v: &SparseVec) -> SparseVec {
        self.inner.act(g, n + self.ell, v)
    }
}

/// A module over `A` viewed over `T` through `φ: T -> A`; generator `g`
/// of `T` acts as the polynomial `φ(g)`.
pub struct RestrictedModule<'a> {
    inner: Box<dyn GradedModule + 'a>,
    images: Vec<NcPolynomial>,
    target_degrees: Vec<u32>,
}

impl<'a> RestrictedModule<'a> {
    pub fn new(inner: Box<dyn GradedModule + 'a>, images: Vec<NcPolynomial>, target_degrees: Vec<u32>) -> Self {
        RestrictedModule { inner, images, target_degrees }
    }
}

impl GradedModule for RestrictedModule<'_> {
    fn side(&self) -> Side {
        self.inner.side()
    }

    fn field(&self) -> Field {
        self.inner.field()
    }

    fn min_degree(&self) -> i64 {
        self.inner.min_degree()
    }

    fn max_degree(&self) -> i64 {
        self.inner.max_degree()
    }

    fn dim(&self, n: i64) -> usize {
        self.inner.dim(n)
    }

    fn act(&self, g: usize, n: i64, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (w, c) in self.images[g].terms() {
            let letters: Vec<u16> = match self.side() {
                Side::Left => w.letters().iter().rev().copied().collect(),
                Side::Right => w.letters().to_vec(),
            };
            let mut cur = v.clone();
            let mut deg = n;
            for l in letters {
                if cur.is_zero() {
                    break;
                }
                cur = self.inner.act(l as usize, deg, &cur);
                deg += self.target_degrees[l as usize] as i64;
            }
            out = out.add_scaled(c, &cur);
        }
        out
    }
}

/// Graded dimensions `dim M_n` for `n` in `lo..=hi`.
pub fn graded_dims(m: &dyn GradedModule, lo: i64, hi: i64) -> Vec<usize> {
    (lo..=hi).map(|n| if n < m.min_degree() { 0 } else { m.dim(n) }).collect()
}
