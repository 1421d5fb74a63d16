use std::collections::BTreeMap;

use crate::exactlin::{left_kernel_basis, Echelon, SparseVec};
use crate::freealg::Word;
use crate::gbasis::{GroebnerData, Side};
use crate::modpres::{FreeModule, GradedModule};

/// Something the free module of a resolution step maps into.
pub(crate) trait Space {
    fn dim(&self, n: i64) -> usize;
    fn act(&self, g: usize, n: i64, v: &SparseVec) -> SparseVec;
}

pub(crate) struct ModuleSpace<'a>(pub &'a dyn GradedModule);

impl Space for ModuleSpace<'_> {
    fn dim(&self, n: i64) -> usize {
        if n < self.0.min_degree() {
            0
        } else {
            self.0.dim(n)
        }
    }

    fn act(&self, g: usize, n: i64, v: &SparseVec) -> SparseVec {
        self.0.act(g, n, v)
    }
}

pub(crate) struct FreeSpace<'a> {
    pub gd: &'a GroebnerData,
    pub side: Side,
    pub module: &'a FreeModule,
}

impl Space for FreeSpace<'_> {
    fn dim(&self, n: i64) -> usize {
        self.module.dim(self.gd, n)
    }

    fn act(&self, g: usize, n: i64, v: &SparseVec) -> SparseVec {
        self.module.act(self.gd, self.side, g, n, v)
    }
}

/// Which subspace of the target is to be generated.
pub(crate) enum Wanted<'a> {
    /// All of the target (the module itself).
    Everything,
    /// A given basis per degree (a kernel from the previous step).
    Given(&'a BTreeMap<i64, Vec<SparseVec>>),
}

/// One step of a minimal resolution: a minimal set of homogeneous
/// generators for the wanted subspace, and the kernel of the induced map
/// from the free module on them.
pub(crate) struct StepOut {
    pub shifts: Vec<i64>,
    /// Image of each generator, in the target at the generator's degree.
    pub images: Vec<SparseVec>,
    pub kernel: BTreeMap<i64, Vec<SparseVec>>,
}

impl StepOut {
    pub fn free(&self) -> FreeModule {
        FreeModule::new(self.shifts.clone())
    }
}

/// Images of the normal-word basis of a free module, degree by degree.
pub(crate) struct ImageDp {
    side: Side,
    pub shifts: Vec<i64>,
    pub gen_images: Vec<SparseVec>,
    offsets: BTreeMap<i64, Vec<usize>>,
    images: BTreeMap<i64, Vec<SparseVec>>,
}

impl ImageDp {
    pub fn new(side: Side, shifts: Vec<i64>, gen_images: Vec<SparseVec>) -> Self {
        ImageDp { side, shifts, gen_images, offsets: BTreeMap::new(), images: BTreeMap::new() }
    }

    /// Images of the basis `(j, w)` of `F_n`, ordered by generator then
    /// normal word. Lower degrees must already be computed, or be computable
    /// from those that are.
    pub fn at(&mut self, gd: &GroebnerData, target: &dyn Space, n: i64) -> &[SparseVec] {
        if !self.images.contains_key(&n) {
            let imgs = self.compute(gd, target, n);
            self.images.insert(n, imgs);
        }
        &self.images[&n]
    }

    fn compute(&mut self, gd: &GroebnerData, target: &dyn Space, n: i64) -> Vec<SparseVec> {
        let gens = gd.gens();
        let mut off = vec![0usize];
        for s in &self.shifts {
            let d = if n >= *s { gd.dim(n - s) } else { 0 };
            off.push(off.last().unwrap() + d);
        }
        let mut out = Vec::with_capacity(*off.last().unwrap());
        for j in 0..self.shifts.len() {
            let s = self.shifts[j];
            if n < s {
                continue;
            }
            let words: Vec<Word> = gd.normal_words((n - s) as u32).to_vec();
            for w in words {
                if w.is_empty() {
                    out.push(self.gen_images[j].clone());
                    continue;
                }
                let (g, rest) = match self.side {
                    Side::Left => (w.letters()[0] as usize, w.slice(gens, 1, w.len())),
                    Side::Right => (w.letters()[w.len() - 1] as usize, w.slice(gens, 0, w.len() - 1)),
                };
                let m = n - gens.degree(g) as i64;
                let idx = gd.word_index(&rest).expect("subword of a normal word is normal");
                let base = self.offset(gd, m, j) + idx;
                let prev = self.at(gd, target, m)[base].clone();
                out.push(target.act(g, m, &prev));
            }
        }
        self.offsets.insert(n, off);
        out
    }

    fn offset(&mut self, gd: &GroebnerData, m: i64, j: usize) -> usize {
        if !self.offsets.contains_key(&m) {
            let mut off = vec![0usize];
            for s in &self.shifts {
                let d = if m >= *s { gd.dim(m - s) } else { 0 };
                off.push(off.last().unwrap() + d);
            }
            self.offsets.insert(m, off);
        }
        self.offsets[&m][j]
    }

    /// Registers a new generator of degree `n` after `F_n` was computed.
    pub fn push_generator(&mut self, n: i64, image: SparseVec) {
        self.shifts.push(n);
        self.gen_images.push(image.clone());
        if let Some(v) = self.images.get_mut(&n) {
            v.push(image);
        }
        if let Some(o) = self.offsets.get_mut(&n) {
            let last = *o.last().unwrap();
            o.push(last + 1);
        }
    }
}

/// Minimal generators of the wanted subspace in degrees `lo..=hi`, and the
/// kernel of the free cover on them.
pub(crate) fn resolve_step(
    gd: &GroebnerData,
    side: Side,
    target: &dyn Space,
    wanted: Wanted<'_>,
    lo: i64,
    hi: i64,
) -> StepOut {
    let field = gd.field();
    let mut dp = ImageDp::new(side, Vec::new(), Vec::new());
    let mut kernel = BTreeMap::new();
    for n in lo..=hi {
        let tdim = target.dim(n);
        let imgs = dp.at(gd, target, n).to_vec();
        let wanted_here: Vec<SparseVec> = match &wanted {
            Wanted::Everything => Vec::new(),
            Wanted::Given(k) => k.get(&n).cloned().unwrap_or_default(),
        };
        let need_new = match &wanted {
            Wanted::Everything => tdim > 0,
            Wanted::Given(_) => !wanted_here.is_empty(),
        };
        let mut fresh: Vec<SparseVec> = Vec::new();
        if need_new {
            let mut span = Echelon::new(tdim, field);
            for v in &imgs {
                span.insert(v);
            }
            match &wanted {
                Wanted::Everything => {
                    fresh = (0..tdim).filter(|&c| !span.is_pivot(c)).map(|c| SparseVec::unit(c, field)).collect();
                }
                Wanted::Given(_) => {
                    if span.rank() < wanted_here.len() {
                        let mut extra = Echelon::new(tdim, field);
                        for v in &wanted_here {
                            extra.insert(&span.reduce(v));
                        }
                        fresh = extra.reduced_rows();
                    }
                }
            }
        }
        for v in fresh {
            dp.push_generator(n, v);
        }
        let all = dp.at(gd, target, n);
        if !all.is_empty() {
            let k = left_kernel_basis(all, tdim, field);
            if !k.is_empty() {
                kernel.insert(n, k);
            }
        }
    }
    StepOut { shifts: dp.shifts, images: dp.gen_images, kernel }
}
