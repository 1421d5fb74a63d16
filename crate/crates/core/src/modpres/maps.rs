use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::freealg::{GeneratorSet, NcPolynomial};
use crate::gbasis::{AlgebraPresentation, GroebnerData};
use crate::resolution::{polynomial_rows, resolve_step, FreeSpace, ModuleSpace, Wanted};

use super::free::FreeModule;
use super::graded::{GradedModule, PresentedModule, RestrictedModule, TruncatedModule};
use super::presentation::ModulePresentation;

/// A degree-preserving algebra map `φ: source -> target`, given on
/// generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraMap {
    source: AlgebraPresentation,
    target: AlgebraPresentation,
    images: Vec<NcPolynomial>,
}

impl AlgebraMap {
    pub fn new(source: &AlgebraPresentation, target: &AlgebraPresentation, images: Vec<NcPolynomial>) -> Result<Self> {
        if source.field() != target.field() {
            return Err(Error::Input("source and target are over different fields".into()));
        }
        if images.len() != source.gens().len() {
            return Err(Error::Input(format!("{} images given for {} generators", images.len(), source.gens().len())));
        }
        for (g, p) in images.iter().enumerate() {
            let want = source.gens().degree(g);
            if !p.is_zero() && p.homogeneous_degree() != Some(want) {
                return Err(Error::NotHomogeneous(format!(
                    "image `{}` of `{}` should be homogeneous of degree {want}",
                    p.to_text(target.gens()),
                    source.gens().name(g)
                )));
            }
        }
        Ok(AlgebraMap { source: source.clone(), target: target.clone(), images })
    }

    /// The map sending each generator to the generator of the same name.
    pub fn by_names(source: &AlgebraPresentation, target: &AlgebraPresentation) -> Result<Self> {
        let images = (0..source.gens().len())
            .map(|g| {
                let name = source.gens().name(g);
                target
                    .gens()
                    .index_of(name)
                    .map(|h| NcPolynomial::monomial(target.gens().letter(h), target.field().one()))
                    .ok_or_else(|| Error::Input(format!("target has no generator `{name}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        AlgebraMap::new(source, target, images)
    }

    pub fn source(&self) -> &AlgebraPresentation {
        &self.source
    }

    pub fn target(&self) -> &AlgebraPresentation {
        &self.target
    }

    pub fn images(&self) -> &[NcPolynomial] {
        &self.images
    }

    /// `φ(p)` for a polynomial over the source.
    pub fn apply(&self, p: &NcPolynomial) -> NcPolynomial {
        let one = NcPolynomial::constant(self.target.field().one());
        let mut out = NcPolynomial::zero();
        for (w, c) in p.terms() {
            let mut prod = one.clone();
            for &l in w.letters() {
                prod = prod.mul(&self.images[l as usize]);
            }
            out = out.add(&prod.scale(c));
        }
        out
    }

    /// Whether every source relation maps to zero, as far as `gd` (for the
    /// target) can tell.
    pub fn check(&self, gd: &GroebnerData) -> bool {
        self.source.relations().iter().all(|r| {
            let d = r.degree().unwrap_or(0);
            d > gd.dmax() || gd.normal_form(&self.apply(r)).is_zero()
        })
    }
}

/// `T ⊗ A`: generators of both (names of `A` renamed on collision),
/// relations of both, and commutators between the two sets.
pub fn tensor_algebra(t: &AlgebraPresentation, a: &AlgebraPresentation) -> Result<AlgebraPresentation> {
    if t.field() != a.field() {
        return Err(Error::Input("the algebras are over different fields".into()));
    }
    let field = t.field();
    let mut names: Vec<String> = t.gens().names().to_vec();
    let mut taken: HashSet<String> = names.iter().cloned().collect();
    for name in a.gens().names() {
        let mut fresh = name.clone();
        let mut k = 2;
        while taken.contains(&fresh) {
            fresh = format!("{name}_{k}");
            k += 1;
        }
        taken.insert(fresh.clone());
        names.push(fresh);
    }
    let mut degrees = t.gens().degrees().to_vec();
    degrees.extend_from_slice(a.gens().degrees());
    let gens = GeneratorSet::new(names, degrees)?;
    let nt = t.gens().len() as u16;
    let relabel = |p: &NcPolynomial, offset: u16| {
        NcPolynomial::from_terms(
            p.terms().map(|(w, c)| (gens.word(w.letters().iter().map(|l| l + offset).collect()), c.clone())),
        )
    };
    let mut rels: Vec<NcPolynomial> = t.relations().iter().map(|r| relabel(r, 0)).collect();
    rels.extend(a.relations().iter().map(|r| relabel(r, nt)));
    let one = field.one();
    for i in 0..nt {
        for j in 0..a.gens().len() as u16 {
            let j = j + nt;
            let ij = NcPolynomial::monomial(gens.word(vec![i, j]), one.clone());
            let ji = NcPolynomial::monomial(gens.word(vec![j, i]), one.clone());
            rels.push(ij.sub(&ji));
        }
    }
    AlgebraPresentation::new(format!("{}_{}", t.label(), a.label()), field, gens, rels)
}

/// Presents a degreewise-known module by minimal generators and the
/// relations among them found through degree `hi`.
pub fn present_module(
    label: &str,
    module: &dyn GradedModule,
    gd: &GroebnerData,
    hi: i64,
) -> Result<ModulePresentation> {
    let lo = module.min_degree();
    let hi = hi.min(module.max_degree()).min(gd.dmax() as i64 + lo);
    let side = module.side();
    let algebra = gd.algebra();
    if hi < lo {
        return Ok(
            ModulePresentation::new(label, algebra, side, FreeModule::default(), Vec::new())?.with_window(Some(hi))
        );
    }
    let step0 = resolve_step(gd, side, &ModuleSpace(module), Wanted::Everything, lo, hi);
    let cover = step0.free();
    let step1 = resolve_step(gd, side, &FreeSpace { gd, side, module: &cover }, Wanted::Given(&step0.kernel), lo, hi);
    let rows = polynomial_rows(gd, &cover, &step1);
    Ok(ModulePresentation::new(label, algebra, side, cover, rows)?.with_window(Some(hi)))
}

/// Presentation of `M_{≥s}`. Generators are complete when the window
/// reaches `s + spread - 1` and the original generator degrees, where
/// `spread` is the largest generator degree of `A`; relations are complete
/// through the recorded window.
pub fn truncate_module(m: &ModulePresentation, s: i64, gd: &GroebnerData) -> Result<ModulePresentation> {
    let spread = gd.gens().max_degree().max(1) as i64;
    let need = (s + spread - 1).max(m.cover().max_shift().unwrap_or(s));
    let mut hi = gd.dmax() as i64 + m.cover().min_shift().unwrap_or(s);
    if let Some(w) = m.window() {
        hi = hi.min(w);
    }
    if hi < need {
        return Err(Error::Window(format!(
            "truncation at {s} needs the module through degree {need}, the window ends at {hi}"
        )));
    }
    let inner = PresentedModule::new(m, gd, hi);
    let module = TruncatedModule::new(Box::new(inner), s);
    present_module(&format!("{}_ge{}", m.label(), s).replace('-', "m"), &module, gd, hi)
}

/// `M` over `A` viewed as a module over the source of `φ: T -> A`.
pub fn restrict_scalars(
    gd_source: &GroebnerData,
    gd_target: &GroebnerData,
    phi: &AlgebraMap,
    m: &ModulePresentation,
    gen_bound: i64,
    rel_bound: i64,
) -> Result<ModulePresentation> {
    if gd_source.gens() != phi.source().gens() || gd_target.gens() != phi.target().gens() {
        return Err(Error::Input("Gröbner data does not match the map".into()));
    }
    let lo = m.cover().min_shift().unwrap_or(0);
    let avail = (gd_target.dmax() as i64 + lo).min(m.window().unwrap_or(i64::MAX));
    if rel_bound > avail {
        return Err(Error::Window(format!("relations through degree {rel_bound} need the module through {avail}")));
    }
    let inner = PresentedModule::new(m, gd_target, rel_bound);
    let restricted = RestrictedModule::new(Box::new(inner), phi.images().to_vec(), gd_target.gens().degrees().to_vec());
    let out = present_module(&format!("{}_res", m.label()), &restricted, gd_source, rel_bound)?;
    if let Some(&d) = out.cover().shifts().iter().find(|&&d| d > gen_bound) {
        return Err(Error::Window(format!("a generator is needed in degree {d}, above the bound {gen_bound}")));
    }
    Ok(out)
}
