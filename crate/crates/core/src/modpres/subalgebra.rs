use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::exactlin::{left_kernel_basis, Echelon, SparseVec};
use crate::freealg::{GeneratorSet, NcPolynomial, Word};
use crate::gbasis::{AlgebraPresentation, GbBuilder, GroebnerData, Side};

/// An algebra presentation valid through a degree window, with the element
/// of the ambient algebra each generator stands for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindowedPresentation {
    pub algebra: AlgebraPresentation,
    /// Generators are complete through this degree.
    pub gen_bound: u32,
    /// Relations are complete through this degree.
    pub rel_bound: u32,
    pub images: Vec<NcPolynomial>,
}

/// `A^{(d)} = ⊕ A_{di}`, regraded so that `A_{di}` sits in degree `i`.
pub fn veronese_presentation(
    gd: &GroebnerData,
    d: u32,
    gen_bound: u32,
    rel_bound: u32,
) -> Result<WindowedPresentation> {
    if d == 0 {
        return Err(Error::Input("the Veronese degree must be positive".into()));
    }
    let label = format!("{}_v{d}", gd.algebra().label());
    kernel_presentation(gd, &label, d, Candidates::AllWords, gen_bound, rel_bound)
}

/// The subalgebra generated by `subgens`, at native degrees. Supplied
/// elements that are products of the others are dropped.
pub fn subalgebra_presentation(
    gd: &GroebnerData,
    subgens: &[NcPolynomial],
    gen_bound: u32,
    rel_bound: u32,
) -> Result<WindowedPresentation> {
    for p in subgens {
        match p.homogeneous_degree() {
            None if p.is_zero() => return Err(Error::Input("a subalgebra generator is zero".into())),
            None => return Err(Error::NotHomogeneous(p.to_text(gd.gens()))),
            Some(0) => return Err(Error::Input("subalgebra generators must lie in positive degree".into())),
            Some(e) if e > gen_bound => {
                return Err(Error::Window(format!("generator of degree {e} is above the bound {gen_bound}")))
            }
            _ => {}
        }
    }
    let label = format!("{}_sub", gd.algebra().label());
    kernel_presentation(gd, &label, 1, Candidates::Given(subgens), gen_bound, rel_bound)
}

enum Candidates<'a> {
    AllWords,
    Given(&'a [NcPolynomial]),
}

fn kernel_presentation(
    gd: &GroebnerData,
    label: &str,
    scale: u32,
    cands: Candidates<'_>,
    gen_bound: u32,
    rel_bound: u32,
) -> Result<WindowedPresentation> {
    let top = gen_bound.max(rel_bound);
    if scale * top > gd.dmax() {
        return Err(Error::Window(format!(
            "degree {} of the ambient algebra is needed, the window ends at {}",
            scale * top,
            gd.dmax()
        )));
    }
    let field = gd.field();

    // Generators: per degree, candidates independent of products of lower ones.
    let mut gen_polys: Vec<NcPolynomial> = Vec::new();
    let mut gen_degrees: Vec<u32> = Vec::new();
    let mut pieces: Vec<Vec<SparseVec>> = vec![vec![SparseVec::unit(0, field)]];
    for m in 1..=gen_bound {
        let n = scale * m;
        let mut span = Echelon::new(gd.dim(n as i64), field);
        for (f, &e) in gen_polys.iter().zip(&gen_degrees) {
            if e <= m {
                for v in &pieces[(m - e) as usize] {
                    span.insert(&gd.mul_poly(Side::Right, f, scale * (m - e), v));
                }
            }
        }
        let here: Vec<NcPolynomial> = match &cands {
            Candidates::AllWords => {
                gd.normal_words(n).iter().map(|w| NcPolynomial::monomial(w.clone(), field.one())).collect()
            }
            Candidates::Given(list) => list.iter().filter(|p| p.homogeneous_degree() == Some(m)).cloned().collect(),
        };
        for p in here {
            if span.insert(&gd.coords(&p, n)).is_some() {
                gen_polys.push(p);
                gen_degrees.push(m);
            }
        }
        pieces.push(span.reduced_rows());
    }
    if gen_polys.is_empty() {
        let gens = GeneratorSet::empty();
        let algebra = AlgebraPresentation::new(label, field, gens, Vec::new())?;
        return Ok(WindowedPresentation { algebra, gen_bound, rel_bound, images: Vec::new() });
    }
    let gens = GeneratorSet::new(generator_names(gd.gens(), &gen_polys), gen_degrees)?;

    // Relations: degreewise kernel of evaluation on words avoiding the
    // leading words found so far.
    let mut b = GbBuilder::new(gens.clone(), field, rel_bound);
    let mut evals: HashMap<Vec<u16>, SparseVec> = HashMap::new();
    evals.insert(Vec::new(), SparseVec::unit(0, field));
    let mut relations = Vec::new();
    for m in 1..=rel_bound {
        let n = scale * m;
        let pre = b.prenormal(m);
        let rows: Vec<SparseVec> = pre
            .iter()
            .map(|w| {
                let l = w.letters();
                let last = l[l.len() - 1] as usize;
                let prev_deg = scale * (m - gens.degree(last));
                let v = gd.mul_poly(Side::Right, &gen_polys[last], prev_deg, &evals[&l[..l.len() - 1]]);
                evals.insert(l.to_vec(), v.clone());
                v
            })
            .collect();
        let kernel = left_kernel_basis(&rows, gd.dim(n as i64), field);
        let polys: Vec<NcPolynomial> = kernel
            .iter()
            .map(|k| NcPolynomial::from_terms(k.entries().iter().map(|(i, c)| (pre[*i].clone(), c.clone()))))
            .collect();
        let new = if polys.is_empty() { Vec::new() } else { b.echelonize(&polys, &pre) };
        if !new.is_empty() {
            let pos: HashMap<&Word, usize> = pre.iter().enumerate().map(|(i, w)| (w, i)).collect();
            let to_vec = |p: &NcPolynomial| SparseVec::from_pairs(p.terms().map(|(w, c)| (pos[w], c.clone())));
            let mut consequences = Echelon::new(pre.len(), field);
            for s in b.overlap_candidates(m) {
                consequences.insert(&to_vec(&s));
            }
            for p in &new {
                if consequences.insert(&to_vec(p)).is_some() {
                    relations.push(p.clone());
                }
            }
        }
        let leads: HashSet<Vec<u16>> = new.iter().map(|p| p.leading_word().unwrap().letters().to_vec()).collect();
        evals.retain(|k, _| k.len() < m as usize || !leads.contains(k));
        b.close_degree(m, pre, new);
    }
    let algebra = AlgebraPresentation::new(label, field, gens, relations)?;
    Ok(WindowedPresentation { algebra, gen_bound, rel_bound, images: gen_polys })
}

/// Monomials are named by their letters (`xy` for `x*y`), anything else
/// `s0`, `s1`, ...; repeats get a numeric suffix.
fn generator_names(ambient: &GeneratorSet, polys: &[NcPolynomial]) -> Vec<String> {
    let short = ambient.names().iter().all(|n| n.len() == 1);
    let mut taken = HashSet::new();
    polys
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let base = match p.leading() {
                Some((w, c)) if p.len() == 1 && c.is_one() => {
                    let parts: Vec<&str> = w.letters().iter().map(|&l| ambient.name(l as usize)).collect();
                    parts.join(if short { "" } else { "_" })
                }
                _ => format!("s{i}"),
            };
            let mut name = base.clone();
            let mut k = 2;
            while !taken.insert(name.clone()) {
                name = format!("{base}_{k}");
                k += 1;
            }
            name
        })
        .collect()
}
