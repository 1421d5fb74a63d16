use std::collections::{BTreeMap, HashMap, HashSet};

use crate::exactlin::{Echelon, Field, SparseVec};
use crate::freealg::{GeneratorSet, NcPolynomial, ReducerIndex, Word};

/// Degree-by-degree construction of a truncated reduced Gröbner basis.
///
/// The caller feeds degrees in increasing order. Before degree `m` is
/// closed, every element of the basis has degree `< m`.
pub(crate) struct GbBuilder {
    pub(crate) gens: GeneratorSet,
    pub(crate) field: Field,
    pub(crate) dmax: u32,
    pub(crate) gb: Vec<NcPolynomial>,
    pub(crate) normal: Vec<Vec<Word>>,
    leads: HashSet<Vec<u16>>,
    lead_lengths: Vec<usize>,
    pending: BTreeMap<u32, Vec<(usize, usize, usize)>>,
}

impl GbBuilder {
    pub(crate) fn new(gens: GeneratorSet, field: Field, dmax: u32) -> Self {
        GbBuilder {
            gens,
            field,
            dmax,
            gb: Vec::new(),
            normal: vec![vec![Word::empty()]],
            leads: HashSet::new(),
            lead_lengths: Vec::new(),
            pending: BTreeMap::new(),
        }
    }

    /// Degrees closed so far.
    pub(crate) fn closed(&self) -> u32 {
        self.normal.len() as u32 - 1
    }

    pub(crate) fn reduce(&self, f: &NcPolynomial) -> NcPolynomial {
        ReducerIndex::new(&self.gb).reduce(&self.gens, f)
    }

    /// Words of degree `m` avoiding every leading word of degree `< m`,
    /// ascending.
    pub(crate) fn prenormal(&self, m: u32) -> Vec<Word> {
        let mut out = Vec::new();
        for g in 0..self.gens.len() {
            let dg = self.gens.degree(g);
            if dg > m {
                continue;
            }
            for w in &self.normal[(m - dg) as usize] {
                let mut letters = w.letters().to_vec();
                letters.push(g as u16);
                if !self.has_lead_suffix(&letters) {
                    out.push(self.gens.word(letters));
                }
            }
        }
        out.sort();
        out
    }

    fn has_lead_suffix(&self, letters: &[u16]) -> bool {
        self.lead_lengths.iter().any(|&l| l <= letters.len() && self.leads.contains(&letters[letters.len() - l..]))
    }

    /// Reduced S-polynomials of all overlaps whose overlap word has degree `m`.
    pub(crate) fn overlap_candidates(&self, m: u32) -> Vec<NcPolynomial> {
        let Some(list) = self.pending.get(&m) else {
            return Vec::new();
        };
        let index = ReducerIndex::new(&self.gb);
        let mut out = Vec::new();
        for &(i, j, k) in list {
            let (a, b) = (&self.gb[i], &self.gb[j]);
            let la = a.leading_word().unwrap();
            let lb = b.leading_word().unwrap();
            let left = la.slice(&self.gens, 0, la.len() - k);
            let right = lb.slice(&self.gens, k, lb.len());
            let s = a.sandwich(&Word::empty(), &right).sub(&b.sandwich(&left, &Word::empty()));
            let r = index.reduce(&self.gens, &s);
            if !r.is_zero() {
                out.push(r);
            }
        }
        out
    }

    /// Row-reduces polynomials of degree `m` whose words all lie in
    /// `words` (ascending). Returns monic, mutually reduced elements,
    /// largest leading word first.
    pub(crate) fn echelonize(&self, polys: &[NcPolynomial], words: &[Word]) -> Vec<NcPolynomial> {
        let n = words.len();
        let pos: HashMap<&Word, usize> = words.iter().enumerate().map(|(i, w)| (w, n - 1 - i)).collect();
        let mut ech = Echelon::new(n, self.field);
        for p in polys {
            ech.insert(&to_vec(p, &pos));
        }
        ech.reduced_rows()
            .into_iter()
            .map(|row| {
                NcPolynomial::from_terms(row.into_entries().into_iter().map(|(c, v)| (words[n - 1 - c].clone(), v)))
            })
            .collect()
    }

    /// Closes degree `m` with the given new basis elements (monic, leading
    /// words in `prenormal(m)`, mutually reduced).
    pub(crate) fn close_degree(&mut self, m: u32, prenormal: Vec<Word>, new: Vec<NcPolynomial>) {
        debug_assert_eq!(self.closed() + 1, m);
        self.pending.remove(&m);
        let new_leads: HashSet<Vec<u16>> = new.iter().map(|p| p.leading_word().unwrap().letters().to_vec()).collect();
        let first_new = self.gb.len();
        for p in new {
            let lw = p.leading_word().unwrap();
            if !self.lead_lengths.contains(&lw.len()) {
                self.lead_lengths.push(lw.len());
            }
            self.leads.insert(lw.letters().to_vec());
            self.gb.push(p);
        }
        for i in first_new..self.gb.len() {
            for j in 0..self.gb.len() {
                self.record_overlaps(i, j);
                if j != i {
                    self.record_overlaps(j, i);
                }
            }
        }
        self.normal.push(prenormal.into_iter().filter(|w| !new_leads.contains(w.letters())).collect());
    }

    /// Overlaps `a = a'o`, `b = ob'` with `o` a proper nonempty suffix of
    /// `a` and prefix of `b`.
    fn record_overlaps(&mut self, i: usize, j: usize) {
        let la = self.gb[i].leading_word().unwrap().letters();
        let lb = self.gb[j].leading_word().unwrap().letters();
        let da = self.gb[i].leading_word().unwrap().degree();
        for k in 1..la.len().min(lb.len()) {
            if la[la.len() - k..] == lb[..k] {
                let extra: u32 = lb[k..].iter().map(|&l| self.gens.degree(l as usize)).sum();
                let d = da + extra;
                if d <= self.dmax {
                    self.pending.entry(d).or_default().push((i, j, k));
                }
            }
        }
    }
}

fn to_vec(p: &NcPolynomial, pos: &HashMap<&Word, usize>) -> SparseVec {
    SparseVec::from_pairs(p.terms().map(|(w, c)| (pos[w], c.clone())))
}
