use std::collections::{BTreeMap, HashMap};

use crate::exactlin::{Field, Scalar};

use super::word::{GeneratorSet, Word};

/// Noncommutative polynomial: a finite sum of words with nonzero
/// coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct NcPolynomial {
    terms: BTreeMap<Word, Scalar>,
}

impl NcPolynomial {
    pub fn zero() -> Self {
        NcPolynomial { terms: BTreeMap::new() }
    }

    pub fn monomial(word: Word, coef: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !coef.is_zero() {
            terms.insert(word, coef);
        }
        NcPolynomial { terms }
    }

    pub fn constant(c: Scalar) -> Self {
        NcPolynomial::monomial(Word::empty(), c)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, Scalar)>) -> Self {
        let mut p = NcPolynomial::zero();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &Word) -> Option<&Scalar> {
        self.terms.get(w)
    }

    /// Order-largest term.
    pub fn leading(&self) -> Option<(&Word, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn leading_word(&self) -> Option<&Word> {
        self.leading().map(|(w, _)| w)
    }

    pub fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(x) => {
                let s = x.add(&c);
                if s.is_zero() {
                    self.terms.remove(&w);
                } else {
                    *x = s;
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn add(&self, other: &NcPolynomial) -> NcPolynomial {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &NcPolynomial) -> NcPolynomial {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.neg());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> NcPolynomial {
        if c.is_zero() {
            return NcPolynomial::zero();
        }
        NcPolynomial { terms: self.terms.iter().map(|(w, v)| (w.clone(), v.mul(c))).collect() }
    }

    pub fn neg(&self) -> NcPolynomial {
        NcPolynomial { terms: self.terms.iter().map(|(w, v)| (w.clone(), v.neg())).collect() }
    }

    /// Concatenation product.
    pub fn mul(&self, other: &NcPolynomial) -> NcPolynomial {
        let mut out = NcPolynomial::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.concat(b), ca.mul(cb));
            }
        }
        out
    }

    /// `left · self · right` for words.
    pub fn sandwich(&self, left: &Word, right: &Word) -> NcPolynomial {
        NcPolynomial { terms: self.terms.iter().map(|(w, c)| (left.concat(w).concat(right), c.clone())).collect() }
    }

    /// The common degree of all terms, if homogeneous and nonzero.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys();
        let d = it.next()?.degree();
        it.all(|w| w.degree() == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    /// Degree of the leading word (max degree).
    pub fn degree(&self) -> Option<u32> {
        self.leading_word().map(Word::degree)
    }

    /// Scales so that the leading coefficient is 1.
    pub fn monic(&self) -> NcPolynomial {
        match self.leading() {
            Some((_, c)) => self.scale(&c.inv().unwrap()),
            None => NcPolynomial::zero(),
        }
    }

    /// Constant coefficient (coefficient of the empty word).
    pub fn constant_term(&self) -> Option<&Scalar> {
        self.terms.get(&Word::empty())
    }

    /// Leading-first text form, e.g. `y*x - x*y`.
    pub fn to_text(&self, gens: &GeneratorSet) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (w, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = if neg { c.neg() } else { c.clone() };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if w.is_empty() {
                out.push_str(&mag.to_text());
            } else {
                if !mag.is_one() {
                    out.push_str(&mag.to_text());
                    out.push('*');
                }
                out.push_str(&w.to_text(gens));
            }
        }
        out
    }

    pub fn field(&self) -> Option<Field> {
        self.terms.values().next().map(Scalar::field)
    }
}

/// Monic reducers indexed by their leading words.
pub(crate) struct ReducerIndex<'a> {
    reducers: &'a [NcPolynomial],
    by_lead: HashMap<&'a [u16], usize>,
    lengths: Vec<usize>,
}

impl<'a> ReducerIndex<'a> {
    pub(crate) fn new(reducers: &'a [NcPolynomial]) -> Self {
        let mut by_lead = HashMap::new();
        let mut lengths = Vec::new();
        for (i, r) in reducers.iter().enumerate() {
            if let Some(w) = r.leading_word() {
                by_lead.entry(w.letters()).or_insert(i);
                if !lengths.contains(&w.len()) {
                    lengths.push(w.len());
                }
            }
        }
        lengths.sort_unstable();
        ReducerIndex { reducers, by_lead, lengths }
    }

    /// Leftmost occurrence of a leading word inside `w`; among reducers
    /// matching at that position, the one listed first.
    pub(crate) fn find(&self, w: &[u16]) -> Option<(usize, usize)> {
        for start in 0..w.len() {
            let mut best: Option<usize> = None;
            for &len in &self.lengths {
                if start + len > w.len() {
                    break;
                }
                if let Some(&i) = self.by_lead.get(&w[start..start + len]) {
                    best = Some(best.map_or(i, |b| b.min(i)));
                }
            }
            if let Some(i) = best {
                return Some((start, i));
            }
        }
        None
    }

    pub(crate) fn is_empty(&self) -> bool {
        self.lengths.is_empty()
    }

    /// Full reduction; always rewrites the order-largest reducible word.
    pub(crate) fn reduce(&self, gens: &GeneratorSet, f: &NcPolynomial) -> NcPolynomial {
        if self.is_empty() {
            return f.clone();
        }
        let mut work = f.terms.clone();
        let mut done: BTreeMap<Word, Scalar> = BTreeMap::new();
        while let Some((w, c)) = work.pop_last() {
            match self.find(w.letters()) {
                None => {
                    done.insert(w, c);
                }
                Some((start, idx)) => {
                    let r = &self.reducers[idx];
                    let lead = r.leading_word().unwrap();
                    let left = w.slice(gens, 0, start);
                    let right = w.slice(gens, start + lead.len(), w.len());
                    // w = left·lead·right ≡ -left·(r - lead)·right
                    for (tw, tc) in r.terms.iter().rev().skip(1) {
                        let nw = left.concat(tw).concat(&right);
                        let nc = c.mul(tc).neg();
                        match work.get_mut(&nw) {
                            Some(x) => {
                                let s = x.add(&nc);
                                if s.is_zero() {
                                    work.remove(&nw);
                                } else {
                                    *x = s;
                                }
                            }
                            None => {
                                work.insert(nw, nc);
                            }
                        }
                    }
                }
            }
        }
        NcPolynomial { terms: done }
    }
}

/// Reduces `f` modulo the two-sided ideal of monic, homogeneous
/// `reducers` until no term contains a reducer's leading word.
pub fn reduce(gens: &GeneratorSet, f: &NcPolynomial, reducers: &[NcPolynomial]) -> NcPolynomial {
    ReducerIndex::new(reducers).reduce(gens, f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::parse_polynomial;

    const Q: Field = Field::Rational;

    fn xy() -> GeneratorSet {
        GeneratorSet::of(&[("x", 1), ("y", 1)])
    }

    #[test]
    fn commutator_reduces_itself() {
        let g = xy();
        let c = parse_polynomial("x*y - y*x", &g, Q).unwrap().monic();
        assert!(reduce(&g, &c, std::slice::from_ref(&c)).is_zero());
    }

    #[test]
    fn one_rewrite_step() {
        // Leading word of xy - yx is yx (xy < yx left-lexicographically),
        // so x·(yx) rewrites to x·(xy).
        let g = xy();
        let c = parse_polynomial("x*y - y*x", &g, Q).unwrap().monic();
        assert_eq!(c.leading_word().unwrap().to_text(&g), "y*x");
        let f = parse_polynomial("x*y*x", &g, Q).unwrap();
        let r = reduce(&g, &f, &[c]);
        assert_eq!(r, parse_polynomial("x*x*y", &g, Q).unwrap());
    }

    #[test]
    fn empty_reducers_is_identity() {
        let g = xy();
        let f = parse_polynomial("x*y*x - 3*y*y*y", &g, Q).unwrap();
        assert_eq!(reduce(&g, &f, &[]), f);
    }

    #[test]
    fn text_round_trip() {
        let g = xy();
        let f = parse_polynomial("1/2*x*y - y*x + 3", &g, Q).unwrap();
        assert_eq!(f.to_text(&g), "-y*x + 1/2*x*y + 3");
        assert_eq!(parse_polynomial(&f.to_text(&g), &g, Q).unwrap(), f);
    }
}
