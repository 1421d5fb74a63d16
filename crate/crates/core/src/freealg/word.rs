use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Generator names with their positive internal degrees.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GeneratorSet {
    names: Vec<String>,
    degrees: Vec<u32>,
}

impl GeneratorSet {
    pub fn new(names: Vec<String>, degrees: Vec<u32>) -> Result<Self> {
        if names.len() != degrees.len() {
            return Err(Error::Input("generator names and degrees differ in length".into()));
        }
        if names.len() > u16::MAX as usize {
            return Err(Error::Input("too many generators".into()));
        }
        for (i, n) in names.iter().enumerate() {
            if !is_identifier(n) {
                return Err(Error::Input(format!("generator name `{n}` is not an identifier")));
            }
            if names[..i].contains(n) {
                return Err(Error::Input(format!("duplicate generator `{n}`")));
            }
        }
        if let Some(i) = degrees.iter().position(|&d| d == 0) {
            return Err(Error::Input(format!("generator `{}` has degree 0; degrees must be positive", names[i])));
        }
        Ok(GeneratorSet { names, degrees })
    }

    /// Generators `x:1, y:1, ...` from `(name, degree)` pairs. Panics on
    /// invalid input; intended for built-in presentations.
    pub fn of(pairs: &[(&str, u32)]) -> Self {
        GeneratorSet::new(pairs.iter().map(|(n, _)| n.to_string()).collect(), pairs.iter().map(|(_, d)| *d).collect())
            .expect("valid generator list")
    }

    pub fn empty() -> Self {
        GeneratorSet { names: Vec::new(), degrees: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn name(&self, g: usize) -> &str {
        &self.names[g]
    }

    pub fn degree(&self, g: usize) -> u32 {
        self.degrees[g]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn max_degree(&self) -> u32 {
        self.degrees.iter().copied().max().unwrap_or(0)
    }

    pub fn word(&self, letters: Vec<u16>) -> Word {
        let degree = letters.iter().map(|&l| self.degrees[l as usize]).sum();
        Word { degree, letters }
    }

    pub fn letter(&self, g: usize) -> Word {
        self.word(vec![g as u16])
    }

    /// Looks up a word written as generator names separated by `*`.
    pub fn parse_word(&self, text: &str) -> Option<Word> {
        let text = text.trim();
        if text.is_empty() || text == "1" {
            return Some(Word::empty());
        }
        let letters = text.split('*').map(|n| self.index_of(n.trim()).map(|i| i as u16)).collect::<Option<Vec<_>>>()?;
        Some(self.word(letters))
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// A word in the free algebra, with its cached weighted degree.
///
/// Ordered by weighted degree, then length, then left-lexicographically by
/// generator index.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Word {
    degree: u32,
    letters: Vec<u16>,
}

impl Word {
    pub fn empty() -> Self {
        Word { degree: 0, letters: Vec::new() }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn letters(&self) -> &[u16] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.letters.len() + other.letters.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word { degree: self.degree + other.degree, letters }
    }

    /// Subword `[start, end)`; degrees taken from `gens`.
    pub fn slice(&self, gens: &GeneratorSet, start: usize, end: usize) -> Word {
        gens.word(self.letters[start..end].to_vec())
    }

    pub fn to_text(&self, gens: &GeneratorSet) -> String {
        if self.letters.is_empty() {
            return "1".to_string();
        }
        self.letters.iter().map(|&l| gens.name(l as usize)).collect::<Vec<_>>().join("*")
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then(self.letters.len().cmp(&other.letters.len()))
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total monomial order on words over one generator set.
pub fn monomial_compare(a: &Word, b: &Word) -> Ordering {
    a.cmp(b)
}
