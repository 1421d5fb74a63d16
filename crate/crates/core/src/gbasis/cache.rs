use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::freealg::parse_polynomial;

use super::builder::GbBuilder;
use super::groebner::GroebnerData;
use super::presentation::AlgebraPresentation;

const FORMAT_VERSION: u32 = 1;

/// On-disk form of a truncated Gröbner basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CachedGroebner {
    pub key: String,
    pub gb: Vec<String>,
    pub dims: Vec<usize>,
    pub dmax: u32,
}

/// Hex SHA-256 of field, generators, sorted monic relations, `dmax` and
/// the format version.
pub fn cache_key(a: &AlgebraPresentation, dmax: u32) -> String {
    let text = format!("gradreg-gb/{FORMAT_VERSION}\n{}dmax {dmax}\n", a.canonical_text());
    hex::encode(Sha256::digest(text.as_bytes()))
}

impl CachedGroebner {
    pub fn from_data(g: &GroebnerData) -> Self {
        CachedGroebner {
            key: cache_key(g.algebra(), g.dmax()),
            gb: g.gb().iter().map(|p| p.to_text(g.gens())).collect(),
            dims: g.dims(),
            dmax: g.dmax(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Input(format!("malformed cache entry: {e}")))
    }

    /// Rebuilds the Gröbner data for `a`. Fails if the entry belongs to a
    /// different algebra or window, or is internally inconsistent.
    pub fn restore(&self, a: &AlgebraPresentation) -> Result<GroebnerData> {
        if self.key != cache_key(a, self.dmax) {
            return Err(Error::Input("cache key does not match the algebra".into()));
        }
        let gb = self.gb.iter().map(|s| parse_polynomial(s, a.gens(), a.field())).collect::<Result<Vec<_>>>()?;
        let mut b = GbBuilder::new(a.gens().clone(), a.field(), self.dmax);
        for m in 1..=self.dmax {
            let pre = b.prenormal(m);
            let new = gb.iter().filter(|p| p.degree() == Some(m)).cloned().collect();
            b.close_degree(m, pre, new);
        }
        let data = GroebnerData::from_parts(a.clone(), self.dmax, b.gb, b.normal);
        if data.dims() != self.dims {
            return Err(Error::Input("cache entry dims disagree with its basis".into()));
        }
        Ok(data)
    }
}
