//! Weighted regularities `ξ = (ξ₀, ξ₁)` from Betti tables and local
//! cohomology, with their certification status.

mod gorenstein;
mod tor;
mod value;

#[cfg(test)]
mod tests;

use num_rational::BigRational;
use serde_json::{json, Value};

pub use gorenstein::{
    asreg, check_as_regular, cmreg_algebra, cmreg_asymptote, cmreg_cohen_macaulay, cmreg_module, cohen_macaulay_depth,
    concavity, concavity_upper_bound, depth, lc_max, lc_max_via_tor, local_cohomology_degrees, local_cohomology_of,
    top_local_cohomology, torreg_plus_cmreg_asymptote, ASKind, ASType, LocalCohomologyDegrees,
};
pub use tor::{
    extreg, koszul_check, kunneth_torreg, pdim, prop58_bound, rate, rate_bound, slope, torreg, torreg_asymptote,
    torreg_infinite_koszul, weighted_extremum, KoszulVerdict, Mode,
};
pub(crate) use value::q;
pub use value::{Ext, ExtendedValue, Status, Weight};

/// `intercept + slope·ξ₁`, the value of a maximum of lines for all
/// `ξ₁ ≤ threshold` (every `ξ₁` when there is no threshold).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Affine {
    pub intercept: BigRational,
    pub slope: BigRational,
    pub threshold: Option<BigRational>,
}

impl Affine {
    /// The line among `(intercept, slope)` pairs that is the maximum as
    /// `ξ₁ → −∞`, with the first point where another line overtakes it.
    pub fn dominant_below(lines: &[(BigRational, BigRational)]) -> Option<Affine> {
        let (a, b) = lines.iter().min_by(|x, y| x.1.cmp(&y.1).then(y.0.cmp(&x.0)))?;
        let threshold = lines.iter().filter(|(_, bk)| bk > b).map(|(ak, bk)| (a - ak) / (bk - b)).min();
        Some(Affine { intercept: a.clone(), slope: b.clone(), threshold })
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        &self.intercept + &self.slope * x
    }

    pub fn to_json(&self) -> Value {
        json!({
            "intercept": self.intercept.to_string(),
            "slope": self.slope.to_string(),
            "threshold": self.threshold.as_ref().map(|t| t.to_string()),
        })
    }
}
