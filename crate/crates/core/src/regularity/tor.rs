use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::resolution::BettiTable;

use super::value::{q, Ext, ExtendedValue, Status, Weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Sup,
    Inf,
}

/// `sup` (or `inf`) of `ξ₀·m + ξ₁·n` over a support of `(m, n)` pairs.
pub fn weighted_extremum(support: impl IntoIterator<Item = (i64, i64)>, xi: &Weight, mode: Mode) -> Ext {
    let vals = support.into_iter().map(|(m, n)| xi.eval(m, n));
    let best = match mode {
        Mode::Sup => vals.max(),
        Mode::Inf => vals.min(),
    };
    match (best, mode) {
        (Some(v), _) => Ext::Finite(v),
        (None, Mode::Sup) => Ext::NegInf,
        (None, Mode::Inf) => Ext::PosInf,
    }
}

fn table_status(b: &BettiTable) -> Status {
    if b.is_exact() {
        Status::Exact
    } else {
        Status::ObservedLowerBound
    }
}

fn window(b: &BettiTable) -> Option<(i64, i64)> {
    Some((b.hmax(), b.dmax()))
}

/// `Torreg_ξ = sup{ξ₀·deg Tor_i − ξ₁·i}`.
pub fn torreg(b: &BettiTable, xi: &Weight) -> ExtendedValue {
    let value = weighted_extremum(b.entries().map(|(i, j, _)| (j, -i)), xi, Mode::Sup);
    ExtendedValue { value, status: table_status(b), window: window(b) }
}

/// `Torreg_ξ(𝕜)` over a Koszul algebra of infinite global dimension, which
/// the caller asserts: `+∞` exactly when `ξ₁ < ξ₀`.
pub fn torreg_infinite_koszul(b: &BettiTable, xi: &Weight) -> ExtendedValue {
    if xi.xi1 < xi.xi0 && koszul_check(b) == KoszulVerdict::ThroughWindow {
        return ExtendedValue { value: Ext::PosInf, status: Status::Exact, window: window(b) };
    }
    torreg(b, xi)
}

/// `Extreg_ξ`, equal to `Torreg_ξ` for modules with finitely generated
/// minimal free resolutions.
pub fn extreg(b: &BettiTable, xi: &Weight) -> ExtendedValue {
    torreg(b, xi)
}

/// Largest homological index with a nonzero row.
pub fn pdim(b: &BettiTable) -> ExtendedValue {
    let value = b.max_index().map_or(Ext::NegInf, Ext::int);
    ExtendedValue { value, status: table_status(b), window: window(b) }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KoszulVerdict {
    ThroughWindow,
    /// An entry `β_{i,j} ≠ 0` with `j ≠ i`.
    NotKoszul {
        i: i64,
        j: i64,
    },
}

pub fn koszul_check(b: &BettiTable) -> KoszulVerdict {
    match b.entries().find(|&(i, j, _)| i != j) {
        Some((i, j, _)) => KoszulVerdict::NotKoszul { i, j },
        None => KoszulVerdict::ThroughWindow,
    }
}

/// `max{1, sup_{i≥2} (t_i − 1)/(i − 1)}` for the table of `𝕜`.
pub fn rate(b: &BettiTable) -> ExtendedValue {
    let mut best = BigRational::one();
    for i in b.indices().into_iter().filter(|&i| i >= 2) {
        let r = BigRational::new((b.t(i).unwrap() - 1).into(), (i - 1).into());
        if r > best {
            best = r;
        }
    }
    ExtendedValue { value: Ext::Finite(best), status: table_status(b), window: window(b) }
}

/// `sup_{i≥1} (deg Tor_i − deg Tor_0)/i`.
pub fn slope(b: &BettiTable) -> ExtendedValue {
    let t0 = b.t(0);
    let value = match t0 {
        None => Ext::NegInf,
        Some(t0) => b
            .indices()
            .into_iter()
            .filter(|&i| i >= 1)
            .map(|i| Ext::Finite(BigRational::new((b.t(i).unwrap() - t0).into(), i.into())))
            .max()
            .unwrap_or(Ext::NegInf),
    };
    ExtendedValue { value, status: table_status(b), window: window(b) }
}

/// `Torreg_ξ(𝕜_{T⊗A}) = Torreg_ξ(𝕜_T) + Torreg_ξ(𝕜_A)`.
pub fn kunneth_torreg(rt: &ExtendedValue, ra: &ExtendedValue) -> Result<ExtendedValue> {
    let value = rt.value.add(&ra.value).ok_or_else(|| Error::Input("cannot add +inf and -inf".into()))?;
    Ok(ExtendedValue { value, status: rt.status.combine(ra.status), window: rt.window.or(ra.window) })
}

/// `c = max{t_0, max_{1≤s≤pdim} t_s/s}` for the table of `_T A`.
pub fn prop58_bound(b: &BettiTable) -> Result<BigRational> {
    if !b.is_exact() {
        return Err(Error::Unsupported("the resolution of _T A is not certified to terminate".into()));
    }
    let mut c = q(b.t(0).ok_or_else(|| Error::Input("empty table".into()))?);
    for s in b.indices().into_iter().filter(|&s| s >= 1) {
        let v = BigRational::new(b.t(s).unwrap().into(), s.into());
        if v > c {
            c = v;
        }
    }
    Ok(c)
}

/// `max{1, a′ + 2ξ − 1}` with `a′ = max{a, 1 − ξ}`.
pub fn rate_bound(a: &BigRational, xi: &BigRational) -> BigRational {
    let one = BigRational::one();
    let alt = &one - xi;
    let a1 = if *a > alt { a.clone() } else { alt };
    let v = a1 + xi * q(2) - &one;
    if v > one {
        v
    } else {
        one
    }
}

/// Torreg along the line `ξ = (1, ξ₁)` for `ξ₁ → −∞`: the dominant line
/// `t_pdim − pdim·ξ₁` and the threshold below which it is the maximum.
pub fn torreg_asymptote(b: &BettiTable) -> Option<super::Affine> {
    let lines: Vec<(BigRational, BigRational)> = b.indices().into_iter().map(|i| (q(b.t(i).unwrap()), q(-i))).collect();
    super::Affine::dominant_below(&lines)
}
