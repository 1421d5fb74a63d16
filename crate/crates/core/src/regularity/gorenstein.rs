use num_rational::BigRational;
use num_traits::Signed;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::gbasis::{GroebnerData, Side};
use crate::modpres::ModulePresentation;
use crate::resolution::{complex_cohomology, dualize, minimal_free_resolution, BettiTable, FreeComplex};

use super::tor::torreg;
use super::value::{q, Ext, ExtendedValue, Status, Weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ASKind {
    AsRegular,
    AsGorensteinAssumed,
    Uncertified,
}

impl ASKind {
    pub fn name(self) -> &'static str {
        match self {
            ASKind::AsRegular => "AS_regular",
            ASKind::AsGorensteinAssumed => "AS_Gorenstein_assumed",
            ASKind::Uncertified => "uncertified",
        }
    }
}

/// Type `(d, 𝔩)` of an AS Gorenstein algebra, with how it was obtained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ASType {
    pub d: i64,
    pub ell: i64,
    pub kind: ASKind,
    pub evidence: String,
}

impl ASType {
    /// A type asserted by the user.
    pub fn assumed(d: i64, ell: i64) -> Self {
        ASType { d, ell, kind: ASKind::AsGorensteinAssumed, evidence: "asserted by the user".into() }
    }

    fn uncertified(evidence: impl Into<String>) -> Self {
        ASType { d: 0, ell: 0, kind: ASKind::Uncertified, evidence: evidence.into() }
    }

    pub fn is_certified(&self) -> bool {
        self.kind != ASKind::Uncertified
    }

    pub fn require(&self) -> Result<()> {
        if self.is_certified() {
            Ok(())
        } else {
            Err(Error::Unsupported(format!("no certified AS Gorenstein type: {}", self.evidence)))
        }
    }

    pub fn to_json(&self) -> Value {
        json!({"kind": self.kind.name(), "d": self.d, "l": self.ell, "evidence": self.evidence})
    }
}

/// Resolves `𝕜` on both sides and checks that `Ext^i(𝕜, A)` is `𝕜(𝔩)` in
/// degree `d` and vanishes otherwise, inside the computable window.
pub fn check_as_regular(gd: &GroebnerData, hmax: usize, dmax: i64) -> ASType {
    let mut found: Option<(i64, i64, (i64, i64))> = None;
    for side in [Side::Left, Side::Right] {
        let k = ModulePresentation::trivial(gd.algebra(), side);
        let (f, b) = match minimal_free_resolution(&k, gd, hmax, dmax) {
            Ok(r) => r,
            Err(e) => return ASType::uncertified(e.to_string()),
        };
        if !b.is_exact() {
            return ASType::uncertified(format!(
                "the {} resolution of k is not certified to terminate (hmax = {hmax}, dmax = {})",
                side.name(),
                b.dmax()
            ));
        }
        let d = b.terminated_at().unwrap();
        let ell = b.t(d).unwrap();
        let (lo, hi) = dual_window(&f, gd);
        let h = match complex_cohomology(&dualize(&f), gd, lo, hi) {
            Ok(h) => h,
            Err(e) => return ASType::uncertified(e.to_string()),
        };
        let entries: Vec<(i64, i64, usize)> = h.entries().collect();
        if entries != vec![(d, -ell, 1)] {
            return ASType::uncertified(format!(
                "Ext(k, A) for the {} module is not k({ell}) concentrated in degree {d}: {entries:?}",
                side.name()
            ));
        }
        match found {
            Some((d0, l0, _)) if (d0, l0) != (d, ell) => {
                return ASType::uncertified(format!("left type ({d0}, {l0}) differs from right type ({d}, {ell})"))
            }
            _ => found = Some((d, ell, (lo, hi))),
        }
    }
    let (d, ell, (lo, hi)) = found.unwrap();
    ASType {
        d,
        ell,
        kind: ASKind::AsRegular,
        evidence: format!(
            "k has finite resolutions on both sides of length {d}; Ext^i(k, A) = 0 for i != {d} and Ext^{d}(k, A) = k({ell}), checked in degrees {lo}..={hi}"
        ),
    }
}

/// Internal degrees where every term of the dual of `f` is computable,
/// starting at its lowest generator degree.
fn dual_window(f: &FreeComplex, gd: &GroebnerData) -> (i64, i64) {
    let top = f.shift_range().map_or(0, |r| r.1);
    (-top, gd.dmax() as i64 - top)
}

/// `CMreg_ξ(A) = ξ₁d − ξ₀𝔩`.
pub fn cmreg_algebra(t: &ASType, xi: &Weight) -> Result<ExtendedValue> {
    t.require()?;
    Ok(ExtendedValue::exact(Ext::Finite(xi.eval(-t.ell, t.d))))
}

/// `ASreg_ξ(A) = Torreg_ξ(𝕜) + CMreg_ξ(A)`.
pub fn asreg(k_table: &BettiTable, t: &ASType, xi: &Weight) -> Result<ExtendedValue> {
    let tr = torreg(k_table, xi);
    let cm = cmreg_algebra(t, xi)?;
    super::tor::kunneth_torreg(&tr, &cm)
}

/// `c_ξ(T) = −CMreg_ξ(T)`, for `0 ≤ ξ₁ ≤ ξ₀`.
pub fn concavity(t: &ASType, xi: &Weight) -> Result<ExtendedValue> {
    if !(xi.xi0.is_positive() && !xi.xi1.is_negative() && xi.xi1 <= xi.xi0) {
        return Err(Error::Hypothesis(format!("concavity needs 0 <= xi1 <= xi0, got {xi}")));
    }
    let cm = cmreg_algebra(t, xi)?;
    Ok(ExtendedValue::exact(cm.value.neg()))
}

/// Minimum of the concavities of the given types, each of which the user
/// asserts maps finitely to the algebra: an upper bound for its concavity.
pub fn concavity_upper_bound(types: &[ASType], xi: &Weight) -> Result<ExtendedValue> {
    let mut best = Ext::PosInf;
    for t in types {
        let c = concavity(t, xi)?.value;
        if c < best {
            best = c;
        }
    }
    Ok(ExtendedValue { value: best, status: Status::UpperBound, window: None })
}

/// `deg H^j_𝔪(M)` for `0 ≤ j ≤ d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalCohomologyDegrees {
    pub d: i64,
    pub ell: i64,
    pub degrees: Vec<ExtendedValue>,
    /// Internal degrees of the dual complex that were examined.
    pub ext_window: (i64, i64),
}

impl LocalCohomologyDegrees {
    pub fn degree(&self, j: i64) -> &ExtendedValue {
        &self.degrees[j as usize]
    }

    pub fn is_exact(&self) -> bool {
        self.degrees.iter().all(ExtendedValue::is_exact)
    }

    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> =
            self.degrees.iter().enumerate().map(|(j, v)| json!({"j": j, "deg": v.to_json()})).collect();
        json!({"d": self.d, "l": self.ell, "ext_window": [self.ext_window.0, self.ext_window.1], "degrees": entries})
    }
}

/// Local cohomology degrees by local duality,
/// `deg H^j_𝔪(M) = −ged Ext^{d−j}(M, A) − 𝔩`.
pub fn local_cohomology_degrees(
    m: &ModulePresentation,
    t: &ASType,
    gd: &GroebnerData,
    hmax: usize,
    dmax: i64,
) -> Result<(LocalCohomologyDegrees, BettiTable)> {
    let (f, b) = minimal_free_resolution(m, gd, hmax, dmax)?;
    let lc = local_cohomology_of(&f, &b, t, gd)?;
    Ok((lc, b))
}

/// The same from a computed minimal resolution.
pub fn local_cohomology_of(
    f: &FreeComplex,
    b: &BettiTable,
    t: &ASType,
    gd: &GroebnerData,
) -> Result<LocalCohomologyDegrees> {
    t.require()?;
    if !b.is_exact() {
        return Err(Error::Unsupported(
            "the resolution is not certified to terminate; infinite projective dimension is not supported".into(),
        ));
    }
    let p = b.terminated_at().unwrap();
    if p > t.d {
        return Err(Error::Hypothesis(format!("projective dimension {p} exceeds d = {}", t.d)));
    }
    let window = Some((b.hmax(), b.dmax()));
    let (lo, hi) = dual_window(f, gd);
    let h = complex_cohomology(&dualize(f), gd, lo, hi)?;
    let degrees = (0..=t.d)
        .map(|j| {
            let e = t.d - j;
            if e > p || b.is_empty() {
                return ExtendedValue::exact(Ext::NegInf).with_window(window);
            }
            let g = h.ged(e);
            let v = match (g.value, g.certified) {
                (Some(n), true) => ExtendedValue::exact(Ext::int(-n - t.ell)),
                (Some(n), false) => {
                    ExtendedValue { value: Ext::int(-n - t.ell), status: Status::ObservedLowerBound, window: None }
                }
                (None, true) => ExtendedValue::exact(Ext::NegInf),
                (None, false) => {
                    ExtendedValue { value: Ext::int(-hi - 1 - t.ell), status: Status::UpperBound, window: None }
                }
            };
            v.with_window(window)
        })
        .collect();
    Ok(LocalCohomologyDegrees { d: t.d, ell: t.ell, degrees, ext_window: (lo, hi) })
}

/// `CMreg_ξ(M) = max_j {ξ₀·deg H^j + ξ₁·j}`, for `ξ₀ ≥ 0`.
pub fn cmreg_module(lc: &LocalCohomologyDegrees, xi: &Weight) -> Result<ExtendedValue> {
    lc_max(lc, xi, lc.d)
}

/// `max_{0≤j≤w} {ξ₀·deg H^j + ξ₁·j}`.
pub fn lc_max(lc: &LocalCohomologyDegrees, xi: &Weight, w: i64) -> Result<ExtendedValue> {
    if xi.xi0.is_negative() {
        return Err(Error::Hypothesis(format!("CM regularity needs xi0 >= 0, got {xi}")));
    }
    let mut best = Ext::NegInf;
    let mut status = Status::Exact;
    let mut bounds = Vec::new();
    for j in 0..=w.min(lc.d) {
        let e = lc.degree(j);
        let Ext::Finite(v) = &e.value else { continue };
        let val = Ext::Finite(&xi.xi0 * v + &xi.xi1 * q(j));
        match e.status {
            Status::Exact => best = best.max(val),
            Status::UpperBound => bounds.push(val),
            Status::ObservedLowerBound => {
                best = best.max(val);
                status = Status::ObservedLowerBound;
            }
        }
    }
    if bounds.iter().any(|u| *u > best) {
        status = Status::ObservedLowerBound;
    }
    Ok(ExtendedValue { value: best, status, window: lc.degrees.first().and_then(|e| e.window) })
}

/// Least `j` with `H^j_𝔪(M) ≠ 0`; `+∞` for the zero module.
pub fn depth(lc: &LocalCohomologyDegrees) -> ExtendedValue {
    let window = lc.degrees.first().and_then(|e| e.window);
    let mut status = Status::Exact;
    for (j, e) in lc.degrees.iter().enumerate() {
        match (&e.value, e.status) {
            (Ext::NegInf, Status::Exact) => continue,
            (_, Status::UpperBound) => status = Status::UpperBound,
            _ => return ExtendedValue { value: Ext::int(j as i64), status, window },
        }
    }
    ExtendedValue { value: Ext::PosInf, status, window }
}

/// Largest `j` with `H^j_𝔪(M) ≠ 0`, when the data decides it.
pub fn top_local_cohomology(lc: &LocalCohomologyDegrees) -> Option<i64> {
    for (j, e) in lc.degrees.iter().enumerate().rev() {
        match (&e.value, e.status) {
            (Ext::NegInf, Status::Exact) => continue,
            (_, Status::UpperBound) => return None,
            _ => return Some(j as i64),
        }
    }
    None
}

fn tor_deg(b: &BettiTable, j: i64) -> Ext {
    b.t(j).map_or(Ext::NegInf, Ext::int)
}

fn normalized(xi: &Weight) -> Result<BigRational> {
    let x = xi.normalized().ok_or_else(|| Error::Hypothesis(format!("the Tor route needs xi0 > 0, got {xi}")))?;
    if x > q(1) {
        return Err(Error::Hypothesis(format!("the Tor route needs xi1 <= xi0, got {xi}")));
    }
    Ok(x)
}

/// `−𝔩 + ξd + max_{d−w≤j≤d} {deg Tor_j − ξj}`, scaled by `ξ₀`.
pub fn lc_max_via_tor(b: &BettiTable, t: &ASType, xi: &Weight, w: i64) -> Result<ExtendedValue> {
    t.require()?;
    let x = normalized(xi)?;
    let inner = ((t.d - w).max(0)..=t.d)
        .map(|j| match tor_deg(b, j) {
            Ext::Finite(v) => Ext::Finite(v - &x * q(j)),
            other => other,
        })
        .max()
        .unwrap_or(Ext::NegInf);
    let value = match inner {
        Ext::Finite(v) => Ext::Finite((v - q(t.ell) + &x * q(t.d)) * &xi.xi0),
        other => other,
    };
    let status = if b.is_exact() { Status::Exact } else { Status::ObservedLowerBound };
    Ok(ExtendedValue { value, status, window: Some((b.hmax(), b.dmax())) })
}

/// `CMreg_ξ(M) = −𝔩 + ξs + deg Tor_{d−s}` for an `s`-Cohen–Macaulay module,
/// scaled by `ξ₀`.
pub fn cmreg_cohen_macaulay(b: &BettiTable, t: &ASType, xi: &Weight, s: i64) -> Result<ExtendedValue> {
    t.require()?;
    normalized(xi)?;
    let value = match tor_deg(b, t.d - s) {
        Ext::Finite(v) => Ext::Finite(&xi.xi0 * (v - q(t.ell)) + &xi.xi1 * q(s)),
        other => other,
    };
    let status = if b.is_exact() { Status::Exact } else { Status::ObservedLowerBound };
    Ok(ExtendedValue { value, status, window: Some((b.hmax(), b.dmax())) })
}

/// `s` when `H^s_𝔪(M)` is the only local cohomology group seen: every other
/// entry is certified zero or bounded by the window.
pub fn cohen_macaulay_depth(lc: &LocalCohomologyDegrees) -> Option<i64> {
    let nz: Vec<i64> = (0..=lc.d)
        .filter(|&j| {
            let e = lc.degree(j);
            e.status != Status::UpperBound && e.value != Ext::NegInf
        })
        .collect();
    match nz[..] {
        [s] if lc.degree(s).is_exact() => Some(s),
        _ => None,
    }
}

/// CMreg along `ξ = (1, ξ₁)` for `ξ₁ → −∞`.
pub fn cmreg_asymptote(lc: &LocalCohomologyDegrees) -> Option<super::Affine> {
    let lines: Vec<(BigRational, BigRational)> =
        lc.degrees.iter().enumerate().filter_map(|(j, e)| e.value.finite().map(|v| (v.clone(), q(j as i64)))).collect();
    super::Affine::dominant_below(&lines)
}

/// `Torreg + CMreg(A)` along `ξ = (1, ξ₁)` for `ξ₁ → −∞`.
pub fn torreg_plus_cmreg_asymptote(b: &BettiTable, t: &ASType) -> Option<super::Affine> {
    let a = super::tor::torreg_asymptote(b)?;
    Some(super::Affine { intercept: a.intercept - q(t.ell), slope: a.slope + q(t.d), threshold: a.threshold })
}
