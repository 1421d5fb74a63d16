use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::Result;
use crate::exactlin::Field;
use crate::gbasis::{compute_groebner, GroebnerData, Side};
use crate::modpres::{shift_module, truncate_module, ModulePresentation};
use crate::regularity::{
    asreg, check_as_regular, cmreg_algebra, cmreg_asymptote, cmreg_cohen_macaulay, cmreg_module, cohen_macaulay_depth,
    depth, extreg, kunneth_torreg, lc_max, lc_max_via_tor, local_cohomology_of, pdim, q, top_local_cohomology, torreg,
    torreg_plus_cmreg_asymptote, ASType, Ext, ExtendedValue, LocalCohomologyDegrees, Weight,
};
use crate::resolution::{complex_cohomology, dualize, minimal_free_resolution, BettiTable, FreeComplex};

use super::corpus::{kxy, Subject};
use super::random::random_minimal_complexes;
use super::report::{Suite, VerificationCase};

/// ξ₀ = 1 with ξ₁ ∈ {−100, −10, −2, −1, 0, 1/2, 1, 3/2, 2, 3}, then
/// `(0, 1)` and `(0, −1)`.
pub fn default_weights() -> Vec<Weight> {
    let mut out: Vec<Weight> = [(-100, 1), (-10, 1), (-2, 1), (-1, 1), (0, 1), (1, 2), (1, 1), (3, 2), (2, 1), (3, 1)]
        .into_iter()
        .map(|(a, b)| Weight::frac(a, b))
        .collect();
    out.push(Weight::ints(0, 1));
    out.push(Weight::ints(0, -1));
    out
}

pub const THM45_COUNT: usize = 25;
pub const THM45_SEED: u64 = 45;

struct ModuleData {
    label: String,
    module: ModulePresentation,
    complex: std::result::Result<(FreeComplex, BettiTable), String>,
    lc: std::result::Result<LocalCohomologyDegrees, String>,
}

impl ModuleData {
    fn table(&self) -> std::result::Result<&BettiTable, String> {
        match &self.complex {
            Ok((_, b)) if b.is_exact() => Ok(b),
            Ok(_) => Err("the resolution is not certified to terminate in the window".into()),
            Err(e) => Err(e.clone()),
        }
    }
}

/// Everything the suites need about one subject.
pub struct Prepared<'a> {
    pub subject: &'a Subject,
    pub gd: GroebnerData,
    pub k_table: BettiTable,
    pub as_type: ASType,
    modules: Vec<ModuleData>,
}

impl<'a> Prepared<'a> {
    pub fn new(subject: &'a Subject) -> Result<Self> {
        let gd = compute_groebner(&subject.algebra, subject.dmax)?;
        let (dmax, hmax) = (subject.dmax as i64, subject.hmax);
        let k = ModulePresentation::trivial(&subject.algebra, Side::Left);
        let (_, k_table) = minimal_free_resolution(&k, &gd, hmax, dmax)?;
        let as_type = check_as_regular(&gd, hmax, dmax);
        let modules = subject
            .modules
            .iter()
            .map(|m| {
                let complex = minimal_free_resolution(m, &gd, hmax, dmax).map_err(|e| e.to_string());
                let lc = match &complex {
                    Ok((f, b)) => local_cohomology_of(f, b, &as_type, &gd).map_err(|e| e.to_string()),
                    Err(e) => Err(e.clone()),
                };
                ModuleData { label: m.label().to_string(), module: m.clone(), complex, lc }
            })
            .collect();
        Ok(Prepared { subject, gd, k_table, as_type, modules })
    }

    fn name(&self, m: &ModuleData) -> String {
        format!("{}/{}", self.subject.label(), m.label)
    }

    /// Betti table of a module in the corpus, by label.
    pub fn table(&self, label: &str) -> Option<&BettiTable> {
        self.modules.iter().find(|m| m.label == label).and_then(|m| m.complex.as_ref().ok().map(|c| &c.1))
    }

    pub fn local_cohomology(&self, label: &str) -> Option<&LocalCohomologyDegrees> {
        self.modules.iter().find(|m| m.label == label).and_then(|m| m.lc.as_ref().ok())
    }
}

fn positive(xi: &Weight) -> bool {
    xi.xi0.is_positive()
}

fn exact(v: &ExtendedValue) -> bool {
    v.is_exact()
}

/// Runs the suites on every subject.
pub fn run_suites(suites: &[Suite], corpus: &[Subject], weights: &[Weight]) -> Result<Vec<VerificationCase>> {
    let prepared = corpus.iter().map(Prepared::new).collect::<Result<Vec<_>>>()?;
    let mut out = Vec::new();
    for &suite in suites {
        out.extend(run_suite(suite, &prepared, weights)?);
    }
    Ok(out)
}

pub fn run_suite(suite: Suite, prepared: &[Prepared<'_>], weights: &[Weight]) -> Result<Vec<VerificationCase>> {
    let mut out = Vec::new();
    match suite {
        Suite::Thm45 => {
            let field = prepared.first().map_or(Field::Rational, |p| p.gd.field());
            out.extend(thm45(field, weights)?);
        }
        _ => {
            for p in prepared {
                match suite {
                    Suite::Thm33 => thm33(p, weights, &mut out),
                    Suite::Thm35 => thm35(p, weights, &mut out),
                    Suite::Thm310 => thm310(p, weights, &mut out),
                    Suite::Cor312 => cor312(p, &mut out),
                    Suite::Thm313 => thm313(p, weights, &mut out),
                    Suite::Thm46 => thm46(p, weights, &mut out),
                    Suite::Lem27 => lem27(p, weights, &mut out)?,
                    Suite::Lem31 => lem31(p, weights, &mut out),
                    Suite::Rem47 => rem47(p, &mut out),
                    Suite::AsregCert => asreg_cert(p, weights, &mut out),
                    Suite::Thm45 => unreachable!(),
                }
            }
        }
    }
    Ok(out)
}

/// Data shared by the suites that need a certified type, an exact table and
/// local cohomology.
fn certified<'m>(
    p: &Prepared<'_>,
    m: &'m ModuleData,
) -> std::result::Result<(&'m BettiTable, &'m LocalCohomologyDegrees), String> {
    if !p.as_type.is_certified() {
        return Err(format!("no certified AS Gorenstein type: {}", p.as_type.evidence));
    }
    let b = m.table()?;
    let lc = m.lc.as_ref().map_err(Clone::clone)?;
    Ok((b, lc))
}

fn thm33(p: &Prepared<'_>, weights: &[Weight], out: &mut Vec<VerificationCase>) {
    for m in &p.modules {
        for xi in weights {
            let case = VerificationCase::new(Suite::Thm33, p.name(m), Some(xi));
            if !positive(xi) {
                out.push(case.skip("the inequality assumes xi0 > 0"));
                continue;
            }
            let (b, lc) = match certified(p, m) {
                Ok(d) => d,
                Err(e) => {
                    out.push(case.skip(e));
                    continue;
                }
            };
            let tr = torreg(b, xi);
            let er = extreg(b, xi);
            let cm = cmreg_module(lc, xi).expect("xi0 > 0");
            let tk = torreg(&p.k_table, xi);
            if !exact(&cm) || !exact(&tk) {
                out.push(case.skip("CMreg or Torreg(k) is not certified"));
                continue;
            }
            let rhs = cm.value.add(&tk.value).expect("finite");
            let ok = tr.value == er.value && tr.value <= rhs;
            out.push(
                case.sides(&tr.value, &rhs)
                    .witness(format!("CMreg = {}, Torreg(k) = {}", cm.value, tk.value))
                    .holds(ok),
            );
        }
    }
}

fn thm35(p: &Prepared<'_>, weights: &[Weight], out: &mut Vec<VerificationCase>) {
    for m in &p.modules {
        for xi in weights {
            let case = VerificationCase::new(Suite::Thm35, p.name(m), Some(xi));
            if !positive(xi) {
                out.push(case.skip("the inequality assumes xi0 > 0"));
                continue;
            }
            let (b, lc) = match certified(p, m) {
                Ok(d) => d,
                Err(e) => {
                    out.push(case.skip(e));
                    continue;
                }
            };
            let cm = cmreg_module(lc, xi).expect("xi0 > 0");
            if !exact(&cm) {
                out.push(case.skip("CMreg is not certified"));
                continue;
            }
            let ca = cmreg_algebra(&p.as_type, xi).expect("certified");
            let rhs = extreg(b, xi).value.add(&ca.value).expect("finite");
            out.push(case.sides(&cm.value, &rhs).holds(cm.value <= rhs));
        }
    }
}

fn thm310(p: &Prepared<'_>, weights: &[Weight], out: &mut Vec<VerificationCase>) {
    for m in &p.modules {
        let (b, lc) = match certified(p, m) {
            Ok(d) => d,
            Err(e) => {
                out.push(VerificationCase::new(Suite::Thm310, p.name(m), None).skip(e));
                continue;
            }
        };
        let cm_line = cmreg_asymptote(lc);
        let tt_line = torreg_plus_cmreg_asymptote(b, &p.as_type);
        let threshold =
            [&cm_line, &tt_line].into_iter().filter_map(|l| l.as_ref().and_then(|a| a.threshold.clone())).min();
        for xi in weights {
            let case = VerificationCase::new(Suite::Thm310, p.name(m), Some(xi));
            if !positive(xi) {
                out.push(case.skip("the equality assumes xi0 > 0"));
                continue;
            }
            let cm = cmreg_module(lc, xi).expect("xi0 > 0");
            let tr = torreg(b, xi);
            let ca = cmreg_algebra(&p.as_type, xi).expect("certified");
            let rhs = tr.value.add(&ca.value).expect("finite");
            let x = &xi.xi1 / &xi.xi0;
            let case = case.sides(&cm.value, &rhs);
            let agree = cm.value == rhs;
            if !exact(&cm) {
                out.push(case.skip("CMreg is not certified"));
            } else if !x.is_negative() && x <= q(1) {
                out.push(case.holds(agree));
            } else if x.is_negative() && threshold.as_ref().is_none_or(|t| x <= *t) {
                out.push(case.witness("below the asymptotic threshold").holds(agree));
            } else if x.is_negative() {
                let note = if agree { "values agree" } else { "values differ: candidate for the open case" };
                out.push(case.skip(format!("equality is not claimed above the threshold; {note}")));
            } else {
                let note = if agree { "values agree" } else { "values differ" };
                out.push(case.skip(format!("equality is only claimed for 0 <= xi1 <= xi0; {note}")));
            }
        }
        let case = VerificationCase::new(Suite::Thm310, format!("{}/asymptotic", p.name(m)), None);
        match (cm_line, tt_line) {
            (Some(a), Some(c)) => {
                let ok = a.slope == c.slope && a.intercept == c.intercept;
                out.push(
                    case.sides(
                        format!("{} + {}·xi1", a.intercept, a.slope),
                        format!("{} + {}·xi1", c.intercept, c.slope),
                    )
                    .witness(format!(
                        "thresholds {} and {}",
                        a.threshold.map_or("none".into(), |t| t.to_string()),
                        c.threshold.map_or("none".into(), |t| t.to_string())
                    ))
                    .holds(ok),
                );
            }
            _ => out.push(case.skip("zero module")),
        }
    }
}

fn cor312(p: &Prepared<'_>, out: &mut Vec<VerificationCase>) {
    for m in &p.modules {
        let case = VerificationCase::new(Suite::Cor312, p.name(m), None);
        let (b, lc) = match certified(p, m) {
            Ok(d) => d,
            Err(e) => {
                out.push(case.skip(e));
                continue;
            }
        };
        let dp = depth(lc);
        let pd = pdim(b);
        let (Ext::Finite(dv), Ext::Finite(pv)) = (&dp.value, &pd.value) else {
            out.push(case.skip("zero module"));
            continue;
        };
        if !exact(&dp) {
            out.push(case.skip("depth is not certified"));
            continue;
        }
        let (dv, pv) = (dv.to_integer(), pv.to_integer());
        let ab = &dv + &pv == p.as_type.d.into();
        let s: i64 = dv.try_into().expect("small");
        let ph: i64 = pv.try_into().expect("small");
        let lhs = lc.degree(s).value.clone();
        let rhs = Ext::int(b.t(ph).expect("nonzero row") - p.as_type.ell);
        let ok = ab && lhs == rhs;
        out.push(
            case.sides(
                format!("pdim + depth = {}, deg H^depth = {lhs}", ph + s),
                format!("d = {}, t_pdim - l = {rhs}", p.as_type.d),
            )
            .holds(ok),
        );
    }
}

fn ceil(x: &BigRational) -> i64 {
    x.ceil().to_integer().try_into().expect("small")
}

fn thm313(p: &Prepared<'_>, weights: &[Weight], out: &mut Vec<VerificationCase>) {
    for m in &p.modules {
        for xi in weights {
            let case = VerificationCase::new(Suite::Thm313, p.name(m), Some(xi));
            if xi.xi0 != q(1) {
                out.push(case.skip("stated for xi = (1, xi1)"));
                continue;
            }
            let lc = match certified(p, m) {
                Ok(d) => d.1,
                Err(e) => {
                    out.push(case.skip(e));
                    continue;
                }
            };
            let cm = cmreg_module(lc, xi).expect("xi0 = 1");
            let c = torreg(&p.k_table, xi);
            let (Ext::Finite(cmv), Ext::Finite(cv)) = (&cm.value, &c.value) else {
                out.push(case.skip("CMreg or Torreg(k) is not finite"));
                continue;
            };
            if !exact(&cm) || !exact(&c) {
                out.push(case.skip("CMreg or Torreg(k) is not certified"));
                continue;
            }
            let eps = if xi.xi1 > q(1) { &xi.xi1 - q(1) } else { BigRational::zero() };
            for s in [ceil(cmv), ceil(cmv) + 2] {
                let case = case.clone();
                let checked = truncate_module(&m.module, s, &p.gd)
                    .map(|t| shift_module(&t, s))
                    .and_then(|t| minimal_free_resolution(&t, &p.gd, p.subject.hmax, p.subject.dmax as i64 - s));
                let b = match checked {
                    Ok((_, b)) => b,
                    Err(e) => {
                        out.push(case.witness(format!("s = {s}")).skip(e.to_string()));
                        continue;
                    }
                };
                let mut bad = None;
                for i in b.indices() {
                    let (g, d) = (b.ged(i).unwrap(), b.t(i).unwrap());
                    let bound = cv + &eps + &xi.xi1 * q(i);
                    if g < i || q(d) > bound {
                        bad = Some(format!("s = {s}, i = {i}: ged = {g}, deg = {d}, bound = {bound}"));
                        break;
                    }
                }
                let lhs = format!("Torreg(M_ge{s}({s})) = {}", torreg(&b, xi).value);
                let rhs = format!("c + eps = {}", cv + &eps);
                let status = if b.is_exact() { "exact" } else { "through the window" };
                match bad {
                    Some(w) => out.push(case.sides(lhs, rhs).witness(w).holds(false)),
                    None => out.push(case.sides(lhs, rhs).witness(format!("s = {s}, {status}")).holds(true)),
                }
            }
        }
    }
}

/// `(max_{0≤j≤c} −ged H^{s−j}(F^∨) + ξj, max_{0≤j≤c} deg H_{s−j}(𝕜⊗F) + ξj)`
/// for `c = 0..=s`, and whether every `ged` used was certified.
pub fn thm45_sides(f: &FreeComplex, gd: &GroebnerData, x: &BigRational) -> Result<(Vec<(Ext, Ext)>, bool)> {
    let s = -f.lo();
    let top = f.shift_range().map_or(0, |r| r.1);
    let h = complex_cohomology(&dualize(f), gd, -top, gd.dmax() as i64 - top)?;
    let mut certified = true;
    let mut left = Ext::NegInf;
    let mut right = Ext::NegInf;
    let mut out = Vec::new();
    for j in 0..=s {
        let g = h.ged(s - j);
        certified &= g.certified;
        let l = g.value.map_or(Ext::NegInf, |v| Ext::Finite(q(-v) + x * q(j)));
        let r = f.term(-(s - j)).max_shift().map_or(Ext::NegInf, |v| Ext::Finite(q(v) + x * q(j)));
        left = left.max(l);
        right = right.max(r);
        out.push((left.clone(), right.clone()));
    }
    Ok((out, certified))
}

fn thm45(field: Field, weights: &[Weight]) -> Result<Vec<VerificationCase>> {
    let gd = compute_groebner(&kxy(field), 24)?;
    let complexes = random_minimal_complexes(&gd, THM45_COUNT, THM45_SEED)?;
    let mut out = Vec::new();
    for (n, f) in complexes.iter().enumerate() {
        let subject = format!("kxy/random{n:02}");
        for xi in weights {
            let case = VerificationCase::new(Suite::Thm45, subject.clone(), Some(xi));
            let x = match xi.normalized() {
                Some(x) if x <= q(1) => x,
                _ => {
                    out.push(case.skip("stated for xi = (1, x) with x <= 1"));
                    continue;
                }
            };
            let (sides, certified) = thm45_sides(f, &gd, &x)?;
            let lhs: Vec<String> = sides.iter().map(|s| s.0.to_text()).collect();
            let rhs: Vec<String> = sides.iter().map(|s| s.1.to_text()).collect();
            let bad = sides.iter().position(|(l, r)| l != r);
            let case = case.sides(lhs.join(" "), rhs.join(" "));
            match bad {
                None => out.push(case.witness(format!("s = {}, terms {:?}", -f.lo(), shape(f))).holds(true)),
                Some(c) if certified => out.push(case.witness(format!("c = {c}")).holds(false)),
                Some(c) => {
                    out.push(case.witness(format!("c = {c}")).skip("a cohomology class may lie beyond the window"))
                }
            }
        }
    }
    Ok(out)
}

fn shape(f: &FreeComplex) -> Vec<Vec<i64>> {
    f.terms().iter().map(|t| t.shifts().to_vec()).collect()
}

fn thm46(p: &Prepared<'_>, weights: &[Weight], out: &mut Vec<VerificationCase>) {
    for m in &p.modules {
        for xi in weights {
            let case = VerificationCase::new(Suite::Thm46, p.name(m), Some(xi));
            match xi.normalized() {
                Some(x) if x <= q(1) => {}
                _ => {
                    out.push(case.skip("stated for xi = (1, x) with x <= 1"));
                    continue;
                }
            }
            let (b, lc) = match certified(p, m) {
                Ok(d) => d,
                Err(e) => {
                    out.push(case.skip(e));
                    continue;
                }
            };
            let t = &p.as_type;
            let mut bad = None;
            let mut checked = 0;
            for w in 0..=t.d {
                let l = lc_max(lc, xi, w).expect("xi0 > 0");
                let r = lc_max_via_tor(b, t, xi, w).expect("xi <= 1");
                if !exact(&l) {
                    continue;
                }
                checked += 1;
                if l.value != r.value {
                    bad = Some(format!("part (1), w = {w}: {} vs {}", l.value, r.value));
                }
            }
            let cm = cmreg_module(lc, xi).expect("xi0 > 0");
            let w = top_local_cohomology(lc)
                .or_else(|| (0..=t.d).rev().find(|&j| lc.degree(j).is_exact() && lc.degree(j).value != Ext::NegInf));
            let lhs = cm.value.to_text();
            let mut rhs = String::from("-");
            if let (Some(w), true) = (w, exact(&cm)) {
                let r = lc_max_via_tor(b, t, xi, w).expect("xi <= 1");
                rhs = r.value.to_text();
                if r.value != cm.value && bad.is_none() {
                    bad = Some(format!("part (2), w = {w}: {} vs {}", cm.value, r.value));
                }
            }
            let mut parts = format!("part (1) at {checked} values of w");
            if let Some(s) = cohen_macaulay_depth(lc) {
                let r = cmreg_cohen_macaulay(b, t, xi, s).expect("certified");
                parts.push_str(&format!("; part (3) with s = {s}: {}", r.value));
                if r.value != cm.value && bad.is_none() {
                    bad = Some(format!("part (3), s = {s}: {} vs {}", cm.value, r.value));
                }
            }
            let case = case.sides(lhs, rhs);
            match bad {
                Some(w) => out.push(case.witness(w).holds(false)),
                None => out.push(case.witness(parts).holds(true)),
            }
        }
    }
}

fn lem27(p: &Prepared<'_>, weights: &[Weight], out: &mut Vec<VerificationCase>) -> Result<()> {
    if p.subject.factors.is_empty() {
        return Ok(());
    }
    let tables = p
        .subject
        .factors
        .iter()
        .map(|a| {
            let gd = compute_groebner(a, p.subject.dmax)?;
            let k = ModulePresentation::trivial(a, Side::Left);
            Ok(minimal_free_resolution(&k, &gd, p.subject.hmax, p.subject.dmax as i64)?.1)
        })
        .collect::<Result<Vec<_>>>()?;
    let names: Vec<&str> = p.subject.factors.iter().map(|a| a.label()).collect();
    for xi in weights {
        let case = VerificationCase::new(Suite::Lem27, format!("{}/k", p.subject.label()), Some(xi));
        if !positive(xi) {
            out.push(case.skip("the identity assumes xi0 > 0"));
            continue;
        }
        let direct = torreg(&p.k_table, xi);
        let mut sum = ExtendedValue::exact(Ext::int(0));
        for t in &tables {
            sum = kunneth_torreg(&sum, &torreg(t, xi))?;
        }
        let case = case.sides(&direct, &sum).witness(format!("factors {}", names.join(", ")));
        if direct.is_exact() && sum.is_exact() {
            out.push(case.holds(direct.value == sum.value));
        } else {
            out.push(case.skip("a factor or the product has no certified finite resolution"));
        }
    }
    Ok(())
}

fn lem31(p: &Prepared<'_>, weights: &[Weight], out: &mut Vec<VerificationCase>) {
    let lambdas = [q(2), BigRational::new(1.into(), 3.into())];
    for m in &p.modules {
        let Ok((_, b)) = &m.complex else {
            out.push(
                VerificationCase::new(Suite::Lem31, p.name(m), None).skip(m.complex.as_ref().err().unwrap().clone()),
            );
            continue;
        };
        let shifted =
            minimal_free_resolution(&shift_module(&m.module, 1), &p.gd, p.subject.hmax, p.subject.dmax as i64);
        let shifted_lc = shifted.as_ref().ok().and_then(|(f, sb)| local_cohomology_of(f, sb, &p.as_type, &p.gd).ok());
        for xi in weights {
            let case = VerificationCase::new(Suite::Lem31, p.name(m), Some(xi));
            let mut bad = Vec::new();
            let mut checks = Vec::new();
            let base = torreg(b, xi).value;
            for l in &lambdas {
                let scaled = torreg(b, &xi.scaled(l)).value;
                checks.push("Torreg scaling");
                if scaled != base.scale(l) {
                    bad.push(format!("Torreg at {l}·xi: {scaled} vs {}", base.scale(l)));
                }
                if let (Ok(lc), false) = (&m.lc, xi.xi0.is_negative()) {
                    let c0 = cmreg_module(lc, xi).expect("xi0 >= 0");
                    let c1 = cmreg_module(lc, &xi.scaled(l)).expect("xi0 >= 0");
                    checks.push("CMreg scaling");
                    if c1.value != c0.value.scale(l) {
                        bad.push(format!("CMreg at {l}·xi: {} vs {}", c1.value, c0.value.scale(l)));
                    }
                }
            }
            if let Ok((_, sb)) = &shifted {
                let want = base.add(&Ext::Finite(-xi.xi0.clone())).expect("finite shift");
                let got = torreg(sb, xi).value;
                checks.push("Torreg twist");
                if got != want {
                    bad.push(format!("Torreg of M(1): {got} vs {want}"));
                }
                if let (Some(slc), Ok(lc), false) = (&shifted_lc, &m.lc, xi.xi0.is_negative()) {
                    let want = cmreg_module(lc, xi)
                        .expect("xi0 >= 0")
                        .value
                        .add(&Ext::Finite(-xi.xi0.clone()))
                        .expect("finite");
                    let got = cmreg_module(slc, xi).expect("xi0 >= 0").value;
                    checks.push("CMreg twist");
                    if got != want {
                        bad.push(format!("CMreg of M(1): {got} vs {want}"));
                    }
                }
            }
            checks.dedup();
            let case = case.witness(if bad.is_empty() { checks.join(", ") } else { bad.join("; ") });
            out.push(case.holds(bad.is_empty()));
        }
    }
}

fn rem47(p: &Prepared<'_>, out: &mut Vec<VerificationCase>) {
    for m in &p.modules {
        let case = VerificationCase::new(Suite::Rem47, p.name(m), None);
        let (b, lc) = match certified(p, m) {
            Ok(d) => d,
            Err(e) => {
                out.push(case.skip(e));
                continue;
            }
        };
        if cohen_macaulay_depth(lc).is_none() {
            out.push(case.skip("not Cohen-Macaulay within the window"));
            continue;
        }
        let Some(pd) = b.max_index() else {
            out.push(case.skip("zero module"));
            continue;
        };
        let tp = b.t(pd).unwrap();
        let bad = (0..=pd).find(|&j| b.t(j).is_some_and(|tj| tp - tj < pd - j));
        let ts: Vec<i64> = (0..=pd).filter_map(|j| b.t(j)).collect();
        let case = case.witness(format!("t = {ts:?}"));
        match bad {
            Some(j) => out.push(case.sides(format!("t_{pd} - t_{j} = {}", tp - b.t(j).unwrap()), pd - j).holds(false)),
            None => out.push(case.holds(true)),
        }
    }
}

fn asreg_cert(p: &Prepared<'_>, weights: &[Weight], out: &mut Vec<VerificationCase>) {
    let label = p.subject.label().to_string();
    let t = &p.as_type;
    if !t.is_certified() {
        out.push(VerificationCase::new(Suite::AsregCert, label, None).skip(t.evidence.clone()));
        return;
    }
    let mut zeros = Vec::new();
    for xi in weights {
        let case = VerificationCase::new(Suite::AsregCert, label.clone(), Some(xi));
        if !positive(xi) {
            out.push(case.skip("the bound assumes xi0 > 0"));
            continue;
        }
        let v = match asreg(&p.k_table, t, xi) {
            Ok(v) => v,
            Err(e) => {
                out.push(case.skip(e.to_string()));
                continue;
            }
        };
        if !v.is_exact() {
            out.push(case.sides(&v, 0).skip("Torreg(k) is not certified"));
            continue;
        }
        if v.value == Ext::int(0) {
            zeros.push(xi.to_string());
        }
        out.push(case.sides(&v.value, 0).witness("ASreg >= 0").holds(v.value >= Ext::int(0)));
    }
    let case = VerificationCase::new(Suite::AsregCert, label, None).sides(
        format!("AS regular of type ({}, {})", t.d, t.ell),
        format!("ASreg = 0 at {} grid weights", zeros.len()),
    );
    out.push(case.witness(zeros.join(" ")).holds(!zeros.is_empty()));
}
