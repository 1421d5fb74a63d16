use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::Value;

use gradreg_core::gbasis::compute_groebner;
use gradreg_core::modpres::{
    restrict_scalars, shift_module, tensor_algebra, truncate_module, veronese_presentation, AlgebraMap,
};
use gradreg_core::regularity::{
    asreg, check_as_regular, cmreg_cohen_macaulay, cmreg_module, depth, koszul_check, kunneth_torreg,
    local_cohomology_degrees, pdim, prop58_bound, rate, rate_bound, slope, torreg, Ext, KoszulVerdict, Status, Weight,
};
use gradreg_core::verify::{
    cube_root, downup, jordan_subalgebra, kx, kxy, kz, random_minimal_complexes, thm45_sides, verify_default, Outcome,
    Report, Suite,
};
use gradreg_core::{
    minimal_free_resolution, AlgebraPresentation, BettiTable, Field, ModulePresentation, NcPolynomial, Side,
};

type Check = std::result::Result<String, String>;

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn fr(a: i64, b: i64) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn exact_eq(what: &str, v: &gradreg_core::ExtendedValue, want: &BigRational) -> std::result::Result<(), String> {
    ensure(v.status == Status::Exact && v.value == Ext::Finite(want.clone()), || {
        format!("{what}: got {v}, want {want} exact")
    })
}

fn degrees(b: &BettiTable, i: i64) -> Vec<i64> {
    b.row(i).into_iter().flat_map(|(j, n)| std::iter::repeat_n(j, n)).collect()
}

fn err(e: gradreg_core::Error) -> String {
    e.to_string()
}

fn c1(field: Field) -> Check {
    let a = downup(field);
    let gd = compute_groebner(&a, 14).map_err(err)?;
    let k = ModulePresentation::trivial(&a, Side::Left);
    let (_, b) = minimal_free_resolution(&k, &gd, 6, 14).map_err(err)?;
    ensure(b.terminated_at() == Some(3) && b.is_exact(), || format!("termination {:?}", b.terminated_at()))?;
    let rows: Vec<Vec<i64>> = (0..=3).map(|i| degrees(&b, i)).collect();
    ensure(rows == vec![vec![0], vec![1, 1], vec![3, 3], vec![4]], || format!("rows {rows:?}"))?;
    let t = check_as_regular(&gd, 6, 14);
    ensure(t.is_certified() && (t.d, t.ell) == (3, 4), || format!("AS type {:?}", (t.d, t.ell, t.kind)))?;
    for x in [q(0), q(1), fr(5, 4), fr(3, 2), q(2)] {
        let want = [q(0), q(1) - &x, q(3) - &x * q(2), q(4) - &x * q(3)].into_iter().max().unwrap();
        exact_eq(&format!("Torreg at {x}"), &torreg(&b, &Weight::one(x.clone())), &want)?;
    }
    for x in [q(0), fr(1, 2), q(1)] {
        exact_eq(&format!("ASreg at {x}"), &asreg(&b, &t, &Weight::one(x.clone())).map_err(err)?, &q(0))?;
    }
    for x in [fr(3, 2), q(2)] {
        let v = asreg(&b, &t, &Weight::one(x.clone())).map_err(err)?;
        ensure(v.value > Ext::Finite(q(0)), || format!("ASreg at {x} = {v}"))?;
    }
    Ok("t = (0,1,3,4), type (3,4), Torreg and ASreg match".into())
}

fn c2(field: Field) -> Check {
    let a = kx(field, 2);
    let gd = compute_groebner(&a, 12).map_err(err)?;
    let t = check_as_regular(&gd, 6, 12);
    ensure(t.is_certified() && (t.d, t.ell) == (1, 2), || format!("AS type {:?}", (t.d, t.ell)))?;
    let (_, kb) = minimal_free_resolution(&ModulePresentation::trivial(&a, Side::Left), &gd, 6, 12).map_err(err)?;
    let free = ModulePresentation::free(&a, Side::Left, vec![0]);
    let (lc, _) = local_cohomology_degrees(&free, &t, &gd, 6, 12).map_err(err)?;
    for x in [q(1), q(2), q(3)] {
        let xi = Weight::one(x.clone());
        exact_eq(&format!("CMreg(A) at {x}"), &cmreg_module(&lc, &xi).map_err(err)?, &(&x - q(2)))?;
        exact_eq(&format!("Torreg(k) at {x}"), &torreg(&kb, &xi), &(q(2) - &x).max(q(0)))?;
        exact_eq(&format!("ASreg at {x}"), &asreg(&kb, &t, &xi).map_err(err)?, &(&x - q(2)).max(q(0)))?;
    }
    Ok("CMreg(A) = xi1 - 2, Torreg(k) = max(2 - xi1, 0), ASreg exact".into())
}

fn c3(field: Field) -> Check {
    let a = kxy(field);
    let gd = compute_groebner(&a, 16).map_err(err)?;
    let (_, kb) = minimal_free_resolution(&ModulePresentation::trivial(&a, Side::Left), &gd, 8, 16).map_err(err)?;
    ensure(koszul_check(&kb) == KoszulVerdict::ThroughWindow, || format!("{:?}", koszul_check(&kb)))?;
    let t = check_as_regular(&gd, 8, 16);
    ensure(t.is_certified() && (t.d, t.ell) == (2, 2), || format!("AS type {:?}", (t.d, t.ell)))?;
    let m = ModulePresentation::cyclic("A/(x)", &a, Side::Left, &["x"]).map_err(err)?;
    let (lc, b) = local_cohomology_degrees(&m, &t, &gd, 8, 16).map_err(err)?;
    exact_eq("depth", &depth(&lc), &q(1))?;
    exact_eq("pdim", &pdim(&b), &q(1))?;
    exact_eq("deg H^1", lc.degree(1), &q(-1))?;
    for x in [q(0), fr(1, 2), q(1)] {
        let xi = Weight::one(x.clone());
        let via_tor = cmreg_cohen_macaulay(&b, &t, &xi, 1).map_err(err)?;
        let via_duality = cmreg_module(&lc, &xi).map_err(err)?;
        exact_eq(&format!("CM route at {x}"), &via_tor, &(&x - q(1)))?;
        exact_eq(&format!("duality route at {x}"), &via_duality, &(&x - q(1)))?;
    }
    Ok("Koszul, type (2,2), A/(x): depth 1, pdim 1, deg H^1 = -1, routes agree".into())
}

fn cases(r: &Report, suite: Suite) -> impl Iterator<Item = &gradreg_core::verify::VerificationCase> {
    r.cases.iter().filter(move |c| c.suite == suite)
}

fn no_failures(r: &Report, suites: &[Suite]) -> std::result::Result<(), String> {
    for &s in suites {
        if let Some(c) = cases(r, s).find(|c| c.is_fail()) {
            return Err(format!("{s} fails on {} at {:?}: {:?} vs {:?}", c.subject, c.xi, c.lhs, c.rhs));
        }
    }
    Ok(())
}

fn c4(r: &Report) -> Check {
    no_failures(r, &[Suite::Cor312])?;
    let count = |alg: &str| {
        cases(r, Suite::Cor312)
            .filter(|c| c.outcome == Outcome::Pass && c.subject.starts_with(&format!("{alg}/A/(")))
            .count()
    };
    let (a, b) = (count("kxy"), count("downup"));
    ensure(a >= 10 && b >= 10, || format!("only {a} and {b} quotient modules checked"))?;
    Ok(format!("{a} quotients over k[x,y], {b} over down-up"))
}

fn c5(r: &Report) -> Check {
    let suites = [Suite::Thm33, Suite::Thm35, Suite::AsregCert];
    no_failures(r, &suites)?;
    let mut parts = Vec::new();
    for s in suites {
        let pass = cases(r, s).filter(|c| c.outcome == Outcome::Pass).count();
        ensure(pass > 0, || format!("{s} has no passing case"))?;
        let positive = |c: &&gradreg_core::verify::VerificationCase| c.xi.as_ref().is_some_and(|w| w.xi0 > q(0));
        for c in cases(r, s).filter(positive) {
            if let Outcome::Skipped(why) = &c.outcome {
                ensure(!why.contains("xi0"), || format!("{s} skipped {} at {:?}: {why}", c.subject, c.xi))?;
            }
        }
        parts.push(format!("{s} {pass}"));
    }
    Ok(parts.join(", "))
}

fn c6(r: &Report) -> Check {
    no_failures(r, &[Suite::Thm310])?;
    let grid = [q(0), fr(1, 2), q(1), q(-10), q(-100)];
    let mut checked = 0;
    for c in cases(r, Suite::Thm310) {
        match &c.xi {
            Some(w) if w.xi0 == q(1) && grid.contains(&w.xi1) => match &c.outcome {
                Outcome::Pass => checked += 1,
                Outcome::Skipped(why) if why.contains("not certified") || why.contains("finite projective") => {}
                Outcome::Skipped(why) => return Err(format!("{} at {}: {why}", c.subject, w.xi1)),
                Outcome::Fail => unreachable!(),
            },
            None if c.subject.ends_with("/asymptotic") => {
                ensure(c.outcome == Outcome::Pass, || format!("{}: {:?}", c.subject, c.outcome))?;
                checked += 1;
            }
            _ => {}
        }
    }
    ensure(checked > 0, || "no equality case ran".into())?;
    Ok(format!("{checked} equalities and asymptotic matches"))
}

fn c7(field: Field) -> Check {
    let a = kxy(field);
    let gd = compute_groebner(&a, 24).map_err(err)?;
    let complexes = random_minimal_complexes(&gd, 25, 45).map_err(err)?;
    ensure(complexes.len() == 25, || "wrong count".into())?;
    let mut n = 0;
    for (k, f) in complexes.iter().enumerate() {
        ensure(f.lo() >= -3 && f.shift_range().is_some_and(|(a, b)| a >= -5 && b <= 5), || {
            format!("complex {k} out of range")
        })?;
        for x in [q(1), q(0), q(-2)] {
            let (sides, _) = thm45_sides(f, &gd, &x).map_err(err)?;
            for (c, (l, r)) in sides.iter().enumerate() {
                ensure(l == r, || format!("complex {k}, xi1 = {x}, c = {c}: {} vs {}", l.to_text(), r.to_text()))?;
                n += 1;
            }
        }
    }
    Ok(format!("25 complexes, {n} (c, xi) pairs agree"))
}

fn c8(field: Field) -> Check {
    let a = kxy(field);
    let gd = compute_groebner(&a, 16).map_err(err)?;
    let t = check_as_regular(&gd, 8, 16);
    let (_, kb) = minimal_free_resolution(&ModulePresentation::trivial(&a, Side::Left), &gd, 8, 16).map_err(err)?;
    let modules = [
        ModulePresentation::free(&a, Side::Left, vec![0]),
        ModulePresentation::cyclic("A/(x^2)", &a, Side::Left, &["x^2"]).map_err(err)?,
    ];
    let mut runs = 0;
    for m in &modules {
        let (lc, _) = local_cohomology_degrees(m, &t, &gd, 8, 16).map_err(err)?;
        for x in [q(1), fr(3, 2)] {
            let xi = Weight::one(x.clone());
            let cm = cmreg_module(&lc, &xi).map_err(err)?;
            let Ext::Finite(v) = &cm.value else { return Err(format!("CMreg {cm}")) };
            ensure(cm.status == Status::Exact, || format!("CMreg {cm}"))?;
            let base = v.ceil().to_integer().to_string().parse::<i64>().unwrap();
            let Ext::Finite(c) = torreg(&kb, &xi).value else { return Err("Torreg(k)".into()) };
            let eps = (&x - q(1)).max(q(0));
            for s in [base, base + 2] {
                let n = shift_module(&truncate_module(m, s, &gd).map_err(err)?, s);
                let (_, b) = minimal_free_resolution(&n, &gd, 8, 16 - s).map_err(err)?;
                for i in b.indices() {
                    let (g, d) = (b.ged(i).unwrap(), b.t(i).unwrap());
                    let bound = &c + &eps + &x * q(i);
                    ensure(i <= g && g <= d && q(d) <= bound, || {
                        format!("{} s = {s}, xi1 = {x}, i = {i}: ged {g}, deg {d}, bound {bound}", m.label())
                    })?;
                }
                if x == q(1) {
                    ensure(koszul_check(&b) == KoszulVerdict::ThroughWindow, || {
                        format!("{} s = {s}: truncation is not linear", m.label())
                    })?;
                }
                runs += 1;
            }
        }
    }
    Ok(format!("{runs} truncations within bounds, linear at xi1 = 1"))
}

fn c9(field: Field) -> Check {
    let (d, z) = (downup(field), kz(field));
    let dz = tensor_algebra(&d, &z).map_err(err)?;
    let table = |a: &AlgebraPresentation| -> std::result::Result<BettiTable, String> {
        let gd = compute_groebner(a, 12).map_err(err)?;
        Ok(minimal_free_resolution(&ModulePresentation::trivial(a, Side::Left), &gd, 6, 12).map_err(err)?.1)
    };
    let (bd, bz, bdz) = (table(&d)?, table(&z)?, table(&dz)?);
    for x in [q(0), q(1)] {
        let xi = Weight::one(x.clone());
        let direct = torreg(&bdz, &xi);
        let sum = kunneth_torreg(&torreg(&bd, &xi), &torreg(&bz, &xi)).map_err(err)?;
        ensure(direct.status == Status::Exact && direct.value == sum.value, || {
            format!("xi1 = {x}: direct {direct}, sum {sum}")
        })?;
    }
    Ok("direct equals sum at xi1 = 0, 1".into())
}

fn c10(field: Field) -> Check {
    let t = kx(field, 1);
    let a = cube_root(field);
    let (gt, ga) = (compute_groebner(&t, 12).map_err(err)?, compute_groebner(&a, 12).map_err(err)?);
    let phi = AlgebraMap::by_names(&t, &a).map_err(err)?;
    let free = ModulePresentation::free(&a, Side::Left, vec![0]);
    let ta = restrict_scalars(&gt, &ga, &phi, &free, 12, 12).map_err(err)?;
    let (_, tb) = minimal_free_resolution(&ta, &gt, 6, 12).map_err(err)?;
    let c = prop58_bound(&tb).map_err(err)?;
    ensure(c == q(3), || format!("c = {c}"))?;

    let (_, kb) = minimal_free_resolution(&ModulePresentation::trivial(&a, Side::Left), &ga, 6, 12).map_err(err)?;
    ensure(kb.max_index() == Some(6), || format!("resolution reaches {:?}", kb.max_index()))?;
    let tr = torreg(&kb, &Weight::one(q(3)));
    ensure(tr.value == Ext::Finite(q(0)), || format!("Torreg_(1,3) = {tr}"))?;
    for i in kb.indices() {
        ensure(kb.t(i).unwrap() - 3 * i <= 0, || format!("t_{i} = {:?}", kb.t(i)))?;
    }
    let r = rate(&kb);
    let rb = rate_bound(&q(0), &q(3));
    ensure(r.value == Ext::Finite(q(2)) && rb == q(5), || format!("rate {r}, bound {rb}"))?;
    let sl = slope(&kb);
    ensure(sl.value == Ext::Finite(fr(3, 2)), || format!("slope {sl}"))?;

    let p = kxy(field);
    let gp = compute_groebner(&p, 14).map_err(err)?;
    let v = veronese_presentation(&gp, 2, 3, 4).map_err(err)?;
    let b = &v.algebra;
    ensure(b.gens().len() == 3, || format!("{} generators", b.gens().len()))?;
    ensure(b.relations().iter().all(|r| r.degree() == Some(2)), || "non-quadratic relation".into())?;
    let gv = compute_groebner(b, 7).map_err(err)?;
    let mono = |l: Vec<u16>| NcPolynomial::monomial(b.gens().word(l), field.one());
    for (x, y) in [(0, 1), (0, 2), (1, 2)] {
        let comm = mono(vec![x, y]).sub(&mono(vec![y, x]));
        ensure(gv.normal_form(&comm).is_zero(), || "commutator not a relation".into())?;
    }
    // Modulo commutators the degree-2 relation space is one-dimensional: dim A_2 = 6 - 1.
    let commutative = AlgebraPresentation::from_strs(
        "c",
        field,
        &[("u", 1), ("v", 1), ("w", 1)],
        &["v*u - u*v", "w*u - u*w", "w*v - v*w"],
    );
    let gc = compute_groebner(&commutative, 2).map_err(err)?;
    ensure(gc.dim(2) - gv.dim(2) == 1, || format!("dims {} and {}", gc.dim(2), gv.dim(2)))?;
    let (_, vb) = minimal_free_resolution(&ModulePresentation::trivial(b, Side::Left), &gv, 6, 7).map_err(err)?;
    ensure(koszul_check(&vb) == KoszulVerdict::ThroughWindow && vb.max_index() >= Some(3), || {
        format!("{:?}", koszul_check(&vb))
    })?;
    Ok(format!(
        "c = 3, rate 2 <= 5, slope 3/2; Veronese: 3 generators, {} quadratic relations (1 modulo commutators), Koszul",
        b.relations().len()
    ))
}

fn c11(field: Field) -> Check {
    let (r, u) = jordan_subalgebra(field, 14).map_err(err)?;
    let gr = compute_groebner(&r, 14).map_err(err)?;
    let (_, ub) = minimal_free_resolution(&u, &gr, 4, 14).map_err(err)?;
    for i in 0..=4 {
        ensure(ub.t(i) == Some(3 * i + 1), || format!("t_{i}(U) = {:?}", ub.t(i)))?;
    }
    let (_, kb) = minimal_free_resolution(&ModulePresentation::trivial(&r, Side::Left), &gr, 4, 14).map_err(err)?;
    for n in 1..=4 {
        ensure(degrees(&kb, n) == vec![3 * n - 2, 3 * n - 1], || format!("F_{n}: {:?}", degrees(&kb, n)))?;
    }
    let at3 = torreg(&kb, &Weight::one(q(3)));
    ensure(at3.value == Ext::Finite(q(0)), || format!("Torreg_(1,3) = {at3}"))?;
    let mut prev = q(0);
    for h in 1..=4 {
        let (_, bh) = minimal_free_resolution(&ModulePresentation::trivial(&r, Side::Left), &gr, h, 14).map_err(err)?;
        let Ext::Finite(v) = torreg(&bh, &Weight::one(q(1))).value else { return Err("Torreg_(1,1)".into()) };
        ensure(v > prev, || format!("Torreg_(1,1) through {h} = {v}, not growing"))?;
        prev = v;
    }
    Ok(format!("t(U) = 3i + 1, F_n = {{3n-2, 3n-1}}, Torreg_(1,3) = 0, Torreg_(1,1) grows to {prev}"))
}

fn without_version(r: &Report) -> String {
    let mut v = r.to_json();
    if let Value::Object(o) = &mut v {
        o.remove("version");
    }
    serde_json::to_string(&v).unwrap()
}

fn without_field(r: &Report) -> String {
    let mut v = r.to_json();
    if let Value::Object(o) = &mut v {
        o.remove("version");
        o.remove("field");
    }
    serde_json::to_string(&v).unwrap()
}

struct Field1to11 {
    results: Vec<Check>,
}

fn run_criteria(field: Field, report: &Report) -> Field1to11 {
    let results = vec![
        c1(field),
        c2(field),
        c3(field),
        c4(report),
        c5(report),
        c6(report),
        c7(field),
        c8(field),
        c9(field),
        c10(field),
        c11(field),
    ];
    Field1to11 { results }
}

fn main() {
    let rational = Field::Rational;
    let prime = Field::prime(32003).unwrap();
    let rq = verify_default(&Suite::ALL, rational).unwrap();
    let rq2 = verify_default(&Suite::ALL, rational).unwrap();
    let rp = verify_default(&Suite::ALL, prime).unwrap();
    let over_q = run_criteria(rational, &rq);
    let over_p = run_criteria(prime, &rp);

    let mut lines = Vec::new();
    for (i, (a, b)) in over_q.results.iter().zip(&over_p.results).enumerate() {
        let check = match (a, b) {
            (Ok(x), Ok(_)) => Ok(x.clone()),
            (Err(e), _) => Err(format!("over Q: {e}")),
            (_, Err(e)) => Err(format!("over F_32003: {e}")),
        };
        lines.push((i + 1, check));
    }
    let same_runs = without_version(&rq) == without_version(&rq2);
    let same_fields = without_field(&rq) == without_field(&rp);
    let agree = over_q.results.iter().zip(&over_p.results).all(|(a, b)| a.is_ok() == b.is_ok());
    let c12 = if same_runs && same_fields && agree && rq.passed() {
        Ok(format!("two runs byte-identical ({} cases); Q and F_32003 reports and criteria agree", rq.cases.len()))
    } else {
        Err(format!("identical runs {same_runs}, fields agree {same_fields}, criteria agree {agree}"))
    };
    lines.push((12, c12));

    let mut failed = Vec::new();
    for (n, check) in &lines {
        match check {
            Ok(msg) => println!("criterion {n:>2}: PASS  {msg}"),
            Err(msg) => {
                println!("criterion {n:>2}: FAIL  {msg}");
                failed.push(*n);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
