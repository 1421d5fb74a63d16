use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use crate::exactlin::Field;
use crate::gbasis::{compute_groebner, AlgebraPresentation, Side};
use crate::modpres::ModulePresentation;
use crate::resolution::{minimal_free_resolution, BettiTable};

use super::*;

fn downup() -> AlgebraPresentation {
    AlgebraPresentation::from_strs(
        "downup",
        Field::Rational,
        &[("x", 1), ("y", 1)],
        &["x^2*y - y*x^2", "x*y^2 - y^2*x"],
    )
}

fn kxy() -> AlgebraPresentation {
    AlgebraPresentation::from_strs("kxy", Field::Rational, &[("x", 1), ("y", 1)], &["y*x - x*y"])
}

fn table_of_k(a: &AlgebraPresentation, dmax: u32, hmax: usize) -> BettiTable {
    let gd = compute_groebner(a, dmax).unwrap();
    minimal_free_resolution(&ModulePresentation::trivial(a, Side::Left), &gd, hmax, dmax as i64).unwrap().1
}

fn r(a: i64, b: i64) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

#[test]
fn downup_torreg_is_piecewise_linear() {
    let b = table_of_k(&downup(), 10, 6);
    for (a, d) in [(0, 1), (1, 1), (5, 4), (3, 2), (2, 1), (-7, 3)] {
        let x = r(a, d);
        let want = [q(0), q(1) - &x, q(3) - q(2) * &x, q(4) - q(3) * &x].into_iter().max().unwrap();
        let got = torreg(&b, &Weight::one(x));
        assert_eq!(got.value, Ext::Finite(want));
        assert!(got.is_exact());
    }
    assert_eq!(pdim(&b).value, Ext::int(3));
    let asym = torreg_asymptote(&b).unwrap();
    assert_eq!((asym.intercept.clone(), asym.slope.clone()), (q(4), q(-3)));
    assert_eq!(asym.threshold, Some(q(1)));
}

#[test]
fn downup_is_as_regular() {
    let a = downup();
    let gd = compute_groebner(&a, 12).unwrap();
    let t = check_as_regular(&gd, 6, 12);
    assert_eq!(t.kind, ASKind::AsRegular, "{}", t.evidence);
    assert_eq!((t.d, t.ell), (3, 4));
    assert_eq!(cmreg_algebra(&t, &Weight::classic()).unwrap().value, Ext::int(-1));
}

#[test]
fn cube_root_is_not_as_regular() {
    let a = AlgebraPresentation::from_strs("x3", Field::Rational, &[("x", 1)], &["x^3"]);
    let gd = compute_groebner(&a, 10).unwrap();
    let t = check_as_regular(&gd, 4, 10);
    assert_eq!(t.kind, ASKind::Uncertified);
    assert!(cmreg_algebra(&t, &Weight::classic()).is_err());
}

#[test]
fn line_in_the_plane() {
    let a = kxy();
    let gd = compute_groebner(&a, 12).unwrap();
    let t = check_as_regular(&gd, 4, 12);
    assert_eq!((t.d, t.ell), (2, 2));
    let m = ModulePresentation::cyclic("kxy_x", &a, Side::Left, &["x"]).unwrap();
    let (lc, b) = local_cohomology_degrees(&m, &t, &gd, 4, 12).unwrap();
    assert_eq!(lc.degree(0).value, Ext::NegInf);
    assert_eq!(lc.degree(1).value, Ext::int(-1));
    assert_eq!(lc.degree(2).status, Status::UpperBound);
    assert!(lc.degree(2).value <= Ext::int(-12));
    assert!(!lc.is_exact());
    assert_eq!(depth(&lc), ExtendedValue::exact(Ext::int(1)).with_window(Some((4, 12))));
    assert_eq!(cohen_macaulay_depth(&lc), Some(1));
    for x in [r(1, 1), r(0, 1), r(-3, 2), r(1, 2)] {
        let xi = Weight::one(x.clone());
        let cm = cmreg_module(&lc, &xi).unwrap();
        assert_eq!(cm.value, Ext::Finite(x - q(1)));
        assert!(cm.is_exact());
        assert_eq!(cmreg_cohen_macaulay(&b, &t, &xi, 1).unwrap().value, cm.value);
        assert_eq!(lc_max_via_tor(&b, &t, &xi, 2).unwrap().value, cm.value);
    }
}

#[test]
fn free_module_is_maximal_cohen_macaulay() {
    let a = downup();
    let gd = compute_groebner(&a, 12).unwrap();
    let t = ASType::assumed(3, 4);
    let m = ModulePresentation::free(&a, Side::Left, vec![2]);
    let (lc, _) = local_cohomology_degrees(&m, &t, &gd, 4, 12).unwrap();
    assert_eq!(depth(&lc).value, Ext::int(3));
    assert_eq!(lc.degree(3).value, Ext::int(-2));
    assert_eq!(cmreg_module(&lc, &Weight::classic()).unwrap().value, Ext::int(1));
}

#[test]
fn asreg_of_downup() {
    let a = downup();
    let gd = compute_groebner(&a, 12).unwrap();
    let t = check_as_regular(&gd, 6, 12);
    let b = table_of_k(&a, 12, 6);
    for (a1, d1) in [(1, 1), (0, 1), (1, 2)] {
        let xi = Weight::one(r(a1, d1));
        let v = asreg(&b, &t, &xi).unwrap();
        assert_eq!(v.value, Ext::Finite(q(0)), "{xi}");
    }
    assert!(concavity(&t, &Weight::ints(1, 2)).is_err());
    assert_eq!(concavity(&t, &Weight::classic()).unwrap().value, Ext::int(1));
    let up = concavity_upper_bound(&[], &Weight::classic()).unwrap();
    assert_eq!((up.value, up.status), (Ext::PosInf, Status::UpperBound));
    let asym = torreg_plus_cmreg_asymptote(&b, &t).unwrap();
    assert_eq!((asym.intercept, asym.slope), (q(0), q(0)));
}

#[test]
fn koszul_and_rate() {
    let b = table_of_k(&kxy(), 8, 4);
    assert_eq!(koszul_check(&b), KoszulVerdict::ThroughWindow);
    assert_eq!(rate(&b).value, Ext::int(1));
    let d = table_of_k(&downup(), 10, 6);
    assert_eq!(koszul_check(&d), KoszulVerdict::NotKoszul { i: 2, j: 3 });
    assert_eq!(rate(&d).value, Ext::int(2));
    assert_eq!(slope(&d).value, Ext::Finite(r(3, 2)));
}

#[test]
fn dominant_line() {
    let lines = vec![(q(0), q(0)), (q(1), q(-1)), (q(3), q(-2)), (q(4), q(-3)), (q(2), q(-3))];
    let a = Affine::dominant_below(&lines).unwrap();
    assert_eq!((a.intercept, a.slope, a.threshold), (q(4), q(-3), Some(q(1))));
    assert!(Affine::dominant_below(&[]).is_none());
}

#[test]
fn weight_parsing() {
    assert_eq!(Weight::parse("1,3/2").unwrap(), Weight::frac(3, 2));
    assert_eq!(Weight::parse("pdim").unwrap(), Weight::ints(0, -1));
    assert!(Weight::parse("0,0").is_err());
    assert!(Weight::parse("1").is_err());
}

proptest! {
    #[test]
    fn torreg_scales_linearly(
        entries in prop::collection::vec((0i64..6, -4i64..12), 1..8),
        x0 in -5i64..6, x1 in -5i64..6, lam in 1i64..7,
    ) {
        prop_assume!(x0 != 0 || x1 != 0);
        let mut b = BettiTable::new(6, 20);
        for (i, j) in entries {
            b.add(i, j, 1);
        }
        let xi = Weight::ints(x0, x1);
        let lhs = torreg(&b, &xi.scaled(&q(lam))).value;
        let rhs = torreg(&b, &xi).value.scale(&q(lam));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn torreg_is_monotone_in_the_table(
        entries in prop::collection::vec((0i64..6, -4i64..12), 1..8),
        extra in (0i64..6, -4i64..12),
        x1 in -5i64..6,
    ) {
        let mut b = BettiTable::new(6, 20);
        for (i, j) in entries {
            b.add(i, j, 1);
        }
        let xi = Weight::ints(1, x1);
        let before = torreg(&b, &xi).value;
        b.add(extra.0, extra.1, 1);
        prop_assert!(torreg(&b, &xi).value >= before);
    }

    #[test]
    fn asymptote_matches_the_maximum(
        lines in prop::collection::vec((-6i64..6, -4i64..4), 1..6),
        x in -40i64..0,
    ) {
        let lines: Vec<(BigRational, BigRational)> = lines.into_iter().map(|(a, b)| (q(a), q(b))).collect();
        let aff = Affine::dominant_below(&lines).unwrap();
        let x = q(x);
        if aff.threshold.as_ref().is_none_or(|t| x <= *t) {
            let max = lines.iter().map(|(a, b)| a + b * &x).max().unwrap();
            prop_assert_eq!(aff.eval(&x), max);
        }
    }
}
