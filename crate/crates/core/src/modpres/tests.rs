use crate::exactlin::Field;
use crate::freealg::parse_polynomial;
use crate::gbasis::{compute_groebner, AlgebraPresentation, Side};
use crate::resolution::minimal_free_resolution;

use super::*;

fn kxy() -> AlgebraPresentation {
    AlgebraPresentation::from_strs("kxy", Field::Rational, &[("x", 1), ("y", 1)], &["y*x - x*y"])
}

fn kx() -> AlgebraPresentation {
    AlgebraPresentation::from_strs("kx", Field::Rational, &[("x", 1)], &[])
}

fn poly(a: &AlgebraPresentation, s: &str) -> crate::freealg::NcPolynomial {
    parse_polynomial(s, a.gens(), a.field()).unwrap()
}

#[test]
fn truncating_the_polynomial_ring() {
    let a = kxy();
    let gd = compute_groebner(&a, 8).unwrap();
    let m = ModulePresentation::free(&a, Side::Left, vec![0]);
    let t = truncate_module(&m, 1, &gd).unwrap();
    assert_eq!(t.cover().shifts(), &[1, 1]);
    assert_eq!(t.relation_degrees(), vec![2]);
    let pm = PresentedModule::new(&t, &gd, 8);
    assert_eq!(graded_dims(&pm, 0, 6), vec![0, 2, 3, 4, 5, 6, 7]);
}

#[test]
fn truncation_below_generators_and_of_k() {
    let a = kxy();
    let gd = compute_groebner(&a, 6).unwrap();
    let m = ModulePresentation::cyclic("M", &a, Side::Left, &["x^2"]).unwrap();
    let t = truncate_module(&m, -2, &gd).unwrap();
    assert_eq!(t.cover().shifts(), &[0]);
    assert_eq!(t.relation_degrees(), vec![2]);
    let k = ModulePresentation::trivial(&a, Side::Left);
    assert!(truncate_module(&k, 1, &gd).unwrap().cover().is_zero());
}

#[test]
fn shifts_compose() {
    let a = kxy();
    let m = ModulePresentation::cyclic("M", &a, Side::Left, &["x"]).unwrap();
    assert_eq!(shift_module(&m, 0), m);
    assert_eq!(shift_module(&shift_module(&m, 2), -5), shift_module(&m, -3));
    let k = shift_module(&ModulePresentation::trivial(&a, Side::Left), -3);
    assert_eq!(k.cover().shifts(), &[3]);
}

#[test]
fn veronese_of_one_variable() {
    let gd = compute_groebner(&kx(), 12).unwrap();
    let v = veronese_presentation(&gd, 2, 4, 5).unwrap();
    assert_eq!(v.algebra.gens().len(), 1);
    assert!(v.algebra.relations().is_empty());
}

#[test]
fn veronese_of_the_plane() {
    let a = kxy();
    let gd = compute_groebner(&a, 10).unwrap();
    let v = veronese_presentation(&gd, 2, 3, 4).unwrap();
    let b = &v.algebra;
    assert_eq!(b.gens().names(), &["xx", "xy", "yy"]);
    assert!(b.relations().iter().all(|r| r.degree() == Some(2)));
    let vd = compute_groebner(b, 4).unwrap();
    assert_eq!(vd.dims(), vec![1, 3, 5, 7, 9]);
    let f = b.field();
    let (u, vv, w) = (0u16, 1u16, 2u16);
    let mono = |l: Vec<u16>| crate::freealg::NcPolynomial::monomial(b.gens().word(l), f.one());
    for (p, q) in [(u, vv), (u, w), (vv, w)] {
        let comm = mono(vec![p, q]).sub(&mono(vec![q, p]));
        assert!(vd.normal_form(&comm).is_zero());
    }
    let classic = mono(vec![u, w]).sub(&mono(vec![vv, vv]));
    assert!(vd.normal_form(&classic).is_zero());
}

#[test]
fn subalgebra_examples() {
    let a = kx();
    let gd = compute_groebner(&a, 12).unwrap();
    let s = subalgebra_presentation(&gd, &[poly(&a, "x^2")], 2, 6).unwrap();
    assert_eq!(s.algebra.gens().degrees(), &[2]);
    assert!(s.algebra.relations().is_empty());

    let b = kxy();
    let gd = compute_groebner(&b, 6).unwrap();
    let s = subalgebra_presentation(&gd, &[poly(&b, "x"), poly(&b, "y"), poly(&b, "x*y")], 2, 6).unwrap();
    assert_eq!(s.algebra.gens().len(), 2);
    assert_eq!(compute_groebner(&s.algebra, 6).unwrap().dims(), gd.dims());
}

#[test]
fn jordan_plane_subalgebra() {
    let u = AlgebraPresentation::from_strs("U", Field::Rational, &[("x", 1), ("y", 1)], &["y*x - x*y - x^2"]);
    let gd = compute_groebner(&u, 10).unwrap();
    let s = subalgebra_presentation(&gd, &[poly(&u, "y"), poly(&u, "x*y")], 2, 10).unwrap();
    assert_eq!(s.algebra.gens().degrees(), &[1, 2]);
    let rd = compute_groebner(&s.algebra, 10).unwrap();
    // R = k + Uy: dim R_n = dim U_n = n + 1 for n ≥ 1 minus the part outside Uy
    let direct: Vec<usize> = (0..=10u32)
        .map(|n| {
            if n == 0 {
                return 1;
            }
            let mut e = crate::exactlin::Echelon::new(gd.dim(n as i64), gd.field());
            for w in gd.normal_words(n - 1) {
                let p = crate::freealg::NcPolynomial::monomial(w.clone(), gd.field().one()).mul(&poly(&u, "y"));
                e.insert(&gd.coords(&gd.normal_form(&p), n));
            }
            e.rank()
        })
        .collect();
    assert_eq!(rd.dims(), direct);
}

#[test]
fn restriction_along_quotients() {
    let t = kx();
    let a = AlgebraPresentation::from_strs("x3", Field::Rational, &[("x", 1)], &["x^3"]);
    let (gt, ga) = (compute_groebner(&t, 8).unwrap(), compute_groebner(&a, 8).unwrap());
    let phi = AlgebraMap::by_names(&t, &a).unwrap();
    assert!(phi.check(&ga));
    let m = ModulePresentation::free(&a, Side::Left, vec![0]);
    let r = restrict_scalars(&gt, &ga, &phi, &m, 4, 8).unwrap();
    let (_, b) = minimal_free_resolution(&r, &gt, 3, 8).unwrap();
    assert_eq!(b.entries().collect::<Vec<_>>(), vec![(0, 0, 1), (1, 3, 1)]);

    let t = kxy();
    let a = AlgebraPresentation::from_strs("q", Field::Rational, &[("x", 1), ("y", 1)], &["y*x - x*y", "x^2"]);
    let (gt, ga) = (compute_groebner(&t, 8).unwrap(), compute_groebner(&a, 8).unwrap());
    let phi = AlgebraMap::by_names(&t, &a).unwrap();
    let m = ModulePresentation::free(&a, Side::Left, vec![0]);
    let r = restrict_scalars(&gt, &ga, &phi, &m, 4, 8).unwrap();
    let (_, b) = minimal_free_resolution(&r, &gt, 3, 8).unwrap();
    assert_eq!((b.t(0), b.t(1), b.terminated_at()), (Some(0), Some(2), Some(1)));
}

#[test]
fn tensor_products() {
    let x = kx();
    let y = AlgebraPresentation::from_strs("ky", Field::Rational, &[("y", 1)], &[]);
    let xy = tensor_algebra(&x, &y).unwrap();
    assert_eq!(compute_groebner(&xy, 6).unwrap().dims(), vec![1, 2, 3, 4, 5, 6, 7]);
    let empty = AlgebraPresentation::new("k", Field::Rational, crate::freealg::GeneratorSet::empty(), vec![]).unwrap();
    let same = tensor_algebra(&x, &empty).unwrap();
    assert_eq!(same.gens(), x.gens());
    let xx = tensor_algebra(&x, &x).unwrap();
    assert_eq!(xx.gens().names(), &["x", "x_2"]);
}

#[test]
fn module_file_round_trip() {
    let a = kxy();
    let text = "module left\nover kxy\nfree 0 1\nrel y | -1\nrel x^2 | 0\n";
    let m = ModulePresentation::parse(text, &a).unwrap();
    assert_eq!(m.relation_degrees(), vec![1, 2]);
    assert_eq!(ModulePresentation::parse(&m.to_text(), &a).unwrap(), m);
    let bad = ModulePresentation::parse("module left\nover kxy\nfree 0\nrel x*y + y\n", &a).unwrap_err();
    assert!(matches!(bad, crate::Error::Parse { line: 4, .. }));
}

#[test]
fn presented_dims_match_direct() {
    let a = kxy();
    let gd = compute_groebner(&a, 8).unwrap();
    let m = ModulePresentation::cyclic("M", &a, Side::Left, &["x^2", "x*y"]).unwrap();
    let pm = PresentedModule::new(&m, &gd, 8);
    // k[x,y]/(x^2, xy) has basis 1, x, y^n
    assert_eq!(graded_dims(&pm, 0, 6), vec![1, 2, 1, 1, 1, 1, 1]);
    let sh = ShiftedModule::new(Box::new(PresentedModule::new(&m, &gd, 8)), 2);
    assert_eq!(graded_dims(&sh, -2, 1), vec![1, 2, 1, 1]);
}
