use crate::exactlin::Field;
use crate::gbasis::{compute_groebner, AlgebraPresentation, GroebnerData, Side};
use crate::modpres::{ModulePresentation, PresentedModule};

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

fn resolve_k(a: &AlgebraPresentation, side: Side, dmax: u32, hmax: usize) -> (GroebnerData, FreeComplex, BettiTable) {
    let gd = compute_groebner(a, dmax).unwrap();
    let k = ModulePresentation::trivial(a, side);
    let (f, b) = minimal_free_resolution(&k, &gd, hmax, dmax as i64).unwrap();
    (gd, f, b)
}

#[test]
fn downup_trivial_module() {
    for side in [Side::Left, Side::Right] {
        let (gd, f, b) = resolve_k(&downup(), side, 10, 6);
        assert_eq!(b.terminated_at(), Some(3));
        assert!(b.is_exact());
        let t: Vec<i64> = (0..=3).map(|i| b.t(i).unwrap()).collect();
        assert_eq!(t, vec![0, 1, 3, 4]);
        let ranks: Vec<usize> = (0..=3).map(|i| b.rank(i)).collect();
        assert_eq!(ranks, vec![1, 2, 2, 1]);
        assert!(f.is_minimal());
        assert!(f.check_dd(&gd));
        assert_eq!(
            tor_table_of_minimal_complex(&f).unwrap().entries().collect::<Vec<_>>(),
            b.entries().collect::<Vec<_>>()
        );
    }
}

#[test]
fn polynomial_ring_in_one_variable() {
    let a = AlgebraPresentation::from_strs("kx", Field::Rational, &[("x", 1)], &[]);
    let (_, _, b) = resolve_k(&a, Side::Left, 8, 4);
    assert_eq!(b.entries().collect::<Vec<_>>(), vec![(0, 0, 1), (1, 1, 1)]);
    assert_eq!(b.terminated_at(), Some(1));
}

#[test]
fn cube_root_periodic() {
    let a = AlgebraPresentation::from_strs("x3", Field::Rational, &[("x", 1)], &["x^3"]);
    let (gd, f, b) = resolve_k(&a, Side::Left, 12, 5);
    assert_eq!(b.terminated_at(), None);
    let t: Vec<i64> = (0..=5).map(|i| b.t(i).unwrap()).collect();
    assert_eq!(t, vec![0, 1, 3, 4, 6, 7]);
    assert!(f.check_dd(&gd));
}

#[test]
fn koszul_linear() {
    let (_, _, b) = resolve_k(&kxy(), Side::Left, 8, 4);
    assert!(b.entries().all(|(i, j, _)| i == j));
    assert_eq!(b.entries().map(|e| e.2).collect::<Vec<_>>(), vec![1, 2, 1]);
}

#[test]
fn dual_of_koszul_complex() {
    let (gd, f, _) = resolve_k(&kxy(), Side::Left, 8, 4);
    let d = dualize(&f);
    assert_eq!(d.side(), Side::Right);
    assert_eq!(d.positions(), 0..=2);
    assert!(d.check_dd(&gd));
    let h = complex_cohomology(&d, &gd, -2, 5).unwrap();
    assert_eq!(h.entries().collect::<Vec<_>>(), vec![(2, -2, 1)]);
    assert_eq!(h.ged(2), DegreeBound { value: Some(-2), certified: true });
    let dd = dualize(&d);
    assert_eq!(dd.terms(), f.terms());
}

#[test]
fn ext_of_cyclic_quotient() {
    let a = kxy();
    let gd = compute_groebner(&a, 8).unwrap();
    let m = ModulePresentation::cyclic("M", &a, Side::Left, &["x"]).unwrap();
    let (f, b) = minimal_free_resolution(&m, &gd, 4, 8).unwrap();
    assert_eq!(b.entries().collect::<Vec<_>>(), vec![(0, 0, 1), (1, 1, 1)]);
    let h = complex_cohomology(&dualize(&f), &gd, -1, 6).unwrap();
    assert_eq!(h.ged(0).value, None);
    assert_eq!(h.ged(1), DegreeBound { value: Some(-1), certified: true });
    let dims: Vec<usize> = (-1..=6).map(|n| h.dim(1, n)).collect();
    assert_eq!(dims, vec![1; 8]);
}

#[test]
fn identity_slice_is_exact() {
    let a = kxy();
    let gd = compute_groebner(&a, 4).unwrap();
    let one = crate::freealg::NcPolynomial::constant(Field::Rational.one());
    let fm = crate::modpres::FreeModule::new(vec![0]);
    let c = FreeComplex::new(&a, Side::Left, 0, vec![fm.clone(), fm], vec![vec![vec![one]]]).unwrap();
    assert!(complex_cohomology(&c, &gd, 0, 4).unwrap().is_zero());
}

#[test]
fn euler_characteristic_on_corpus() {
    let algebras = [downup(), kxy()];
    for a in &algebras {
        let gd = compute_groebner(a, 9).unwrap();
        let mods = [
            ModulePresentation::trivial(a, Side::Left),
            ModulePresentation::cyclic("M", a, Side::Left, &["x^2"]).unwrap(),
            ModulePresentation::cyclic("N", a, Side::Left, &["x", "y^2"]).unwrap(),
        ];
        for m in &mods {
            let (f, b) = minimal_free_resolution(m, &gd, 6, 9).unwrap();
            let module = PresentedModule::new(m, &gd, 9);
            for n in 0..=9 {
                let alt: i64 =
                    b.entries().map(|(i, j, beta)| (1 - 2 * (i % 2)) * beta as i64 * gd.dim(n - j) as i64).sum();
                if b.terminated_at().is_some() {
                    assert_eq!(alt, crate::modpres::GradedModule::dim(&module, n) as i64);
                }
            }
            let geds: Vec<i64> = b.indices().iter().map(|&i| b.ged(i).unwrap()).collect();
            assert!(geds.windows(2).all(|w| w[1] > w[0]));
            assert!(f.check_dd(&gd));
        }
    }
}

#[test]
fn single_module_dual() {
    let a = kxy();
    let c = FreeComplex::single(&a, Side::Left, 0, crate::modpres::FreeModule::new(vec![3]));
    let d = dualize(&c);
    assert_eq!(d.term(0).shifts(), &[-3]);
    let t = tor_table_of_minimal_complex(&c).unwrap();
    assert_eq!(t.entries().collect::<Vec<_>>(), vec![(0, 3, 1)]);
    assert!(tor_table_of_minimal_complex(&FreeComplex::empty(&a, Side::Left)).unwrap().is_empty());
}
