use std::collections::HashMap;

use proptest::prelude::*;

use gradreg_core::exactlin::{kernel_basis, row_reduce, Echelon};
use gradreg_core::freealg::reduce;
use gradreg_core::modpres::{graded_dims, shift_module, truncate_module, PresentedModule};
use gradreg_core::{
    compute_groebner, minimal_free_resolution, AlgebraPresentation, Field, GeneratorSet, ModulePresentation,
    NcPolynomial, Side, SparseMatrix, SparseVec, Word,
};

fn fields() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::Rational), Just(Field::prime(7).unwrap()), Just(Field::prime(32003).unwrap())]
}

fn matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..6, 1usize..7).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-3i64..=3, c), r))
}

fn all_words(gens: &GeneratorSet, n: u32) -> Vec<Word> {
    let mut by_deg: Vec<Vec<Word>> = vec![vec![Word::empty()]];
    for m in 1..=n {
        let mut ws = Vec::new();
        for g in 0..gens.len() {
            let d = gens.degree(g);
            if d <= m {
                for w in &by_deg[(m - d) as usize] {
                    ws.push(w.concat(&gens.letter(g)));
                }
            }
        }
        by_deg.push(ws);
    }
    by_deg.pop().unwrap()
}

/// Words of degree `n` minus the rank of every `u·r·v` of degree `n`.
fn brute_force_dim(a: &AlgebraPresentation, n: u32) -> usize {
    let gens = a.gens();
    let words = all_words(gens, n);
    let pos: HashMap<&Word, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut ech = Echelon::new(words.len(), a.field());
    for r in a.relations() {
        let d = r.degree().unwrap();
        if d > n {
            continue;
        }
        for lu in 0..=(n - d) {
            for u in all_words(gens, lu) {
                for v in all_words(gens, n - d - lu) {
                    let p = r.sandwich(&u, &v);
                    ech.insert(&SparseVec::from_pairs(p.terms().map(|(w, c)| (pos[w], c.clone()))));
                }
            }
        }
    }
    words.len() - ech.rank()
}

fn homogeneous(gens: &GeneratorSet, field: Field, n: u32, coeffs: &[i64]) -> NcPolynomial {
    let mut p = NcPolynomial::zero();
    for (w, &c) in all_words(gens, n).into_iter().zip(coeffs.iter().cycle()) {
        if c != 0 {
            p.add_term(w, field.from_i64(c));
        }
    }
    p
}

fn two_gens() -> GeneratorSet {
    GeneratorSet::new(vec!["x".into(), "y".into()], vec![1, 1]).unwrap()
}

fn kxy(field: Field) -> AlgebraPresentation {
    AlgebraPresentation::from_strs("kxy", field, &[("x", 1), ("y", 1)], &["y*x - x*y"])
}

/// Monomials `x^a y^b` with `1 ≤ a + b ≤ 3`, selected by the bits of `mask`.
fn monomials(mask: u16) -> Vec<String> {
    let mut out = Vec::new();
    let mut bit = 0;
    for d in 1..=3 {
        for a in 0..=d {
            if mask & (1 << bit) != 0 {
                let b = d - a;
                let mut parts = Vec::new();
                if a > 0 {
                    parts.push(format!("x^{a}"));
                }
                if b > 0 {
                    parts.push(format!("y^{b}"));
                }
                out.push(parts.join("*"));
            }
            bit += 1;
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rank_plus_nullity(rows in matrix(), field in fields()) {
        let m = SparseMatrix::from_dense(field, &rows);
        let r = row_reduce(&m, field);
        let ker = kernel_basis(&m, field);
        prop_assert_eq!(r.rank + ker.len(), m.cols());
        for v in &ker {
            prop_assert!(m.apply(v).is_zero());
        }
    }

    #[test]
    fn row_reduce_is_idempotent_and_deterministic(rows in matrix(), field in fields()) {
        let m = SparseMatrix::from_dense(field, &rows);
        let once = row_reduce(&m, field);
        let twice = row_reduce(&once.reduced, field);
        prop_assert_eq!(&once.reduced, &twice.reduced);
        prop_assert_eq!(once.reduced, row_reduce(&m, field).reduced);
    }

    #[test]
    fn reduction_is_idempotent_and_keeps_degree(n in 1u32..6, coeffs in prop::collection::vec(-2i64..=2, 1..12)) {
        let a = AlgebraPresentation::from_strs(
            "downup", Field::Rational, &[("x", 1), ("y", 1)], &["x^2*y - y*x^2", "x*y^2 - y^2*x"],
        );
        let gd = compute_groebner(&a, 6).unwrap();
        let f = homogeneous(a.gens(), a.field(), n, &coeffs);
        let once = reduce(a.gens(), &f, gd.gb());
        prop_assert_eq!(&reduce(a.gens(), &once, gd.gb()), &once);
        if !once.is_zero() {
            prop_assert_eq!(once.homogeneous_degree(), Some(n));
        }
    }

    #[test]
    fn dims_match_brute_force(
        c1 in prop::collection::vec(-3i64..=3, 4),
        c2 in prop::collection::vec(-3i64..=3, 8),
        cubic in any::<bool>(),
    ) {
        let field = Field::prime(101).unwrap();
        let gens = two_gens();
        let mut rels = vec![homogeneous(&gens, field, 2, &c1)];
        if cubic {
            rels.push(homogeneous(&gens, field, 3, &c2));
        }
        rels.retain(|r| !r.is_zero());
        let a = AlgebraPresentation::new("random", field, gens, rels).unwrap();
        let gd = compute_groebner(&a, 5).unwrap();
        for n in 0..=5u32 {
            prop_assert_eq!(gd.dim(n as i64), brute_force_dim(&a, n), "degree {}", n);
        }
    }

    #[test]
    fn shifts_compose(a in -6i64..6, b in -6i64..6, mask in 1u16..1024) {
        let alg = kxy(Field::Rational);
        let m = ModulePresentation::cyclic("M", &alg, Side::Left, &monomials(mask).iter().map(String::as_str).collect::<Vec<_>>()).unwrap();
        prop_assert_eq!(shift_module(&shift_module(&m, a), b), shift_module(&m, a + b));
    }

    #[test]
    fn truncation_keeps_dimensions(s in 0i64..4, mask in 1u16..1024) {
        let alg = kxy(Field::Rational);
        let gd = compute_groebner(&alg, 10).unwrap();
        let gens = monomials(mask);
        let m = ModulePresentation::cyclic("M", &alg, Side::Left, &gens.iter().map(String::as_str).collect::<Vec<_>>()).unwrap();
        let t = truncate_module(&m, s, &gd).unwrap();
        let full = graded_dims(&PresentedModule::new(&m, &gd, 8), 0, 8);
        let cut = graded_dims(&PresentedModule::new(&t, &gd, 8), 0, 8);
        for n in 0..=8usize {
            let want = if (n as i64) < s { 0 } else { full[n] };
            prop_assert_eq!(cut[n], want, "degree {}", n);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn resolutions_are_minimal_complexes(mask in 1u16..1024, field in fields()) {
        let alg = kxy(field);
        let gd = compute_groebner(&alg, 10).unwrap();
        let gens = monomials(mask);
        let m = ModulePresentation::cyclic("M", &alg, Side::Left, &gens.iter().map(String::as_str).collect::<Vec<_>>()).unwrap();
        let (f, b) = minimal_free_resolution(&m, &gd, 4, 10).unwrap();
        prop_assert!(f.check_dd(&gd));
        prop_assert!(f.is_minimal());
        let geds: Vec<i64> = b.indices().iter().map(|&i| b.ged(i).unwrap()).collect();
        prop_assert!(geds.windows(2).all(|w| w[1] > w[0]));
        prop_assert!(b.max_index() <= Some(2));
        if b.terminated_at().is_some() {
            let module = PresentedModule::new(&m, &gd, 10);
            let dims = graded_dims(&module, 0, 10);
            for n in 0..=10i64 {
                let alt: i64 = b
                    .entries()
                    .map(|(i, j, beta)| (1 - 2 * (i % 2)) * beta as i64 * gd.dim(n - j) as i64)
                    .sum();
                prop_assert_eq!(alt, dims[n as usize] as i64, "degree {}", n);
            }
        }
    }
}
