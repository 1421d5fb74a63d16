use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use gradreg_bench::{downup_data, monomial_quotient, plane_data, trivial};
use gradreg_core::regularity::{check_as_regular, local_cohomology_degrees, torreg, Weight};
use gradreg_core::verify::downup;
use gradreg_core::{compute_groebner, minimal_free_resolution, Field};

fn groebner(c: &mut Criterion) {
    let a = downup(Field::Rational);
    c.bench_function("groebner downup dmax 12", |b| b.iter(|| compute_groebner(black_box(&a), 12).unwrap()));
}

fn resolution(c: &mut Criterion) {
    let gd = downup_data(12);
    let k = trivial(&gd);
    c.bench_function("resolve k over downup", |b| {
        b.iter(|| minimal_free_resolution(black_box(&k), &gd, 6, 12).unwrap())
    });

    for field in [Field::Rational, Field::prime(32003).unwrap()] {
        let gd = plane_data(field, 14);
        let m = monomial_quotient(&gd);
        c.bench_function(&format!("resolve monomial quotient over {}", field.name()), |b| {
            b.iter(|| minimal_free_resolution(black_box(&m), &gd, 4, 14).unwrap())
        });
    }
}

fn regularity(c: &mut Criterion) {
    let gd = plane_data(Field::Rational, 12);
    let m = monomial_quotient(&gd);
    let t = check_as_regular(&gd, 4, 12);
    c.bench_function("local cohomology of a monomial quotient", |b| {
        b.iter(|| local_cohomology_degrees(black_box(&m), &t, &gd, 4, 12).unwrap())
    });
    let (_, table) = minimal_free_resolution(&m, &gd, 4, 12).unwrap();
    let xi = Weight::frac(1, 2);
    c.bench_function("torreg from a table", |b| b.iter(|| torreg(black_box(&table), &xi)));
}

criterion_group!(benches, groebner, resolution, regularity);
criterion_main!(benches);
