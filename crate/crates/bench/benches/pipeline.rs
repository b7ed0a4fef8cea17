use criterion::{criterion_group, criterion_main, Criterion};
use jumploci_bench::{cyclic4, flag, poly};
use jumploci_core::groebner::Ideal;
use jumploci_core::jumploci::{realize, Model};
use jumploci_core::resolution::{resolve, ModuleInput};
use jumploci_core::{Field, PolyRing};

fn groebner(c: &mut Criterion) {
    c.bench_function("groebner cyclic4", |b| b.iter(|| cyclic4().groebner_basis().len()));
}

fn resolution(c: &mut Criterion) {
    let (_, input) = flag();
    let ModuleInput::Presentation(p) = input else { unreachable!() };
    c.bench_function("resolve flag over A", |b| b.iter(|| resolve(&p, &[], None).unwrap().total_rank()));
}

fn report(c: &mut Criterion) {
    let (ring, input) = flag();
    c.bench_function("flag report", |b| {
        b.iter(|| Model::build(&ring, &input).unwrap().report(0).unwrap().jump_numbers)
    });
}

fn realization(c: &mut Criterion) {
    let s = PolyRing::operators(Field::Prime(101), &[3, 3, 3]);
    let chain = vec![
        Ideal::zero(&s),
        Ideal::new(&s, vec![poly(&s, "chi1*chi2")]),
        Ideal::new(&s, vec![poly(&s, "chi1"), poly(&s, "chi2*chi3")]),
        Ideal::unit(&s),
    ];
    c.bench_function("realize three-step chain", |b| b.iter(|| realize(&chain, 3).unwrap().plateaus));
}

criterion_group!(benches, groebner, resolution, report, realization);
criterion_main!(benches);
