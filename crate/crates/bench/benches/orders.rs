use criterion::{black_box, criterion_group, criterion_main, Criterion};
use qhorder_core::brauer::{all_diagrams, compose};
use qhorder_core::perm::{automorphism_group, builtin_group};
use qhorder_core::{build_brauer_order, build_order, character_table, BigRational, ObjectList};

fn biset(c: &mut Criterion) {
    let objs = ObjectList::s4_family();
    c.bench_function("s4 family order", |b| b.iter(|| build_order(black_box(&objs)).unwrap()));
    c.bench_function("s4 family catalog load", |b| b.iter(ObjectList::s4_family));
    let aut = automorphism_group(&builtin_group("S4").unwrap()).group;
    c.bench_function("character table of Aut(S4)", |b| b.iter(|| character_table(black_box(&aut)).unwrap()));
}

fn brauer(c: &mut Criterion) {
    let one = BigRational::from_integer(1.into());
    c.bench_function("brauer order n=6", |b| b.iter(|| build_brauer_order(black_box(6), &one).unwrap()));
    let ds = all_diagrams(4);
    c.bench_function("compose all pairs n=4", |b| {
        b.iter(|| {
            let mut loops = 0;
            for x in &ds {
                for y in &ds {
                    loops += compose(x, y).cycles;
                }
            }
            loops
        })
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = biset, brauer
}
criterion_main!(benches);
