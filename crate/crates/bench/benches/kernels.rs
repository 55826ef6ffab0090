use criterion::{criterion_group, criterion_main, Criterion};
use distres_core::{are_isomorphic, automorphism_orbits, named, residual, VertexSet};

fn bench_kernels(c: &mut Criterion) {
    let gray = named("gray", &[]).unwrap();
    let ljubljana = named("ljubljana", &[]).unwrap();
    let clebsch = named("clebsch", &[]).unwrap();

    c.bench_function("orbits/gray", |b| b.iter(|| automorphism_orbits(&gray)));
    c.bench_function("orbits/ljubljana", |b| {
        b.iter(|| automorphism_orbits(&ljubljana))
    });
    c.bench_function("iso/clebsch-relabelled", |b| {
        let perm: Vec<usize> = (0..16).map(|i| (i * 7 + 3) % 16).collect();
        let other = clebsch.permuted(&perm);
        b.iter(|| are_isomorphic(&clebsch, &other))
    });
    c.bench_function("residual/ljubljana-all-vertices", |b| {
        b.iter(|| {
            (0..ljubljana.order())
                .map(|v| {
                    residual(&ljubljana, &VertexSet::single(v, 112).unwrap())
                        .unwrap()
                        .d_r
                })
                .sum::<usize>()
        })
    });
}

criterion_group!(benches, bench_kernels);
criterion_main!(benches);
