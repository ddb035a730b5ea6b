use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use schubert_core::{
    build_complex, cohomology_closed, homology_integral, smith_normal_form, subsets,
    CoefficientRing, Direction, IntMatrix,
};

fn enumeration(c: &mut Criterion) {
    c.bench_function("subsets 20 choose 10", |b| {
        b.iter(|| subsets(black_box(20), 10).unwrap().count())
    });
}

fn closed_form(c: &mut Criterion) {
    let mut group = c.benchmark_group("closed form");
    group.sample_size(10);
    for (n, k) in [(12, 6), (16, 8), (20, 10)] {
        group.bench_with_input(
            BenchmarkId::from_parameter(format!("Gr_{k}({n})")),
            &(n, k),
            |b, &(n, k)| b.iter(|| cohomology_closed(n, k, CoefficientRing::Integers).unwrap()),
        );
    }
    group.finish();
}

fn complex_and_oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle");
    group.sample_size(10);
    for (n, k) in [(8, 4), (10, 5)] {
        group.bench_with_input(
            BenchmarkId::new("build", format!("Gr_{k}({n})")),
            &(n, k),
            |b, &(n, k)| b.iter(|| build_complex(n, k, Direction::Cohomological).unwrap()),
        );
        let cx = build_complex(n, k, Direction::Cohomological).unwrap();
        group.bench_with_input(
            BenchmarkId::new("homology", format!("Gr_{k}({n})")),
            &cx,
            |b, cx| b.iter(|| homology_integral(cx).unwrap()),
        );
    }
    group.finish();
}

fn snf(c: &mut Criterion) {
    // the largest differential of Gr_5(10)
    let cx = build_complex(10, 5, Direction::Cohomological).unwrap();
    let largest = cx
        .differentials()
        .iter()
        .max_by_key(|d| d.nrows() * d.ncols())
        .unwrap();
    let dense = IntMatrix::from(largest);
    c.bench_function("snf largest Gr_5(10) differential", |b| {
        b.iter(|| smith_normal_form(black_box(&dense)))
    });
}

criterion_group!(benches, enumeration, closed_form, complex_and_oracle, snf);
criterion_main!(benches);
