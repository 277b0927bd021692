use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use mvcomp::completion::verify_main_theorem;
use mvcomp::ideals::all_ideals;
use mvcomp::lattice::{dedekind_macneille, Poset};
use mvcomp::FiniteMvAlgebra;

const SHAPES: &[&[usize]] = &[&[6], &[2, 3], &[3, 3, 2], &[2, 2, 2, 2], &[4, 5, 3]];

fn label(shape: &[usize]) -> String {
    shape.iter().map(|n| n.to_string()).collect::<Vec<_>>().join("x")
}

fn ideals(c: &mut Criterion) {
    let mut group = c.benchmark_group("all_ideals");
    for shape in SHAPES {
        let a = FiniteMvAlgebra::product(shape).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(label(shape)), &a, |b, a| {
            b.iter(|| all_ideals(black_box(a)).unwrap())
        });
    }
    group.finish();
}

fn main_theorem(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_main_theorem");
    group.sample_size(20);
    for shape in SHAPES {
        let a = FiniteMvAlgebra::product(shape).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(label(shape)), &a, |b, a| {
            b.iter(|| verify_main_theorem(black_box(a)).unwrap())
        });
    }
    group.finish();
}

fn cuts(c: &mut Criterion) {
    let mut group = c.benchmark_group("dedekind_macneille");
    for shape in SHAPES {
        let poset = Poset::of_algebra(&FiniteMvAlgebra::product(shape).unwrap());
        group.bench_with_input(BenchmarkId::from_parameter(label(shape)), &poset, |b, p| {
            b.iter(|| dedekind_macneille(black_box(p)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, ideals, main_theorem, cuts);
criterion_main!(benches);
