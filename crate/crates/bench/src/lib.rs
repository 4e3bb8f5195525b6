//! Timing of the hot kernels: clique enumeration, crossing operations,
//! Sturm isolation, interlacing tests and the partition counters.

use std::hint::black_box;

use antiprism_core::enumeration::{proper_partial_counts, DEFAULT_ENUM_CAP};
use antiprism_core::polynomials::families::{h_a, theta_a};
use antiprism_core::polynomials::TransformTable;
use antiprism_core::realroot::{interlaces, isolate, verify, Claim};
use antiprism_core::subdivision::{antiprism_by_crossings, antiprism_triangulation};
use antiprism_core::SimplicialComplex;
use criterion::{BenchmarkId, Criterion};

pub fn construction(c: &mut Criterion) {
    let mut g = c.benchmark_group("construction");
    g.sample_size(10);
    for n in [3, 4, 5] {
        let s = SimplicialComplex::simplex(n);
        g.bench_with_input(BenchmarkId::new("cliques", n), &s, |b, s| {
            b.iter(|| antiprism_triangulation(black_box(s)))
        });
        g.bench_with_input(BenchmarkId::new("crossings", n), &s, |b, s| {
            b.iter(|| antiprism_by_crossings(black_box(s)).unwrap())
        });
    }
    g.finish();
}

pub fn roots(c: &mut Criterion) {
    let mut g = c.benchmark_group("roots");
    for n in [10, 20] {
        let p = h_a(n);
        g.bench_with_input(BenchmarkId::new("isolate_h_a", n), &p, |b, p| {
            b.iter(|| isolate(black_box(p)).unwrap())
        });
        let t = theta_a(n);
        let q = h_a(n - 1);
        g.bench_with_input(BenchmarkId::new("interlace_theta", n), &(q, t), |b, (q, t)| {
            b.iter(|| interlaces(black_box(q), black_box(t)).unwrap())
        });
    }
    g.sample_size(10);
    g.bench_function("verify_thmA_1_to_12", |b| {
        b.iter(|| verify(Claim::ThmA, 1, 12).unwrap())
    });
    g.finish();
}

pub fn counting(c: &mut Criterion) {
    let mut g = c.benchmark_group("counting");
    g.sample_size(10);
    g.bench_function("proper_partial_6", |b| {
        b.iter(|| proper_partial_counts(black_box(6), DEFAULT_ENUM_CAP))
    });
    g.bench_function("transform_table_20", |b| b.iter(|| TransformTable::new(black_box(20))));
    g.finish();
}

pub fn benchmarks(c: &mut Criterion) {
    construction(c);
    roots(c);
    counting(c);
}
