use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use spancom::graph::{AttachmentShape, Graph, UnicyclicGraph};
use spancom::simplicial::spanning_complex_with;
use spancom::trees::enumerate_spanning_trees_with;
use spancom::unicyclic::{h_closed, hilbert_closed};
use spancom::verify::{verify_sweep, VerifyOptions};
use spancom::{Exec, UnicyclicParams};

const STRATEGIES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn complete_graph(n: usize) -> Graph {
    let pairs: Vec<_> = (1..=n)
        .flat_map(|a| (a + 1..=n).map(move |b| (a, b)))
        .collect();
    Graph::new(n, &pairs).unwrap()
}

fn tree_enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_spanning_trees");
    group.sample_size(10);
    // K_6: 15 edges, 1296 trees.
    let k6 = complete_graph(6);
    for (name, exec) in STRATEGIES {
        group.bench_with_input(BenchmarkId::new(name, "K6"), &k6, |b, g| {
            b.iter(|| enumerate_spanning_trees_with(g, exec).unwrap())
        });
    }
    group.finish();
}

fn face_enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("f_vector");
    group.sample_size(10);
    let u = UnicyclicGraph::with_shape(18, 9, AttachmentShape::Chain).unwrap();
    let complex = spanning_complex_with(u.base(), Exec::Sequential).unwrap();
    for (name, exec) in STRATEGIES {
        group.bench_function(BenchmarkId::new(name, "U(18,9)"), |b| {
            b.iter(|| complex.f_vector_with(exec).unwrap())
        });
    }
    group.finish();
}

fn verification_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_sweep");
    group.sample_size(10);
    for (name, exec) in STRATEGIES {
        let opts = VerifyOptions {
            n_max: 8,
            exec,
            ..Default::default()
        };
        group.bench_function(BenchmarkId::new(name, "n_max=8"), |b| b.iter(|| verify_sweep(&opts)));
    }
    group.finish();
}

fn closed_forms(c: &mut Criterion) {
    let p = UnicyclicParams::new(200, 100).unwrap();
    c.bench_function("h_closed(200,100)", |b| b.iter(|| h_closed(p)));
    c.bench_function("hilbert_closed(200,100)", |b| b.iter(|| hilbert_closed(p)));
}

criterion_group!(benches, tree_enumeration, face_enumeration, verification_sweep, closed_forms);
criterion_main!(benches);
