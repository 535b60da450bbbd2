use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use dawg_bench::{fibonacci_text, random_text};
use dawg_core::maw::compute_maws;
use dawg_core::pipeline::{build, StructureKind};
use dawg_core::text::Text;

const SIZES: [usize; 3] = [10_000, 40_000, 160_000];

fn structures(c: &mut Criterion) {
    let mut group = c.benchmark_group("build");
    group.sample_size(10);
    for n in SIZES {
        let t = random_text(n, 256);
        group.throughput(Throughput::Elements(n as u64));
        for kind in StructureKind::ALL {
            group.bench_with_input(BenchmarkId::new(kind.name(), n), &t, |b, t| {
                b.iter(|| build(t, &[kind]).unwrap())
            });
        }
    }
    group.finish();
}

fn alphabets(c: &mut Criterion) {
    let n = 40_000;
    let mut group = c.benchmark_group("alphabet");
    group.sample_size(10);
    let inputs: [(&str, Text); 4] = [
        ("binary", random_text(n, 2)),
        ("bytes", random_text(n, 256)),
        ("linear", random_text(n, n as u64)),
        ("fibonacci", fibonacci_text(n)),
    ];
    for (label, t) in &inputs {
        group.bench_with_input(BenchmarkId::new("st+dawg", label), t, |b, t| {
            b.iter(|| build(t, &[StructureKind::Dawg]).unwrap())
        });
    }
    group.finish();
}

/// Absent words alone, the DAWG built once outside the loop.
fn absent_words(c: &mut Criterion) {
    let mut group = c.benchmark_group("maw");
    group.sample_size(10);
    for sigma in [2, 4, 20] {
        let t = random_text(100_000, sigma);
        let built = build(&t, &[StructureKind::Dawg]).unwrap();
        let d = &built.dawg.as_ref().unwrap().dawg;
        group.bench_function(BenchmarkId::from_parameter(sigma), |b| b.iter(|| compute_maws(d, &t).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, structures, alphabets, absent_words);
criterion_main!(benches);
