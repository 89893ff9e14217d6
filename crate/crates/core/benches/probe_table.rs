use std::hint::black_box;
use std::path::PathBuf;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use fivemove_core::bracket::Strategy;
use fivemove_core::link::parse_dt_table;
use fivemove_core::probe::{probe_table, ProbeOptions};

fn table(c: &mut Criterion) {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data/knots10n.dt");
    let codes = parse_dt_table(&std::fs::read_to_string(path).unwrap()).unwrap();
    let mut group = c.benchmark_group("probe_table");
    group.sample_size(10);
    for refine in [false, true] {
        let stage = if refine { "jones+kauffman" } else { "jones" };
        for (label, strategy) in [
            ("sequential", Strategy::Sequential),
            ("parallel", Strategy::Parallel),
        ] {
            let opts = ProbeOptions {
                refine,
                strategy,
                ..ProbeOptions::default()
            };
            group.bench_with_input(BenchmarkId::new(label, stage), &opts, |b, opts| {
                b.iter(|| probe_table(black_box(&codes), opts))
            });
        }
    }
    group.finish();
}

criterion_group!(benches, table);
criterion_main!(benches);
