use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use plane_ag::code::Code;
use plane_ag::decoder::decode;
use plane_ag::sim::{simulate, Execution, TrialInput};

fn single_decode(c: &mut Criterion) {
    let mut group = c.benchmark_group("decode");
    for (q, u) in [(3, 16), (4, 30)] {
        let code = Code::hermitian(q, u).unwrap();
        let v = TrialInput::draw(&code, 1, 0, code.correction_radius()).received(&code);
        group.bench_with_input(
            BenchmarkId::new("hermitian", format!("q{q}_u{u}")),
            &v,
            |b, v| b.iter(|| decode(&code, black_box(v)).unwrap()),
        );
    }
    group.finish();
}

// Same trials, same report; only the scheduling differs.
fn simulate_schedules(c: &mut Criterion) {
    let code = Code::hermitian(3, 16).unwrap();
    let mut group = c.benchmark_group("simulate_q3_u16_t5");
    group.sample_size(10);
    for (name, exec) in [
        ("sequential", Execution::Sequential),
        ("parallel", Execution::Parallel),
    ] {
        group.bench_function(BenchmarkId::new(name, 64), |b| {
            b.iter(|| simulate(&code, black_box(7), 64, 5, exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, single_decode, simulate_schedules);
criterion_main!(benches);
