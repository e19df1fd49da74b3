use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::hint::black_box;

use seqrec::code::verify_seq_recovery_with;
use seqrec::construct::{run_pipeline, BaseSpec, PipelineConfig};
use seqrec::graph::girth_with;
use seqrec::graph::random::random_regular;
use seqrec::group::FiniteGroup;
use seqrec::lift::greedy_voltage_lift_with;
use seqrec::Exec;

const POLICIES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn girth(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let g = random_regular(2000, 3, &mut rng, 100).unwrap();
    let mut group = c.benchmark_group("girth");
    for (name, exec) in POLICIES {
        group.bench_with_input(BenchmarkId::new(name, g.order()), &g, |b, g| {
            b.iter(|| girth_with(black_box(g), exec))
        });
    }
    group.finish();
}

fn verify(c: &mut Criterion) {
    let mut cfg = PipelineConfig::new(3, 4);
    cfg.base = BaseSpec::Petersen;
    cfg.budget = 0;
    let code = run_pipeline(&cfg).unwrap().code;
    let mut group = c.benchmark_group("verify");
    group.sample_size(10);
    for (name, exec) in POLICIES {
        group.bench_with_input(BenchmarkId::new(name, code.n()), &code, |b, code| {
            b.iter(|| verify_seq_recovery_with(black_box(code), 4, 50_000, 0, exec))
        });
    }
    group.finish();
}

fn greedy(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    // even girth, so the greedy lift applies
    let g = loop {
        let g = random_regular(60, 3, &mut rng, 100).unwrap();
        let dc = seqrec::graph::bipartite_double_cover(&g);
        if dc.girth().finite().is_some_and(|k| k % 2 == 0) {
            break dc;
        }
    };
    let k = g.girth().finite().unwrap();
    let h = FiniteGroup::cyclic(2usize.pow(k as u32 / 2) + 1);
    let mut group = c.benchmark_group("greedy_lift");
    group.sample_size(10);
    for (name, exec) in POLICIES {
        group.bench_with_input(BenchmarkId::new(name, g.order()), &g, |b, g| {
            b.iter(|| greedy_voltage_lift_with(black_box(g), &h, exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, girth, verify, greedy);
criterion_main!(benches);
