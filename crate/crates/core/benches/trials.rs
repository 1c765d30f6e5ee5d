use criterion::{criterion_group, criterion_main, Criterion};
use osdrazin::drazin::{drazin_inverse, verify_drazin_side};
use osdrazin::gen::{quad, trial_rng, QuadFamily};
use osdrazin::par::map_trials_sequential;
use osdrazin::transfer::drazin_transfer;
use osdrazin::{ScalarKind, Side};

const TRIALS: u64 = 64;

fn drazin_trial(t: u64) -> bool {
    let q = quad(&mut trial_rng(1, t), QuadFamily::ALL[(t % 3) as usize], 3, ScalarKind::Rational);
    let (x, k) = drazin_inverse(&q.alpha()).unwrap();
    let y = drazin_transfer(Side::Left, &q, &x, k).unwrap();
    verify_drazin_side(Side::Left, &q.beta(), &y.candidate, k)
}

fn bench(c: &mut Criterion) {
    let mut group = c.benchmark_group("drazin-transfer-trials");
    group.sample_size(10);
    group.bench_function("sequential", |b| b.iter(|| map_trials_sequential(TRIALS, drazin_trial)));
    #[cfg(feature = "parallel")]
    group.bench_function("parallel", |b| b.iter(|| osdrazin::par::map_trials_parallel(TRIALS, drazin_trial)));
    group.finish();
}

criterion_group!(benches, bench);
criterion_main!(benches);
