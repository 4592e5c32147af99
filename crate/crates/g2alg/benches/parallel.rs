//! Sequential vs. data-parallel throughput for the batch operations that
//! dominate verification time: orbit classification of random maps and
//! the sampled identity loops. Run with `cargo bench` (parallel feature
//! on by default) and `cargo bench --no-default-features` to compare the
//! sequential baseline in isolation.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use g2alg::exactalg::Basis;
use g2alg::multidegree::{GradedIdeal, TermOrder};
use g2alg::orbits::{coordinate_weights, cubic_vars, minor_ideal_generators};
use g2alg::verify::sampling;

fn classification_batches(c: &mut Criterion) {
    let mut group = c.benchmark_group("classify-batch");
    for &size in &[200usize, 1000, 4000] {
        let maps = sampling::random_maps(size, 42);
        group.bench_with_input(BenchmarkId::new("sequential", size), &maps, |b, maps| {
            b.iter(|| sampling::classify_batch_seq(maps));
        });
        #[cfg(feature = "parallel")]
        group.bench_with_input(BenchmarkId::new("parallel", size), &maps, |b, maps| {
            b.iter(|| sampling::classify_batch_par(maps));
        });
    }
    group.finish();
}

fn sampled_identity_loops(c: &mut Criterion) {
    let mut group = c.benchmark_group("sampled-norm-identities");
    let body = |_i: usize, rng: &mut rand_chacha::ChaCha8Rng| -> Result<(), String> {
        let u = sampling::random_octonion(rng);
        let v = sampling::random_octonion(rng);
        if u.multiply(&v).norm() == u.norm() * v.norm() {
            Ok(())
        } else {
            Err("norm not multiplicative".to_string())
        }
    };
    for &size in &[200usize, 1000] {
        group.bench_with_input(BenchmarkId::new("sequential", size), &size, |b, &size| {
            b.iter(|| sampling::for_each_sample_seq(size, 42, &body).unwrap());
        });
        #[cfg(feature = "parallel")]
        group.bench_with_input(BenchmarkId::new("parallel", size), &size, |b, &size| {
            b.iter(|| sampling::for_each_sample_par(size, 42, &body).unwrap());
        });
    }
    group.finish();
}

fn groebner_multidegree(c: &mut Criterion) {
    let weights: Vec<(&str, g2alg::exactalg::WeightVector)> = coordinate_weights()
        .into_iter()
        .filter(|(n, _)| *n != "z")
        .collect();
    let ideal = GradedIdeal::new(minor_ideal_generators(), &weights).expect("graded ideal");
    let vars = cubic_vars();
    c.bench_function("multidegree-minor-ideal-lex", |b| {
        let order = TermOrder::lex(&vars, &["a", "b", "c", "d"]).expect("order");
        b.iter(|| ideal.multidegree(&order, Basis::Alpha).expect("multidegree"));
    });
}

criterion_group!(
    benches,
    classification_batches,
    sampled_identity_loops,
    groebner_multidegree
);
criterion_main!(benches);
