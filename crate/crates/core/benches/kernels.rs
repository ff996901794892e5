use balprod::classical::{hamming_7_4, LinearCode};
use balprod::f2la::F2Matrix;
use balprod::graphs::klein_quartic_graph;
use balprod::par;
use balprod::products::{circle_balanced_product, cyclic_cayley_instance};
use balprod::quantum::{dressed_distance, subsystem_from_split, PauliType, SearchOptions, SubsystemCssCode};
use balprod::tanner::{build_tanner, measured_beta};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn z45_code() -> SubsystemCssCode {
    let local = LinearCode::from_check(F2Matrix::from_rows(&[[1u8, 1, 1, 1]]));
    let (t, act) = cyclic_cayley_instance(45, &[1, 44, 7, 38], 5, &local).unwrap();
    let cp = circle_balanced_product(&t, &act).unwrap();
    subsystem_from_split(cp.total(), &cp.homology_split().unwrap()).unwrap()
}

fn modes() -> [(&'static str, bool); 2] {
    [("sequential", true), ("parallel", false)]
}

fn distance_search(c: &mut Criterion) {
    let code = z45_code();
    let opts = SearchOptions { samples: 0, ..SearchOptions::default() };
    let mut g = c.benchmark_group("dressed_distance_z45");
    g.sample_size(10);
    for (name, seq) in modes() {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            par::set_sequential(seq);
            b.iter(|| dressed_distance(&code, PauliType::X, &opts).unwrap())
        });
    }
    g.finish();
    par::set_sequential(false);
}

fn expansion_scan(c: &mut Criterion) {
    let (_, x) = klein_quartic_graph().unwrap();
    let d = build_tanner(&x, &hamming_7_4()).unwrap().boundary();
    let mut g = c.benchmark_group("measured_beta_klein_w3");
    g.sample_size(10);
    for (name, seq) in modes() {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            par::set_sequential(seq);
            b.iter(|| measured_beta(&d, 0.04, 3).unwrap())
        });
    }
    g.finish();
    par::set_sequential(false);
}

criterion_group!(benches, distance_search, expansion_scan);
criterion_main!(benches);
