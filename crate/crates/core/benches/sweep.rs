use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use sgb::graph::{brute_force_star_decomposition, build_star_decomposition};
use sgb::group::CyclicGroupSpec;
use sgb::par::{self, Execution};
use sgb::report::{build_rows, ReportRequest};

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn oracle_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle_sweep_1_to_300");
    group.sample_size(10);
    for (name, mode) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| {
                par::with_execution(mode, || {
                    par::map_range(1..301, |n| {
                        let spec = CyclicGroupSpec::new(n).unwrap();
                        brute_force_star_decomposition(&spec).unwrap() == build_star_decomposition(&spec).unwrap()
                    })
                })
            })
        });
    }
    group.finish();
}

fn report_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("report_rows_2_to_5000");
    group.sample_size(10);
    let request = ReportRequest { max_order: Some(5000), ..Default::default() };
    for (name, mode) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| par::with_execution(mode, || build_rows(&request).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(benches, oracle_sweep, report_sweep);
criterion_main!(benches);
