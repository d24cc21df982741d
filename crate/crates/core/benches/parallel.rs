use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use curvecodes::curves::{bch_family_census_with, melas_family_census_with};
use curvecodes::cyclic::{build_named_code, dual_trace_distribution_with, enumerate_weight_distribution_with, Family};
use curvecodes::distributions::melas_distribution_from_traces;
use curvecodes::gf2m::make_field;
use curvecodes::hecke::hecke_trace_table;
use curvecodes::Execution;

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn enumeration(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate");
    g.sample_size(10);
    for (family, m) in [(Family::Hamming, 5), (Family::Bch2, 5), (Family::Melas, 5)] {
        let code = build_named_code(family, m).unwrap();
        for (name, exec) in MODES {
            g.bench_with_input(BenchmarkId::new(name, format!("{family}-{m}")), &code, |b, code| {
                b.iter(|| enumerate_weight_distribution_with(code, 1 << 30, exec).unwrap())
            });
        }
    }
    g.finish();
}

fn trace_duals(c: &mut Criterion) {
    let mut g = c.benchmark_group("dual-trace");
    g.sample_size(10);
    for family in [Family::Bch2, Family::Melas] {
        for (name, exec) in MODES {
            g.bench_function(BenchmarkId::new(name, format!("{family}-7")), |b| {
                b.iter(|| dual_trace_distribution_with(family, 7, exec).unwrap())
            });
        }
    }
    g.finish();
}

fn censuses(c: &mut Criterion) {
    let mut g = c.benchmark_group("census");
    g.sample_size(10);
    let ctx = make_field(7).unwrap();
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::new(name, "bch2-7"), |b| b.iter(|| bch_family_census_with(&ctx, exec)));
    }
    let ctx = make_field(12).unwrap();
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::new(name, "melas-12"), |b| b.iter(|| melas_family_census_with(&ctx, exec)));
    }
    g.finish();
}

fn hecke_formula(c: &mut Criterion) {
    let mut g = c.benchmark_group("melas-hecke");
    g.sample_size(10);
    let m = 8;
    let traces = hecke_trace_table(m, (1 << m) + 1).unwrap();
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::new(name, format!("m-{m}")), |b| {
            b.iter(|| melas_distribution_from_traces(m, &traces, exec).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, enumeration, trace_duals, censuses, hecke_formula);
criterion_main!(benches);
