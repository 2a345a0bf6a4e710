use std::hint::black_box;

use bernstein_disk::disk::{quadrant_bernstein_type, PiecewiseDiskOperator};
use bernstein_disk::experiment::{mesh_quadrant_disk, rmse, BuiltinFunction, OperatorSpec};
use bernstein_disk::stancu::StancuOperator;
use bernstein_disk::univariate::basis_row;
use bernstein_disk::{CurvilinearDomain, NodeSchedule, PiecewiseKind, Quadrant};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn g(x: f64, y: f64) -> f64 {
    BuiltinFunction::Example2G.eval(x, y)
}

fn basis(c: &mut Criterion) {
    let mut group = c.benchmark_group("basis_row");
    for n in [10, 80, 400] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| basis_row(n, black_box(0.37)).unwrap())
        });
    }
    group.finish();
}

fn stancu_eval(c: &mut Criterion) {
    let dom = CurvilinearDomain::disk();
    let mut group = c.benchmark_group("stancu_disk_eval");
    for n in [10, 40, 80] {
        let op = StancuOperator::new(g, &dom, n, NodeSchedule::Constant(n)).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &op, |b, op| {
            b.iter(|| op.eval(black_box(0.3), black_box(-0.4)).unwrap())
        });
    }
    group.finish();
}

fn quadrant(c: &mut Criterion) {
    let mut group = c.benchmark_group("quadrant");
    group.bench_function("closed_form_n20_one_shot", |b| {
        b.iter(|| quadrant_bernstein_type(g, Quadrant::B2, 20, black_box(-0.3), black_box(0.5)).unwrap())
    });
    let op = PiecewiseDiskOperator::new(g, PiecewiseKind::BernsteinType, 80);
    group.bench_function("prepared_n80_eval", |b| {
        b.iter(|| op.eval(black_box(-0.3), black_box(0.5)).unwrap())
    });
    group.finish();
}

fn table_cell(c: &mut Criterion) {
    let mut group = c.benchmark_group("table_cell");
    group.sample_size(10);
    for n in [20, 80] {
        let mesh = mesh_quadrant_disk(n, true).unwrap();
        group.bench_with_input(BenchmarkId::new("Cbar", n), &mesh, |b, mesh| {
            b.iter(|| rmse(g, &OperatorSpec::Cbar, mesh).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, basis, stancu_eval, quadrant, table_cell);
criterion_main!(benches);
