use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use equilib::disk::{self, RenderOptions};
use equilib::lattice;
use equilib::{isometry, isotropic, psl2, rep};

fn lattice_benches(c: &mut Criterion) {
    let deep = lattice::enumerate_real(300).pop().expect("roots exist");
    c.bench_function("descent/deep root", |b| b.iter(|| lattice::descent(black_box(&deep)).unwrap()));
    c.bench_function("brute_force_real/box 10", |b| b.iter(|| lattice::brute_force_real(black_box(10))));
    c.bench_function("enumerate_real/height 60", |b| b.iter(|| lattice::enumerate_real(black_box(60))));
}

fn group_benches(c: &mut Criterion) {
    c.bench_function("normal_forms/length 10", |b| b.iter(|| psl2::normal_forms(black_box(10))));
    c.bench_function("verify_structure", |b| b.iter(isometry::verify_structure));
    c.bench_function("enumerate_isotropic/box 30", |b| b.iter(|| isotropic::enumerate_isotropic(black_box(30))));
}

fn rep_benches(c: &mut Criterion) {
    let mut g = c.benchmark_group("identity_checks");
    g.sample_size(10);
    for d in [2usize, 6, 10] {
        g.bench_function(format!("d={d}"), |b| b.iter(|| rep::identity_checks(black_box(d))));
    }
    g.finish();
}

fn disk_benches(c: &mut Criterion) {
    c.bench_function("tessellate/depth 4", |b| b.iter(|| disk::tessellate(black_box(4))));
    let scene = disk::tessellate(4);
    let opts = RenderOptions::default();
    c.bench_function("render_svg/depth 4", |b| b.iter(|| disk::render_svg(black_box(&scene), &opts)));
}

criterion_group!(benches, lattice_benches, group_benches, rep_benches, disk_benches);
criterion_main!(benches);
