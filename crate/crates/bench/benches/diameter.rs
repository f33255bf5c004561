// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use petersen_bench::instances;
use petersen_core::oracle::diameter_over_sources;
use petersen_core::{build_gpg, circulant_diameter, d_c, gpg_diameter};

fn distance(c: &mut Criterion) {
    let mut group = c.benchmark_group("d_c");
    for p in instances() {
        group.bench_with_input(BenchmarkId::from_parameter(p), &p, |b, &p| {
            b.iter(|| d_c(p, black_box(p.n() / 3)))
        });
    }
    group.finish();
}

fn diameters(c: &mut Criterion) {
    let mut group = c.benchmark_group("diameter");
    group.sample_size(20);
    for p in instances() {
        group.bench_with_input(BenchmarkId::new("circulant_formula", p), &p, |b, &p| {
            b.iter(|| circulant_diameter(black_box(p)))
        });
        group.bench_with_input(BenchmarkId::new("gpg_dispatch", p), &p, |b, &p| {
            b.iter(|| gpg_diameter(black_box(p)))
        });
        let g = build_gpg(p);
        let n = p.n() as usize;
        group.bench_with_input(BenchmarkId::new("gpg_bfs", p), &g, |b, g| {
            b.iter(|| diameter_over_sources(black_box(g), [0, n]).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, distance, diameters);
criterion_main!(benches);
