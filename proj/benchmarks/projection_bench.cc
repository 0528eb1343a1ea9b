// Copyright 2026 The conelab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <vector>

#include "conelab/catalog.h"
#include "conelab/cone.h"
#include "conelab/lattice.h"
#include "conelab/ncp.h"
#include "conelab/projection.h"
#include "conelab/properties.h"
#include "conelab/sampling.h"

namespace conelab {
namespace {

std::vector<Vector> Points(Index dim, int count) {
  std::vector<Vector> out;
  for (int i = 0; i < count; ++i) {
    SampleRng rng(42, 0, static_cast<std::uint64_t>(i));
    out.push_back(FalsifierPoint(dim, rng));
  }
  return out;
}

void ProjectOnto(benchmark::State& state, const Cone& cone) {
  const std::vector<Vector> xs = Points(cone.dim(), 256);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(Project(xs[i++ % xs.size()], cone));
  }
  state.SetItemsProcessed(state.iterations());
}

void BM_ProjectOrthant(benchmark::State& s) {
  ProjectOnto(s, Cone::Orthant(s.range(0)));
}
void BM_ProjectLorentz(benchmark::State& s) {
  ProjectOnto(s, Cone::Lorentz(s.range(0)));
}
void BM_ProjectMonotone(benchmark::State& s) {
  ProjectOnto(s, Cone::Monotone(s.range(0)));
}
void BM_ProjectMonotoneDualNnls(benchmark::State& s) {
  ProjectOnto(s, Dual(Cone::Monotone(s.range(0))));
}
void BM_ProjectMonotoneHalfspacesDykstra(benchmark::State& s) {
  ProjectOnto(s, Cone::HalfspaceIntersection(MonotoneDifferenceVectors(
                     s.range(0), Direction::kNonincreasing)));
}
void BM_ProjectRandomHalfspaces3(benchmark::State& s) {
  ProjectOnto(s, Dual(RandomGeneratedCone(3, static_cast<std::uint64_t>(
                                                 s.range(0)))));
}

BENCHMARK(BM_ProjectOrthant)->Arg(4)->Arg(64);
BENCHMARK(BM_ProjectLorentz)->Arg(4)->Arg(64);
BENCHMARK(BM_ProjectMonotone)->Arg(8)->Arg(64);
BENCHMARK(BM_ProjectMonotoneDualNnls)->Arg(8)->Arg(32);
BENCHMARK(BM_ProjectMonotoneHalfspacesDykstra)->Arg(8)->Arg(32);
BENCHMARK(BM_ProjectRandomHalfspaces3)->Arg(4)->Arg(5);

void BM_LatticeMeetLorentz(benchmark::State& state) {
  const Cone k = Cone::Lorentz(8);
  const std::vector<Vector> xs = Points(8, 256);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        LatticeOp(OpKind::kMeetL, xs[i % 256], xs[(i + 1) % 256], k));
    ++i;
  }
}
BENCHMARK(BM_LatticeMeetLorentz);

void BM_CheckIsotone(benchmark::State& state, const Cone& cone) {
  CheckConfig config;
  config.samples = state.range(0);
  config.seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(CheckIsotone(cone, cone, config));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK_CAPTURE(BM_CheckIsotone, orthant6, Cone::Orthant(6))->Arg(1000);
BENCHMARK_CAPTURE(BM_CheckIsotone, lorentz3, Cone::Lorentz(3))->Arg(1000);
BENCHMARK_CAPTURE(BM_CheckIsotone, monotone8, Cone::Monotone(8))->Arg(1000);

void BM_CheckDuality(benchmark::State& state, const Cone& cone) {
  CheckConfig config;
  config.samples = state.range(0);
  config.seed = 1;
  config.workers = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(CheckDuality(cone, config));
  state.SetItemsProcessed(state.iterations() * state.range(0) * 5);
}
BENCHMARK_CAPTURE(BM_CheckDuality, monotone6, Cone::Monotone(6))
    ->Args({1000, 1})
    ->Args({1000, 4})
    ->Unit(benchmark::kMillisecond);

void BM_SolveLcp(benchmark::State& state) {
  const Index n = state.range(0);
  SampleRng rng(7);
  const Matrix b = Matrix::NullaryExpr(n, n, [&] { return rng.Gaussian(); });
  const Matrix m = b * b.transpose() + 0.5 * Matrix::Identity(n, n);
  const NcpProblem p{Cone::Orthant(n), AffineMap{m, rng.Gaussian(n)},
                     EstimateStep(m)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(Solve(p, Vector::Zero(n), 100000));
  }
}
BENCHMARK(BM_SolveLcp)->Arg(4)->Arg(16);

}  // namespace
}  // namespace conelab

BENCHMARK_MAIN();
