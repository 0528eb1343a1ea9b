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

#include "conelab/sampling.h"

#include <algorithm>
#include <cmath>
#include <functional>

#include "conelab/projection.h"

namespace conelab {
namespace {

std::uint64_t SplitMix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t MixKey(std::uint64_t seed, std::uint64_t stream,
                     std::uint64_t index) {
  return SplitMix64(SplitMix64(SplitMix64(seed) ^ stream) ^ index);
}

}  // namespace

SampleRng::SampleRng(std::uint64_t seed, std::uint64_t stream,
                     std::uint64_t index)
    : engine_(MixKey(seed, stream, index)) {}

double SampleRng::Gaussian() { return normal_(engine_); }

Vector SampleRng::Gaussian(Index dim) {
  Vector v(dim);
  for (Index i = 0; i < dim; ++i) v(i) = Gaussian();
  return v;
}

double SampleRng::Uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(engine_);
}

bool SampleRng::Bernoulli(double p) {
  return std::bernoulli_distribution(p)(engine_);
}

double SampleRng::LogUniformRadius() {
  return std::pow(10.0, Uniform(-2.0, 2.0));
}

Vector FalsifierPoint(Index dim, SampleRng& rng) {
  Vector g = rng.Gaussian(dim);
  return rng.LogUniformRadius() * g;
}

Vector SampleFromCone(const Cone& cone, SampleRng& rng, const Tolerance& tol) {
  const Index n = cone.dim();
  return std::visit(
      [&](const auto& c) -> Vector {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, cones::Orthant>) {
          return rng.Gaussian(n).cwiseAbs();
        } else if constexpr (std::is_same_v<T, cones::Lorentz>) {
          Vector v(n);
          v.head(n - 1) = rng.Gaussian(n - 1);
          v(n - 1) = v.head(n - 1).norm() + std::abs(rng.Gaussian());
          return v;
        } else if constexpr (std::is_same_v<T, cones::Monotone> ||
                             std::is_same_v<T, cones::MonotoneNonneg>) {
          Vector v = rng.Gaussian(n);
          if constexpr (std::is_same_v<T, cones::MonotoneNonneg>) {
            v = v.cwiseAbs();
          }
          if (c.direction == Direction::kNonincreasing) {
            std::sort(v.begin(), v.end(), std::greater<>());
          } else {
            std::sort(v.begin(), v.end());
          }
          return v;
        } else if constexpr (std::is_same_v<T, cones::FinitelyGenerated>) {
          const Index m = c.generators.cols();
          Vector w(m);
          for (Index j = 0; j < m; ++j) {
            const double g = std::abs(rng.Gaussian());
            w(j) = rng.Bernoulli(0.5) ? g : 0.0;
          }
          if ((w.array() == 0.0).all()) {
            const auto pick = static_cast<Index>(
                rng.engine()() % static_cast<std::uint64_t>(m));
            w(pick) = std::abs(rng.Gaussian());
          }
          return c.generators * w;
        } else {
          return ProjectPoint(rng.Gaussian(n), cone, tol);
        }
      },
      cone.variant());
}

}  // namespace conelab
