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

#include "conelab/catalog.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/SVD>

#include "conelab/errors.h"
#include "conelab/sampling.h"

namespace conelab {
namespace {

constexpr std::uint64_t kGeneratedStream = 0x6e6f6e65;
constexpr double kMinPairAngle = 20.0 * std::numbers::pi / 180.0;
constexpr double kMaxCondition = 50.0;

bool WellConditioned(const Matrix& g) {
  for (Index i = 0; i < g.cols(); ++i) {
    for (Index j = i + 1; j < g.cols(); ++j) {
      const double c = std::clamp(g.col(i).dot(g.col(j)), -1.0, 1.0);
      if (std::acos(c) < kMinPairAngle) return false;
    }
  }
  const Vector sv = Eigen::JacobiSVD<Matrix>(g).singularValues();
  return sv(sv.size() - 1) > 0.0 &&
         sv(0) / sv(sv.size() - 1) < kMaxCondition;
}

}  // namespace

Cone RandomGeneratedCone(Index dim, std::uint64_t seed) {
  if (dim < 2 || dim > 3) {
    throw InvalidArgument("random generated cone: dim must be 2 or 3");
  }
  for (std::uint64_t attempt = 0;; ++attempt) {
    SampleRng rng(seed, kGeneratedStream, attempt);
    Matrix g(dim, dim);
    for (Index j = 0; j < dim; ++j) g.col(j) = rng.Gaussian(dim).normalized();
    if (WellConditioned(g)) return Cone::FinitelyGenerated(std::move(g));
  }
}

std::vector<CatalogEntry> ProjectionCatalog() {
  // Square pyramid around the last axis: four generators in R^3, so the
  // generated cone is not simplicial.
  Matrix pyramid(3, 4);
  pyramid << 1, 0, -1, 0,  //
      0, 1, 0, -1,         //
      1, 1, 1, 1;
  Matrix wedge(3, 4);
  wedge << 1, 0, 1, -1,  //
      0, 1, 1, 0,        //
      0, 0, 1, 2;
  return {
      {"orthant4", Cone::Orthant(4)},
      {"lorentz4", Cone::Lorentz(4)},
      {"monotone5_nonincreasing", Cone::Monotone(5)},
      {"monotone5_nondecreasing",
       Cone::Monotone(5, Direction::kNondecreasing)},
      {"monotone_nonneg5", Cone::MonotoneNonneg(5)},
      {"generated3_pyramid", Cone::FinitelyGenerated(pyramid)},
      {"halfspaces3_wedge", Cone::HalfspaceIntersection(wedge)},
      {"dual_monotone_nonneg4", Dual(Cone::MonotoneNonneg(4))},
  };
}

std::vector<CatalogEntry> DualityCatalog() {
  std::vector<CatalogEntry> out;
  for (Index n = 2; n <= 6; ++n) {
    out.push_back({"orthant" + std::to_string(n), Cone::Orthant(n)});
  }
  for (Index n = 3; n <= 5; ++n) {
    out.push_back({"lorentz" + std::to_string(n), Cone::Lorentz(n)});
  }
  for (Index n = 3; n <= 8; ++n) {
    out.push_back({"monotone" + std::to_string(n), Cone::Monotone(n)});
  }
  for (Index n = 3; n <= 8; ++n) {
    out.push_back(
        {"monotone_nonneg" + std::to_string(n), Cone::MonotoneNonneg(n)});
  }
  const std::pair<Index, std::uint64_t> generated[] = {
      {2, 1}, {2, 2}, {2, 3}, {3, 4}, {3, 5}};
  for (const auto& [dim, seed] : generated) {
    out.push_back({"generated" + std::to_string(dim) + "_seed" +
                       std::to_string(seed),
                   RandomGeneratedCone(dim, seed)});
  }
  return out;
}

}  // namespace conelab
